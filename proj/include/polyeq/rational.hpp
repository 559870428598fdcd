// Exact rational carriers for the dilogarithm-family solutions. Backed by
// boost::multiprecision::cpp_rational, which keeps values reduced with a
// positive denominator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyeq/program.hpp"

namespace polyeq {

using Rational = boost::multiprecision::cpp_rational;
using RatTuple = std::vector<Rational>;

inline std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(s));
        return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                        boost::multiprecision::cpp_int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: cannot parse '" + s + "'");
    }
}

// An exactly evaluable map on tuples of rationals, with a domain predicate
// each coordinate must satisfy on the way in and on the way out.
struct PointMap {
    int k_in = 0;
    int k_out = 0;
    std::function<RatTuple(const RatTuple&)> rule;
    std::function<bool(const Rational&)> in_domain = [](const Rational&) { return true; };

    RatTuple operator()(const RatTuple& in) const {
        if (static_cast<int>(in.size()) != k_in)
            throw std::invalid_argument("PointMap: arity mismatch");
        for (const Rational& v : in)
            if (!in_domain(v)) throw std::domain_error("PointMap: input outside domain");
        RatTuple out = rule(in);
        if (static_cast<int>(out.size()) != k_out)
            throw std::logic_error("PointMap: rule produced wrong arity");
        for (const Rational& v : out)
            if (!in_domain(v)) throw std::domain_error("PointMap: output escaped domain");
        return out;
    }
};

class PointDomainError : public std::domain_error {
public:
    PointDomainError(const std::string& what, RatTuple state)
        : std::domain_error(what), offending_state(std::move(state)) {}
    RatTuple offending_state;
};

// Exact-rational execution of a program; no rounding anywhere. Domain
// violations are reported with the offending intermediate tuple.
inline RatTuple eval_point(const Program& p, const PointMap& t, const RatTuple& input) {
    auto [k_in, k_out] = map_arity(p.ambient, p.dual);
    if (t.k_in != k_in || t.k_out != k_out)
        throw std::invalid_argument("eval_point: map arity does not fit the equation");
    if (input.size() != p.input_labels.size())
        throw std::invalid_argument("eval_point: input length mismatch");

    RatTuple state = input;
    for (const Step& s : p.steps) {
        std::size_t pos0 = static_cast<std::size_t>(s.pos - 1);
        if (s.kind == Step::Kind::swap) {
            if (pos0 + 1 >= state.size()) throw std::out_of_range("eval_point: swap out of range");
            std::swap(state[pos0], state[pos0 + 1]);
        } else {
            std::size_t ki = static_cast<std::size_t>(t.k_in);
            if (pos0 + ki > state.size())
                throw std::out_of_range("eval_point: apply window exceeds state");
            RatTuple window(state.begin() + static_cast<long>(pos0),
                            state.begin() + static_cast<long>(pos0 + ki));
            RatTuple out;
            try {
                out = t(window);
            } catch (const std::domain_error& e) {
                throw PointDomainError(std::string(e.what()) + " at intermediate state", state);
            }
            state.erase(state.begin() + static_cast<long>(pos0),
                        state.begin() + static_cast<long>(pos0 + ki));
            state.insert(state.begin() + static_cast<long>(pos0), out.begin(), out.end());
        }
    }
    return state;
}

}  // namespace polyeq
