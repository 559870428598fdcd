// Decides whether a candidate solves a (dual) N-gon equation, exhaustively
// over a finite carrier or on supplied rational samples. Inputs run in
// lexicographic order, so failure reports are deterministic and minimal in
// that order.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "polyeq/compile.hpp"
#include "polyeq/eval.hpp"
#include "polyeq/labeled.hpp"
#include "polyeq/rational.hpp"

namespace polyeq {

struct Counterexample {
    std::vector<Value> input;
    std::vector<Value> lhs;
    std::vector<Value> rhs;
};

struct Verdict {
    bool holds = true;
    std::optional<Counterexample> counterexample;
    std::uint64_t inputs_checked = 0;
};

// Compilation is pure in (N, dual); search drives the verifier millions of
// times, so compiled pairs are cached process-wide.
inline const std::pair<Program, Program>& compiled_pair(int n, bool dual) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::unique_ptr<std::pair<Program, Program>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, dual}];
    if (!slot)
        slot = std::make_unique<std::pair<Program, Program>>(dual ? compile_dual_gon(n)
                                                                  : compile_gon(n));
    return *slot;
}

// Exhaustive single-map check over all q^inputs tuples.
inline Verdict check_single(int n, bool dual, const FiniteMap& t) {
    auto [k_in, k_out] = map_arity(n, dual);
    if (t.k_in != k_in || t.k_out != k_out)
        throw std::invalid_argument("check_single: map arity does not fit the equation");
    const auto& [lhs, rhs] = compiled_pair(n, dual);

    Verdict v;
    std::vector<Value> input(lhs.input_labels.size(), 0);
    do {
        ++v.inputs_checked;
        std::vector<Value> a = eval_single(lhs, t, input);
        std::vector<Value> b = eval_single(rhs, t, input);
        if (a != b) {
            v.holds = false;
            v.counterexample = Counterexample{input, std::move(a), std::move(b)};
            return v;
        }
    } while (next_tuple(input, t.q));
    return v;
}

// Single-map check restricted to the given sample inputs.
inline Verdict check_single_samples(int n, bool dual, const FiniteMap& t,
                                    const std::vector<std::vector<Value>>& samples) {
    const auto& [lhs, rhs] = compiled_pair(n, dual);
    Verdict v;
    for (const auto& input : samples) {
        ++v.inputs_checked;
        std::vector<Value> a = eval_single(lhs, t, input);
        std::vector<Value> b = eval_single(rhs, t, input);
        if (a != b) {
            v.holds = false;
            v.counterexample = Counterexample{input, std::move(a), std::move(b)};
            return v;
        }
    }
    return v;
}

// Exhaustive multi-sorted check over the product of per-slot carriers.
inline Verdict check_labeled(const LabeledSystem& sys) {
    sys.validate();
    const auto& [lhs, rhs] = compiled_pair(sys.ambient, sys.dual);

    std::vector<int> sizes;
    for (const Label& j : lhs.input_labels) sizes.push_back(sys.carrier_of(j));

    Verdict v;
    std::vector<Value> input(sizes.size(), 0);
    bool more = true;
    while (more) {
        ++v.inputs_checked;
        std::vector<Value> a = eval_labeled(lhs, sys, input);
        std::vector<Value> b = eval_labeled(rhs, sys, input);
        if (a != b) {
            v.holds = false;
            v.counterexample = Counterexample{input, std::move(a), std::move(b)};
            return v;
        }
        more = false;
        for (std::size_t i = input.size(); i-- > 0;) {
            if (++input[i] < sizes[i]) {
                more = true;
                break;
            }
            input[i] = 0;
        }
    }
    return v;
}

inline Verdict check_labeled(int n, bool dual, const LabeledSystem& sys) {
    if (sys.ambient != n || sys.dual != dual)
        throw std::invalid_argument("check_labeled: system shape mismatch");
    return check_labeled(sys);
}

struct PointCounterexample {
    RatTuple input;
    RatTuple lhs;
    RatTuple rhs;
};

struct PointVerdict {
    bool holds = true;
    std::optional<PointCounterexample> counterexample;
    std::uint64_t inputs_checked = 0;
};

// Exact equality of both sides on every sample.
inline PointVerdict check_point(int n, bool dual, const PointMap& t,
                                const std::vector<RatTuple>& samples) {
    const auto& [lhs, rhs] = compiled_pair(n, dual);
    PointVerdict v;
    for (const RatTuple& input : samples) {
        ++v.inputs_checked;
        RatTuple a = eval_point(lhs, t, input);
        RatTuple b = eval_point(rhs, t, input);
        if (a != b) {
            v.holds = false;
            v.counterexample = PointCounterexample{input, std::move(a), std::move(b)};
            return v;
        }
    }
    return v;
}

// Kashaev's Pachner-move form of the dual hexagon equation:
// (QP)_1 Q_2 P_1 Q_2 = P_3 (QP)_4 Q_2 P_3 Q_1 with Q := T P.
inline bool check_kashaev_form(const FiniteMap& t) {
    if (t.k_in != 2 || t.k_out != 3)
        throw std::invalid_argument("check_kashaev_form: map must have arities (2,3)");

    FiniteMap q_map(t.q, 2, 3);  // Q(a,b) = T(b,a)
    std::vector<Value> in(2);
    do {
        std::vector<Value> flipped{in[1], in[0]};
        t.apply(flipped, q_map.row(q_map.encode(in)));
    } while (next_tuple(in, t.q));

    // step lists in execution order; 'T' applies t (= QP), 'Q' applies q_map
    struct Tok {
        char op;
        int pos;
    };
    const std::vector<Tok> lhs{{'Q', 2}, {'P', 1}, {'Q', 2}, {'T', 1}};
    const std::vector<Tok> rhs{{'Q', 1}, {'P', 3}, {'Q', 2}, {'T', 4}, {'P', 3}};

    auto run = [&](const std::vector<Tok>& toks, const std::vector<Value>& input) {
        detail::SlotState s;
        s.assign(input);
        for (const Tok& tk : toks) {
            std::size_t p0 = static_cast<std::size_t>(tk.pos - 1);
            if (tk.op == 'P')
                std::swap(s.v[p0], s.v[p0 + 1]);
            else
                detail::apply_at(tk.op == 'T' ? t : q_map, p0, s);
        }
        return s.to_vector();
    };

    std::vector<Value> input(3, 0);
    do {
        if (run(lhs, input) != run(rhs, input)) return false;
    } while (next_tuple(input, t.q));
    return true;
}

}  // namespace polyeq
