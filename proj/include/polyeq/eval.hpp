// Program execution over finite carriers: the single-map evaluator and
// the position-apply helper it is built from.
#pragma once

#include <cstring>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyeq/finite_map.hpp"
#include "polyeq/program.hpp"

namespace polyeq {

namespace detail {

// States stay tiny (<= 15 slots through N = 10), so a fixed buffer with an
// explicit length avoids allocation in the hot path.
struct SlotState {
    static constexpr std::size_t cap = 32;
    Value v[cap];
    std::size_t len = 0;

    void assign(std::span<const Value> in) {
        if (in.size() > cap) throw std::length_error("SlotState: too many slots");
        std::memcpy(v, in.data(), in.size());
        len = in.size();
    }
    std::vector<Value> to_vector() const { return std::vector<Value>(v, v + len); }
};

inline void apply_at(const FiniteMap& t, std::size_t pos0, SlotState& s) {
    const std::size_t ki = static_cast<std::size_t>(t.k_in);
    const std::size_t ko = static_cast<std::size_t>(t.k_out);
    if (pos0 + ki > s.len) throw std::out_of_range("apply: window exceeds state");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < ki; ++i) idx = idx * static_cast<std::size_t>(t.q) + s.v[pos0 + i];
    const Value* r = t.row(idx);
    if (ko != ki) {
        if (s.len - ki + ko > SlotState::cap) throw std::length_error("apply: state overflow");
        std::memmove(s.v + pos0 + ko, s.v + pos0 + ki, s.len - pos0 - ki);
        s.len += ko - ki;
    }
    std::memcpy(s.v + pos0, r, ko);
}

}  // namespace detail

// Applies T at 1-based position pos of a state tuple (helper; the Apply
// step semantics of eval_single).
inline std::vector<Value> compose_tuple(const FiniteMap& t, int pos, std::span<const Value> state) {
    if (pos < 1) throw std::out_of_range("compose_tuple: position must be positive");
    detail::SlotState s;
    s.assign(state);
    detail::apply_at(t, static_cast<std::size_t>(pos - 1), s);
    return s.to_vector();
}

// Runs every step of the program with the same map T. Swap(pos) exchanges
// slots pos and pos+1; Apply(pos) rewrites the window through T.
inline std::vector<Value> eval_single(const Program& p, const FiniteMap& t,
                                      std::span<const Value> input) {
    auto [k_in, k_out] = map_arity(p.ambient, p.dual);
    if (t.k_in != k_in || t.k_out != k_out)
        throw std::invalid_argument("eval_single: map arity does not fit the equation");
    if (input.size() != p.input_labels.size())
        throw std::invalid_argument("eval_single: input length mismatch");
    for (Value v : input)
        if (v >= t.q) throw std::out_of_range("eval_single: value exceeds carrier");

    detail::SlotState s;
    s.assign(input);
    for (const Step& st : p.steps) {
        const std::size_t pos0 = static_cast<std::size_t>(st.pos - 1);
        if (st.kind == Step::Kind::swap) {
            if (pos0 + 1 >= s.len) throw std::out_of_range("eval_single: swap out of range");
            std::swap(s.v[pos0], s.v[pos0 + 1]);
        } else {
            detail::apply_at(t, pos0, s);
        }
    }
    if (s.len != p.output_labels.size())
        throw std::logic_error("eval_single: program left wrong number of slots");
    return s.to_vector();
}

}  // namespace polyeq
