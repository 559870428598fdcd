// Straight-line programs: the executable form of one side of a (dual)
// N-gon equation. Steps are stored in execution order; rendering reverses
// them to match right-to-left composition notation.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyeq/labels.hpp"

namespace polyeq {

// Input/output arity of the single map realizing one (dual) N-gon equation.
inline std::pair<int, int> map_arity(int n, bool dual) {
    if (n < 3) throw std::invalid_argument("map_arity: N must be at least 3");
    int k_in = (n - 1 + 1) / 2;  // ceil((N-1)/2)
    int k_out = (n - 1) / 2;
    if (dual) std::swap(k_in, k_out);
    return {k_in, k_out};
}

struct Step {
    enum class Kind { swap, apply };

    Kind kind = Kind::swap;
    int pos = 1;                     // 1-based slot index
    std::optional<Label> map_index;  // apply only; empty once specialized

    static Step make_swap(int pos) { return Step{Kind::swap, pos, std::nullopt}; }
    static Step make_apply(int pos, std::optional<Label> k = std::nullopt) {
        return Step{Kind::apply, pos, std::move(k)};
    }

    friend bool operator==(const Step& a, const Step& b) {
        return a.kind == b.kind && a.pos == b.pos && a.map_index == b.map_index;
    }
};

struct Program {
    int ambient = 3;
    bool dual = false;
    std::string side = "lhs";  // "lhs" or "rhs"
    std::vector<Step> steps;   // execution order: front() runs first
    LabelSeq input_labels;
    LabelSeq output_labels;

    int apply_count() const {
        int c = 0;
        for (const Step& s : steps) c += s.kind == Step::Kind::apply;
        return c;
    }
};

// Replays the steps on the input label sequence, checking each swap is
// legal and each apply window carries exactly the required half-packet.
// Returns the final label sequence.
inline LabelSeq simulate_labels(const Program& p) {
    LabelSeq state = p.input_labels;
    auto [k_in, k_out] = map_arity(p.ambient, p.dual);
    for (const Step& s : p.steps) {
        std::size_t pos = static_cast<std::size_t>(s.pos);
        if (s.kind == Step::Kind::swap) {
            if (pos < 1 || pos + 1 > state.size())
                throw std::logic_error("simulate_labels: swap position out of range");
            if (!commutes(state[pos - 1], state[pos]))
                throw std::logic_error("simulate_labels: illegal swap of non-commuting labels");
            std::swap(state[pos - 1], state[pos]);
        } else {
            if (!s.map_index)
                throw std::logic_error("simulate_labels: specialized program has no map labels");
            const Label& k = *s.map_index;
            auto [odd, even] = half_packets(k);
            const LabelSeq& in_half = p.dual ? even : odd;
            const LabelSeq& out_half = p.dual ? odd : even;
            if (static_cast<int>(in_half.size()) != k_in ||
                static_cast<int>(out_half.size()) != k_out)
                throw std::logic_error("simulate_labels: half-packet sizes disagree with arity");
            if (pos < 1 || pos - 1 + in_half.size() > state.size())
                throw std::logic_error("simulate_labels: apply window out of range");
            for (std::size_t i = 0; i < in_half.size(); ++i)
                if (state[pos - 1 + i] != in_half[i])
                    throw std::logic_error("simulate_labels: apply window does not match half-packet");
            LabelSeq next(state.begin(), state.begin() + static_cast<long>(pos - 1));
            next.insert(next.end(), out_half.rbegin(), out_half.rend());
            next.insert(next.end(), state.begin() + static_cast<long>(pos - 1 + in_half.size()),
                        state.end());
            state = std::move(next);
        }
    }
    return state;
}

// Drops the combinatorial map indices, keeping only positions.
inline Program specialize_single(const Program& p) {
    Program q = p;
    for (Step& s : q.steps) s.map_index.reset();
    return q;
}

// Paper-style right-to-left composition notation, e.g. "T_{1,1} T_{3,2} T_{5,1}"
// with a combining hat over complement indices, or "T_2 P_1 T_2" once
// specialized.
inline std::string render_text(const Program& p) {
    const std::string map_sym = p.dual ? "T\xCC\x83" : "T";  // combining tilde for duals
    std::string out;
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
        if (!out.empty()) out += ' ';
        if (it->kind == Step::Kind::swap) {
            out += "P_" + std::to_string(it->pos);
        } else if (!it->map_index) {
            out += map_sym + "_" + std::to_string(it->pos);
        } else {
            const Label& k = *it->map_index;
            std::string idx;
            if (p.ambient >= 5) {
                // complement index notation with a combining circumflex
                idx = k.complement().str() + "\xCC\x82";
            } else {
                idx = k.str();
            }
            out += map_sym + "_{" + idx + "," + std::to_string(it->pos) + "}";
        }
    }
    return out;
}

}  // namespace polyeq
