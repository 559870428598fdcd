// Hand-transcribed single-map pipelines for the (dual) 4..8-gon equations,
// exactly as printed. These are frozen golden oracles for the compiler and
// are never regenerated from it. Steps are listed in execution order,
// i.e. the printed right-to-left compositions reversed.
#pragma once

#include <stdexcept>
#include <vector>

#include "polyeq/program.hpp"

namespace polyeq {

namespace detail {

struct RefTok {
    char op;  // 'A' apply, 'P' swap
    int pos;
};

inline std::vector<RefTok> reference_skeleton(int n, bool dual, bool lhs) {
    using V = std::vector<RefTok>;
    if (!dual) {
        switch (n) {
            case 4:  // T T_1 = T T_2
                return lhs ? V{{'A', 1}, {'A', 1}} : V{{'A', 2}, {'A', 1}};
            case 5:  // T_1 T_2 T_1 = T_2 P_1 T_2
                return lhs ? V{{'A', 1}, {'A', 2}, {'A', 1}}
                           : V{{'A', 2}, {'P', 1}, {'A', 2}};
            case 6:  // T_1 P_3 T_2 T_1 P_3 = T_2 P_1 T_2 T_4
                return lhs ? V{{'P', 3}, {'A', 1}, {'A', 2}, {'P', 3}, {'A', 1}}
                           : V{{'A', 4}, {'A', 2}, {'P', 1}, {'A', 2}};
            case 7:  // T_1 T_3 P_5 P_2 T_3 T_1 P_3 = P_3 T_4 P_3 P_2 P_1 T_3 P_2 P_3 T_4
                return lhs ? V{{'P', 3}, {'A', 1}, {'A', 3}, {'P', 2}, {'P', 5}, {'A', 3}, {'A', 1}}
                           : V{{'A', 4}, {'P', 3}, {'P', 2}, {'A', 3}, {'P', 1}, {'P', 2},
                               {'P', 3}, {'A', 4}, {'P', 3}};
            case 8:
                // T_1 P_4 P_5 P_6 T_3 P_6 P_5 P_2 T_3 P_6 T_1 P_4 P_5 P_6 P_3
                //   = P_3 T_4 P_3 P_2 P_1 T_3 P_6 P_2 P_3 T_4 T_7
                return lhs ? V{{'P', 3}, {'P', 6}, {'P', 5}, {'P', 4}, {'A', 1}, {'P', 6},
                               {'A', 3}, {'P', 2}, {'P', 5}, {'P', 6}, {'A', 3}, {'P', 6},
                               {'P', 5}, {'P', 4}, {'A', 1}}
                           : V{{'A', 7}, {'A', 4}, {'P', 3}, {'P', 2}, {'P', 6}, {'A', 3},
                               {'P', 1}, {'P', 2}, {'P', 3}, {'A', 4}, {'P', 3}};
            default:
                throw std::invalid_argument("reference_program: only N = 4..8 are transcribed");
        }
    }
    switch (n) {
        case 4:  // ~T_2 ~T = ~T_1 ~T
            return lhs ? V{{'A', 1}, {'A', 2}} : V{{'A', 1}, {'A', 1}};
        case 5:  // ~T_2 ~T_1 ~T_2 = ~T_1 P_2 ~T_1
            return lhs ? V{{'A', 2}, {'A', 1}, {'A', 2}} : V{{'A', 1}, {'P', 2}, {'A', 1}};
        case 6:  // ~T_1 ~T_2 P_3 ~T_1 = P_3 ~T_4 ~T_2 P_1 ~T_2
            return lhs ? V{{'A', 1}, {'P', 3}, {'A', 2}, {'A', 1}}
                       : V{{'A', 2}, {'P', 1}, {'A', 2}, {'A', 4}, {'P', 3}};
        case 7:
            // P_3 ~T_4 ~T_2 P_4 P_1 ~T_2 ~T_4 = ~T_1 P_3 P_4 ~T_2 P_5 P_4 P_3 ~T_1 P_3
            return lhs ? V{{'A', 4}, {'A', 2}, {'P', 1}, {'P', 4}, {'A', 2}, {'A', 4}, {'P', 3}}
                       : V{{'P', 3}, {'A', 1}, {'P', 3}, {'P', 4}, {'P', 5}, {'A', 2},
                           {'P', 4}, {'P', 3}, {'A', 1}};
        case 8:
            // P_4 P_7 P_5 P_6 ~T_7 P_3 ~T_4 P_6 P_3 P_2 ~T_3 P_1 P_2 P_3 ~T_4
            //   = ~T_1 ~T_3 P_5 P_6 P_2 ~T_3 P_6 P_5 P_4 ~T_1 P_3
            return lhs ? V{{'A', 4}, {'P', 3}, {'P', 2}, {'P', 1}, {'A', 3}, {'P', 2},
                           {'P', 3}, {'P', 6}, {'A', 4}, {'P', 3}, {'A', 7}, {'P', 6},
                           {'P', 5}, {'P', 7}, {'P', 4}}
                       : V{{'P', 3}, {'A', 1}, {'P', 4}, {'P', 5}, {'P', 6}, {'A', 3},
                           {'P', 2}, {'P', 6}, {'P', 5}, {'A', 3}, {'A', 1}};
        default:
            throw std::invalid_argument("reference_program: only N = 4..8 are transcribed");
    }
}

}  // namespace detail

// The printed reference side a compiled side realizes. Compiled programs
// put the odd half-packet of [N] on the lhs for both families. The printed
// dual hexagon binds its combinatorial indices the other way around (its
// printed left side is executable from the dual input boundary only as the
// even-half side), so the pairing flips for that one case.
inline bool reference_side_for_compiled(int n, bool dual, bool lhs) {
    return (n == 6 && dual) ? !lhs : lhs;
}

// The printed single-map pipeline for one side of the (dual) N-gon
// equation, 4 <= N <= 8.
inline Program reference_program(int n, bool dual, bool lhs) {
    Program p;
    p.ambient = n;
    p.dual = dual;
    p.side = lhs ? "lhs" : "rhs";
    p.input_labels = dual ? red_alpha(n) : blue_alpha(n);
    p.output_labels = dual ? red_omega(n) : blue_omega(n);
    for (const detail::RefTok& t : detail::reference_skeleton(n, dual, lhs))
        p.steps.push_back(t.op == 'A' ? Step::make_apply(t.pos) : Step::make_swap(t.pos));
    return p;
}

}  // namespace polyeq
