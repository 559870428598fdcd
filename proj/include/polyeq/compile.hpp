// Compiles the (dual) N-gon equation into a pair of straight-line
// programs. Map application order and boundary sequences come from the
// half-packet combinatorics; the only freedom is where transpositions are
// inserted, which is resolved deterministically: greedy bubbling first,
// then a breadth-first search over legal swap sequences.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyeq/labels.hpp"
#include "polyeq/program.hpp"

namespace polyeq {

struct CompileOptions {
    std::size_t bfs_node_budget = 1'000'000;
};

class RoutingError : public std::runtime_error {
public:
    RoutingError(const std::string& what, LabelSeq stuck)
        : std::runtime_error(what + " [stuck state " + seq_str(stuck) + "]"),
          stuck_state(std::move(stuck)) {}
    LabelSeq stuck_state;
};

namespace detail {

// Compact state form for routing: labels as indices into a dictionary.
using IdState = std::vector<std::uint16_t>;

struct Router {
    const std::vector<Label>* dict;  // id -> label
    std::vector<std::vector<bool>> commute;  // symmetric swap-legality table
    std::size_t budget;

    bool legal(std::uint16_t a, std::uint16_t b) const { return commute[a][b]; }

    // Greedy: bubble each wanted label leftwards until the group sits at the
    // position of its first member. Fails (returns false) on the first
    // illegal swap it would need.
    bool greedy_gather(IdState state, const std::vector<std::uint16_t>& want,
                       std::vector<int>& swaps_out) const {
        swaps_out.clear();
        std::vector<std::size_t> pos = find_positions(state, want);
        for (std::size_t i = 1; i < pos.size(); ++i) {
            std::size_t target = pos[0] + i;
            for (std::size_t cur = pos[i]; cur > target; --cur) {
                if (!legal(state[cur - 1], state[cur])) return false;
                std::swap(state[cur - 1], state[cur]);
                swaps_out.push_back(static_cast<int>(cur));  // 1-based position cur
            }
            pos[i] = target;
        }
        return true;
    }

    // Greedy toward an exact full arrangement (used for the final routing
    // to the output boundary): selection-sort with legality checks.
    bool greedy_arrange(IdState state, const IdState& target, std::vector<int>& swaps_out) const {
        swaps_out.clear();
        for (std::size_t i = 0; i < target.size(); ++i) {
            std::size_t j = i;
            while (j < state.size() && state[j] != target[i]) ++j;
            if (j == state.size()) return false;
            for (; j > i; --j) {
                if (!legal(state[j - 1], state[j])) return false;
                std::swap(state[j - 1], state[j]);
                swaps_out.push_back(static_cast<int>(j));
            }
        }
        return true;
    }

    // Minimum-length legal swap sequence from `state` to the first state
    // satisfying `done`. Deterministic: expansion by swap position
    // ascending, FIFO queue.
    template <class DonePred>
    std::vector<int> bfs(const IdState& state, DonePred done) const {
        struct Node {
            IdState s;
            int parent;
            int swap_pos;
        };
        std::vector<Node> nodes;
        std::map<IdState, bool> seen;
        nodes.push_back({state, -1, 0});
        seen[state] = true;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            if (done(nodes[static_cast<std::size_t>(cur)].s)) {
                std::vector<int> swaps;
                for (int n = cur; nodes[static_cast<std::size_t>(n)].parent >= 0;
                     n = nodes[static_cast<std::size_t>(n)].parent)
                    swaps.push_back(nodes[static_cast<std::size_t>(n)].swap_pos);
                std::reverse(swaps.begin(), swaps.end());
                return swaps;
            }
            const IdState s = nodes[static_cast<std::size_t>(cur)].s;
            for (std::size_t p = 0; p + 1 < s.size(); ++p) {
                if (!legal(s[p], s[p + 1])) continue;
                IdState t = s;
                std::swap(t[p], t[p + 1]);
                if (seen.emplace(t, true).second) {
                    if (nodes.size() >= budget)
                        throw std::runtime_error("compile: BFS node budget exceeded");
                    nodes.push_back({std::move(t), cur, static_cast<int>(p + 1)});
                    queue.push_back(static_cast<int>(nodes.size()) - 1);
                }
            }
        }
        throw std::runtime_error("compile: target arrangement unreachable by legal swaps");
    }

    static std::vector<std::size_t> find_positions(const IdState& state,
                                                   const std::vector<std::uint16_t>& want) {
        std::vector<std::size_t> pos;
        pos.reserve(want.size());
        for (std::size_t w = 0, i = 0; w < want.size(); ++w) {
            while (i < state.size() && state[i] != want[w]) ++i;
            if (i == state.size())
                throw std::logic_error("compile: required label missing or out of order");
            pos.push_back(i++);
        }
        return pos;
    }
};

inline bool contiguous_at(const IdState& state, const std::vector<std::uint16_t>& want,
                          std::size_t* start = nullptr) {
    for (std::size_t i = 0; i + want.size() <= state.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < want.size(); ++j)
            if (state[i + j] != want[j]) {
                ok = false;
                break;
            }
        if (ok) {
            if (start) *start = i;
            return true;
        }
    }
    return false;
}

}  // namespace detail

namespace detail {

inline Program compile_side(int n, bool dual, bool lhs, const CompileOptions& opts) {
    // Maps used by this side and their execution order. The non-dual lhs
    // runs the odd half-packet of [N] lexicographically and the rhs the
    // even one reverse-lexicographically; dual sides exchange the halves
    // and the orders.
    LabelSeq packets = packet(Label::full(n));  // lex order of all (N-1)-subsets
    LabelSeq odd, even;
    for (std::size_t i = 0; i < packets.size(); ++i)
        (i % 2 == 0 ? odd : even).push_back(packets[i]);

    LabelSeq maps;
    if (!dual)
        maps = lhs ? odd : LabelSeq(even.rbegin(), even.rend());
    else
        maps = lhs ? LabelSeq(odd.rbegin(), odd.rend()) : even;

    LabelSeq inputs = dual ? red_alpha(n) : blue_alpha(n);
    LabelSeq outputs = dual ? red_omega(n) : blue_omega(n);

    // Intern every (N-2)-subset; precompute the commutation table once.
    LabelSeq dict = all_subsets(n, n - 2);
    auto id_of = [&](const Label& l) -> std::uint16_t {
        auto it = std::lower_bound(dict.begin(), dict.end(), l);
        return static_cast<std::uint16_t>(it - dict.begin());
    };
    Router router;
    router.dict = &dict;
    router.budget = opts.bfs_node_budget;
    router.commute.assign(dict.size(), std::vector<bool>(dict.size(), false));
    for (std::size_t a = 0; a < dict.size(); ++a)
        for (std::size_t b = a + 1; b < dict.size(); ++b)
            router.commute[a][b] = router.commute[b][a] = commutes(dict[a], dict[b]);

    IdState state;
    for (const Label& l : inputs) state.push_back(id_of(l));

    Program prog;
    prog.ambient = n;
    prog.dual = dual;
    prog.side = lhs ? "lhs" : "rhs";
    prog.input_labels = inputs;
    prog.output_labels = outputs;

    auto emit_swaps = [&](const std::vector<int>& swaps) {
        for (int p : swaps) {
            std::swap(state[static_cast<std::size_t>(p - 1)], state[static_cast<std::size_t>(p)]);
            prog.steps.push_back(Step::make_swap(p));
        }
    };
    auto current_labels = [&]() {
        LabelSeq ls;
        for (std::uint16_t id : state) ls.push_back(dict[id]);
        return ls;
    };

    for (const Label& k : maps) {
        auto [po, pe] = half_packets(k);
        const LabelSeq& in_half = dual ? pe : po;
        const LabelSeq& out_half = dual ? po : pe;
        std::vector<std::uint16_t> want;
        for (const Label& l : in_half) want.push_back(id_of(l));

        std::size_t start = 0;
        if (!contiguous_at(state, want, &start)) {
            std::vector<int> swaps;
            if (!router.greedy_gather(state, want, swaps))
                swaps = router.bfs(state, [&](const IdState& s) {
                    return contiguous_at(s, want);
                });
            emit_swaps(swaps);
            if (!contiguous_at(state, want, &start))
                throw RoutingError("compile: gather failed", current_labels());
        }

        prog.steps.push_back(Step::make_apply(static_cast<int>(start) + 1, k));
        IdState next(state.begin(), state.begin() + static_cast<long>(start));
        for (auto it = out_half.rbegin(); it != out_half.rend(); ++it) next.push_back(id_of(*it));
        next.insert(next.end(), state.begin() + static_cast<long>(start + want.size()),
                    state.end());
        state = std::move(next);
    }

    IdState target;
    for (const Label& l : outputs) target.push_back(id_of(l));
    if (state != target) {
        std::vector<int> swaps;
        if (!router.greedy_arrange(state, target, swaps))
            swaps = router.bfs(state, [&](const IdState& s) { return s == target; });
        emit_swaps(swaps);
    }
    if (state != target)
        throw RoutingError("compile: final boundary arrangement failed", current_labels());

    return prog;
}

}  // namespace detail

// Both sides of the N-gon equation, N >= 3.
inline std::pair<Program, Program> compile_gon(int n, const CompileOptions& opts = {}) {
    if (n < 3) throw std::invalid_argument("compile_gon: N must be at least 3");
    return {detail::compile_side(n, false, true, opts), detail::compile_side(n, false, false, opts)};
}

// Both sides of the dual N-gon equation, N >= 3.
inline std::pair<Program, Program> compile_dual_gon(int n, const CompileOptions& opts = {}) {
    if (n < 3) throw std::invalid_argument("compile_dual_gon: N must be at least 3");
    return {detail::compile_side(n, true, true, opts), detail::compile_side(n, true, false, opts)};
}

}  // namespace polyeq
