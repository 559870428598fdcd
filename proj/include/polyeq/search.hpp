// Exhaustive enumeration of all solutions of a chosen (dual) N-gon
// equation over a small carrier. Table rows are assigned in row-index
// order; every condition instance is parked on the first unassigned row
// its lazy evaluation touches and is re-checked exactly when that row is
// assigned, so each assignment triggers only its dependent instances.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "polyeq/conditions.hpp"
#include "polyeq/verify.hpp"

namespace polyeq {

struct SearchFilter {
    enum class Kind { degenerate_arg, surjective, involutive_after_p };
    Kind kind = Kind::degenerate_arg;
    int arg = 1;  // 1-based argument index, degenerate_arg only

    static SearchFilter degenerate(int arg) {
        return {Kind::degenerate_arg, arg};
    }
    static SearchFilter surjective() { return {Kind::surjective, 0}; }
    static SearchFilter involutive_after_p() { return {Kind::involutive_after_p, 0}; }
};

struct SearchSpec {
    int n = 4;
    bool dual = false;
    int q = 2;
    std::optional<std::uint64_t> limit;
    bool collect = true;
    std::vector<SearchFilter> filters;
    std::uint64_t node_budget = 1'000'000'000;
    int jobs = 1;
};

struct SolutionSet {
    SearchSpec spec;
    std::vector<FiniteMap> solutions;  // collect mode; sorted by table bytes
    std::uint64_t count = 0;
    std::uint64_t nodes_visited = 0;
    double elapsed_seconds = 0.0;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(double estimate, std::uint64_t budget)
        : std::runtime_error("search: estimated space " + std::to_string(estimate) +
                             " exceeds node budget " + std::to_string(budget)) {}
};

namespace detail {

struct PartialTable {
    int q = 1, k_in = 0, k_out = 0;
    std::vector<Value> table;
    std::vector<std::uint8_t> assigned;  // per row

    std::size_t rows() const { return assigned.size(); }
};

// Lazy two-sided pipeline evaluation over a partial table.
// Returns 0 = sides equal, 1 = sides differ, 2 = blocked (row reported).
inline int eval_pipeline_partial(const Program& lhs, const Program& rhs, const PartialTable& t,
                                 const std::vector<Value>& input, std::size_t& blocked_row) {
    std::vector<Value> out[2];
    for (int side = 0; side < 2; ++side) {
        const Program& p = side ? rhs : lhs;
        std::vector<Value> state = input;
        for (const Step& s : p.steps) {
            std::size_t pos0 = static_cast<std::size_t>(s.pos - 1);
            if (s.kind == Step::Kind::swap) {
                std::swap(state[pos0], state[pos0 + 1]);
            } else {
                std::size_t idx = 0;
                for (int i = 0; i < t.k_in; ++i)
                    idx = idx * static_cast<std::size_t>(t.q) + state[pos0 + static_cast<std::size_t>(i)];
                if (!t.assigned[idx]) {
                    blocked_row = idx;
                    return 2;
                }
                const Value* row = t.table.data() + idx * static_cast<std::size_t>(t.k_out);
                state.erase(state.begin() + static_cast<long>(pos0),
                            state.begin() + static_cast<long>(pos0 + t.k_in));
                state.insert(state.begin() + static_cast<long>(pos0), row, row + t.k_out);
            }
        }
        out[side] = std::move(state);
    }
    return out[0] == out[1] ? 0 : 1;
}

class Searcher {
public:
    Searcher(const SearchSpec& spec, const Program& lhs, const Program& rhs)
        : spec_(spec), lhs_(lhs), rhs_(rhs) {
        auto [k_in, k_out] = map_arity(spec.n, spec.dual);
        t_.q = spec.q;
        t_.k_in = k_in;
        t_.k_out = k_out;
        std::size_t rows = ipow(static_cast<std::size_t>(spec.q), k_in);
        t_.table.assign(rows * static_cast<std::size_t>(k_out), 0);
        t_.assigned.assign(rows, 0);
        row_values_ = ipow(static_cast<std::size_t>(spec.q), k_out);

        // rows forced equal to a base row by degenerate-argument filters
        base_row_.resize(rows);
        FiniteMap shape(spec.q, k_in, k_out);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Value> in = shape.decode(r);
            for (const SearchFilter& f : spec.filters)
                if (f.kind == SearchFilter::Kind::degenerate_arg)
                    in[static_cast<std::size_t>(f.arg - 1)] = 0;
            base_row_[r] = shape.encode(in);
        }

        build_instances();
        sat_at_.assign(rows, {});
    }

    std::size_t free_rows() const {
        std::size_t c = 0;
        for (std::size_t r = 0; r < base_row_.size(); ++r) c += base_row_[r] == r;
        return c;
    }

    // Runs the search with the first free row restricted to values in
    // [first_lo, first_hi); the full range enumerates everything.
    void run(std::size_t first_lo, std::size_t first_hi,
             const std::function<void(const FiniteMap&)>& emit) {
        emit_ = &emit;
        first_lo_ = first_lo;
        first_hi_ = first_hi;
        descend(0);
        emit_ = nullptr;
    }

    std::size_t row_value_count() const { return row_values_; }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t solutions_found() const { return found_; }
    void set_stop_after(std::uint64_t limit) { stop_after_ = limit; }

private:
    enum { kSat = 0, kViolated = 1, kBlocked = 2 };

    struct Instance {
        cond::ConditionFn fn = nullptr;       // null for pipeline instances
        std::vector<Value> vars;              // condition vars / pipeline input
        std::size_t parked_on = 0;
        bool parked = false;
    };

    void build_instances() {
        if (spec_.n <= 8) {
            const cond::ConditionSystem& sys = condition_system(spec_.n, spec_.dual);
            std::vector<Value> vars(static_cast<std::size_t>(sys.var_count), 0);
            do {
                for (cond::ConditionFn fn : sys.conditions)
                    instances_.push_back(Instance{fn, vars, 0, false});
            } while (next_tuple(vars, spec_.q));
        } else {
            std::vector<Value> in(lhs_.input_labels.size(), 0);
            do {
                instances_.push_back(Instance{nullptr, in, 0, false});
            } while (next_tuple(in, spec_.q));
        }
        watch_.assign(t_.rows() + 1, {});
        for (std::size_t i = 0; i < instances_.size(); ++i) seed(i);
    }

    int evaluate(Instance& inst, std::size_t& blocked_row) {
        if (inst.fn) {
            cond::Ctx ctx;
            ctx.table = t_.table.data();
            ctx.assigned = t_.assigned.data();
            ctx.q = t_.q;
            ctx.k_out = t_.k_out;
            bool ok = inst.fn(ctx, inst.vars.data());
            if (ctx.blocked) {
                blocked_row = ctx.blocked_row;
                return kBlocked;
            }
            return ok ? kSat : kViolated;
        }
        return eval_pipeline_partial(lhs_, rhs_, t_, inst.vars, blocked_row);
    }

    void seed(std::size_t i) {
        std::size_t blocked = 0;
        switch (evaluate(instances_[i], blocked)) {
            case kBlocked:
                park(i, blocked);
                break;
            case kSat:
                break;  // holds with no table reads at all
            case kViolated:
                throw std::logic_error("search: condition violated before any assignment");
        }
    }

    void park(std::size_t i, std::size_t row) {
        instances_[i].parked = true;
        instances_[i].parked_on = row;
        watch_[row].push_back(i);
    }

    // Re-checks everything parked on row r (just assigned). Returns false on
    // a violation; partially processed lists are safe because stale entries
    // are skipped by the parked_on check.
    bool wake(std::size_t r, std::size_t depth) {
        auto& list = watch_[r];
        std::size_t keep = 0;
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            std::size_t i = list[idx];
            Instance& inst = instances_[i];
            if (!inst.parked || inst.parked_on != r) continue;  // stale
            std::size_t blocked = 0;
            int st = evaluate(inst, blocked);
            if (st == kViolated) {
                // keep this and the unprocessed tail parked on r for the
                // next value of the row
                list.erase(list.begin(), list.begin() + static_cast<long>(keep));
                return false;
            }
            if (st == kBlocked) {
                inst.parked_on = blocked;
                watch_[blocked].push_back(i);
            } else {
                inst.parked = false;
                sat_at_[depth].push_back(i);
            }
            ++keep;
        }
        list.clear();
        return true;
    }

    void unwind(std::size_t r, std::size_t depth) {
        for (std::size_t i : sat_at_[depth]) park(i, r);
        sat_at_[depth].clear();
    }

    void descend(std::size_t r) {
        if (stop_after_ && found_ >= *stop_after_) return;
        if (r == t_.rows()) {
            emit_table();
            return;
        }
        if (base_row_[r] != r) {
            // forced copy of its base row
            const Value* src = t_.table.data() + base_row_[r] * static_cast<std::size_t>(t_.k_out);
            std::copy(src, src + t_.k_out,
                      t_.table.begin() + static_cast<long>(r * static_cast<std::size_t>(t_.k_out)));
            t_.assigned[r] = 1;
            ++nodes_;
            if (wake(r, r)) descend(r + 1);
            t_.assigned[r] = 0;
            unwind(r, r);
            return;
        }
        bool first_free = true;
        for (std::size_t rr = 0; rr < r; ++rr)
            if (base_row_[rr] == rr) {
                first_free = false;
                break;
            }
        std::size_t lo = first_free ? first_lo_ : 0;
        std::size_t hi = first_free ? first_hi_ : row_values_;
        std::vector<Value> row_tuple(static_cast<std::size_t>(t_.k_out));
        for (std::size_t v = lo; v < hi; ++v) {
            std::size_t code = v;
            for (std::size_t i = static_cast<std::size_t>(t_.k_out); i-- > 0;) {
                row_tuple[i] = static_cast<Value>(code % static_cast<std::size_t>(t_.q));
                code /= static_cast<std::size_t>(t_.q);
            }
            std::copy(row_tuple.begin(), row_tuple.end(),
                      t_.table.begin() + static_cast<long>(r * static_cast<std::size_t>(t_.k_out)));
            t_.assigned[r] = 1;
            ++nodes_;
            if (wake(r, r)) descend(r + 1);
            t_.assigned[r] = 0;
            unwind(r, r);
            if (stop_after_ && found_ >= *stop_after_) return;
        }
    }

    bool passes_filters(const FiniteMap& m) const {
        for (const SearchFilter& f : spec_.filters) {
            switch (f.kind) {
                case SearchFilter::Kind::degenerate_arg:
                    break;  // enforced structurally
                case SearchFilter::Kind::surjective: {
                    std::vector<std::uint8_t> hit(ipow(static_cast<std::size_t>(m.q), m.k_out), 0);
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        std::size_t o = 0;
                        for (int i = 0; i < m.k_out; ++i)
                            o = o * static_cast<std::size_t>(m.q) + m.row(r)[i];
                        hit[o] = 1;
                    }
                    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
                    break;
                }
                case SearchFilter::Kind::involutive_after_p: {
                    if (m.k_in != 2 || m.k_out != 2)
                        throw std::invalid_argument("involutive-after-P needs a 2->2 map");
                    std::vector<Value> in(2, 0);
                    do {
                        auto once = m(std::vector<Value>{in[1], in[0]});
                        auto twice = m(std::vector<Value>{once[1], once[0]});
                        if (twice != std::vector<Value>(in.begin(), in.end())) return false;
                    } while (next_tuple(in, m.q));
                    break;
                }
            }
        }
        return true;
    }

    void emit_table() {
        FiniteMap m(t_.q, t_.k_in, t_.k_out);
        m.table = t_.table;
        // soundness: every emitted solution re-verifies via the compiled
        // pipeline, not just the pruning conditions
        if (!check_single(spec_.n, spec_.dual, m).holds)
            throw std::logic_error("search: pruning accepted a non-solution");
        if (!passes_filters(m)) return;
        ++found_;
        (*emit_)(m);
    }

    SearchSpec spec_;
    const Program& lhs_;
    const Program& rhs_;
    PartialTable t_;
    std::size_t row_values_ = 1;
    std::vector<std::size_t> base_row_;
    std::vector<Instance> instances_;
    std::vector<std::vector<std::size_t>> watch_;
    std::vector<std::vector<std::size_t>> sat_at_;
    const std::function<void(const FiniteMap&)>* emit_ = nullptr;
    std::size_t first_lo_ = 0, first_hi_ = 0;
    std::uint64_t nodes_ = 0, found_ = 0;
    std::optional<std::uint64_t> stop_after_;
};

}  // namespace detail

// Exact, duplicate-free enumeration of all tables satisfying the equation
// (and the optional filters). Refuses up front if the worst-case space
// exceeds the node budget.
inline SolutionSet enumerate(const SearchSpec& spec) {
    if (spec.q < 1 || spec.n < 3) throw std::invalid_argument("enumerate: bad spec");
    const auto& [lhs, rhs] = compiled_pair(spec.n, spec.dual);

    auto t0 = std::chrono::steady_clock::now();
    detail::Searcher probe(spec, lhs, rhs);
    const double est =
        std::pow(static_cast<double>(probe.row_value_count()), static_cast<double>(probe.free_rows()));
    if (est > static_cast<double>(spec.node_budget)) throw BudgetExceeded(est, spec.node_budget);

    SolutionSet out;
    out.spec = spec;

    const std::size_t first_range = probe.row_value_count();
    int jobs = std::max(1, spec.jobs);
    if (static_cast<std::size_t>(jobs) > first_range) jobs = static_cast<int>(first_range);

    if (jobs == 1) {
        std::vector<FiniteMap> sols;
        if (spec.limit) probe.set_stop_after(*spec.limit);
        probe.run(0, first_range, [&](const FiniteMap& m) {
            ++out.count;
            if (spec.collect) sols.push_back(m);
        });
        out.nodes_visited = probe.nodes();
        out.solutions = std::move(sols);
    } else {
        std::vector<std::vector<FiniteMap>> sols(static_cast<std::size_t>(jobs));
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(jobs), 0);
        std::vector<std::uint64_t> nodes(static_cast<std::size_t>(jobs), 0);
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                detail::Searcher s(spec, lhs, rhs);
                std::size_t lo = first_range * static_cast<std::size_t>(w) /
                                 static_cast<std::size_t>(jobs);
                std::size_t hi = first_range * static_cast<std::size_t>(w + 1) /
                                 static_cast<std::size_t>(jobs);
                s.run(lo, hi, [&](const FiniteMap& m) {
                    ++counts[static_cast<std::size_t>(w)];
                    if (spec.collect) sols[static_cast<std::size_t>(w)].push_back(m);
                });
                nodes[static_cast<std::size_t>(w)] = s.nodes();
            });
        }
        for (auto& th : workers) th.join();
        for (int w = 0; w < jobs; ++w) {
            out.count += counts[static_cast<std::size_t>(w)];
            out.nodes_visited += nodes[static_cast<std::size_t>(w)];
            for (auto& m : sols[static_cast<std::size_t>(w)])
                out.solutions.push_back(std::move(m));
        }
        if (spec.limit && out.count > *spec.limit) {
            out.count = *spec.limit;
        }
    }

    // deterministic order regardless of worker split
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const FiniteMap& a, const FiniteMap& b) { return a.table < b.table; });
    if (spec.limit && out.solutions.size() > *spec.limit)
        out.solutions.resize(static_cast<std::size_t>(*spec.limit));

    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// Brute-force oracle: every table over the carrier, filtered by the
// compiled-pipeline check. Only viable for tiny spaces; used to freeze the
// pruned search's golden counts.
inline std::vector<FiniteMap> naive_solutions(int n, bool dual, int q) {
    auto [k_in, k_out] = map_arity(n, dual);
    FiniteMap m(q, k_in, k_out);
    std::vector<FiniteMap> out;
    std::size_t cells = m.table.size();
    double est = std::pow(static_cast<double>(q), static_cast<double>(cells));
    if (est > 2e8) throw BudgetExceeded(est, 200'000'000);
    std::vector<Value> digits(cells, 0);
    while (true) {
        m.table = digits;
        if (check_single(n, dual, m).holds) out.push_back(m);
        if (!next_tuple(digits, q)) break;
    }
    std::sort(out.begin(), out.end(),
              [](const FiniteMap& a, const FiniteMap& b) { return a.table < b.table; });
    return out;
}

// Solution counts for the 5..7-gon equations and their duals.
inline std::vector<std::pair<std::string, std::uint64_t>> count_pentagon_like(
    int q, std::uint64_t node_budget = 1'000'000'000, int jobs = 1) {
    std::vector<std::pair<std::string, std::uint64_t>> table;
    for (int n = 5; n <= 7; ++n) {
        for (bool dual : {false, true}) {
            SearchSpec spec;
            spec.n = n;
            spec.dual = dual;
            spec.q = q;
            spec.collect = false;
            spec.node_budget = node_budget;
            spec.jobs = jobs;
            std::string name = std::to_string(n) + std::string("-gon") + (dual ? " dual" : "");
            table.emplace_back(name, enumerate(spec).count);
        }
    }
    return table;
}

}  // namespace polyeq
