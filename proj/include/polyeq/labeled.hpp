// Multi-sorted systems: one carrier size per (N-2)-subset and one map
// table per (N-1)-subset. Tables are mixed-radix since slot sizes may
// differ; a single-sorted FiniteMap is the special case of equal sizes.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyeq/finite_map.hpp"
#include "polyeq/labels.hpp"
#include "polyeq/program.hpp"

namespace polyeq {

// A total map between products of finite sets of (possibly) different
// sizes, tabulated row-major with the first input slot most significant.
struct SortedMap {
    std::vector<int> in_sizes;
    std::vector<int> out_sizes;
    std::vector<Value> table;  // rows() * out_sizes.size()

    SortedMap() = default;
    SortedMap(std::vector<int> in, std::vector<int> out)
        : in_sizes(std::move(in)), out_sizes(std::move(out)) {
        for (int s : in_sizes)
            if (s < 1) throw std::invalid_argument("SortedMap: slot sizes must be positive");
        for (int s : out_sizes)
            if (s < 1) throw std::invalid_argument("SortedMap: slot sizes must be positive");
        table.assign(rows() * out_sizes.size(), 0);
    }

    static SortedMap from_finite(const FiniteMap& f) {
        SortedMap m(std::vector<int>(static_cast<std::size_t>(f.k_in), f.q),
                    std::vector<int>(static_cast<std::size_t>(f.k_out), f.q));
        m.table = f.table;
        return m;
    }

    std::size_t rows() const {
        std::size_t r = 1;
        for (int s : in_sizes) r *= static_cast<std::size_t>(s);
        return r;
    }

    std::size_t encode(std::span<const Value> in) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < in_sizes.size(); ++i) {
            if (in[i] >= in_sizes[i]) throw std::out_of_range("SortedMap::encode: value too large");
            idx = idx * static_cast<std::size_t>(in_sizes[i]) + in[i];
        }
        return idx;
    }

    std::vector<Value> decode(std::size_t idx) const {
        std::vector<Value> t(in_sizes.size());
        for (std::size_t i = in_sizes.size(); i-- > 0;) {
            t[i] = static_cast<Value>(idx % static_cast<std::size_t>(in_sizes[i]));
            idx /= static_cast<std::size_t>(in_sizes[i]);
        }
        return t;
    }

    const Value* row(std::size_t r) const { return table.data() + r * out_sizes.size(); }
    Value* row(std::size_t r) { return table.data() + r * out_sizes.size(); }

    friend bool operator==(const SortedMap& a, const SortedMap& b) {
        return a.in_sizes == b.in_sizes && a.out_sizes == b.out_sizes && a.table == b.table;
    }
};

struct LabeledSystem {
    int ambient = 3;
    bool dual = false;
    std::map<Label, int> carrier;    // per (N-2)-subset
    std::map<Label, SortedMap> maps;  // per (N-1)-subset

    int carrier_of(const Label& j) const {
        auto it = carrier.find(j);
        if (it == carrier.end()) throw std::invalid_argument("LabeledSystem: missing carrier");
        return it->second;
    }
    const SortedMap& map_of(const Label& k) const {
        auto it = maps.find(k);
        if (it == maps.end()) throw std::invalid_argument("LabeledSystem: missing map");
        return it->second;
    }

    // Slot sizes a map for K must have under this system's duality.
    std::pair<std::vector<int>, std::vector<int>> expected_shape(const Label& k) const {
        auto [odd, even] = half_packets(k);
        const LabelSeq& in_half = dual ? even : odd;
        const LabelSeq& out_half = dual ? odd : even;
        std::vector<int> in, out;
        for (const Label& j : in_half) in.push_back(carrier_of(j));
        for (auto it = out_half.rbegin(); it != out_half.rend(); ++it)
            out.push_back(carrier_of(*it));
        return {in, out};
    }

    void validate() const {
        for (const Label& j : all_subsets(ambient, ambient - 2)) carrier_of(j);
        for (const Label& k : all_subsets(ambient, ambient - 1)) {
            const SortedMap& m = map_of(k);
            auto [in, out] = expected_shape(k);
            if (m.in_sizes != in || m.out_sizes != out)
                throw std::invalid_argument("LabeledSystem: map shape disagrees with carriers for " +
                                            k.str());
        }
    }
};

// Uniform system: every carrier q, every map the same table.
inline LabeledSystem uniform_system(int n, bool dual, const FiniteMap& t) {
    auto [k_in, k_out] = map_arity(n, dual);
    if (t.k_in != k_in || t.k_out != k_out)
        throw std::invalid_argument("uniform_system: map arity does not fit");
    LabeledSystem sys;
    sys.ambient = n;
    sys.dual = dual;
    for (const Label& j : all_subsets(n, n - 2)) sys.carrier[j] = t.q;
    for (const Label& k : all_subsets(n, n - 1)) sys.maps[k] = SortedMap::from_finite(t);
    return sys;
}

// Program execution where each apply picks the map named by its label and
// slot sizes are tracked through swaps.
inline std::vector<Value> eval_labeled(const Program& p, const LabeledSystem& sys,
                                       std::span<const Value> input) {
    if (p.ambient != sys.ambient || p.dual != sys.dual)
        throw std::invalid_argument("eval_labeled: program and system disagree");
    if (input.size() != p.input_labels.size())
        throw std::invalid_argument("eval_labeled: input length mismatch");

    std::vector<Value> state(input.begin(), input.end());
    std::vector<int> sizes;
    for (std::size_t i = 0; i < p.input_labels.size(); ++i) {
        sizes.push_back(sys.carrier_of(p.input_labels[i]));
        if (state[i] >= sizes.back())
            throw std::out_of_range("eval_labeled: input exceeds slot carrier");
    }

    for (const Step& s : p.steps) {
        std::size_t pos0 = static_cast<std::size_t>(s.pos - 1);
        if (s.kind == Step::Kind::swap) {
            if (pos0 + 1 >= state.size()) throw std::out_of_range("eval_labeled: swap out of range");
            std::swap(state[pos0], state[pos0 + 1]);
            std::swap(sizes[pos0], sizes[pos0 + 1]);
        } else {
            if (!s.map_index)
                throw std::invalid_argument("eval_labeled: program lacks map labels");
            const SortedMap& m = sys.map_of(*s.map_index);
            std::size_t ki = m.in_sizes.size(), ko = m.out_sizes.size();
            if (pos0 + ki > state.size())
                throw std::out_of_range("eval_labeled: apply window exceeds state");
            for (std::size_t i = 0; i < ki; ++i)
                if (sizes[pos0 + i] != m.in_sizes[i])
                    throw std::invalid_argument("eval_labeled: slot carrier mismatch at apply");
            std::size_t r = m.encode(std::span<const Value>(state.data() + pos0, ki));
            const Value* out = m.row(r);
            state.erase(state.begin() + static_cast<long>(pos0),
                        state.begin() + static_cast<long>(pos0 + ki));
            state.insert(state.begin() + static_cast<long>(pos0), out, out + ko);
            sizes.erase(sizes.begin() + static_cast<long>(pos0),
                        sizes.begin() + static_cast<long>(pos0 + ki));
            sizes.insert(sizes.begin() + static_cast<long>(pos0), m.out_sizes.begin(),
                         m.out_sizes.end());
        }
    }
    if (state.size() != p.output_labels.size())
        throw std::logic_error("eval_labeled: program left wrong number of slots");
    return state;
}

}  // namespace polyeq
