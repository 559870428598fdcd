// Total map tables over a finite carrier {0..q-1}. Rows are indexed by the
// big-endian encoding of the input tuple (first argument most significant),
// matching the lexicographic enumeration used everywhere else.
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace polyeq {

using Value = std::uint8_t;

inline std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > SIZE_MAX / base) throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

struct FiniteMap {
    int q = 1;
    int k_in = 0;
    int k_out = 0;
    std::vector<Value> table;  // rows() * k_out entries, row-major

    FiniteMap() = default;
    FiniteMap(int q_, int k_in_, int k_out_)
        : q(q_), k_in(k_in_), k_out(k_out_), table(ipow(static_cast<std::size_t>(q_), k_in_) *
                                                  static_cast<std::size_t>(k_out_)) {
        if (q < 1 || k_in < 0 || k_out < 0) throw std::invalid_argument("FiniteMap: bad shape");
    }

    std::size_t rows() const { return ipow(static_cast<std::size_t>(q), k_in); }

    const Value* row(std::size_t r) const { return table.data() + r * static_cast<std::size_t>(k_out); }
    Value* row(std::size_t r) { return table.data() + r * static_cast<std::size_t>(k_out); }

    // Big-endian row index of an input tuple.
    std::size_t encode(std::span<const Value> in) const {
        std::size_t idx = 0;
        for (Value v : in) {
            if (v >= q) throw std::out_of_range("FiniteMap::encode: value exceeds carrier");
            idx = idx * static_cast<std::size_t>(q) + v;
        }
        return idx;
    }

    std::vector<Value> decode(std::size_t idx) const {
        std::vector<Value> out(static_cast<std::size_t>(k_in));
        for (int i = k_in - 1; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = static_cast<Value>(idx % static_cast<std::size_t>(q));
            idx /= static_cast<std::size_t>(q);
        }
        return out;
    }

    void apply(std::span<const Value> in, Value* out) const {
        const Value* r = row(encode(in));
        for (int i = 0; i < k_out; ++i) out[i] = r[i];
    }

    std::vector<Value> operator()(std::span<const Value> in) const {
        std::vector<Value> out(static_cast<std::size_t>(k_out));
        apply(in, out.data());
        return out;
    }

    friend bool operator==(const FiniteMap& a, const FiniteMap& b) {
        return a.q == b.q && a.k_in == b.k_in && a.k_out == b.k_out && a.table == b.table;
    }
};

// Seeded uniform table; rejection sampling keeps the draw exactly uniform
// and independent of the standard library's distribution internals.
inline FiniteMap random_map(int q, int k_in, int k_out, std::uint64_t seed) {
    FiniteMap m(q, k_in, k_out);
    std::mt19937_64 gen(seed);
    const std::uint64_t uq = static_cast<std::uint64_t>(q);
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % uq;
    for (Value& v : m.table) {
        std::uint64_t x;
        do {
            x = gen();
        } while (x >= bound);
        v = static_cast<Value>(x % uq);
    }
    return m;
}

// Lexicographic odometer over {0..q-1}^k. Returns false once wrapped.
inline bool next_tuple(std::vector<Value>& t, int q) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < q) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace polyeq
