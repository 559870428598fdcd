// Subset combinatorics underlying the polygon equations: packets,
// half-packets, the swap-commutation predicate, and the blue/red
// boundary sequences that frame each equation side.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyeq {

// A sorted subset of {1..ambient}. Ambient sizes stay small (N <= ~16),
// so a bitset mirror makes union/containment O(1).
class Label {
public:
    Label() = default;

    Label(int ambient, std::vector<int> elems) : ambient_(ambient), elems_(std::move(elems)) {
        if (ambient_ < 1 || ambient_ > 31)
            throw std::invalid_argument("Label: ambient out of range");
        int prev = 0;
        for (int e : elems_) {
            if (e <= prev || e > ambient_)
                throw std::invalid_argument("Label: elements must be strictly increasing in 1..N");
            prev = e;
            bits_ |= 1u << (e - 1);
        }
    }

    static Label from_bits(int ambient, std::uint32_t bits) {
        std::vector<int> elems;
        for (int e = 1; e <= ambient; ++e)
            if (bits & (1u << (e - 1))) elems.push_back(e);
        return Label(ambient, std::move(elems));
    }

    static Label full(int ambient) {
        std::vector<int> elems(static_cast<std::size_t>(ambient));
        for (int e = 1; e <= ambient; ++e) elems[static_cast<std::size_t>(e - 1)] = e;
        return Label(ambient, std::move(elems));
    }

    int ambient() const { return ambient_; }
    std::uint32_t bits() const { return bits_; }
    const std::vector<int>& elems() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }

    bool contains(int v) const { return v >= 1 && v <= ambient_ && (bits_ & (1u << (v - 1))); }

    Label without(int v) const {
        if (!contains(v)) throw std::invalid_argument("Label::without: element not present");
        std::vector<int> e;
        e.reserve(elems_.size() - 1);
        for (int x : elems_)
            if (x != v) e.push_back(x);
        return Label(ambient_, std::move(e));
    }

    Label with(int v) const {
        if (contains(v)) throw std::invalid_argument("Label::with: element already present");
        std::vector<int> e = elems_;
        e.insert(std::upper_bound(e.begin(), e.end(), v), v);
        return Label(ambient_, std::move(e));
    }

    // Complement within the ambient set.
    Label complement() const { return from_bits(ambient_, ~bits_ & ((1u << ambient_) - 1u)); }

    // Lexicographic order on the sorted element sequences, e.g. 14 < 23.
    friend bool operator<(const Label& a, const Label& b) {
        return std::lexicographical_compare(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                            b.elems_.end());
    }
    friend bool operator==(const Label& a, const Label& b) {
        return a.ambient_ == b.ambient_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }

    // "134" for single-digit elements, "2,10,13" otherwise.
    std::string str() const {
        std::string s;
        bool digits = ambient_ <= 9;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i && !digits) s += ',';
            s += std::to_string(elems_[i]);
        }
        return s;
    }

private:
    int ambient_ = 1;
    std::uint32_t bits_ = 0;
    std::vector<int> elems_;
};

using LabelSeq = std::vector<Label>;

// All k-subsets of {1..n} in lexicographic order.
inline LabelSeq all_subsets(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("all_subsets: bad subset size");
    LabelSeq out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(n, idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// The packet of M: all (|M|-1)-subsets of M, lexicographically ordered.
inline LabelSeq packet(const Label& m) {
    if (m.size() < 2) throw std::invalid_argument("packet: |M| must be at least 2");
    LabelSeq out;
    out.reserve(static_cast<std::size_t>(m.size()));
    // Removing a larger element yields a lexicographically smaller subset,
    // so walk the removed element from largest to smallest.
    const auto& e = m.elems();
    for (auto it = e.rbegin(); it != e.rend(); ++it) out.push_back(m.without(*it));
    return out;
}

// Odd- and even-position halves of the lexicographically ordered packet
// (1-based positions), each in lexicographic order.
inline std::pair<LabelSeq, LabelSeq> half_packets(const Label& k) {
    LabelSeq p = packet(k);
    LabelSeq odd, even;
    for (std::size_t i = 0; i < p.size(); ++i) (i % 2 == 0 ? odd : even).push_back(p[i]);
    return {std::move(odd), std::move(even)};
}

// Two (N-2)-subsets may be swapped past each other iff no (N-1)-subset
// contains both, which for this size is the same as their union being all
// of {1..N}.
inline bool commutes(const Label& j1, const Label& j2) {
    if (j1.ambient() != j2.ambient() || j1.size() != j2.size())
        throw std::invalid_argument("commutes: labels of different shape");
    const int n = j1.ambient();
    if (j1.size() != n - 2) throw std::invalid_argument("commutes: labels must be (N-2)-subsets");
    if (j1 == j2) throw std::invalid_argument("commutes: labels must be distinct");
    return (j1.bits() | j2.bits()) == (1u << n) - 1u;
}

namespace detail {

// Position parity of J inside the lexicographic packet of each K containing
// it. J = K \ {k_j} sits at lex position |K| - j + 1; we need that parity
// for the two K = J + {x}, x outside J.
inline bool boundary_blue(const Label& j, bool in_alpha) {
    const int n = j.ambient();
    for (int x = 1; x <= n; ++x) {
        if (j.contains(x)) continue;
        Label k = j.with(x);
        int pos_of_x = 1;
        for (int e : k.elems()) {
            if (e == x) break;
            ++pos_of_x;
        }
        int lex_pos = k.size() - pos_of_x + 1;
        bool odd = (lex_pos % 2) == 1;
        // Blue in the lex order requires the odd half; in the reverse-lex
        // order it requires the even half.
        if (odd != in_alpha) return false;
    }
    return true;
}

}  // namespace detail

// Blue part of the lexicographic order of all (N-2)-subsets: the input
// slots of the N-gon equation.
inline LabelSeq blue_alpha(int n) {
    if (n < 3) throw std::invalid_argument("blue_alpha: N must be at least 3");
    LabelSeq out;
    for (const Label& j : all_subsets(n, n - 2))
        if (detail::boundary_blue(j, true)) out.push_back(j);
    return out;
}

// Blue part of the reverse-lexicographic order: the output slots.
inline LabelSeq blue_omega(int n) {
    if (n < 3) throw std::invalid_argument("blue_omega: N must be at least 3");
    LabelSeq lex;
    for (const Label& j : all_subsets(n, n - 2))
        if (detail::boundary_blue(j, false)) lex.push_back(j);
    return LabelSeq(lex.rbegin(), lex.rend());
}

inline LabelSeq red_alpha(int n) {
    LabelSeq w = blue_omega(n);
    return LabelSeq(w.rbegin(), w.rend());
}

inline LabelSeq red_omega(int n) {
    LabelSeq a = blue_alpha(n);
    return LabelSeq(a.rbegin(), a.rend());
}

inline std::string seq_str(const LabelSeq& seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ", ";
        s += seq[i].str();
    }
    return s + ")";
}

}  // namespace polyeq
