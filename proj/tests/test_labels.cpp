#include <catch_amalgamated.hpp>

#include "polyeq/labels.hpp"

using namespace polyeq;

namespace {

Label L(int ambient, std::initializer_list<int> elems) {
    return Label(ambient, std::vector<int>(elems));
}

std::vector<std::string> strs(const LabelSeq& seq) {
    std::vector<std::string> out;
    for (const Label& l : seq) out.push_back(l.str());
    return out;
}

}  // namespace

TEST_CASE("packet enumerates (|M|-1)-subsets lexicographically") {
    CHECK(strs(packet(L(5, {1, 2, 3, 4}))) ==
          std::vector<std::string>{"123", "124", "134", "234"});
    CHECK(strs(packet(L(2, {1, 2}))) == std::vector<std::string>{"1", "2"});
    CHECK(strs(packet(L(5, {2, 3, 5}))) == std::vector<std::string>{"23", "25", "35"});
    CHECK_THROWS_AS(packet(L(3, {2})), std::invalid_argument);
}

TEST_CASE("half packets split by position parity") {
    auto [odd, even] = half_packets(L(5, {1, 2, 3, 4}));
    CHECK(strs(odd) == std::vector<std::string>{"123", "134"});
    CHECK(strs(even) == std::vector<std::string>{"124", "234"});

    auto [o2, e2] = half_packets(L(2, {1, 2}));
    CHECK(strs(o2) == std::vector<std::string>{"1"});
    CHECK(strs(e2) == std::vector<std::string>{"2"});

    auto [o3, e3] = half_packets(L(5, {1, 2, 4, 5}));
    CHECK(strs(o3) == std::vector<std::string>{"124", "145"});
    CHECK(strs(e3) == std::vector<std::string>{"125", "245"});
}

TEST_CASE("half packet sizes and disjoint union") {
    for (int n = 3; n <= 10; ++n) {
        for (const Label& k : all_subsets(n, n - 1)) {
            auto [odd, even] = half_packets(k);
            int m = k.size();
            CHECK(static_cast<int>(odd.size()) == (m + 1) / 2);
            CHECK(static_cast<int>(even.size()) == m / 2);
            LabelSeq merged = odd;
            merged.insert(merged.end(), even.begin(), even.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == packet(k));
        }
    }
}

TEST_CASE("commutes is the union-covers-everything predicate") {
    CHECK(commutes(L(5, {1, 2, 3}), L(5, {3, 4, 5})));
    CHECK_FALSE(commutes(L(5, {1, 2, 3}), L(5, {1, 3, 4})));
    CHECK(commutes(L(7, {1, 2, 3, 4, 5}), L(7, {3, 4, 5, 6, 7})));
    CHECK_THROWS_AS(commutes(L(5, {1, 2}), L(5, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("commutes agrees with the no-shared-packet formulation") {
    for (int n = 3; n <= 10; ++n) {
        LabelSeq labels = all_subsets(n, n - 2);
        for (std::size_t a = 0; a < labels.size(); ++a) {
            for (std::size_t b = a + 1; b < labels.size(); ++b) {
                bool via_union = commutes(labels[a], labels[b]);
                bool shares_packet = false;
                for (const Label& k : all_subsets(n, n - 1)) {
                    LabelSeq p = packet(k);
                    bool has_a = std::find(p.begin(), p.end(), labels[a]) != p.end();
                    bool has_b = std::find(p.begin(), p.end(), labels[b]) != p.end();
                    if (has_a && has_b) {
                        shares_packet = true;
                        break;
                    }
                }
                REQUIRE(via_union == !shares_packet);
            }
        }
    }
}

TEST_CASE("boundary sequences match the printed products") {
    CHECK(strs(blue_alpha(4)) == std::vector<std::string>{"12", "23", "34"});
    CHECK(strs(blue_omega(4)) == std::vector<std::string>{"14"});
    CHECK(strs(blue_alpha(5)) == std::vector<std::string>{"123", "134", "145"});
    CHECK(strs(blue_omega(5)) == std::vector<std::string>{"345", "235", "125"});
    CHECK(strs(blue_alpha(6)) ==
          std::vector<std::string>{"1234", "1245", "1256", "2345", "2356", "3456"});
    CHECK(strs(blue_omega(6)) == std::vector<std::string>{"1456", "1346", "1236"});
    CHECK(strs(blue_alpha(7)) ==
          std::vector<std::string>{"12345", "12356", "12367", "13456", "13467", "14567"});
    CHECK(strs(blue_omega(7)) ==
          std::vector<std::string>{"34567", "23567", "23457", "12567", "12457", "12347"});

    CHECK(strs(red_alpha(5)) == std::vector<std::string>{"125", "235", "345"});
    CHECK(strs(red_omega(4)) == std::vector<std::string>{"34", "23", "12"});
    CHECK(strs(red_alpha(6)) == std::vector<std::string>{"1236", "1346", "1456"});

    CHECK_THROWS_AS(blue_alpha(2), std::invalid_argument);
}

TEST_CASE("red sequences are total reversals of blue ones") {
    for (int n = 3; n <= 10; ++n) {
        LabelSeq ra = red_alpha(n), bw = blue_omega(n);
        LabelSeq rw = red_omega(n), ba = blue_alpha(n);
        CHECK(LabelSeq(ra.rbegin(), ra.rend()) == bw);
        CHECK(LabelSeq(rw.rbegin(), rw.rend()) == ba);
    }
}

TEST_CASE("no label is both blue and red in the same boundary order") {
    for (int n = 3; n <= 10; ++n) {
        for (const Label& j : blue_alpha(n)) {
            LabelSeq r = red_alpha(n);
            CHECK(std::find(r.begin(), r.end(), j) == r.end());
        }
        for (const Label& j : blue_omega(n)) {
            LabelSeq r = red_omega(n);
            CHECK(std::find(r.begin(), r.end(), j) == r.end());
        }
    }
}

TEST_CASE("blue alpha length equals the equation input arity count") {
    // Cartesian product lengths read off the paper for N = 4..8.
    CHECK(blue_alpha(4).size() == 3);
    CHECK(blue_alpha(5).size() == 3);
    CHECK(blue_alpha(6).size() == 6);
    CHECK(blue_alpha(7).size() == 6);
    CHECK(blue_alpha(8).size() == 10);
}

TEST_CASE("label basics") {
    Label l(6, {2, 4, 5});
    CHECK(l.contains(4));
    CHECK_FALSE(l.contains(3));
    CHECK(l.complement().str() == "136");
    CHECK(l.without(4).str() == "25");
    CHECK(l.with(3).str() == "2345");
    CHECK(L(4, {1, 4}) < L(4, {2, 3}));  // lexicographic, not bitmask, order
    CHECK_THROWS_AS(L(4, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(L(4, {5}), std::invalid_argument);
}
