#include <catch_amalgamated.hpp>

#include <random>

#include "polyeq/conditions.hpp"
#include "polyeq/reference.hpp"
#include "polyeq/verify.hpp"

using namespace polyeq;

namespace {

FiniteMap transposition2(int q) {
    FiniteMap t(q, 2, 2);
    std::vector<Value> in(2, 0);
    do {
        Value* r = t.row(t.encode(in));
        r[0] = in[1];
        r[1] = in[0];
    } while (next_tuple(in, q));
    return t;
}

}  // namespace

TEST_CASE("transposition solves the pentagon equation and its dual") {
    for (int q : {1, 2, 3}) {
        FiniteMap p = transposition2(q);
        CHECK(check_single(5, false, p).holds);
        CHECK(check_single(5, true, p).holds);
    }
}

TEST_CASE("AND is a tetragon map, NAND is not") {
    FiniteMap and2(2, 2, 1);
    and2.table = {0, 0, 0, 1};
    Verdict ok = check_single(4, false, and2);
    CHECK(ok.holds);
    CHECK(ok.inputs_checked == 8);

    FiniteMap nand2(2, 2, 1);
    nand2.table = {1, 1, 1, 0};
    Verdict bad = check_single(4, false, nand2);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.counterexample.has_value());
    // replay: the stored input really does separate the two sides
    const auto& cx = *bad.counterexample;
    const auto& [lhs, rhs] = compiled_pair(4, false);
    CHECK(eval_single(lhs, nand2, cx.input) == cx.lhs);
    CHECK(eval_single(rhs, nand2, cx.input) == cx.rhs);
    CHECK(cx.lhs != cx.rhs);
}

TEST_CASE("labeled verification") {
    // trigon with all maps the identity
    LabeledSystem sys;
    sys.ambient = 3;
    sys.dual = false;
    for (const Label& j : all_subsets(3, 1)) sys.carrier[j] = 2;
    FiniteMap id(2, 1, 1);
    id.table = {0, 1};
    for (const Label& k : all_subsets(3, 2)) sys.maps[k] = SortedMap::from_finite(id);
    CHECK(check_labeled(3, false, sys).holds);

    // all-singleton carriers solve anything
    for (int n : {4, 5}) {
        for (bool dual : {false, true}) {
            auto [ki, ko] = map_arity(n, dual);
            CHECK(check_labeled(n, dual, uniform_system(n, dual, FiniteMap(1, ki, ko))).holds);
        }
    }
}

TEST_CASE("sampled single-map verification") {
    FiniteMap p = transposition2(2);
    std::vector<std::vector<Value>> samples{{0, 1, 0}, {1, 1, 1}};
    Verdict v = check_single_samples(5, false, p, samples);
    CHECK(v.holds);
    CHECK(v.inputs_checked == 2);
}

TEST_CASE("check_point on an exact rational pentagon solution") {
    PointMap t;
    t.k_in = 2;
    t.k_out = 2;
    t.in_domain = [](const Rational& r) { return r > 0 && r < 1; };
    t.rule = [](const RatTuple& in) {
        const Rational &a = in[0], &b = in[1];
        return RatTuple{(1 - a) * b / (1 - a * b), a * b};
    };
    std::vector<RatTuple> samples;
    std::mt19937_64 gen(2024);
    for (int i = 0; i < 25; ++i) {
        auto frac = [&gen]() {
            std::uint64_t den = gen() % 97 + 2;
            std::uint64_t num = gen() % (den - 1) + 1;
            return Rational(static_cast<long>(num), static_cast<long>(den));
        };
        samples.push_back({frac(), frac(), frac()});  // pentagon sides take three slots
    }
    CHECK(check_point(5, false, t, samples).holds);

    // T(a,b) = (b, a+b) is the additive Kac-Takesaki form: a pentagon map,
    // but not a dual pentagon map.
    PointMap add;
    add.k_in = 2;
    add.k_out = 2;
    add.rule = [](const RatTuple& in) { return RatTuple{in[1], in[0] + in[1]}; };
    RatTuple sample{Rational(1), Rational(2), Rational(3)};
    CHECK(check_point(5, false, add, {sample}).holds);
    PointVerdict v = check_point(5, true, add, {sample});
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->lhs != v.counterexample->rhs);
}

TEST_CASE("Kashaev form is equivalent to the dual hexagon equation") {
    // exhaustive over all q=2 maps of arity (2,3)
    FiniteMap t(2, 2, 3);
    const std::size_t total = ipow(8, 4);
    std::size_t dual_hex_count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t r = 0; r < 4; ++r) {
            std::size_t row = c % 8;
            c /= 8;
            t.row(r)[0] = static_cast<Value>(row >> 2 & 1);
            t.row(r)[1] = static_cast<Value>(row >> 1 & 1);
            t.row(r)[2] = static_cast<Value>(row & 1);
        }
        bool kash = check_kashaev_form(t);
        bool hex = check_single(6, true, t).holds;
        REQUIRE(kash == hex);
        dual_hex_count += hex;
    }
    CHECK(dual_hex_count > 0);

    FiniteMap q1(1, 2, 3);
    CHECK(check_kashaev_form(q1));
}

TEST_CASE("compiled sides match the printed reference pipelines") {
    for (int n = 4; n <= 8; ++n) {
        for (bool dual : {false, true}) {
            auto [k_in, k_out] = map_arity(n, dual);
            auto pair = dual ? compile_dual_gon(n) : compile_gon(n);
            for (bool lhs : {true, false}) {
                Program mine = specialize_single(lhs ? pair.first : pair.second);
                Program ref = reference_program(n, dual, reference_side_for_compiled(n, dual, lhs));
                REQUIRE(mine.input_labels.size() == ref.input_labels.size());
                for (std::uint64_t seed = 0; seed < 5; ++seed) {
                    FiniteMap t = random_map(2, k_in, k_out,
                                             seed * 1315423911u + static_cast<unsigned>(n) * 31 +
                                                 (dual ? 7u : 0u) + (lhs ? 1u : 0u));
                    std::vector<Value> in(mine.input_labels.size(), 0);
                    do {
                        REQUIRE(eval_single(mine, t, in) == eval_single(ref, t, in));
                    } while (next_tuple(in, 2));
                }
            }
        }
    }
}
