// The unpacked n-ary-operation condition systems equivalent to the
// single-map (dual) 3..8-gon equations. They serve as an independent
// oracle against the compiled pipelines and as incremental pruning
// predicates for the search: every operation application goes through a
// context that can report "blocked on an unassigned table row".
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polyeq/finite_map.hpp"
#include "polyeq/program.hpp"

namespace polyeq {
namespace cond {

// Component-operation evaluator over a (possibly partial) table.
// With a partial table, the first unassigned row touched is recorded and a
// dummy value propagates; the caller must then ignore the comparison.
struct Ctx {
    const Value* table = nullptr;
    const std::uint8_t* assigned = nullptr;  // per row; nullptr = total table
    int q = 1;
    int k_out = 1;
    bool blocked = false;
    std::size_t blocked_row = 0;

    template <class... Args>
    Value op(int comp, Args... args) {
        std::size_t idx = 0;
        ((idx = idx * static_cast<std::size_t>(q) + args), ...);
        if (assigned && !assigned[idx]) {
            if (!blocked) {
                blocked = true;
                blocked_row = idx;
            }
            return 0;
        }
        return table[idx * static_cast<std::size_t>(k_out) + static_cast<std::size_t>(comp)];
    }
};

using ConditionFn = bool (*)(Ctx&, const Value*);

struct ConditionSystem {
    int var_count = 0;
    std::vector<ConditionFn> conditions;
};

// ---- trigon: T idempotent ----------------------------------------------
inline bool trigon_1(Ctx& c, const Value* v) {
    const Value a = v[0];
    return c.op(0, c.op(0, a)) == c.op(0, a);
}

// ---- tetragon: associativity of the product ----------------------------
inline bool tetragon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(0, c.op(0, a, b), x) == c.op(0, a, c.op(0, b, x));
}

// ---- pentagon: T(a,b) = (a*b, a.b) --------------------------------------
// (a*b) * ((a.b)*c) = b*c
inline bool pentagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(0, c.op(0, a, b), c.op(0, c.op(1, a, b), x)) == c.op(0, b, x);
}
// (a*b) . ((a.b)*c) = a*(b.c)
inline bool pentagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(1, c.op(0, a, b), c.op(0, c.op(1, a, b), x)) == c.op(0, a, c.op(1, b, x));
}
// (a.b).c = a.(b.c)
inline bool pentagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(1, c.op(1, a, b), x) == c.op(1, a, c.op(1, b, x));
}

// ---- hexagon: T(a,b,c) = (<a,b,c>, [a,b,c]), on (a,b,c,d,e,f) -----------
// <<a,b,d>, <[a,b,d],c,e>, f> = <b,c,<d,e,f>>
inline bool hexagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(0, c.op(0, a, b, d), c.op(0, c.op(1, a, b, d), x, e), f) ==
           c.op(0, b, x, c.op(0, d, e, f));
}
// [<a,b,d>, <[a,b,d],c,e>, f] = <a, [b,c,<d,e,f>], [d,e,f]>
inline bool hexagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(1, c.op(0, a, b, d), c.op(0, c.op(1, a, b, d), x, e), f) ==
           c.op(0, a, c.op(1, b, x, c.op(0, d, e, f)), c.op(1, d, e, f));
}
// [[a,b,d],c,e] = [a, [b,c,<d,e,f>], [d,e,f]]
inline bool hexagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(1, c.op(1, a, b, d), x, e) ==
           c.op(1, a, c.op(1, b, x, c.op(0, d, e, f)), c.op(1, d, e, f));
}

// ---- heptagon: T(a,b,c) = ({a,b,c}, <a,b,c>, [a,b,c]) -------------------
// hexagon conditions hold for (<>, []) = components (1, 2)
inline bool heptagon_hex_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(1, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f) ==
           c.op(1, b, x, c.op(1, d, e, f));
}
inline bool heptagon_hex_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(2, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f) ==
           c.op(1, a, c.op(2, b, x, c.op(1, d, e, f)), c.op(2, d, e, f));
}
inline bool heptagon_hex_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(2, c.op(2, a, b, d), x, e) ==
           c.op(2, a, c.op(2, b, x, c.op(1, d, e, f)), c.op(2, d, e, f));
}
// {{a,b,d}, {[a,b,d],c,e}, {<a,b,d>, <[a,b,d],c,e>, f}} = {d,e,f}
inline bool heptagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(0, c.op(0, a, b, d), c.op(0, c.op(2, a, b, d), x, e),
                c.op(0, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f)) ==
           c.op(0, d, e, f);
}
// <{a,b,d}, {[a,b,d],c,e}, {<a,b,d>, <[a,b,d],c,e>, f}> = {b,c,<d,e,f>}
inline bool heptagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(1, c.op(0, a, b, d), c.op(0, c.op(2, a, b, d), x, e),
                c.op(0, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f)) ==
           c.op(0, b, x, c.op(1, d, e, f));
}
// [{a,b,d}, {[a,b,d],c,e}, {<a,b,d>, <[a,b,d],c,e>, f}] = {a, [b,c,<d,e,f>], [d,e,f]}
inline bool heptagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(2, c.op(0, a, b, d), c.op(0, c.op(2, a, b, d), x, e),
                c.op(0, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f)) ==
           c.op(0, a, c.op(2, b, x, c.op(1, d, e, f)), c.op(2, d, e, f));
}

// ---- octagon: T(a,b,c,d) = ({..}, <..>, [..]), on (a,b,c,d,e,f,g,h,k,l) -
namespace oct {
// shared subterms, written out per condition below:
//   G  = {g,h,k,l}     Ga = <g,h,k,l>    Gs = [g,h,k,l]
//   D  = <d,e,f,G>     W  = [d,e,f,G]    B = [b,c,D,Ga]
//   A1 = {a,b,d,g}  A2 = {[a,b,d,g],c,e,h}
//   A3 = {<a,b,d,g>, <[a,b,d,g],c,e,h>, f,k}
}  // namespace oct
// {A1, A2, A3, l} = {d,e,f,G}
inline bool octagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7],
                k = v[8], l = v[9];
    const Value G = c.op(0, g, h, k, l);
    const Value A1 = c.op(0, a, b, d, g);
    const Value A2 = c.op(0, c.op(2, a, b, d, g), x, e, h);
    const Value A3 = c.op(0, c.op(1, a, b, d, g), c.op(1, c.op(2, a, b, d, g), x, e, h), f, k);
    return c.op(0, A1, A2, A3, l) == c.op(0, d, e, f, G);
}
// <A1, A2, A3, l> = {b, c, <d,e,f,G>, <g,h,k,l>}
inline bool octagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7],
                k = v[8], l = v[9];
    const Value G = c.op(0, g, h, k, l);
    const Value A1 = c.op(0, a, b, d, g);
    const Value A2 = c.op(0, c.op(2, a, b, d, g), x, e, h);
    const Value A3 = c.op(0, c.op(1, a, b, d, g), c.op(1, c.op(2, a, b, d, g), x, e, h), f, k);
    return c.op(1, A1, A2, A3, l) == c.op(0, b, x, c.op(1, d, e, f, G), c.op(1, g, h, k, l));
}
// [A1, A2, A3, l] = {a, [b,c,<d,e,f,G>,<g,h,k,l>], [d,e,f,G], [g,h,k,l]}
inline bool octagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7],
                k = v[8], l = v[9];
    const Value G = c.op(0, g, h, k, l);
    const Value D = c.op(1, d, e, f, G);
    const Value A1 = c.op(0, a, b, d, g);
    const Value A2 = c.op(0, c.op(2, a, b, d, g), x, e, h);
    const Value A3 = c.op(0, c.op(1, a, b, d, g), c.op(1, c.op(2, a, b, d, g), x, e, h), f, k);
    return c.op(2, A1, A2, A3, l) ==
           c.op(0, a, c.op(2, b, x, D, c.op(1, g, h, k, l)), c.op(2, d, e, f, G),
                c.op(2, g, h, k, l));
}
// <<a,b,d,g>, <[a,b,d,g],c,e,h>, f, k> = <b, c, <d,e,f,G>, [g,h,k,l]>
inline bool octagon_4(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7],
                k = v[8], l = v[9];
    const Value G = c.op(0, g, h, k, l);
    return c.op(1, c.op(1, a, b, d, g), c.op(1, c.op(2, a, b, d, g), x, e, h), f, k) ==
           c.op(1, b, x, c.op(1, d, e, f, G), c.op(2, g, h, k, l));
}
// [<a,b,d,g>, <[a,b,d,g],c,e,h>, f, k] = <a, [b,c,<d,e,f,G>,<g,h,k,l>], [d,e,f,G], [g,h,k,l]>
inline bool octagon_5(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7],
                k = v[8], l = v[9];
    const Value G = c.op(0, g, h, k, l);
    const Value D = c.op(1, d, e, f, G);
    return c.op(2, c.op(1, a, b, d, g), c.op(1, c.op(2, a, b, d, g), x, e, h), f, k) ==
           c.op(1, a, c.op(2, b, x, D, c.op(1, g, h, k, l)), c.op(2, d, e, f, G),
                c.op(2, g, h, k, l));
}
// [a, [b,c,<d,e,f,G>,<g,h,k,l>], [d,e,f,G], [g,h,k,l]] = [[a,b,d,g],c,e,h]
inline bool octagon_6(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5], g = v[6], h = v[7],
                k = v[8], l = v[9];
    const Value G = c.op(0, g, h, k, l);
    const Value D = c.op(1, d, e, f, G);
    return c.op(2, a, c.op(2, b, x, D, c.op(1, g, h, k, l)), c.op(2, d, e, f, G),
                c.op(2, g, h, k, l)) == c.op(2, c.op(2, a, b, d, g), x, e, h);
}

// ---- dual trigon --------------------------------------------------------
inline bool dual_trigon_1(Ctx& c, const Value* v) {
    const Value a = v[0];
    return c.op(0, c.op(0, a)) == c.op(0, a);
}

// ---- dual tetragon: idempotency and commutativity of the components -----
inline bool dual_tetragon_1(Ctx& c, const Value* v) {
    const Value a = v[0];
    return c.op(0, c.op(0, a)) == c.op(0, a);
}
inline bool dual_tetragon_2(Ctx& c, const Value* v) {
    const Value a = v[0];
    return c.op(1, c.op(1, a)) == c.op(1, a);
}
inline bool dual_tetragon_3(Ctx& c, const Value* v) {
    const Value a = v[0];
    return c.op(0, c.op(1, a)) == c.op(1, c.op(0, a));
}

// ---- dual pentagon: ~T(a,b) = (a.b, a*b) --------------------------------
// a.(b.c) = (a.b).c
inline bool dual_pentagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(0, a, c.op(0, b, x)) == c.op(0, c.op(0, a, b), x);
}
// (a*(b.c)).(b*c) = (a.b)*c
inline bool dual_pentagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(0, c.op(1, a, c.op(0, b, x)), c.op(1, b, x)) == c.op(1, c.op(0, a, b), x);
}
// (a*(b.c))*(b*c) = a*b
inline bool dual_pentagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(1, c.op(1, a, c.op(0, b, x)), c.op(1, b, x)) == c.op(1, a, b);
}

// ---- dual hexagon: ~T(a,b) = (a*b, a.b, a<>b) ---------------------------
// pentagon conditions on (*, .) = components (0, 1)
inline bool dual_hexagon_pent_1(Ctx& c, const Value* v) { return pentagon_1(c, v); }
inline bool dual_hexagon_pent_2(Ctx& c, const Value* v) { return pentagon_2(c, v); }
inline bool dual_hexagon_pent_3(Ctx& c, const Value* v) { return pentagon_3(c, v); }
// (a<>(b.c)) * (b<>c) = (a*b) <> ((a.b)*c)
inline bool dual_hexagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(0, c.op(2, a, c.op(1, b, x)), c.op(2, b, x)) ==
           c.op(2, c.op(0, a, b), c.op(0, c.op(1, a, b), x));
}
// (a<>(b.c)) . (b<>c) = (a.b) <> c
inline bool dual_hexagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(1, c.op(2, a, c.op(1, b, x)), c.op(2, b, x)) == c.op(2, c.op(1, a, b), x);
}
// (a<>(b.c)) <> (b<>c) = a <> b
inline bool dual_hexagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2];
    return c.op(2, c.op(2, a, c.op(1, b, x)), c.op(2, b, x)) == c.op(2, a, b);
}

// ---- dual heptagon: ~T(a,b,c) = ({a,b,c}, <a,b,c>, [a,b,c]) -------------
// {b,c,{d,e,f}} = {{a,b,d}, {<a,b,d>,c,e}, f}
inline bool dual_heptagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(0, b, x, c.op(0, d, e, f)) ==
           c.op(0, c.op(0, a, b, d), c.op(0, c.op(1, a, b, d), x, e), f);
}
// {a, <b,c,{d,e,f}>, <d,e,f>} = <{a,b,d}, {<a,b,d>,c,e}, f>
inline bool dual_heptagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(0, a, c.op(1, b, x, c.op(0, d, e, f)), c.op(1, d, e, f)) ==
           c.op(1, c.op(0, a, b, d), c.op(0, c.op(1, a, b, d), x, e), f);
}
// <a, <b,c,{d,e,f}>, <d,e,f>> = <<a,b,d>, c, e>
inline bool dual_heptagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    return c.op(1, a, c.op(1, b, x, c.op(0, d, e, f)), c.op(1, d, e, f)) ==
           c.op(1, c.op(1, a, b, d), x, e);
}
// {[a,<b,c,{d,e,f}>,<d,e,f>], [b,c,{d,e,f}], [d,e,f]} = [{a,b,d}, {<a,b,d>,c,e}, f]
inline bool dual_heptagon_4(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value U = c.op(0, d, e, f);
    return c.op(0, c.op(2, a, c.op(1, b, x, U), c.op(1, d, e, f)), c.op(2, b, x, U),
                c.op(2, d, e, f)) ==
           c.op(2, c.op(0, a, b, d), c.op(0, c.op(1, a, b, d), x, e), f);
}
// <[a,<b,c,{d,e,f}>,<d,e,f>], [b,c,{d,e,f}], [d,e,f]> = [<a,b,d>, c, e]
inline bool dual_heptagon_5(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value U = c.op(0, d, e, f);
    return c.op(1, c.op(2, a, c.op(1, b, x, U), c.op(1, d, e, f)), c.op(2, b, x, U),
                c.op(2, d, e, f)) == c.op(2, c.op(1, a, b, d), x, e);
}
// [[a,<b,c,{d,e,f}>,<d,e,f>], [b,c,{d,e,f}], [d,e,f]] = [a,b,d]
inline bool dual_heptagon_6(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value U = c.op(0, d, e, f);
    return c.op(2, c.op(2, a, c.op(1, b, x, U), c.op(1, d, e, f)), c.op(2, b, x, U),
                c.op(2, d, e, f)) == c.op(2, a, b, d);
}

// ---- dual octagon: ~T(a,b,c) = ({..}, <..>, [..], |..|) -----------------
// heptagon conditions hold for components (0, 1, 2); the fourth operation
// satisfies, with B1 = |a,[b,c,<d,e,f>],[d,e,f]|, B2 = |b,c,<d,e,f>|,
// B3 = |d,e,f|:
// {B1,B2,B3} = |{a,b,d}, {[a,b,d],c,e}, {<a,b,d>,<[a,b,d],c,e>,f}|
inline bool dual_octagon_1(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value D = c.op(1, d, e, f);
    const Value B1 = c.op(3, a, c.op(2, b, x, D), c.op(2, d, e, f));
    const Value B2 = c.op(3, b, x, D);
    const Value B3 = c.op(3, d, e, f);
    return c.op(0, B1, B2, B3) ==
           c.op(3, c.op(0, a, b, d), c.op(0, c.op(2, a, b, d), x, e),
                c.op(0, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f));
}
// <B1,B2,B3> = |<a,b,d>, <[a,b,d],c,e>, f|
inline bool dual_octagon_2(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value D = c.op(1, d, e, f);
    const Value B1 = c.op(3, a, c.op(2, b, x, D), c.op(2, d, e, f));
    const Value B2 = c.op(3, b, x, D);
    const Value B3 = c.op(3, d, e, f);
    return c.op(1, B1, B2, B3) == c.op(3, c.op(1, a, b, d), c.op(1, c.op(2, a, b, d), x, e), f);
}
// [B1,B2,B3] = |[a,b,d], c, e|
inline bool dual_octagon_3(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value D = c.op(1, d, e, f);
    const Value B1 = c.op(3, a, c.op(2, b, x, D), c.op(2, d, e, f));
    const Value B2 = c.op(3, b, x, D);
    const Value B3 = c.op(3, d, e, f);
    return c.op(2, B1, B2, B3) == c.op(3, c.op(2, a, b, d), x, e);
}
// |B1,B2,B3| = |a,b,d|
inline bool dual_octagon_4(Ctx& c, const Value* v) {
    const Value a = v[0], b = v[1], x = v[2], d = v[3], e = v[4], f = v[5];
    const Value D = c.op(1, d, e, f);
    const Value B1 = c.op(3, a, c.op(2, b, x, D), c.op(2, d, e, f));
    const Value B2 = c.op(3, b, x, D);
    const Value B3 = c.op(3, d, e, f);
    return c.op(3, B1, B2, B3) == c.op(3, a, b, d);
}

}  // namespace cond

// The condition system for the single-map (dual) N-gon equation, N <= 8.
inline const cond::ConditionSystem& condition_system(int n, bool dual) {
    using namespace cond;
    static const ConditionSystem trigon{1, {trigon_1}};
    static const ConditionSystem tetragon{3, {tetragon_1}};
    static const ConditionSystem pentagon{3, {pentagon_1, pentagon_2, pentagon_3}};
    static const ConditionSystem hexagon{6, {hexagon_1, hexagon_2, hexagon_3}};
    static const ConditionSystem heptagon{
        6, {heptagon_hex_1, heptagon_hex_2, heptagon_hex_3, heptagon_1, heptagon_2, heptagon_3}};
    static const ConditionSystem octagon{
        10, {octagon_1, octagon_2, octagon_3, octagon_4, octagon_5, octagon_6}};
    static const ConditionSystem d_trigon{1, {dual_trigon_1}};
    static const ConditionSystem d_tetragon{1,
                                            {dual_tetragon_1, dual_tetragon_2, dual_tetragon_3}};
    static const ConditionSystem d_pentagon{3,
                                            {dual_pentagon_1, dual_pentagon_2, dual_pentagon_3}};
    static const ConditionSystem d_hexagon{3,
                                           {dual_hexagon_pent_1, dual_hexagon_pent_2,
                                            dual_hexagon_pent_3, dual_hexagon_1, dual_hexagon_2,
                                            dual_hexagon_3}};
    static const ConditionSystem d_heptagon{
        6, {dual_heptagon_1, dual_heptagon_2, dual_heptagon_3, dual_heptagon_4, dual_heptagon_5,
            dual_heptagon_6}};
    static const ConditionSystem d_octagon{
        6, {heptagon_hex_1, heptagon_hex_2, heptagon_hex_3, heptagon_1, heptagon_2, heptagon_3,
            dual_octagon_1, dual_octagon_2, dual_octagon_3, dual_octagon_4}};

    if (!dual) {
        switch (n) {
            case 3: return trigon;
            case 4: return tetragon;
            case 5: return pentagon;
            case 6: return hexagon;
            case 7: return heptagon;
            case 8: return octagon;
        }
    } else {
        switch (n) {
            case 3: return d_trigon;
            case 4: return d_tetragon;
            case 5: return d_pentagon;
            case 6: return d_hexagon;
            case 7: return d_heptagon;
            case 8: return d_octagon;
        }
    }
    throw std::invalid_argument("condition_system: no unpacked conditions for this N");
}

// One named component operation of a map, as a (k_in -> 1) table.
inline FiniteMap map_component(const FiniteMap& t, int comp) {
    if (comp < 0 || comp >= t.k_out) throw std::invalid_argument("map_component: no such slot");
    FiniteMap out(t.q, t.k_in, 1);
    for (std::size_t r = 0; r < t.rows(); ++r) out.table[r] = t.row(r)[comp];
    return out;
}

// Reassembles component operations into one map; inverse of map_component.
inline FiniteMap assemble_components(const std::vector<FiniteMap>& comps) {
    if (comps.empty()) throw std::invalid_argument("assemble_components: empty");
    FiniteMap out(comps[0].q, comps[0].k_in, static_cast<int>(comps.size()));
    for (const FiniteMap& c : comps)
        if (c.q != out.q || c.k_in != out.k_in || c.k_out != 1)
            throw std::invalid_argument("assemble_components: shape mismatch");
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t i = 0; i < comps.size(); ++i) out.row(r)[i] = comps[i].table[r];
    return out;
}

// Exhaustive condition check over the whole carrier.
inline bool conditions_check(int n, bool dual, const FiniteMap& t) {
    auto [k_in, k_out] = map_arity(n, dual);
    if (t.k_in != k_in || t.k_out != k_out)
        throw std::invalid_argument("conditions_check: map arity does not fit the equation");
    const cond::ConditionSystem& sys = condition_system(n, dual);
    cond::Ctx ctx;
    ctx.table = t.table.data();
    ctx.q = t.q;
    ctx.k_out = t.k_out;
    std::vector<Value> vars(static_cast<std::size_t>(sys.var_count), 0);
    do {
        for (cond::ConditionFn fn : sys.conditions)
            if (!fn(ctx, vars.data())) return false;
    } while (next_tuple(vars, t.q));
    return true;
}

}  // namespace polyeq
