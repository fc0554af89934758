#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pgaut/groups.hpp"
#include "pgaut/subgroup.hpp"

using namespace pgaut;

namespace {
// order by plain repeated multiplication, as an independent oracle
template <class G>
i64 order_by_iteration(const G& g, const typename G::Elem& x) {
    auto acc = x;
    i64 k = 1;
    while (!(acc == g.id())) {
        acc = g.mul(acc, x);
        ++k;
    }
    return k;
}
}  // namespace

TEST_CASE("S collection product at (3,3,1)") {
    SGroup S(GroupParams::make(3, 3, 1));
    CHECK(S.mul({0, 1, 0}, {1, 0, 0}) == SElement{1, 1, 6});  // b a = a b d^-1
    CHECK(S.mul({0, 0, 1}, {0, 1, 0}) == SElement{0, 4, 1});  // c b c^-1 = b^(1+dp)
    CHECK(S.mul(S.id(), {2, 5, 7}) == SElement{2, 5, 7});
    CHECK(S.comm(S.gen_a(), S.gen_b()) == SElement{0, 0, 3});  // [a,b] = c^(p^(n-i-1))
    CHECK(S.inv(S.id()) == S.id());
    CHECK(S.pow(SElement{0, 1, 1}, 9) == S.id());  // order divides lcm of generator orders
    for (const auto& x : S.elements()) CHECK(S.mul(x, S.inv(x)) == S.id());
}

TEST_CASE("element orders in S") {
    SGroup S(GroupParams::make(3, 3, 1));
    CHECK(S.elem_order(S.gen_c()) == 9);
    CHECK(S.elem_order(S.id()) == 1);
    auto ab = S.mul(S.gen_a(), S.gen_b());
    CHECK(S.elem_order(ab) == order_by_iteration(S, ab));
    for (const auto& x : S.elements()) CHECK(S.elem_order(x) == order_by_iteration(S, x));
}

TEST_CASE("closed-form group orders match enumeration") {
    struct Row {
        i64 p;
        int n, i;
        u64 s, t, u;
    };
    // |S|: p^(2n-1) low, p^(3n-2i-1) high; |T|: p^(n+i) low, p^(3(n-i)) high; |U| = p^(2n-i)
    for (Row r : {Row{3, 3, 1, 243, 81, 243}, Row{3, 4, 2, 2187, 729, 729}, Row{3, 3, 2, 81, 27, 81},
                  Row{3, 2, 1, 27, 27, 27}, Row{3, 4, 1, 2187, 243, 2187}}) {
        auto par = GroupParams::make(r.p, r.n, r.i);
        CHECK(group_order(par, GroupKind::S) == r.s);
        CHECK(group_order(par, GroupKind::T) == r.t);
        CHECK(group_order(par, GroupKind::U) == r.u);
        CHECK(SGroup(par).elements().size() == r.s);
        CHECK(TGroup(par).elements().size() == r.t);
        CHECK(UGroup(par).elements().size() == r.u);
    }
}

TEST_CASE("presentations hold on the canonical generators") {
    for (auto [p, n, i] : {std::tuple<i64, int, int>{3, 3, 1}, {3, 4, 2}, {3, 3, 2}, {3, 2, 1}, {5, 3, 1}}) {
        auto par = GroupParams::make(p, n, i);
        SGroup S(par);
        TGroup T(par);
        UGroup U(par);
        CHECK(S.presentation_holds(S, S.generators()));
        CHECK(T.presentation_holds(T, T.generators()));
        CHECK(U.presentation_holds(U, U.generators()));
    }
}

TEST_CASE("associativity, sampled at larger sizes") {
    std::mt19937_64 rng(77);
    for (auto [p, n, i] : {std::tuple<i64, int, int>{3, 4, 2}, {3, 4, 1}}) {
        auto par = GroupParams::make(p, n, i);
        SGroup S(par);
        auto elems = S.elements();
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        for (int k = 0; k < 20000; ++k) {
            const auto& x = elems[pick(rng)];
            const auto& y = elems[pick(rng)];
            const auto& z = elems[pick(rng)];
            CHECK(S.mul(S.mul(x, y), z) == S.mul(x, S.mul(y, z)));
        }
    }
}

TEST_CASE("T embeds in S as the subgroup with c-part divisible by p^dshift") {
    auto par = GroupParams::make(3, 3, 1);
    SGroup S(par);
    TGroup T(par);
    CHECK(embed_t_in_s(T.gen_d(), par) == SElement{0, 0, 3});
    CHECK(embed_t_in_s(T.id(), par) == S.id());
    CHECK(embed_t_in_s(TElement{1, 1, 1}, par) == SElement{1, 1, 3});
    for (const auto& x : T.elements())
        for (const auto& y : T.elements())
            CHECK(embed_t_in_s(T.mul(x, y), par) == S.mul(embed_t_in_s(x, par), embed_t_in_s(y, par)));
}

TEST_CASE("T is the Heisenberg matrix group") {
    for (auto [p, n, i] : {std::tuple<i64, int, int>{3, 3, 2}, {3, 3, 1}}) {
        auto par = GroupParams::make(p, n, i);
        TGroup T(par);
        HeisGroup H = heisenberg_model(par);
        CHECK(H.order() == T.order());
        CHECK(t_to_heisenberg(T.gen_a(), par) == HeisElement{1, 0, 0});
        CHECK(t_to_heisenberg(T.id(), par) == H.id());
        std::unordered_set<HeisElement, ElemHash> image;
        for (const auto& x : T.elements()) {
            image.insert(t_to_heisenberg(x, par));
            for (const auto& y : T.elements())
                CHECK(t_to_heisenberg(T.mul(x, y), par) ==
                      H.mul(t_to_heisenberg(x, par), t_to_heisenberg(y, par)));
        }
        CHECK(image.size() == T.order());
    }
}

TEST_CASE("U semidirect product arithmetic and orders") {
    auto par = GroupParams::make(3, 3, 1);
    UGroup U(par);
    CHECK(U.elem_order({1, 1}) == 27);
    CHECK(U.elem_order(U.id()) == 1);
    CHECK(U.elem_order({3, 1}) == 9);
    CHECK(U.elem_order_formula(1, 1) == 27);
    CHECK(U.elem_order_formula(3, 1) == 9);
    for (i64 a = 1; a <= par.pn; ++a)
        for (i64 b = 1; b <= U.mod_y(); ++b)
            CHECK(U.elem_order({mod_reduce(a, par.pn), mod_reduce(b, U.mod_y())}) == U.elem_order_formula(a, b));
    // conjugation relation y x y^-1 = x^(1+p^i)
    CHECK(U.conj(U.gen_y(), U.gen_x()) == UElement{4, 0});
}

TEST_CASE("normality of cyclic subgroups of U") {
    UGroup U(GroupParams::make(3, 3, 1));
    CHECK(U.cyclic_subgroup_normal(1, 3));   // v3(3) = 1 >= n-2i = 1
    CHECK(!U.cyclic_subgroup_normal(1, 1));  // v3(1) = 0 < 1
    CHECK(U.cyclic_subgroup_normal(1, 9));   // <x> itself
    CHECK_THROWS_AS(U.cyclic_subgroup_normal(3, 1), std::invalid_argument);
}

TEST_CASE("subgroup closure") {
    auto par = GroupParams::make(3, 3, 1);
    SGroup S(par);
    auto only_id = subgroup_closure<SGroup, ElemHash>(S, {S.id()});
    CHECK(only_id.size() == 1);
    // closure of {a^p, b^p, c^(p^(n-i-1))}: a^3 = 1 and the two survivors are
    // central of order 3, so the subgroup has order 9 and equals [S,S]
    auto der_gens = subgroup_closure<SGroup, ElemHash>(
        S, {S.pow(S.gen_a(), 3), S.pow(S.gen_b(), 3), S.pow(S.gen_c(), 3)});
    CHECK(der_gens.size() == 9);
    auto der = derived_subgroup<SGroup, ElemHash>(S, S.generator_list());
    CHECK(der == der_gens);
    auto whole = subgroup_closure<SGroup, ElemHash>(S, S.generator_list());
    CHECK(whole.size() == S.order());
    CHECK_THROWS_AS((subgroup_closure<SGroup, ElemHash>(S, S.generator_list(), 100)), ResourceLimitError);
}

TEST_CASE("centers") {
    {
        auto par = GroupParams::make(3, 4, 2);
        SGroup S(par);
        auto z = centralizer_in(S, S.elements(), S.generator_list());
        auto expected = subgroup_closure<SGroup, ElemHash>(S, {S.pow(S.gen_c(), 3)});
        CHECK(z.size() == 9);
        CHECK(z == expected);
    }
    {
        auto par = GroupParams::make(3, 3, 1);
        SGroup S(par);
        auto z = centralizer_in(S, S.elements(), S.generator_list());
        auto expected = subgroup_closure<SGroup, ElemHash>(S, {S.gen_d(), S.pow(S.gen_b(), 3)});
        CHECK(z.size() == 9);
        CHECK(z == expected);
    }
}

TEST_CASE("p-th power subgroup and Frattini rank") {
    auto par = GroupParams::make(3, 3, 1);
    SGroup S(par);
    auto sp = pth_power_subgroup<SGroup, ElemHash>(S, S.elements(), 3);
    std::vector<SElement> expected;
    for (i64 a = 0; a < 3; a += 3)
        for (i64 b = 0; b < 9; b += 3)
            for (i64 c = 0; c < 9; c += 3) expected.push_back({a, b, c});
    std::sort(expected.begin(), expected.end());
    CHECK(sp == expected);

    CHECK(frattini_rank_pgroup<SGroup, ElemHash>(S, S.generator_list(), S.order(), 3) == 3);
    SGroup heis(GroupParams::make(3, 2, 1));
    CHECK(frattini_rank_pgroup<SGroup, ElemHash>(heis, heis.generator_list(), heis.order(), 3) == 2);
}

TEST_CASE("p-th power shape of (A B D C)^p") {
    auto par = GroupParams::make(3, 4, 1);
    SGroup S(par);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<i64> ra(0, par.mod_a - 1), rb(0, par.mod_b - 1), rd(0, par.mod_d - 1),
        rc(0, par.mod_c - 1);
    i64 step = par.pp(par.dshift + 1);
    for (int k = 0; k < 1000; ++k) {
        i64 ec = rc(rng);
        SElement w = S.mul(S.mul(SElement{ra(rng), 0, 0}, SElement{0, rb(rng), 0}),
                           S.mul(SElement{0, 0, mod_reduce(rd(rng) * par.dshift_pow, par.mod_c)},
                                 SElement{0, 0, ec}));
        SElement wp = S.pow(w, 3);
        CHECK(wp.a % 3 == 0);
        CHECK(wp.b % 3 == 0);
        CHECK(mod_reduce(wp.c - 3 * ec, par.mod_c) % step == 0);
    }
}

TEST_CASE("2i = n boundary: both presentations coincide") {
    auto par = GroupParams::make(3, 4, 2);
    SGroup S(par);
    auto c_ab = S.comm(S.gen_a(), S.gen_b());
    CHECK(c_ab == S.pow(S.gen_c(), par.pp(par.n - par.i - 1)));
    CHECK(c_ab == S.pow(S.gen_c(), par.pp(par.i - 1)));
}

TEST_CASE("n = 2 edge: S = T is the Heisenberg group of order p^3") {
    auto par = GroupParams::make(3, 2, 1);
    SGroup S(par);
    CHECK(S.order() == 27);
    CHECK(par.dshift == 0);          // the commutator generator is c itself
    CHECK(S.gen_d() == S.gen_c());
    for (const auto& x : S.elements()) CHECK(S.in_t(x));
    // exponent p
    for (const auto& x : S.elements()) CHECK(S.pow(x, 3) == S.id());
}

TEST_CASE("enumeration guard") {
    auto par = GroupParams::make(3, 13, 6);  // |S| = 3^25, far over the enumeration cap
    SGroup S(par);
    CHECK_THROWS_AS(S.elements(), ResourceLimitError);
}

TEST_CASE("central commutator generator is central") {
    for (auto [p, n, i] : {std::tuple<i64, int, int>{3, 3, 1}, {3, 4, 2}, {3, 4, 1}, {3, 3, 2}}) {
        auto par = GroupParams::make(p, n, i);
        SGroup S(par);
        auto d = S.gen_d();
        for (const auto& g : S.generators()) CHECK(S.mul(d, g) == S.mul(g, d));
    }
}
