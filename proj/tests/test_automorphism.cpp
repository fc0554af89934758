#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "pgaut/automorphism.hpp"

using namespace pgaut;

namespace {
GenMap<SGroup> named(const SGroup& S, SFamily fam, const AppendixConstants& k, const std::string& name) {
    for (auto& na : named_s_generators(S, fam, k))
        if (na.name == name) return na.map;
    throw std::logic_error("no such named map " + name);
}
}  // namespace

TEST_CASE("apply and verification flags") {
    auto par = GroupParams::make(3, 3, 1);
    SGroup S(par);
    AutOps<SGroup> ops(S);
    auto idm = ops.id();
    for (const auto& x : S.elements()) CHECK(ops.apply(idm, x) == x);

    auto inner_c = inner(S, S.gen_c());
    CHECK(ops.apply(inner_c, S.gen_b()) == SElement{0, 4, 0});  // b^(1+dp)

    auto k = derive_appendix_constants(par);
    auto U = named(S, SFamily::LowRegime, k, "U");
    CHECK(ops.apply(U, S.gen_b()) == SElement{0, 1, 1});  // b -> b c^(p^(n-i-2))

    GenMap<SGroup> raw;
    raw.img = S.generators();
    CHECK_THROWS_AS(ops.apply(raw, S.gen_a()), std::logic_error);
}

TEST_CASE("homomorphism and automorphism checks") {
    auto par = GroupParams::make(3, 3, 1);
    SGroup S(par);
    GenMap<SGroup> idm;
    idm.img = S.generators();
    CHECK(is_homomorphism(S, idm));
    CHECK(is_automorphism(S, idm));

    GenMap<SGroup> csq;  // a, b, c -> c^2 breaks c b c^-1 = b^(1+dp)
    csq.img = {S.gen_a(), S.gen_b(), S.pow(S.gen_c(), 2)};
    CHECK(!is_homomorphism(S, csq));

    auto k = derive_appendix_constants(par);
    auto U = named(S, SFamily::LowRegime, k, "U");
    CHECK(is_homomorphism(S, U));
    CHECK(is_automorphism(S, U));

    GenMap<SGroup> trivial;  // constant map: a homomorphism but not surjective
    trivial.img = {S.id(), S.id(), S.id()};
    CHECK(is_homomorphism(S, trivial));
    CHECK(!is_automorphism(S, trivial));
    CHECK_THROWS_AS(make_automorphism(S, trivial.img, "trivial"), std::logic_error);
}

TEST_CASE("burnside fast path agrees with the closure test") {
    for (auto [p, n, i] : {std::tuple<i64, int, int>{3, 3, 1}, {3, 3, 2}, {3, 2, 1}}) {
        auto par = GroupParams::make(p, n, i);
        SGroup S(par);
        auto elems = S.elements();
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        for (int t = 0; t < 300; ++t) {
            std::array<SElement, 3> img{elems[pick(rng)], elems[pick(rng)], elems[pick(rng)]};
            std::vector<SElement> gv(img.begin(), img.end());
            CHECK(generates_burnside(S, img) ==
                  generates_group<SGroup, ElemHash>(S, gv, S.order(), par.p));
        }
    }
}

TEST_CASE("composition, inverse and order") {
    auto par = GroupParams::make(3, 3, 2);
    SGroup S(par);
    AutOps<SGroup> ops(S);
    auto k = derive_appendix_constants(par);
    auto F = named(S, SFamily::TopIndex, k, "F");
    auto D = named(S, SFamily::TopIndex, k, "D");
    CHECK(ops.mul(F, ops.id()) == F);
    CHECK(ops.mul(ops.inv(F), F) == ops.id());
    CHECK(ops.order_of(F) == par.p - 1);

    // apply respects composition, exhaustively at this size
    auto FD = ops.mul(F, D);
    for (const auto& x : S.elements()) CHECK(ops.apply(FD, x) == ops.apply(F, ops.apply(D, x)));
}

TEST_CASE("inner automorphisms") {
    auto par = GroupParams::make(3, 3, 1);
    SGroup S(par);
    TGroup T(par);
    UGroup Ug(par);
    CHECK(inner(S, S.id()) == AutOps<SGroup>(S).id());
    // inner(a)(b) = b d in T
    AutOps<TGroup> topsT(T);
    CHECK(topsT.apply(inner(T, T.gen_a()), T.gen_b()) == TElement{0, 1, 1});
    // inner(y)(x) = x^(1+p^i) in U
    AutOps<UGroup> topsU(Ug);
    CHECK(topsU.apply(inner(Ug, Ug.gen_y()), Ug.gen_x()) == UElement{4, 0});

    // |Inn(S)| = |S| / |Z(S)|
    auto inns = aut_closure(S, {inner(S, S.gen_a()), inner(S, S.gen_b()), inner(S, S.gen_c())});
    auto z = centralizer_in(S, S.elements(), S.generator_list());
    CHECK(inns.size() * z.size() == S.order());
    CHECK(inns.size() == 27);
}

TEST_CASE("named families: regime gating and displayed images") {
    auto k331 = derive_appendix_constants(GroupParams::make(3, 3, 1));
    SGroup s331(GroupParams::make(3, 3, 1));
    CHECK_THROWS_AS(named_s_generators(s331, SFamily::HighRegime, k331), std::domain_error);
    CHECK_THROWS_AS(named_s_generators(s331, SFamily::TopIndex, k331), std::domain_error);
    CHECK(family_for(s331.params()) == SFamily::LowRegime);

    auto V = named(s331, SFamily::LowRegime, k331, "V");
    CHECK(V.img[0] == SElement{1, 0, 0});
    CHECK(V.img[1] == SElement{0, 4, 0});  // b^(1+p^(n-i-1))
    CHECK(V.img[2] == SElement{0, 0, 4});

    SGroup s342(GroupParams::make(3, 4, 2));
    auto k342 = derive_appendix_constants(s342.params());
    CHECK(family_for(s342.params()) == SFamily::HighRegime);
    auto D = named(s342, SFamily::HighRegime, k342, "D");
    CHECK(D.img[0] == SElement{4, 0, 0});  // a^(1+p^(n-i-1))
    CHECK(D.img[1] == SElement{0, 1, 0});
    CHECK(D.img[2] == SElement{0, 0, 4});

    SGroup s332(GroupParams::make(3, 3, 2));
    CHECK(family_for(s332.params()) == SFamily::TopIndex);

    UGroup u331(GroupParams::make(3, 3, 1));
    auto uf = named_u_generators(u331, k331);
    CHECK(uf.alpha.img[0] == UElement{1, 3});  // x -> x y^(p^(n-2i))
    CHECK(uf.alpha.img[1] == UElement{0, 1});
    AutOps<UGroup> ops(u331);
    CHECK(ops.order_of(uf.alpha) == 3);  // p^i in the low regime
}

TEST_CASE("aut closure sizes and invariance under generator order") {
    SGroup S(GroupParams::make(3, 3, 2));
    auto k = derive_appendix_constants(S.params());
    auto fam = named_s_generators(S, SFamily::TopIndex, k);
    std::vector<GenMap<SGroup>> gens;
    for (auto& na : fam) gens.push_back(na.map);

    auto closure_trivial = aut_closure(S, {AutOps<SGroup>(S).id()});
    CHECK(closure_trivial.size() == 1);

    auto aut = aut_closure(S, gens);
    CHECK(aut.size() == 1296);  // p^(n+1)(p-1)^2(p+1)

    auto shuffled = gens;
    std::mt19937_64 rng(5);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto aut2 = aut_closure(S, shuffled);
    CHECK(aut.maps == aut2.maps);

    CHECK_THROWS_AS(aut_closure(S, gens, 100), ResourceLimitError);
}

TEST_CASE("kernels and quotients at (3,3,2)") {
    SGroup S(GroupParams::make(3, 3, 2));
    const auto& par = S.params();
    auto k = derive_appendix_constants(par);
    auto fam = named_s_generators(S, SFamily::TopIndex, k);
    std::vector<GenMap<SGroup>> gens;
    std::map<std::string, GenMap<SGroup>> m;
    for (auto& na : fam) {
        gens.push_back(na.map);
        m.emplace(na.name, na.map);
    }
    auto aut = aut_closure(S, gens);

    // maps fixing a and b pointwise = <G>, cyclic of order p^(n-2)
    auto ker = kernel_restriction_pointwise(S, aut);
    CHECK(ker.size() == 3);
    auto gcl = aut_closure(S, {m.at("G")});
    CHECK(ker.maps == gcl.maps);

    auto inn = aut_closure(S, {inner(S, S.gen_a()), inner(S, S.gen_b()), inner(S, S.gen_c())});
    CHECK(quotient_order(S, aut, inn) == 144);  // 1296 / 9

    // the mod-S^p kernel is closed under composition
    auto kg = kernel_mod_pth_powers(S, aut);
    AutOps<SGroup> ops(S);
    CHECK(par.p > 0);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<size_t> pick(0, kg.maps.size() - 1);
    for (int t = 0; t < 200; ++t) CHECK(kg.contains(ops.mul(kg.maps[pick(rng)], kg.maps[pick(rng)])));
}

TEST_CASE("frattini rank of automorphism subgroups") {
    SGroup S(GroupParams::make(3, 3, 2));
    AutOps<SGroup> ops(S);
    AutSet<SGroup> trivial;
    trivial.maps = {ops.id()};
    trivial.build_index();
    CHECK(frattini_rank_autset(S, trivial) == 0);

    auto inn = aut_closure(S, {inner(S, S.gen_a()), inner(S, S.gen_b()), inner(S, S.gen_c())});
    // Inn(S) = S/Z(S) = Heis(Z/p) here, so two generators
    CHECK(frattini_rank_autset(S, inn) == 2);
}

TEST_CASE("generator-map serialization invariants") {
    SGroup S(GroupParams::make(3, 3, 1));
    auto k = derive_appendix_constants(S.params());
    auto U = named(S, SFamily::LowRegime, k, "U");
    auto W = named(S, SFamily::LowRegime, k, "W");
    CHECK(U == U);
    CHECK(!(U == W));
    GenMapHash<SGroup> h;
    CHECK(h(U) != h(W));  // not guaranteed in general, but these differ
}
