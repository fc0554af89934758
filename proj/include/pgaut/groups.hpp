#pragma once

// Exact normal-form arithmetic for the three groups under study and for
// Heisenberg matrix groups.
//
//   S = < a, b, c |  a^(p^i or p^(n-i)) = b^(p^(n-i)) = c^(p^(n-1)) = 1,
//                    [a,b] = c^(p^dshift),  c a c^-1 = a^(1+ep),
//                    c b c^-1 = b^(1+dp) >
//   T = < a, b, d |  a, b as above, d^(same order as a) = 1, [a,b] = d, d central >
//   U = < x, y    |  x^(p^n) = y^(p^(n-i)) = 1,  y x y^-1 = x^(1+p^i) >
//
// Every element is stored as its unique exponent tuple; multiplication is
// collection into a-then-b-then-c order.  The commutator generator d is
// central (asserted by tests, regime-dependent), which the collection
// exploits.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "pgaut/modarith.hpp"

namespace pgaut {

namespace detail {
inline u64 splitmix(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
inline u64 hash_combine(u64 seed, u64 v) { return splitmix(seed ^ (v + 0x9e3779b97f4a7c15ULL)); }
}  // namespace detail

struct SElement {
    i64 a = 0, b = 0, c = 0;
    friend auto operator<=>(const SElement&, const SElement&) = default;
};

struct TElement {
    i64 a = 0, b = 0, d = 0;
    friend auto operator<=>(const TElement&, const TElement&) = default;
};

struct UElement {
    i64 x = 0, y = 0;
    friend auto operator<=>(const UElement&, const UElement&) = default;
};

// Upper unitriangular 3x3 matrix over (R, M): u, v in M, r in R.
struct HeisElement {
    i64 u = 0, v = 0, r = 0;
    friend auto operator<=>(const HeisElement&, const HeisElement&) = default;
};

struct ElemHash {
    size_t operator()(const SElement& e) const {
        u64 h = detail::hash_combine(detail::hash_combine(static_cast<u64>(e.a), static_cast<u64>(e.b)),
                                     static_cast<u64>(e.c));
        return static_cast<size_t>(h);
    }
    size_t operator()(const TElement& e) const {
        u64 h = detail::hash_combine(detail::hash_combine(static_cast<u64>(e.a), static_cast<u64>(e.b)),
                                     static_cast<u64>(e.d));
        return static_cast<size_t>(h);
    }
    size_t operator()(const UElement& e) const {
        return static_cast<size_t>(detail::hash_combine(static_cast<u64>(e.x), static_cast<u64>(e.y)));
    }
    size_t operator()(const HeisElement& e) const {
        u64 h = detail::hash_combine(detail::hash_combine(static_cast<u64>(e.u), static_cast<u64>(e.v)),
                                     static_cast<u64>(e.r));
        return static_cast<size_t>(h);
    }
};

inline constexpr u64 kEnumerationCap = 1u << 22;

class SGroup {
public:
    using Elem = SElement;
    static constexpr int num_gens = 3;

    explicit SGroup(GroupParams par);

    const GroupParams& params() const { return par_; }

    Elem id() const { return {0, 0, 0}; }
    Elem gen_a() const { return {1, 0, 0}; }
    Elem gen_b() const { return {0, 1, 0}; }
    Elem gen_c() const { return {0, 0, 1}; }
    Elem gen_d() const { return {0, 0, par_.dshift_pow}; }  // the central commutator
    std::array<Elem, 3> generators() const { return {gen_a(), gen_b(), gen_c()}; }
    std::vector<Elem> generator_list() const { return {gen_a(), gen_b(), gen_c()}; }
    Elem make(i64 a, i64 b, i64 c) const;

    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(const Elem& x, i64 k) const;
    Elem conj(const Elem& g, const Elem& x) const { return mul(mul(g, x), inv(g)); }
    Elem comm(const Elem& x, const Elem& y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

    u64 order() const;                   // closed form
    i64 elem_order(const Elem& x) const;
    std::vector<Elem> elements() const;  // all normal forms, lexicographic

    bool in_t(const Elem& x) const { return x.c % par_.dshift_pow == 0; }

    // image of x = a^xa b^xb c^xc under generator images, in any codomain Ops
    template <class Ops>
    typename Ops::Elem apply_images(const Ops& ops, const std::array<typename Ops::Elem, 3>& img,
                                    const Elem& x) const {
        auto r = ops.mul(ops.pow(img[0], x.a), ops.pow(img[1], x.b));
        return ops.mul(r, ops.pow(img[2], x.c));
    }

    // the defining relations, evaluated on candidate generator images in Ops
    template <class Ops>
    bool presentation_holds(const Ops& ops, const std::array<typename Ops::Elem, 3>& img) const {
        const auto& A = img[0];
        const auto& B = img[1];
        const auto& C = img[2];
        if (!(ops.pow(A, par_.mod_a) == ops.id())) return false;
        if (!(ops.pow(B, par_.mod_b) == ops.id())) return false;
        if (!(ops.pow(C, par_.mod_c) == ops.id())) return false;
        auto comm_ab = ops.mul(ops.mul(A, B), ops.mul(ops.inv(A), ops.inv(B)));
        if (!(comm_ab == ops.pow(C, par_.dshift_pow))) return false;
        auto ic = ops.inv(C);
        if (!(ops.mul(ops.mul(C, A), ic) == ops.pow(A, 1 + par_.e * par_.p))) return false;
        if (!(ops.mul(ops.mul(C, B), ic) == ops.pow(B, 1 + par_.d * par_.p))) return false;
        return true;
    }

    // conjugation exponent tables: (1+ep)^c and (1+dp)^c
    i64 conj_a_exp(i64 c) const { return pow_table_a_.empty() ? pow_mod(1 + par_.e * par_.p, c, par_.mod_a) : pow_table_a_[static_cast<size_t>(c)]; }
    i64 conj_b_exp(i64 c) const { return pow_table_b_.empty() ? pow_mod(1 + par_.d * par_.p, c, par_.mod_b) : pow_table_b_[static_cast<size_t>(c)]; }

private:
    GroupParams par_;
    std::vector<i64> pow_table_a_;  // (1+ep)^c mod mod_a, c in [0, mod_c)
    std::vector<i64> pow_table_b_;  // (1+dp)^c mod mod_b
};

class TGroup {
public:
    using Elem = TElement;
    static constexpr int num_gens = 3;

    explicit TGroup(GroupParams par) : par_(std::move(par)) {}

    const GroupParams& params() const { return par_; }

    Elem id() const { return {0, 0, 0}; }
    Elem gen_a() const { return {1, 0, 0}; }
    Elem gen_b() const { return {0, 1, 0}; }
    Elem gen_d() const { return {0, 0, 1}; }
    std::array<Elem, 3> generators() const { return {gen_a(), gen_b(), gen_d()}; }
    std::vector<Elem> generator_list() const { return {gen_a(), gen_b(), gen_d()}; }

    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(const Elem& x, i64 k) const;
    Elem conj(const Elem& g, const Elem& x) const { return mul(mul(g, x), inv(g)); }
    Elem comm(const Elem& x, const Elem& y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

    u64 order() const;
    i64 elem_order(const Elem& x) const;
    std::vector<Elem> elements() const;

    template <class Ops>
    typename Ops::Elem apply_images(const Ops& ops, const std::array<typename Ops::Elem, 3>& img,
                                    const Elem& x) const {
        auto r = ops.mul(ops.pow(img[0], x.a), ops.pow(img[1], x.b));
        return ops.mul(r, ops.pow(img[2], x.d));
    }

    template <class Ops>
    bool presentation_holds(const Ops& ops, const std::array<typename Ops::Elem, 3>& img) const {
        const auto& A = img[0];
        const auto& B = img[1];
        const auto& D = img[2];
        if (!(ops.pow(A, par_.mod_a) == ops.id())) return false;
        if (!(ops.pow(B, par_.mod_b) == ops.id())) return false;
        if (!(ops.pow(D, par_.mod_d) == ops.id())) return false;
        auto comm_ab = ops.mul(ops.mul(A, B), ops.mul(ops.inv(A), ops.inv(B)));
        if (!(comm_ab == D)) return false;
        if (!(ops.mul(A, D) == ops.mul(D, A))) return false;
        if (!(ops.mul(B, D) == ops.mul(D, B))) return false;
        return true;
    }

private:
    GroupParams par_;
};

class UGroup {
public:
    using Elem = UElement;
    static constexpr int num_gens = 2;

    explicit UGroup(GroupParams par);

    const GroupParams& params() const { return par_; }
    i64 mod_x() const { return par_.pn; }
    i64 mod_y() const { return par_.mod_b; }  // p^(n-i)

    Elem id() const { return {0, 0}; }
    Elem gen_x() const { return {1, 0}; }
    Elem gen_y() const { return {0, 1}; }
    std::array<Elem, 2> generators() const { return {gen_x(), gen_y()}; }
    std::vector<Elem> generator_list() const { return {gen_x(), gen_y()}; }

    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(const Elem& x, i64 k) const;
    Elem conj(const Elem& g, const Elem& x) const { return mul(mul(g, x), inv(g)); }
    Elem comm(const Elem& x, const Elem& y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

    u64 order() const;
    i64 elem_order(const Elem& z) const;          // iterated multiplication
    i64 elem_order_formula(i64 a, i64 b) const;   // p^max(n - v_p(a), n-i - v_p(b), 0)
    std::vector<Elem> elements() const;

    // whether <x^a y^b> is normal, by brute conjugation against every element
    bool cyclic_subgroup_normal(i64 a, i64 b) const;

    template <class Ops>
    typename Ops::Elem apply_images(const Ops& ops, const std::array<typename Ops::Elem, 2>& img,
                                    const Elem& z) const {
        return ops.mul(ops.pow(img[0], z.x), ops.pow(img[1], z.y));
    }

    template <class Ops>
    bool presentation_holds(const Ops& ops, const std::array<typename Ops::Elem, 2>& img) const {
        const auto& X = img[0];
        const auto& Y = img[1];
        if (!(ops.pow(X, par_.pn) == ops.id())) return false;
        if (!(ops.pow(Y, mod_y()) == ops.id())) return false;
        if (!(ops.mul(ops.mul(Y, X), ops.inv(Y)) == ops.pow(X, 1 + par_.ppow[par_.i]))) return false;
        return true;
    }

private:
    GroupParams par_;
    std::vector<i64> pow_table_;  // (1+p^i)^y mod p^n, y in [0, mod_y)
};

// Heis(R, M) with R = Z/r_mod, M = Z/m_mod; requires m_mod | r_mod so that
// M is an R-module.
class HeisGroup {
public:
    using Elem = HeisElement;
    static constexpr int num_gens = 3;

    HeisGroup(i64 m_mod, i64 r_mod);

    i64 m_mod() const { return m_; }
    i64 r_mod() const { return r_; }

    Elem id() const { return {0, 0, 0}; }
    std::array<Elem, 3> generators() const { return {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}; }

    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(const Elem& x, i64 k) const;

    u64 order() const { return static_cast<u64>(m_) * static_cast<u64>(m_) * static_cast<u64>(r_); }
    std::vector<Elem> elements() const;

private:
    i64 m_, r_;
};

// Closed-form orders (a property test confirms each equals the count of
// distinct normal forms).
enum class GroupKind { S, T, U };
u64 group_order(const GroupParams& par, GroupKind which);

// T as a normal subgroup of S: a^a b^b d^d  ->  a^a b^b c^(d * p^dshift)
SElement embed_t_in_s(const TElement& t, const GroupParams& par);

// The explicit isomorphism T -> Heis(Z/p^eA, Z/p^(n-i)) of the matrix model:
// a -> E12-type, b -> E23-type, d -> E13-type.
HeisElement t_to_heisenberg(const TElement& t, const GroupParams& par);
HeisGroup heisenberg_model(const GroupParams& par);

}  // namespace pgaut
