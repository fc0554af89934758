#pragma once

// Exact modular arithmetic on prime-power moduli, p-adic valuations, and
// derivation of the numeric constants (d, e, g, h, t, ...) that the group
// constructions and automorphism families depend on.  All arithmetic is
// exact; intermediates go through 128-bit to avoid overflow.  Moduli are
// capped at 2^40 (desk scale), enforced where they are created.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgaut {

using i64 = long long;
using u64 = unsigned long long;

// Thrown when a configurable size/budget guard trips (exit code 3 in the CLI).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr i64 kMaxModulus = 1LL << 40;

bool is_prime(i64 m);

// p-adic valuation: largest a with p^a | m.  m == 0 is a domain error.
int vp(i64 m, i64 p);

i64 mod_reduce(i64 a, i64 m);           // least nonnegative residue
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);  // exp >= 0
i64 inv_mod(i64 a, i64 m);              // gcd(a, m) == 1
i64 ipow(i64 base, int exp);            // small exact power, overflow-checked

// Least k >= 1 with u^k == 1 mod m, for gcd(u, m) = 1 and m >= 2.
i64 unit_order(i64 u, i64 m);

// (1 + l p^a)^(c p^b) == 1 + c l p^(a+b)  mod p^(2a+b), for a,c >= 1, b >= 0.
bool check_unit_power_congruence(i64 l, int a, int c, int b, i64 p);

// v_p((1+r)^s - 1) == v_p(r) + v_p(s), for s >= 1, r != 0, v_p(r) >= 1.
bool check_power_valuation_rule(i64 r, i64 s, i64 p);

// 1 + z + ... + z^(p^a - 1) == p^a mod p^b, under the hypothesis
// z^(p^a) == 1 mod p^b.  A violated hypothesis is reported as such,
// distinct from a failed conclusion.
enum class GeomSumCheck { pass, hypothesis_fail, conclusion_fail };
GeomSumCheck check_geometric_sum_congruence(i64 z, int a, int b, i64 p);

// Canonical admissible pair: d = 1 and the least positive e with
// (1+dp)(1+ep) == 1 mod p^n.  Postconditions: p∤d, p∤e, e != d mod p.
struct DePair {
    i64 d;
    i64 e;
};
DePair derive_de(i64 p, int n);

enum class Regime { Low, High };  // Low: 2i < n.  High: 2i >= n (boundary 2i = n included).

// Parameter tuple rooting every construction.  Carries the regime flag and
// the normal-form moduli of S so element arithmetic never re-derives them.
struct GroupParams {
    i64 p = 0;
    int n = 0;
    int i = 0;
    i64 d = 0;
    i64 e = 0;
    Regime regime = Regime::Low;

    i64 pn = 0;                 // p^n
    i64 mod_a = 0;              // order of generator a: p^i (low) or p^(n-i) (high)
    i64 mod_b = 0;              // order of generator b: p^(n-i)
    i64 mod_c = 0;              // order of generator c: p^(n-1)
    i64 mod_d = 0;              // order of the central commutator generator
    int dshift = 0;             // d = c^(p^dshift): n-i-1 (low) or i-1 (high)
    i64 dshift_pow = 0;         // p^dshift
    std::vector<i64> ppow;      // p^0 .. p^n

    static GroupParams make(i64 p, int n, int i);                  // canonical (d, e)
    static GroupParams make(i64 p, int n, int i, i64 d, i64 e);    // explicit pair

    bool high() const { return regime == Regime::High; }
    bool low() const { return regime == Regime::Low; }
    bool top_i() const { return i == n - 1; }

    i64 pp(int k) const { return ppow.at(static_cast<size_t>(k)); }
};

// Constants fixed by existence arguments; every field satisfies its defining
// congruence exactly (asserted at derivation time).
struct AppendixConstants {
    i64 g = 0;     // smallest unit >= 2 of order p^(n-1)(p-1) mod p^n
    i64 h = 0;     // odd positive, g h == 1 mod p^n
    i64 t = 0;     // coprime to p, g^(p^(i-1)(p-1) t) == 1 + p^i mod p^n
    i64 ell = 0;   // 2 ell == 1 mod p^n, chosen as (p^n + 1)/2
    i64 d = 0;     // g^((p-1)t) == 1 + d p mod p^n
    i64 e = 0;     // h^((p-1)t) == 1 + e p mod p^n
    i64 g0 = 0;    // smallest unit >= 2 of order p-1 mod p^(n-i)
    i64 h0 = 0;    // odd positive inverse of g0 mod p^(n-i)
    i64 r = 0;     // odd, order p-1 mod p^(n-1)
    i64 s = 0;     // odd positive inverse of r mod p^(n-1)
    i64 t_r = 0;   // r(r-1)/2
    i64 v = 0;     // d v == 1 mod p   (d from the group params)
};
AppendixConstants derive_appendix_constants(const GroupParams& par);

}  // namespace pgaut
