#include "pgaut/modarith.hpp"

#include <numeric>

namespace pgaut {

bool is_prime(i64 m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (i64 q = 3; q * q <= m; q += 2)
        if (m % q == 0) return false;
    return true;
}

int vp(i64 m, i64 p) {
    if (m == 0) throw std::domain_error("vp: zero has no p-adic valuation");
    if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
    if (m < 0) m = -m;
    int a = 0;
    while (m % p == 0) {
        m /= p;
        ++a;
    }
    return a;
}

i64 mod_reduce(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    i64 acc = 1 % m;
    i64 b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

i64 inv_mod(i64 a, i64 m) {
    i64 r0 = m, r1 = mod_reduce(a, m);
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: argument is not a unit");
    return mod_reduce(s0, m);
}

i64 ipow(i64 base, int exp) {
    i64 acc = 1;
    for (int k = 0; k < exp; ++k) {
        if (acc > (1LL << 62) / (base > 0 ? base : 1))
            throw std::overflow_error("ipow: overflow");
        acc *= base;
    }
    return acc;
}

i64 unit_order(i64 u, i64 m) {
    if (m < 2) throw std::invalid_argument("unit_order: modulus must be >= 2");
    u = mod_reduce(u, m);
    if (std::gcd(u, m) != 1) throw std::invalid_argument("unit_order: argument is not a unit");
    // factor the group exponent, then strip primes; m is a prime power here
    // so phi(m) = p^(a-1)(p-1) and trial division of p-1 stays tiny.
    i64 mm = m, p = 0;
    for (i64 q = 2; q * q <= mm; ++q)
        if (mm % q == 0) { p = q; break; }
    if (p == 0) p = mm;  // m prime
    i64 phi = m / p * (p - 1);

    std::vector<std::pair<i64, int>> fac;
    i64 x = phi;
    for (i64 q = 2; q * q <= x; ++q) {
        if (x % q == 0) {
            int k = 0;
            while (x % q == 0) { x /= q; ++k; }
            fac.emplace_back(q, k);
        }
    }
    if (x > 1) fac.emplace_back(x, 1);

    i64 ord = phi;
    for (auto [q, k] : fac) {
        for (int j = 0; j < k; ++j) {
            if (pow_mod(u, ord / q, m) == 1)
                ord /= q;
            else
                break;
        }
    }
    return ord;
}

bool check_unit_power_congruence(i64 l, int a, int c, int b, i64 p) {
    if (a < 1 || c < 1 || b < 0) throw std::invalid_argument("check_unit_power_congruence: need a,c>=1, b>=0");
    i64 mod = ipow(p, 2 * a + b);
    if (mod > kMaxModulus) throw ResourceLimitError("check_unit_power_congruence: modulus over desk-scale cap");
    i64 lhs = pow_mod(1 + mul_mod(l, ipow(p, a), mod), static_cast<i64>(c) * ipow(p, b), mod);
    i64 rhs = mod_reduce(1 + mul_mod(mul_mod(c, l, mod), ipow(p, a + b), mod), mod);
    return lhs == rhs;
}

bool check_power_valuation_rule(i64 r, i64 s, i64 p) {
    if (s < 1 || r == 0) throw std::invalid_argument("check_power_valuation_rule: need s>=1, r!=0");
    int a = vp(r, p);
    if (a < 1) throw std::invalid_argument("check_power_valuation_rule: need v_p(r) >= 1");
    int b = vp(s, p);
    // measure the valuation modulo p^(a+b+1): exact iff the power is
    // divisible by p^(a+b) but not p^(a+b+1)
    i64 mod = ipow(p, a + b + 1);
    if (mod > kMaxModulus) throw ResourceLimitError("check_power_valuation_rule: modulus over desk-scale cap");
    i64 x = pow_mod(1 + r, s, mod);
    i64 diff = mod_reduce(x - 1, mod);
    return diff % ipow(p, a + b) == 0 && diff != 0;
}

GeomSumCheck check_geometric_sum_congruence(i64 z, int a, int b, i64 p) {
    if (a < 1 || b < 1) throw std::invalid_argument("check_geometric_sum_congruence: need a,b >= 1");
    i64 mod = ipow(p, b);
    if (mod > kMaxModulus) throw ResourceLimitError("check_geometric_sum_congruence: modulus over desk-scale cap");
    i64 pa = ipow(p, a);
    if (pow_mod(z, pa, mod) != 1 % mod) return GeomSumCheck::hypothesis_fail;
    i64 sum = 0, term = 1 % mod;
    i64 zr = mod_reduce(z, mod);
    for (i64 k = 0; k < pa; ++k) {
        sum = (sum + term) % mod;
        term = mul_mod(term, zr, mod);
    }
    return sum == mod_reduce(pa, mod) ? GeomSumCheck::pass : GeomSumCheck::conclusion_fail;
}

DePair derive_de(i64 p, int n) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("derive_de: p must be an odd prime");
    if (n < 2) throw std::invalid_argument("derive_de: n must be >= 2");
    i64 pn = ipow(p, n);
    i64 inv = inv_mod(1 + p, pn);   // == 1 + e p mod p^n
    DePair out{1, (inv - 1) / p};
    if (out.e % p == 0 || mul_mod(1 + out.d * p, 1 + out.e * p, pn) != 1 % pn)
        throw std::logic_error("derive_de: postcondition failed");
    return out;
}

GroupParams GroupParams::make(i64 p, int n, int i) {
    auto de = derive_de(p, n);
    return make(p, n, i, de.d, de.e);
}

GroupParams GroupParams::make(i64 p, int n, int i, i64 d, i64 e) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("params: p must be an odd prime");
    if (n < 2) throw std::invalid_argument("params: n must be >= 2");
    if (i < 1 || i > n - 1) throw std::invalid_argument("params: need 1 <= i <= n-1");

    GroupParams par;
    par.p = p;
    par.n = n;
    par.i = i;
    par.regime = (2 * i >= n) ? Regime::High : Regime::Low;

    par.ppow.resize(static_cast<size_t>(n) + 1);
    par.ppow[0] = 1;
    for (int k = 1; k <= n; ++k) {
        if (par.ppow[k - 1] > kMaxModulus / p)
            throw ResourceLimitError("params: p^n over desk-scale cap 2^40");
        par.ppow[k] = par.ppow[k - 1] * p;
    }
    par.pn = par.ppow[n];

    par.d = mod_reduce(d, par.ppow[n - 1]);
    par.e = mod_reduce(e, par.ppow[n - 1]);
    if (par.d % p == 0 || par.e % p == 0)
        throw std::invalid_argument("params: need p coprime to d and e");
    if (mul_mod(1 + par.d * p, 1 + par.e * p, par.pn) != 1)
        throw std::invalid_argument("params: (1+dp)(1+ep) != 1 mod p^n");
    if ((par.e - par.d) % p == 0)
        throw std::invalid_argument("params: e == d mod p is inadmissible");

    int ea = par.high() ? n - i : i;
    par.mod_a = par.ppow[ea];
    par.mod_b = par.ppow[n - i];
    par.mod_c = par.ppow[n - 1];
    par.mod_d = par.ppow[ea];
    par.dshift = par.high() ? i - 1 : n - i - 1;
    par.dshift_pow = par.ppow[par.dshift];
    return par;
}

namespace {

i64 smallest_unit_of_order(i64 target_order, i64 modulus) {
    for (i64 g = 2; g < modulus; ++g) {
        if (std::gcd(g, modulus) != 1) continue;
        if (unit_order(g, modulus) == target_order) return g;
    }
    throw std::logic_error("smallest_unit_of_order: not found");
}

i64 odd_positive_inverse(i64 a, i64 modulus) {
    i64 inv = inv_mod(a, modulus);
    if (inv == 0) inv = modulus;
    if (inv % 2 == 0) inv += modulus;  // modulus odd, so parity flips
    return inv;
}

}  // namespace

AppendixConstants derive_appendix_constants(const GroupParams& par) {
    const i64 p = par.p;
    const int n = par.n, i = par.i;
    AppendixConstants k;

    k.g = smallest_unit_of_order(par.ppow[n - 1] * (p - 1), par.pn);
    k.h = odd_positive_inverse(k.g, par.pn);
    k.ell = (par.pn + 1) / 2;

    i64 base = pow_mod(k.g, par.ppow[i - 1] * (p - 1), par.pn);
    i64 target = mod_reduce(1 + par.ppow[i], par.pn);
    k.t = 0;
    for (i64 t = 1, acc = base; t <= par.ppow[n - i]; ++t, acc = mul_mod(acc, base, par.pn)) {
        if (acc == target) {
            k.t = t;
            break;
        }
    }
    if (k.t == 0 || k.t % p == 0)
        throw std::logic_error("derive_appendix_constants: no valid t");

    k.d = (pow_mod(k.g, (p - 1) * k.t, par.pn) - 1) / p;
    k.e = (pow_mod(k.h, (p - 1) * k.t, par.pn) - 1) / p;
    if (k.d % p == 0 || k.e % p == 0 || mul_mod(1 + k.d * p, 1 + k.e * p, par.pn) != 1)
        throw std::logic_error("derive_appendix_constants: (d, e) postcondition failed");

    i64 mni = par.ppow[n - i];
    k.g0 = smallest_unit_of_order(p - 1, mni);
    k.h0 = odd_positive_inverse(k.g0, mni);

    i64 mn1 = par.ppow[n - 1];
    k.r = smallest_unit_of_order(p - 1, mn1);
    if (k.r % 2 == 0) k.r += mn1;
    k.s = odd_positive_inverse(k.r, mn1);
    k.t_r = k.r * (k.r - 1) / 2;

    k.v = inv_mod(par.d, p);
    if (k.v == 0) k.v = p;
    return k;
}

}  // namespace pgaut
