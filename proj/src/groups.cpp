#include "pgaut/groups.hpp"

#include <algorithm>

namespace pgaut {

namespace {
constexpr i64 kPowTableCap = 1 << 20;

template <class G, class Elem>
Elem generic_pow(const G& g, Elem x, i64 k) {
    if (k < 0) {
        x = g.inv(x);
        k = -k;
    }
    Elem acc = g.id();
    while (k > 0) {
        if (k & 1) acc = g.mul(acc, x);
        x = g.mul(x, x);
        k >>= 1;
    }
    return acc;
}

// order of an element of a finite p-group, by the p-power ladder
template <class G, class Elem>
i64 pgroup_elem_order(const G& g, Elem x, i64 p) {
    i64 ord = 1;
    while (!(x == g.id())) {
        x = g.pow(x, p);
        ord *= p;
    }
    return ord;
}
}  // namespace

SGroup::SGroup(GroupParams par) : par_(std::move(par)) {
    if (par_.mod_c <= kPowTableCap) {
        pow_table_a_.resize(static_cast<size_t>(par_.mod_c));
        pow_table_b_.resize(static_cast<size_t>(par_.mod_c));
        i64 ua = 1, ub = 1;
        i64 ga = mod_reduce(1 + par_.e * par_.p, par_.mod_a);
        i64 gb = mod_reduce(1 + par_.d * par_.p, par_.mod_b);
        for (i64 c = 0; c < par_.mod_c; ++c) {
            pow_table_a_[static_cast<size_t>(c)] = ua;
            pow_table_b_[static_cast<size_t>(c)] = ub;
            ua = mul_mod(ua, ga, par_.mod_a);
            ub = mul_mod(ub, gb, par_.mod_b);
        }
    }
}

SElement SGroup::make(i64 a, i64 b, i64 c) const {
    return {mod_reduce(a, par_.mod_a), mod_reduce(b, par_.mod_b), mod_reduce(c, par_.mod_c)};
}

SElement SGroup::mul(const Elem& x, const Elem& y) const {
    // move c^(x.c) right across a^(y.a) b^(y.b), then swap b^(x.b) a^(ya')
    i64 ya = mul_mod(y.a, conj_a_exp(x.c), par_.mod_a);
    i64 yb = mul_mod(y.b, conj_b_exp(x.c), par_.mod_b);
    i64 dexp = mul_mod(x.b, ya, par_.mod_d);
    Elem r;
    r.a = mod_reduce(x.a + ya, par_.mod_a);
    r.b = mod_reduce(x.b + yb, par_.mod_b);
    r.c = mod_reduce(x.c + y.c - dexp * par_.dshift_pow, par_.mod_c);
    return r;
}

SElement SGroup::inv(const Elem& x) const {
    Elem ci{0, 0, mod_reduce(-x.c, par_.mod_c)};
    Elem bi{0, mod_reduce(-x.b, par_.mod_b), 0};
    Elem ai{mod_reduce(-x.a, par_.mod_a), 0, 0};
    return mul(mul(ci, bi), ai);
}

SElement SGroup::pow(const Elem& x, i64 k) const { return generic_pow(*this, x, k); }

u64 SGroup::order() const {
    return static_cast<u64>(par_.mod_a) * static_cast<u64>(par_.mod_b) * static_cast<u64>(par_.mod_c);
}

i64 SGroup::elem_order(const Elem& x) const { return pgroup_elem_order(*this, x, par_.p); }

std::vector<SElement> SGroup::elements() const {
    if (order() > kEnumerationCap) throw ResourceLimitError("SGroup::elements: group too large to enumerate");
    std::vector<Elem> out;
    out.reserve(order());
    for (i64 a = 0; a < par_.mod_a; ++a)
        for (i64 b = 0; b < par_.mod_b; ++b)
            for (i64 c = 0; c < par_.mod_c; ++c) out.push_back({a, b, c});
    return out;
}

TElement TGroup::mul(const Elem& x, const Elem& y) const {
    Elem r;
    r.a = mod_reduce(x.a + y.a, par_.mod_a);
    r.b = mod_reduce(x.b + y.b, par_.mod_b);
    r.d = mod_reduce(x.d + y.d - mul_mod(x.b, y.a, par_.mod_d), par_.mod_d);
    return r;
}

TElement TGroup::inv(const Elem& x) const {
    Elem r;
    r.a = mod_reduce(-x.a, par_.mod_a);
    r.b = mod_reduce(-x.b, par_.mod_b);
    r.d = mod_reduce(-x.d - mul_mod(x.a, x.b, par_.mod_d), par_.mod_d);
    return r;
}

TElement TGroup::pow(const Elem& x, i64 k) const { return generic_pow(*this, x, k); }

u64 TGroup::order() const {
    return static_cast<u64>(par_.mod_a) * static_cast<u64>(par_.mod_b) * static_cast<u64>(par_.mod_d);
}

i64 TGroup::elem_order(const Elem& x) const { return pgroup_elem_order(*this, x, par_.p); }

std::vector<TElement> TGroup::elements() const {
    if (order() > kEnumerationCap) throw ResourceLimitError("TGroup::elements: group too large to enumerate");
    std::vector<Elem> out;
    out.reserve(order());
    for (i64 a = 0; a < par_.mod_a; ++a)
        for (i64 b = 0; b < par_.mod_b; ++b)
            for (i64 d = 0; d < par_.mod_d; ++d) out.push_back({a, b, d});
    return out;
}

UGroup::UGroup(GroupParams par) : par_(std::move(par)) {
    pow_table_.resize(static_cast<size_t>(mod_y()));
    i64 u = 1;
    i64 g = mod_reduce(1 + par_.ppow[par_.i], par_.pn);
    for (i64 y = 0; y < mod_y(); ++y) {
        pow_table_[static_cast<size_t>(y)] = u;
        u = mul_mod(u, g, par_.pn);
    }
}

UElement UGroup::mul(const Elem& z1, const Elem& z2) const {
    Elem r;
    r.x = mod_reduce(z1.x + mul_mod(z2.x, pow_table_[static_cast<size_t>(z1.y)], par_.pn), par_.pn);
    r.y = mod_reduce(z1.y + z2.y, mod_y());
    return r;
}

UElement UGroup::inv(const Elem& z) const {
    i64 yi = mod_reduce(-z.y, mod_y());
    Elem r;
    r.x = mod_reduce(-mul_mod(z.x, pow_table_[static_cast<size_t>(yi)], par_.pn), par_.pn);
    r.y = yi;
    return r;
}

UElement UGroup::pow(const Elem& x, i64 k) const { return generic_pow(*this, x, k); }

u64 UGroup::order() const { return static_cast<u64>(par_.pn) * static_cast<u64>(mod_y()); }

i64 UGroup::elem_order(const Elem& z) const {
    i64 ord = 1;
    Elem acc = z;
    while (!(acc == id())) {
        acc = mul(acc, z);
        ++ord;
    }
    return ord;
}

i64 UGroup::elem_order_formula(i64 a, i64 b) const {
    i64 xa = mod_reduce(a, par_.pn);
    i64 yb = mod_reduce(b, mod_y());
    int s = 0;
    if (xa != 0) s = std::max(s, par_.n - vp(xa, par_.p));
    if (yb != 0) s = std::max(s, par_.n - par_.i - vp(yb, par_.p));
    return par_.ppow[s];
}

std::vector<UElement> UGroup::elements() const {
    if (order() > kEnumerationCap) throw ResourceLimitError("UGroup::elements: group too large to enumerate");
    std::vector<Elem> out;
    out.reserve(order());
    for (i64 x = 0; x < par_.pn; ++x)
        for (i64 y = 0; y < mod_y(); ++y) out.push_back({x, y});
    return out;
}

bool UGroup::cyclic_subgroup_normal(i64 a, i64 b) const {
    if (mod_reduce(a, par_.p) == 0) throw std::invalid_argument("cyclic_subgroup_normal: need p coprime to a");
    Elem z{mod_reduce(a, par_.pn), mod_reduce(b, mod_y())};
    std::vector<Elem> cyc;
    Elem acc = id();
    do {
        cyc.push_back(acc);
        acc = mul(acc, z);
    } while (!(acc == id()));
    std::sort(cyc.begin(), cyc.end());
    for (const Elem& g : elements()) {
        Elem c = conj(g, z);
        if (!std::binary_search(cyc.begin(), cyc.end(), c)) return false;
    }
    return true;
}

HeisGroup::HeisGroup(i64 m_mod, i64 r_mod) : m_(m_mod), r_(r_mod) {
    if (m_ < 1 || r_ < 1 || r_ % m_ != 0)
        throw std::invalid_argument("HeisGroup: need m | r for the module structure");
}

HeisElement HeisGroup::mul(const Elem& x, const Elem& y) const {
    Elem o;
    o.u = mod_reduce(x.u + y.u, m_);
    o.v = mod_reduce(x.v + y.v + mul_mod(x.u, mod_reduce(y.r, m_), m_), m_);
    o.r = mod_reduce(x.r + y.r, r_);
    return o;
}

HeisElement HeisGroup::inv(const Elem& x) const {
    Elem o;
    o.u = mod_reduce(-x.u, m_);
    o.v = mod_reduce(-x.v + mul_mod(x.u, mod_reduce(x.r, m_), m_), m_);
    o.r = mod_reduce(-x.r, r_);
    return o;
}

HeisElement HeisGroup::pow(const Elem& x, i64 k) const { return generic_pow(*this, x, k); }

std::vector<HeisElement> HeisGroup::elements() const {
    if (order() > kEnumerationCap) throw ResourceLimitError("HeisGroup::elements: group too large to enumerate");
    std::vector<Elem> out;
    out.reserve(order());
    for (i64 u = 0; u < m_; ++u)
        for (i64 v = 0; v < m_; ++v)
            for (i64 r = 0; r < r_; ++r) out.push_back({u, v, r});
    return out;
}

u64 group_order(const GroupParams& par, GroupKind which) {
    switch (which) {
        case GroupKind::S:
            return static_cast<u64>(par.mod_a) * static_cast<u64>(par.mod_b) * static_cast<u64>(par.mod_c);
        case GroupKind::T:
            return static_cast<u64>(par.mod_a) * static_cast<u64>(par.mod_b) * static_cast<u64>(par.mod_d);
        case GroupKind::U:
            return static_cast<u64>(par.pn) * static_cast<u64>(par.mod_b);
    }
    throw std::logic_error("group_order: bad kind");
}

SElement embed_t_in_s(const TElement& t, const GroupParams& par) {
    return {t.a, t.b, mod_reduce(t.d * par.dshift_pow, par.mod_c)};
}

HeisElement t_to_heisenberg(const TElement& t, const GroupParams& par) {
    i64 m = par.mod_a;
    return {mod_reduce(t.a, m), mod_reduce(mul_mod(t.a, mod_reduce(t.b, m), m) + t.d, m), t.b};
}

HeisGroup heisenberg_model(const GroupParams& par) { return HeisGroup(par.mod_a, par.mod_b); }

}  // namespace pgaut
