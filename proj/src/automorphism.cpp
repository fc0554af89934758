#include "pgaut/automorphism.hpp"

namespace pgaut {

AutSet<SGroup> kernel_restriction_pointwise(const SGroup& g, const AutSet<SGroup>& all) {
    AutSet<SGroup> out;
    out.prov = AutSet<SGroup>::Provenance::filtered;
    for (const auto& f : all.maps)
        if (f.img[0] == g.gen_a() && f.img[1] == g.gen_b()) out.maps.push_back(f);
    out.build_index();
    return out;
}

bool generates_burnside(const SGroup& g, const std::array<SElement, 3>& img) {
    const i64 p = g.params().p;
    i64 m[3][3];
    for (int k = 0; k < 3; ++k) {
        m[k][0] = img[static_cast<size_t>(k)].a % p;
        m[k][1] = img[static_cast<size_t>(k)].b % p;
        m[k][2] = img[static_cast<size_t>(k)].c % p;
    }
    if (g.params().n == 2) {
        // rank 2 of the (a, b) columns
        for (int r = 0; r < 3; ++r)
            for (int q = r + 1; q < 3; ++q)
                if (mod_reduce(m[r][0] * m[q][1] - m[r][1] * m[q][0], p) != 0) return true;
        return false;
    }
    i64 det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return mod_reduce(det, p) != 0;
}

SFamily family_for(const GroupParams& par) {
    if (par.low()) return SFamily::LowRegime;
    return par.top_i() ? SFamily::TopIndex : SFamily::HighRegime;
}

std::vector<NamedAut> named_s_generators(const SGroup& g, SFamily fam, const AppendixConstants& k) {
    const GroupParams& par = g.params();
    const i64 p = par.p;
    const int n = par.n, i = par.i;
    std::vector<NamedAut> out;
    auto add = [&](const char* name, SElement ia, SElement ib, SElement ic) {
        out.push_back({name, make_automorphism(g, {ia, ib, ic}, name)});
    };
    auto A = g.gen_a();
    auto B = g.gen_b();
    auto C = g.gen_c();

    switch (fam) {
        case SFamily::HighRegime: {
            if (!(par.high() && !par.top_i()))
                throw std::domain_error("named_s_generators: family needs 2i >= n and i != n-1");
            i64 q = par.pp(n - i - 1);
            out.push_back({"A", inner(g, A)});
            out.push_back({"B", inner(g, B)});
            out.push_back({"C", inner(g, C)});
            add("D", g.pow(A, 1 + q), B, g.pow(C, 1 + q));
            add("E", g.mul(A, g.pow(B, q)), B, C);
            add("F", A, g.mul(g.pow(A, q), B), C);
            add("G", g.pow(A, k.g0), g.pow(B, k.h0), C);
            add("H", B, A, g.inv(C));
            break;
        }
        case SFamily::TopIndex: {
            if (!par.top_i()) throw std::domain_error("named_s_generators: family needs i = n-1");
            out.push_back({"A", inner(g, A)});
            out.push_back({"B", inner(g, B)});
            add("C", A, g.mul(A, B), C);
            add("D", B, g.inv(A), C);
            add("E", g.pow(A, k.r), g.pow(B, k.s), C);
            add("F", g.pow(A, k.r), B, g.pow(C, k.r));
            add("G", A, B, g.pow(C, 1 + p));
            break;
        }
        case SFamily::LowRegime: {
            if (!par.low()) throw std::domain_error("named_s_generators: family needs 2i < n");
            out.push_back({"L", inner(g, A)});
            out.push_back({"M", inner(g, B)});
            out.push_back({"N", inner(g, C)});
            add("U", A, g.mul(B, g.pow(C, par.pp(n - i - 2))), g.mul(g.pow(A, -par.e), C));
            i64 q = par.pp(n - i - 1);
            add("V", A, g.pow(B, 1 + q), g.pow(C, 1 + q));
            add("W", g.mul(A, g.pow(B, q)), B, C);
            add("X", A, g.mul(g.pow(A, par.pp(i - 1)), B), C);
            add("Y", g.mul(A, g.pow(C, par.pp(n - 2))), B, C);
            add("Z", g.pow(A, k.g0), g.pow(B, k.h0), C);
            break;
        }
    }
    return out;
}

UFamily named_u_generators(const UGroup& g, const AppendixConstants& k) {
    const GroupParams& par = g.params();
    UFamily f;
    UElement x = g.gen_x();
    UElement y = g.gen_y();

    i64 twist = par.low() ? par.pp(par.n - 2 * par.i) : 1;
    f.alpha = make_automorphism(g, {g.mul(x, g.pow(y, twist)), y}, "alpha");
    f.beta = make_automorphism(g, {g.pow(x, k.g), y}, "beta");
    f.delta_x = inner(g, x);
    f.delta_y = inner(g, y);

    AutOps<UGroup> ops(g);
    auto dxl = ops.pow(f.delta_x, k.ell);
    f.mu = ops.mul(ops.mul(dxl, f.beta), ops.inv(dxl));
    f.nu = ops.pow(f.mu, (par.p - 1) * k.t);
    return f;
}

}  // namespace pgaut
