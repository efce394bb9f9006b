#include "mdf/ci.hpp"

#include <algorithm>
#include <string>

namespace mdf {

namespace {

std::vector<int> support(const ExpVec& g) {
    std::vector<int> vars;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > 0) vars.push_back(static_cast<int>(i));
    return vars;
}

long long checked_prod(std::span<const long long> xs) {
    long long r = 1;
    for (long long x : xs) r = checked_mul(r, x);
    return r;
}

void require_ascending(std::span<const long long> ds) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] < 1) fail(errc::precondition_violated, "degrees must be >= 1");
        if (i > 0 && ds[i - 1] > ds[i]) fail(errc::precondition_violated, "degrees must be ascending");
    }
}

}  // namespace

ExpVec CIShape::to_normal_frame(const ExpVec& a) const {
    if (static_cast<int>(a.size()) != s) fail(errc::input_error, "exponent vector has wrong length");
    ExpVec b(s);
    for (int j = 0; j < s; ++j) b[j] = a[orig_var[j]];
    return b;
}

MonomialIdeal CIShape::normal_ideal() const {
    std::vector<ExpVec> gens;
    if (variant == CIVariant::case_i) {
        for (int j = 1; j < s; ++j) {
            ExpVec g(s, 0);
            g[j] = static_cast<int>(degrees[j - 1]);
            gens.push_back(std::move(g));
        }
    } else {
        for (int i = 1; i <= s; ++i) {
            if (i == p + 1) continue;
            ExpVec g(s, 0);
            if (i == p) {
                g[p - 1] = static_cast<int>(c_p);
                g[p] = static_cast<int>(c_p1);
            } else if (i < p) {
                g[i - 1] = static_cast<int>(degrees[i - 1]);  // d_{i+1}
            } else {
                g[i - 1] = static_cast<int>(degrees[i - 2]);  // d_i
            }
            gens.push_back(std::move(g));
        }
    }
    return {s, std::move(gens)};
}

CIShape make_case_ii_shape(int s, int p, long long cp, long long cp1,
                           std::vector<long long> degrees) {
    if (s < 2 || p < 1 || p > s - 1) fail(errc::precondition_violated, "invalid shape position p");
    if (!(1 <= cp && cp <= cp1)) fail(errc::precondition_violated, "need 1 <= c_p <= c_{p+1}");
    if (static_cast<int>(degrees.size()) != s - 1)
        fail(errc::precondition_violated, "degree list must have s-1 entries");
    if (degrees[p - 1] != cp + cp1)
        fail(errc::precondition_violated, "d_{p+1} must equal c_p + c_{p+1}");
    CIShape shape;
    shape.variant = CIVariant::case_ii;
    shape.s = s;
    shape.orig_var.resize(s);
    for (int j = 0; j < s; ++j) shape.orig_var[j] = j;
    shape.degrees = std::move(degrees);
    shape.p = p;
    shape.c_p = cp;
    shape.c_p1 = cp1;
    return shape;
}

CIShape classify_ci_dim1(const MonomialIdeal& L) {
    HilbertProfile prof;
    try {
        prof = hilbert_oracle(L);
    } catch (const Error& e) {
        if (e.code() == errc::dimension_too_high)
            fail(errc::not_dim_one, "quotient does not have dimension 1");
        throw;
    }
    if (prof.dim != 1) fail(errc::not_dim_one, "quotient does not have dimension 1");

    const int s = L.s;
    if (static_cast<int>(L.gens.size()) != s - 1)
        fail(errc::not_complete_intersection, "a dim-1 complete intersection needs s-1 generators");

    std::vector<int> occurrences(s, 0);
    for (const auto& g : L.gens)
        for (int v : support(g)) ++occurrences[v];
    for (int v = 0; v < s; ++v)
        if (occurrences[v] > 1)
            fail(errc::not_complete_intersection, "generator supports overlap");

    std::vector<int> missing;
    for (int v = 0; v < s; ++v)
        if (occurrences[v] == 0) missing.push_back(v);

    CIShape shape;
    shape.s = s;
    shape.orig_var.assign(s, -1);

    if (missing.size() == 1) {
        // Case I: every generator is a pure power of a distinct variable.
        shape.variant = CIVariant::case_i;
        std::vector<std::pair<long long, int>> pure;  // (degree, variable)
        for (const auto& g : L.gens) {
            auto sup = support(g);
            if (sup.size() != 1) fail(errc::not_complete_intersection, "unexpected generator support");
            pure.emplace_back(total_degree(g), sup[0]);
        }
        std::sort(pure.begin(), pure.end());
        shape.orig_var[0] = missing[0];
        for (int j = 0; j < s - 1; ++j) {
            shape.degrees.push_back(pure[j].first);
            shape.orig_var[j + 1] = pure[j].second;
        }
        return shape;
    }
    if (!missing.empty())
        fail(errc::not_complete_intersection, "generator supports do not match a complete intersection");

    // Case II: all variables occur, exactly one generator has two of them.
    shape.variant = CIVariant::case_ii;
    std::vector<std::pair<long long, int>> pure;
    int mixed = -1;
    for (std::size_t i = 0; i < L.gens.size(); ++i) {
        auto sup = support(L.gens[i]);
        if (sup.size() == 1) {
            pure.emplace_back(total_degree(L.gens[i]), sup[0]);
        } else if (sup.size() == 2 && mixed < 0) {
            mixed = static_cast<int>(i);
        } else {
            fail(errc::not_complete_intersection, "unexpected generator support");
        }
    }
    std::sort(pure.begin(), pure.end());
    const ExpVec& m = L.gens[mixed];
    auto sup = support(m);
    int u = sup[0], w = sup[1];
    if (m[u] > m[w]) std::swap(u, w);  // c_p <= c_{p+1}
    long long mixed_deg = total_degree(m);

    // Insert the mixed degree into the ascending pure list; its position fixes p.
    int idx = 0;
    while (idx < static_cast<int>(pure.size()) && pure[idx].first <= mixed_deg) ++idx;
    shape.p = idx + 1;
    shape.c_p = m[u];
    shape.c_p1 = m[w];
    for (int j = 0; j < idx; ++j) {
        shape.degrees.push_back(pure[j].first);
        shape.orig_var[j] = pure[j].second;
    }
    shape.degrees.push_back(mixed_deg);
    shape.orig_var[shape.p - 1] = u;
    shape.orig_var[shape.p] = w;
    for (int j = idx; j < static_cast<int>(pure.size()); ++j) {
        shape.degrees.push_back(pure[j].first);
        shape.orig_var[j + 2] = pure[j].second;
    }
    return shape;
}

KLDecomp kl_decompose(std::span<const long long> ds, long long d) {
    if (d < 1) fail(errc::precondition_violated, "degree must be >= 1");
    require_ascending(ds);
    long long reg = 0;
    for (long long di : ds) reg += di - 1;
    if (d >= reg) return {true, 0, 0};
    int k = 0;
    long long partial = 0;
    while (k + 1 <= static_cast<int>(ds.size()) - 1 && partial + (ds[k] - 1) < d) {
        partial += ds[k] - 1;
        ++k;
    }
    return {false, k, d - partial};
}

long long degree_case_i(std::span<const long long> ds, const ExpVec& a) {
    if (a.size() != ds.size() + 1) fail(errc::input_error, "exponent vector has wrong length");
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (ds[i] < 1) fail(errc::precondition_violated, "degrees must be >= 1");
    bool nonzero = false;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] < 0) fail(errc::precondition_violated, "negative exponent at index " + std::to_string(i));
        if (a[i] > ds[i - 1] - 1)
            fail(errc::precondition_violated,
                 "exponent exceeds d_i - 1 at index " + std::to_string(i + 1));
        if (a[i] >= 1) nonzero = true;
    }
    if (!nonzero)
        fail(errc::precondition_violated, "monomial is regular: no positive exponent past index 1");
    long long full = checked_prod(ds);
    long long rest = 1;
    for (std::size_t i = 0; i < ds.size(); ++i) rest = checked_mul(rest, ds[i] - a[i + 1]);
    return full - rest;
}

long long degree_case_ii(const CIShape& shape, const ExpVec& a) {
    if (shape.variant != CIVariant::case_ii)
        fail(errc::precondition_violated, "shape is not Case II");
    ExpVec b = shape.to_normal_frame(a);
    const int s = shape.s, p = shape.p;
    const auto& dl = shape.degrees;  // dl[j] = d_{j+2}

    auto pure_bound = [&](int i) {  // 1-based variable i, pure-power exponent
        return i < p ? dl[i - 1] : dl[i - 2];
    };

    bool nonzero = false;
    for (int v : b)
        if (v > 0) nonzero = true;
    for (int i = 1; i <= s; ++i) {
        if (b[i - 1] < 0) fail(errc::precondition_violated, "negative exponent");
        if (i == p || i == p + 1) continue;
        if (b[i - 1] >= pure_bound(i)) fail(errc::in_ideal, "monomial lies in the ideal");
    }
    if (b[p - 1] >= shape.c_p && b[p] >= shape.c_p1)
        fail(errc::in_ideal, "monomial lies in the ideal");
    if (!nonzero) fail(errc::precondition_violated, "monomial is the constant 1");

    long long factor;
    if (b[p - 1] >= shape.c_p)
        factor = shape.c_p1 - b[p];
    else if (b[p] >= shape.c_p1)
        factor = shape.c_p - b[p - 1];
    else
        factor = dl[p - 1] - b[p - 1] - b[p];

    long long rest = factor;
    for (int i = 1; i <= s; ++i) {
        if (i == p || i == p + 1) continue;
        rest = checked_mul(rest, pure_bound(i) - b[i - 1]);
    }
    return checked_prod(dl) - rest;
}

ExpVec case_ii_witness(const CIShape& shape, int k, long long ell) {
    if (shape.variant != CIVariant::case_ii)
        fail(errc::precondition_violated, "shape is not Case II");
    const int s = shape.s, p = shape.p;
    const auto& dl = shape.degrees;
    if (k < 0 || k > s - 2) fail(errc::precondition_violated, "k out of range");
    if (ell < 1 || ell > dl[k] - 1) fail(errc::precondition_violated, "l out of range");

    ExpVec b(s, 0);
    auto fill_prefix = [&](int upto) {  // b_i = d_{i+1} - 1 for 1-based i = 1..upto (pure vars < p)
        for (int i = 1; i <= upto; ++i) b[i - 1] = static_cast<int>(dl[i - 1] - 1);
    };
    if (k >= p + 1) {
        fill_prefix(p - 1);
        b[p - 1] = static_cast<int>(shape.c_p);
        b[p] = static_cast<int>(shape.c_p1 - 1);
        for (int i = p + 2; i <= k + 1; ++i) b[i - 1] = static_cast<int>(dl[i - 2] - 1);
        b[k + 1] = static_cast<int>(ell);
    } else if (k == p) {
        fill_prefix(p - 1);
        b[p - 1] = static_cast<int>(shape.c_p);
        b[p] = static_cast<int>(shape.c_p1 - 1);
        b[p + 1] = static_cast<int>(ell);
    } else if (k <= p - 2) {
        fill_prefix(k);
        b[k] = static_cast<int>(ell);
    } else if (ell >= shape.c_p) {  // k == p - 1
        fill_prefix(p - 1);
        b[p - 1] = static_cast<int>(shape.c_p);
        b[p] = static_cast<int>(ell - shape.c_p);
    } else {  // k == p - 1, l < c_p
        fill_prefix(p - 1);
        b[p - 1] = static_cast<int>(ell);
    }
    return b;
}

long long fp_closed_form(std::span<const long long> ds, long long d) {
    auto kl = kl_decompose(ds, d);
    if (kl.beyond_reg) return 1;
    long long r = ds[kl.k] - kl.ell;
    for (std::size_t j = kl.k + 1; j < ds.size(); ++j) r = checked_mul(r, ds[j]);
    return r;
}

long long fp_bruteforce(const MonomialIdeal& L, int d) {
    if (d < 1) fail(errc::precondition_violated, "degree must be >= 1");
    auto prof = hilbert_oracle(L);
    if (prof.dim != 1) fail(errc::not_dim_one, "footprint function needs dim(S/L) = 1");
    long long best = -1;
    for (const auto& a : zero_divisor_monomials(L, d))
        best = std::max(best, degree_with_monomial(L, a));
    if (best < 0) return prof.degree;  // M_{<,d} empty
    return prof.degree - best;
}

Aug28Result aug28_inequality(std::span<const long long> e, std::span<const long long> b,
                             long long b0, int k) {
    const int m = static_cast<int>(e.size());
    if (m < 1 || b.size() != e.size()) fail(errc::precondition_violated, "e and b must match, m >= 1");
    require_ascending(e);
    for (int i = 0; i < m; ++i)
        if (b[i] < 0 || b[i] > e[i] - 1) fail(errc::precondition_violated, "need 0 <= b_i <= e_i - 1");
    if (b0 < 1) fail(errc::precondition_violated, "need b0 >= 1");
    if (k < 0 || k > m - 1) fail(errc::precondition_violated, "k out of range");

    Aug28Result r;
    r.lhs = 1;
    for (int i = 0; i < m; ++i) r.lhs = checked_mul(r.lhs, e[i] - b[i]);
    long long inner = -(static_cast<long long>(k) - 1) - b0;
    for (int i = 0; i <= k; ++i) inner += e[i] - b[i];
    for (int i = k + 1; i < m; ++i) inner -= b[i];
    long long tail = 1;
    for (int i = k + 1; i < m; ++i) tail = checked_mul(tail, e[i]);
    r.rhs = checked_mul(inner, tail);
    r.holds = r.lhs >= r.rhs;
    return r;
}

std::pair<long long, long long> ci_degree_reg(std::span<const long long> ds) {
    long long deg = 1, reg = 0;
    for (long long di : ds) {
        if (di < 1) fail(errc::precondition_violated, "degrees must be >= 1");
        deg = checked_mul(deg, di);
        reg += di - 1;
    }
    return {deg, reg};
}

}  // namespace mdf
