#include "mdf/codes.hpp"

#include <algorithm>
#include <string>

namespace mdf {

namespace {

int find_pivot(const std::vector<FieldElem>& coords) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i].index != 0) return static_cast<int>(i);
    return -1;
}

// Row-reduce in place; returns the nonzero rows (reduced row echelon form).
std::vector<std::vector<FieldElem>> rref(const Fq& F, std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].index == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        FieldElem s = F.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = F.mul(x, s);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].index == 0) continue;
            FieldElem f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e, std::uint64_t sat) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > sat / base) return sat + 1;
        r *= base;
    }
    return r;
}

}  // namespace

ProjPoint normalize_point(const Fq& F, const std::vector<FieldElem>& raw) {
    int pivot = find_pivot(raw);
    if (pivot < 0) fail(errc::zero_vector, "the zero vector is not a projective point");
    ProjPoint pt;
    pt.pivot = pivot;
    pt.coords = raw;
    FieldElem s = F.inv(raw[pivot]);
    for (auto& x : pt.coords) x = F.mul(x, s);
    return pt;
}

PointSet make_pointset(const Fq& F, int s, const std::vector<std::vector<FieldElem>>& raws) {
    if (s < 1) fail(errc::input_error, "need at least one coordinate");
    PointSet X{F, s, {}};
    for (const auto& raw : raws) {
        if (static_cast<int>(raw.size()) != s) fail(errc::input_error, "point has wrong length");
        ProjPoint pt = normalize_point(F, raw);
        if (std::find(X.points.begin(), X.points.end(), pt) == X.points.end())
            X.points.push_back(std::move(pt));
    }
    if (X.points.empty()) fail(errc::input_error, "empty point set");
    return X;
}

PointSet cartesian_pointset(const Fq& F, const std::vector<std::vector<FieldElem>>& factors) {
    if (factors.empty()) fail(errc::empty_factor, "need at least one cartesian factor");
    for (const auto& A : factors) {
        if (A.empty()) fail(errc::empty_factor, "empty cartesian factor");
        auto sorted = A;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(errc::input_error, "cartesian factor has repeated elements");
    }
    const int s = static_cast<int>(factors.size()) + 1;
    PointSet X{F, s, {}};
    std::vector<std::size_t> idx(factors.size(), 0);
    while (true) {
        ProjPoint pt;
        pt.pivot = 0;
        pt.coords.resize(s);
        pt.coords[0] = F.one();
        for (std::size_t i = 0; i < factors.size(); ++i) pt.coords[i + 1] = factors[i][idx[i]];
        X.points.push_back(std::move(pt));
        std::size_t j = factors.size();
        while (j > 0) {
            --j;
            if (++idx[j] < factors[j].size()) break;
            idx[j] = 0;
            if (j == 0) return X;
        }
        if (factors.size() == 1 && idx[0] == 0) return X;
    }
}

PointSet torus_pointset(const Fq& F, int s) {
    if (F.q() < 3) fail(errc::field_too_small, "the projective torus needs q >= 3");
    if (s < 2) fail(errc::input_error, "need s >= 2");
    std::vector<std::vector<FieldElem>> factors(s - 1, F.nonzero_elements());
    return cartesian_pointset(F, factors);
}

PointSet projective_space_pointset(const Fq& F, int s) {
    if (s < 2) fail(errc::input_error, "need s >= 2");
    PointSet X{F, s, {}};
    const std::uint64_t q = F.q();
    for (int pivot = 0; pivot < s; ++pivot) {
        int free = s - 1 - pivot;
        std::uint64_t count = saturating_pow(q, free, std::uint64_t(1) << 62);
        for (std::uint64_t code = 0; code < count; ++code) {
            ProjPoint pt;
            pt.pivot = pivot;
            pt.coords.assign(s, F.zero());
            pt.coords[pivot] = F.one();
            std::uint64_t c = code;
            for (int j = pivot + 1; j < s; ++j) {
                pt.coords[j] = F.elem(c % q);
                c /= q;
            }
            X.points.push_back(std::move(pt));
        }
    }
    return X;
}

FieldElem evaluate_point(const Fq& F, const std::vector<FieldElem>& coords, int pivot,
                         const ExpVec& mono, int d) {
    FieldElem v = F.one();
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0) v = F.mul(v, F.pow(coords[i], static_cast<std::uint64_t>(mono[i])));
    return F.mul(v, F.inv(F.pow(coords[pivot], static_cast<std::uint64_t>(d))));
}

EvalCode evaluate_matrix(const PointSet& X, int d) {
    if (d < 1) fail(errc::precondition_violated, "degree must be >= 1");
    EvalCode code;
    code.d = d;
    code.length = static_cast<int>(X.points.size());
    code.monomials = degree_monomials(X.s, d);
    code.rows.reserve(code.monomials.size());
    for (const auto& mono : code.monomials) {
        std::vector<FieldElem> row(X.points.size());
        for (std::size_t j = 0; j < X.points.size(); ++j)
            row[j] = evaluate_point(X.F, X.points[j].coords, X.points[j].pivot, mono, d);
        code.rows.push_back(std::move(row));
    }
    code.dim = static_cast<int>(rref(X.F, code.rows).size());
    return code;
}

int hilbert_X(const PointSet& X, int d) {
    if (d < 0) fail(errc::precondition_violated, "degree must be >= 0");
    if (d == 0) return 1;
    return evaluate_matrix(X, d).dim;
}

int reg_X(const PointSet& X) {
    const int m = static_cast<int>(X.points.size());
    for (int d = 0; d <= m + 1; ++d)
        if (hilbert_X(X, d) == m) return d;
    fail(errc::input_error, "Hilbert function failed to reach |X|");  // cannot happen
}

ZeroCount count_zeros(const PointSet& X, int d, const std::vector<FieldElem>& coeffs) {
    auto monos = degree_monomials(X.s, d);
    if (coeffs.size() != monos.size())
        fail(errc::input_error, "coefficient vector does not match the degree-d basis");
    bool all_zero = true;
    for (auto c : coeffs)
        if (c.index != 0) all_zero = false;
    if (all_zero) fail(errc::zero_polynomial, "the zero polynomial has no zero count");

    ZeroCount zc;
    zc.vanishes_identically = true;
    for (const auto& pt : X.points) {
        FieldElem v = X.F.zero();
        for (std::size_t r = 0; r < monos.size(); ++r) {
            if (coeffs[r].index == 0) continue;
            v = X.F.add(v, X.F.mul(coeffs[r], evaluate_point(X.F, pt.coords, pt.pivot, monos[r], d)));
        }
        if (v.index == 0)
            ++zc.zeros;
        else
            zc.vanishes_identically = false;
    }
    return zc;
}

long long min_distance_enum(const PointSet& X, int d, std::uint64_t cap, bool force) {
    if (X.points.size() < 2) fail(errc::trivial_set, "minimum distance needs |X| >= 2");
    auto code = evaluate_matrix(X, d);
    auto rows = rref(X.F, code.rows);
    const int k = static_cast<int>(rows.size());
    const int n = code.length;
    const std::uint64_t q = X.F.q();

    if (k == n) return 1;  // full space: unit vectors are codewords
    std::uint64_t total = saturating_pow(q, static_cast<std::uint64_t>(k), cap);
    if (!force && total > cap)
        fail(errc::too_many_codewords,
             "q^" + std::to_string(k) + " codewords exceed the cap " + std::to_string(cap) +
                 "; raise it or force");

    const Fq& F = X.F;
    long long best = n + 1;
    std::vector<FieldElem> cur(n);
    // Scale-invariant weights: enumerate one representative per projective
    // class, first nonzero coefficient pinned to 1.
    auto add_scaled = [&](FieldElem lambda, const std::vector<FieldElem>& row) {
        for (int c = 0; c < n; ++c) cur[c] = F.add(cur[c], F.mul(lambda, row[c]));
    };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            int w = 0;
            for (int c = 0; c < n; ++c)
                if (cur[c].index != 0) ++w;
            if (w > 0 && w < best) best = w;
            return;
        }
        self(self, pos + 1);  // coefficient 0
        for (std::uint64_t t = 1; t < q; ++t) {
            add_scaled(F.sub(F.elem(t), F.elem(t - 1)), rows[pos]);
            self(self, pos + 1);
        }
        add_scaled(F.neg(F.elem(q - 1)), rows[pos]);  // restore coefficient 0
    };
    for (int j = 0; j < k && best > 1; ++j) {
        cur = rows[j];
        rec(rec, j + 1);
    }
    return best;
}

long long max_zeros_enum(const PointSet& X, int d, std::uint64_t cap, bool force) {
    return static_cast<long long>(X.points.size()) - min_distance_enum(X, d, cap, force);
}

long long cartesian_min_distance(std::span<const long long> ds, long long d) {
    return fp_closed_form(ds, d);
}

MonomialIdeal cartesian_initial_ideal(std::span<const long long> ds) {
    const int s = static_cast<int>(ds.size()) + 1;
    std::vector<ExpVec> gens;
    for (int i = 0; i < s - 1; ++i) {
        if (ds[i] < 1) fail(errc::precondition_violated, "factor sizes must be >= 1");
        ExpVec g(s, 0);
        g[i + 1] = static_cast<int>(ds[i]);
        gens.push_back(std::move(g));
    }
    return minimalize(s, std::move(gens));
}

std::optional<int> min_hyperplane_cover(const PointSet& X, const ProjPoint& P, int dmax) {
    const int m = static_cast<int>(X.points.size());
    if (m > 63) fail(errc::input_error, "point set too large for cover search");
    int pidx = -1;
    for (int i = 0; i < m; ++i)
        if (X.points[i] == P) pidx = i;
    if (pidx < 0) fail(errc::point_not_in_set, "the avoided point must lie in X");

    const Fq& F = X.F;
    auto dot = [&](const std::vector<FieldElem>& h, const std::vector<FieldElem>& x) {
        FieldElem v = F.zero();
        for (std::size_t i = 0; i < h.size(); ++i) v = F.add(v, F.mul(h[i], x[i]));
        return v;
    };

    // Candidate hyperplanes: normalized dual vectors not through P.
    std::vector<std::uint64_t> masks;
    for (const auto& h : projective_space_pointset(F, X.s).points) {
        if (dot(h.coords, P.coords).index == 0) continue;
        std::uint64_t mask = 0;
        for (int i = 0; i < m; ++i)
            if (i != pidx && dot(h.coords, X.points[i].coords).index == 0)
                mask |= std::uint64_t(1) << i;
        masks.push_back(mask);
    }
    std::uint64_t target = 0;
    for (int i = 0; i < m; ++i)
        if (i != pidx) target |= std::uint64_t(1) << i;
    if (target == 0) return 0;

    const int nc = static_cast<int>(masks.size());
    std::vector<std::uint64_t> suffix_or(nc + 1, 0);
    for (int i = nc - 1; i >= 0; --i) suffix_or[i] = suffix_or[i + 1] | masks[i];

    for (int d = 1; d <= dmax; ++d) {
        auto rec = [&](auto&& self, int start, int left, std::uint64_t covered) -> bool {
            if (covered == target) return true;
            if (left == 0) return false;
            for (int i = start; i + left <= nc; ++i) {
                if ((covered | suffix_or[i]) != target) return false;
                if ((masks[i] & ~covered) == 0) continue;
                if (self(self, i + 1, left - 1, covered | masks[i])) return true;
            }
            return false;
        };
        if (rec(rec, 0, d, 0)) return d;
    }
    return std::nullopt;
}

bool is_monomial_vanishing(const PointSet& X) {
    for (const auto& pt : X.points) {
        int nonzero = 0;
        for (const auto& c : pt.coords)
            if (c.index != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

long long uniform_zero_bound(std::span<const long long> ds, long long d, long long sizeX) {
    auto kl = kl_decompose(ds, d);
    if (kl.beyond_reg) return sizeX - 1;
    return sizeX - fp_closed_form(ds, d);
}

}  // namespace mdf
