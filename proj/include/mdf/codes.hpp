#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdf/ci.hpp"
#include "mdf/ff.hpp"
#include "mdf/monomial.hpp"

namespace mdf {

/// A projective point [a], stored with its first nonzero coordinate scaled
/// to 1 (canonical representative).  `pivot` is the index of that coordinate.
struct ProjPoint {
    std::vector<FieldElem> coords;
    int pivot = 0;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
};

/// A finite subset of P^{s-1} over Fq; normalized, deduplicated, ordered.
struct PointSet {
    Fq F;
    int s = 0;
    std::vector<ProjPoint> points;
};

ProjPoint normalize_point(const Fq& F, const std::vector<FieldElem>& raw);

/// Normalize and deduplicate (first occurrence kept).
PointSet make_pointset(const Fq& F, int s, const std::vector<std::vector<FieldElem>>& raws);

/// [1 x A_2 x ... x A_s]: factors[i] is A_{i+2}; s = factors.size() + 1.
PointSet cartesian_pointset(const Fq& F, const std::vector<std::vector<FieldElem>>& factors);

/// The projective torus: all coordinates nonzero.  Needs q >= 3, s >= 2.
PointSet torus_pointset(const Fq& F, int s);

/// All (q^s - 1)/(q - 1) points of P^{s-1}.
PointSet projective_space_pointset(const Fq& F, int s);

/// Generator-matrix data of the degree-d evaluation code: one row per
/// degree-d monomial (enumeration order), one column per point.
struct EvalCode {
    int d = 0;
    int length = 0;
    int dim = 0;
    std::vector<ExpVec> monomials;
    std::vector<std::vector<FieldElem>> rows;
};

/// Evaluate one monomial at a representative, divided by the pivot
/// coordinate to the d-th power (the f_i = t_k^d normalization).
FieldElem evaluate_point(const Fq& F, const std::vector<FieldElem>& coords, int pivot,
                         const ExpVec& mono, int d);

EvalCode evaluate_matrix(const PointSet& X, int d);

/// H_X(d) = rank of the degree-d evaluation matrix; H_X(0) = 1.
int hilbert_X(const PointSet& X, int d);

/// Least d with H_X(d) = |X|.
int reg_X(const PointSet& X);

struct ZeroCount {
    int zeros = 0;
    bool vanishes_identically = false;
};

/// Number of points of X where the degree-d form with these coefficients
/// (over the full degree-d monomial basis, enumeration order) vanishes.
ZeroCount count_zeros(const PointSet& X, int d, const std::vector<FieldElem>& coeffs);

/// Exact minimum distance of C_X(d) by enumerating the row space of the
/// generator matrix (normalized codewords; q^dim is checked against `cap`
/// unless `force`).
long long min_distance_enum(const PointSet& X, int d, std::uint64_t cap = 10'000'000,
                            bool force = false);

/// Largest |V_X(f)| over nonzero codewords f (classes not identically zero
/// on X), by the same enumeration.
long long max_zeros_enum(const PointSet& X, int d, std::uint64_t cap = 10'000'000,
                         bool force = false);

/// Closed-form minimum distance of the cartesian code with |A_i| = d_i;
/// numerically identical to fp_closed_form, exposed because here it is the
/// exact distance rather than a lower bound.
long long cartesian_min_distance(std::span<const long long> ds, long long d);

/// The initial ideal (t_2^{d_2}, ..., t_s^{d_s}) of the cartesian vanishing
/// ideal under revlex with t_2 > ... > t_s > t_1.
MonomialIdeal cartesian_initial_ideal(std::span<const long long> ds);

/// Smallest number d <= dmax of hyperplanes that miss P but jointly cover
/// X \ {P}; nullopt when no such cover exists within dmax.
std::optional<int> min_hyperplane_cover(const PointSet& X, const ProjPoint& P, int dmax);

/// X consists of standard unit points only (equivalently, I(X) is a
/// monomial ideal).
bool is_monomial_vanishing(const PointSet& X);

/// |X| - fp(d) when the initial ideal of I(X) is a complete intersection
/// with these degrees: a uniform bound on zero counts of nonvanishing forms.
long long uniform_zero_bound(std::span<const long long> ds, long long d, long long sizeX);

}  // namespace mdf
