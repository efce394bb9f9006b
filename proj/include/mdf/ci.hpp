#pragma once

#include <span>
#include <vector>

#include "mdf/monomial.hpp"

namespace mdf {

enum class CIVariant { case_i, case_ii };

/// Normal form of a dimension-1 complete-intersection monomial ideal:
/// Case I   L = (t_2^{d_2}, ..., t_s^{d_s}), one free variable;
/// Case II  L = (t_1^{d_2}, ..., t_{p-1}^{d_p},
///               t_p^{c_p} t_{p+1}^{c_{p+1}},
///               t_{p+2}^{d_{p+2}}, ..., t_s^{d_s}),  d_{p+1} = c_p + c_{p+1}.
///
/// `orig_var` maps a 0-based normal-frame variable position to the 0-based
/// variable index of the classified input ideal.  `classify_ci_dim1` always
/// produces an ascending degree list; directly constructed shapes (for
/// formula-level work) may have any degree order.
struct CIShape {
    CIVariant variant = CIVariant::case_i;
    int s = 0;
    std::vector<int> orig_var;       // size s, identity for constructed shapes
    std::vector<long long> degrees;  // (d_2, ..., d_s), size s-1
    // Case II only:
    int p = 0;  // 1-based position of the two-variable generator's first variable
    long long c_p = 0, c_p1 = 0;

    ExpVec to_normal_frame(const ExpVec& a) const;
    /// The normal-form ideal in the normal frame.
    MonomialIdeal normal_ideal() const;
};

/// Direct Case II shape with identity permutation; degrees is the full list
/// (d_2, ..., d_s) including d_{p+1} = c_p + c_{p+1} at position p+1.
CIShape make_case_ii_shape(int s, int p, long long cp, long long cp1,
                           std::vector<long long> degrees);

/// Classify a dim-1 monomial ideal as a complete intersection in normal form
/// (ascending degrees).  Throws NotDimOne / NotCompleteIntersection.
CIShape classify_ci_dim1(const MonomialIdeal& L);

struct KLDecomp {
    bool beyond_reg = false;
    int k = 0;
    long long ell = 0;
};

/// Unique (k, l) with d = sum_{i=2}^{k+1} (d_i - 1) + l, 1 <= l <= d_{k+2}-1,
/// for ascending degrees; BeyondReg when d >= sum (d_i - 1).
KLDecomp kl_decompose(std::span<const long long> ds, long long d);

/// deg(S/(L, t^a)) for Case I, L = (t_2^{d_2},...,t_s^{d_s}):
/// d_2...d_s - prod (d_i - a_i).  a has s entries, a[0] unconstrained.
long long degree_case_i(std::span<const long long> ds, const ExpVec& a);

/// deg(S/(L, t^a)) for a Case II shape; `a` is given in the frame of the
/// ideal the shape was classified from.
long long degree_case_ii(const CIShape& shape, const ExpVec& a);

/// The witness monomial t^b (normal frame) whose quotient degree attains
/// deg(S/L) - (d_{k+2} - l) d_{k+3}...d_s, by the five-way case split.
ExpVec case_ii_witness(const CIShape& shape, int k, long long ell);

/// Footprint closed form: (d_{k+2} - l) d_{k+3}...d_s, or 1 beyond the
/// regularity.  Always >= 1.
long long fp_closed_form(std::span<const long long> ds, long long d);

/// Footprint by definition: deg(S/L) minus the maximal oracle degree over
/// the degree-d standard zero-divisor monomials.  Works for any dim-1
/// monomial ideal, complete intersection or not.
long long fp_bruteforce(const MonomialIdeal& L, int d);

struct Aug28Result {
    long long lhs = 0, rhs = 0;
    bool holds = false;
};

/// Both sides of the combinatorial inequality
///   prod (e_i - b_i) >= (sum_{i<=k+1}(e_i-b_i) - (k-1) - b0 - sum_{i>=k+2} b_i) e_{k+2}...e_m.
Aug28Result aug28_inequality(std::span<const long long> e, std::span<const long long> b,
                             long long b0, int k);

/// (prod d_i, sum (d_i - 1)) for a complete intersection with these degrees.
std::pair<long long, long long> ci_degree_reg(std::span<const long long> ds);

}  // namespace mdf
