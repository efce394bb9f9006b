#pragma once

#include <vector>

#include "mdf/error.hpp"

namespace mdf {

/// Exponent vector of a monomial t^a in s variables.
using ExpVec = std::vector<int>;

long long total_degree(const ExpVec& a);

/// Componentwise g <= a, i.e. t^g divides t^a.
bool exp_divides(const ExpVec& g, const ExpVec& a);

/// A monomial ideal given by its unique minimal generating set.
/// The unit ideal (generated by 1) is representable only as an internal
/// result of colon computations; `minimalize` rejects it.
struct MonomialIdeal {
    int s = 0;
    std::vector<ExpVec> gens;
};

bool is_unit_ideal(const MonomialIdeal& L);

/// Minimal generating set: drops every generator divisible by another.
/// Throws UnitIdeal if the constant monomial is among the generators.
MonomialIdeal minimalize(int s, std::vector<ExpVec> gens);

/// t^a in L, i.e. some generator divides t^a.
bool ideal_contains(const MonomialIdeal& L, const ExpVec& a);

/// (L : t^a), generated by t^max(g-a,0) over the generators, minimalized.
/// May return the unit ideal (check with is_unit_ideal).
MonomialIdeal ideal_colon(const MonomialIdeal& L, const ExpVec& a);

/// Equality as sets of monomials, decided by mutual generator membership.
bool ideal_equal(const MonomialIdeal& A, const MonomialIdeal& B);

/// t^a is a zero-divisor mod L, i.e. (L : t^a) != L.  Requires t^a not in L.
bool is_zero_divisor(const MonomialIdeal& L, const ExpVec& a);

/// All exponent vectors of total degree d in s variables, lexicographic
/// enumeration order (t_1-heavy first).
std::vector<ExpVec> degree_monomials(int s, int d);

/// Degree-d monomials outside L, in enumeration order.
std::vector<ExpVec> standard_monomials(const MonomialIdeal& L, int d);

/// The degree-d standard monomials that are zero-divisors mod L (the set
/// M_{<,d}).  Requires d >= 1.
std::vector<ExpVec> zero_divisor_monomials(const MonomialIdeal& L, int d);

/// Number of degree-d standard monomials of L (the Hilbert function H(d)),
/// by inclusion-exclusion over generator lcms.
long long hilbert_value(const MonomialIdeal& L, int d);

struct HilbertProfile {
    std::vector<long long> values;  // H(0), H(1), ..., past stabilization
    long long degree = 0;           // multiplicity of S/L
    int regularity = 0;             // least r with H(d) equal to its limit for d >= r
    int dim = 0;                    // 0 or 1
};

/// Hilbert-function oracle for dim(S/L) <= 1.  Counts standard monomials
/// degree by degree until the value is constant over a window of
/// max(3, s) degrees past sum of generator degrees; a constant 0 means
/// dim 0 (degree = total count), a positive constant means dim 1
/// (degree = the constant).  Throws DimensionTooHigh otherwise.
HilbertProfile hilbert_oracle(const MonomialIdeal& L);

/// deg(S/(L, t^a)) via the Hilbert oracle; the independent brute-force
/// reference for all closed-form degree formulas.
long long degree_with_monomial(const MonomialIdeal& L, const ExpVec& a);

}  // namespace mdf
