#include "mdf/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace mdf {

long long total_degree(const ExpVec& a) {
    long long d = 0;
    for (int e : a) d += e;
    return d;
}

bool exp_divides(const ExpVec& g, const ExpVec& a) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > a[i]) return false;
    return true;
}

bool is_unit_ideal(const MonomialIdeal& L) {
    for (const auto& g : L.gens)
        if (total_degree(g) == 0) return true;
    return false;
}

namespace {

void validate_exps(int s, const std::vector<ExpVec>& gens) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != s)
            fail(errc::input_error, "generator has wrong number of variables");
        for (int e : g)
            if (e < 0) fail(errc::input_error, "negative exponent");
    }
}

MonomialIdeal minimalize_unchecked(int s, std::vector<ExpVec> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpVec> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && exp_divides(gens[j], gens[i]) && !(j > i && gens[j] == gens[i]))
                redundant = true;
        if (!redundant) keep.push_back(gens[i]);
    }
    return {s, std::move(keep)};
}

}  // namespace

MonomialIdeal minimalize(int s, std::vector<ExpVec> gens) {
    if (s < 1) fail(errc::input_error, "need at least one variable");
    if (gens.empty()) fail(errc::input_error, "empty generating set");
    validate_exps(s, gens);
    for (const auto& g : gens)
        if (total_degree(g) == 0) fail(errc::unit_ideal, "the constant monomial generates the unit ideal");
    return minimalize_unchecked(s, std::move(gens));
}

bool ideal_contains(const MonomialIdeal& L, const ExpVec& a) {
    if (static_cast<int>(a.size()) != L.s) fail(errc::input_error, "exponent vector has wrong length");
    for (const auto& g : L.gens)
        if (exp_divides(g, a)) return true;
    return false;
}

MonomialIdeal ideal_colon(const MonomialIdeal& L, const ExpVec& a) {
    if (static_cast<int>(a.size()) != L.s) fail(errc::input_error, "exponent vector has wrong length");
    std::vector<ExpVec> gens;
    gens.reserve(L.gens.size());
    for (const auto& g : L.gens) {
        ExpVec h(L.s);
        for (int i = 0; i < L.s; ++i) h[i] = std::max(g[i] - a[i], 0);
        gens.push_back(std::move(h));
    }
    return minimalize_unchecked(L.s, std::move(gens));
}

bool ideal_equal(const MonomialIdeal& A, const MonomialIdeal& B) {
    for (const auto& g : A.gens)
        if (!ideal_contains(B, g)) return false;
    for (const auto& g : B.gens)
        if (!ideal_contains(A, g)) return false;
    return true;
}

bool is_zero_divisor(const MonomialIdeal& L, const ExpVec& a) {
    if (ideal_contains(L, a)) fail(errc::in_ideal, "monomial lies in the ideal");
    return !ideal_equal(ideal_colon(L, a), L);
}

std::vector<ExpVec> degree_monomials(int s, int d) {
    std::vector<ExpVec> out;
    ExpVec cur(s, 0);
    // Odometer: assign variables left to right, first variable heaviest.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == s - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    if (s >= 1 && d >= 0) rec(rec, 0, d);
    return out;
}

std::vector<ExpVec> standard_monomials(const MonomialIdeal& L, int d) {
    if (d < 0) fail(errc::precondition_violated, "degree must be >= 0");
    std::vector<ExpVec> out;
    for (auto& a : degree_monomials(L.s, d))
        if (!ideal_contains(L, a)) out.push_back(std::move(a));
    return out;
}

std::vector<ExpVec> zero_divisor_monomials(const MonomialIdeal& L, int d) {
    if (d < 1) fail(errc::precondition_violated, "zero-divisor enumeration needs degree >= 1");
    std::vector<ExpVec> out;
    for (auto& a : standard_monomials(L, d))
        if (is_zero_divisor(L, a)) out.push_back(std::move(a));
    return out;
}

namespace {

// Inclusion-exclusion terms over subsets of generators: (deg lcm, sign).
std::vector<std::pair<long long, int>> ie_terms(const MonomialIdeal& L) {
    std::vector<std::pair<ExpVec, int>> terms;
    terms.emplace_back(ExpVec(L.s, 0), 1);
    for (const auto& g : L.gens) {
        std::size_t n = terms.size();
        for (std::size_t i = 0; i < n; ++i) {
            ExpVec l = terms[i].first;
            for (int v = 0; v < L.s; ++v) l[v] = std::max(l[v], g[v]);
            terms.emplace_back(std::move(l), -terms[i].second);
        }
    }
    std::vector<std::pair<long long, int>> out;
    out.reserve(terms.size());
    for (auto& [l, sign] : terms) out.emplace_back(total_degree(l), sign);
    return out;
}

// C(n + r, r), number of degree-n monomials in r+1 variables.
long long monomial_count(long long n, int r) {
    if (n < 0) return 0;
    long long result = 1;
    for (int i = 1; i <= r; ++i) result = checked_mul(result, n + i) / i;
    return result;
}

long long hilbert_from_terms(const std::vector<std::pair<long long, int>>& terms, int s, long long d) {
    long long h = 0;
    for (auto [deg, sign] : terms)
        if (d >= deg) h += sign * monomial_count(d - deg, s - 1);
    return h;
}

}  // namespace

long long hilbert_value(const MonomialIdeal& L, int d) {
    if (d < 0) fail(errc::precondition_violated, "degree must be >= 0");
    return hilbert_from_terms(ie_terms(L), L.s, d);
}

HilbertProfile hilbert_oracle(const MonomialIdeal& L) {
    if (L.gens.size() > 24) fail(errc::input_error, "too many generators for the oracle");
    long long bound = 0;
    for (const auto& g : L.gens) bound = checked_add(bound, total_degree(g));
    int window = std::max(3, L.s);
    int top = static_cast<int>(bound) + window;

    auto terms = ie_terms(L);
    HilbertProfile prof;
    prof.values.reserve(top + 1);
    for (int d = 0; d <= top; ++d) prof.values.push_back(hilbert_from_terms(terms, L.s, d));

    long long limit = prof.values.back();
    for (int d = top - window; d <= top; ++d)
        if (prof.values[d] != limit)
            fail(errc::dimension_too_high, "Hilbert function did not stabilize: dim(S/L) >= 2");

    if (limit == 0) {
        prof.dim = 0;
        prof.degree = std::accumulate(prof.values.begin(), prof.values.end(), 0LL);
    } else {
        prof.dim = 1;
        prof.degree = limit;
    }
    int reg = 0;
    for (int d = top; d >= 0; --d) {
        if (prof.values[d] != limit) {
            reg = d + 1;
            break;
        }
    }
    prof.regularity = reg;
    return prof;
}

long long degree_with_monomial(const MonomialIdeal& L, const ExpVec& a) {
    if (ideal_contains(L, a)) fail(errc::in_ideal, "monomial lies in the ideal");
    auto gens = L.gens;
    gens.push_back(a);
    return hilbert_oracle(minimalize_unchecked(L.s, std::move(gens))).degree;
}

}  // namespace mdf
