#include "mdf/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace mdf {

namespace {

struct Checker {
    SuiteResult r;

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++r.cases;
        if (!ok) {
            ++r.failures;
            if (r.first_failure.empty()) r.first_failure = describe();
        }
    }
    void check(bool ok, const char* msg) {
        check(ok, [msg] { return std::string(msg); });
    }
};

std::string show_exps(const ExpVec& a) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
    out << ')';
    return out.str();
}

std::string show_gens(const MonomialIdeal& L) {
    std::string out = "L=";
    for (const auto& g : L.gens) out += show_exps(g);
    return out;
}

PointSet pointset_from_ints(const Fq& F, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<FieldElem>> raws;
    for (const auto& row : rows) {
        std::vector<FieldElem> pt;
        for (int v : row) pt.push_back(F.from_int(v));
        raws.push_back(std::move(pt));
    }
    return make_pointset(F, static_cast<int>(rows[0].size()), raws);
}

// ---- ideal grids shared by the formula suites -------------------------------

// All one-free-variable pure-power ideals, s in {2,3,4}, degrees 1..4.
std::vector<MonomialIdeal> pure_power_grid() {
    std::vector<MonomialIdeal> out;
    for (int s = 2; s <= 4; ++s) {
        for (int free = 0; free < s; ++free) {
            std::vector<int> degs(s, 0);
            std::function<void(int)> rec = [&](int v) {
                if (v == s) {
                    std::vector<ExpVec> gens;
                    for (int i = 0; i < s; ++i) {
                        if (i == free) continue;
                        ExpVec g(s, 0);
                        g[i] = degs[i];
                        gens.push_back(std::move(g));
                    }
                    out.push_back(minimalize(s, std::move(gens)));
                    return;
                }
                if (v == free) {
                    rec(v + 1);
                    return;
                }
                for (int e = 1; e <= 4; ++e) {
                    degs[v] = e;
                    rec(v + 1);
                }
            };
            rec(0);
        }
    }
    return out;
}

// All ideals with one two-variable generator and pure powers elsewhere,
// s in {2,3,4}, every generator degree <= 4.
std::vector<MonomialIdeal> mixed_generator_grid() {
    std::vector<MonomialIdeal> out;
    for (int s = 2; s <= 4; ++s) {
        for (int u = 0; u < s; ++u) {
            for (int w = u + 1; w < s; ++w) {
                for (int cu = 1; cu <= 3; ++cu) {
                    for (int cw = 1; cu + cw <= 4; ++cw) {
                        std::vector<int> rest;
                        for (int v = 0; v < s; ++v)
                            if (v != u && v != w) rest.push_back(v);
                        std::vector<int> degs(rest.size(), 1);
                        std::function<void(std::size_t)> rec = [&](std::size_t j) {
                            if (j == rest.size()) {
                                std::vector<ExpVec> gens;
                                ExpVec m(s, 0);
                                m[u] = cu;
                                m[w] = cw;
                                gens.push_back(std::move(m));
                                for (std::size_t i = 0; i < rest.size(); ++i) {
                                    ExpVec g(s, 0);
                                    g[rest[i]] = degs[i];
                                    gens.push_back(std::move(g));
                                }
                                out.push_back(minimalize(s, std::move(gens)));
                                return;
                            }
                            for (int e = 1; e <= 4; ++e) {
                                degs[j] = e;
                                rec(j + 1);
                            }
                        };
                        rec(0);
                    }
                }
            }
        }
    }
    return out;
}

// Degree-d standard zero-divisor monomials up to degree limit, as (d, a).
std::vector<ExpVec> admissible_monomials(const MonomialIdeal& L, int d) {
    std::vector<ExpVec> out;
    for (auto& a : standard_monomials(L, d))
        if (is_zero_divisor(L, a)) out.push_back(std::move(a));
    return out;
}

// ---- cartesian grid helpers -------------------------------------------------

struct CartesianCase {
    Fq F;
    std::vector<std::vector<FieldElem>> factors;
    std::vector<long long> sizes;  // factor order
};

// All cartesian factor tuples over the given field with 1..3 factors and
// product of sizes <= max_product (every subset choice, not just sizes).
std::vector<CartesianCase> cartesian_grid(const Fq& F, int max_factors, long long max_product) {
    std::vector<std::vector<FieldElem>> subsets;
    auto all = F.elements();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << all.size()); ++mask) {
        std::vector<FieldElem> sub;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) sub.push_back(all[i]);
        subsets.push_back(std::move(sub));
    }
    std::vector<CartesianCase> out;
    std::vector<std::size_t> pick;
    std::function<void(long long)> rec = [&](long long prod) {
        if (!pick.empty()) {
            CartesianCase c{F, {}, {}};
            for (auto i : pick) {
                c.factors.push_back(subsets[i]);
                c.sizes.push_back(static_cast<long long>(subsets[i].size()));
            }
            out.push_back(std::move(c));
        }
        if (static_cast<int>(pick.size()) == max_factors) return;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            long long next = prod * static_cast<long long>(subsets[i].size());
            if (next > max_product) continue;
            pick.push_back(i);
            rec(next);
            pick.pop_back();
        }
    };
    rec(1);
    return out;
}

// Reverse-lexicographic comparison with precedence t_2 > ... > t_s > t_1,
// for exponent vectors of equal total degree.
bool revlex_greater(const ExpVec& a, const ExpVec& b) {
    const int s = static_cast<int>(a.size());
    for (int j = s - 1; j >= 0; --j) {
        int idx = (j == s - 1) ? 0 : j + 1;
        int diff = a[idx] - b[idx];
        if (diff != 0) return diff < 0;
    }
    return false;
}

// ---- suites ------------------------------------------------------------------

void suite_golden(Checker& c);
void suite_case1(Checker& c);
void suite_case2(Checker& c);
void suite_footprint(Checker& c);
void suite_cartesian(Checker& c);
void suite_torus(Checker& c);
void suite_aug28(Checker& c);
void suite_cover(Checker& c);
void suite_structural(Checker& c);

void check_golden_example(Checker& c, const GoldenExample& ex) {
    const auto& X = ex.X;
    c.check(static_cast<long long>(X.points.size()) == ex.degree,
            [&] { return ex.name + ": |X| != degree"; });
    c.check(reg_X(X) == ex.regularity, [&] { return ex.name + ": regularity mismatch"; });
    auto prof = hilbert_oracle(ex.initial_ideal);
    c.check(prof.dim == 1 && prof.degree == ex.degree && prof.regularity == ex.regularity,
            [&] { return ex.name + ": initial-ideal profile mismatch"; });
    for (int d = 1; d <= ex.regularity; ++d) {
        c.check(hilbert_X(X, d) == ex.hilbert[d - 1],
                [&] { return ex.name + ": H(" + std::to_string(d) + ") mismatch"; });
        c.check(min_distance_enum(X, d) == ex.delta[d - 1],
                [&] { return ex.name + ": delta(" + std::to_string(d) + ") mismatch"; });
        c.check(fp_bruteforce(ex.initial_ideal, d) == ex.fp[d - 1],
                [&] { return ex.name + ": fp(" + std::to_string(d) + ") mismatch"; });
    }
}

void suite_golden(Checker& c) {
    auto A = example_nine_points();
    check_golden_example(c, A);
    {
        auto shape = classify_ci_dim1(A.initial_ideal);
        c.check(shape.variant == CIVariant::case_i &&
                    shape.degrees == std::vector<long long>{1, 3, 3},
                "nine-points: expected pure-power normal form (1,3,3)");
        for (int d = 1; d <= A.regularity; ++d)
            c.check(fp_closed_form(shape.degrees, d) == A.fp[d - 1],
                    [&] { return "nine-points: closed form fp(" + std::to_string(d) + ")"; });
    }

    auto B = example_six_points();
    check_golden_example(c, B);
    {
        auto shape = classify_ci_dim1(B.initial_ideal);
        c.check(shape.variant == CIVariant::case_ii &&
                    shape.degrees == std::vector<long long>{2, 3},
                "six-points: expected mixed normal form with degrees (2,3)");
        for (int d = 1; d <= B.regularity; ++d)
            c.check(fp_closed_form(shape.degrees, d) == B.fp[d - 1],
                    [&] { return "six-points: closed form fp(" + std::to_string(d) + ")"; });
    }

    auto C = example_full_plane();
    check_golden_example(c, C);

    // The three binomial relations of the full plane over GF(2) admit eight
    // leading-term selections; exactly six come from an actual monomial
    // order (a separating weight vector exists), and none of them closes the
    // gap fp(2) != delta(2) = 2.
    const std::vector<std::pair<ExpVec, ExpVec>> pairs = {
        {{1, 2, 0}, {2, 1, 0}}, {{1, 0, 2}, {2, 0, 1}}, {{0, 1, 2}, {0, 2, 1}}};
    long long delta2 = min_distance_enum(C.X, 2);
    c.check(delta2 == 2, "full-plane: delta(2) != 2");
    int valid = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<ExpVec> lead(3), other(3);
        for (int i = 0; i < 3; ++i) {
            lead[i] = (mask >> i & 1) ? pairs[i].first : pairs[i].second;
            other[i] = (mask >> i & 1) ? pairs[i].second : pairs[i].first;
        }
        bool feasible = false;
        for (int w1 = 0; w1 <= 4 && !feasible; ++w1)
            for (int w2 = 0; w2 <= 4 && !feasible; ++w2)
                for (int w3 = 0; w3 <= 4 && !feasible; ++w3) {
                    bool ok = true;
                    for (int i = 0; i < 3; ++i) {
                        long long dot = static_cast<long long>(w1) * (lead[i][0] - other[i][0]) +
                                        static_cast<long long>(w2) * (lead[i][1] - other[i][1]) +
                                        static_cast<long long>(w3) * (lead[i][2] - other[i][2]);
                        if (dot <= 0) ok = false;
                    }
                    feasible = ok;
                }
        if (!feasible) continue;
        ++valid;
        auto L = minimalize(3, lead);
        c.check(fp_bruteforce(L, 2) != delta2, [&] {
            return "full-plane: selection " + show_gens(L) + " reaches delta(2)";
        });
    }
    c.check(valid == 6, [&] {
        return "full-plane: expected 6 valid leading-term selections, got " + std::to_string(valid);
    });
}

void suite_case1(Checker& c) {
    for (const auto& L : pure_power_grid()) {
        auto shape = classify_ci_dim1(L);
        c.check(shape.variant == CIVariant::case_i,
                [&] { return show_gens(L) + ": not classified as pure-power"; });
        auto [deg, reg] = ci_degree_reg(shape.degrees);
        auto prof = hilbert_oracle(L);
        c.check(prof.degree == deg && prof.regularity == reg,
                [&] { return show_gens(L) + ": degree/regularity mismatch"; });
        for (int d = 1; d <= static_cast<int>(reg) + 2; ++d) {
            for (const auto& a : admissible_monomials(L, d)) {
                long long closed = degree_case_i(shape.degrees, shape.to_normal_frame(a));
                long long oracle = degree_with_monomial(L, a);
                c.check(closed == oracle, [&] {
                    return show_gens(L) + " a=" + show_exps(a) + ": closed " +
                           std::to_string(closed) + " != oracle " + std::to_string(oracle);
                });
            }
        }
    }
}

void suite_case2(Checker& c) {
    for (const auto& L : mixed_generator_grid()) {
        auto shape = classify_ci_dim1(L);
        c.check(shape.variant == CIVariant::case_ii,
                [&] { return show_gens(L) + ": not classified as mixed"; });
        auto [deg, reg] = ci_degree_reg(shape.degrees);
        auto prof = hilbert_oracle(L);
        c.check(prof.degree == deg && prof.regularity == reg,
                [&] { return show_gens(L) + ": degree/regularity mismatch"; });
        for (int d = 1; d <= static_cast<int>(reg) + 2; ++d) {
            for (const auto& a : admissible_monomials(L, d)) {
                long long closed = degree_case_ii(shape, a);
                long long oracle = degree_with_monomial(L, a);
                c.check(closed == oracle, [&] {
                    return show_gens(L) + " a=" + show_exps(a) + ": closed " +
                           std::to_string(closed) + " != oracle " + std::to_string(oracle);
                });
            }
        }
        // The tabulated witness monomial attains the extremal quotient degree.
        auto Ln = shape.normal_ideal();
        for (int d = 1; d < static_cast<int>(reg); ++d) {
            auto kl = kl_decompose(shape.degrees, d);
            auto b = case_ii_witness(shape, kl.k, kl.ell);
            c.check(total_degree(b) == d && !ideal_contains(Ln, b),
                    [&] { return show_gens(L) + ": bad witness at d=" + std::to_string(d); });
            long long attained = degree_with_monomial(Ln, b);
            long long target = deg - fp_closed_form(shape.degrees, d);
            c.check(attained == target, [&] {
                return show_gens(L) + " d=" + std::to_string(d) + ": witness " + show_exps(b) +
                       " reaches " + std::to_string(attained) + ", want " + std::to_string(target);
            });
        }
    }
}

void suite_footprint(Checker& c) {
    auto grids = pure_power_grid();
    auto mixed = mixed_generator_grid();
    grids.insert(grids.end(), mixed.begin(), mixed.end());
    for (const auto& L : grids) {
        auto shape = classify_ci_dim1(L);
        auto [deg, reg] = ci_degree_reg(shape.degrees);
        (void)deg;
        for (int d = 1; d <= static_cast<int>(reg) + 2; ++d) {
            long long closed = fp_closed_form(shape.degrees, d);
            long long brute = fp_bruteforce(L, d);
            c.check(closed >= 1,
                    [&] { return show_gens(L) + " d=" + std::to_string(d) + ": fp < 1"; });
            c.check(closed == brute, [&] {
                return show_gens(L) + " d=" + std::to_string(d) + ": closed " +
                       std::to_string(closed) + " != brute " + std::to_string(brute);
            });
        }
    }
}

void suite_cartesian(Checker& c) {
    std::vector<Fq> fields = {Fq::make(2), Fq::make(3), Fq::make(2, 2)};
    for (const auto& F : fields) {
        for (const auto& cc : cartesian_grid(F, 3, 12)) {
            auto X = cartesian_pointset(F, cc.factors);
            auto ds = cc.sizes;
            std::sort(ds.begin(), ds.end());
            auto [deg, reg] = ci_degree_reg(ds);
            c.check(static_cast<long long>(X.points.size()) == deg, "cartesian: |X| != prod d_i");
            c.check(reg_X(X) == reg, "cartesian: regularity mismatch");
            if (deg < 2) continue;  // a one-point code has no minimum distance
            for (int d = 1; d <= static_cast<int>(reg) + 1; ++d) {
                long long delta = min_distance_enum(X, d);
                long long closed = cartesian_min_distance(ds, d);
                c.check(delta == closed && closed == fp_closed_form(ds, d), [&] {
                    std::ostringstream out;
                    out << "cartesian q=" << F.q() << " sizes=(";
                    for (auto v : cc.sizes) out << v << ',';
                    out << ") d=" << d << ": enum " << delta << " != closed " << closed;
                    return out.str();
                });
            }
            if (F.q() <= 3 && deg <= 6) {
                // Per-leading-monomial zero bound, over every standard
                // polynomial of each degree.
                auto L = cartesian_initial_ideal(cc.sizes);
                for (int d = 1; d <= static_cast<int>(reg); ++d) {
                    auto basis = standard_monomials(L, d);
                    c.check(hilbert_X(X, d) == static_cast<long long>(basis.size()),
                            "cartesian: H_X(d) != standard monomial count");
                    std::vector<std::vector<FieldElem>> rows;
                    for (const auto& mono : basis) {
                        std::vector<FieldElem> row;
                        for (const auto& pt : X.points)
                            row.push_back(evaluate_point(F, pt.coords, pt.pivot, mono, d));
                        rows.push_back(std::move(row));
                    }
                    std::uint64_t total = 1;
                    for (std::size_t i = 0; i < basis.size(); ++i) total *= F.q();
                    for (std::uint64_t code = 1; code < total; ++code) {
                        std::uint64_t cw = code;
                        std::vector<FieldElem> coeffs;
                        for (std::size_t i = 0; i < basis.size(); ++i) {
                            coeffs.push_back(F.elem(cw % F.q()));
                            cw /= F.q();
                        }
                        int lead = -1;
                        for (std::size_t i = 0; i < basis.size(); ++i) {
                            if (coeffs[i].index == 0) continue;
                            if (lead < 0 || revlex_greater(basis[i], basis[lead]))
                                lead = static_cast<int>(i);
                        }
                        int zeros = 0;
                        for (std::size_t j = 0; j < X.points.size(); ++j) {
                            FieldElem v = F.zero();
                            for (std::size_t i = 0; i < basis.size(); ++i)
                                if (coeffs[i].index != 0)
                                    v = F.add(v, F.mul(coeffs[i], rows[i][j]));
                            if (v.index == 0) ++zeros;
                        }
                        c.check(zeros < static_cast<int>(X.points.size()),
                                "cartesian: standard polynomial vanishes on all of X");
                        long long rest = 1;
                        for (std::size_t i = 0; i < cc.sizes.size(); ++i)
                            rest *= cc.sizes[i] - basis[lead][i + 1];
                        c.check(zeros <= deg - rest, [&] {
                            return "cartesian: zero count " + std::to_string(zeros) +
                                   " beats the bound for leading exponent " + show_exps(basis[lead]);
                        });
                    }
                }
            }
        }
    }
}

void suite_torus(Checker& c) {
    const std::vector<Fq> fields = {Fq::make(3), Fq::make(2, 2)};
    const std::vector<int> svals = {3, 2};
    for (std::size_t t = 0; t < fields.size(); ++t) {
        const Fq& F = fields[t];
        const int s = svals[t];
        const long long q = static_cast<long long>(F.q());
        auto X = torus_pointset(F, s);
        std::vector<long long> ds(s - 1, q - 1);
        auto [deg, reg] = ci_degree_reg(ds);
        c.check(static_cast<long long>(X.points.size()) == deg, "torus: |X| != (q-1)^{s-1}");
        c.check(reg_X(X) == reg, "torus: regularity mismatch");
        auto prof = hilbert_oracle(cartesian_initial_ideal(ds));
        c.check(prof.degree == deg && prof.regularity == reg, "torus: initial-ideal profile");
        auto ipow = [](long long b, long long e) {
            long long r = 1;
            while (e-- > 0) r *= b;
            return r;
        };
        for (int d = 1; d <= static_cast<int>(reg) + 2; ++d) {
            long long delta = min_distance_enum(X, d);
            if (d <= reg - 1) {
                auto kl = kl_decompose(ds, d);
                c.check(delta == fp_closed_form(ds, d), [&] {
                    return "torus q=" + std::to_string(q) + " s=" + std::to_string(s) +
                           " d=" + std::to_string(d) + ": delta != closed form";
                });
                long long bound =
                    ipow(q - 1, s - 1) - ipow(q - 1, s - (kl.k + 2)) * (q - 1 - kl.ell);
                c.check(max_zeros_enum(X, d) == bound, [&] {
                    return "torus q=" + std::to_string(q) + " s=" + std::to_string(s) +
                           " d=" + std::to_string(d) + ": max zeros != bound";
                });
            } else {
                c.check(delta == 1, [&] {
                    return "torus q=" + std::to_string(q) + " s=" + std::to_string(s) +
                           " d=" + std::to_string(d) + ": delta != 1 past regularity";
                });
            }
        }
    }
}

void suite_aug28(Checker& c) {
    // Full grid over all tuples; each tuple is sorted ascending before the
    // inequality is evaluated, so permuted duplicates recheck the same facts.
    for (int m = 1; m <= 4; ++m) {
        std::vector<long long> raw(m, 1);
        std::function<void(int)> rec_e = [&](int i) {
            if (i == m) {
                auto e = raw;
                std::sort(e.begin(), e.end());
                std::vector<long long> b(m, 0);
                std::function<void(int)> rec_b = [&](int j) {
                    if (j == m) {
                        for (long long b0 = 1; b0 <= 3; ++b0) {
                            for (int k = 0; k < m; ++k) {
                                auto res = aug28_inequality(e, b, b0, k);
                                c.check(res.holds, [&] {
                                    std::ostringstream out;
                                    out << "inequality fails: e="
                                        << show_exps(ExpVec(e.begin(), e.end()))
                                        << " b=" << show_exps(ExpVec(b.begin(), b.end()))
                                        << " b0=" << b0 << " k=" << k << " lhs=" << res.lhs
                                        << " rhs=" << res.rhs;
                                    return out.str();
                                });
                            }
                        }
                        return;
                    }
                    for (b[j] = 0; b[j] <= e[j] - 1; ++b[j]) rec_b(j + 1);
                    b[j] = 0;
                };
                rec_b(0);
                return;
            }
            for (raw[i] = 1; raw[i] <= 5; ++raw[i]) rec_e(i + 1);
            raw[i] = 1;
        };
        rec_e(0);
    }
}

void suite_cover(Checker& c) {
    auto A = example_nine_points();
    for (const auto& P : A.X.points) {
        auto res = min_hyperplane_cover(A.X, P, A.regularity);
        c.check(!res || *res >= A.regularity, "nine-points: cover below the regularity");
    }
    auto B = example_six_points();
    for (const auto& P : B.X.points) {
        auto res = min_hyperplane_cover(B.X, P, B.regularity);
        c.check(!res || *res >= B.regularity, "six-points: cover below the regularity");
    }
    Fq F3 = Fq::make(3);
    for (const auto& cc : cartesian_grid(F3, 3, 9)) {
        auto X = cartesian_pointset(F3, cc.factors);
        auto ds = cc.sizes;
        std::sort(ds.begin(), ds.end());
        long long reg = ci_degree_reg(ds).second;
        if (reg == 0) continue;
        for (const auto& P : X.points) {
            auto res = min_hyperplane_cover(X, P, static_cast<int>(reg));
            c.check(!res || *res >= reg, [&] {
                std::ostringstream out;
                out << "cartesian cover below regularity, sizes=(";
                for (auto v : cc.sizes) out << v << ',';
                out << ')';
                return out.str();
            });
        }
    }
}

void suite_structural(Checker& c) {
    std::vector<PointSet> sets;
    sets.push_back(example_nine_points().X);
    sets.push_back(example_six_points().X);
    sets.push_back(example_full_plane().X);
    sets.push_back(torus_pointset(Fq::make(3), 3));
    sets.push_back(projective_space_pointset(Fq::make(3), 2));
    {
        Fq F = Fq::make(3);
        sets.push_back(cartesian_pointset(
            F, {{F.elem(0), F.elem(1)}, {F.elem(0), F.elem(1), F.elem(2)}}));
    }
    for (const auto& X : sets) {
        int reg = reg_X(X);
        int n = static_cast<int>(X.points.size());
        for (int d = 1; d <= reg + 1; ++d) {
            long long k = hilbert_X(X, d);
            long long delta = min_distance_enum(X, d);
            c.check(delta <= n - k + 1, "Singleton bound violated");
            if (d >= reg) c.check(delta == 1, "delta != 1 at/after the regularity");
        }
    }

    std::mt19937 rng(20260823);
    std::vector<Fq> fields = {Fq::make(2), Fq::make(3), Fq::make(2, 2), Fq::make(5)};
    for (int trial = 0; trial < 100; ++trial) {
        const Fq& F = fields[rng() % fields.size()];
        int s = 2 + static_cast<int>(rng() % 3);
        int npts = 1 + static_cast<int>(rng() % 5);
        bool units_only = trial % 2 == 0;
        std::vector<std::vector<FieldElem>> raws;
        bool expect = true;
        for (int i = 0; i < npts; ++i) {
            std::vector<FieldElem> pt(s, F.zero());
            if (units_only) {
                pt[rng() % s] = F.elem(1 + rng() % (F.q() - 1));
            } else {
                while (std::all_of(pt.begin(), pt.end(),
                                   [](FieldElem x) { return x.index == 0; }))
                    for (auto& x : pt) x = F.elem(rng() % F.q());
            }
            int nonzero = 0;
            for (auto x : pt)
                if (x.index != 0) ++nonzero;
            if (nonzero != 1) expect = false;
            raws.push_back(std::move(pt));
        }
        auto X = make_pointset(F, s, raws);
        c.check(is_monomial_vanishing(X) == expect, "unit-point classification mismatch");
    }

    for (int trial = 0; trial < 1000; ++trial) {
        const Fq& F = fields[rng() % fields.size()];
        int s = 2 + static_cast<int>(rng() % 3);
        std::vector<FieldElem> raw(s, F.zero());
        while (std::all_of(raw.begin(), raw.end(), [](FieldElem x) { return x.index == 0; }))
            for (auto& x : raw) x = F.elem(rng() % F.q());
        FieldElem lambda = F.elem(1 + rng() % (F.q() - 1));
        std::vector<FieldElem> scaled;
        for (auto x : raw) scaled.push_back(F.mul(lambda, x));
        auto a = normalize_point(F, raw);
        auto b = normalize_point(F, scaled);
        c.check(a == b && a.coords[a.pivot].index == 1,
                "normalization depends on the representative");
    }
}

using SuiteFn = void (*)(Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"golden", suite_golden},   {"case1", suite_case1},
        {"case2", suite_case2},     {"footprint", suite_footprint},
        {"cartesian", suite_cartesian}, {"torus", suite_torus},
        {"aug28", suite_aug28},     {"cover", suite_cover},
        {"structural", suite_structural},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        Checker c;
        c.r.name = name;
        auto start = std::chrono::steady_clock::now();
        fn(c);
        c.r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return c.r;
    }
    fail(errc::input_error, "unknown suite '" + name + "'");
}

GoldenExample example_nine_points() {
    Fq F = Fq::make(3);
    return {"nine-points",
            pointset_from_ints(F, {{1, 0, 0, 0},
                                   {1, 1, 1, 0},
                                   {1, -1, -1, 0},
                                   {1, 1, 0, 1},
                                   {1, -1, 1, 1},
                                   {1, 0, -1, 1},
                                   {1, -1, 0, -1},
                                   {1, 0, 1, -1},
                                   {1, 1, -1, -1}}),
            minimalize(4, {{0, 1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}),
            {3, 6, 8, 9},
            {6, 3, 2, 1},
            {6, 3, 2, 1},
            9,
            4};
}

GoldenExample example_six_points() {
    Fq F = Fq::make(3);
    return {"six-points",
            pointset_from_ints(
                F, {{1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}, {1, -1, -1}, {1, 1, 1}}),
            minimalize(3, {{0, 2, 1}, {2, 0, 0}}),
            {3, 5, 6},
            {3, 2, 1},
            {3, 2, 1},
            6,
            3};
}

GoldenExample example_full_plane() {
    return {"full-plane",
            projective_space_pointset(Fq::make(2), 3),
            minimalize(3, {{1, 2, 0}, {1, 0, 2}, {0, 1, 2}}),
            {3, 6, 7},
            {4, 2, 1},
            {4, 1, 1},
            7,
            3};
}

std::vector<TableRow> parameter_table(const PointSet& X, const MonomialIdeal* L, int dmin,
                                      int dmax, std::uint64_t cap, bool force) {
    if (dmin < 1 || dmax < dmin) fail(errc::input_error, "empty or invalid degree range");
    int reg = reg_X(X);
    long long m = static_cast<long long>(X.points.size());
    std::vector<TableRow> rows;
    for (int d = dmin; d <= dmax; ++d) {
        TableRow row;
        row.d = d;
        row.length = static_cast<int>(m);
        row.dimension = hilbert_X(X, d);
        row.delta = min_distance_enum(X, d, cap, force);
        if (L) row.fp = fp_bruteforce(*L, d);
        row.regularity = reg;
        row.degree = m;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mdf
