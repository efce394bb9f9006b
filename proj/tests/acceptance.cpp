// Acceptance gate: ten checks, one pass/fail line each, nonzero exit on any
// failure.  Each check carries a wall-clock budget; exceeding it fails the
// check even if the values agree.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mdf/suites.hpp"

using namespace mdf;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, double seconds, double budget,
            const std::string& detail = "") {
    bool in_budget = seconds <= budget;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%2d] %s  %6.2fs (budget %.0fs)  %s%s%s\n", id, pass ? "PASS" : "FAIL", seconds,
                budget, what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    if (ok && !in_budget) std::printf("     over time budget\n");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool verify_example(const GoldenExample& ex, std::string& detail) {
    if (static_cast<long long>(ex.X.points.size()) != ex.degree) {
        detail = "|X| != " + std::to_string(ex.degree);
        return false;
    }
    if (reg_X(ex.X) != ex.regularity) {
        detail = "regularity mismatch";
        return false;
    }
    auto prof = hilbert_oracle(ex.initial_ideal);
    if (prof.dim != 1 || prof.degree != ex.degree || prof.regularity != ex.regularity) {
        detail = "initial-ideal degree/regularity mismatch";
        return false;
    }
    for (int d = 1; d <= ex.regularity; ++d) {
        if (hilbert_X(ex.X, d) != ex.hilbert[d - 1]) {
            detail = "H(" + std::to_string(d) + ") mismatch";
            return false;
        }
        if (min_distance_enum(ex.X, d) != ex.delta[d - 1]) {
            detail = "delta(" + std::to_string(d) + ") mismatch";
            return false;
        }
        if (fp_bruteforce(ex.initial_ideal, d) != ex.fp[d - 1]) {
            detail = "fp(" + std::to_string(d) + ") mismatch";
            return false;
        }
    }
    return true;
}

// All leading-term selections from the three binomial relations of the full
// plane over GF(2): count those realized by a weight vector and check that
// none of them matches delta(2).
bool check_selections(const GoldenExample& C, std::string& detail) {
    const std::vector<std::pair<ExpVec, ExpVec>> pairs = {
        {{1, 2, 0}, {2, 1, 0}}, {{1, 0, 2}, {2, 0, 1}}, {{0, 1, 2}, {0, 2, 1}}};
    long long delta2 = min_distance_enum(C.X, 2);
    if (delta2 != 2) {
        detail = "delta(2) != 2";
        return false;
    }
    int valid = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<ExpVec> lead(3);
        bool feasible = false;
        for (int i = 0; i < 3; ++i)
            lead[i] = (mask >> i & 1) ? pairs[i].first : pairs[i].second;
        for (int w1 = 0; w1 <= 4 && !feasible; ++w1)
            for (int w2 = 0; w2 <= 4 && !feasible; ++w2)
                for (int w3 = 0; w3 <= 4 && !feasible; ++w3) {
                    bool ok = true;
                    for (int i = 0; i < 3; ++i) {
                        const ExpVec& a = lead[i];
                        const ExpVec& b = (mask >> i & 1) ? pairs[i].second : pairs[i].first;
                        long long dot = static_cast<long long>(w1) * (a[0] - b[0]) +
                                        static_cast<long long>(w2) * (a[1] - b[1]) +
                                        static_cast<long long>(w3) * (a[2] - b[2]);
                        if (dot <= 0) ok = false;
                    }
                    feasible = ok;
                }
        if (!feasible) continue;
        ++valid;
        if (fp_bruteforce(minimalize(3, lead), 2) == delta2) {
            detail = "a selection reaches delta(2)";
            return false;
        }
    }
    if (valid != 6) {
        detail = "expected 6 selections, got " + std::to_string(valid);
        return false;
    }
    return true;
}

void run_golden(int id, const GoldenExample& ex, double budget, bool selections = false) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = verify_example(ex, detail);
    if (ok && selections) ok = check_selections(ex, detail);
    report(id, ex.name + " reference table", ok, seconds_since(start), budget, detail);
}

void run_named_suites(int id, const std::vector<std::string>& names, const std::string& what,
                      double budget, long long min_cases = 0) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    long long cases = 0;
    std::string detail;
    for (const auto& name : names) {
        auto r = run_suite(name);
        cases += r.cases;
        if (!r.passed()) {
            ok = false;
            detail = r.name + ": " + r.first_failure;
        }
    }
    if (ok && cases < min_cases) {
        ok = false;
        detail = "only " + std::to_string(cases) + " cases";
    }
    report(id, what + " (" + std::to_string(cases) + " cases)", ok, seconds_since(start), budget,
           detail);
}

}  // namespace

int main() {
    run_golden(1, example_nine_points(), 1.0);
    run_golden(2, example_six_points(), 1.0);
    run_golden(3, example_full_plane(), 5.0, true);
    run_named_suites(4, {"case1", "case2"}, "degree formulas vs oracle", 60.0);
    run_named_suites(5, {"footprint"}, "footprint closed form vs definition", 120.0);
    run_named_suites(6, {"cartesian"}, "cartesian distance equalities", 60.0);
    run_named_suites(7, {"torus"}, "torus distances and zero bounds", 10.0);
    run_named_suites(8, {"aug28"}, "combinatorial inequality grid", 30.0, 100000);
    run_named_suites(9, {"cover"}, "hyperplane covering bound", 60.0);
    run_named_suites(10, {"structural"}, "structural code properties", 10.0);

    if (failures) {
        std::printf("%d of 10 checks failed\n", failures);
        return 1;
    }
    std::printf("all 10 checks passed\n");
    return 0;
}
