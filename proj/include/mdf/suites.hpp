#pragma once

#include <string>
#include <vector>

#include "mdf/codes.hpp"
#include "mdf/report.hpp"

namespace mdf {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;
    double seconds = 0.0;
    bool passed() const { return cases > 0 && failures == 0; }
};

/// Registered suite names, in run order.
std::vector<std::string> suite_names();

/// Run one suite by name; throws input_error for unknown names.
SuiteResult run_suite(const std::string& name);

/// An embedded reference point set with its known parameters (d = 1..reg).
struct GoldenExample {
    std::string name;
    PointSet X;
    MonomialIdeal initial_ideal;
    std::vector<long long> hilbert;
    std::vector<long long> delta;
    std::vector<long long> fp;
    long long degree = 0;
    int regularity = 0;
};

/// Nine points in P^3 over GF(3); initial ideal (t_2, t_3^3, t_4^3).
GoldenExample example_nine_points();
/// Six points in P^2 over GF(3); initial ideal (t_2^2 t_3, t_1^2).
GoldenExample example_six_points();
/// All of P^2 over GF(2); fixture initial ideal (t_1 t_2^2, t_1 t_3^2, t_2 t_3^2).
GoldenExample example_full_plane();

/// Per-degree parameter rows for a point set; `L` (optional) supplies the
/// initial ideal used for the fp column.
std::vector<TableRow> parameter_table(const PointSet& X, const MonomialIdeal* L, int dmin,
                                      int dmax, std::uint64_t cap = 10'000'000,
                                      bool force = false);

}  // namespace mdf
