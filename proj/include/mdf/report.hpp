#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mdf {

/// One output row of the per-degree parameter table.
struct TableRow {
    int d = 0;
    int length = 0;
    int dimension = 0;
    long long delta = 0;
    std::optional<long long> fp;  // absent when no initial ideal is available
    int regularity = 0;
    long long degree = 0;
};

std::string to_csv(const std::vector<TableRow>& rows);
std::string to_json(const std::vector<TableRow>& rows);

}  // namespace mdf
