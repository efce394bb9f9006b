#pragma once

#include <string>
#include <vector>

#include "mdf/codes.hpp"

namespace mdf {

/// "p" or "p^k", e.g. "3", "2^4".
Fq parse_field_spec(const std::string& spec);

/// Header line "s=<n>", then one generator per line as space-separated
/// exponents.  Blank lines and lines starting with '#' are skipped.
MonomialIdeal load_ideal(const std::string& path);

/// A parsed cartesian description: the field and the factors A_2, ..., A_s.
struct CartesianSpec {
    Fq F;
    std::vector<std::vector<FieldElem>> factors;

    std::vector<long long> sizes() const;
    PointSet pointset() const { return cartesian_pointset(F, factors); }
};

/// "cartesian q=<p^k> A2={..} A3={..} ..." — braces optional, elements are
/// field element indices separated by commas.
CartesianSpec parse_cartesian_spec(const std::string& text);

/// Header "q=<p^k> s=<n>", then one point per line as space-separated field
/// element indices.  A file whose first non-blank line starts with
/// "cartesian" is parsed as a cartesian spec instead.
PointSet load_points(const std::string& path);

}  // namespace mdf
