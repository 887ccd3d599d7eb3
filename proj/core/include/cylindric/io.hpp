#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cylindric/cylindric_partition.hpp"
#include "cylindric/identity.hpp"
#include "cylindric/paths.hpp"
#include "cylindric/series.hpp"

namespace cylindric {

// Single-line JSON records. Parsers throw std::invalid_argument on malformed
// or inconsistent input, and ignore keys they do not know.

// {"profile": "10", "mu": [[], [1], []]}
std::string to_json(const CylindricPlanePartition& c);
CylindricPlanePartition cpp_from_json(std::string_view line);

// {"num": [[a, b], ...], "den": [[a, b], ...]}
std::string to_json(const FactorList& f);
FactorList factors_from_json(std::string_view line);

// {"T": 5, "paths": [{"start": 2, "steps": "10101"}, ...]}
std::string to_json(const PathFamily& f);
PathFamily path_family_from_json(std::string_view line);

// A cylindric plane partition with its weight and Macdonald weight, and the
// value of the latter at a point if one is given.
std::string weight_record(const CylindricPlanePartition& c, const std::optional<QtPoint>& point);

// {"variables": [...], "terms": [[[e...], "num", "den"], ...]} in graded order.
std::string to_json(const Series& f);

std::string to_json(const IdentityReport& r);

}  // namespace cylindric
