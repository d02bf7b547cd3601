#pragma once

#include <istream>
#include <vector>

#include <nlohmann/json.hpp>

#include "symspace/factorizations.hpp"
#include "symspace/homotopy.hpp"
#include "symspace/linalg.hpp"
#include "symspace/spaces.hpp"

namespace symspace::io {

using nlohmann::json;

// Matrix: {"n": <int>, "entries": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& X);
ComplexMatrix matrix_from_json(const json& j);

// SpacePoint: {"family": "AI"|"AII", "n": <int>, "matrix": <Matrix>}.
json point_to_json(const SpacePoint& p);
/// Parses the point without checking membership.
SpacePoint point_from_json(const json& j);

json report_to_json(const MembershipReport& r);
json factorization_to_json(const FactorizationResult& f);
json branch_log_to_json(const BranchLog& b);
json path_to_json(const HomotopyPath& path);

Family parse_family(std::string_view text);

/// Reads one JSON document, or newline-delimited records, from a stream.
std::vector<json> read_documents(std::istream& in);

}  // namespace symspace::io
