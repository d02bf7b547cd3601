#include "symspace/json_io.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "symspace/error.hpp"

namespace symspace::io {

json matrix_to_json(const ComplexMatrix& X) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      entries.push_back(json::array({X(i, j).real(), X(i, j).imag()}));
    }
  }
  return json{{"n", X.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw Error(ErrorCode::ParseError, "matrix needs \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw Error(ErrorCode::ParseError, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(j["n"].get<long long>());
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n) {
    throw Error(ErrorCode::ParseError, "\"entries\" must hold n*n values");
  }
  ComplexMatrix X(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k) {
    const json& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error(ErrorCode::ParseError, "entry " + std::to_string(k) + " is not [re, im]");
    }
    const Complex z(e[0].get<double>(), e[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::ParseError, "entry " + std::to_string(k) + " is not finite");
    }
    X(k / n, k % n) = z;
  }
  return X;
}

Family parse_family(std::string_view text) {
  if (text == "AI" || text == "ai") return Family::AI;
  if (text == "AII" || text == "aii") return Family::AII;
  throw Error(ErrorCode::ParseError, "unknown family \"" + std::string(text) + "\"");
}

json point_to_json(const SpacePoint& p) {
  return json{{"family", std::string(to_string(p.kind.family))},
              {"n", p.kind.n},
              {"matrix", matrix_to_json(p.matrix)}};
}

SpacePoint point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n") || !j.contains("matrix")) {
    throw Error(ErrorCode::ParseError, "point needs \"family\", \"n\" and \"matrix\"");
  }
  if (!j["family"].is_string() || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "malformed point header");
  }
  const SpaceKind kind{parse_family(j["family"].get<std::string>()), j["n"].get<int>()};
  if (kind.n < 1) throw Error(ErrorCode::ParseError, "\"n\" must be positive");
  SpacePoint p{kind, matrix_from_json(j["matrix"])};
  if (p.matrix.rows() != kind.ambient_size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size does not match the family");
  }
  return p;
}

json report_to_json(const MembershipReport& r) {
  return json{{"unitarity", r.unitarity},
              {"determinant", r.determinant},
              {"symmetry", r.symmetry},
              {"member", r.member}};
}

json factorization_to_json(const FactorizationResult& f) {
  return json{{"P", matrix_to_json(f.P)}, {"residual", f.residual}};
}

json branch_log_to_json(const BranchLog& b) {
  return json{{"H", matrix_to_json(b.H)},
              {"alpha", b.alpha},
              {"winding", b.winding},
              {"margin", b.margin}};
}

json path_to_json(const HomotopyPath& path) {
  json samples = json::array();
  for (const HomotopySample& s : path.samples) {
    samples.push_back(json{{"s", s.s},
                           {"matrix", matrix_to_json(s.point.matrix)},
                           {"residuals", report_to_json(s.residuals)}});
  }
  return samples;
}

std::vector<json> read_documents(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<json> docs;
  try {
    // A single (possibly pretty-printed) document first, then NDJSON.
    if (json::accept(text)) {
      json doc = json::parse(text);
      if (doc.is_array() && !doc.empty() && doc.front().is_object() && doc.front().contains("family")) {
        for (auto& item : doc) docs.push_back(std::move(item));
      } else {
        docs.push_back(std::move(doc));
      }
      return docs;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      docs.push_back(json::parse(line));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (docs.empty()) throw Error(ErrorCode::ParseError, "no JSON documents in input");
  return docs;
}

}  // namespace symspace::io
