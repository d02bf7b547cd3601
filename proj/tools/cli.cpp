#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "symspace/catbounds.hpp"
#include "symspace/cover.hpp"
#include "symspace/error.hpp"
#include "symspace/factorizations.hpp"
#include "symspace/homotopy.hpp"
#include "symspace/json_io.hpp"
#include "symspace/spaces.hpp"

namespace symspace::cli {

namespace {

using io::json;

struct Options {
  std::string space;
  int n = 0;
  int count = 1;
  std::optional<std::uint64_t> seed;
  std::string input;
  std::optional<double> alpha;
  bool alpha_from_cover = false;
  int steps = 16;
  int trials = 100;
  std::string format = "md";
  std::optional<double> tol;
  bool audit = false;
  std::string family;
  std::optional<int> p, q, l;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Tolerances tolerances(const Options& o) {
  Tolerances t;
  if (o.tol) t.membership_tol = *o.tol;
  t.validate();
  return t;
}

std::optional<SpaceKind> kind_from_flags(const Options& o) {
  if (o.space.empty()) return std::nullopt;
  if (o.n < 1) throw UsageError("--n must be a positive integer");
  return SpaceKind{io::parse_family(o.space), o.n};
}

std::vector<SpacePoint> load_points(const Options& o, std::istream& in) {
  if (o.input.empty()) throw UsageError("--input is required");
  std::vector<json> docs;
  if (o.input == "-") {
    docs = io::read_documents(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open " + o.input);
    docs = io::read_documents(file);
  }
  const auto flag_kind = kind_from_flags(o);
  std::vector<SpacePoint> points;
  for (const json& doc : docs) {
    if (doc.is_object() && doc.contains("family")) {
      SpacePoint p = io::point_from_json(doc);
      if (flag_kind && !(p.kind == *flag_kind)) {
        throw Error(ErrorCode::DimensionMismatch, "record does not match --space/--n");
      }
      points.push_back(std::move(p));
    } else {
      if (!flag_kind) throw UsageError("bare matrix input needs --space and --n");
      SpacePoint p{*flag_kind, io::matrix_from_json(doc)};
      if (p.matrix.rows() != flag_kind->ambient_size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix size does not match --space/--n");
      }
      points.push_back(std::move(p));
    }
  }
  return points;
}

double resolve_alpha(const Options& o, const SpacePoint& point, const Tolerances& tol) {
  if (o.alpha) return *o.alpha;
  if (!o.alpha_from_cover) throw UsageError("give --alpha or --alpha-from-cover");
  const CoverConfig config = default_cover(point.kind);
  const CoverClassification cls = classify(config, point, tol);
  return branch_angle(config, cls.witness);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const auto kind = kind_from_flags(o);
  if (!kind) throw UsageError("sample needs --space and --n");
  if (!o.seed) throw UsageError("sample needs --seed");
  if (o.count < 1) throw UsageError("--count must be positive");
  const Tolerances tol = tolerances(o);
  for (int i = 0; i < o.count; ++i) {
    emit(out, io::point_to_json(sample(*kind, trial_seed(*o.seed, static_cast<std::uint64_t>(i)), tol)));
  }
  err << "sampled " << o.count << " point(s) of " << to_string(kind->family) << "(" << kind->n
      << ")\n";
  return 0;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Tolerances tol = tolerances(o);
  int failures = 0;
  for (const SpacePoint& p : load_points(o, in)) {
    const MembershipReport r = is_member(p.kind, p.matrix, tol);
    if (!r.member) ++failures;
    emit(out, json{{"family", std::string(to_string(p.kind.family))},
                   {"n", p.kind.n},
                   {"report", io::report_to_json(r)}});
  }
  err << (failures == 0 ? "all records are members\n"
                        : std::to_string(failures) + " record(s) outside the space\n");
  return failures == 0 ? 0 : 1;
}

int cmd_factor(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Tolerances tol = tolerances(o);
  double worst = 0.0;
  for (const SpacePoint& p : load_points(o, in)) {
    const FactorizationResult f =
        p.kind.family == Family::AI ? factor_symmetric(p.matrix, tol) : factor_AII(p, tol);
    worst = std::max(worst, f.residual);
    emit(out, io::factorization_to_json(f));
  }
  err << "max reconstruction residual " << worst << '\n';
  return 0;
}

int cmd_log(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Tolerances tol = tolerances(o);
  for (const SpacePoint& p : load_points(o, in)) {
    const BranchLog b = branch_log(p.matrix, resolve_alpha(o, p, tol), tol);
    emit(out, io::branch_log_to_json(b));
    err << "alpha " << b.alpha << " winding " << b.winding << " margin " << b.margin << '\n';
  }
  return 0;
}

int cmd_contract(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.steps < 1) throw UsageError("--steps must be positive");
  const Tolerances tol = tolerances(o);
  for (const SpacePoint& p : load_points(o, in)) {
    const HomotopyPath path = contract(p, resolve_alpha(o, p, tol), o.steps, tol);
    double worst = 0.0;
    for (const auto& s : path.samples) worst = std::max(worst, s.residuals.max_residual());
    emit(out, io::path_to_json(path));
    err << "winding " << path.winding << ", max membership residual " << worst << '\n';
  }
  return 0;
}

int cmd_cover(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Tolerances tol = tolerances(o);
  if (o.audit) {
    const auto kind = kind_from_flags(o);
    if (!kind) throw UsageError("cover --audit needs --space and --n");
    if (!o.seed) throw UsageError("cover --audit needs --seed");
    if (o.trials < 1) throw UsageError("--trials must be positive");
    const CoverAuditReport r = cover_audit(*kind, o.trials, *o.seed, tol);
    emit(out, json{{"family", std::string(to_string(kind->family))},
                   {"n", kind->n},
                   {"trials", r.trials},
                   {"covered_fraction", r.covered_fraction()},
                   {"occupancy", r.occupancy},
                   {"witness_counts", r.witness_counts},
                   {"min_witness_margin", r.min_witness_margin},
                   {"odd_multiplicity_failures", r.odd_multiplicity_failures}});
    err << "covered fraction " << r.covered_fraction() << '\n';
    return (r.covered == r.trials && r.odd_multiplicity_failures == 0) ? 0 : 1;
  }
  for (const SpacePoint& p : load_points(o, in)) {
    const CoverConfig config = default_cover(p.kind);
    const CoverClassification c = classify(config, p, tol);
    emit(out, json{{"family", std::string(to_string(p.kind.family))},
                   {"n", p.kind.n},
                   {"memberships", c.memberships},
                   {"margins", c.margins},
                   {"witness_r", c.witness + 1},
                   {"alpha", branch_angle(config, c.witness)}});
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.format == "md") {
    out << cat::table_markdown();
  } else if (o.format == "csv") {
    out << cat::table_csv();
  } else if (o.format == "json") {
    json rows = json::array();
    for (const auto& row : cat::classification_table()) {
      rows.push_back(json{{"family", row.label},
                          {"G/K", row.space},
                          {"Kahler", row.kahler},
                          {"dimension", row.dimension},
                          {"cat", row.cat}});
    }
    emit(out, rows);
  } else {
    throw UsageError("--format must be json, csv or md");
  }
  return 0;
}

int cmd_describe(const Options& o, std::ostream& out) {
  const auto family = cat::parse_family(o.family);
  if (!family) throw UsageError("unknown --family \"" + o.family + "\"");
  std::vector<int> params;
  if (o.p || o.q) {
    if (!o.p || !o.q) throw UsageError("give both --p and --q");
    params = {*o.p, *o.q};
  } else if (o.l) {
    params = {*o.l};
  } else if (o.n > 0) {
    params = {o.n};
  }
  const cat::SpaceDescriptor d = cat::describe(*family, params);
  const auto maybe = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  emit(out, json{{"family", std::string(cat::to_string(d.family))},
                 {"params", d.params},
                 {"dimension", d.dimension},
                 {"kahler", std::string(cat::to_string(d.kahler))},
                 {"connectivity", maybe(d.connectivity)},
                 {"cat_lower", maybe(d.cat_lower)},
                 {"cat_upper", maybe(d.cat_upper)},
                 {"cat_exact", maybe(d.cat_exact)}});
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Matrix models of SU(n)/SO(n) and SU(2n)/Sp(n): sampling, factorization, "
               "contracting homotopies and category bounds",
               "symspace"};
  app.require_subcommand(1);
  Options o;

  auto space_flags = [&](CLI::App* cmd) {
    cmd->add_option("--space", o.space, "ai or aii")->check(CLI::IsMember({"ai", "aii", "AI", "AII"}));
    cmd->add_option("--n", o.n, "space parameter");
    cmd->add_option("--tol", o.tol, "membership tolerance (Frobenius)");
  };
  auto alpha_flags = [&](CLI::App* cmd) {
    auto* alpha = cmd->add_option("--alpha", o.alpha, "branch angle in radians");
    cmd->add_flag("--alpha-from-cover", o.alpha_from_cover,
                  "use the avoided eigenvalue of the default cover's witness set")
        ->excludes(alpha);
  };

  auto* sample_cmd = app.add_subcommand("sample", "draw seeded points of a space");
  space_flags(sample_cmd);
  sample_cmd->add_option("--count", o.count, "number of points");
  sample_cmd->add_option("--seed", o.seed, "RNG seed");

  auto* check_cmd = app.add_subcommand("check", "membership residuals of input records");
  space_flags(check_cmd);
  check_cmd->add_option("--input", o.input, "JSON file, or - for stdin");

  auto* factor_cmd = app.add_subcommand("factor", "X = P tP (AI) or X = J P J tP (AII)");
  space_flags(factor_cmd);
  factor_cmd->add_option("--input", o.input, "JSON file, or - for stdin");

  auto* log_cmd = app.add_subcommand("log", "branch-restricted matrix logarithm");
  space_flags(log_cmd);
  log_cmd->add_option("--input", o.input, "JSON file, or - for stdin");
  alpha_flags(log_cmd);

  auto* contract_cmd = app.add_subcommand("contract", "sample the contracting homotopy");
  space_flags(contract_cmd);
  contract_cmd->add_option("--input", o.input, "JSON file, or - for stdin");
  alpha_flags(contract_cmd);
  contract_cmd->add_option("--steps", o.steps, "number of homotopy steps");

  auto* cover_cmd = app.add_subcommand("cover", "classify points into covering sets, or audit");
  space_flags(cover_cmd);
  cover_cmd->add_option("--input", o.input, "JSON file, or - for stdin");
  cover_cmd->add_flag("--audit", o.audit, "Monte-Carlo audit of the covering property");
  cover_cmd->add_option("--trials", o.trials, "audit sample count");
  cover_cmd->add_option("--seed", o.seed, "RNG seed");

  auto* table_cmd = app.add_subcommand("table", "classification table of category values");
  table_cmd->add_option("--format", o.format, "json, csv or md");

  auto* describe_cmd = app.add_subcommand("describe", "one row of the classification");
  describe_cmd->add_option("--family", o.family, "AI, AII, AIII, BDI, BDII, DIII, CI, CII")->required();
  describe_cmd->add_option("--n", o.n, "n for AI, AII, BDII, CI");
  describe_cmd->add_option("--p", o.p, "p for AIII, BDI, CII");
  describe_cmd->add_option("--q", o.q, "q for AIII, BDI, CII");
  describe_cmd->add_option("--l", o.l, "l for DIII");

  std::vector<const char*> argv{"symspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*sample_cmd) return cmd_sample(o, out, err);
    if (*check_cmd) return cmd_check(o, in, out, err);
    if (*factor_cmd) return cmd_factor(o, in, out, err);
    if (*log_cmd) return cmd_log(o, in, out, err);
    if (*contract_cmd) return cmd_contract(o, in, out, err);
    if (*cover_cmd) return cmd_cover(o, in, out, err);
    if (*table_cmd) return cmd_table(o, out);
    if (*describe_cmd) return cmd_describe(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? 2 : 1;
  }
  return 2;
}

}  // namespace symspace::cli
