#include "symspace/catbounds.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "symspace/cover.hpp"
#include "symspace/error.hpp"

namespace symspace::cat {

int ExteriorMonomial::length() const { return std::popcount(mask); }

ExteriorMonomial generator(int index) {
  if (index < 0 || index >= 64) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  return {std::uint64_t{1} << index, 1};
}

std::optional<ExteriorMonomial> multiply(const ExteriorMonomial& a, const ExteriorMonomial& b) {
  if ((a.mask & b.mask) != 0) return std::nullopt;  // x_i · x_i = 0
  // Sign of the shuffle that sorts the concatenated indices.
  int inversions = 0;
  for (std::uint64_t rest = b.mask; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    inversions += std::popcount(a.mask >> (i + 1));
  }
  const int sign = a.sign * b.sign * (inversions % 2 == 0 ? 1 : -1);
  return ExteriorMonomial{a.mask | b.mask, sign};
}

int cup_length(const GradedAlgebraSpec& spec) {
  if (spec.degrees.size() > 64) {
    throw Error(ErrorCode::InvalidArgument, "at most 64 exterior generators are supported");
  }
  if (std::any_of(spec.degrees.begin(), spec.degrees.end(), [](int d) { return d <= 0; })) {
    throw Error(ErrorCode::InvalidArgument, "generator degrees must be positive");
  }
  const int m = static_cast<int>(spec.degrees.size());

  // Extend a product by any generator that keeps it nonzero; stop once the
  // current monomial is annihilated by every generator. Any product of
  // positive-degree classes longer than that repeats a generator.
  ExteriorMonomial current{};
  int length = 0;
  bool extended = true;
  while (extended) {
    extended = false;
    for (int i = 0; i < m; ++i) {
      if (auto next = multiply(current, generator(i))) {
        current = *next;
        ++length;
        extended = true;
      }
    }
  }
  return length;
}

GradedAlgebraSpec ai_cohomology(int n) {
  GradedAlgebraSpec spec{{}, CoefficientTag::Mod2};
  for (int d = 2; d <= n; ++d) spec.degrees.push_back(d);
  return spec;
}

GradedAlgebraSpec aii_cohomology(int n) {
  GradedAlgebraSpec spec{{}, CoefficientTag::Integer};
  for (int d = 5; d <= 4 * n - 3; d += 4) spec.degrees.push_back(d);
  return spec;
}

GradedAlgebraSpec sphere_cohomology(int n) { return {{n}, CoefficientTag::Integer}; }

int ganea_upper(int dimension, int connectivity_r) {
  if (connectivity_r < 1) {
    throw Error(ErrorCode::InvalidConnectivity, "connectivity r must be >= 1");
  }
  if (dimension < 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 0");
  return dimension / connectivity_r;
}

int kahler_cat(int complex_dimension) {
  if (complex_dimension < 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 0");
  return complex_dimension;
}

std::string_view to_string(TableFamily family) {
  switch (family) {
    case TableFamily::AI: return "AI";
    case TableFamily::AII: return "AII";
    case TableFamily::AIII: return "AIII";
    case TableFamily::BDI: return "BDI";
    case TableFamily::BDII: return "BDII";
    case TableFamily::DIII: return "DIII";
    case TableFamily::CI: return "CI";
    case TableFamily::CII: return "CII";
  }
  return "?";
}

std::optional<TableFamily> parse_family(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != ' ' && c != '_') key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (auto f : {TableFamily::AI, TableFamily::AII, TableFamily::AIII, TableFamily::BDI,
                 TableFamily::BDII, TableFamily::DIII, TableFamily::CI, TableFamily::CII}) {
    if (key == to_string(f)) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Kahler k) {
  switch (k) {
    case Kahler::Yes: return "yes";
    case Kahler::No: return "no";
    case Kahler::Conditional: return "conditional";
  }
  return "?";
}

namespace {

[[noreturn]] void invalid(TableFamily family, const std::string& condition) {
  throw Error(ErrorCode::InvalidParams,
              std::string(to_string(family)) + " requires " + condition);
}

void require_arity(TableFamily family, const std::vector<int>& params, std::size_t arity) {
  if (params.size() != arity) {
    invalid(family, std::to_string(arity) + " parameter(s)");
  }
}

void settle(SpaceDescriptor& d) {
  if (d.cat_lower && d.cat_upper && *d.cat_lower == *d.cat_upper) d.cat_exact = d.cat_lower;
}

// Hermitian symmetric spaces: simply connected (r = 2) and Kähler.
void kahler_bounds(SpaceDescriptor& d) {
  d.kahler = Kahler::Yes;
  d.connectivity = 2;
  d.cat_upper = ganea_upper(d.dimension, 2);
  d.cat_lower = kahler_cat(d.dimension / 2);
  settle(d);
}

}  // namespace

SpaceDescriptor describe(TableFamily family, const std::vector<int>& params) {
  SpaceDescriptor d;
  d.family = family;
  d.params = params;
  switch (family) {
    case TableFamily::AI: {
      require_arity(family, params, 1);
      const int n = params[0];
      if (n <= 2) invalid(family, "n > 2");
      d.dimension = (n - 1) * (n + 2) / 2;
      d.kahler = Kahler::No;
      d.cat_lower = cup_length(ai_cohomology(n));
      d.cat_upper = static_cast<int>(default_cover({Family::AI, n}).lambdas.size()) - 1;
      break;
    }
    case TableFamily::AII: {
      require_arity(family, params, 1);
      const int n = params[0];
      if (n <= 1) invalid(family, "n > 1");
      d.dimension = (n - 1) * (2 * n + 1);
      d.kahler = Kahler::No;
      d.cat_lower = cup_length(aii_cohomology(n));
      d.cat_upper = static_cast<int>(default_cover({Family::AII, n}).lambdas.size()) - 1;
      break;
    }
    case TableFamily::AIII: {
      require_arity(family, params, 2);
      const int p = params[0], q = params[1];
      if (!(p >= q && q >= 1)) invalid(family, "p >= q >= 1");
      d.dimension = 2 * p * q;
      kahler_bounds(d);
      return d;
    }
    case TableFamily::BDI: {
      require_arity(family, params, 2);
      const int p = params[0], q = params[1];
      if (!(p >= q && q >= 2 && p + q != 4)) invalid(family, "p >= q >= 2 and p + q != 4");
      d.dimension = p * q;
      if (q == 2) {
        kahler_bounds(d);
      } else {
        d.kahler = Kahler::No;  // category open: no bounds recorded
      }
      return d;
    }
    case TableFamily::BDII: {
      require_arity(family, params, 1);
      const int n = params[0];
      if (n < 2) invalid(family, "n >= 2");
      d.dimension = n;
      d.kahler = n == 2 ? Kahler::Yes : Kahler::No;
      d.connectivity = n;  // S^n is (n − 1)-connected
      d.cat_upper = ganea_upper(n, n);
      d.cat_lower = cup_length(sphere_cohomology(n));
      break;
    }
    case TableFamily::DIII: {
      require_arity(family, params, 1);
      const int l = params[0];
      if (l < 4) invalid(family, "l >= 4");
      d.dimension = l * (l - 1);
      kahler_bounds(d);
      return d;
    }
    case TableFamily::CI: {
      require_arity(family, params, 1);
      const int n = params[0];
      if (n < 3) invalid(family, "n >= 3");
      d.dimension = n * (n + 1);
      kahler_bounds(d);
      return d;
    }
    case TableFamily::CII: {
      require_arity(family, params, 2);
      const int p = params[0], q = params[1];
      if (!(p >= q && q >= 1)) invalid(family, "p >= q >= 1");
      d.dimension = 4 * p * q;
      d.kahler = Kahler::No;
      d.connectivity = 4;  // 3-connected
      d.cat_upper = ganea_upper(d.dimension, 4);
      // Same cup-length as the complex Grassmannian U(p+q)/(U(p) x U(q)).
      d.cat_lower = describe(TableFamily::AIII, {p, q}).cat_exact;
      break;
    }
  }
  settle(d);
  return d;
}

const std::vector<TableRow>& classification_table() {
  using P = const std::vector<int>&;
  static const std::vector<TableRow> rows = {
      {TableFamily::AI, "A I", "SU(n)/SO(n) (n>2)", "no", "(n-1)(n+2)/2", "n-1",
       [](P v) { return (v[0] - 1) * (v[0] + 2) / 2; },
       [](P v) -> std::optional<int> { return v[0] - 1; }},
      {TableFamily::AII, "A II", "SU(2n)/Sp(n) (n>1)", "no", "(n-1)(2n+1)", "n-1",
       [](P v) { return (v[0] - 1) * (2 * v[0] + 1); },
       [](P v) -> std::optional<int> { return v[0] - 1; }},
      {TableFamily::AIII, "A III", "U(p+q)/(U(p) x U(q)) (p>=q>=1)", "yes", "2pq", "pq",
       [](P v) { return 2 * v[0] * v[1]; },
       [](P v) -> std::optional<int> { return v[0] * v[1]; }},
      {TableFamily::BDI, "BD I", "SO(p+q)/(SO(p) x SO(q)) (p>=q>=2, p+q!=4)",
       "yes (q=2); no (q!=2)", "pq", "p (q=2); ? (q!=2)",
       [](P v) { return v[0] * v[1]; },
       [](P v) -> std::optional<int> {
         if (v[1] == 2) return v[0];
         return std::nullopt;
       }},
      {TableFamily::BDII, "BD II", "SO(n+1)/SO(n) (n>=2)", "yes (n=2); no (n!=2)", "n", "1",
       [](P v) { return v[0]; }, [](P) -> std::optional<int> { return 1; }},
      {TableFamily::DIII, "D III", "SO(2l)/U(l) (l>=4)", "yes", "l(l-1)", "l(l-1)/2",
       [](P v) { return v[0] * (v[0] - 1); },
       [](P v) -> std::optional<int> { return v[0] * (v[0] - 1) / 2; }},
      {TableFamily::CI, "C I", "Sp(n)/U(n) (n>=3)", "yes", "n(n+1)", "n(n+1)/2",
       [](P v) { return v[0] * (v[0] + 1); },
       [](P v) -> std::optional<int> { return v[0] * (v[0] + 1) / 2; }},
      {TableFamily::CII, "C II", "Sp(p+q)/(Sp(p) x Sp(q)) (p>=q>=1)", "no", "4pq", "pq",
       [](P v) { return 4 * v[0] * v[1]; },
       [](P v) -> std::optional<int> { return v[0] * v[1]; }},
  };
  return rows;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string table_markdown() {
  std::ostringstream out;
  out << "| family | G/K | Kahler | dimension | cat |\n";
  out << "|---|---|---|---|---|\n";
  for (const TableRow& row : classification_table()) {
    out << "| " << row.label << " | " << row.space << " | " << row.kahler << " | "
        << row.dimension << " | " << row.cat << " |\n";
  }
  return out.str();
}

std::string table_csv() {
  std::ostringstream out;
  out << "family,G/K,Kahler,dimension,cat\n";
  for (const TableRow& row : classification_table()) {
    out << csv_field(row.label) << ',' << csv_field(row.space) << ',' << csv_field(row.kahler)
        << ',' << csv_field(row.dimension) << ',' << csv_field(row.cat) << '\n';
  }
  return out.str();
}

}  // namespace symspace::cat
