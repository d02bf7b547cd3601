#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symspace::cat {

enum class CoefficientTag { Mod2, Integer };

/// Exterior algebra on generators of the listed degrees.
struct GradedAlgebraSpec {
  std::vector<int> degrees;
  CoefficientTag coefficients = CoefficientTag::Mod2;
};

/// Monomial x_{i1}·…·x_{ik} of an exterior algebra, stored as a bitmask of
/// generator indices. A zero product is represented by an empty optional.
struct ExteriorMonomial {
  std::uint64_t mask = 0;
  int sign = 1;

  int length() const;
};

std::optional<ExteriorMonomial> multiply(const ExteriorMonomial& a, const ExteriorMonomial& b);
ExteriorMonomial generator(int index);

/// Longest nonzero product of positive-degree classes.
int cup_length(const GradedAlgebraSpec& spec);

/// Λ(x_2, …, x_n), mod 2.
GradedAlgebraSpec ai_cohomology(int n);
/// Λ(x_5, x_9, …, x_{4n−3}), integral.
GradedAlgebraSpec aii_cohomology(int n);
/// Λ(x_n): the n-sphere.
GradedAlgebraSpec sphere_cohomology(int n);

/// cat ≤ dim / r for an (r − 1)-connected complex. Throws InvalidConnectivity.
int ganea_upper(int dimension, int connectivity_r);

/// cat = d for a simply connected complex d-manifold carrying a Kähler metric.
int kahler_cat(int complex_dimension);

enum class TableFamily { AI, AII, AIII, BDI, BDII, DIII, CI, CII };
enum class Kahler { Yes, No, Conditional };

std::string_view to_string(TableFamily family);
std::optional<TableFamily> parse_family(std::string_view text);
std::string_view to_string(Kahler k);

struct SpaceDescriptor {
  TableFamily family = TableFamily::AI;
  std::vector<int> params;
  int dimension = 0;
  Kahler kahler = Kahler::No;
  std::optional<int> connectivity;  // r with the space (r − 1)-connected, when used
  std::optional<int> cat_lower;
  std::optional<int> cat_upper;
  std::optional<int> cat_exact;
};

/// One row of the classification from the rules above. params: AI/AII/BDII/CI
/// take {n}, DIII takes {l}, AIII/BDI/CII take {p, q}. Throws InvalidParams.
SpaceDescriptor describe(TableFamily family, const std::vector<int>& params);

/// The classification table as printed text, one row per family.
struct TableRow {
  TableFamily family;
  std::string label;
  std::string space;
  std::string kahler;
  std::string dimension;
  std::string cat;
  // Closed forms as printed in the row, for cross-checking describe().
  std::function<int(const std::vector<int>&)> dimension_of;
  std::function<std::optional<int>(const std::vector<int>&)> cat_of;
};

const std::vector<TableRow>& classification_table();

std::string table_markdown();
std::string table_csv();

}  // namespace symspace::cat
