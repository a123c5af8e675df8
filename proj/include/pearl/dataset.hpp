#pragma once

// One JSON document per dataset. Keys match the field names of the library
// types; counts are 0/1 and exponent sets are sorted integer arrays.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pearl/gysin_bundle.hpp"
#include "pearl/pearl_core.hpp"
#include "pearl/quantum_algebra.hpp"

namespace pearl {

/// x · (sum of t^e over exponents).
struct ExpectedTerm {
  std::string id;
  std::vector<int> exponents;

  friend bool operator==(const ExpectedTerm&, const ExpectedTerm&) = default;
};

struct Expectations {
  std::optional<std::vector<int>> cohomology_dims;        // QH^k, k in [0, N)
  std::optional<std::vector<int>> gamma_dims;             // QH^k(Γ), k in [0, N)
  std::optional<std::vector<int>> classical_gamma_dims;   // H^k(Γ), from the lowest index up
  std::optional<std::vector<ExpectedTerm>> euler_class;   // a representative of e_F
  std::optional<std::vector<ExpectedTerm>> ambient_euler_class;
  std::optional<bool> expect_gamma_vanishes;
  std::optional<bool> euler_invertible;

  friend bool operator==(const Expectations&, const Expectations&) = default;
};

struct DatasetFile {
  int schema_version = 1;
  PearlData pearl;
  std::optional<std::vector<TwistTerm>> twist;
  std::optional<ProductData> product;
  std::optional<ModuleActionData> module_action;
  std::optional<Expectations> expectations;

  friend bool operator==(const DatasetFile&, const DatasetFile&) = default;
};

inline constexpr int kSchemaVersion = 1;

/// Throws SchemaError with a field path (and line for syntax errors).
DatasetFile parse_dataset(const std::string& text);
DatasetFile load_dataset(const std::filesystem::path& path);

/// Canonical text: two-space indentation, one term object per line.
std::string format_dataset(const DatasetFile& d);
void save_dataset(const DatasetFile& d, const std::filesystem::path& path);

/// Cochain of an expected class description on the complex's generators.
Cochain cochain_from_terms(const PearlComplex& c, const std::vector<ExpectedTerm>& terms);

}  // namespace pearl
