// Invariant fingerprints, structural capability rules for dim L^2 <= 2, and
// the verification suite that checks the classification against the
// homological ground truth.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcap/catalog.hpp"
#include "nilcap/schur.hpp"

namespace nilcap {

/// Equal fingerprints are necessary for isomorphism, never sufficient.
struct Fingerprint {
  std::string field;
  std::size_t dim = 0;
  std::size_t nilpotency_class = 0;
  std::vector<std::size_t> lower_series;  // dims of L^1, L^2, ..., 0
  std::vector<std::size_t> upper_series;  // dims of Z_0, Z_1, ..., L
  std::size_t dim_center = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_abelianization = 0;
  std::size_t dim_multiplier = 0;
  std::size_t dim_exterior_square = 0;
  std::size_t dim_exterior_center = 0;
  bool stem = false;
  bool generalized_heisenberg = false;
  bool capable = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& L);

struct Verdict {
  bool capable = false;
  std::string rule;
  std::optional<std::string> family_label;  // pattern such as "L5_5 (+) A(2)"
};

class OutOfScope : public LieError {
 public:
  using LieError::LieError;
};

/// Capability from the structure theory alone. Throws OutOfScope when
/// dim L^2 > 2. Only the 7-dimensional class-2 stem case consults the
/// exterior center, since the two candidates there share every cheaper invariant.
Verdict capability_structural(const LieAlgebra& L);

// ---------------------------------------------------------------- verification

/// Homological data of one algebra plus the identities every instance must
/// satisfy: dim(L∧L) = dim M + dim L^2 and Z^∧ ⊆ Z, with Z^∧ ⊆ L^2 unless abelian.
struct InstanceRecord {
  std::string name;
  std::string field;
  std::size_t dim = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  HomologyReport homology;
  bool identities_hold = false;
};

/// Caches homology by structure table so suites can share results.
class Workbench {
 public:
  const InstanceRecord& analyze(const LieAlgebra& L);
  const std::vector<InstanceRecord>& instances() const { return records_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<InstanceRecord> records_;
};

struct Check {
  std::string group;  // criterion id such as "C3", or a named extra
  std::string name;
  bool passed = false;
  bool informational = false;  // recorded value with nothing asserted
  std::vector<std::pair<std::string, std::string>> values;
};

struct VerifyOptions {
  std::vector<FieldSpec> fields;
  std::uint64_t seed = 7;
  std::size_t random_samples = 200;
  std::size_t central_lines = 20;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool all_passed() const;
  /// Passed state of every check in the group; false when the group is empty.
  bool group_passed(const std::string& group) const;
};

std::vector<Check> check_multipliers(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_class2_capability(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_class3_capability(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_quotient_witnesses(const VerifyOptions& opts);
std::vector<Check> check_central_ideals(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_central_products(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_free_algebras(const VerifyOptions& opts);
std::vector<Check> check_structural_agreement(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_random_samples(Workbench& wb, const VerifyOptions& opts);
std::vector<Check> check_identities(const Workbench& wb);
/// Epicenter inside ideals with capable quotients, stem reduction, the shape
/// of class-3 stems, second centers of the glued constructions, and the
/// recorded multipliers of the L6_22 quotients.
std::vector<Check> check_structure_extras(Workbench& wb, const VerifyOptions& opts);

/// Every group above, in a fixed order. Identities run last so they cover
/// every instance the other groups touched.
VerifyReport verify_all(const VerifyOptions& opts);

/// Catalog instances per field, used by several groups.
std::vector<LieAlgebra> catalog_instances(const FieldSpec& f, bool include_out_of_scope);

}  // namespace nilcap
