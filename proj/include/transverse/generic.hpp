#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "transverse/rat.hpp"

namespace transverse {

/// Rational surrogates for Roberts' cosets R_i = {q + r_i : q rational}.
///
/// Each stream index i has an offset r_i derived only from (seed, i): the
/// numerator is a uniform 63-bit value and the denominator an odd integer
/// above 2^62. Distinct stream indices always receive distinct offsets.
/// A pool is stateful (per-stream draw counters) and must stay confined to
/// one task; parallel trials derive their own pools from (seed, trial).
class GenericPool {
 public:
  explicit GenericPool(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Returns q + c*r with |result - target| < eps, q the dyadic rational
  /// nearest target at resolution eps/4 and c a power of two scaling the
  /// surrogate below eps/8. The first draw of a stream uses r_stream; later
  /// draws use fresh surrogates keyed by the draw counter.
  Rat draw_near(const Rat& target, const Rat& eps, std::uint64_t stream);

  /// r_stream, generated on first use.
  const Rat& offset(std::uint64_t stream);

  std::uint64_t draws(std::uint64_t stream) const;

  /// Independent pool for one trial of a batch.
  static GenericPool for_trial(std::uint64_t base_seed, std::uint64_t trial);

 private:
  Rat surrogate(std::uint64_t stream, std::uint64_t counter) const;

  std::uint64_t seed_;
  std::map<std::uint64_t, Rat> streams_;
  std::set<Rat> used_;
  std::map<std::uint64_t, std::uint64_t> counters_;
};

/// splitmix64 finaliser; the single source of seed derivation.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

struct Condition {
  std::string description;
  Rat value;
};

/// The finite list of polynomial values a computation relied on being
/// nonzero, and whether they all are.
class GenericityCertificate {
 public:
  GenericityCertificate() = default;

  const std::vector<Condition>& conditions() const { return conditions_; }
  bool ok() const { return !failed_; }
  /// Index of the first zero condition, if any.
  std::optional<std::size_t> failed_index() const { return failed_; }

  friend GenericityCertificate certify(std::vector<Condition> transcript);

 private:
  std::vector<Condition> conditions_;
  std::optional<std::size_t> failed_;
};

GenericityCertificate certify(std::vector<Condition> transcript);

/// {"status": "ok"|"failed", "failed_index"?: n,
///  "conditions": [{"description", "value", "nonzero"}]}
nlohmann::json certificate_to_json(const GenericityCertificate& cert);
/// Compact form for reports: status plus condition count.
nlohmann::json certificate_summary(const GenericityCertificate& cert);

/// Appends conditions proving the values pairwise distinct: the gaps between
/// consecutive values in sorted order.
void append_distinctness(std::vector<Condition>& out, const std::vector<Rat>& values, const std::string& label);

/// Gram determinant of the difference vectors; nonzero iff the points are
/// affinely independent.
Rat affine_independence_value(const std::vector<Vec>& points);

}  // namespace transverse
