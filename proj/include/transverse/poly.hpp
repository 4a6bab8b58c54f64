#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "transverse/rat.hpp"

namespace transverse {

/// Univariate polynomial with rational coefficients, ascending degree.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c) { return Poly({c}); }
  /// a + b*s
  static Poly linear(const Rat& a, const Rat& b) { return Poly({a, b}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

/// p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<Poly> sturm_chain(const Poly& p);

/// Sign changes of the chain at x (absent x with `at_plus_infinity` selects
/// the sign at +inf or -inf).
int sign_changes_at(const std::vector<Poly>& chain, const Rat& x);
int sign_changes_at_infinity(const std::vector<Poly>& chain, bool positive);

/// Number of distinct real roots in (lo, hi]; absent bounds mean -inf / +inf.
int count_distinct_roots(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

/// True iff p has a real root in [lo, hi] (unbounded side when absent).
/// The zero polynomial vanishes everywhere, so it has a root in any
/// nonempty interval.
bool sturm_root_exists(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

/// Bound B with every real root in (-B, B).
Rat cauchy_root_bound(const Poly& p);

struct RootLocation {
  /// Set when an exact rational root was found.
  std::optional<Rat> exact;
  /// Otherwise an interval (lo, hi) holding exactly one root of the
  /// squarefree part, with opposite signs at the endpoints.
  Rat lo;
  Rat hi;
  int sign_lo = 0;
  int sign_hi = 0;
};

/// Locates one real root (the leftmost) if any exists. Rational roots are
/// detected exactly by bisection probes and simplest-rational probes.
std::optional<RootLocation> locate_real_root(const Poly& p, int refine_steps = 64);

}  // namespace transverse
