#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace transverse {

/// Exact rational scalar. GMP keeps every result in canonical form
/// (positive denominator, reduced), so equality is structural.
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

/// Parses "[+-]digits[/digits]". Rejects a zero denominator and any other
/// syntax with InputError.
Rat parse_rat(std::string_view text);

/// Canonical text form: "-7/3", "5".
std::string to_text(const Rat& r);

int sign(const Rat& r);
Int floor_of(const Rat& r);
Rat abs_of(const Rat& r);

/// Simplest rational (smallest denominator) in the closed interval
/// [lo, hi], found by walking the continued-fraction expansions.
Rat simplest_between(const Rat& lo, const Rat& hi);

/// Simplest rational within `tol` of `x`.
inline Rat snap_rational(const Rat& x, const Rat& tol) {
  return simplest_between(Rat(x - tol), Rat(x + tol));
}

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t index);
Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scaled(std::span<const Rat> a, const Rat& s);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Rat squared_distance(std::span<const Rat> a, std::span<const Rat> b);
bool is_zero(std::span<const Rat> a);

/// Divides by the first nonzero entry so that entry becomes 1.
Vec normalized_leading(std::span<const Rat> a);

}  // namespace transverse
