#include "transverse/rat.hpp"

#include <cctype>

#include "transverse/errors.hpp"

namespace transverse {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("unparsable rational '" + std::string(text) + "'");
  }
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rat r(negative ? Int(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_text(const Rat& r) { return r.get_str(10); }

int sign(const Rat& r) { return sgn(r); }

Int floor_of(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat abs_of(const Rat& r) { return abs(r); }

Rat simplest_between(const Rat& lo_in, const Rat& hi_in) {
  Rat lo = lo_in;
  Rat hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return Rat(-simplest_between(Rat(-hi), Rat(-lo)));

  // 0 < lo <= hi: expand both endpoints' continued fractions until they part.
  const Int whole = floor_of(lo);
  if (lo == Rat(whole)) return lo;
  const Rat next(whole + 1);
  if (next <= hi) return next;
  const Rat frac_lo = lo - Rat(whole);
  const Rat frac_hi = hi - Rat(whole);
  const Rat inner = simplest_between(Rat(1 / frac_hi), Rat(1 / frac_lo));
  return Rat(Rat(whole) + 1 / inner);
}

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vector(std::size_t n, std::size_t index) {
  Vec v = zeros(n);
  v.at(index) = 1;
  return v;
}

Vec add(std::span<const Rat> a, std::span<const Rat> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(std::span<const Rat> a, std::span<const Rat> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scaled(std::span<const Rat> a, const Rat& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat squared_distance(std::span<const Rat> a, std::span<const Rat> b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rat diff = a[i] - b[i];
    acc += diff * diff;
  }
  return acc;
}

bool is_zero(std::span<const Rat> a) {
  for (const auto& x : a) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec normalized_leading(std::span<const Rat> a) {
  for (const auto& x : a) {
    if (sgn(x) != 0) return scaled(a, Rat(1 / x));
  }
  return Vec(a.begin(), a.end());
}

}  // namespace transverse
