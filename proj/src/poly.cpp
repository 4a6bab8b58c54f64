#include "transverse/poly.hpp"

#include <stdexcept>

namespace transverse {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rat inv = 1 / leading();
  std::vector<Rat> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * inv;
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Rat> out(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = -a.c_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  const Rat inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rat f = rem[static_cast<std::size_t>(k)] * inv;
    if (sgn(f) == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  const Poly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const std::size_t n = chain.size();
    next = -divmod(chain[n - 2], chain[n - 1]).second;
  }
  return chain;
}

namespace {

int changes(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sign_changes_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q.eval(x)));
  return changes(signs);
}

int sign_changes_at_infinity(const std::vector<Poly>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return changes(signs);
}

int count_distinct_roots(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  const auto chain = sturm_chain(p);
  const int at_lo = lo ? sign_changes_at(chain, *lo) : sign_changes_at_infinity(chain, false);
  const int at_hi = hi ? sign_changes_at(chain, *hi) : sign_changes_at_infinity(chain, true);
  return at_lo - at_hi;
}

bool sturm_root_exists(const Poly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  if (lo && hi && *lo > *hi) return false;
  if (p.is_zero()) return true;
  if (p.degree() == 0) return false;
  if (lo && sgn(p.eval(*lo)) == 0) return true;
  return count_distinct_roots(p, lo, hi) > 0;
}

Rat cauchy_root_bound(const Poly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::optional<RootLocation> locate_real_root(const Poly& p, int refine_steps) {
  if (p.is_zero()) {
    RootLocation loc;
    loc.exact = Rat(0);
    return loc;
  }
  const Poly s = squarefree_part(p);
  if (s.degree() <= 0) return std::nullopt;
  if (s.degree() == 1) {
    RootLocation loc;
    loc.exact = Rat(-s.coeffs()[0] / s.coeffs()[1]);
    return loc;
  }
  const auto chain = sturm_chain(s);
  Rat lo = -cauchy_root_bound(s);
  Rat hi = -lo;
  auto count = [&](const Rat& a, const Rat& b) { return sign_changes_at(chain, a) - sign_changes_at(chain, b); };
  if (count(lo, hi) == 0) return std::nullopt;
  auto exact_at = [&](const Rat& x) -> std::optional<RootLocation> {
    if (sgn(s.eval(x)) != 0) return std::nullopt;
    RootLocation loc;
    loc.exact = x;
    return loc;
  };
  // Narrow to an interval containing exactly one root (the leftmost).
  while (count(lo, hi) > 1) {
    const Rat mid = (lo + hi) / 2;
    if (auto e = exact_at(mid)) {
      if (count(lo, mid) == 1) return e;  // mid is the leftmost root
    }
    if (count(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  for (int step = 0; step < refine_steps; ++step) {
    if (auto e = exact_at(hi)) return e;
    const Rat simple = simplest_between(lo, hi);
    if (simple > lo) {
      if (auto e = exact_at(simple)) return e;
    }
    const Rat mid = (lo + hi) / 2;
    if (auto e = exact_at(mid)) return e;
    if (count(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (auto e = exact_at(hi)) return e;
  RootLocation loc;
  loc.lo = lo;
  loc.hi = hi;
  loc.sign_lo = sgn(s.eval(lo));
  loc.sign_hi = sgn(s.eval(hi));
  return loc;
}

}  // namespace transverse
