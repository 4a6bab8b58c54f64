#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "transverse/affine.hpp"
#include "transverse/errors.hpp"
#include "transverse/lp.hpp"
#include "transverse/matrix.hpp"
#include "transverse/poly.hpp"
#include "transverse/rat.hpp"

using namespace transverse;

namespace {

Rat R(const char* s) { return parse_rat(s); }

Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread, bool low_rank) {
  std::uniform_int_distribution<int> coef(-spread, spread);
  Mat a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      a(r, c) = Rat(coef(rng), 1 + std::abs(coef(rng)));
      a(r, c).canonicalize();
    }
  if (low_rank && rows > 1) {
    // Last row becomes a combination of the first two.
    for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * 2 - (rows > 2 ? a(1, c) : Rat(0));
  }
  return a;
}

}  // namespace

TEST(Rat, ParsesCanonicalForms) {
  EXPECT_EQ(R("6/4"), Rat(3, 2));
  EXPECT_EQ(R("-7/3"), Rat(-7, 3));
  EXPECT_EQ(R("+5"), Rat(5));
  EXPECT_EQ(to_text(R("-10")), "-10");
  EXPECT_EQ(to_text(R("4/6")), "2/3");
}

TEST(Rat, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "--1", "1 /2"}) {
    EXPECT_THROW(parse_rat(bad), InputError) << bad;
  }
}

TEST(Rat, FloorRoundsTowardMinusInfinity) {
  EXPECT_EQ(floor_of(R("7/2")), 3);
  EXPECT_EQ(floor_of(R("-7/2")), -4);
  EXPECT_EQ(floor_of(R("3")), 3);
}

TEST(Rat, SimplestBetweenUsesContinuedFractions) {
  EXPECT_EQ(simplest_between(R("3/10"), R("2/5")), R("1/3"));
  EXPECT_EQ(simplest_between(R("-2/5"), R("-3/10")), R("-1/3"));
  EXPECT_EQ(simplest_between(R("1/2"), R("1/2")), R("1/2"));
  EXPECT_EQ(simplest_between(R("-1/2"), R("3")), R("0"));
  EXPECT_EQ(simplest_between(R("5/2"), R("7/2")), R("3"));
  EXPECT_EQ(snap_rational(R("333334/1000000"), R("1/1000")), R("1/3"));
}

TEST(Rat, SimplestBetweenHasMinimalDenominator) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a > b) std::swap(a, b);
    const Rat s = simplest_between(a, b);
    ASSERT_TRUE(a <= s && s <= b);
    // No fraction with a smaller denominator lies in [a, b].
    for (long q = 1; q < s.get_den().get_si(); ++q) {
      const Int lo = floor_of(a * q);
      for (Int p = lo; p <= lo + 1; ++p) {
        Rat c(p, Int(q));
        c.canonicalize();
        EXPECT_FALSE(a <= c && c <= b) << a << " " << b << " " << s;
      }
    }
  }
}

TEST(Matrix, RankMatchesMinorEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const Mat a = random_matrix(rng, size(rng), size(rng), 3, trial % 3 == 0);
    EXPECT_EQ(mat_rank(a), oracle::minor_rank(a));
  }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Mat a = random_matrix(rng, n, n, 4, trial % 4 == 0);
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = a(r, c);
    EXPECT_EQ(determinant(a), oracle::leibniz_det(rows));
  }
}

TEST(Matrix, SolveAffineDescribesAllSolutions) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    const Mat a = random_matrix(rng, size(rng), size(rng), 3, trial % 2 == 0);
    Vec x0(a.cols());
    for (auto& v : x0) v = Rat(static_cast<long>(rng() % 7) - 3);
    const Vec b = a.apply(x0);
    const auto sol = solve_affine(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a.apply(sol->particular), b);
    EXPECT_EQ(sol->nullspace.size(), a.cols() - mat_rank(a));
    for (const auto& v : sol->nullspace) EXPECT_TRUE(is_zero(a.apply(v)));
  }
}

TEST(Matrix, SolveAffineDetectsInconsistency) {
  const Mat a = Mat::from_rows({{1, 1}, {2, 2}});
  const Vec b{1, 3};
  EXPECT_FALSE(solve_affine(a, b).has_value());
}

TEST(Matrix, IndependentSubsetAndExtension) {
  const std::vector<Vec> v{{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  EXPECT_EQ(independent_subset(v), (std::vector<std::size_t>{0, 2}));
  const auto added = extend_basis({{1, 1, 0}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  ASSERT_EQ(added.size(), 2u);
  EXPECT_EQ(added[0], (Vec{1, 0, 0}));
  EXPECT_EQ(added[1], (Vec{0, 0, 1}));
}

TEST(Affine, HullAndIntersection) {
  const auto line = affine_hull({{0, 0}, {1, 1}}, 2);
  EXPECT_EQ(line.dim(), 1u);
  EXPECT_TRUE(line.contains(Vec{5, 5}));
  EXPECT_FALSE(line.contains(Vec{5, 4}));
  const AffineSubspace vertical(2, {5, 0}, {{0, 1}});
  const auto meet = affine_intersect(line, vertical);
  ASSERT_TRUE(meet.has_value());
  EXPECT_EQ(meet->dim(), 0u);
  EXPECT_EQ(meet->basepoint(), (Vec{5, 5}));
  const AffineSubspace parallel(2, {0, 1}, {{1, 1}});
  EXPECT_FALSE(affine_intersect(line, parallel).has_value());
  EXPECT_TRUE(affine_hull({{0, 0}, {2, 2}, {1, 1}}, 2).same_flat(line));
}

TEST(Lp, FeasibilityWithSignConstraints) {
  const Mat a = Mat::from_rows({{1, 1}});
  const Vec b{-1};
  EXPECT_FALSE(lp_feasible(a, b, {0, 1}).has_value());
  const auto free = lp_feasible(a, b, {0});
  ASSERT_TRUE(free.has_value());
  EXPECT_EQ((*free)[0] + (*free)[1], Rat(-1));
  EXPECT_GE((*free)[0], 0);
}

TEST(Lp, OriginInHullMatchesCaratheodory) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> count(1, 5), dim(1, 3);
  int inside = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = count(rng), d = dim(rng);
    std::vector<Vec> w(k, Vec(d));
    for (auto& p : w)
      for (auto& x : p) x = coef(rng);
    const auto mu = origin_in_convex_hull(w);
    ASSERT_EQ(mu.has_value(), oracle::origin_in_hull(w)) << trial;
    if (mu) {
      ++inside;
      Rat total = 0;
      Vec y = zeros(d);
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_GE((*mu)[j], 0);
        total += (*mu)[j];
        for (std::size_t c = 0; c < d; ++c) y[c] += (*mu)[j] * w[j][c];
      }
      EXPECT_EQ(total, 1);
      EXPECT_TRUE(is_zero(y));
    }
  }
  EXPECT_GT(inside, 20);
}

TEST(Lp, ConvexHullsMeet) {
  const std::vector<Vec> seg_a{{0, 0}, {2, 2}}, seg_b{{0, 2}, {2, 0}}, seg_c{{3, 0}, {4, 1}};
  const auto m = convex_hulls_meet(seg_a, seg_b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->weights_p, (Vec{R("1/2"), R("1/2")}));
  EXPECT_FALSE(convex_hulls_meet(seg_a, seg_c).has_value());
  // Touching at an endpoint counts.
  EXPECT_TRUE(convex_hulls_meet(seg_a, {{2, 2}, {3, 5}}).has_value());
}

TEST(Poly, ArithmeticAndGcd) {
  const Poly x = Poly::linear(0, 1);
  const Poly p = (x - Poly::constant(1)) * (x - Poly::constant(2));
  EXPECT_EQ(p, Poly({2, -3, 1}));
  const Poly q = (x - Poly::constant(1)) * (x + Poly::constant(5));
  EXPECT_EQ(gcd(p, q), Poly({-1, 1}));
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
  const auto [quot, rem] = divmod(p, Poly({-1, 1}));
  EXPECT_EQ(quot, Poly({-2, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(squarefree_part(p * Poly({-1, 1})), p.monic());
}

TEST(Poly, SturmCountsDistinctRoots) {
  const Poly x = Poly::linear(0, 1);
  const Poly p = (x - Poly::constant(1)) * (x - Poly::constant(2)) * (x - Poly::constant(3));
  EXPECT_EQ(count_distinct_roots(p, std::nullopt, std::nullopt), 3);
  EXPECT_EQ(count_distinct_roots(p, Rat(1), Rat(2)), 1);
  EXPECT_EQ(count_distinct_roots(p, Rat(0), Rat(10)), 3);
  const Poly doubled = p * (x - Poly::constant(1));
  EXPECT_EQ(count_distinct_roots(doubled, std::nullopt, std::nullopt), 3);
  EXPECT_FALSE(sturm_root_exists(Poly({1, 0, 1}), std::nullopt, std::nullopt));
  EXPECT_TRUE(sturm_root_exists(Poly({-1, 0, 1}), std::nullopt, std::nullopt));
  EXPECT_TRUE(sturm_root_exists(Poly({-1, 0, 1}), Rat(1), Rat(1)));
  EXPECT_FALSE(sturm_root_exists(Poly({-1, 0, 1}), Rat(2), Rat(1)));
  EXPECT_TRUE(sturm_root_exists(Poly(), Rat(0), Rat(1)));
  EXPECT_FALSE(sturm_root_exists(Poly::constant(3), std::nullopt, std::nullopt));
}

TEST(Poly, LocatesRationalAndIrrationalRoots) {
  const auto exact = locate_real_root(Poly({R("-1/4"), 0, 1}));
  ASSERT_TRUE(exact && exact->exact);
  EXPECT_EQ(*exact->exact, R("-1/2"));
  const Poly two({-2, 0, 1});
  const auto iso = locate_real_root(two);
  ASSERT_TRUE(iso.has_value());
  EXPECT_FALSE(iso->exact.has_value());
  EXPECT_LT(iso->lo, iso->hi);
  EXPECT_EQ(iso->sign_lo * iso->sign_hi, -1);
  EXPECT_EQ(sgn(two.eval(iso->lo)), iso->sign_lo);
  EXPECT_EQ(sgn(two.eval(iso->hi)), iso->sign_hi);
  EXPECT_LT(iso->hi, 0);  // leftmost root is -sqrt(2)
  EXPECT_FALSE(locate_real_root(Poly({1, 0, 1})).has_value());
}

TEST(Poly, CauchyBoundEnclosesRoots) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> c(1 + trial % 5);
    for (auto& x : c) x = coef(rng);
    c.push_back(1 + trial % 3);
    const Poly p(c);
    const Rat b = cauchy_root_bound(p);
    EXPECT_EQ(count_distinct_roots(p, -b, b), count_distinct_roots(p, std::nullopt, std::nullopt));
  }
}
