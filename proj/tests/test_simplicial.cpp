#include <gtest/gtest.h>

#include "transverse/errors.hpp"
#include "transverse/simplicial.hpp"

using namespace transverse;

namespace {

const char* kTwoTriangles =
    "# two triangles sharing an edge\n"
    "v a\nv b\nv c\nv d\n"
    "s a b c\n"
    "s b c d\n";

std::string error_of(std::string_view text) {
  try {
    parse_complex(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Complex, FaceClosureAndOrdering) {
  const auto k = parse_complex(kTwoTriangles);
  EXPECT_EQ(k.vertex_count(), 4u);
  // 4 vertices, 5 edges, 2 triangles.
  EXPECT_EQ(k.simplexes().size(), 11u);
  EXPECT_EQ(k.dimension(), 2);
  EXPECT_EQ(k.simplexes().front(), (Simplex{0}));
  EXPECT_EQ(k.simplexes().back(), (Simplex{1, 2, 3}));
  EXPECT_TRUE(k.contains({1, 2}));
  EXPECT_FALSE(k.contains({0, 3}));
  EXPECT_EQ(k.simplexes_up_to(1).size(), 9u);
  EXPECT_EQ(k.maximal_simplexes().size(), 2u);
}

TEST(Complex, SerializationRoundTrips) {
  const auto k = parse_complex(kTwoTriangles);
  EXPECT_EQ(parse_complex(serialize_complex(k)), k);
  const auto edge = parse_complex("v x\nv y\nv z\ns x y\n");
  EXPECT_EQ(serialize_complex(edge), "v x\nv y\nv z\ns x y\n");
}

TEST(Complex, ReportsLineNumbers) {
  EXPECT_EQ(error_of("v a\nq a\n").rfind("line 2", 0), 0u);
  EXPECT_NE(error_of("v a\nv a\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("v a\ns a b\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("v a\nv b\ns a a\n").find("line 3"), std::string::npos);
  EXPECT_EQ(error_of("v a\n\n# only a comment\ns a\n"), "");
}

TEST(Map, ParsesAndValidates) {
  const auto k = parse_complex("v a\nv b\ns a b\n");
  const auto g = parse_map("m 2\np a 0 1/2\np b -1 3\n", k);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g.image(0), (Vec{0, Rat(1, 2)}));
  EXPECT_EQ(parse_map(serialize_map(g, k), k), g);
  EXPECT_THROW(parse_map("p a 0 0\nm 2\n", k), InputError);
  EXPECT_THROW(parse_map("m 2\np a 0 0\n", k), InputError);
  EXPECT_THROW(parse_map("m 2\np a 0 0\np a 1 1\np b 0 1\n", k), InputError);
  EXPECT_THROW(parse_map("m 2\np a 0\np b 0 1\n", k), InputError);
  EXPECT_THROW(parse_map("m 2\np a 0 x\np b 0 1\n", k), InputError);
  EXPECT_THROW(parse_map("m 2\np c 0 0\np a 0 0\np b 0 1\n", k), InputError);
}

TEST(Map, CertificationCatchesDegeneracy) {
  const auto k = parse_complex("v a\nv b\nv c\ns a b c\n");
  const auto collinear = parse_map("m 2\np a 0 0\np b 1 1\np c 2 2\n", k);
  EXPECT_FALSE(certify_map(k, collinear).ok());
  const auto generic = parse_map("m 2\np a 0 1/7\np b 1 2/7\np c 3/5 5/3\n", k);
  EXPECT_TRUE(certify_map(k, generic).ok());
}

TEST(Perturb, MovesWithinEpsAndCertifies) {
  const auto k = parse_complex(kTwoTriangles);
  const PLMap theta(3, {{0, 0, 0}, {0, 0, 0}, {1, 1, 1}, {1, 1, 1}});
  const Rat eps(1, 10);
  GenericPool pool(99);
  const auto g = roberts_perturb(k, theta, eps, pool);
  ASSERT_TRUE(g.certified());
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    EXPECT_LT(squared_distance(g.image(v), theta.image(v)), eps * eps);
  }
  GenericPool again(99);
  EXPECT_EQ(roberts_perturb(k, theta, eps, again), g);
  GenericPool other(100);
  EXPECT_FALSE(roberts_perturb(k, theta, eps, other) == g);
}

TEST(Perturb, TetrahedronInPlaneExhaustsAttempts) {
  const auto k = parse_complex("v a\nv b\nv c\nv d\ns a b c d\n");
  const PLMap theta(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  GenericPool pool(1);
  EXPECT_THROW(roberts_perturb(k, theta, Rat(1, 10), pool), GenericityError);
}

TEST(Map, ImagePointAndDisjointness) {
  const auto k = parse_complex("v a\nv b\ns a b\n");
  const PLMap g(2, {{0, 0}, {2, 4}});
  EXPECT_EQ(image_point(g, {0, 1}, {Rat(1, 4), Rat(3, 4)}), (Vec{Rat(3, 2), 3}));
  EXPECT_THROW(image_point(g, {0, 1}, {Rat(1, 4), Rat(1, 4)}), PreconditionError);
  EXPECT_TRUE(simplexes_disjoint({0, 1}, {2, 3}));
  EXPECT_FALSE(simplexes_disjoint({0, 1}, {1, 3}));
  EXPECT_EQ(mesh_squared(k, g), 20);
}
