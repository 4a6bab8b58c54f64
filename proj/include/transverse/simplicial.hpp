#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transverse/generic.hpp"
#include "transverse/rat.hpp"

namespace transverse {

/// Sorted vertex indices (indices into SimplicialComplex::vertex_ids()).
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex, closed under faces. Vertex order is
/// the order of declaration; it fixes stream allocation for perturbations.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face-closure of `generators`. Every declared vertex becomes a 0-simplex.
  static SimplicialComplex from_generators(std::vector<std::string> vertex_ids,
                                           const std::vector<Simplex>& generators);

  const std::vector<std::string>& vertex_ids() const { return ids_; }
  std::size_t vertex_count() const { return ids_.size(); }
  std::optional<std::size_t> index_of(std::string_view id) const;

  /// All simplexes, ordered by size then lexicographically.
  const std::vector<Simplex>& simplexes() const { return simplexes_; }
  std::vector<Simplex> simplexes_up_to(std::size_t max_dim) const;
  std::vector<Simplex> maximal_simplexes() const;
  bool contains(const Simplex& s) const;
  /// -1 for the empty complex.
  int dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<Simplex> simplexes_;
};

/// Line format: "v <id>" declares a vertex, "s <id> <id> ..." a simplex
/// whose vertices must already be declared, "#" starts a comment. Errors are
/// InputError with the line number.
SimplicialComplex parse_complex(std::string_view text);
/// Vertices in order, then maximal simplexes of dimension >= 1.
std::string serialize_complex(const SimplicialComplex& k);

/// Vertex images in R^m extended affinely over each simplex.
class PLMap {
 public:
  PLMap(std::size_t m, std::vector<Vec> images, std::optional<GenericityCertificate> certificate = std::nullopt);

  std::size_t m() const { return m_; }
  const std::vector<Vec>& images() const { return images_; }
  const Vec& image(std::size_t vertex) const { return images_.at(vertex); }
  const std::optional<GenericityCertificate>& certificate() const { return certificate_; }
  bool certified() const { return certificate_ && certificate_->ok(); }

  /// Images of the vertices of s, in order.
  std::vector<Vec> simplex_images(const Simplex& s) const;

  PLMap with_certificate(GenericityCertificate cert) const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.m_ == b.m_ && a.images_ == b.images_; }

 private:
  std::size_t m_;
  std::vector<Vec> images_;
  std::optional<GenericityCertificate> certificate_;
};

/// "m <count>" header, then one "p <vertex-id> <rat>..." line per vertex.
PLMap parse_map(std::string_view text, const SimplicialComplex& k);
std::string serialize_map(const PLMap& g, const SimplicialComplex& k);

/// Conditions for a generic vertex map: every pair of coordinates differs
/// and each simplex's images are affinely independent. Simplexes with more
/// than m+1 vertices can never pass and fail certification.
GenericityCertificate certify_map(const SimplicialComplex& k, const PLMap& g);

/// Roberts perturbation: coordinate s of vertex i is drawn from stream
/// i*m + s + 1 within eps/m of theta, so each vertex moves by less than eps
/// in the Euclidean norm (checked exactly on squared norms). On a certification failure the pool is reseeded
/// with seed+1; after three failed attempts GenericityError is thrown.
PLMap roberts_perturb(const SimplicialComplex& k, const PLMap& theta, const Rat& eps, GenericPool& pool);

constexpr int kPerturbAttempts = 3;

/// sum_j bary_j * g(v_j).
Vec image_point(const PLMap& g, const Simplex& s, const Vec& barycentric);

/// Closed simplexes of a complex are disjoint iff they share no vertex.
bool simplexes_disjoint(const Simplex& a, const Simplex& b);

/// Largest squared distance between two vertex images of one simplex.
Rat mesh_squared(const SimplicialComplex& k, const PLMap& g);

}  // namespace transverse
