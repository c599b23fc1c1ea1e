#pragma once

#include <functional>
#include <optional>
#include <set>

#include "hstab/forms.hpp"
#include "hstab/scomplex.hpp"

namespace hstab {

// All morphisms H -> M whose coordinate vectors have max-norm <= bound,
// in lexicographic order of the concatenated pair (e, f). Distinct pairs
// are distinct vertices; nothing is identified.
std::vector<HyperbolicMorphism> enumerate_hyperbolic_morphisms(const QuadraticModule& M,
                                                               int bound);

// Same enumeration restricted to morphisms orthogonal to every vector in
// `ortho` (as submodules, i.e. both e and f pair to zero with each vector).
std::vector<HyperbolicMorphism> enumerate_hyperbolic_morphisms(const QuadraticModule& M,
                                                               int bound,
                                                               const std::vector<IVec>& ortho);

// First morphism orthogonal to `ortho`, ordered by (max |coefficient|,
// lexicographic); the order the witness search explores.
std::optional<HyperbolicMorphism> first_hyperbolic_morphism(const QuadraticModule& M,
                                                            int bound,
                                                            const std::vector<IVec>& ortho);

// Streaming variant in the same layered order; stops when visit returns true.
void scan_hyperbolic_morphisms(const QuadraticModule& M, int bound,
                               const std::vector<IVec>& ortho,
                               const std::function<bool(const HyperbolicMorphism&)>& visit);

// Finite truncation of the complex of hyperbolic morphisms: vertices are
// the bounded enumeration, a set of vertices is a simplex iff the images
// are pairwise orthogonal. Orthogonality is a condition on pairs, so the
// complex is flag and is stored as its edge graph.
struct KaTruncation {
  QuadraticModule module;
  int bound = 0;
  std::vector<HyperbolicMorphism> vertices;
  std::set<std::pair<int, int>> edges;  // i < j

  bool adjacent(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
  }
};

KaTruncation build_ka(const QuadraticModule& M, int bound);

// Cliques of size <= max_dim + 1 as a simplicial complex on vertex indices.
SimplicialComplex skeleton_complex(const KaTruncation& T, int max_dim);

// Vertex indices adjacent to every vertex of sigma.
std::vector<int> link_vertices(const KaTruncation& T, const std::vector<int>& sigma);

struct LinkRestriction {
  QuadraticModule complement;      // form on the orthogonal complement of sigma
  IMat basis;                      // ambient coordinates of the complement basis
  int reported_bound = 0;          // max |coefficient| of the rewritten vertices
  KaTruncation target;             // K^a of the complement at the reported bound
  std::vector<int> domain;         // vertices of Lk(sigma), ambient indices
  std::vector<int> assignment;     // image vertex index in target, per domain entry
  std::vector<HyperbolicMorphism> rewritten;  // complement coordinates, per domain entry
};

// Rewrites Lk(sigma) inside K^a of the orthogonal complement of sigma's
// images. Injective and simplicial; the reported bound is discovered from
// the rewritten coefficients, not prescribed.
LinkRestriction link_restriction(const KaTruncation& T, const std::vector<int>& sigma);

}  // namespace hstab
