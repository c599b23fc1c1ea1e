#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hstab/linalg.hpp"

namespace hstab {

using Simplex = std::vector<int>;  // sorted, distinct, non-empty

// Finite abstract simplicial complex: a downward-closed set of sorted
// vertex subsets. Every simplex is stored explicitly; the scale of this
// project never needs anything cleverer.
struct SimplicialComplex {
  std::set<Simplex> simplices;

  static SimplicialComplex closure(const std::vector<Simplex>& maximal);

  bool contains(const Simplex& s) const { return simplices.count(s) > 0; }
  bool empty() const { return simplices.empty(); }
  int dimension() const;  // -1 for the empty complex
  std::set<int> vertices() const;
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::vector<Simplex> facets() const;  // maximal simplices
  Int euler_characteristic() const;
  void insert_with_faces(const Simplex& s);
  void erase_cofaces(const Simplex& s);  // removes every simplex containing s
};

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma);
SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y);

struct SimplicialMap {
  SimplicialComplex domain;
  SimplicialComplex codomain;
  std::map<int, int> assignment;

  Simplex image(const Simplex& s) const;  // sorted, deduplicated
  bool valid() const;
};

// Face maps only, no degeneracies. Levels are abstract finite sets; the
// face maps are index tables d_i : S_p -> S_{p-1}.
struct SemiSimplicialSet {
  std::vector<size_t> level_sizes;                      // S_0, S_1, ...
  std::vector<std::vector<std::vector<size_t>>> faces;  // faces[p][i][s], p >= 1
  std::vector<std::vector<std::string>> labels;         // optional, per level

  int top_level() const { return int(level_sizes.size()) - 1; }
  void validate() const;  // d_i d_j = d_{j-1} d_i for i < j
};

struct AugmentedSemiSimplicialSet {
  SemiSimplicialSet body;
  size_t aug_size = 0;
  std::vector<size_t> augmentation;  // S_0 -> S_{-1}

  void validate() const;  // includes aug . d_0 = aug . d_1
};

// p-simplices are injective simplicial maps Delta^p -> K, i.e. ordered
// tuples of distinct vertices spanning a simplex; d_i drops the i-th entry.
SemiSimplicialSet associated_semisimplicial(const SimplicialComplex& K);

// Only the increasing tuples; realizes |K| itself.
SemiSimplicialSet increasing_semisimplicial(const SimplicialComplex& K);

// Boundary matrices over Z with chosen ordered bases; boundary[k] maps
// degree k to degree k-1 (boundary[0] is unused).
struct ChainComplex {
  std::vector<int> dims;           // rank of C_k
  std::vector<IMat> boundary;

  void validate() const;  // boundary . boundary = 0
};

ChainComplex chain_complex(const SimplicialComplex& K, int max_dim = -1);
ChainComplex chain_complex(const SemiSimplicialSet& X);

struct HomologyProfile {
  int betti = 0;
  std::vector<Int> torsion;  // each > 1, each dividing the next

  bool operator==(const HomologyProfile&) const = default;
  bool trivial() const { return betti == 0 && torsion.empty(); }
};

std::string profile_str(const HomologyProfile& p);

std::vector<HomologyProfile> homology(const ChainComplex& C);
std::vector<HomologyProfile> homology(const SimplicialComplex& K);          // unreduced
std::vector<HomologyProfile> reduced_homology(const SimplicialComplex& K);  // index 0 = H~_0

// Finitely presented abelian group Z^gens / column span of rels, the
// common currency of the spectral sequence pages.
struct PresentedAb {
  int gens = 0;
  IMat rels;  // gens x r

  static PresentedAb free(int n) { return {n, IMat(n, 0)}; }
};

HomologyProfile profile_of(const PresentedAb& A);

// Whether the columns of M lie in the column lattice of R.
bool columns_in_lattice(const IMat& M, const IMat& R);

// Homology ker(g)/im(f) of presented groups A -f-> B -g-> C, where the maps
// are given on generators and are assumed well defined.
PresentedAb presented_homology(const PresentedAb& A, const IMat& f, const PresentedAb& B,
                               const IMat& g, const PresentedAb& C);

enum class Verdict { No = 0, HomYesPi1Unknown = 1, Yes = 2 };

std::string verdict_name(Verdict v);

// Homology-certified connectivity. Yes additionally certifies a trivial
// edge-path group by bounded Tietze reduction when n >= 1; when reduction
// stalls the verdict degrades to HomYesPi1Unknown, never to an overclaim.
Verdict connectivity_report(const SimplicialComplex& K, int n, int tietze_budget = 10000);

struct WcmResult {
  Verdict verdict = Verdict::Yes;
  std::optional<Simplex> witness;  // first failing simplex when No
};

// Weakly Cohen-Macaulay of dimension n: (n-1)-connected and the link of
// every p-simplex (n-p-2)-connected.
WcmResult wcm_check(const SimplicialComplex& K, int n, int tietze_budget = 10000);

// The four equivalent tests for simplexwise injectivity; kept separate so
// they can cross-check each other.
bool swi_no_collapsed_edge(const SimplicialMap& f);                  // criterion on 1-simplices
bool swi_injective_on_simplices(const SimplicialMap& f);             // restriction to each simplex
bool swi_links_of_simplices(const SimplicialMap& f);                 // f(Lk(sigma)) in Lk(f(sigma))
bool swi_links_of_vertices(const SimplicialMap& f);                  // f(Lk(v)) in Lk(f(v))
bool simplexwise_injective(const SimplicialMap& f);

}  // namespace hstab
