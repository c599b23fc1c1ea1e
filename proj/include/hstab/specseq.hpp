#pragma once

#include <map>
#include <string>

#include "hstab/scomplex.hpp"

namespace hstab {

// g |-> floor((g + shift)/div); all the stability bounds in this project
// have this shape. Evaluation is exact integer arithmetic.
struct FloorAffine {
  long long shift = 0;
  long long div = 1;

  Int eval(const Int& g) const {
    if (div <= 0) throw DomainError("FloorAffine needs a positive divisor");
    return floor_div(g + shift, Int(div));
  }
  std::string str(const std::string& var = "g") const {
    return "floor((" + var + (shift < 0 ? "" : "+") + std::to_string(shift) + ")/" +
           std::to_string(div) + ")";
  }
  bool operator==(const FloorAffine&) const = default;
};

// Entry of a page: a presented abelian group together with its profile.
struct PageEntry {
  PresentedAb group;
  HomologyProfile profile;
};

// First-quadrant-plus-augmentation page: p >= -1, q >= 0. Differentials
// d_{p,q} : E_{p,q} -> E_{p-1,q} are stored on the r = 1 page.
struct SpectralPage {
  int r = 1;
  std::map<std::pair<int, int>, PageEntry> entries;
  std::map<std::pair<int, int>, IMat> d;  // only on the E^1 page

  const PageEntry* entry(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? nullptr : &it->second;
  }
  Int euler_characteristic() const;
};

// Levelwise chain-complex input: one chain complex per level p >= 0 plus
// chain maps for the faces; an optional augmentation level. Discrete sets
// are the special case of complexes concentrated in degree 0.
struct LevelwiseComplex {
  std::vector<ChainComplex> levels;
  // faces[p][i][k]: degree-k block of the chain map d_i : level p -> level p-1
  std::vector<std::vector<std::vector<IMat>>> faces;
  std::optional<ChainComplex> augmentation_level;
  std::vector<IMat> augmentation;  // chain map level 0 -> augmentation level
};

LevelwiseComplex as_levelwise(const AugmentedSemiSimplicialSet& X);

// E^1_{p,q} = H_q of level p (p = -1 is the augmentation level).
SpectralPage e1_page(const AugmentedSemiSimplicialSet& X);
SpectralPage e1_page(const LevelwiseComplex& X);

// Fills the alternating-sum differentials on an E^1 page; returns the
// matrices (p,q) -> d : E_{p,q} -> E_{p-1,q} and records them in the page.
std::map<std::pair<int, int>, IMat> d1(SpectralPage& page, const LevelwiseComplex& X);

// Homology of (E^1, d^1).
SpectralPage e2_page(const SpectralPage& page);

struct TotalHomology {
  std::vector<HomologyProfile> absolute;  // H_k of the non-augmented total complex
  std::vector<HomologyProfile> relative;  // H_k(pt-level, |X|), degree k = index
};

TotalHomology total_homology(const AugmentedSemiSimplicialSet& X);

// True iff the relative homology H_{p+q+1} vanishes for all p+q <= bound,
// i.e. the homology of the augmented total complex vanishes in degrees
// -1..bound.
bool vanishing_line_check(const AugmentedSemiSimplicialSet& X, int bound);

// The complex of injective words on {1..m}, augmented over a point:
// level p holds the injective (p+1)-tuples, faces delete entries.
AugmentedSemiSimplicialSet injective_words(int m);

struct StabilitySpec {
  // connectivity c(g) of the augmentation |X.| -> X_{-1} at genus g
  FloorAffine augmentation_connectivity;
  // E^1_{p,q} is H_q of the (g-p-1)-st object, d^1 alternates:
  // stabilisation for p even, zero for p odd
  bool alternating_pattern = true;
};

struct StabilityRange {
  // for the map H_k(M_g) -> H_k(M_{g+1}): iso for k <= floor((g+iso.shift)/2),
  // surjective for k <= floor((g+surj.shift)/2)
  FloorAffine iso;
  FloorAffine surj;
  std::vector<std::string> trace;
};

// Runs the spectral-sequence induction symbolically and returns the
// stability range it proves, with a line-by-line derivation trace.
// Throws DomainError("no range derivable") when the pattern or the
// connectivity input cannot start the induction.
StabilityRange stability_range(const StabilitySpec& spec);

}  // namespace hstab
