#pragma once

#include <string>
#include <vector>

#include "hstab/linalg.hpp"

namespace hstab {

// The subgroup Lambda of Z entering a form parameter. Only three subgroups
// can satisfy the sandwich condition, so the representation is a closed
// enum rather than an arbitrary modulus.
enum class Subgroup { Trivial = 0, Even = 1, Full = 2 };

std::string subgroup_name(Subgroup s);       // "0", "2Z", "Z"
Subgroup subgroup_from_name(const std::string& s);

struct FormParameter {
  int epsilon = 1;  // +1 or -1
  Subgroup lambda = Subgroup::Trivial;

  bool operator==(const FormParameter&) const = default;
};

// Sandwich condition {a - eps*a} <= Lambda <= {a : a + eps*a = 0}.
bool validate_form_parameter(int epsilon, Subgroup lambda);

// Form parameter ((-1)^n, Lambda_n) of the middle-dimensional quadratic
// module of a 2n-manifold: Lambda_n = 0 for n even, Z for n in {1,3,7},
// 2Z for the remaining odd n.
FormParameter lambda_n(int n);

// An element of Z/Lambda, stored by its canonical representative:
// arbitrary for Lambda = 0, in {0,1} for Lambda = 2Z, always 0 for Lambda = Z.
struct Residue {
  Int value;
  Subgroup lambda = Subgroup::Trivial;

  bool operator==(const Residue&) const = default;
};

Residue make_residue(const Int& v, Subgroup lambda);
Residue residue_add(const Residue& a, const Residue& b);
Residue residue_scale(const Int& c, const Residue& a);

// Free Z-module of finite rank with an epsilon-symmetric Gram matrix and a
// quadratic refinement recorded on the basis. Immutable after construction;
// the constructor enforces every representation invariant.
struct QuadraticModule {
  FormParameter param;
  int rank = 0;
  IMat gram;                   // rank x rank
  std::vector<Residue> alpha;  // per basis vector

  static QuadraticModule create(FormParameter param, IMat gram, std::vector<Int> alpha);
};

// alpha(sum a_i b_i) = sum a_i^2 alpha(b_i) + sum_{i<j} a_i a_j lambda(b_i,b_j).
Residue alpha_eval(const QuadraticModule& M, const IVec& x);

// lambda(x, y) = x^T gram y.
Int bilinear(const QuadraticModule& M, const IVec& x, const IVec& y);

// True iff x -> lambda(-, x) is an isomorphism onto the dual, i.e. |det| = 1.
bool is_nondegenerate(const QuadraticModule& M);

// Orthogonal sum of g hyperbolic planes; basis ordered e_1,f_1,...,e_g,f_g.
QuadraticModule hyperbolic(int g, FormParameter param);

QuadraticModule direct_sum(const QuadraticModule& A, const QuadraticModule& B);

struct ModuleMorphism {
  QuadraticModule domain;
  QuadraticModule codomain;
  IMat matrix;  // codomain.rank x domain.rank
};

// Isometry for lambda plus alpha compatibility, verified on a basis.
bool check_morphism(const ModuleMorphism& f);

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);  // g after f
ModuleMorphism identity_morphism(const QuadraticModule& M);

// A morphism H -> M recorded by the images of the standard basis e, f.
struct HyperbolicMorphism {
  IVec e, f;

  bool operator==(const HyperbolicMorphism&) const = default;
};

bool is_hyperbolic_morphism(const QuadraticModule& M, const HyperbolicMorphism& h);
ModuleMorphism as_morphism(const QuadraticModule& M, const HyperbolicMorphism& h);

// Images are orthogonal as submodules: every cross pairing vanishes.
bool orthogonal_images(const QuadraticModule& M, const HyperbolicMorphism& a,
                       const HyperbolicMorphism& b);

struct Complement {
  QuadraticModule module;  // restricted form on the complement
  IMat basis;              // ambient coordinates of the complement basis, rank x k
};

// Basis and restricted form of { x : lambda(x, im(embedding)) = 0 }.
// Requires M and the domain of the embedding nondegenerate; then the image
// splits off and [image | complement] is a basis of M.
Complement orthogonal_complement(const QuadraticModule& M, const ModuleMorphism& embedding);

// Automorphism f of M with f(e0) = e1, found by composing swaps along a
// chain of pairwise-orthogonal hyperbolic morphisms with coefficients
// bounded by `bound`. Throws SearchExhausted if no chain is found; that
// signals the bound, not non-existence.
ModuleMorphism transitivity_witness(const QuadraticModule& M, const HyperbolicMorphism& e0,
                                    const HyperbolicMorphism& e1, int bound);

// Given an isomorphism phi : M (+) H -> H^{g+1}, produce an isomorphism
// M -> H^{g}: move phi|_H onto the last standard copy by transitivity and
// restrict to orthogonal complements.
ModuleMorphism cancellation_witness(const QuadraticModule& M, const ModuleMorphism& phi,
                                    int bound);

}  // namespace hstab
