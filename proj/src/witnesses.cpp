#include "hstab/forms.hpp"
#include "hstab/kcomplex.hpp"

namespace hstab {

namespace {

// Automorphism of M exchanging the images of two orthogonal hyperbolic
// morphisms and fixing a complement basis pointwise: conjugate the block
// swap by the basis [u.e u.f v.e v.f | complement].
ModuleMorphism swap_automorphism(const QuadraticModule& M, const HyperbolicMorphism& u,
                                 const HyperbolicMorphism& v) {
  IMat emb(M.rank, 4);
  emb.set_col(0, u.e);
  emb.set_col(1, u.f);
  emb.set_col(2, v.e);
  emb.set_col(3, v.f);
  ModuleMorphism pair_embedding{hyperbolic(2, M.param), M, emb};
  Complement comp = orthogonal_complement(M, pair_embedding);

  IMat P = hcat(emb, comp.basis);
  IMat Pinv = unimodular_inverse(P);

  IMat S = IMat::identity(M.rank);
  for (int i = 0; i < 2; ++i) {
    S(i, i) = 0;
    S(i + 2, i + 2) = 0;
    S(i, i + 2) = 1;
    S(i + 2, i) = 1;
  }
  return {M, M, P * S * Pinv};
}

ModuleMorphism verified(const QuadraticModule& M, IMat matrix, const HyperbolicMorphism& e0,
                        const HyperbolicMorphism& e1) {
  ModuleMorphism f{M, M, std::move(matrix)};
  if (!check_morphism(f)) throw DomainError("witness failed the morphism check");
  if (abs_int(det(f.matrix)) != 1) throw DomainError("witness is not invertible");
  if (f.matrix * e0.e != e1.e || f.matrix * e0.f != e1.f)
    throw DomainError("witness does not carry e0 to e1");
  return f;
}

}  // namespace

ModuleMorphism transitivity_witness(const QuadraticModule& M, const HyperbolicMorphism& e0,
                                    const HyperbolicMorphism& e1, int bound) {
  if (!is_hyperbolic_morphism(M, e0) || !is_hyperbolic_morphism(M, e1))
    throw DomainError("inputs are not hyperbolic morphisms");
  if (bound <= 0) throw DomainError("coefficient bound must be positive");

  if (e0 == e1) return identity_morphism(M);

  if (orthogonal_images(M, e0, e1))
    return verified(M, swap_automorphism(M, e0, e1).matrix, e0, e1);

  // one intermediate vertex adjacent to both endpoints
  std::vector<IVec> both{e0.e, e0.f, e1.e, e1.f};
  if (auto v = first_hyperbolic_morphism(M, bound, both)) {
    IMat m = swap_automorphism(M, *v, e1).matrix * swap_automorphism(M, e0, *v).matrix;
    return verified(M, std::move(m), e0, e1);
  }

  // two intermediates: e0 -- v1 -- v2 -- e1
  std::optional<IMat> found;
  scan_hyperbolic_morphisms(M, bound, {e0.e, e0.f}, [&](const HyperbolicMorphism& v1) {
    auto v2 = first_hyperbolic_morphism(M, bound, {v1.e, v1.f, e1.e, e1.f});
    if (!v2) return false;
    found = swap_automorphism(M, *v2, e1).matrix * swap_automorphism(M, v1, *v2).matrix *
            swap_automorphism(M, e0, v1).matrix;
    return true;
  });
  if (found) return verified(M, std::move(*found), e0, e1);

  throw SearchExhausted(bound);
}

ModuleMorphism cancellation_witness(const QuadraticModule& M, const ModuleMorphism& phi,
                                    int bound) {
  if (phi.domain.rank != M.rank + 2)
    throw DomainError("phi must be defined on M plus one hyperbolic summand");
  if (phi.codomain.rank < 2 || phi.codomain.rank % 2 != 0)
    throw DomainError("phi must land in a sum of hyperbolic planes");
  int g = phi.codomain.rank / 2 - 1;
  QuadraticModule target = hyperbolic(g + 1, M.param);
  if (!(phi.codomain.gram == target.gram))
    throw DomainError("phi's codomain is not in the standard hyperbolic basis");
  if (!check_morphism(phi) || abs_int(det(phi.matrix)) != 1)
    throw DomainError("phi is not an isomorphism of quadratic modules");

  HyperbolicMorphism phiH{phi.matrix.col(M.rank), phi.matrix.col(M.rank + 1)};
  HyperbolicMorphism last;
  last.e.assign(2 * (g + 1), Int(0));
  last.f.assign(2 * (g + 1), Int(0));
  last.e[2 * g] = 1;
  last.f[2 * g + 1] = 1;

  ModuleMorphism T = transitivity_witness(target, phiH, last, bound);
  IMat psi = T.matrix * phi.matrix;

  // after moving phi|_H onto the last copy, M lands in its complement
  for (int j = 0; j < M.rank; ++j)
    for (int i = 2 * g; i < 2 * g + 2; ++i)
      if (psi(i, j) != 0)
        throw DomainError("restriction does not land in the complement");
  if (M.rank != 2 * g) throw DomainError("rank mismatch: M cannot be a sum of g planes");

  ModuleMorphism w{M, hyperbolic(g, M.param), psi.submatrix(0, 0, 2 * g, M.rank)};
  if (!check_morphism(w)) throw DomainError("cancellation witness failed the morphism check");
  if (abs_int(det(w.matrix)) != 1) throw DomainError("cancellation witness is not invertible");
  return w;
}

}  // namespace hstab
