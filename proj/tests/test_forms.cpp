#include <doctest.h>

#include <random>

#include "hstab/forms.hpp"
#include "hstab/kcomplex.hpp"

using namespace hstab;

namespace {

const FormParameter kSkewEven{-1, Subgroup::Even};

QuadraticModule random_module(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> rk(1, 5);
  std::uniform_int_distribution<int> ent(-4, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  FormParameter p;
  switch (pick(rng)) {
    case 0: p = {+1, Subgroup::Trivial}; break;
    case 1: p = {-1, Subgroup::Even}; break;
    default: p = {-1, Subgroup::Full}; break;
  }
  int r = rk(rng);
  IMat gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int v = ent(rng);
      gram(i, j) = v;
      gram(j, i) = p.epsilon * v;
    }
  std::vector<Int> alpha(r, Int(0));
  for (int i = 0; i < r; ++i) {
    if (p.epsilon == 1) {
      int half = ent(rng);
      gram(i, i) = 2 * half;
      alpha[i] = half;
    } else if (p.lambda == Subgroup::Even) {
      alpha[i] = bit(rng);
    }
  }
  return QuadraticModule::create(p, std::move(gram), std::move(alpha));
}

IVec random_vec(std::mt19937& rng, int r, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> ent(lo, hi);
  IVec v(r);
  for (auto& x : v) x = ent(rng);
  return v;
}

HyperbolicMorphism random_hyperbolic(std::mt19937& rng, const QuadraticModule& M, int bound) {
  std::uniform_int_distribution<int> ent(-bound, bound);
  while (true) {
    IVec e(M.rank), f(M.rank);
    for (auto& x : e) x = ent(rng);
    if (bilinear(M, e, e) != 0) continue;
    if (!(alpha_eval(M, e) == make_residue(0, M.param.lambda))) continue;
    bool got = false;
    for (int tries = 0; tries < 200 && !got; ++tries) {
      for (auto& x : f) x = ent(rng);
      got = bilinear(M, e, f) == 1 && bilinear(M, f, f) == 0 &&
            alpha_eval(M, f) == make_residue(0, M.param.lambda);
    }
    if (got) return {e, f};
  }
}

}  // namespace

TEST_CASE("form parameter sandwich") {
  CHECK(validate_form_parameter(+1, Subgroup::Trivial));
  CHECK(validate_form_parameter(-1, Subgroup::Even));
  CHECK(validate_form_parameter(-1, Subgroup::Full));
  CHECK_FALSE(validate_form_parameter(-1, Subgroup::Trivial));
  CHECK_FALSE(validate_form_parameter(+1, Subgroup::Even));
  CHECK_FALSE(validate_form_parameter(+1, Subgroup::Full));
  CHECK_FALSE(validate_form_parameter(0, Subgroup::Trivial));
}

TEST_CASE("middle-dimension form parameter by n") {
  CHECK(lambda_n(2) == FormParameter{+1, Subgroup::Trivial});
  CHECK(lambda_n(4) == FormParameter{+1, Subgroup::Trivial});
  CHECK(lambda_n(1) == FormParameter{-1, Subgroup::Full});
  CHECK(lambda_n(3) == FormParameter{-1, Subgroup::Full});
  CHECK(lambda_n(7) == FormParameter{-1, Subgroup::Full});
  CHECK(lambda_n(5) == FormParameter{-1, Subgroup::Even});
  CHECK(lambda_n(9) == FormParameter{-1, Subgroup::Even});
  CHECK_THROWS_AS(lambda_n(0), DomainError);
  CHECK_THROWS_AS(lambda_n(-3), DomainError);
}

TEST_CASE("hyperbolic module construction") {
  auto H = hyperbolic(1, kSkewEven);
  CHECK(H.rank == 2);
  CHECK(H.gram == IMat{{Int(0), Int(1)}, {Int(-1), Int(0)}});
  CHECK(H.alpha[0] == make_residue(0, Subgroup::Even));

  auto H0 = hyperbolic(0, kSkewEven);
  CHECK(H0.rank == 0);

  auto Hp = hyperbolic(2, {+1, Subgroup::Trivial});
  CHECK(Hp.rank == 4);
  CHECK(Hp.gram(0, 1) == 1);
  CHECK(Hp.gram(1, 0) == 1);
  CHECK(Hp.gram(2, 3) == 1);
  CHECK(Hp.gram(0, 2) == 0);
}

TEST_CASE("alpha evaluation on the hyperbolic plane") {
  auto H = hyperbolic(1, kSkewEven);
  CHECK(alpha_eval(H, {Int(1), Int(1)}) == make_residue(1, Subgroup::Even));
  CHECK(alpha_eval(H, {Int(2), Int(0)}) == make_residue(0, Subgroup::Even));
  CHECK(alpha_eval(H, {Int(1), Int(-1)}) == make_residue(1, Subgroup::Even));
  CHECK_THROWS_AS(alpha_eval(H, {Int(1)}), DomainError);
}

TEST_CASE("alpha satisfies the quadratic refinement identities") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> scal(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    auto M = random_module(rng);
    IVec x = random_vec(rng, M.rank), y = random_vec(rng, M.rank);
    Int a = scal(rng);
    auto lhs = alpha_eval(M, x + y);
    auto rhs = residue_add(residue_add(alpha_eval(M, x), alpha_eval(M, y)),
                           make_residue(bilinear(M, x, y), M.param.lambda));
    CHECK(lhs == rhs);
    CHECK(alpha_eval(M, scale(a, x)) == residue_scale(a * a, alpha_eval(M, x)));
  }
}

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(hyperbolic(1, kSkewEven)));
  CHECK(is_nondegenerate(hyperbolic(3, kSkewEven)));
  auto M = QuadraticModule::create({-1, Subgroup::Even},
                                   IMat{{Int(0), Int(2)}, {Int(-2), Int(0)}},
                                   {Int(0), Int(0)});
  CHECK_FALSE(is_nondegenerate(M));
  CHECK(is_nondegenerate(hyperbolic(0, kSkewEven)));
}

TEST_CASE("morphism checking") {
  auto H = hyperbolic(1, kSkewEven);
  CHECK(check_morphism(identity_morphism(H)));

  // e -> e, f -> f + e preserves lambda but shifts alpha
  ModuleMorphism shear{H, H, IMat{{Int(1), Int(1)}, {Int(0), Int(1)}}};
  CHECK_FALSE(check_morphism(shear));

  // e -> f, f -> -e is a symplectic rotation with alpha intact
  ModuleMorphism rot{H, H, IMat{{Int(0), Int(-1)}, {Int(1), Int(0)}}};
  CHECK(check_morphism(rot));
}

TEST_CASE("composition of morphisms passes the check") {
  std::mt19937 rng(31337);
  auto H2 = hyperbolic(2, kSkewEven);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_hyperbolic(rng, H2, 1);
    auto f = as_morphism(H2, a);
    CHECK(check_morphism(f));
    // compose with a symplectic rotation upstairs
    ModuleMorphism rot{hyperbolic(1, kSkewEven), hyperbolic(1, kSkewEven),
                       IMat{{Int(0), Int(-1)}, {Int(1), Int(0)}}};
    auto g = compose(f, rot);
    CHECK(check_morphism(g));
  }
}

TEST_CASE("morphisms out of nondegenerate modules have full column rank") {
  std::mt19937 rng(91);
  auto H3 = hyperbolic(3, kSkewEven);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = random_hyperbolic(rng, H3, 1);
    auto f = as_morphism(H3, h);
    REQUIRE(check_morphism(f));
    CHECK(rank_of(f.matrix) == 2);
  }
}

TEST_CASE("orthogonal complement of the first standard copy") {
  auto H2 = hyperbolic(2, kSkewEven);
  IMat first(4, 2);
  first(0, 0) = 1;
  first(1, 1) = 1;
  auto comp = orthogonal_complement(H2, {hyperbolic(1, kSkewEven), H2, first});
  CHECK(comp.module.rank == 2);
  // complement is the second standard copy
  CHECK(abs_int(comp.basis(2, 0)) + abs_int(comp.basis(3, 0)) == 1);
  CHECK(comp.module.gram == IMat{{Int(0), Int(1)}, {Int(-1), Int(0)}});
}

TEST_CASE("orthogonal complement of a sheared embedding") {
  // e -> e1, f -> f1 + e2 inside two hyperbolic planes
  auto H2 = hyperbolic(2, kSkewEven);
  IMat emb(4, 2);
  emb(0, 0) = 1;  // e1
  emb(1, 1) = 1;  // f1
  emb(2, 1) = 1;  // + e2
  auto comp = orthogonal_complement(H2, {hyperbolic(1, kSkewEven), H2, emb});
  CHECK(comp.module.rank == 2);
  // the complement lattice is spanned by e1 + f2 and e2
  CHECK(solve(comp.basis, IVec{Int(1), Int(0), Int(0), Int(1)}).has_value());
  CHECK(solve(comp.basis, IVec{Int(0), Int(0), Int(1), Int(0)}).has_value());
  // and it is one hyperbolic plane again
  CHECK(abs_int(det(comp.module.gram)) == 1);
  auto w = first_hyperbolic_morphism(comp.module, 1, {});
  REQUIRE(w.has_value());
  CHECK(check_morphism(as_morphism(comp.module, *w)));
}

TEST_CASE("orthogonal complement of the empty embedding is everything") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto comp = orthogonal_complement(H2, {hyperbolic(0, kSkewEven), H2, IMat(4, 0)});
  CHECK(comp.module.rank == 4);
  CHECK(comp.module.gram == H2.gram);
}

TEST_CASE("gram splits as a block sum along image and complement") {
  std::mt19937 rng(5150);
  auto H3 = hyperbolic(3, kSkewEven);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = random_hyperbolic(rng, H3, 1);
    auto f = as_morphism(H3, h);
    auto comp = orthogonal_complement(H3, f);
    CHECK(comp.module.rank + 2 == H3.rank);
    IMat cross = f.matrix.transpose() * H3.gram * comp.basis;
    CHECK(cross.is_zero());
  }
}

TEST_CASE("transitivity witness: identity case") {
  auto H5 = hyperbolic(5, kSkewEven);
  HyperbolicMorphism std0;
  std0.e.assign(10, Int(0));
  std0.f.assign(10, Int(0));
  std0.e[0] = 1;
  std0.f[1] = 1;
  auto w = transitivity_witness(H5, std0, std0, 1);
  CHECK(w.matrix == IMat::identity(10));
}

TEST_CASE("transitivity witness: disjoint standard copies swap blocks") {
  auto H5 = hyperbolic(5, kSkewEven);
  HyperbolicMorphism a, b;
  a.e.assign(10, Int(0));
  a.f.assign(10, Int(0));
  b.e.assign(10, Int(0));
  b.f.assign(10, Int(0));
  a.e[0] = 1;
  a.f[1] = 1;
  b.e[2] = 1;
  b.f[3] = 1;
  auto w = transitivity_witness(H5, a, b, 1);
  CHECK(check_morphism(w));
  CHECK(w.matrix * a.e == b.e);
  CHECK(w.matrix * a.f == b.f);
  // the witness is exactly the swap of the first two blocks
  CHECK(w.matrix(2, 0) == 1);
  CHECK(w.matrix(0, 2) == 1);
  CHECK(w.matrix(4, 4) == 1);
}

TEST_CASE("transitivity witness on random pairs verifies post hoc") {
  std::mt19937 rng(2024);
  auto H5 = hyperbolic(5, kSkewEven);
  for (int trial = 0; trial < 10; ++trial) {
    auto e0 = random_hyperbolic(rng, H5, 1);
    auto e1 = random_hyperbolic(rng, H5, 1);
    auto w = transitivity_witness(H5, e0, e1, 2);
    CHECK(check_morphism(w));
    CHECK(abs_int(det(w.matrix)) == 1);
    CHECK(w.matrix * e0.e == e1.e);
    CHECK(w.matrix * e0.f == e1.f);
  }
}

TEST_CASE("cancellation witness: identity and permutation") {
  auto H5 = hyperbolic(5, kSkewEven);
  auto H4 = hyperbolic(4, kSkewEven);
  auto H1 = hyperbolic(1, kSkewEven);
  auto M = hyperbolic(4, kSkewEven);  // plays the unknown summand

  // phi = identity on M (+) H = H^5
  ModuleMorphism phi{direct_sum(M, H1), H5, IMat::identity(10)};
  auto w = cancellation_witness(M, phi, 2);
  CHECK(w.matrix == IMat::identity(8));

  // phi = block permutation rotating the five planes
  IMat P(10, 10);
  for (int b = 0; b < 5; ++b) {
    int src = 2 * b, dst = 2 * ((b + 1) % 5);
    P(dst, src) = 1;
    P(dst + 1, src + 1) = 1;
  }
  ModuleMorphism phi2{direct_sum(M, H1), H5, P};
  REQUIRE(check_morphism(phi2));
  auto w2 = cancellation_witness(M, phi2, 2);
  CHECK(check_morphism(w2));
  CHECK(abs_int(det(w2.matrix)) == 1);
  CHECK(w2.codomain.rank == H4.rank);
}

TEST_CASE("cancellation witness: twisted last block") {
  auto H5 = hyperbolic(5, kSkewEven);
  auto H1 = hyperbolic(1, kSkewEven);
  auto M = hyperbolic(4, kSkewEven);
  IMat T = IMat::identity(10);
  // e -> f, f -> -e on the last plane
  T(8, 8) = 0;
  T(9, 9) = 0;
  T(9, 8) = 1;
  T(8, 9) = -1;
  ModuleMorphism phi{direct_sum(M, H1), H5, T};
  REQUIRE(check_morphism(phi));
  auto w = cancellation_witness(M, phi, 2);
  CHECK(check_morphism(w));
  CHECK(abs_int(det(w.matrix)) == 1);
}
