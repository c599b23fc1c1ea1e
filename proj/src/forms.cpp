#include "hstab/forms.hpp"

namespace hstab {

std::string subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::Trivial: return "0";
    case Subgroup::Even: return "2Z";
    case Subgroup::Full: return "Z";
  }
  throw DomainError("bad subgroup tag");
}

Subgroup subgroup_from_name(const std::string& s) {
  if (s == "0") return Subgroup::Trivial;
  if (s == "2Z") return Subgroup::Even;
  if (s == "Z") return Subgroup::Full;
  throw DomainError("unknown subgroup tag: " + s);
}

bool validate_form_parameter(int epsilon, Subgroup lambda) {
  if (epsilon != 1 && epsilon != -1) return false;
  // {a - eps a | a in Z} is 0 for eps = +1 and 2Z for eps = -1;
  // {a | a + eps a = 0} is 0 for eps = +1 and Z for eps = -1.
  Subgroup lower = (epsilon == 1) ? Subgroup::Trivial : Subgroup::Even;
  Subgroup upper = (epsilon == 1) ? Subgroup::Trivial : Subgroup::Full;
  return int(lower) <= int(lambda) && int(lambda) <= int(upper);
}

FormParameter lambda_n(int n) {
  if (n <= 0) throw DomainError("lambda_n requires n >= 1");
  if (n % 2 == 0) return {+1, Subgroup::Trivial};
  if (n == 1 || n == 3 || n == 7) return {-1, Subgroup::Full};
  return {-1, Subgroup::Even};
}

Residue make_residue(const Int& v, Subgroup lambda) {
  switch (lambda) {
    case Subgroup::Trivial: return {v, lambda};
    case Subgroup::Even: return {mod_floor(v, 2), lambda};
    case Subgroup::Full: return {Int(0), lambda};
  }
  throw DomainError("bad subgroup tag");
}

Residue residue_add(const Residue& a, const Residue& b) {
  if (a.lambda != b.lambda) throw DomainError("residues over different subgroups");
  return make_residue(a.value + b.value, a.lambda);
}

Residue residue_scale(const Int& c, const Residue& a) {
  return make_residue(c * a.value, a.lambda);
}

QuadraticModule QuadraticModule::create(FormParameter param, IMat gram,
                                        std::vector<Int> alpha_values) {
  if (!validate_form_parameter(param.epsilon, param.lambda))
    throw DomainError("invalid form parameter");
  int r = gram.rows();
  if (gram.cols() != r) throw DomainError("gram matrix must be square");
  if (int(alpha_values.size()) != r)
    throw DomainError("alpha must have one value per basis vector");

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (gram(j, i) != param.epsilon * gram(i, j))
        throw DomainError("gram matrix is not epsilon-symmetric");

  QuadraticModule M;
  M.param = param;
  M.rank = r;
  M.gram = std::move(gram);
  M.alpha.reserve(r);
  for (int i = 0; i < r; ++i) {
    if (param.epsilon == -1) {
      if (M.gram(i, i) != 0)
        throw DomainError("skew form must have zero diagonal over Z");
    } else {
      if (mod_floor(M.gram(i, i), 2) != 0)
        throw DomainError("symmetric quadratic module needs an even diagonal");
      if (alpha_values[i] * 2 != M.gram(i, i))
        throw DomainError("for epsilon = +1 alpha is forced to half the diagonal");
    }
    M.alpha.push_back(make_residue(alpha_values[i], param.lambda));
  }
  return M;
}

Int bilinear(const QuadraticModule& M, const IVec& x, const IVec& y) {
  if (int(x.size()) != M.rank || int(y.size()) != M.rank)
    throw DomainError("vector length does not match module rank");
  Int s = 0;
  for (int i = 0; i < M.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < M.rank; ++j) s += x[i] * M.gram(i, j) * y[j];
  }
  return s;
}

Residue alpha_eval(const QuadraticModule& M, const IVec& x) {
  if (int(x.size()) != M.rank) throw DomainError("vector length does not match module rank");
  Int acc = 0;
  for (int i = 0; i < M.rank; ++i) {
    if (x[i] == 0) continue;
    acc += x[i] * x[i] * M.alpha[i].value;
    for (int j = i + 1; j < M.rank; ++j) acc += x[i] * x[j] * M.gram(i, j);
  }
  return make_residue(acc, M.param.lambda);
}

bool is_nondegenerate(const QuadraticModule& M) {
  return abs_int(det(M.gram)) == 1;
}

QuadraticModule hyperbolic(int g, FormParameter param) {
  if (g < 0) throw DomainError("negative genus");
  if (!validate_form_parameter(param.epsilon, param.lambda))
    throw DomainError("invalid form parameter");
  IMat gram(2 * g, 2 * g);
  for (int k = 0; k < g; ++k) {
    gram(2 * k, 2 * k + 1) = 1;
    gram(2 * k + 1, 2 * k) = param.epsilon;
  }
  return QuadraticModule::create(param, std::move(gram), std::vector<Int>(2 * g, Int(0)));
}

QuadraticModule direct_sum(const QuadraticModule& A, const QuadraticModule& B) {
  if (!(A.param == B.param)) throw DomainError("direct sum needs a common form parameter");
  IMat gram(A.rank + B.rank, A.rank + B.rank);
  for (int i = 0; i < A.rank; ++i)
    for (int j = 0; j < A.rank; ++j) gram(i, j) = A.gram(i, j);
  for (int i = 0; i < B.rank; ++i)
    for (int j = 0; j < B.rank; ++j) gram(A.rank + i, A.rank + j) = B.gram(i, j);
  std::vector<Int> alpha;
  alpha.reserve(A.rank + B.rank);
  for (auto& r : A.alpha) alpha.push_back(r.value);
  for (auto& r : B.alpha) alpha.push_back(r.value);
  return QuadraticModule::create(A.param, std::move(gram), std::move(alpha));
}

bool check_morphism(const ModuleMorphism& f) {
  if (!(f.domain.param == f.codomain.param)) return false;
  if (f.matrix.rows() != f.codomain.rank || f.matrix.cols() != f.domain.rank)
    throw DomainError("morphism matrix has wrong shape");
  // isometry on the whole module follows from the check on a basis
  IMat pulled = f.matrix.transpose() * f.codomain.gram * f.matrix;
  if (pulled != f.domain.gram) return false;
  // alpha of each basis image must match; bilinearity extends this to all x
  for (int j = 0; j < f.domain.rank; ++j) {
    Residue im = alpha_eval(f.codomain, f.matrix.col(j));
    if (!(im == f.domain.alpha[j])) return false;
  }
  return true;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (g.domain.rank != f.codomain.rank)
    throw DomainError("morphism composition shape mismatch");
  return {f.domain, g.codomain, g.matrix * f.matrix};
}

ModuleMorphism identity_morphism(const QuadraticModule& M) {
  return {M, M, IMat::identity(M.rank)};
}

bool is_hyperbolic_morphism(const QuadraticModule& M, const HyperbolicMorphism& h) {
  if (int(h.e.size()) != M.rank || int(h.f.size()) != M.rank) return false;
  if (bilinear(M, h.e, h.e) != 0) return false;
  if (bilinear(M, h.f, h.f) != 0) return false;
  if (bilinear(M, h.e, h.f) != 1) return false;
  if (!(alpha_eval(M, h.e) == make_residue(0, M.param.lambda))) return false;
  if (!(alpha_eval(M, h.f) == make_residue(0, M.param.lambda))) return false;
  return true;
}

ModuleMorphism as_morphism(const QuadraticModule& M, const HyperbolicMorphism& h) {
  IMat m(M.rank, 2);
  m.set_col(0, h.e);
  m.set_col(1, h.f);
  return {hyperbolic(1, M.param), M, std::move(m)};
}

bool orthogonal_images(const QuadraticModule& M, const HyperbolicMorphism& a,
                       const HyperbolicMorphism& b) {
  return bilinear(M, a.e, b.e) == 0 && bilinear(M, a.e, b.f) == 0 &&
         bilinear(M, a.f, b.e) == 0 && bilinear(M, a.f, b.f) == 0;
}

Complement orthogonal_complement(const QuadraticModule& M, const ModuleMorphism& embedding) {
  if (!is_nondegenerate(M)) throw DomainError("ambient module is degenerate");
  if (!is_nondegenerate(embedding.domain))
    throw DomainError("embedded module is degenerate");
  if (!check_morphism(embedding)) throw DomainError("embedding is not a morphism");

  int k = embedding.domain.rank;
  // lambda(x, c_j) = (gram * c_j) . x, one linear constraint per image column
  IMat constraints(k, M.rank);
  for (int j = 0; j < k; ++j) {
    IVec w = M.gram * embedding.matrix.col(j);
    for (int i = 0; i < M.rank; ++i) constraints(j, i) = w[i];
  }
  IMat B = kernel_basis(constraints);
  if (B.cols() != M.rank - k)
    throw DomainError("complement rank mismatch; embedding not split");

  // the image splits off, so image basis plus complement basis is unimodular
  if (k > 0 || B.cols() < M.rank) {
    IMat full = hcat(embedding.matrix, B);
    if (abs_int(det(full)) != 1)
      throw DomainError("image + complement do not form a basis");
  }

  IMat gram = B.transpose() * M.gram * B;
  std::vector<Int> alpha;
  alpha.reserve(B.cols());
  for (int j = 0; j < B.cols(); ++j) alpha.push_back(alpha_eval(M, B.col(j)).value);
  Complement c;
  c.module = QuadraticModule::create(M.param, std::move(gram), std::move(alpha));
  c.basis = std::move(B);
  return c;
}

}  // namespace hstab
