#include "hstab/scomplex.hpp"

#include <algorithm>
#include <sstream>

namespace hstab {

namespace {

Simplex sorted_unique(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void all_nonempty_subsets(const Simplex& s, std::set<Simplex>& out) {
  int n = int(s.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    Simplex t;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) t.push_back(s[i]);
    out.insert(std::move(t));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& maximal) {
  SimplicialComplex K;
  for (auto& s : maximal) {
    Simplex t = sorted_unique(s);
    if (t.empty()) continue;
    all_nonempty_subsets(t, K.simplices);
  }
  return K;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (auto& s : simplices) d = std::max(d, int(s.size()) - 1);
  return d;
}

std::set<int> SimplicialComplex::vertices() const {
  std::set<int> v;
  for (auto& s : simplices)
    if (s.size() == 1) v.insert(s[0]);
  return v;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  std::vector<Simplex> out;
  for (auto& s : simplices)
    if (int(s.size()) == k + 1) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (auto& s : simplices) {
    bool maximal = true;
    for (auto& t : simplices) {
      if (t.size() <= s.size() || t == s) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

Int SimplicialComplex::euler_characteristic() const {
  Int chi = 0;
  for (auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

void SimplicialComplex::insert_with_faces(const Simplex& s) {
  Simplex t = sorted_unique(s);
  if (t.empty()) return;
  all_nonempty_subsets(t, simplices);
}

void SimplicialComplex::erase_cofaces(const Simplex& s) {
  Simplex key = sorted_unique(s);
  for (auto it = simplices.begin(); it != simplices.end();) {
    if (std::includes(it->begin(), it->end(), key.begin(), key.end()))
      it = simplices.erase(it);
    else
      ++it;
  }
}

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma) {
  Simplex key = sorted_unique(sigma);
  if (key.empty()) return X;
  if (!X.contains(key)) throw DomainError("link of a simplex not in the complex");
  SimplicialComplex L;
  for (auto& tau : X.simplices) {
    Simplex inter;
    std::set_intersection(tau.begin(), tau.end(), key.begin(), key.end(),
                          std::back_inserter(inter));
    if (!inter.empty()) continue;
    Simplex uni;
    std::set_union(tau.begin(), tau.end(), key.begin(), key.end(), std::back_inserter(uni));
    if (X.contains(uni)) L.simplices.insert(tau);
  }
  return L;
}

SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y) {
  auto vx = X.vertices();
  for (int v : Y.vertices())
    if (vx.count(v)) throw DomainError("join requires disjoint vertex ids");
  SimplicialComplex J;
  J.simplices = X.simplices;
  for (auto& t : Y.simplices) J.simplices.insert(t);
  for (auto& s : X.simplices)
    for (auto& t : Y.simplices) {
      Simplex u;
      std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
      J.simplices.insert(std::move(u));
    }
  return J;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex img;
  for (int v : s) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw DomainError("vertex without an image");
    img.push_back(it->second);
  }
  return sorted_unique(img);
}

bool SimplicialMap::valid() const {
  for (auto& s : domain.simplices) {
    Simplex img;
    for (int v : s) {
      auto it = assignment.find(v);
      if (it == assignment.end()) return false;
      img.push_back(it->second);
    }
    if (!codomain.contains(sorted_unique(img))) return false;
  }
  return true;
}

void SemiSimplicialSet::validate() const {
  if (faces.size() != level_sizes.size())
    throw DomainError("face table size does not match levels");
  for (int p = 1; p <= top_level(); ++p) {
    if (int(faces[p].size()) != p + 1)
      throw DomainError("level " + std::to_string(p) + " needs " + std::to_string(p + 1) +
                        " face maps");
    for (auto& d : faces[p]) {
      if (d.size() != level_sizes[p]) throw DomainError("face map with wrong domain size");
      for (size_t s : d)
        if (s >= level_sizes[p - 1]) throw DomainError("face map image out of range");
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int p = 2; p <= top_level(); ++p)
    for (int j = 1; j <= p; ++j)
      for (int i = 0; i < j; ++i)
        for (size_t s = 0; s < level_sizes[p]; ++s)
          if (faces[p - 1][i][faces[p][j][s]] != faces[p - 1][j - 1][faces[p][i][s]])
            throw DomainError("semisimplicial identity fails at level " + std::to_string(p));
}

void AugmentedSemiSimplicialSet::validate() const {
  body.validate();
  if (body.level_sizes.empty()) return;
  if (augmentation.size() != body.level_sizes[0])
    throw DomainError("augmentation has wrong domain size");
  for (size_t s : augmentation)
    if (s >= aug_size) throw DomainError("augmentation image out of range");
  if (body.top_level() >= 1)
    for (size_t s = 0; s < body.level_sizes[1]; ++s)
      if (augmentation[body.faces[1][0][s]] != augmentation[body.faces[1][1][s]])
        throw DomainError("augmentation does not equalize the two faces");
}

namespace {

SemiSimplicialSet tuples_semisimplicial(const SimplicialComplex& K, bool all_orders) {
  SemiSimplicialSet X;
  int dim = K.dimension();
  std::vector<std::vector<Simplex>> tuples(std::max(dim + 1, 0));
  for (int p = 0; p <= dim; ++p) {
    for (auto& s : K.simplices_of_dim(p)) {
      if (all_orders) {
        Simplex perm = s;
        std::sort(perm.begin(), perm.end());
        do {
          tuples[p].push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        tuples[p].push_back(s);
      }
    }
    std::sort(tuples[p].begin(), tuples[p].end());
  }
  X.level_sizes.resize(tuples.size());
  X.faces.resize(tuples.size());
  X.labels.resize(tuples.size());
  for (int p = 0; p <= dim; ++p) {
    X.level_sizes[p] = tuples[p].size();
    for (auto& t : tuples[p]) {
      std::ostringstream os;
      for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
      X.labels[p].push_back(os.str());
    }
  }
  for (int p = 1; p <= dim; ++p) {
    X.faces[p].assign(p + 1, std::vector<size_t>(tuples[p].size()));
    for (size_t s = 0; s < tuples[p].size(); ++s)
      for (int i = 0; i <= p; ++i) {
        Simplex face = tuples[p][s];
        face.erase(face.begin() + i);
        auto it = std::lower_bound(tuples[p - 1].begin(), tuples[p - 1].end(), face);
        X.faces[p][i][s] = size_t(it - tuples[p - 1].begin());
      }
  }
  return X;
}

}  // namespace

SemiSimplicialSet associated_semisimplicial(const SimplicialComplex& K) {
  return tuples_semisimplicial(K, true);
}

SemiSimplicialSet increasing_semisimplicial(const SimplicialComplex& K) {
  return tuples_semisimplicial(K, false);
}

void ChainComplex::validate() const {
  for (size_t k = 1; k + 1 < boundary.size(); ++k) {
    if (boundary[k].cols() != boundary[k + 1].rows())
      throw DomainError("boundary matrices have mismatched shapes");
    if (!(boundary[k] * boundary[k + 1]).is_zero())
      throw DomainError("boundary of boundary is nonzero at degree " + std::to_string(k + 1));
  }
}

ChainComplex chain_complex(const SimplicialComplex& K, int max_dim) {
  int dim = K.dimension();
  if (max_dim >= 0) dim = std::min(dim, max_dim);
  ChainComplex C;
  if (dim < 0) return C;
  std::vector<std::vector<Simplex>> basis(dim + 1);
  for (int k = 0; k <= dim; ++k) basis[k] = K.simplices_of_dim(k);  // set order = sorted
  C.dims.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) C.dims[k] = int(basis[k].size());
  C.boundary.resize(dim + 1);
  for (int k = 1; k <= dim; ++k) {
    IMat d(C.dims[k - 1], C.dims[k]);
    for (int j = 0; j < C.dims[k]; ++j) {
      const Simplex& s = basis[k][j];
      for (int i = 0; i <= k; ++i) {
        Simplex face = s;
        face.erase(face.begin() + i);
        auto it = std::lower_bound(basis[k - 1].begin(), basis[k - 1].end(), face);
        d(int(it - basis[k - 1].begin()), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    C.boundary[k] = std::move(d);
  }
  C.validate();
  return C;
}

ChainComplex chain_complex(const SemiSimplicialSet& X) {
  ChainComplex C;
  int top = X.top_level();
  if (top < 0) return C;
  C.dims.resize(top + 1);
  for (int p = 0; p <= top; ++p) C.dims[p] = int(X.level_sizes[p]);
  C.boundary.resize(top + 1);
  for (int p = 1; p <= top; ++p) {
    IMat d(C.dims[p - 1], C.dims[p]);
    for (size_t s = 0; s < X.level_sizes[p]; ++s)
      for (int i = 0; i <= p; ++i) d(int(X.faces[p][i][s]), int(s)) += (i % 2 == 0) ? 1 : -1;
    C.boundary[p] = std::move(d);
  }
  C.validate();
  return C;
}

std::string profile_str(const HomologyProfile& p) {
  std::ostringstream os;
  os << "Z^" << p.betti;
  for (auto& t : p.torsion) os << " + Z/" << t;
  return os.str();
}

std::vector<HomologyProfile> homology(const ChainComplex& C) {
  int top = int(C.dims.size()) - 1;
  std::vector<HomologyProfile> H(std::max(top + 1, 0));
  if (top < 0) return H;
  std::vector<int> ranks(top + 2, 0);
  std::vector<std::vector<Int>> tors(top + 2);
  for (int k = 1; k <= top; ++k) {
    auto d = smith_normal_form(C.boundary[k]);
    ranks[k] = d.rank;
    for (int i = 0; i < d.rank; ++i)
      if (d.S(i, i) > 1) tors[k].push_back(d.S(i, i));
  }
  for (int k = 0; k <= top; ++k) {
    H[k].betti = C.dims[k] - ranks[k] - ranks[k + 1];
    H[k].torsion = tors[k + 1];  // torsion of H_k comes from d_{k+1}
  }
  return H;
}

std::vector<HomologyProfile> homology(const SimplicialComplex& K) {
  return homology(chain_complex(K));
}

std::vector<HomologyProfile> reduced_homology(const SimplicialComplex& K) {
  if (K.empty()) return {};  // callers treat H~_{-1} via emptiness directly
  ChainComplex C = chain_complex(K);
  // augmentation: one extra generator in degree -1; shift not needed, we
  // only adjust H_0 by the rank of the augmentation (always 1 here)
  auto H = homology(C);
  if (!H.empty()) H[0].betti -= 1;
  return H;
}

HomologyProfile profile_of(const PresentedAb& A) {
  auto d = smith_normal_form(A.rels);
  HomologyProfile p;
  p.betti = A.gens - d.rank;
  for (int i = 0; i < d.rank; ++i)
    if (d.S(i, i) > 1) p.torsion.push_back(d.S(i, i));
  return p;
}

bool columns_in_lattice(const IMat& M, const IMat& R) {
  for (int j = 0; j < M.cols(); ++j)
    if (!solve(R, M.col(j))) return false;
  return true;
}

PresentedAb presented_homology(const PresentedAb& A, const IMat& f, const PresentedAb& B,
                               const IMat& g, const PresentedAb& C) {
  if (f.rows() != B.gens || f.cols() != A.gens || g.rows() != C.gens || g.cols() != B.gens)
    throw DomainError("presented homology: map shapes do not match");
  // kernel of g modulo the relations of C: x with g x in the lattice of rels_C
  IMat N = hcat(g, C.rels);
  IMat K = kernel_basis(N);
  IMat X(B.gens, K.cols());
  for (int j = 0; j < K.cols(); ++j)
    for (int i = 0; i < B.gens; ++i) X(i, j) = K(i, j);
  // relations of B are in the kernel because g is well defined
  IMat L = lattice_column_basis(hcat(X, B.rels));
  // quotient by the image of f plus the relations of B, in the basis of L
  IMat numerators = hcat(f, B.rels);
  IMat rels(L.cols(), numerators.cols());
  for (int j = 0; j < numerators.cols(); ++j) {
    auto y = solve(L, numerators.col(j));
    if (!y) throw DomainError("presented homology: image does not lie in the kernel");
    for (int i = 0; i < L.cols(); ++i) rels(i, j) = (*y)[i];
  }
  return {L.cols(), std::move(rels)};
}

}  // namespace hstab
