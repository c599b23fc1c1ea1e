#include "hstab/kcomplex.hpp"

#include <algorithm>
#include <map>

namespace hstab {

namespace {

// DFS over x in [-bound, bound]^r subject to linear constraints w_k.x = t_k,
// pruning with the max attainable remainder of each constraint. T is either
// long long (when a conservative worst-case bound fits) or Int.
template <typename T>
struct BoxSearch {
  int r;
  int bound;
  std::vector<std::vector<T>> w;
  std::vector<T> target;
  std::vector<std::vector<T>> slack;  // slack[k][pos] = sum_{j >= pos} |w_k[j]| * bound

  void prepare() {
    slack.assign(w.size(), std::vector<T>(r + 1, T(0)));
    for (size_t k = 0; k < w.size(); ++k)
      for (int pos = r - 1; pos >= 0; --pos) {
        T a = w[k][pos] < 0 ? T(-w[k][pos]) : w[k][pos];
        slack[k][pos] = slack[k][pos + 1] + a * bound;
      }
  }

  template <typename Leaf>
  bool dfs(int pos, std::vector<int>& x, std::vector<T>& partial, Leaf&& leaf) {
    for (size_t k = 0; k < w.size(); ++k) {
      T gap = target[k] - partial[k];
      if (gap < 0) gap = -gap;
      if (gap > slack[k][pos]) return false;
    }
    if (pos == r) return leaf(x);
    for (int v = -bound; v <= bound; ++v) {
      x[pos] = v;
      for (size_t k = 0; k < w.size(); ++k) partial[k] += w[k][pos] * v;
      if (dfs(pos + 1, x, partial, leaf)) return true;
      for (size_t k = 0; k < w.size(); ++k) partial[k] -= w[k][pos] * v;
    }
    x[pos] = 0;
    return false;
  }

  template <typename Leaf>
  bool run(Leaf&& leaf) {
    prepare();
    std::vector<int> x(r, 0);
    std::vector<T> partial(w.size(), T(0));
    if (r == 0) {
      // only the empty vector; constraints must already be met
      for (size_t k = 0; k < w.size(); ++k)
        if (target[k] != 0) return false;
      return leaf(x);
    }
    return dfs(0, x, partial, leaf);
  }
};

template <typename T>
struct PairScanner {
  const QuadraticModule& M;
  int bound;
  std::vector<T> gram;  // row major
  std::vector<T> alpha;
  int r;

  PairScanner(const QuadraticModule& M_, int bound_) : M(M_), bound(bound_), r(M_.rank) {
    gram.resize(size_t(r) * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) gram[size_t(i) * r + j] = T(to_tt(M.gram(i, j)));
    alpha.resize(r);
    for (int i = 0; i < r; ++i) alpha[i] = T(to_tt(M.alpha[i].value));
  }

  static long long to_tt(const Int& v) { return to_ll(v); }

  std::vector<T> pairing_row(const std::vector<T>& c) const {
    // lambda(x, c) = (gram . c) . x
    std::vector<T> w(r, T(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) w[i] += gram[size_t(i) * r + j] * c[j];
    return w;
  }

  std::vector<T> pairing_row_left(const std::vector<T>& e) const {
    // lambda(e, x) = (gram^T . e) . x
    std::vector<T> w(r, T(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) w[i] += gram[size_t(j) * r + i] * e[j];
    return w;
  }

  bool isotropic_and_alpha_zero(const std::vector<int>& x) const {
    if (M.param.epsilon == 1) {
      // alpha is half the associated form, so both conditions are lambda(x,x)=0
      T q = 0;
      for (int i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < r; ++j) q += T(x[i]) * gram[size_t(i) * r + j] * T(x[j]);
      }
      return q == 0;
    }
    // epsilon = -1: lambda(x,x) = 0 automatically
    if (M.param.lambda == Subgroup::Full) return true;
    T a = 0;
    for (int i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      a += T(x[i]) * T(x[i]) * alpha[i];
      for (int j = i + 1; j < r; ++j) a += T(x[i]) * T(x[j]) * gram[size_t(i) * r + j];
    }
    return a % 2 == 0;
  }

  // visit returns true to stop the scan early
  bool scan(const std::vector<IVec>& ortho, int min_max_norm,
            const std::function<bool(const HyperbolicMorphism&)>& visit) {
    std::vector<std::vector<T>> ortho_rows;
    std::vector<T> ortho_targets;
    for (auto& c : ortho) {
      std::vector<T> ct(r);
      for (int i = 0; i < r; ++i) ct[i] = T(to_tt(c[i]));
      ortho_rows.push_back(pairing_row(ct));
      ortho_targets.push_back(T(0));
    }

    BoxSearch<T> eSearch{r, bound, ortho_rows, ortho_targets, {}};
    return eSearch.run([&](const std::vector<int>& e) {
      if (!isotropic_and_alpha_zero(e)) return false;
      std::vector<T> et(e.begin(), e.end());
      auto we = pairing_row_left(et);
      // gcd prefilter: lambda(e, f) = 1 must be solvable at all
      T g = 0;
      for (auto& v : we) g = gcd_tt(g, v < 0 ? T(-v) : v);
      if (g != 1) return false;

      auto fRows = ortho_rows;
      auto fTargets = ortho_targets;
      fRows.push_back(we);
      fTargets.push_back(T(1));
      BoxSearch<T> fSearch{r, bound, fRows, fTargets, {}};
      return fSearch.run([&](const std::vector<int>& f) {
        if (!isotropic_and_alpha_zero(f)) return false;
        int mx = 0;
        for (int v : e) mx = std::max(mx, std::abs(v));
        for (int v : f) mx = std::max(mx, std::abs(v));
        if (mx < min_max_norm) return false;  // already seen in an earlier layer
        HyperbolicMorphism h;
        h.e.assign(e.begin(), e.end());
        h.f.assign(f.begin(), f.end());
        return visit(h);
      });
    });
  }

  static T gcd_tt(T a, T b) {
    while (b != 0) {
      T t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

bool fits_fast_path(const QuadraticModule& M, int bound, const std::vector<IVec>& ortho) {
  // conservative worst case of any partial sum the scan can form
  Int maxg = 0;
  for (int i = 0; i < M.rank; ++i)
    for (int j = 0; j < M.rank; ++j) maxg = std::max(maxg, abs_int(M.gram(i, j)));
  Int maxc = 1;
  for (auto& c : ortho)
    for (auto& v : c) maxc = std::max(maxc, abs_int(v));
  Int worst = Int(M.rank) * Int(M.rank) * maxg * maxc * bound * bound;
  return worst < (Int(1) << 60);
}

void scan_dispatch(const QuadraticModule& M, int bound, const std::vector<IVec>& ortho,
                   int min_max_norm,
                   const std::function<bool(const HyperbolicMorphism&)>& visit) {
  if (!is_nondegenerate(M)) throw DomainError("enumeration needs a nondegenerate module");
  if (bound <= 0) return;
  if (fits_fast_path(M, bound, ortho)) {
    PairScanner<long long> s(M, bound);
    s.scan(ortho, min_max_norm, visit);
  } else {
    PairScanner<Int> s(M, bound);
    s.scan(ortho, min_max_norm, visit);
  }
}

}  // namespace

std::vector<HyperbolicMorphism> enumerate_hyperbolic_morphisms(const QuadraticModule& M,
                                                               int bound) {
  return enumerate_hyperbolic_morphisms(M, bound, {});
}

std::vector<HyperbolicMorphism> enumerate_hyperbolic_morphisms(const QuadraticModule& M,
                                                               int bound,
                                                               const std::vector<IVec>& ortho) {
  std::vector<HyperbolicMorphism> out;
  scan_dispatch(M, bound, ortho, 0, [&](const HyperbolicMorphism& h) {
    out.push_back(h);
    return false;
  });
  return out;
}

void scan_hyperbolic_morphisms(const QuadraticModule& M, int bound,
                               const std::vector<IVec>& ortho,
                               const std::function<bool(const HyperbolicMorphism&)>& visit) {
  bool stopped = false;
  for (int layer = 1; layer <= bound && !stopped; ++layer) {
    scan_dispatch(M, layer, ortho, layer, [&](const HyperbolicMorphism& h) {
      stopped = visit(h);
      return stopped;
    });
  }
}

std::optional<HyperbolicMorphism> first_hyperbolic_morphism(const QuadraticModule& M,
                                                            int bound,
                                                            const std::vector<IVec>& ortho) {
  std::optional<HyperbolicMorphism> found;
  scan_hyperbolic_morphisms(M, bound, ortho, [&](const HyperbolicMorphism& h) {
    found = h;
    return true;
  });
  return found;
}

KaTruncation build_ka(const QuadraticModule& M, int bound) {
  KaTruncation T;
  T.module = M;
  T.bound = bound;
  T.vertices = enumerate_hyperbolic_morphisms(M, bound);
  int n = int(T.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (orthogonal_images(M, T.vertices[i], T.vertices[j])) T.edges.insert({i, j});
  return T;
}

namespace {

void extend_cliques(const KaTruncation& T, Simplex& cur, int max_size,
                    SimplicialComplex& out) {
  if (int(cur.size()) >= max_size) return;
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int v = start; v < int(T.vertices.size()); ++v) {
    bool ok = true;
    for (int u : cur)
      if (!T.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    out.simplices.insert(cur);
    extend_cliques(T, cur, max_size, out);
    cur.pop_back();
  }
}

}  // namespace

SimplicialComplex skeleton_complex(const KaTruncation& T, int max_dim) {
  SimplicialComplex K;
  Simplex cur;
  extend_cliques(T, cur, max_dim + 1, K);
  return K;
}

std::vector<int> link_vertices(const KaTruncation& T, const std::vector<int>& sigma) {
  std::vector<int> out;
  for (int v = 0; v < int(T.vertices.size()); ++v) {
    if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) continue;
    bool ok = true;
    for (int u : sigma)
      if (!T.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

LinkRestriction link_restriction(const KaTruncation& T, const std::vector<int>& sigma) {
  // combined embedding H^{p+1} -> M with columns e_0, f_0, e_1, f_1, ...
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (!T.adjacent(sigma[a], sigma[b]))
        throw DomainError("sigma is not a simplex of the truncation");

  const QuadraticModule& M = T.module;
  int p1 = int(sigma.size());
  IMat emb(M.rank, 2 * p1);
  for (int a = 0; a < p1; ++a) {
    emb.set_col(2 * a, T.vertices[sigma[a]].e);
    emb.set_col(2 * a + 1, T.vertices[sigma[a]].f);
  }
  ModuleMorphism embedding{hyperbolic(p1, M.param), M, emb};
  if (!check_morphism(embedding))
    throw DomainError("sigma's vertices do not span a standard embedding");

  Complement comp = orthogonal_complement(M, embedding);

  LinkRestriction L;
  L.complement = comp.module;
  L.basis = comp.basis;
  L.domain = link_vertices(T, sigma);

  Int max_coeff = 0;
  for (int v : L.domain) {
    auto ye = solve(comp.basis, T.vertices[v].e);
    auto yf = solve(comp.basis, T.vertices[v].f);
    if (!ye || !yf)
      throw DomainError("link vertex does not lie in the complement lattice");
    HyperbolicMorphism h{*ye, *yf};
    if (!is_hyperbolic_morphism(comp.module, h))
      throw DomainError("rewritten link vertex fails the hyperbolic conditions");
    for (auto& c : h.e) max_coeff = std::max(max_coeff, abs_int(c));
    for (auto& c : h.f) max_coeff = std::max(max_coeff, abs_int(c));
    L.rewritten.push_back(std::move(h));
  }
  L.reported_bound = max_coeff == 0 ? 1 : int(to_ll(max_coeff));

  L.target = build_ka(comp.module, L.reported_bound);
  std::map<std::pair<IVec, IVec>, int> index;
  for (int i = 0; i < int(L.target.vertices.size()); ++i)
    index[{L.target.vertices[i].e, L.target.vertices[i].f}] = i;
  for (auto& h : L.rewritten) {
    auto it = index.find({h.e, h.f});
    if (it == index.end())
      throw DomainError("rewritten vertex missing from the complement truncation");
    L.assignment.push_back(it->second);
  }

  // injectivity and simpliciality of the rewriting
  for (size_t a = 0; a < L.rewritten.size(); ++a)
    for (size_t b = a + 1; b < L.rewritten.size(); ++b) {
      if (L.assignment[a] == L.assignment[b])
        throw DomainError("link rewriting is not injective");
      if (T.adjacent(L.domain[a], L.domain[b]) &&
          !orthogonal_images(comp.module, L.rewritten[a], L.rewritten[b]))
        throw DomainError("link rewriting does not preserve edges");
    }
  return L;
}

}  // namespace hstab
