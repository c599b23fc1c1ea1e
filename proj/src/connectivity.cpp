#include <algorithm>
#include <map>

#include "hstab/scomplex.hpp"

namespace hstab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::No: return "No";
    case Verdict::HomYesPi1Unknown: return "HomYesPi1Unknown";
    case Verdict::Yes: return "Yes";
  }
  throw DomainError("bad verdict");
}

namespace {

// Edge-path group presentation: generators are non-tree edges of a spanning
// tree, one relation per triangle. Returns false if the bounded Tietze
// reduction cannot certify triviality.
bool pi1_trivial_certified(const SimplicialComplex& K, int budget) {
  auto verts = K.vertices();
  if (verts.empty()) return true;
  std::vector<int> vs(verts.begin(), verts.end());
  std::map<int, int> idx;
  for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = int(i);

  std::vector<std::vector<int>> adj(vs.size());
  std::map<std::pair<int, int>, int> edge_gen;  // non-tree edge -> generator id, tree -> -1
  for (auto& s : K.simplices)
    if (s.size() == 2) {
      adj[idx[s[0]]].push_back(idx[s[1]]);
      adj[idx[s[1]]].push_back(idx[s[0]]);
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // BFS spanning tree from the smallest vertex; assumes K connected
  std::vector<int> parent(vs.size(), -2);
  std::vector<int> order{0};
  parent[0] = -1;
  for (size_t h = 0; h < order.size(); ++h) {
    int u = order[h];
    for (int w : adj[u])
      if (parent[w] == -2) {
        parent[w] = u;
        order.push_back(w);
      }
  }
  if (order.size() != vs.size()) return false;  // disconnected; caller screens this

  int gens = 0;
  for (auto& s : K.simplices)
    if (s.size() == 2) {
      int a = idx[s[0]], b = idx[s[1]];
      bool tree = (parent[a] == b) || (parent[b] == a);
      edge_gen[{a, b}] = tree ? -1 : gens++;
    }
  if (gens == 0) return true;

  // letter +-(g+1); g_{ab} with a < b traversed a -> b is positive
  auto letter = [&](int a, int b) -> int {
    int x = std::min(a, b), y = std::max(a, b);
    int g = edge_gen.at({x, y});
    if (g < 0) return 0;
    return (a < b) ? (g + 1) : -(g + 1);
  };

  std::vector<std::vector<int>> rels;
  for (auto& s : K.simplices)
    if (s.size() == 3) {
      // path a->b->c equals a->c in the edge-path group
      int a = idx[s[0]], b = idx[s[1]], c = idx[s[2]];
      std::vector<int> w;
      for (int l : {letter(a, b), letter(b, c), -letter(a, c)})
        if (l != 0) w.push_back(l);
      rels.push_back(std::move(w));
    }

  std::vector<char> alive(gens, 1);
  // eliminated generator -> its word over the survivors; a dead generator's
  // word only mentions generators that were alive when it died, so the
  // reference chains cannot cycle and flattening always terminates
  std::vector<std::vector<int>> subst(gens);

  auto free_reduce = [](std::vector<int> w) {
    std::vector<int> red;
    for (int l : w) {
      if (!red.empty() && red.back() == -l)
        red.pop_back();
      else
        red.push_back(l);
    }
    return red;
  };

  auto flatten = [&](std::vector<int> w) {
    for (int pass = 0; pass <= gens + 1; ++pass) {
      bool expanded = false;
      std::vector<int> out;
      for (int l : w) {
        int g = std::abs(l) - 1;
        if (alive[g]) {
          out.push_back(l);
        } else {
          expanded = true;
          const auto& rep = subst[g];
          if (l > 0)
            out.insert(out.end(), rep.begin(), rep.end());
          else
            for (auto it = rep.rbegin(); it != rep.rend(); ++it) out.push_back(-*it);
        }
      }
      w = free_reduce(std::move(out));
      if (!expanded) break;
    }
    return w;
  };

  int steps = 0;
  bool changed = true;
  while (changed && steps < budget) {
    changed = false;
    for (auto& w : rels) {
      if (++steps > budget) break;
      w = flatten(w);
      if (w.size() == 1) {
        int g = std::abs(w[0]) - 1;
        alive[g] = 0;
        subst[g] = {};
        w.clear();
        changed = true;
      } else if (w.size() == 2) {
        int ga = std::abs(w[0]) - 1, gb = std::abs(w[1]) - 1;
        if (ga == gb) continue;  // a^2 = 1 certifies nothing by itself
        int target = (w[0] > 0) ? -w[1] : w[1];
        alive[ga] = 0;
        subst[ga] = {target};
        w.clear();
        changed = true;
      }
    }
  }
  return std::none_of(alive.begin(), alive.end(), [](char a) { return a != 0; });
}

}  // namespace

Verdict connectivity_report(const SimplicialComplex& K, int n, int tietze_budget) {
  // every complex is n-connected for n <= -2; (-1)-connected means non-empty
  if (n <= -2) return Verdict::Yes;
  if (K.empty()) return Verdict::No;
  if (n == -1) return Verdict::Yes;

  ChainComplex C = chain_complex(K, std::min(n + 1, K.dimension()));
  auto H = homology(C);
  if (!H.empty()) H[0].betti -= 1;  // reduced in degree 0
  for (int i = 0; i <= n; ++i) {
    if (i >= int(H.size())) break;  // no simplices in this degree, group is 0
    if (i == K.dimension() + 1) break;
    // H_i computed from a complex truncated above degree n+1 is exact for i <= n
    if (!(H[i].betti == 0 && H[i].torsion.empty())) return Verdict::No;
  }
  if (n < 1) return Verdict::Yes;
  return pi1_trivial_certified(K, tietze_budget) ? Verdict::Yes : Verdict::HomYesPi1Unknown;
}

WcmResult wcm_check(const SimplicialComplex& K, int n, int tietze_budget) {
  WcmResult res;
  res.verdict = connectivity_report(K, n - 1, tietze_budget);
  if (res.verdict == Verdict::No) {
    res.witness = std::nullopt;
    return res;
  }
  for (auto& sigma : K.simplices) {
    int p = int(sigma.size()) - 1;
    int need = n - p - 2;
    if (need <= -2) continue;
    Verdict v = connectivity_report(link(K, sigma), need, tietze_budget);
    if (int(v) < int(res.verdict)) {
      res.verdict = v;
      if (v == Verdict::No) {
        res.witness = sigma;
        return res;
      }
    }
  }
  return res;
}

bool swi_no_collapsed_edge(const SimplicialMap& f) {
  for (auto& s : f.domain.simplices)
    if (s.size() == 2 && f.assignment.at(s[0]) == f.assignment.at(s[1])) return false;
  return true;
}

bool swi_injective_on_simplices(const SimplicialMap& f) {
  for (auto& s : f.domain.simplices)
    if (f.image(s).size() != s.size()) return false;
  return true;
}

bool swi_links_of_simplices(const SimplicialMap& f) {
  for (auto& sigma : f.domain.simplices) {
    Simplex fs = f.image(sigma);
    SimplicialComplex L = link(f.domain, sigma);
    SimplicialComplex Lfs;
    bool have_target_link = f.codomain.contains(fs);
    if (have_target_link) Lfs = link(f.codomain, fs);
    for (auto& tau : L.simplices) {
      Simplex ft = f.image(tau);
      // f(tau) must be a simplex of Lk(f(sigma)): disjoint from f(sigma)
      // and joining to it inside the codomain
      Simplex inter;
      std::set_intersection(ft.begin(), ft.end(), fs.begin(), fs.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) return false;
      if (!have_target_link || !Lfs.contains(ft)) return false;
    }
  }
  return true;
}

bool swi_links_of_vertices(const SimplicialMap& f) {
  for (auto& sigma : f.domain.simplices) {
    if (sigma.size() != 1) continue;
    Simplex fs = f.image(sigma);
    SimplicialComplex L = link(f.domain, sigma);
    SimplicialComplex Lfs = link(f.codomain, fs);
    for (auto& tau : L.simplices) {
      Simplex ft = f.image(tau);
      Simplex inter;
      std::set_intersection(ft.begin(), ft.end(), fs.begin(), fs.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) return false;
      if (!Lfs.contains(ft)) return false;
    }
  }
  return true;
}

bool simplexwise_injective(const SimplicialMap& f) { return swi_no_collapsed_edge(f); }

}  // namespace hstab
