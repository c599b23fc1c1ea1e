#include "hstab/repair.hpp"

#include <algorithm>

namespace hstab {

namespace {

int count_cofaces(const SimplicialComplex& K, const Simplex& s, int dim) {
  int c = 0;
  for (auto& t : K.simplices)
    if (int(t.size()) == dim + 1 &&
        std::includes(t.begin(), t.end(), s.begin(), s.end()))
      ++c;
  return c;
}

}  // namespace

void TriangulatedDisk::validate(bool require_full_boundary) const {
  if (dim != 1 && dim != 2) throw DomainError("only disks of dimension 1 and 2 are supported");
  for (auto& s : boundary.simplices)
    if (!complex.contains(s)) throw DomainError("boundary simplex missing from the disk");
  if (complex.euler_characteristic() != 1)
    throw DomainError("disk must have Euler characteristic 1");
  if (complex.dimension() > dim) throw DomainError("disk has simplices above its dimension");

  auto bverts = boundary.vertices();
  if (dim == 1) {
    if (bverts.size() != 2) throw DomainError("a 1-disk boundary is two vertices");
    for (int v : complex.vertices()) {
      int deg = count_cofaces(complex, {v}, 1);
      if (bverts.count(v)) {
        if (deg != 1) throw DomainError("boundary vertex of a 1-disk must have degree 1");
      } else {
        if (deg != 2) throw DomainError("interior vertex of a 1-disk must have degree 2");
      }
    }
  } else {
    for (auto& s : complex.simplices) {
      if (s.size() != 2) continue;
      int c = count_cofaces(complex, s, 2);
      bool on_boundary = boundary.contains(s);
      if (on_boundary && c != 1)
        throw DomainError("boundary edge must lie in exactly one triangle");
      if (!on_boundary && c != 2)
        throw DomainError("interior edge must lie in exactly two triangles");
    }
  }
  if (require_full_boundary) {
    for (auto& s : complex.simplices) {
      bool all_bdry = std::all_of(s.begin(), s.end(),
                                  [&](int v) { return bverts.count(v) > 0; });
      if (all_bdry && !boundary.contains(s))
        throw DomainError("boundary is not a full subcomplex");
    }
  }
}

SimplicialMap RepairState::as_map() const {
  SimplicialMap f;
  f.domain = disk.complex;
  f.codomain = target;
  f.assignment = vertex_image;
  return f;
}

Simplex RepairState::image(const Simplex& s) const {
  Simplex img;
  for (int v : s) img.push_back(vertex_image.at(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

bool is_bad(const RepairState& st, const Simplex& s) {
  if (s.size() < 2) return false;
  for (int v : s) {
    bool paired = false;
    for (int w : s) {
      if (w == v) continue;
      if (st.vertex_image.at(v) == st.vertex_image.at(w)) {
        paired = true;
        break;
      }
    }
    if (!paired) return false;
  }
  return true;
}

std::vector<Simplex> find_bad_simplices(const RepairState& st) {
  std::vector<Simplex> bad;
  for (auto& s : st.disk.complex.simplices)
    if (!st.disk.boundary.contains(s) && is_bad(st, s)) bad.push_back(s);
  std::sort(bad.begin(), bad.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return bad;
}

ConeExtension ConeOracle::extend(const SimplicialComplex& base,
                                 const std::map<int, int>& base_images,
                                 const SimplicialComplex& target, int budget,
                                 int& fresh_counter) const {
  ConeExtension ext;

  if (base.empty()) {
    // cone on nothing: a single fresh vertex mapped to the first target vertex
    auto verts = target.vertices();
    if (verts.empty()) throw OracleFailure("target link is empty");
    int w = fresh_counter++;
    ext.cone.insert_with_faces({w});
    ext.fresh_map[w] = *verts.begin();
    ext.fresh.push_back(w);
    ext.cost = 1;
    return ext;
  }

  auto base_verts = base.vertices();
  if (base_verts.size() == 2 && base.dimension() == 0) {
    // cone on two points: a path whose interior walks between the images
    int u = *base_verts.begin();
    int v = *std::next(base_verts.begin());
    int a = base_images.at(u), b = base_images.at(v);

    std::map<int, std::vector<int>> adj;
    for (auto& s : target.simplices)
      if (s.size() == 2) {
        adj[s[0]].push_back(s[1]);
        adj[s[1]].push_back(s[0]);
      }
    for (auto& [_, nb] : adj) std::sort(nb.begin(), nb.end());

    // the cone on two points has an apex, so the image walk needs length
    // at least 2; consecutive walk vertices must differ
    std::vector<int> walk;
    int cost = 0;
    if (a == b) {
      auto it = adj.find(a);
      if (it == adj.end() || it->second.empty())
        throw OracleFailure("image vertex has no neighbour to detour through");
      walk = {a, it->second.front(), a};
      cost = 1;
    } else {
      // BFS distances toward b, then enter via the best neighbour of a
      std::map<int, int> dist, prev;
      std::vector<int> frontier{b};
      dist[b] = 0;
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
          ++cost;
          for (int y : adj[x])
            if (!dist.count(y)) {
              dist[y] = dist[x] + 1;
              prev[y] = x;
              next.push_back(y);
            }
        }
        frontier = std::move(next);
      }
      int best = -1, best_d = -1;
      for (int z : adj[a]) {
        if (z == b || !dist.count(z)) continue;
        if (best < 0 || dist[z] < best_d) {
          best = z;
          best_d = dist[z];
        }
      }
      if (best < 0)
        throw OracleFailure("no walk of length at least 2 between the image vertices");
      walk = {a};
      for (int x = best;; x = prev[x]) {
        walk.push_back(x);
        if (x == b) break;
      }
    }

    // path u - w_1 - ... - w_k - v over the interior of the walk
    std::vector<int> path{u};
    for (size_t i = 1; i + 1 < walk.size(); ++i) {
      int w = fresh_counter++;
      ext.fresh.push_back(w);
      ext.fresh_map[w] = walk[i];
      path.push_back(w);
    }
    path.push_back(v);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      ext.cone.insert_with_faces({std::min(path[i], path[i + 1]),
                                  std::max(path[i], path[i + 1])});
    ext.cost = cost;
    return ext;
  }

  // a 1-sphere base: delegate to the cycle filler
  if (base.dimension() == 1) {
    std::vector<int> cycle;
    {
      // walk around the cycle starting from the smallest vertex
      std::map<int, std::vector<int>> adj;
      for (auto& s : base.simplices)
        if (s.size() == 2) {
          adj[s[0]].push_back(s[1]);
          adj[s[1]].push_back(s[0]);
        }
      for (auto& [v, nb] : adj) {
        std::sort(nb.begin(), nb.end());
        if (nb.size() != 2) throw OracleFailure("cone base is not a cycle");
      }
      int start = *base.vertices().begin();
      int prev = -1, cur = start;
      do {
        cycle.push_back(cur);
        int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
      } while (cur != start);
      if (cycle.size() != base.vertices().size())
        throw OracleFailure("cone base is not a single cycle");
    }
    std::vector<int> images;
    for (int c : cycle) images.push_back(base_images.at(c));
    DiskFilling fill = fill_cycle(cycle, images, target, budget, fresh_counter);
    fresh_counter = fill.fresh_counter;
    ext.cone = fill.disk;
    for (auto& [v, y] : fill.vertex_image)
      if (!base_images.count(v)) {
        ext.fresh_map[v] = y;
        ext.fresh.push_back(v);
      }
    std::sort(ext.fresh.begin(), ext.fresh.end());
    ext.cost = fill.cost;
    return ext;
  }

  throw OracleFailure("no oracle for cone bases of this shape");
}

namespace {

struct PolygonFiller {
  const SimplicialComplex& target;
  int budget;
  int fresh_counter;
  int cost = 0;
  std::set<std::vector<int>> failed;  // memo of unfillable sub-polygons
  std::vector<Simplex> triangles;
  std::map<int, int> apex_images;

  bool image_simplex_ok(std::initializer_list<int> verts) {
    Simplex s(verts);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return target.contains(s);
  }

  // poly: list of (disk vertex, image); returns true and appends triangles
  bool fill(std::vector<std::pair<int, int>> poly) {
    ++cost;
    if (poly.size() < 3) return false;
    std::vector<int> key;
    for (auto& [c, y] : poly) key.push_back(c);
    if (failed.count(key)) return false;

    if (poly.size() == 3 &&
        image_simplex_ok({poly[0].second, poly[1].second, poly[2].second})) {
      triangles.push_back({poly[0].first, poly[1].first, poly[2].first});
      return true;
    }

    int m = int(poly.size());
    for (int i = 0; m > 3 && i < m; ++i) {
      int prev = (i + m - 1) % m, next = (i + 1) % m;
      if (!image_simplex_ok({poly[prev].second, poly[i].second, poly[next].second})) continue;
      size_t mark = triangles.size();
      triangles.push_back({poly[prev].first, poly[i].first, poly[next].first});
      auto rest = poly;
      rest.erase(rest.begin() + i);
      if (fill(std::move(rest))) return true;
      triangles.resize(mark);
    }

    if (budget >= 1) {
      // one interior apex over the remaining polygon
      for (int y : target.vertices()) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
          ok = image_simplex_ok({poly[i].second, poly[(i + 1) % m].second, y});
        if (!ok) continue;
        int w = fresh_counter++;
        apex_images[w] = y;
        for (int i = 0; i < m; ++i)
          triangles.push_back({poly[i].first, poly[(i + 1) % m].first, w});
        return true;
      }
    }

    failed.insert(key);
    return false;
  }
};

}  // namespace

DiskFilling fill_cycle(const std::vector<int>& cycle_vertices,
                       const std::vector<int>& cycle_images, const SimplicialComplex& target,
                       int budget, int fresh_counter) {
  if (cycle_vertices.size() < 3 || cycle_vertices.size() != cycle_images.size())
    throw DomainError("cycle filling needs a cycle of length at least 3");
  for (size_t i = 0; i < cycle_vertices.size(); ++i) {
    Simplex edge{cycle_images[i], cycle_images[(i + 1) % cycle_images.size()]};
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (!target.contains(edge)) throw DomainError("cycle images are not a walk in the target");
  }

  PolygonFiller filler{target, budget, fresh_counter};
  std::vector<std::pair<int, int>> poly;
  for (size_t i = 0; i < cycle_vertices.size(); ++i)
    poly.push_back({cycle_vertices[i], cycle_images[i]});
  if (!filler.fill(poly))
    throw OracleFailure("no disk filling within the interior-vertex budget");

  DiskFilling out;
  for (auto& t : filler.triangles) out.disk.insert_with_faces(t);
  for (size_t i = 0; i < cycle_vertices.size(); ++i) {
    out.boundary.insert_with_faces({std::min(cycle_vertices[i],
                                             cycle_vertices[(i + 1) % cycle_vertices.size()]),
                                    std::max(cycle_vertices[i],
                                             cycle_vertices[(i + 1) % cycle_vertices.size()])});
    out.vertex_image[cycle_vertices[i]] = cycle_images[i];
  }
  for (auto& [w, y] : filler.apex_images) out.vertex_image[w] = y;
  out.fresh_counter = filler.fresh_counter;
  out.cost = filler.cost;
  return out;
}

RepairState repair_step(const RepairState& st, const Simplex& sigma, const ConeOracle& oracle,
                        int budget, RepairTraceLine* trace) {
  if (!st.disk.complex.contains(sigma)) throw DomainError("sigma is not in the disk");
  if (st.disk.boundary.contains(sigma)) throw DomainError("sigma lies in the boundary");
  if (!is_bad(st, sigma)) throw DomainError("sigma is not bad");

  Simplex image = st.image(sigma);
  SimplicialComplex L = link(st.disk.complex, sigma);
  SimplicialComplex target_link = link(st.target, image);

  // maximality of sigma forces the link to map into the link of the image
  std::map<int, int> base_images;
  for (int v : L.vertices()) base_images[v] = st.vertex_image.at(v);
  for (auto& tau : L.simplices) {
    Simplex img;
    for (int v : tau) img.push_back(st.vertex_image.at(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    Simplex inter;
    std::set_intersection(img.begin(), img.end(), image.begin(), image.end(),
                          std::back_inserter(inter));
    if (!inter.empty() || !target_link.contains(img))
      throw DomainError("sigma is not of maximal dimension among bad simplices");
  }

  RepairState next = st;
  ConeExtension ext = oracle.extend(L, base_images, target_link, budget, next.fresh_counter);

  // remove the open star of sigma, glue join(boundary of sigma, cone)
  next.disk.complex.erase_cofaces(sigma);
  SimplicialComplex bd_sigma;
  if (sigma.size() >= 2)
    for (size_t i = 0; i < sigma.size(); ++i) {
      Simplex face = sigma;
      face.erase(face.begin() + int(i));
      bd_sigma.insert_with_faces(face);
    }
  SimplicialComplex replacement =
      bd_sigma.empty() ? ext.cone : join(bd_sigma, ext.cone);
  for (auto& s : replacement.simplices) next.disk.complex.simplices.insert(s);
  for (auto& [w, y] : ext.fresh_map) next.vertex_image[w] = y;

  if (trace) {
    trace->removed = sigma;
    trace->fresh_vertices = int(ext.fresh.size());
    trace->oracle_cost = ext.cost;
  }
  return next;
}

namespace {

// (max dimension, count at that dimension) of interior bad simplices
std::pair<int, int> bad_measure(const std::vector<Simplex>& bad) {
  if (bad.empty()) return {-1, 0};
  int d = int(bad.front().size()) - 1;
  int c = 0;
  for (auto& s : bad)
    if (int(s.size()) - 1 == d) ++c;
  return {d, c};
}

}  // namespace

RepairResult repair(const RepairState& initial, const ConeOracle& oracle, int max_steps,
                    int budget) {
  RepairState st = initial;
  st.disk.validate(false);
  if (!st.as_map().valid()) throw DomainError("initial state is not a simplicial map");
  std::map<int, int> boundary_values;
  for (int v : st.disk.boundary.vertices()) boundary_values[v] = st.vertex_image.at(v);

  RepairResult res;
  int steps = 0;
  auto bad = find_bad_simplices(st);
  while (!bad.empty()) {
    if (++steps > max_steps) throw StepBudgetExceeded("repair exceeded the step budget");
    auto before = bad_measure(bad);
    RepairTraceLine line;
    st = repair_step(st, bad.front(), oracle, budget, &line);
    res.trace.push_back(line);

    st.disk.validate(false);
    if (!st.as_map().valid()) throw DomainError("repair step broke the simplicial map");
    for (auto& [v, y] : boundary_values)
      if (st.vertex_image.at(v) != y) throw DomainError("repair step changed a boundary value");

    bad = find_bad_simplices(st);
    auto after = bad_measure(bad);
    if (!(after.first < before.first ||
          (after.first == before.first && after.second < before.second)))
      throw DomainError("bad-simplex measure did not decrease");
  }
  res.state = std::move(st);
  return res;
}

RepairResult repair_from_boundary(const std::vector<int>& boundary_cycle,
                                  const std::map<int, int>& boundary_images,
                                  const SimplicialComplex& target, int n,
                                  const ConeOracle& oracle, int max_steps, int budget) {
  if (wcm_check(target, n).verdict == Verdict::No)
    throw DomainError("target fails the weak Cohen-Macaulay hypothesis");

  RepairState st;
  st.target = target;
  int fresh = 1;
  for (int v : boundary_cycle) fresh = std::max(fresh, v + 1);

  if (n == 1) {
    if (boundary_cycle.size() != 2) throw DomainError("a 1-disk boundary is two vertices");
    int a = boundary_cycle[0], b = boundary_cycle[1];
    SimplicialComplex base;
    base.insert_with_faces({a});
    base.insert_with_faces({b});
    std::map<int, int> imgs{{a, boundary_images.at(a)}, {b, boundary_images.at(b)}};
    int counter = fresh;
    ConeExtension ext = oracle.extend(base, imgs, target, budget, counter);
    st.disk.complex = ext.cone;
    st.disk.boundary = base;
    st.disk.dim = 1;
    st.vertex_image = imgs;
    for (auto& [w, y] : ext.fresh_map) st.vertex_image[w] = y;
    st.fresh_counter = counter;
  } else if (n == 2) {
    if (boundary_cycle.size() < 3) throw DomainError("a 2-disk boundary is a cycle");
    std::vector<int> images;
    for (int c : boundary_cycle) images.push_back(boundary_images.at(c));
    DiskFilling fill = fill_cycle(boundary_cycle, images, target, budget, fresh);
    st.disk.complex = fill.disk;
    st.disk.boundary = fill.boundary;
    st.disk.dim = 2;
    st.vertex_image = fill.vertex_image;
    st.fresh_counter = fill.fresh_counter;
  } else {
    throw DomainError("repair_from_boundary supports n = 1 and n = 2");
  }

  return repair(st, oracle, max_steps, budget);
}

}  // namespace hstab
