#include <doctest.h>

#include <map>
#include <set>

#include "hstab/kcomplex.hpp"

using namespace hstab;

namespace {

const FormParameter kSkewEven{-1, Subgroup::Even};
const FormParameter kSkewFull{-1, Subgroup::Full};

// Test-only oracle: scan the whole coefficient box with no pruning. Kept
// independent of the production enumerator on purpose.
std::vector<HyperbolicMorphism> brute_force_morphisms(const QuadraticModule& M, int bound) {
  std::vector<HyperbolicMorphism> out;
  int r = M.rank;
  std::vector<Int> e(r), f(r);
  long long total = 1;
  for (int i = 0; i < 2 * r; ++i) total *= (2 * bound + 1);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < r; ++i) {
      e[i] = int(c % (2 * bound + 1)) - bound;
      c /= (2 * bound + 1);
    }
    for (int i = 0; i < r; ++i) {
      f[i] = int(c % (2 * bound + 1)) - bound;
      c /= (2 * bound + 1);
    }
    HyperbolicMorphism h{e, f};
    if (is_hyperbolic_morphism(M, h)) out.push_back(h);
  }
  std::sort(out.begin(), out.end(), [](const HyperbolicMorphism& a, const HyperbolicMorphism& b) {
    if (a.e != b.e) return a.e < b.e;
    return a.f < b.f;
  });
  return out;
}

}  // namespace

TEST_CASE("enumeration over one hyperbolic plane at bound 1") {
  auto H = hyperbolic(1, kSkewEven);
  auto got = enumerate_hyperbolic_morphisms(H, 1);
  REQUIRE(got.size() == 4);
  // the four signed standard pairs, in lexicographic order
  std::set<std::pair<IVec, IVec>> expect = {
      {{Int(-1), Int(0)}, {Int(0), Int(-1)}},
      {{Int(0), Int(-1)}, {Int(1), Int(0)}},
      {{Int(0), Int(1)}, {Int(-1), Int(0)}},
      {{Int(1), Int(0)}, {Int(0), Int(1)}},
  };
  std::set<std::pair<IVec, IVec>> gotset;
  for (auto& h : got) gotset.insert({h.e, h.f});
  CHECK(gotset == expect);
}

TEST_CASE("enumeration with the vacuous quadratic condition at bound 1") {
  auto H = hyperbolic(1, kSkewFull);
  auto got = enumerate_hyperbolic_morphisms(H, 1);
  CHECK(got.size() == 20);
}

TEST_CASE("enumeration of the empty module") {
  auto H0 = hyperbolic(0, kSkewEven);
  CHECK(enumerate_hyperbolic_morphisms(H0, 3).empty());
}

TEST_CASE("enumeration agrees with the exhaustive scan") {
  for (auto param : {kSkewEven, kSkewFull, FormParameter{+1, Subgroup::Trivial}}) {
    for (int bound : {1, 2}) {
      auto H = hyperbolic(1, param);
      auto fast = enumerate_hyperbolic_morphisms(H, bound);
      auto slow = brute_force_morphisms(H, bound);
      REQUIRE(fast.size() == slow.size());
      for (size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].e == slow[i].e);
        CHECK(fast[i].f == slow[i].f);
      }
    }
  }
  // one bigger case: two planes at bound 1
  auto H2 = hyperbolic(2, kSkewEven);
  auto fast = enumerate_hyperbolic_morphisms(H2, 1);
  auto slow = brute_force_morphisms(H2, 1);
  REQUIRE(fast.size() == slow.size());
  for (size_t i = 0; i < fast.size(); ++i) {
    CHECK(fast[i].e == slow[i].e);
    CHECK(fast[i].f == slow[i].f);
  }
}

TEST_CASE("enumeration output is lexicographically sorted and valid") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto got = enumerate_hyperbolic_morphisms(H2, 1);
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(is_hyperbolic_morphism(H2, got[i]));
    if (i > 0) {
      auto key = [](const HyperbolicMorphism& h) {
        IVec k = h.e;
        k.insert(k.end(), h.f.begin(), h.f.end());
        return k;
      };
      CHECK(key(got[i - 1]) < key(got[i]));
    }
  }
}

TEST_CASE("one plane admits no orthogonal pairs") {
  auto H = hyperbolic(1, kSkewEven);
  auto T = build_ka(H, 2);
  CHECK(T.edges.empty());
}

TEST_CASE("standard copies in two planes are orthogonal") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto T = build_ka(H2, 1);
  HyperbolicMorphism c1, c2;
  c1.e = {Int(1), Int(0), Int(0), Int(0)};
  c1.f = {Int(0), Int(1), Int(0), Int(0)};
  c2.e = {Int(0), Int(0), Int(1), Int(0)};
  c2.f = {Int(0), Int(0), Int(0), Int(1)};
  int i1 = -1, i2 = -1;
  for (int i = 0; i < int(T.vertices.size()); ++i) {
    if (T.vertices[i] == c1) i1 = i;
    if (T.vertices[i] == c2) i2 = i;
  }
  REQUIRE(i1 >= 0);
  REQUIRE(i2 >= 0);
  CHECK(T.adjacent(i1, i2));
}

TEST_CASE("truncations are monotone in the bound") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto T1 = build_ka(H2, 1);
  auto T2 = build_ka(H2, 2);
  std::set<std::pair<IVec, IVec>> v2;
  for (auto& h : T2.vertices) v2.insert({h.e, h.f});
  for (auto& h : T1.vertices) CHECK(v2.count({h.e, h.f}) == 1);
  // edges embed as well
  std::map<std::pair<IVec, IVec>, int> idx2;
  for (int i = 0; i < int(T2.vertices.size()); ++i)
    idx2[{T2.vertices[i].e, T2.vertices[i].f}] = i;
  for (auto& [a, b] : T1.edges) {
    int a2 = idx2.at({T1.vertices[a].e, T1.vertices[a].f});
    int b2 = idx2.at({T1.vertices[b].e, T1.vertices[b].f});
    CHECK(T2.adjacent(a2, b2));
  }
}

TEST_CASE("orthogonality of the simplex predicate is order independent") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto T = build_ka(H2, 1);
  for (auto& [a, b] : T.edges) {
    CHECK(orthogonal_images(H2, T.vertices[a], T.vertices[b]));
    CHECK(orthogonal_images(H2, T.vertices[b], T.vertices[a]));
  }
}

TEST_CASE("skeleton complex lists cliques of the edge graph") {
  auto H3 = hyperbolic(3, kSkewEven);
  auto T = build_ka(H3, 1);
  auto K = skeleton_complex(T, 2);
  for (auto& s : K.simplices) {
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) CHECK(T.adjacent(s[i], s[j]));
    CHECK(s.size() <= 3);
  }
  // the three standard copies form a triangle
  CHECK(K.dimension() == 2);
}

TEST_CASE("link restriction into the complement truncation") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto T = build_ka(H2, 1);
  // sigma = the first standard copy
  HyperbolicMorphism c1;
  c1.e = {Int(1), Int(0), Int(0), Int(0)};
  c1.f = {Int(0), Int(1), Int(0), Int(0)};
  int i1 = -1;
  for (int i = 0; i < int(T.vertices.size()); ++i)
    if (T.vertices[i] == c1) i1 = i;
  REQUIRE(i1 >= 0);
  auto L = link_restriction(T, {i1});
  CHECK(L.complement.rank == 2);
  CHECK(L.domain.size() == L.assignment.size());
  CHECK(!L.domain.empty());
  for (auto& h : L.rewritten) CHECK(is_hyperbolic_morphism(L.complement, h));
}

TEST_CASE("link restriction of the empty simplex is the identity") {
  auto H2 = hyperbolic(2, kSkewEven);
  auto T = build_ka(H2, 1);
  auto L = link_restriction(T, {});
  CHECK(L.complement.rank == 4);
  CHECK(L.domain.size() == T.vertices.size());
  for (size_t i = 0; i < L.domain.size(); ++i) CHECK(L.assignment[i] == L.domain[i]);
}

TEST_CASE("link restriction along an edge of standard copies in three planes") {
  auto H3 = hyperbolic(3, kSkewEven);
  auto T = build_ka(H3, 1);
  HyperbolicMorphism c1, c2;
  c1.e.assign(6, Int(0));
  c1.f.assign(6, Int(0));
  c2.e.assign(6, Int(0));
  c2.f.assign(6, Int(0));
  c1.e[0] = 1;
  c1.f[1] = 1;
  c2.e[2] = 1;
  c2.f[3] = 1;
  int i1 = -1, i2 = -1;
  for (int i = 0; i < int(T.vertices.size()); ++i) {
    if (T.vertices[i] == c1) i1 = i;
    if (T.vertices[i] == c2) i2 = i;
  }
  REQUIRE(i1 >= 0);
  REQUIRE(i2 >= 0);
  auto L = link_restriction(T, {i1, i2});
  CHECK(L.complement.rank == 2);
  for (auto& h : L.rewritten) CHECK(is_hyperbolic_morphism(L.complement, h));
}
