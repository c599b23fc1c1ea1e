#include "hstab/io.hpp"

namespace hstab {

namespace {
const Int kSafeMax = (Int(1) << 53) - 1;
}

Json int_to_json(const Int& v) {
  if (abs_int(v) <= kSafeMax) return Json(to_ll(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw DomainError("expected an integer or a decimal string");
}

Json vec_to_json(const IVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(int_to_json(x));
  return a;
}

IVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of integers");
  IVec v;
  for (auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json matrix_to_json(const IMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IMat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a matrix as an array of rows");
  int r = int(j.size());
  int c = r > 0 ? int(j[0].size()) : 0;
  IMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(j[i].size()) != c) throw DomainError("ragged matrix rows");
    for (int k = 0; k < c; ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

Json module_to_json(const QuadraticModule& M) {
  Json j;
  j["epsilon"] = M.param.epsilon;
  j["lambda"] = subgroup_name(M.param.lambda);
  j["gram"] = matrix_to_json(M.gram);
  Json alpha = Json::array();
  for (auto& r : M.alpha) alpha.push_back(int_to_json(r.value));
  j["alpha"] = std::move(alpha);
  return j;
}

QuadraticModule module_from_json(const Json& j) {
  FormParameter p;
  p.epsilon = j.at("epsilon").get<int>();
  p.lambda = subgroup_from_name(j.at("lambda").get<std::string>());
  IMat gram = matrix_from_json(j.at("gram"));
  std::vector<Int> alpha;
  for (auto& x : j.at("alpha")) alpha.push_back(int_from_json(x));
  return QuadraticModule::create(p, std::move(gram), std::move(alpha));
}

Json morphism_to_json(const ModuleMorphism& f) {
  Json j;
  j["domain"] = module_to_json(f.domain);
  j["codomain"] = module_to_json(f.codomain);
  j["matrix"] = matrix_to_json(f.matrix);
  return j;
}

ModuleMorphism morphism_from_json(const Json& j) {
  return {module_from_json(j.at("domain")), module_from_json(j.at("codomain")),
          matrix_from_json(j.at("matrix"))};
}

Json complex_to_json(const SimplicialComplex& K) {
  Json j;
  Json verts = Json::array();
  for (int v : K.vertices()) verts.push_back(v);
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (auto& f : K.facets()) facets.push_back(f);
  j["maximal_simplices"] = std::move(facets);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  std::vector<Simplex> maximal;
  for (auto& s : j.at("maximal_simplices")) maximal.push_back(s.get<Simplex>());
  SimplicialComplex K = SimplicialComplex::closure(maximal);
  if (j.contains("vertices"))
    for (auto& v : j.at("vertices")) K.insert_with_faces({v.get<int>()});
  return K;
}

Json map_to_json(const SimplicialMap& f) {
  Json j;
  j["domain"] = complex_to_json(f.domain);
  j["codomain"] = complex_to_json(f.codomain);
  Json a = Json::object();
  for (auto& [v, w] : f.assignment) a[std::to_string(v)] = w;
  j["assignment"] = std::move(a);
  return j;
}

SimplicialMap map_from_json(const Json& j) {
  SimplicialMap f;
  f.domain = complex_from_json(j.at("domain"));
  f.codomain = complex_from_json(j.at("codomain"));
  for (auto& [k, v] : j.at("assignment").items()) f.assignment[std::stoi(k)] = v.get<int>();
  return f;
}

Json augss_to_json(const AugmentedSemiSimplicialSet& X) {
  Json j;
  j["aug_size"] = X.aug_size;
  j["augmentation"] = X.augmentation;
  j["levels"] = X.body.level_sizes;
  Json faces = Json::array();
  for (int p = 0; p <= X.body.top_level(); ++p) {
    Json per_level = Json::array();
    if (p >= 1)
      for (auto& d : X.body.faces[p]) per_level.push_back(d);
    faces.push_back(std::move(per_level));
  }
  j["faces"] = std::move(faces);
  return j;
}

AugmentedSemiSimplicialSet augss_from_json(const Json& j) {
  AugmentedSemiSimplicialSet X;
  X.aug_size = j.at("aug_size").get<size_t>();
  X.augmentation = j.at("augmentation").get<std::vector<size_t>>();
  X.body.level_sizes = j.at("levels").get<std::vector<size_t>>();
  X.body.faces.resize(X.body.level_sizes.size());
  X.body.labels.resize(X.body.level_sizes.size());
  auto& faces = j.at("faces");
  for (int p = 1; p <= X.body.top_level(); ++p)
    X.body.faces[p] = faces.at(p).get<std::vector<std::vector<size_t>>>();
  X.validate();
  return X;
}

Json profiles_to_json(const std::vector<HomologyProfile>& H) {
  Json out = Json::array();
  for (auto& h : H) {
    Json j;
    j["betti"] = h.betti;
    Json t = Json::array();
    for (auto& c : h.torsion) t.push_back(int_to_json(c));
    j["torsion"] = std::move(t);
    out.push_back(std::move(j));
  }
  return out;
}

Json ka_to_json(const KaTruncation& T) {
  Json j;
  j["bound"] = T.bound;
  j["module"] = module_to_json(T.module);
  Json verts = Json::array();
  for (auto& v : T.vertices) {
    Json h;
    h["e"] = vec_to_json(v.e);
    h["f"] = vec_to_json(v.f);
    verts.push_back(std::move(h));
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (auto& [a, b] : T.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace hstab
