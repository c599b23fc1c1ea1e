#pragma once

#include <functional>
#include <map>

#include "hstab/scomplex.hpp"

namespace hstab {

// Combinatorial model of a PL-triangulated disk of dimension n <= 2 with a
// marked boundary. The boundary complex is stored explicitly; it is never
// modified by a repair run.
struct TriangulatedDisk {
  SimplicialComplex complex;
  SimplicialComplex boundary;
  int dim = 0;

  // pseudomanifold counts, Euler characteristic 1, boundary containment;
  // `require_full_boundary` additionally rejects interior chords between
  // boundary vertices (wanted for user input, too strict mid-run)
  void validate(bool require_full_boundary) const;
};

struct RepairState {
  TriangulatedDisk disk;
  SimplicialComplex target;
  std::map<int, int> vertex_image;
  int fresh_counter = 0;  // next unused vertex id

  SimplicialMap as_map() const;
  Simplex image(const Simplex& s) const;
};

// A simplex is bad when each of its vertices shares its image with another
// vertex of the simplex along an edge. (For an edge this is just "the two
// endpoints collide"; a simplex merely containing a collapsed edge is not
// itself bad unless all its vertices pair up.)
bool is_bad(const RepairState& st, const Simplex& s);

// All bad simplices not contained in the boundary, maximal dimension first,
// lexicographic within a dimension.
std::vector<Simplex> find_bad_simplices(const RepairState& st);

struct ConeExtension {
  SimplicialComplex cone;        // contains the base as a subcomplex
  std::map<int, int> fresh_map;  // images of the fresh cone vertices
  std::vector<int> fresh;        // fresh vertex ids, in creation order
  int cost = 0;                  // search nodes visited
};

// Extends a simplicial map on `base` over a cone on `base` into `target`.
// Exact for base = empty set (pick a vertex), two points (walk between the
// images) and a cycle (fill the image walk by ear clipping and a final
// apex). Other bases go to the pluggable oracle, if any.
class ConeOracle {
 public:
  virtual ~ConeOracle() = default;
  virtual ConeExtension extend(const SimplicialComplex& base,
                               const std::map<int, int>& base_images,
                               const SimplicialComplex& target, int budget,
                               int& fresh_counter) const;
};

struct RepairTraceLine {
  Simplex removed;
  int fresh_vertices = 0;
  int oracle_cost = 0;
};

// One star replacement: sigma must be an interior bad simplex of maximal
// dimension. The star of sigma is replaced by join(boundary of sigma, cone
// on its link); fresh vertices are mapped through the oracle into the link
// of the image simplex.
RepairState repair_step(const RepairState& st, const Simplex& sigma, const ConeOracle& oracle,
                        int budget, RepairTraceLine* trace = nullptr);

struct RepairResult {
  RepairState state;
  std::vector<RepairTraceLine> trace;
};

// Iterates repair_step until no interior bad simplex remains. Checks the
// disk invariants and the strict decrease of the (dimension, count) measure
// after every step, and that boundary values never change.
RepairResult repair(const RepairState& initial, const ConeOracle& oracle, int max_steps,
                    int budget = 64);

// Builds the initial extension from boundary data alone. For n = 1 the
// boundary is two vertices; for n = 2 an ordered boundary cycle. The disk
// triangulation is produced by the oracle machinery (a walk, respectively
// an ear/apex filling of the image walk), then repaired.
RepairResult repair_from_boundary(const std::vector<int>& boundary_cycle,
                                  const std::map<int, int>& boundary_images,
                                  const SimplicialComplex& target, int n,
                                  const ConeOracle& oracle, int max_steps, int budget = 64);

// Filling of a closed walk in the target by a triangulated disk: used for
// the n = 2 initial extension and as the cycle case of the oracle.
struct DiskFilling {
  SimplicialComplex disk;
  SimplicialComplex boundary;
  std::map<int, int> vertex_image;
  int fresh_counter = 0;
  int cost = 0;
};

DiskFilling fill_cycle(const std::vector<int>& cycle_vertices,
                       const std::vector<int>& cycle_images, const SimplicialComplex& target,
                       int budget, int fresh_counter);

}  // namespace hstab
