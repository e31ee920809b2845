#pragma once

// The n-fold cover of M minus the vertices traced by an n-valued field, its
// vertex monodromy, and the closed branched cover that makes the field
// single valued.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nph/nfield.hpp"

namespace nph {

struct Monodromy {
  int vertex = -1;
  int reference_face = -1;
  // Position at the reference face -> position after one circuit of the link.
  Permutation perm;
  // Cycles of `perm`, each listed from its smallest position.
  std::vector<std::vector<int>> cycles;

  std::vector<int> lengths() const;
  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

Monodromy monodromy(const NField& f, const VertexLink& link);
// Rank 2 uses the bundle's link of v; rank 1 vertices never branch.
Monodromy monodromy(const NField& f, int v);

struct ProjectionEntry {
  int tilde_face;
  int base_face;
  int sheet;
};

struct ConeVertex {
  int tilde_vertex;
  int base_vertex;
  int cycle_length;
};

// One circle of a resolved rank-1 field.
struct ResolvedCircle {
  CircleComplex complex{1};
  std::vector<ProjectionEntry> projection;  // tilde edge -> (base edge, sheet)
  std::vector<int> base_vertex;             // tilde vertex -> base vertex
  std::shared_ptr<const LineCocycle> bundle;
  std::shared_ptr<const NField> section;
};

struct BranchedResolution {
  std::shared_ptr<const NField> base;

  // Rank 2.
  std::shared_ptr<const SurfaceComplex> surface;
  std::vector<ProjectionEntry> projection;  // indexed by tilde face
  std::vector<ConeVertex> cone_vertices;    // indexed by tilde vertex
  std::optional<Orientation> lifted_orientation;
  std::shared_ptr<const BundleCocycle> bundle;
  std::shared_ptr<const NField> section;

  // Rank 1.
  std::vector<ResolvedCircle> circles;
};

// Build the branched cover: n sheets of every face glued along the
// matchings, one vertex per monodromy cycle. Throws InvalidInput when the
// stored matchings are not mutually inverse.
BranchedResolution resolve(const NField& f);

struct IndexMatchRow {
  int base_vertex;
  std::int64_t base_index;
  std::int64_t lifted_sum;
  bool ok;
};

struct ResolutionReport {
  bool covering = true;
  std::vector<std::string> covering_witnesses;
  bool orientation_lifts = true;
  std::int64_t chi_tilde = 0;
  std::int64_t chi_expected = 0;
  bool chi_ok = false;
  std::optional<std::int64_t> euler_tilde;
  std::optional<std::int64_t> euler_expected;
  bool euler_ok = true;
  // Rank 1: mod-2 replacement of the Euler check.
  std::optional<int> w1_tilde;
  std::optional<int> w1_expected;
  bool mod2_indices = false;
  std::vector<IndexMatchRow> index_rows;
  bool index_ok = true;
  bool pass = false;
};

ResolutionReport verify_resolution(const BranchedResolution& r);

}  // namespace nph
