#pragma once

// Local indices of n-valued fields and the global index-sum check.
//
// At a vertex the field is read in the frame of the link's reference face,
// carried around by the cumulative transitions. For every monodromy cycle of
// length r the active value is followed through r circuits of the link; the
// cycle contributes the winding of those samples plus r * H(v), the number of
// turns the transported frame makes against a trivialisation over the vertex
// disc. The local index is the sum over cycles.

#include <cstdint>
#include <optional>
#include <vector>

#include "nph/cover.hpp"
#include "nph/nfield.hpp"

namespace nph {

enum class IndexMode { Integer, Mod2 };

struct LocalIndexReport {
  int vertex = -1;
  int reference_face = -1;
  IndexMode mode = IndexMode::Integer;
  std::vector<int> cycles;
  std::vector<std::int64_t> contributions;
  // Integer index, or its parity in Mod2 mode.
  std::int64_t index = 0;
  bool regular = false;
};

struct VerificationVerdict {
  IndexMode mode = IndexMode::Integer;
  int n = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
  std::vector<LocalIndexReport> table;
  // Adjacencies whose two stored matchings are not inverse to each other.
  std::vector<int> inconsistent_matchings;
};

// Integer when the base is oriented and the bundle has no reflections
// (rank 1: all signs +1); Mod2 otherwise.
IndexMode default_mode(const NField& f);
bool integer_mode_available(const NField& f);

// Throws InsufficientResolution, ModeUnavailable.
LocalIndexReport local_index(const NField& f, int v, IndexMode mode);
// Rank 2 only: index read along an explicit link (any reference face).
LocalIndexReport local_index(const NField& f, const VertexLink& link, IndexMode mode);

// Rank-1 index at v: coincidences of the two sides minus n.
std::int64_t circle_index(const NField& f, int v);

// Sum of local indices against n*e (Integer) or n*w_top mod 2 (Mod2).
// `threads` = 0 picks the hardware concurrency.
VerificationVerdict verify_theorem(const NField& f, IndexMode mode, unsigned threads = 1);

struct SigmaMinus {
  std::vector<int> vertices;
  int parity = 0;
};

// Vertices around which the two values are exchanged. Throws NotTwoValued.
SigmaMinus sigma_minus(const NField& f);

// Random single field over b (one value per face). Used by sw_top and the
// property tests.
SingleField random_single_field(const BundleCocycle& b, std::uint64_t seed);

}  // namespace nph
