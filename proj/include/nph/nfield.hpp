#pragma once

// n-valued nowhere-zero sections. Values live on faces (rank 2) or circle
// edges (rank 1); vertices are the candidate singular points. Adjacent value
// sets are linked by bijections ("matchings") that say which value continues
// into which across the shared edge.

#include <memory>
#include <optional>
#include <vector>

#include "nph/bundle.hpp"
#include "nph/turns.hpp"

namespace nph {

struct FieldValue {
  TurnClass angle;
  Rational magnitude{1};

  friend bool operator==(const FieldValue& a, const FieldValue& b) {
    return a.angle == b.angle && a.magnitude == b.magnitude;
  }
};

using ValueSet = std::vector<FieldValue>;
// A single-valued field: one value per face.
using SingleField = std::vector<FieldValue>;
using Permutation = std::vector<int>;

enum class MatchingPolicy { Explicit, NearestAngle, ByMagnitude };

// Matching supplied by the caller. Rank 2: faces `from` -> `to`. Rank 1:
// `from` is a circle vertex, matching its incoming edge to its outgoing
// edge, and `to` is ignored.
struct ExplicitMatching {
  int from = -1;
  int to = -1;
  Permutation perm;
};

class NField {
 public:
  // When `matchings` is non-empty they are used as given and `policy` is
  // kept only as a label; otherwise matchings are derived from `policy`.
  static NField build(std::shared_ptr<const BundleCocycle> bundle, std::vector<ValueSet> values,
                      MatchingPolicy policy, const std::vector<ExplicitMatching>& matchings = {});
  static NField build_line(std::shared_ptr<const LineCocycle> bundle, std::vector<std::vector<Rational>> values,
                           MatchingPolicy policy, const std::vector<ExplicitMatching>& matchings = {});

  int n() const noexcept { return n_; }
  int rank() const noexcept { return surface_ ? 2 : 1; }
  MatchingPolicy policy() const noexcept { return policy_; }

  const BundleCocycle& bundle() const { return *surface_; }
  const std::shared_ptr<const BundleCocycle>& bundle_ptr() const noexcept { return surface_; }
  const LineCocycle& line() const { return *line_; }
  const std::shared_ptr<const LineCocycle>& line_ptr() const noexcept { return line_; }

  // Rank 2: value set of face f.
  const std::vector<ValueSet>& values() const noexcept { return values_; }
  // Rank 1: values of circle edge e.
  const std::vector<std::vector<Rational>>& line_values() const noexcept { return line_values_; }

  // Rank 2: positions of the canonical-halfedge face -> positions of the twin
  // face (forward), and the stored reverse. Rank 1: indexed by vertex,
  // incoming edge -> outgoing edge.
  const Permutation& forward(int id) const { return forward_[id]; }
  const Permutation& backward(int id) const { return backward_[id]; }

  // Sheet permutation applied when leaving link entry i.
  const Permutation& crossing(const VertexLink& link, std::size_t i) const;

  // Edges (rank 2) or vertices (rank 1) whose stored forward and backward
  // matchings are not mutually inverse. Empty for fields built in-process;
  // files may supply both directions explicitly.
  std::vector<int> inconsistent_matchings() const;

 private:
  NField() = default;

  int n_ = 0;
  MatchingPolicy policy_ = MatchingPolicy::Explicit;
  std::shared_ptr<const BundleCocycle> surface_;
  std::shared_ptr<const LineCocycle> line_;
  std::vector<ValueSet> values_;
  std::vector<std::vector<Rational>> line_values_;
  std::vector<Permutation> forward_;
  std::vector<Permutation> backward_;
};

Permutation inverse(const Permutation& p);

// Example-5.4 style field {t_i * s_i(x)}; sheet i continues into sheet i.
// Throws ScalesNotDistinct, DuplicateValue, SizeMismatch.
NField from_sections(std::shared_ptr<const BundleCocycle> bundle, const std::vector<SingleField>& fields,
                     const std::vector<Rational>& scales);

// Full mu_n orbits {theta_f + k/n} with unit magnitudes, matched by the
// orbit shift. Throws HasReflections, AmbiguousMatching (displacement of
// exactly 1/(2n) after transport).
NField from_quotient(std::shared_ptr<const BundleCocycle> bundle, const std::vector<TurnClass>& theta, int n);

// Brute-force optimal bijection between transported `from` values and `to`
// values under total circle distance. Throws AmbiguousMatching on ties or
// when an optimal pair sits a half turn apart. n <= 8.
Permutation nearest_matching(const std::vector<TurnClass>& from, const std::vector<TurnClass>& to);

}  // namespace nph
