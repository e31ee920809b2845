#include "nph/nfield.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "nph/error.hpp"

namespace nph {

namespace {

constexpr int kMaxNearestN = 8;

bool is_permutation_of(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation rank_match(const std::vector<Rational>& from, const std::vector<Rational>& to, const char* what) {
  const int n = static_cast<int>(from.size());
  auto order = [n](const std::vector<Rational>& keys) {
    Permutation idx = identity(n);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    return idx;
  };
  Permutation a = order(from), b = order(to);
  for (int i = 0; i + 1 < n; ++i)
    if (from[a[i]] == from[a[i + 1]] || to[b[i]] == to[b[i + 1]])
      throw Error(ErrorCode::AmbiguousMatching, std::string("equal ") + what + " on one side");
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[a[i]] = b[i];
  return p;
}

}  // namespace

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Permutation nearest_matching(const std::vector<TurnClass>& from, const std::vector<TurnClass>& to) {
  const int n = static_cast<int>(from.size());
  if (n > kMaxNearestN) throw Error(ErrorCode::InvalidParams, "nearest matching supports n <= 8");
  std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i][j] = circle_distance(from[i], to[j]);

  Permutation p = identity(n), best;
  Rational best_cost;
  bool tied = false;
  do {
    Rational total = 0;
    for (int i = 0; i < n; ++i) total += cost[i][p[i]];
    if (best.empty() || total < best_cost) {
      best = p;
      best_cost = total;
      tied = false;
    } else if (total == best_cost) {
      tied = true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (tied) throw Error(ErrorCode::AmbiguousMatching, "two bijections have equal displacement");
  for (int i = 0; i < n; ++i)
    if (cost[i][best[i]] == Rational(1, 2))
      throw Error(ErrorCode::AmbiguousMatching, "optimal pair is a half turn apart");
  return best;
}

NField NField::build(std::shared_ptr<const BundleCocycle> bundle, std::vector<ValueSet> values, MatchingPolicy policy,
                     const std::vector<ExplicitMatching>& matchings) {
  if (!bundle) throw Error(ErrorCode::InvalidInput, "field needs a bundle");
  const SurfaceComplex& c = bundle->base();
  if (static_cast<int>(values.size()) != c.face_count())
    throw Error(ErrorCode::SizeMismatch, "one value set per face is required");
  const int n = static_cast<int>(values.front().size());
  if (n < 1) throw Error(ErrorCode::SizeMismatch, "value sets must be non-empty");
  for (int f = 0; f < c.face_count(); ++f) {
    const ValueSet& vs = values[f];
    if (static_cast<int>(vs.size()) != n)
      throw Error(ErrorCode::SizeMismatch, "face " + std::to_string(f) + " has " + std::to_string(vs.size()) +
                                               " values, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      if (vs[i].magnitude <= 0)
        throw Error(ErrorCode::InvalidInput, "face " + std::to_string(f) + " has a non-positive magnitude");
      for (int j = i + 1; j < n; ++j)
        if (vs[i] == vs[j]) throw Error(ErrorCode::DuplicateValue, "face " + std::to_string(f));
    }
  }

  NField field;
  field.n_ = n;
  field.policy_ = policy;
  field.surface_ = bundle;
  field.values_ = std::move(values);
  field.forward_.assign(c.edge_count(), {});
  field.backward_.assign(c.edge_count(), {});

  if (policy == MatchingPolicy::Explicit || !matchings.empty()) {
    std::map<std::pair<int, int>, int> edge_by_faces;
    for (int e = 0; e < c.edge_count(); ++e) {
      const int h = c.edge_halfedge(e);
      edge_by_faces[{h / 3, c.twin(h) / 3}] = e;
    }
    for (const ExplicitMatching& m : matchings) {
      if (!is_permutation_of(m.perm, n))
        throw Error(ErrorCode::InvalidInput, "matching " + std::to_string(m.from) + "->" + std::to_string(m.to) +
                                                 " is not a permutation of " + std::to_string(n));
      if (auto it = edge_by_faces.find({m.from, m.to}); it != edge_by_faces.end()) {
        if (!field.forward_[it->second].empty()) throw Error(ErrorCode::InvalidInput, "duplicate matching record");
        field.forward_[it->second] = m.perm;
      } else if (auto jt = edge_by_faces.find({m.to, m.from}); jt != edge_by_faces.end()) {
        if (!field.backward_[jt->second].empty()) throw Error(ErrorCode::InvalidInput, "duplicate matching record");
        field.backward_[jt->second] = m.perm;
      } else {
        throw Error(ErrorCode::InvalidInput,
                    "faces " + std::to_string(m.from) + " and " + std::to_string(m.to) + " are not adjacent");
      }
    }
    for (int e = 0; e < c.edge_count(); ++e) {
      auto& fw = field.forward_[e];
      auto& bw = field.backward_[e];
      if (fw.empty() && bw.empty()) {
        if (n != 1) throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(e) + " has no matching");
        fw = bw = identity(1);
      } else if (fw.empty()) {
        fw = inverse(bw);
      } else if (bw.empty()) {
        bw = inverse(fw);
      }
    }
    return field;
  }

  for (int e = 0; e < c.edge_count(); ++e) {
    const int h = c.edge_halfedge(e);
    const ValueSet& a = field.values_[h / 3];
    const ValueSet& b = field.values_[c.twin(h) / 3];
    Permutation p;
    try {
      if (policy == MatchingPolicy::NearestAngle) {
        // Bring the left face's angles into the entered face's frame.
        const Transition& t = bundle->edges()[e][0];
        std::vector<TurnClass> from, to;
        for (const FieldValue& v : a) from.emplace_back(t.push(v.angle.turn()));
        for (const FieldValue& v : b) to.push_back(v.angle);
        p = nearest_matching(from, to);
      } else {
        std::vector<Rational> from, to;
        for (const FieldValue& v : a) from.push_back(v.magnitude);
        for (const FieldValue& v : b) to.push_back(v.magnitude);
        p = rank_match(from, to, "magnitudes");
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::AmbiguousMatching) throw;
      throw Error(ErrorCode::AmbiguousMatching, "adjacency " + std::to_string(h / 3) + "->" +
                                                    std::to_string(c.twin(h) / 3) + ": " + err.detail());
    }
    field.backward_[e] = inverse(p);
    field.forward_[e] = std::move(p);
  }
  return field;
}

NField NField::build_line(std::shared_ptr<const LineCocycle> bundle, std::vector<std::vector<Rational>> values,
                          MatchingPolicy policy, const std::vector<ExplicitMatching>& matchings) {
  if (!bundle) throw Error(ErrorCode::InvalidInput, "field needs a bundle");
  const CircleComplex& c = bundle->base();
  if (static_cast<int>(values.size()) != c.edge_count())
    throw Error(ErrorCode::SizeMismatch, "one value set per circle edge is required");
  const int n = static_cast<int>(values.front().size());
  if (n < 1) throw Error(ErrorCode::SizeMismatch, "value sets must be non-empty");
  for (int e = 0; e < c.edge_count(); ++e) {
    const auto& vs = values[e];
    if (static_cast<int>(vs.size()) != n) throw Error(ErrorCode::SizeMismatch, "edge " + std::to_string(e));
    for (int i = 0; i < n; ++i) {
      if (vs[i] == 0) throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(e) + " has a zero value");
      for (int j = i + 1; j < n; ++j)
        if (vs[i] == vs[j]) throw Error(ErrorCode::DuplicateValue, "edge " + std::to_string(e));
    }
  }

  NField field;
  field.n_ = n;
  field.policy_ = policy;
  field.line_ = bundle;
  field.line_values_ = std::move(values);
  field.forward_.assign(c.vertex_count(), {});
  field.backward_.assign(c.vertex_count(), {});

  if (policy == MatchingPolicy::Explicit || !matchings.empty()) {
    for (const ExplicitMatching& m : matchings) {
      if (m.from < 0 || m.from >= c.vertex_count()) throw Error(ErrorCode::InvalidInput, "matching vertex out of range");
      if (!is_permutation_of(m.perm, n)) throw Error(ErrorCode::InvalidInput, "matching is not a permutation");
      if (!field.forward_[m.from].empty()) throw Error(ErrorCode::InvalidInput, "duplicate matching record");
      field.forward_[m.from] = m.perm;
    }
    for (int v = 0; v < c.vertex_count(); ++v) {
      if (field.forward_[v].empty()) {
        if (n != 1) throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " has no matching");
        field.forward_[v] = identity(1);
      }
      field.backward_[v] = inverse(field.forward_[v]);
    }
    return field;
  }

  for (int v = 0; v < c.vertex_count(); ++v) {
    std::vector<Rational> from, to;
    for (const Rational& x : field.line_values_[c.edge_in(v)]) {
      Rational moved = bundle->sign(v) * x;
      from.push_back(policy == MatchingPolicy::ByMagnitude ? abs(moved) : moved);
    }
    for (const Rational& x : field.line_values_[c.edge_out(v)])
      to.push_back(policy == MatchingPolicy::ByMagnitude ? abs(x) : x);
    try {
      field.forward_[v] = rank_match(from, to, "values");
    } catch (const Error& err) {
      throw Error(ErrorCode::AmbiguousMatching, "vertex " + std::to_string(v) + ": " + err.detail());
    }
    field.backward_[v] = inverse(field.forward_[v]);
  }
  return field;
}

const Permutation& NField::crossing(const VertexLink& link, std::size_t i) const {
  const LinkEntry& entry = link.entries[i];
  const int h = surface_->base().edge_halfedge(entry.edge);
  return entry.exit == h ? forward_[entry.edge] : backward_[entry.edge];
}

std::vector<int> NField::inconsistent_matchings() const {
  std::vector<int> bad;
  for (std::size_t i = 0; i < forward_.size(); ++i)
    if (inverse(forward_[i]) != backward_[i]) bad.push_back(static_cast<int>(i));
  return bad;
}

NField from_sections(std::shared_ptr<const BundleCocycle> bundle, const std::vector<SingleField>& fields,
                     const std::vector<Rational>& scales) {
  const std::size_t n = fields.size();
  if (n == 0 || scales.size() != n) throw Error(ErrorCode::SizeMismatch, "need one positive scale per section");
  for (std::size_t i = 0; i < n; ++i) {
    if (scales[i] <= 0) throw Error(ErrorCode::InvalidInput, "scales must be positive");
    for (std::size_t j = i + 1; j < n; ++j)
      if (scales[i] == scales[j]) throw Error(ErrorCode::ScalesNotDistinct, "scales " + std::to_string(i) + " and " +
                                                                                std::to_string(j) + " coincide");
  }
  const int nf = bundle->base().face_count();
  std::vector<ValueSet> values(nf);
  for (int f = 0; f < nf; ++f)
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<int>(fields[i].size()) != nf) throw Error(ErrorCode::SizeMismatch, "section has wrong length");
      values[f].push_back({fields[i][f].angle, scales[i] * fields[i][f].magnitude});
    }
  std::vector<ExplicitMatching> same_sheet;
  const SurfaceComplex& c = bundle->base();
  Permutation id = identity(static_cast<int>(n));
  for (int e = 0; e < c.edge_count(); ++e) {
    const int h = c.edge_halfedge(e);
    same_sheet.push_back({h / 3, c.twin(h) / 3, id});
  }
  return NField::build(std::move(bundle), std::move(values), MatchingPolicy::ByMagnitude, same_sheet);
}

NField from_quotient(std::shared_ptr<const BundleCocycle> bundle, const std::vector<TurnClass>& theta, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
  if (bundle->has_reflections()) throw Error(ErrorCode::HasReflections, "quotient fields need a reflection-free bundle");
  const SurfaceComplex& c = bundle->base();
  if (static_cast<int>(theta.size()) != c.face_count()) throw Error(ErrorCode::SizeMismatch, "one angle per face");

  const Rational step(1, n);
  std::vector<ValueSet> values(c.face_count());
  for (int f = 0; f < c.face_count(); ++f)
    for (int k = 0; k < n; ++k) values[f].push_back({TurnClass(theta[f].turn() + Turn(k * step)), Rational(1)});

  std::vector<ExplicitMatching> matchings;
  for (int e = 0; e < c.edge_count(); ++e) {
    const int h = c.edge_halfedge(e);
    const int a = h / 3, b = c.twin(h) / 3;
    // Orbit of theta_a seen in b's frame, compared with the orbit of theta_b.
    Rational moved = bundle->edges()[e][0].push(theta[a].turn()).value();
    Rational gap = (theta[b].turn().value() - moved) * n;  // in units of 1/n
    BigInt whole = Turn(gap).floor();
    Rational frac = gap - Rational(whole);
    if (frac == Rational(1, 2))
      throw Error(ErrorCode::AmbiguousMatching,
                  "adjacency " + std::to_string(a) + "->" + std::to_string(b) + " sits exactly between two orbit shifts");
    if (frac > Rational(1, 2)) whole += 1;
    // moved + k/n lands nearest to theta_b + (k - whole)/n.
    const BigInt wrapped = ((-whole) % n + n) % n;
    const int shift = wrapped.convert_to<int>();
    Permutation p(n);
    for (int k = 0; k < n; ++k) p[k] = (k + shift) % n;
    matchings.push_back({a, b, std::move(p)});
  }
  return NField::build(std::move(bundle), std::move(values), MatchingPolicy::NearestAngle, matchings);
}

}  // namespace nph
