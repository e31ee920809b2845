#include "nph/index.hpp"

#include <algorithm>
#include <thread>

#include "nph/error.hpp"
#include "nph/random.hpp"

namespace nph {

namespace {

constexpr int kResampleLimit = 64;

std::int64_t parity(std::int64_t x) { return ((x % 2) + 2) % 2; }

}  // namespace

bool integer_mode_available(const NField& f) {
  if (f.rank() == 1) {
    const auto& s = f.line().signs();
    return std::all_of(s.begin(), s.end(), [](int x) { return x == 1; });
  }
  return f.bundle().orientation().has_value() && !f.bundle().has_reflections();
}

IndexMode default_mode(const NField& f) { return integer_mode_available(f) ? IndexMode::Integer : IndexMode::Mod2; }

LocalIndexReport local_index(const NField& f, const VertexLink& link, IndexMode mode) {
  if (f.rank() != 2) throw Error(ErrorCode::InvalidInput, "link-based index needs a surface field");
  if (mode == IndexMode::Integer && !integer_mode_available(f))
    throw Error(ErrorCode::ModeUnavailable, "integer indices need an oriented base and a reflection-free bundle");
  const BundleCocycle& b = f.bundle();
  const std::size_t k = link.size();
  const int n = f.n();

  // frames[i] rewrites angles of entry i in the reference (entry 0) frame.
  std::vector<Transition> frames(k + 1);
  for (std::size_t i = 0; i < k; ++i) frames[i + 1] = frames[i].after(b.crossing(link, i));
  const Transition& around = frames[k];
  if (around.reflect || !around.turn.is_integer())
    throw Error(ErrorCode::CocycleViolation, "vertex " + std::to_string(link.vertex));
  const std::int64_t turns = around.turn.as_integer();

  const Monodromy mono = monodromy(f, link);
  LocalIndexReport report;
  report.vertex = link.vertex;
  report.reference_face = link.entries.front().face;
  report.mode = mode;
  for (const auto& cycle : mono.cycles) {
    const int r = static_cast<int>(cycle.size());
    std::vector<TurnClass> samples;
    samples.reserve(r * k);
    int sheet = cycle.front();
    for (int circuit = 0; circuit < r; ++circuit)
      for (std::size_t i = 0; i < k; ++i) {
        const FieldValue& value = f.values()[link.entries[i].face][sheet];
        samples.emplace_back(frames[i].pull(value.angle.turn()));
        sheet = f.crossing(link, i)[sheet];
      }
    std::int64_t w;
    try {
      w = winding(samples);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::HalfTurnAmbiguity) throw;
      throw Error(ErrorCode::InsufficientResolution,
                  "vertex " + std::to_string(link.vertex) + ": " + err.detail() + "; subdivide the mesh");
    }
    report.cycles.push_back(r);
    report.contributions.push_back(w + r * turns);
  }
  std::int64_t total = 0;
  for (std::int64_t c : report.contributions) total += c;
  report.index = mode == IndexMode::Mod2 ? parity(total) : total;
  report.regular = total == 0 && mono.cycle_count() == n;
  return report;
}

std::int64_t circle_index(const NField& f, int v) {
  if (f.rank() != 1) throw Error(ErrorCode::InvalidInput, "circle index needs a rank-1 field");
  const CircleComplex& c = f.line().base();
  const int sign = f.line().sign(v);
  std::int64_t coincidences = 0;
  for (const Rational& x : f.line_values()[c.edge_out(v)])
    if (x > 0) ++coincidences;
  for (const Rational& x : f.line_values()[c.edge_in(v)])
    if (sign * x < 0) ++coincidences;
  return coincidences - f.n();
}

LocalIndexReport local_index(const NField& f, int v, IndexMode mode) {
  if (f.rank() == 2) return local_index(f, f.bundle().links().at(v), mode);
  if (mode == IndexMode::Integer && !integer_mode_available(f))
    throw Error(ErrorCode::ModeUnavailable, "integer indices need a trivial line cocycle");
  LocalIndexReport report;
  report.vertex = v;
  report.reference_face = f.line().base().edge_in(v);
  report.mode = mode;
  report.cycles.assign(f.n(), 1);
  const std::int64_t idx = circle_index(f, v);
  report.contributions.push_back(idx);
  report.index = mode == IndexMode::Mod2 ? parity(idx) : idx;
  report.regular = idx == 0;
  return report;
}

VerificationVerdict verify_theorem(const NField& f, IndexMode mode, unsigned threads) {
  VerificationVerdict verdict;
  verdict.mode = mode;
  verdict.n = f.n();
  const int nv = f.rank() == 2 ? f.bundle().base().vertex_count() : f.line().base().vertex_count();
  verdict.table.resize(nv);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(nv));
  if (threads <= 1) {
    for (int v = 0; v < nv; ++v) verdict.table[v] = local_index(f, v, mode);
  } else {
    // Each worker owns a disjoint stride of rows; errors are rethrown in
    // vertex order after joining.
    std::vector<std::exception_ptr> errors(nv);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int v = static_cast<int>(t); v < nv; v += static_cast<int>(threads)) {
          try {
            verdict.table[v] = local_index(f, v, mode);
          } catch (...) {
            errors[v] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& row : verdict.table) verdict.lhs += row.index;
  if (f.rank() == 2) {
    if (mode == IndexMode::Integer)
      verdict.rhs = f.n() * euler_number(f.bundle());
    else
      verdict.rhs = parity(static_cast<std::int64_t>(f.n()) * sw_top(f.bundle(), 0));
  } else {
    verdict.rhs = mode == IndexMode::Integer ? 0 : parity(static_cast<std::int64_t>(f.n()) * line_w1(f.line()));
  }
  if (mode == IndexMode::Mod2) verdict.lhs = parity(verdict.lhs);
  verdict.inconsistent_matchings = f.inconsistent_matchings();
  verdict.pass = verdict.lhs == verdict.rhs;
  return verdict;
}

SigmaMinus sigma_minus(const NField& f) {
  if (f.n() != 2) throw Error(ErrorCode::NotTwoValued, "sigma_minus needs n = 2, got " + std::to_string(f.n()));
  SigmaMinus out;
  const int nv = f.rank() == 2 ? f.bundle().base().vertex_count() : f.line().base().vertex_count();
  for (int v = 0; v < nv; ++v)
    if (monodromy(f, v).cycle_count() == 1) out.vertices.push_back(v);
  out.parity = static_cast<int>(out.vertices.size() % 2);
  return out;
}

SingleField random_single_field(const BundleCocycle& b, std::uint64_t seed) {
  Rng rng(seed);
  SingleField field(b.base().face_count());
  for (auto& value : field) value = {rng.angle(), rng.magnitude()};
  return field;
}

int sw_top(const BundleCocycle& b, std::uint64_t seed) {
  auto shared = std::make_shared<const BundleCocycle>(b);
  Rng draws(seed);
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    SingleField s = random_single_field(b, draws.next());
    std::vector<ValueSet> values;
    values.reserve(s.size());
    for (const auto& v : s) values.push_back({v});
    NField field = NField::build(shared, std::move(values), MatchingPolicy::Explicit);
    try {
      std::int64_t total = 0;
      for (int v = 0; v < b.base().vertex_count(); ++v) total += local_index(field, v, IndexMode::Mod2).index;
      return static_cast<int>(parity(total));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InsufficientResolution) throw;
    }
  }
  throw Error(ErrorCode::ResampleLimitExceeded, "64 consecutive degenerate random sections");
}

}  // namespace nph
