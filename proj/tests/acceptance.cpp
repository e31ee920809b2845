// Acceptance run: one PASS/FAIL line per criterion. The whole suite runs
// twice (single-threaded, then multi-threaded); every report it produces is
// written to disk and the two runs are compared byte for byte.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nph/cover.hpp"
#include "nph/degree.hpp"
#include "nph/error.hpp"
#include "nph/generators.hpp"
#include "nph/index.hpp"
#include "nph/io.hpp"
#include "nph/random.hpp"

namespace fs = std::filesystem;
using namespace nph;

namespace {

constexpr int kRandomPerCase = 100;

struct Outcome {
  bool ok = true;
  std::string note;
};

class Run {
 public:
  explicit Run(unsigned threads) : threads_(threads) {}

  std::array<Outcome, 9> results;
  std::map<std::string, std::string> reports;

  void all() {
    guard(0, [&] { classical(); });
    guard(1, [&] { integer_case(); });
    guard(2, [&] { mod2_case(); });
    guard(3, [&] { line_field(); });
    guard(4, [&] { parity(); });
    guard(5, [&] { lens(); });
    guard(6, [&] { s0_and_circles(); });
    // Criterion 8 replays the fields of criterion 2.
    guard(8, [&] { vortex(); });
  }

 private:
  unsigned threads_;
  std::vector<NField> integer_fields_;

  void guard(int k, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(k, std::string("exception: ") + e.what());
    }
  }

  void fail(int k, const std::string& why) {
    if (results[k].ok) results[k].note = why;
    results[k].ok = false;
  }

  void expect(int k, bool cond, const std::string& why) {
    if (!cond) fail(k, why);
  }

  void log(const std::string& file, const Json& j) { reports[file] += j.dump() + "\n"; }

  static std::shared_ptr<const BundleCocycle> tangent(const std::string& name) {
    return std::make_shared<const BundleCocycle>(
        tangent_like(std::make_shared<const SurfaceComplex>(base_by_name(name))));
  }

  VerificationVerdict verify(const NField& f, IndexMode mode, const std::string& file) {
    VerificationVerdict v = verify_theorem(f, mode, threads_);
    log(file, report_json(v));
    return v;
  }

  void classical() {
    const auto sphere = tangent("octahedron");
    const auto v = verify(constant_field(sphere), IndexMode::Integer, "classical.jsonl");
    expect(0, v.lhs == 2 && v.pass, "sphere sum " + std::to_string(v.lhs));
    const auto genus2 = tangent("genus2");
    const auto w = verify(constant_field(genus2), IndexMode::Integer, "classical.jsonl");
    expect(0, w.lhs == -2 && w.pass, "genus-2 sum " + std::to_string(w.lhs));
    if (results[0].ok) results[0].note = "sphere 2, genus-2 -2";
  }

  void integer_case() {
    int fields = 0;
    for (const std::string name : {"octahedron", "torus", "genus2"}) {
      const auto b = tangent(name);
      const std::int64_t e = euler_number(*b);
      for (int n = 1; n <= 4; ++n) {
        std::vector<NField> batch;
        if (n == 1) batch.push_back(constant_field(b));
        batch.push_back(quotient_field(b, n));
        batch.push_back(scaled_sections(b, n));
        if (n == 3)
          for (int z = -3; z <= 3; ++z) batch.push_back(vortex_sections(b, 0, z));
        for (int s = 0; s < kRandomPerCase; ++s) batch.push_back(random_nfield(b, n, 1000 * n + s));
        for (NField& f : batch) {
          const auto v = verify(f, IndexMode::Integer, "integer_" + name + ".jsonl");
          expect(1, v.pass && v.lhs == n * e,
                 name + " n=" + std::to_string(n) + ": sum " + std::to_string(v.lhs) + " vs " + std::to_string(n * e));
          integer_fields_.push_back(std::move(f));
          ++fields;
        }
      }
    }
    if (results[1].ok) results[1].note = std::to_string(fields) + " fields";
    guard(7, [&] { resolution(); });
  }

  void mod2_case() {
    int fields = 0;
    for (const std::string name : {"rp2", "klein"}) {
      const auto b = tangent(name);
      const int w = sw_top(*b, 0);
      const int chi = static_cast<int>(euler_characteristic(b->base()));
      expect(2, w == ((chi % 2) + 2) % 2, name + ": top class " + std::to_string(w));
      for (int n = 1; n <= 4; ++n)
        for (int s = 0; s < kRandomPerCase; ++s) {
          const auto v = verify(random_nfield(b, n, 5000 * n + s), IndexMode::Mod2, "mod2_" + name + ".jsonl");
          expect(2, v.pass && v.lhs == (n * w) % 2, name + " n=" + std::to_string(n) + ": parity " + std::to_string(v.lhs));
          if (name == "rp2" && n % 2 == 1) expect(2, v.lhs == 1, "rp2 odd n must give parity 1");
          ++fields;
        }
    }
    if (results[2].ok) results[2].note = std::to_string(fields) + " fields, rp2 odd n parity 1";
  }

  void line_field() {
    const auto b = tangent("octahedron");
    const auto v = verify(quotient_field(b, 2), IndexMode::Integer, "line_field.jsonl");
    int singular = 0;
    bool all_one = true;
    for (const auto& row : v.table)
      if (row.index != 0) {
        ++singular;
        all_one = all_one && row.index == 1;
      }
    expect(3, singular == 4 && all_one, std::to_string(singular) + " singular vertices");
    expect(3, v.lhs == 4 && v.lhs == 2 * euler_number(*b) && v.pass, "sum " + std::to_string(v.lhs));
    if (results[3].ok) results[3].note = "four index-1 vertices, sum 4 = 2e";
  }

  void parity() {
    int draws = 0;
    auto check = [&](const NField& f, const std::string& what) {
      const SigmaMinus s = sigma_minus(f);
      Json j;
      j["field"] = what;
      j["vertices"] = s.vertices;
      j["parity"] = s.parity;
      log("sigma_minus.jsonl", j);
      expect(4, s.parity == 0 && s.vertices.size() % 2 == 0, what + ": odd exchange set");
      ++draws;
    };
    for (const std::string name : {"octahedron", "icosahedron", "torus", "genus2", "rp2", "klein"}) {
      const auto b = tangent(name);
      if (!b->has_reflections()) check(quotient_field(b, 2), name + " quotient");
      check(scaled_sections(b, 2), name + " scaled");
      for (int s = 0; s < 85; ++s) check(random_nfield(b, 2, 9000 + s), name + " seed " + std::to_string(s));
    }
    expect(4, draws >= 500, "only " + std::to_string(draws) + " draws");
    if (results[4].ok) results[4].note = std::to_string(draws) + " draws";
  }

  void lens() {
    int maps = 0;
    for (int n = 1; n <= 12; ++n)
      for (int d = -12; d <= 12; ++d) {
        const StructuredCircleMap m = lens_map(n, d);
        const std::int64_t deg = degree_circle(m);
        const int comps = static_cast<int>(m.components().size());
        expect(5, deg == d, "lens(" + std::to_string(n) + "," + std::to_string(d) + ") degree " + std::to_string(deg));
        expect(5, comps == std::gcd(std::abs(d), n), "lens(" + std::to_string(n) + "," + std::to_string(d) +
                                                         ") has " + std::to_string(comps) + " components");
        log("lens.jsonl", degree_json(m));
        ++maps;
      }
    Rng rng(4242);
    int pairs = 0;
    for (; pairs < 200; ++pairs) {
      const int n1 = 1 + static_cast<int>(rng.below(4)), n2 = 1 + static_cast<int>(rng.below(4));
      const int d1 = static_cast<int>(rng.below(11)) - 5, d2 = static_cast<int>(rng.below(11)) - 5;
      const int k1 = static_cast<int>(rng.below(3)), k2 = static_cast<int>(rng.below(3));
      const auto g = lens_map(n1, d1, k1 == 0 ? 0 : 2 * std::max(std::abs(d1), n1) + 1 + k1);
      const auto f = lens_map(n2, d2, k2 == 0 ? 0 : 2 * std::max(std::abs(d2), n2) + 1 + k2);
      const auto h = compose(g, f);
      const std::int64_t deg = degree_circle(h);
      expect(5, deg == degree_circle(g) * degree_circle(f) && h.n() == n1 * n2,
             "compose degree " + std::to_string(deg) + " for " + std::to_string(d1) + "*" + std::to_string(d2));
      log("compose.jsonl", degree_json(h));
    }
    if (results[5].ok) results[5].note = std::to_string(maps) + " lens maps, " + std::to_string(pairs) + " composite pairs";
  }

  void s0_and_circles() {
    int s0 = 0;
    for (int n = 1; n <= 3; ++n)
      for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
        std::vector<S0Point> pts;
        for (int i = 0; i < 2 * n; ++i) pts.push_back({i < n ? 1 : -1, (mask >> i) & 1 ? 1 : -1});
        const StructuredS0Map m(pts);
        const std::int64_t deg = degree_s0(m);
        int coincidences = 0;
        for (const S0Point& p : pts) coincidences += p.base == p.image;
        expect(6, deg >= -n && deg <= n, "S0 degree out of range");
        expect(6, deg == coincidences - n, "S0 degree disagrees with the coincidence count");
        expect(6, lefschetz(deg, n, 1) == coincidences, "S0 lefschetz disagrees with the coincidence count");
        ++s0;
      }
    int circles = 0;
    for (int nv = 1; nv <= 6; ++nv)
      for (int n = 1; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          CircleComplex c(nv);
          auto trivial = std::make_shared<const LineCocycle>(LineCocycle::trivial(c));
          const auto v = verify(random_line_field(trivial, n, seed), IndexMode::Integer, "circles.jsonl");
          expect(6, v.pass && v.lhs == 0, "trivial circle sum " + std::to_string(v.lhs));
          std::vector<int> signs(nv, 1);
          signs[seed % nv] = -1;
          auto mobius = std::make_shared<const LineCocycle>(c, signs);
          const auto w = verify(random_line_field(mobius, n, seed), IndexMode::Mod2, "circles.jsonl");
          expect(6, w.pass && w.lhs == n % 2, "mobius parity " + std::to_string(w.lhs));
          circles += 2;
        }
    if (results[6].ok) results[6].note = std::to_string(s0) + " S0 maps, " + std::to_string(circles) + " circle fields";
  }

  void resolution() {
    for (const NField& f : integer_fields_) {
      const ResolutionReport r = verify_resolution(resolve(f));
      log("resolution.jsonl", resolution_report_json(r));
      expect(7, r.covering && r.chi_ok && r.euler_ok && r.index_ok && r.pass,
             "resolution check failed for an n=" + std::to_string(f.n()) + " field");
    }
    const ResolutionReport sphere = verify_resolution(resolve(quotient_field(tangent("octahedron"), 2)));
    log("resolution.jsonl", resolution_report_json(sphere));
    expect(7, sphere.chi_tilde == 0 && sphere.pass, "sphere line field chi " + std::to_string(sphere.chi_tilde));
    if (results[7].ok) results[7].note = std::to_string(integer_fields_.size()) + " fields, sphere line field chi 0";
  }

  void vortex() {
    const auto b = tangent("torus");
    constexpr int kVertex = 0;
    for (int z = -3; z <= 3; ++z) {
      const NField f = vortex_sections(b, kVertex, z);
      const LocalIndexReport r = local_index(f, kVertex, IndexMode::Integer);
      expect(8, f.n() == 3 && r.index == z, "z=" + std::to_string(z) + " gave " + std::to_string(r.index));
      const auto v = verify(f, IndexMode::Integer, "vortex.jsonl");
      expect(8, v.pass, "z=" + std::to_string(z) + " fails the sum");
    }
    if (results[8].ok) results[8].note = "z = -3..3 at torus vertex 0";
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save(const Run& run, const fs::path& dir) {
  fs::remove_all(dir);
  for (const auto& [name, text] : run.reports) write_text(dir / name, text);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_reports");

  Run first(1), second(4);
  first.all();
  second.all();
  save(first, out / "run1");
  save(second, out / "run2");

  Outcome det;
  std::size_t files = 0;
  for (const auto& [name, text] : first.reports) {
    ++files;
    if (slurp(out / "run1" / name) != slurp(out / "run2" / name)) {
      det.ok = false;
      det.note = name + " differs between runs";
    }
  }
  if (first.reports.size() != second.reports.size()) {
    det.ok = false;
    det.note = "runs wrote different report sets";
  }
  if (det.ok) det.note = std::to_string(files) + " report files identical across two runs";

  bool all = true;
  for (int k = 0; k < 10; ++k) {
    const Outcome& o = k < 9 ? first.results[k] : det;
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << o.note << "\n";
  }
  return all ? 0 : 1;
}
