#include "nph/generators.hpp"

#include <cmath>
#include <map>

#include "nph/error.hpp"
#include "nph/index.hpp"
#include "nph/random.hpp"

namespace nph {

namespace {

constexpr int kRedraws = 64;
constexpr double kTau = 6.283185307179586;

SurfaceComplex with_coords(SurfaceComplex c, std::vector<Point3> coords) {
  c.set_coords(std::move(coords));
  return c;
}

struct Grid {
  std::vector<Face> faces;
  std::vector<Point3> coords;
};

Grid torus_faces(int m, int n, int offset, double shift) {
  Grid g;
  auto id = [&](int i, int j) { return offset + ((i % m + m) % m) * n + (j % n + n) % n; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      g.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      g.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = kTau * i / m, v = kTau * j / n;
      g.coords.push_back({shift + (2 + std::cos(v)) * std::cos(u), (2 + std::cos(v)) * std::sin(u), std::sin(v)});
    }
  return g;
}

}  // namespace

SurfaceComplex octahedron() {
  std::vector<Face> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
  return with_coords(SurfaceComplex::validate(6, faces),
                     {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
}

SurfaceComplex icosahedron() {
  const double t = (1 + std::sqrt(5.0)) / 2;
  std::vector<Point3> coords = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                                {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  std::vector<Face> faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                             {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                             {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  return with_coords(SurfaceComplex::validate(12, faces), coords);
}

SurfaceComplex torus_grid(int m, int n) {
  if (m < 3 || n < 3) throw Error(ErrorCode::InvalidParams, "torus grid needs at least 3 x 3 squares");
  Grid g = torus_faces(m, n, 0, 0);
  return with_coords(SurfaceComplex::validate(m * n, g.faces), g.coords);
}

SurfaceComplex genus_surface(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidParams, "genus must be at least 1");
  Grid acc = torus_faces(4, 4, 0, 0);
  int vertex_count = 16;
  // Face of the previous piece still available for the next handle.
  int open_face = 0;
  for (int k = 1; k < genus; ++k) {
    Grid piece = torus_faces(4, 4, 0, 7.0 * k);
    // Glue piece face 0 onto acc face open_face with reversed orientation.
    const Face hole = acc.faces[open_face];
    const Face cap = piece.faces[0];
    std::map<int, int> rename = {{cap[0], hole[0]}, {cap[1], hole[2]}, {cap[2], hole[1]}};
    std::vector<int> id(16);
    for (int v = 0; v < 16; ++v) {
      if (auto it = rename.find(v); it != rename.end()) {
        id[v] = it->second;
      } else {
        id[v] = vertex_count++;
        acc.coords.push_back(piece.coords[v]);
      }
    }
    acc.faces.erase(acc.faces.begin() + open_face);
    const int base = static_cast<int>(acc.faces.size());
    for (std::size_t f = 1; f < piece.faces.size(); ++f)
      acc.faces.push_back({id[piece.faces[f][0]], id[piece.faces[f][1]], id[piece.faces[f][2]]});
    // Square (2,2) of the new piece is far from its glued corner.
    open_face = base + 20 - 1;
  }
  return with_coords(SurfaceComplex::validate(vertex_count, acc.faces), acc.coords);
}

SurfaceComplex projective_plane() {
  std::vector<Face> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                             {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<Point3> coords = {{0, 0, 0}};
  for (int k = 0; k < 5; ++k) coords.push_back({std::cos(kTau * k / 5), std::sin(kTau * k / 5), 0});
  return with_coords(SurfaceComplex::validate(6, faces), coords);
}

SurfaceComplex klein_bottle(int m, int n) {
  if (m < 4 || n < 4) throw Error(ErrorCode::InvalidParams, "Klein grid needs at least 4 x 4 squares");
  // Vertex (i, j); crossing j = n lands on (-i, 0).
  auto id = [&](int i, int j) {
    if (j == n) {
      i = -i;
      j = 0;
    }
    return ((i % m + m) % m) * n + j;
  };
  std::vector<Face> faces;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  std::vector<Point3> coords;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) coords.push_back({static_cast<double>(j), static_cast<double>(i), 0});
  return with_coords(SurfaceComplex::validate(m * n, faces), coords);
}

SurfaceComplex base_by_name(const std::string& name) {
  if (name == "octahedron" || name == "sphere") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "torus") return torus_grid();
  if (name == "rp2") return projective_plane();
  if (name == "klein") return klein_bottle();
  if (name.rfind("genus", 0) == 0 && name.size() > 5) {
    const std::string digits = name.substr(5);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2)
      return genus_surface(std::stoi(digits));
  }
  throw Error(ErrorCode::InvalidParams, "unknown base '" + name + "'");
}

bool is_circle_base(const std::string& name) { return name == "circle" || name == "mobius"; }

NField constant_field(std::shared_ptr<const BundleCocycle> bundle) {
  std::vector<ValueSet> values(bundle->base().face_count(), ValueSet{FieldValue{}});
  return NField::build(std::move(bundle), std::move(values), MatchingPolicy::Explicit);
}

std::vector<TurnClass> quotient_angles(const SurfaceComplex& c, int n) {
  std::vector<TurnClass> theta;
  const bool octa = c.vertex_count() == 6 && c.face_count() == 8 && c.faces() == octahedron().faces();
  if (octa) {
    const int units[8] = {0, 3, 2, 1, 1, 2, 3, 0};
    for (int u : units) theta.emplace_back(Turn(u, 4 * n));
  } else {
    for (int f = 0; f < c.face_count(); ++f) theta.emplace_back(Turn((7 * f) % 5, 10 * n));
  }
  return theta;
}

NField quotient_field(std::shared_ptr<const BundleCocycle> bundle, int n) {
  auto theta = quotient_angles(bundle->base(), n);
  return from_quotient(std::move(bundle), theta, n);
}

NField scaled_sections(std::shared_ptr<const BundleCocycle> bundle, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
  std::vector<SingleField> fields;
  std::vector<Rational> scales;
  for (int i = 0; i < n; ++i) {
    fields.emplace_back(bundle->base().face_count(), FieldValue{TurnClass(Turn(i, 2 * n + 1)), Rational(1)});
    scales.emplace_back(i + 1);
  }
  return from_sections(std::move(bundle), fields, scales);
}

NField random_nfield(std::shared_ptr<const BundleCocycle> bundle, int n, std::uint64_t seed) {
  if (n < 1 || n > 8) throw Error(ErrorCode::InvalidParams, "random fields support 1 <= n <= 8");
  Rng rng(seed);
  const int nf = bundle->base().face_count();
  for (int attempt = 0; attempt < kRedraws; ++attempt) {
    // One value per 1/n sector, jittered by less than 1/(8n), then rotated
    // as a whole: adjacent sets are near-orbits, so optimal matchings are
    // generically unique.
    std::vector<ValueSet> values(nf);
    for (auto& vs : values) {
      const Turn spin = rng.angle().turn();
      for (int i = 0; i < n; ++i) {
        const Turn jitter(Rational(rng.angle().turn().value() - Rational(1, 2)) / Rational(4 * n));
        vs.push_back({TurnClass(spin + Turn(i, n) + jitter), rng.magnitude()});
      }
    }
    try {
      NField f = NField::build(bundle, std::move(values), MatchingPolicy::NearestAngle);
      for (int v = 0; v < bundle->base().vertex_count(); ++v) local_index(f, v, IndexMode::Mod2);
      return f;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DuplicateValue && err.code() != ErrorCode::AmbiguousMatching &&
          err.code() != ErrorCode::InsufficientResolution)
        throw;
    }
  }
  throw Error(ErrorCode::ResampleLimitExceeded, "64 consecutive degenerate random fields");
}

SingleField vortex_section(const BundleCocycle& b, int v, int s) {
  SingleField field(b.base().face_count(), FieldValue{});
  if (s == 0) return field;
  const VertexLink& link = b.links().at(v);
  const int k = static_cast<int>(link.size());
  for (int i = 0; i < k; ++i) field[link.entries[i].face].angle = TurnClass(Turn(s * (2 * i + 1), 2 * k));
  return field;
}

NField vortex_sections(std::shared_ptr<const BundleCocycle> bundle, int v, int z) {
  if (z < -3 || z > 3) throw Error(ErrorCode::InvalidParams, "vortex target must lie in [-3, 3]");
  std::vector<SingleField> fields;
  std::vector<Rational> scales;
  const int sign = z < 0 ? -1 : 1;
  for (int i = 0; i < 3; ++i) {
    fields.push_back(vortex_section(*bundle, v, i < std::abs(z) ? sign : 0));
    scales.emplace_back(i + 1);
  }
  return from_sections(std::move(bundle), fields, scales);
}

NField random_line_field(std::shared_ptr<const LineCocycle> bundle, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be positive");
  Rng rng(seed);
  const int ne = bundle->base().edge_count();
  for (int attempt = 0; attempt < kRedraws; ++attempt) {
    std::vector<std::vector<Rational>> values(ne);
    for (auto& vs : values)
      for (int i = 0; i < n; ++i) {
        Rational x(static_cast<long long>(1 + rng.below(9)), static_cast<long long>(1 + rng.below(4)));
        vs.push_back(rng.below(2) ? x : Rational(-x));
      }
    try {
      return NField::build_line(bundle, std::move(values), MatchingPolicy::NearestAngle);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DuplicateValue && err.code() != ErrorCode::AmbiguousMatching) throw;
    }
  }
  throw Error(ErrorCode::ResampleLimitExceeded, "64 consecutive degenerate random line fields");
}

}  // namespace nph
