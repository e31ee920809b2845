#include "nph/cover.hpp"

#include <map>
#include <numeric>

#include "nph/error.hpp"
#include "nph/index.hpp"

namespace nph {

namespace {

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (int s = 0; s < static_cast<int>(p.size()); ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (int x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::int64_t parity(std::int64_t x) { return ((x % 2) + 2) % 2; }

BranchedResolution resolve_surface(const NField& f) {
  const SurfaceComplex& c = f.bundle().base();
  const int n = f.n();
  if (!f.inconsistent_matchings().empty())
    throw Error(ErrorCode::InvalidInput, "stored matchings are not mutually inverse on edge " +
                                             std::to_string(f.inconsistent_matchings().front()));

  BranchedResolution out;
  // tilde vertex of (base corner 3f+j, sheet)
  std::vector<int> corner_vertex(static_cast<std::size_t>(c.halfedge_count()) * n, -1);
  for (int v = 0; v < c.vertex_count(); ++v) {
    const VertexLink& link = f.bundle().links()[v];
    const Monodromy mono = monodromy(f, link);
    for (const auto& cycle : mono.cycles) {
      const int tv = static_cast<int>(out.cone_vertices.size());
      out.cone_vertices.push_back({tv, v, static_cast<int>(cycle.size())});
      for (int s : cycle) {
        int sheet = s;
        for (std::size_t i = 0; i < link.size(); ++i) {
          const LinkEntry& entry = link.entries[i];
          corner_vertex[static_cast<std::size_t>(3 * entry.face + entry.corner) * n + sheet] = tv;
          sheet = f.crossing(link, i)[sheet];
        }
      }
    }
  }

  const int nf = c.face_count() * n;
  std::vector<Face> faces(nf);
  std::vector<int> twins(3 * nf);
  for (int face = 0; face < c.face_count(); ++face)
    for (int k = 0; k < n; ++k) {
      const int tf = face * n + k;
      out.projection.push_back({tf, face, k});
      for (int j = 0; j < 3; ++j) {
        const int h = 3 * face + j;
        faces[tf][j] = corner_vertex[static_cast<std::size_t>(h) * n + k];
        const int e = c.edge_of(h);
        const Permutation& p = h == c.edge_halfedge(e) ? f.forward(e) : f.backward(e);
        const int t = c.twin(h);
        twins[3 * tf + j] = 3 * ((t / 3) * n + p[k]) + t % 3;
      }
    }
  auto surface = std::make_shared<SurfaceComplex>(
      SurfaceComplex::from_gluing(static_cast<int>(out.cone_vertices.size()), std::move(faces), std::move(twins)));
  if (c.coords()) {
    std::vector<Point3> coords;
    for (const ConeVertex& cv : out.cone_vertices) coords.push_back((*c.coords())[cv.base_vertex]);
    surface->set_coords(std::move(coords));
  }
  out.surface = surface;

  if (const auto& o = f.bundle().orientation()) {
    Orientation lifted;
    for (int tf = 0; tf < nf; ++tf) lifted.flip.push_back(o->flip[tf / n]);
    out.lifted_orientation = std::move(lifted);
  }

  std::vector<EdgeTransitions> edges(surface->edge_count());
  for (int e = 0; e < surface->edge_count(); ++e) {
    const int th = surface->edge_halfedge(e);
    const int h = 3 * (th / 3 / n) + th % 3;
    const int be = c.edge_of(h);
    const EdgeTransitions& base = f.bundle().edges()[be];
    if (h == c.edge_halfedge(be))
      edges[e] = base;
    else
      edges[e] = {base[1].inverse(), base[0].inverse()};
  }
  out.bundle = std::make_shared<BundleCocycle>(surface, std::move(edges));

  std::vector<ValueSet> values;
  values.reserve(nf);
  for (int tf = 0; tf < nf; ++tf) values.push_back({f.values()[tf / n][tf % n]});
  out.section = std::make_shared<NField>(NField::build(out.bundle, std::move(values), MatchingPolicy::Explicit));
  return out;
}

BranchedResolution resolve_circle(const NField& f) {
  const CircleComplex& c = f.line().base();
  const int n = f.n();
  const int ne = c.edge_count();
  if (!f.inconsistent_matchings().empty())
    throw Error(ErrorCode::InvalidInput, "stored matchings are not mutually inverse at vertex " +
                                             std::to_string(f.inconsistent_matchings().front()));
  BranchedResolution out;
  std::vector<bool> seen(static_cast<std::size_t>(ne) * n, false);
  for (int k0 = 0; k0 < n; ++k0) {
    if (seen[k0]) continue;
    std::vector<std::pair<int, int>> walk;  // (edge, sheet)
    int e = 0, k = k0;
    do {
      seen[static_cast<std::size_t>(e) * n + k] = true;
      walk.emplace_back(e, k);
      const int v = (e + 1) % ne;
      k = f.forward(v)[k];
      e = c.edge_out(v);
    } while (!(e == 0 && k == k0));

    ResolvedCircle circle;
    const int len = static_cast<int>(walk.size());
    circle.complex = CircleComplex(len);
    std::vector<int> signs;
    std::vector<std::vector<Rational>> values;
    for (int i = 0; i < len; ++i) {
      circle.projection.push_back({i, walk[i].first, walk[i].second});
      circle.base_vertex.push_back(walk[i].first);
      signs.push_back(f.line().sign(walk[i].first));
      values.push_back({f.line_values()[walk[i].first][walk[i].second]});
    }
    circle.bundle = std::make_shared<LineCocycle>(circle.complex, std::move(signs));
    circle.section =
        std::make_shared<NField>(NField::build_line(circle.bundle, std::move(values), MatchingPolicy::Explicit));
    out.circles.push_back(std::move(circle));
  }
  return out;
}

ResolutionReport verify_surface(const BranchedResolution& r) {
  ResolutionReport rep;
  const NField& f = *r.base;
  const SurfaceComplex& c = f.bundle().base();
  const SurfaceComplex& m = *r.surface;
  const int n = f.n();
  auto witness = [&](std::string s) {
    rep.covering = false;
    if (rep.covering_witnesses.size() < 16) rep.covering_witnesses.push_back(std::move(s));
  };

  if (m.face_count() != n * c.face_count()) witness("face count is not n times the base");
  std::vector<int> preimages(c.face_count(), 0);
  for (int tf = 0; tf < static_cast<int>(r.projection.size()) && tf < m.face_count(); ++tf) {
    const ProjectionEntry& p = r.projection[tf];
    ++preimages[p.base_face];
    for (int j = 0; j < 3; ++j) {
      if (r.cone_vertices[m.face(tf)[j]].base_vertex != c.face(p.base_face)[j])
        witness("tilde face " + std::to_string(tf) + " corner " + std::to_string(j) + " projects wrongly");
      const int tt = m.twin(3 * tf + j);
      if (r.projection[tt / 3].base_face * 3 + tt % 3 != c.twin(3 * p.base_face + j))
        witness("tilde halfedge " + std::to_string(3 * tf + j) + " is glued off the base gluing");
    }
  }
  for (int face = 0; face < c.face_count(); ++face)
    if (preimages[face] != n) witness("base face " + std::to_string(face) + " has the wrong number of preimages");

  std::vector<int> cycle_sum(c.vertex_count(), 0), cycle_count(c.vertex_count(), 0);
  for (const ConeVertex& cv : r.cone_vertices) {
    cycle_sum[cv.base_vertex] += cv.cycle_length;
    ++cycle_count[cv.base_vertex];
    const std::size_t tilde_len = vertex_link(m, cv.tilde_vertex).size();
    const std::size_t base_len = f.bundle().links()[cv.base_vertex].size();
    if (tilde_len != static_cast<std::size_t>(cv.cycle_length) * base_len)
      witness("tilde vertex " + std::to_string(cv.tilde_vertex) + " link does not wrap " +
              std::to_string(cv.cycle_length) + " times");
  }
  std::int64_t deficiency = 0;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (cycle_sum[v] != n) witness("base vertex " + std::to_string(v) + " cycle lengths do not sum to n");
    deficiency += n - cycle_count[v];
  }

  rep.chi_tilde = euler_characteristic(m);
  rep.chi_expected = n * euler_characteristic(c) - deficiency;
  rep.chi_ok = rep.chi_tilde == rep.chi_expected;

  if (r.lifted_orientation) {
    const auto& flip = r.lifted_orientation->flip;
    for (int h = 0; h < m.halfedge_count() && rep.orientation_lifts; ++h) {
      const int t = m.twin(h);
      const bool stored_coherent = m.source(h) == m.target(t);
      if ((flip[h / 3] == flip[t / 3]) != stored_coherent) rep.orientation_lifts = false;
    }
    if (!orient(m)) rep.orientation_lifts = false;
  }

  const bool integer = integer_mode_available(f);
  rep.mod2_indices = !integer;
  const IndexMode mode = integer ? IndexMode::Integer : IndexMode::Mod2;
  if (integer && r.lifted_orientation) {
    rep.euler_tilde = euler_number(*r.bundle, r.lifted_orientation);
    rep.euler_expected = n * euler_number(f.bundle());
    rep.euler_ok = *rep.euler_tilde == *rep.euler_expected;
  }

  std::vector<std::int64_t> lifted(c.vertex_count(), 0);
  for (const ConeVertex& cv : r.cone_vertices) {
    const VertexLink link = r.lifted_orientation ? vertex_link(m, cv.tilde_vertex, r.lifted_orientation)
                                                 : vertex_link(m, cv.tilde_vertex);
    lifted[cv.base_vertex] += local_index(*r.section, link, mode).index;
  }
  for (int v = 0; v < c.vertex_count(); ++v) {
    IndexMatchRow row{v, local_index(f, v, mode).index, lifted[v], false};
    if (mode == IndexMode::Mod2) row.lifted_sum = parity(row.lifted_sum);
    row.ok = row.base_index == row.lifted_sum;
    rep.index_ok = rep.index_ok && row.ok;
    rep.index_rows.push_back(row);
  }
  rep.pass = rep.covering && rep.orientation_lifts && rep.chi_ok && rep.euler_ok && rep.index_ok;
  return rep;
}

ResolutionReport verify_circle(const BranchedResolution& r) {
  ResolutionReport rep;
  const NField& f = *r.base;
  const CircleComplex& c = f.line().base();
  const int n = f.n();
  std::vector<int> preimages(c.edge_count(), 0);
  std::vector<std::int64_t> lifted(c.vertex_count(), 0);
  int w1 = 0;
  for (std::size_t ci = 0; ci < r.circles.size(); ++ci) {
    const ResolvedCircle& circle = r.circles[ci];
    const int len = circle.complex.edge_count();
    if (len % c.edge_count() != 0) {
      rep.covering = false;
      rep.covering_witnesses.push_back("circle " + std::to_string(ci) + " does not wrap a whole number of times");
    }
    for (int i = 0; i < len; ++i) {
      const ProjectionEntry& p = circle.projection[i];
      ++preimages[p.base_face];
      if (p.base_face != i % c.edge_count() || circle.base_vertex[i] != p.base_face) {
        rep.covering = false;
        rep.covering_witnesses.push_back("circle " + std::to_string(ci) + " edge " + std::to_string(i) +
                                         " projects wrongly");
      }
      lifted[circle.base_vertex[i]] += circle_index(*circle.section, i);
    }
    w1 += line_w1(*circle.bundle);
  }
  for (int e = 0; e < c.edge_count(); ++e)
    if (preimages[e] != n) {
      rep.covering = false;
      rep.covering_witnesses.push_back("base edge " + std::to_string(e) + " has the wrong number of preimages");
    }
  rep.chi_tilde = 0;
  rep.chi_expected = 0;
  rep.chi_ok = true;
  rep.w1_tilde = w1 % 2;
  rep.w1_expected = static_cast<int>(parity(static_cast<std::int64_t>(n) * line_w1(f.line())));
  rep.euler_ok = *rep.w1_tilde == *rep.w1_expected;
  for (int v = 0; v < c.vertex_count(); ++v) {
    IndexMatchRow row{v, circle_index(f, v), lifted[v], false};
    row.ok = row.base_index == row.lifted_sum;
    rep.index_ok = rep.index_ok && row.ok;
    rep.index_rows.push_back(row);
  }
  rep.pass = rep.covering && rep.chi_ok && rep.euler_ok && rep.index_ok;
  return rep;
}

}  // namespace

std::vector<int> Monodromy::lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

Monodromy monodromy(const NField& f, const VertexLink& link) {
  Monodromy m;
  m.vertex = link.vertex;
  m.reference_face = link.entries.front().face;
  m.perm = identity_perm(f.n());
  for (int s = 0; s < f.n(); ++s) {
    int sheet = s;
    for (std::size_t i = 0; i < link.size(); ++i) sheet = f.crossing(link, i)[sheet];
    m.perm[s] = sheet;
  }
  m.cycles = cycles_of(m.perm);
  return m;
}

Monodromy monodromy(const NField& f, int v) {
  if (f.rank() == 2) return monodromy(f, f.bundle().links().at(v));
  Monodromy m;
  m.vertex = v;
  m.reference_face = f.line().base().edge_in(v);
  m.perm = identity_perm(f.n());
  m.cycles = cycles_of(m.perm);
  return m;
}

BranchedResolution resolve(const NField& f) {
  BranchedResolution out = f.rank() == 2 ? resolve_surface(f) : resolve_circle(f);
  out.base = std::make_shared<const NField>(f);
  return out;
}

ResolutionReport verify_resolution(const BranchedResolution& r) {
  if (!r.base) throw Error(ErrorCode::InvalidInput, "resolution has no base field");
  return r.base->rank() == 2 ? verify_surface(r) : verify_circle(r);
}

}  // namespace nph
