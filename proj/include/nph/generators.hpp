#pragma once

// Example meshes, bundles and fields. Every generator is a pure function of
// its parameters and seed.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nph/nfield.hpp"

namespace nph {

SurfaceComplex octahedron();
SurfaceComplex icosahedron();
// m x n grid on the flat torus, each square split along its diagonal.
SurfaceComplex torus_grid(int m = 4, int n = 4);
// Connected sum of `genus` 4x4 torus grids.
SurfaceComplex genus_surface(int genus);
// Six-vertex projective plane (half of the icosahedron).
SurfaceComplex projective_plane();
// m x n grid with one side glued back reversed.
SurfaceComplex klein_bottle(int m = 5, int n = 5);

// Names: octahedron (sphere), icosahedron, torus, genus<g>, rp2, klein.
SurfaceComplex base_by_name(const std::string& name);
bool is_circle_base(const std::string& name);

// Single field of angle 0 everywhere.
NField constant_field(std::shared_ptr<const BundleCocycle> bundle);
// Reference angles for from_quotient: a fixed four-singularity pattern on
// the octahedron, a small deterministic spread elsewhere.
std::vector<TurnClass> quotient_angles(const SurfaceComplex& c, int n);
NField quotient_field(std::shared_ptr<const BundleCocycle> bundle, int n);
// n constant sections at angles i/(2n+1) with scales 1..n. The odd
// denominator keeps reflected copies off the half turn.
NField scaled_sections(std::shared_ptr<const BundleCocycle> bundle, int n);
// Random values matched by nearest angle, redrawn until every local index
// is computable. Throws ResampleLimitExceeded after 64 draws.
NField random_nfield(std::shared_ptr<const BundleCocycle> bundle, int n, std::uint64_t seed);
// Single field turning `s` times around vertex v and constant elsewhere.
SingleField vortex_section(const BundleCocycle& b, int v, int s);
// Three scaled vortex sections whose turn counts at v sum to z, |z| <= 3.
NField vortex_sections(std::shared_ptr<const BundleCocycle> bundle, int v, int z);

// Random nonzero values on a circle, matched by nearest value.
NField random_line_field(std::shared_ptr<const LineCocycle> bundle, int n, std::uint64_t seed);

}  // namespace nph
