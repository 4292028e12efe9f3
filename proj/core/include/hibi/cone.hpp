#pragma once

#include "hibi/dlattice.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hibi {

/// Integer vector in N, indexed by positions in J(L) (basis e_y).
struct NVector {
  std::vector<int> coords;

  bool operator==(const NVector&) const = default;
  auto operator<=>(const NVector&) const = default;
};

NVector basis_vector(std::size_t dim, int y);

/// A generator of the cone sigma: e_z for a maximal z of J(L), or
/// v = e_lower - e_upper for a cover (upper, lower) of J(L). Positions are
/// positions in J(L).
struct Generator {
  enum class Kind { Cover, Maximal };
  Kind kind = Kind::Cover;
  int upper = -1;
  int lower = -1;  // equals upper for Kind::Maximal
  NVector v;

  bool operator==(const Generator&) const = default;
};

/// W(sigma): cover differences in linear-extension order of their lower
/// end (then of their upper end), followed by e_z for maximal z.
std::vector<Generator> cone_generators(const DistributiveLattice& L);

/// f_{I_alpha}(v) = sum over z in I_alpha of v(z).
std::int64_t functional_eval(const DistributiveLattice& L, int alpha, const NVector& v);

/// W(tau) for the face with embedded sublattice D: generators killed by
/// f_{I_alpha} for every alpha in D. Throws NotEmbedded.
std::vector<Generator> face_generators(const DistributiveLattice& L, std::span<const int> D);

/// D = {alpha | f_{I_alpha}(v) = 0 for all v}. Throws NotGenerators when a
/// vector is not in W(sigma).
ElementSet face_support(const DistributiveLattice& L, std::span<const NVector> vectors);

/// P_tau: 1 on D, 0 elsewhere, indexed by lattice elements.
std::vector<Rational> distinguished_point(const DistributiveLattice& L, std::span<const int> D);

/// H(tau): the subposet of J(L) whose Hasse edges are the covers (y, y')
/// with e_{y'} - e_y in W(tau); maximal z with e_z in W(tau) are marked.
struct HPoset {
  std::vector<int> vertices;                 // J positions, sorted
  std::vector<std::pair<int, int>> edges;    // (upper, lower) J positions, sorted
  std::vector<int> marked;                   // J positions with e_z present, sorted
  std::vector<std::vector<int>> components;  // connected components, sorted

  bool empty() const { return vertices.empty(); }
};
HPoset h_poset(const DistributiveLattice& L, std::span<const int> D);

struct FaceGeometry {
  int face_dim = 0;
  int orbit_dim = 0;
  int ambient_dim = 0;
  bool dims_add_up() const { return face_dim + orbit_dim == ambient_dim; }
};

/// face_dim = rank of W(tau); orbit_dim = number of elements in a maximal
/// chain of D. Throws NotEmbedded or GradingMismatch.
FaceGeometry face_geometry(const DistributiveLattice& L, std::span<const int> D);

/// A face keyed by its embedded sublattice, with everything derived from it.
struct Face {
  ElementSet D;
  std::vector<Generator> W;
  HPoset H;
  FaceGeometry geometry;
};
Face make_face(const DistributiveLattice& L, std::span<const int> D);

std::vector<std::vector<int>> generator_rows(std::span<const Generator> gens);

}  // namespace hibi
