#ifndef ORTHO_SPACE_HPP
#define ORTHO_SPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ortho/lattice.hpp"

namespace ortho {

using PointSet = Mask;  // subset of space points

// Finite ordered orthospace. A finite T0 space is exactly a poset with the
// up-set topology, so the specialization order *is* the topology here: the
// opens are the up-sets of `up`, and every open is compact. `perp` is the
// orthogonality relation, kept irreflexive and symmetric. No interaction
// between perp and the order is assumed; that is what validate_uvo checks.
struct UvoSpace {
  int m = 0;
  std::vector<std::string> names;
  std::vector<PointSet> up;    // up[x] = {y | x <= y} (specialization)
  std::vector<PointSet> perp;  // perp[x] = {y | x _|_ y}

  bool leq(int x, int y) const { return has(up[x], y); }
  bool orth(int x, int y) const { return has(perp[x], y); }
  PointSet points() const { return full_mask(m); }
  bool covers(int x, int y) const;  // y covers x in specialization
  std::vector<std::pair<int, int>> cover_pairs() const;
};

struct SpaceCandidate {
  std::vector<std::string> names;
  std::vector<PointSet> up;
  std::vector<PointSet> perp;
};

// Checks the orthospace-reduct laws only: partial order; irreflexive,
// symmetric perp. The five UVO axioms live in validate_uvo.
Validated<UvoSpace> validate_space(const SpaceCandidate& cand);

// Orthogonality reduct: points and perp, no order. regular_algebra and the
// completion constructions work at this level. Irreflexivity is not assumed
// here (the MacNeille frame on a full lattice carrier is reflexive at 0).
struct Orthoframe {
  int m = 0;
  std::vector<std::string> names;
  std::vector<PointSet> perp;
  PointSet points() const { return full_mask(m); }
};

Orthoframe frame_of(const UvoSpace& X);

// ---------------------------------------------------------------------------
// Star calculus.  star(Y) = { x | x _|_ y for all y in Y }.

PointSet star(const Orthoframe& F, PointSet Y);
PointSet star(const UvoSpace& X, PointSet Y);
bool is_orthoregular(const Orthoframe& F, PointSet Y);  // Y == Y**
bool is_orthoregular(const UvoSpace& X, PointSet Y);

// Modal route over the complement relation: diamond(Y) = { x | exists y in Y
// with not x _|_ y }, box(Z) its dual, box_diamond = box after diamond.
// Agrees with star(star(.)) pointwise; the two are implemented separately
// and compared in the test suite.
PointSet diamond(const UvoSpace& X, PointSet Y);
PointSet box(const UvoSpace& X, PointSet Y);
PointSet box_diamond(const UvoSpace& X, PointSet Y);

// ---------------------------------------------------------------------------
// Up-set (= open) machinery.

bool is_up_set(const UvoSpace& X, PointSet S);
PointSet up_closure(const UvoSpace& X, PointSet S);
PointSet down_closure(const UvoSpace& X, PointSet S);  // topological closure
PointSet interior(const UvoSpace& X, PointSet S);      // largest up-set inside S

// All up-sets, enumerated by descending the order (never by raw 2^m sweep),
// sorted by (cardinality, bit value). Throws CapExceeded past `cap` sets.
std::vector<PointSet> all_up_sets(const UvoSpace& X, std::size_t cap = std::size_t{1} << 20);

// ---------------------------------------------------------------------------
// COR(X): compact open orthoregular subsets.

struct CorFamily {
  std::vector<PointSet> sets;  // sorted by (cardinality, bit value)
  int index_of(PointSet s) const;  // -1 if absent
  int size() const { return static_cast<int>(sets.size()); }
};

CorFamily cor(const UvoSpace& X, std::size_t cap = std::size_t{1} << 20);

// Report for the five UVO-space axioms. Each flag carries a witness row in
// `detail` when it fails.
struct UvoAxiomReport {
  bool t0 = false;               // (1) specialization antisymmetric
  bool closure = false;          // (2) COR closed under intersection and star
  bool basis = false;            // (3) COR is a basis
  bool filter_point = false;     // (4) proper COR filters are point filters
  bool perp_separation = false;  // (5) x _|_ y gives U with x in U, y in U*
  std::string detail;
  bool ok() const { return t0 && closure && basis && filter_point && perp_separation; }
};

UvoAxiomReport validate_uvo(const UvoSpace& X);

// The ortholattice (COR(X), subset, intersection, star, empty). Element i of
// the algebra is family.sets[i]. The meet table is checked against literal
// intersection and ocomp against literal star.
struct CorAlgebra {
  Ortholattice algebra;
  CorFamily family;
};

CorAlgebra cor_algebra(const UvoSpace& X);

// A point is principal when some open neighborhood contains no strictly
// smaller point. On finite spaces every point is principal (its principal
// up-set witnesses it); the scan implements the definition literally.
PointSet principal_points(const UvoSpace& X);

// Orthoframe of principal points with the induced orthogonality.
Orthoframe pframe(const UvoSpace& X);

// R(F): all orthoregular subsets of a frame, by full subset sweep (capped),
// ordered by inclusion with star as complement.
struct RegularAlgebra {
  Ortholattice algebra;
  std::vector<PointSet> sets;
};

RegularAlgebra regular_algebra(const Orthoframe& F, int point_cap = 20);

}  // namespace ortho

#endif  // ORTHO_SPACE_HPP
