#ifndef ORTHO_DICTIONARY_HPP
#define ORTHO_DICTIONARY_HPP

#include <string>
#include <vector>

#include "ortho/duality.hpp"
#include "ortho/filter.hpp"
#include "ortho/lattice.hpp"
#include "ortho/space.hpp"

namespace ortho {

// Infinitary meet formula: for every subfamily F of COR(X) with at most
// max_arity members, the lattice meet in the COR algebra equals
// Int(intersection of F).
bool meet_formula_check(const UvoSpace& X, const CorAlgebra& A, int max_arity = 3);

// Infinitary join formula: the lattice join equals
// ((union of F)* interior)*, star-interior-star.
bool join_formula_check(const UvoSpace& X, const CorAlgebra& A, int max_arity = 3);

// star-interior-star of an arbitrary subset.
PointSet star_interior_star(const UvoSpace& X, PointSet S);

// Complete UVO-space: U^{*o*} lands in COR for every open U. Literal check
// over all up-sets; capped.
bool is_complete_uvo(const UvoSpace& X, int point_cap = 16);

// At(L) -> X_iso, a |-> the point of the filter generated by a. Isolated
// points of a finite space are the points whose singleton is an up-set.
struct AtomsBijection {
  bool verified = false;
  std::vector<std::pair<int, int>> pairs;  // (atom, isolated point)
  PointSet isolated = 0;
  std::string detail;
};
AtomsBijection atoms_bijection(const Ortholattice& L);

bool is_atomless(const Ortholattice& L);
bool is_atomic(const Ortholattice& L);  // Cl(X_iso) = X on the dual space

// ---------------------------------------------------------------------------
// UVO-sum (the dual of the direct product)

struct SumPoint {
  enum Kind { Left, Right, Pair } kind;
  int i = -1;  // left index, right index, or left component of a pair
  int j = -1;  // right component of a pair
};

struct SumSpace {
  UvoSpace space;  // points: left block, right block, pairs in lex order
  std::vector<SumPoint> tags;
  int left_m = 0, right_m = 0;

  int left_point(int i) const { return i; }
  int right_point(int j) const { return left_m + j; }
  int pair_point(int i, int j) const { return left_m + right_m + i * right_m + j; }
};

// Carrier X + Y + XxY with the five-part orthogonality (stored as its
// symmetric closure) and the product-style specialization order. The order
// is cross-checked against the specialization of the topology generated by
// the sets U + V + UxV over COR(X) x COR(Y), empty members included; a
// mismatch throws VerificationError.
SumSpace uvo_sum(const UvoSpace& X, const UvoSpace& Y);

UvoMap coprojection_left(const SumSpace& S, const UvoSpace& X);
UvoMap coprojection_right(const SumSpace& S, const UvoSpace& Y);

// The case map X+_{LxM} -> X+_L + X+_M, verified to be a homeomorphism and
// an orthospace isomorphism.
struct ProductSumHomeo {
  Ortholattice prod;
  DualSpace prod_dual;
  SumSpace sum;
  std::vector<int> map;  // prod_dual point -> sum point
};
ProductSumHomeo product_sum_homeo(const Ortholattice& L, const Ortholattice& M);

// ---------------------------------------------------------------------------
// Completions

// MacNeille completion both ways: via the normal subsets A = A^{ul} with
// the complement A |-> { b | b <= a' for all a in A }, and via the regular
// subsets of the principal-point frame of the dual space. The normal family
// is also compared against the regular subsets of the full lattice frame
// under a <|> b iff a <= b', both with and without bottom (the two agree up
// to dropping 0 from every member).
struct MacNeilleResult {
  std::vector<ElemSet> normals;
  Ortholattice via_normals;
  RegularAlgebra via_frame;
  std::vector<int> iso;  // via_normals -> via_frame.algebra
};
MacNeilleResult macneille(const Ortholattice& L, int point_cap = 20);

// Canonical extension: all orthoregular subsets of the dual filter frame,
// with the embedding a |-> a^. Verifies the embedding lands in R(X), the
// two denseness identities, and compactness as the equivalence
//   intersection of a^ over A inside (union of b^ over B)**
//   iff meet(A) <= join(B),
// over subfamilies of size at most check_arity.
struct CanonicalExtensionResult {
  RegularAlgebra regular;
  std::vector<int> embedding;  // a -> index into regular.sets
};
CanonicalExtensionResult canonical_extension(const Ortholattice& L, int check_arity = 3);

// ---------------------------------------------------------------------------
// Congruences vs the dual space (orthomodular case)

// Space-side family: the empty set together with the principal up-sets S
// whose trace kernel g(S) = { (a,b) | a^ meet S = b^ meet S } is a
// congruence with f(g(S)) = S, where f(theta) is the up-set of points
// containing the top class (empty when theta is total). f and g are
// verified to be mutually inverse against the brute-force congruence list,
// and each f(theta) is checked to equal the range of the dual of the
// quotient projection.
//
// The generated-subframe reading of the space side (close S under the
// complement of orthogonality) is also computed and reported: it is
// strictly smaller already on 2^3, whose seven principal up-sets all
// correspond to congruences while only the whole space is closed under
// non-orthogonality successors.
struct CongCorrespondence {
  std::vector<Congruence> congruences;          // brute-force list, canonical order
  std::vector<PointSet> space_side;             // f-image, aligned with congruences
  std::vector<PointSet> generated_subframes;    // literal reading, informational
};
CongCorrespondence congruence_correspondence(const Ortholattice& L, int size_cap = 12);

}  // namespace ortho

#endif  // ORTHO_DICTIONARY_HPP
