#ifndef ORTHO_FILTER_HPP
#define ORTHO_FILTER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ortho/lattice.hpp"
#include "ortho/space.hpp"

namespace ortho {

// A lattice filter as an element bitset: nonempty, upward closed, closed
// under binary meet; proper iff bot is not a member.
using Filter = ElemSet;

Filter principal_filter(const Lattice& L, int a);

// Smallest filter containing S, or nullopt when the closure hits bottom.
std::optional<Filter> filter_generated(const Lattice& L, ElemSet S);

// x _|_L y  iff  some a has ocomp(a) in x and a in y.
bool ortho_rel(const Ortholattice& L, Filter x, Filter y);

// All proper filters, canonically ordered by generator index. Enumerated by
// closure search (grow-by-one-element BFS from the top filter), then checked
// against the principal-filter constructor: in a finite lattice the two must
// agree, and the comparison runs every time as a self-test.
std::vector<Filter> enumerate_proper_filters(const Lattice& L);

// The dual space X+_L: points are the proper filters, specialization is
// inclusion, orthogonality is _|_L, and the basic opens a^ = {x | a in x}
// are kept per element. Empty for the degenerate one-element lattice.
struct DualSpace {
  UvoSpace space;
  std::vector<Filter> filters;     // per point
  std::vector<int> generator;      // per point: the filter's minimum
  std::vector<PointSet> basic_open;  // per lattice element a: a^
  std::vector<int> point_of;       // per lattice element: its point, -1 for bot
};

DualSpace dual_space(const Ortholattice& L);
// Same construction for a plain bounded lattice; orthogonality left empty.
DualSpace filter_poset(const Lattice& L);

PointSet basic_open(const DualSpace& D, int a);

// Literal spectral-space check over the materialized finite open family:
// T0, compactness (minimal-neighborhood property), coherence (intersection
// closure + basis), sobriety (completely prime filters of the open-set
// lattice are exactly the point filters O_X(x)).
struct SpectralReport {
  bool t0 = false, compact = false, coherent = false, sober = false;
  bool ok() const { return t0 && compact && coherent && sober; }
};

SpectralReport verify_spectral(const UvoSpace& X, std::size_t open_cap = std::size_t{1} << 20);

// The characterization map g : X -> X+_{COR(X)}, g(x) = COR_X(x), verified
// to be a bijection preserving and reflecting both the order and the
// orthogonality. Throws VerificationError when the input is not a UVO-space
// (run validate_uvo first for a witness report).
struct CharMapResult {
  std::vector<int> map;  // point of X -> point of dual.space
  CorAlgebra cor;
  DualSpace dual;
};

CharMapResult char_map(const UvoSpace& X);

}  // namespace ortho

#endif  // ORTHO_FILTER_HPP
