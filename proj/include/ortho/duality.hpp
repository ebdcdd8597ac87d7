#ifndef ORTHO_DUALITY_HPP
#define ORTHO_DUALITY_HPP

#include <vector>

#include "ortho/filter.hpp"
#include "ortho/lattice.hpp"
#include "ortho/space.hpp"

namespace ortho {

// A point map between finite orthospaces together with its computed
// morphism flags.
//
// `spectral` is the spectral-map condition, which on finite spaces is
// order preservation. `forth` is the p-morphism forth condition over the
// complements of the orthogonality relations. `back_literal` is the exact
// p-morphism back condition (exists y with f(y) = y'); `star_preserving`
// is the basic-open back condition f^{-1}[U*] = f^{-1}[U]* for U in
// COR(target).
//
// A map is taken to be a UVO-morphism when spectral, forth and
// star_preserving all hold. The literal back condition is strictly
// stronger and fails for duals of perfectly good homomorphisms (the dual
// of 2x2 -> O2 sends the single point to ^a, leaving ^1 outside the image
// yet not orthogonal to it), so it is reported but not required. Star
// preservation is exactly what makes U |-> f^{-1}[U] an ortholattice
// homomorphism, which is what the dual equivalence needs.
struct UvoMap {
  UvoSpace source, target;
  std::vector<int> map;
  bool spectral = false;
  bool forth = false;
  bool back_literal = false;
  bool star_preserving = false;
  bool order_back = false;  // informational only

  int operator()(int x) const { return map[x]; }
  bool valid() const { return spectral && forth && star_preserving; }
};

UvoMap make_uvo_map(UvoSpace source, UvoSpace target, std::vector<int> map);
UvoMap identity_uvo_map(const UvoSpace& X);
UvoMap compose(const UvoMap& g, const UvoMap& f);  // g after f
bool uvo_map_injective(const UvoMap& f);
bool uvo_map_surjective(const UvoMap& f);

struct WitnessCheck {
  bool holds = true;
  std::vector<int> witness;
};

// Spectral both ways: by order preservation, and by literal preimages of
// the COR members of the target being opens. The routes agree whenever
// COR(target) is a basis (UVO axiom 3).
struct SpectralMapCheck {
  WitnessCheck by_order;
  WitnessCheck by_cor_preimage;
};
SpectralMapCheck is_spectral_map(const UvoSpace& X, const UvoSpace& Y,
                                 const std::vector<int>& f);

// Literal forth-and-back p-morphism conditions over the complement
// relations; exhaustive, with a witness on failure.
struct PMorphismCheck {
  WitnessCheck forth;
  WitnessCheck back;
};
PMorphismCheck is_p_morphism_nonperp(const UvoSpace& X, const UvoSpace& Y,
                                     const std::vector<int>& f);

// h_+ : X+_{L'} -> X+_L, x |-> h^{-1}[x]. Self-verifies: morphism flags,
// plus the identity (h_+)^{-1}[a^] = (h(a))^ for every a.
UvoMap hom_to_uvomap(const LatticeHom& h);

// f^+ : COR(X') -> COR(X), U |-> f^{-1}[U]. Self-verifies that every
// preimage lands in COR(X) and that intersection, star and empty are
// preserved.
LatticeHom uvomap_to_hom(const UvoMap& f);

// a |-> a^ as a homomorphism L -> COR(X+_L); verified to be an isomorphism
// (the representation theorem, instance by instance).
LatticeHom representation_hom(const Ortholattice& L);

// eta_L square: (h_+)^+ after rep_L equals rep_{L'} after h, elementwise.
WitnessCheck check_naturality(const LatticeHom& h);

// theta_X square: (f^+)_+ after g_X equals g_{X'} after f, pointwise.
WitnessCheck check_conaturality(const UvoMap& f);

// Injectivity plus the trace condition: for U in COR(source) there is V in
// COR(target) with f[U] = f[source] meet V.
WitnessCheck is_uvo_embedding(const UvoMap& f);

}  // namespace ortho

#endif  // ORTHO_DUALITY_HPP
