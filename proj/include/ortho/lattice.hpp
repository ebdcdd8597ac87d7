#ifndef ORTHO_LATTICE_HPP
#define ORTHO_LATTICE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ortho/bitset.hpp"

namespace ortho {

using ElemSet = Mask;  // subset of lattice elements

// Thrown when an exhaustive sweep would exceed its configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a construction that is guaranteed by a theorem fails its
// self-verification. Surfaced, never swallowed: it means a bug.
struct VerificationError : std::logic_error {
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

enum class Law {
  BadInput,            // sizes out of range, indices out of bounds
  NotAPoset,           // reflexivity / antisymmetry / transitivity broken
  NotALattice,         // a pair without a greatest lower / least upper bound
  NotInvolutive,       // ocomp(ocomp(a)) != a
  NotOrderReversing,   // a <= b but not ocomp(b) <= ocomp(a)
  ComplementLawFails,  // a /\ a' != 0  (or dually a \/ a' != 1)
  DeMorganFails,       // (a /\ b)' != a' \/ b'
  HomLawFails,         // map does not preserve meet / ocomp / bottom
  CongruenceLawFails,  // partition not compatible with meet / ocomp
};

const char* law_name(Law law);

struct ValidationReport {
  bool ok = true;
  Law law = Law::BadInput;
  std::vector<int> witness;
  std::string detail;

  std::string message() const;
  std::string message(const std::vector<std::string>& names) const;
};

template <typename T>
struct Validated {
  std::optional<T> value;
  ValidationReport report;
  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// A finite bounded lattice. The order is kept as bitset rows and the
// meet/join tables are materialized once at validation; everything
// downstream consumes the tables and never recomputes bounds. Values are
// immutable after validation and safe to share across threads.
struct Lattice {
  int n = 0;
  std::vector<std::string> names;
  std::vector<ElemSet> up;    // up[a] = {b | a <= b}
  std::vector<ElemSet> down;  // down[a] = {b | b <= a}
  std::vector<std::uint8_t> meet_tab, join_tab;  // n*n element tables
  int bot = 0, top = 0;

  bool leq(int a, int b) const { return has(up[a], b); }
  int meet(int a, int b) const { return meet_tab[a * n + b]; }
  int join(int a, int b) const { return join_tab[a * n + b]; }
  ElemSet carrier() const { return full_mask(n); }

  int meet_of(ElemSet s) const;  // top for the empty set
  int join_of(ElemSet s) const;  // bot for the empty set
  bool covers(int a, int b) const;  // b covers a
  std::vector<std::pair<int, int>> cover_pairs() const;
};

// Bounded lattice with an order-reversing involutive complement satisfying
// a /\ a' = 0. The De Morgan identities are checked at validation, not
// assumed.
struct Ortholattice : Lattice {
  std::vector<int> ocomp;
  int oc(int a) const { return ocomp[a]; }
};

// Raw pre-validation data. `up` is the candidate order relation as row
// bitsets; the validator checks the poset laws rather than closing the
// relation itself (see closure_from_covers for building rows from covers).
struct LatticeCandidate {
  std::vector<std::string> names;
  std::vector<ElemSet> up;
  std::optional<std::vector<int>> ocomp;
};

std::vector<ElemSet> closure_from_covers(int n, const std::vector<std::pair<int, int>>& covers);

Validated<Lattice> validate_lattice(const LatticeCandidate& cand);
Validated<Ortholattice> validate_ortholattice(const LatticeCandidate& cand);

// ---------------------------------------------------------------------------
// Structural predicates

enum class SublatticeKind { M3, N5 };

// M3: elems = {bot, x, y, z, top} with x,y,z pairwise incomparable,
//     pairwise meets all equal to elems[0], pairwise joins to elems[4].
// N5: elems = {bot, low, high, side, top} with low < high and side
//     incomparable to both.
struct SublatticeWitness {
  SublatticeKind kind;
  std::array<int, 5> elems;
};

std::optional<SublatticeWitness> find_m3(const Lattice& L);
std::optional<SublatticeWitness> find_n5(const Lattice& L);

struct DistributivityResult {
  bool distributive;
  std::optional<SublatticeWitness> witness;  // first M3 if any, else first N5
};
DistributivityResult is_distributive(const Lattice& L);

// Direct scan of a /\ (b \/ c) = (a /\ b) \/ (a /\ c) and its dual over all
// triples; the independent oracle for is_distributive.
bool distributive_by_law(const Lattice& L);

struct OrthomodularResult {
  bool holds;
  std::optional<std::pair<int, int>> witness;  // (a, b) with a <= b
};
OrthomodularResult is_orthomodular(const Ortholattice& L);

struct ModularResult {
  bool holds;
  std::optional<std::array<int, 3>> witness;  // (a, x, b) with a <= b
};
ModularResult is_modular(const Lattice& L);

ElemSet atoms(const Lattice& L);
ElemSet coatoms(const Lattice& L);

Ortholattice product(const Ortholattice& L, const Ortholattice& M);

// Sasaki hook a -> b := a' \/ (b /\ a).
int sasaki_hook(const Ortholattice& L, int a, int b);

// Backtracking search over ocomp- and order-respecting bijections; first
// witness in lexicographic assignment order, or nullopt (the search is
// exhaustive, so nullopt is a proof of non-isomorphism).
std::optional<std::vector<int>> find_isomorphism(const Ortholattice& L, const Ortholattice& M);
std::optional<std::vector<int>> find_lattice_isomorphism(const Lattice& L, const Lattice& M);

// ---------------------------------------------------------------------------
// Homomorphisms, congruences, quotients, subalgebras

struct LatticeHom {
  Ortholattice source, target;
  std::vector<int> map;
  int operator()(int a) const { return map[a]; }
};

ValidationReport validate_hom(const LatticeHom& h);
LatticeHom identity_hom(const Ortholattice& L);
LatticeHom compose(const LatticeHom& g, const LatticeHom& f);  // g after f
bool hom_injective(const LatticeHom& h);
bool hom_surjective(const LatticeHom& h);

// Partition of the carrier compatible with meet and ocomp. Classes are
// numbered by first occurrence, so `cls` is a canonical form.
struct Congruence {
  std::vector<int> cls;
  int classes = 0;
  bool same(int a, int b) const { return cls[a] == cls[b]; }
  bool operator==(const Congruence& o) const { return cls == o.cls; }
};

Congruence identity_congruence(int n);
Congruence total_congruence(int n);
ValidationReport validate_congruence(const Ortholattice& L, const Congruence& theta);
Congruence congruence_generated(const Ortholattice& L,
                                const std::vector<std::pair<int, int>>& pairs);

// All congruences, enumerated by closure of generating pairs starting from
// the identity partition; sorted canonically (lexicographic on cls).
std::vector<Congruence> congruences_bruteforce(const Ortholattice& L, int size_cap = 12);

struct Quotient {
  Ortholattice algebra;
  LatticeHom projection;
};
Quotient quotient(const Ortholattice& L, const Congruence& theta);

struct Subalgebra {
  Ortholattice algebra;
  std::vector<int> elements;  // ascending original indices
  LatticeHom inclusion;
};
Subalgebra subalgebra_generated(const Ortholattice& L, ElemSet gens);

}  // namespace ortho

#endif  // ORTHO_LATTICE_HPP
