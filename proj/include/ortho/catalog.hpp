#ifndef ORTHO_CATALOG_HPP
#define ORTHO_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ortho/lattice.hpp"

namespace ortho {

// Built-in instance library. Every entry validates on load. The M3 and N5
// entries are plain bounded lattices: M3 admits no orthocomplementation
// (no fixed-point-free order-reversing involution exists on three atoms),
// so they are carried without ocomp and ortho-only operations reject them.
struct CatalogEntry {
  std::string name;
  std::string note;
  Lattice lattice;
  std::optional<Ortholattice> ortho;
  bool lattice_only() const { return !ortho.has_value(); }
};

const std::vector<std::string>& catalog_names();
std::optional<CatalogEntry> builtin(const std::string& name);
Ortholattice builtin_ortho(const std::string& name);  // throws on unknown/lattice-only

// All ortholattices with at most n_max elements, up to isomorphism.
// Lattices are enumerated by extending order ideals one element at a time
// inside a fixed linear extension (bot first, top last), pruning branches
// whose prefixes already lack binary meets; each surviving lattice then
// gets every valid orthocomplementation by backtracking over complement
// pairings, and duplicates are removed by exhaustive isomorphism search
// within invariant buckets.
std::vector<Ortholattice> enumerate_ortholattices(int n_max = 8);

// Independent oracle for small sizes: all comparability assignments on the
// middles closed transitively, filtered through the lattice validator, then
// every involution of the carrier tried as ocomp through the ortholattice
// validator. Exact for n_max <= 6.
std::vector<Ortholattice> enumerate_ortholattices_raw(int n_max = 6);

// Exhaustive backtracking over meet-, ocomp- and bound-preserving maps,
// atoms assigned first. Capped at 8-element operands.
std::vector<LatticeHom> all_homs(const Ortholattice& L, const Ortholattice& M,
                                 int size_cap = 8);

}  // namespace ortho

#endif  // ORTHO_CATALOG_HPP
