#ifndef ORTHO_IO_HPP
#define ORTHO_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortho/dictionary.hpp"
#include "ortho/filter.hpp"
#include "ortho/lattice.hpp"
#include "ortho/space.hpp"

namespace ortho {

struct ParseError {
  int line = 0, col = 0;
  std::string msg;
  std::string to_string() const;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  ParseError error;
  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// Parsed .olat document. Covers keep file order; ocomp pairs are
// normalized (smaller element index first, sorted, duplicates collapsed,
// conflicts rejected), so parse-of-serialize is the identity on documents.
// A document with no ocomp lines at all is a plain bounded lattice; a
// document with some but not all is rejected as incomplete (the bounds may
// always be omitted, they pair with each other).
struct OlatDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> ocomp;
  bool lattice_only = false;

  bool operator==(const OlatDocument& o) const {
    return elements == o.elements && covers == o.covers && ocomp == o.ocomp &&
           lattice_only == o.lattice_only;
  }
};

struct UvoDocument {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> perp;  // normalized like ocomp

  bool operator==(const UvoDocument& o) const {
    return points == o.points && covers == o.covers && perp == o.perp;
  }
};

ParseResult<OlatDocument> parse_olat_document(std::string_view text);
ParseResult<UvoDocument> parse_uvo_document(std::string_view text);

std::string serialize(const OlatDocument& doc);
std::string serialize(const UvoDocument& doc);

// Document -> candidate (cover closure taken here); validation is the
// caller's job so reports keep flowing through the usual channel.
LatticeCandidate candidate_from(const OlatDocument& doc);
SpaceCandidate candidate_from(const UvoDocument& doc);

// Value -> canonical document (covers of the stored order).
OlatDocument document_of(const Lattice& L);
OlatDocument document_of(const Ortholattice& L);
UvoDocument document_of(const UvoSpace& X);

// Deterministic DOT output: solid edges for lattice covers, dotted edges
// for specialization covers, optional orthogonality overlay as undirected
// edges. Byte-identical across runs for the same input.
std::string to_dot(const Lattice& L);
std::string to_dot(const UvoSpace& X, bool perp_overlay = false);
std::string to_dot(const SumSpace& S, bool perp_overlay = false);

}  // namespace ortho

#endif  // ORTHO_IO_HPP
