#include "ortho/space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ortho {

bool UvoSpace::covers(int x, int y) const {
  if (x == y || !leq(x, y)) return false;
  Mask between = up[x] & ~bit(x) & ~bit(y);
  bool strict = false;
  for_bits(between, [&](int z) {
    if (leq(z, y)) strict = true;
  });
  return !strict;
}

std::vector<std::pair<int, int>> UvoSpace::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (covers(x, y)) out.emplace_back(x, y);
  return out;
}

Validated<UvoSpace> validate_space(const SpaceCandidate& cand) {
  Validated<UvoSpace> out;
  const int m = static_cast<int>(cand.names.size());
  auto bad = [&](Law law, std::vector<int> w, std::string d) {
    out.report.ok = false;
    out.report.law = law;
    out.report.witness = std::move(w);
    out.report.detail = std::move(d);
  };
  if (m > kMaxCarrier) {
    bad(Law::BadInput, {}, "point count exceeds 64");
    return out;
  }
  if (static_cast<int>(cand.up.size()) != m || static_cast<int>(cand.perp.size()) != m) {
    bad(Law::BadInput, {}, "relation rows do not match point count");
    return out;
  }
  const Mask all = full_mask(m);
  for (int x = 0; x < m; ++x)
    if ((cand.up[x] & ~all) || (cand.perp[x] & ~all)) {
      bad(Law::BadInput, {x}, "relation row references a point out of range");
      return out;
    }
  for (int x = 0; x < m; ++x)
    if (!has(cand.up[x], x)) {
      bad(Law::NotAPoset, {x}, "specialization not reflexive");
      return out;
    }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (has(cand.up[x], y) && has(cand.up[y], x)) {
        bad(Law::NotAPoset, {x, y}, "specialization not antisymmetric");
        return out;
      }
  for (int x = 0; x < m; ++x) {
    bool broken = false;
    for_bits(cand.up[x], [&](int y) {
      if (!broken && !subset_of(cand.up[y], cand.up[x])) broken = true;
    });
    if (broken) {
      bad(Law::NotAPoset, {x}, "specialization not transitive");
      return out;
    }
  }
  for (int x = 0; x < m; ++x)
    if (has(cand.perp[x], x)) {
      bad(Law::BadInput, {x}, "orthogonality not irreflexive");
      return out;
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (has(cand.perp[x], y) != has(cand.perp[y], x)) {
        bad(Law::BadInput, {x, y}, "orthogonality not symmetric");
        return out;
      }
  UvoSpace X;
  X.m = m;
  X.names = cand.names;
  X.up = cand.up;
  X.perp = cand.perp;
  out.value = std::move(X);
  return out;
}

Orthoframe frame_of(const UvoSpace& X) { return Orthoframe{X.m, X.names, X.perp}; }

// ---------------------------------------------------------------------------
// Star calculus

PointSet star(const Orthoframe& F, PointSet Y) {
  PointSet s = F.points();
  for_bits(Y, [&](int y) { s &= F.perp[y]; });
  return s;
}

PointSet star(const UvoSpace& X, PointSet Y) {
  PointSet s = X.points();
  for_bits(Y, [&](int y) { s &= X.perp[y]; });
  return s;
}

bool is_orthoregular(const Orthoframe& F, PointSet Y) { return star(F, star(F, Y)) == Y; }
bool is_orthoregular(const UvoSpace& X, PointSet Y) { return star(X, star(X, Y)) == Y; }

PointSet diamond(const UvoSpace& X, PointSet Y) {
  PointSet out = 0;
  for (int x = 0; x < X.m; ++x) {
    PointSet nonperp = X.points() & ~X.perp[x];
    if (nonperp & Y) out |= bit(x);
  }
  return out;
}

PointSet box(const UvoSpace& X, PointSet Y) {
  PointSet out = 0;
  for (int x = 0; x < X.m; ++x) {
    PointSet nonperp = X.points() & ~X.perp[x];
    if (subset_of(nonperp, Y)) out |= bit(x);
  }
  return out;
}

PointSet box_diamond(const UvoSpace& X, PointSet Y) { return box(X, diamond(X, Y)); }

// ---------------------------------------------------------------------------
// Up-sets

bool is_up_set(const UvoSpace& X, PointSet S) {
  bool ok = true;
  for_bits(S, [&](int x) {
    if (!subset_of(X.up[x], S)) ok = false;
  });
  return ok;
}

PointSet up_closure(const UvoSpace& X, PointSet S) {
  PointSet out = 0;
  for_bits(S, [&](int x) { out |= X.up[x]; });
  return out;
}

PointSet down_closure(const UvoSpace& X, PointSet S) {
  PointSet out = 0;
  for (int x = 0; x < X.m; ++x)
    if (X.up[x] & S) out |= bit(x);
  return out;
}

PointSet interior(const UvoSpace& X, PointSet S) {
  PointSet out = 0;
  for (int x = 0; x < X.m; ++x)
    if (subset_of(X.up[x], S)) out |= bit(x);
  return out;
}

namespace {

void sort_family(std::vector<PointSet>& fam) {
  std::sort(fam.begin(), fam.end(), [](PointSet a, PointSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

}  // namespace

std::vector<PointSet> all_up_sets(const UvoSpace& X, std::size_t cap) {
  // Points processed maximal-first (ascending |up[x]|), so that by the time
  // x is decided all points above it are decided: include x only when its
  // strict up-set is already in. Each up-set is produced exactly once.
  std::vector<int> order(X.m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(X.up[a]) < popcount(X.up[b]); });
  std::vector<PointSet> out;
  std::vector<std::pair<std::size_t, PointSet>> stack{{0, PointSet{0}}};
  while (!stack.empty()) {
    auto [i, s] = stack.back();
    stack.pop_back();
    if (i == order.size()) {
      out.push_back(s);
      if (out.size() > cap) throw CapExceeded("up-set family exceeds cap");
      continue;
    }
    int x = order[i];
    stack.emplace_back(i + 1, s);
    if (subset_of(X.up[x] & ~bit(x), s)) stack.emplace_back(i + 1, s | bit(x));
  }
  sort_family(out);
  return out;
}

// ---------------------------------------------------------------------------
// COR

int CorFamily::index_of(PointSet s) const {
  auto key = [](PointSet a, PointSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  };
  auto it = std::lower_bound(sets.begin(), sets.end(), s, key);
  if (it == sets.end() || *it != s) return -1;
  return static_cast<int>(it - sets.begin());
}

CorFamily cor(const UvoSpace& X, std::size_t cap) {
  CorFamily fam;
  for (PointSet u : all_up_sets(X, cap))
    if (is_orthoregular(X, u)) fam.sets.push_back(u);
  // all_up_sets is already canonically sorted and filtering preserves that
  return fam;
}

namespace {

std::string point_list(const UvoSpace& X, PointSet s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_bits(s, [&](int x) {
    if (!first) os << ",";
    os << X.names[x];
    first = false;
  });
  os << "}";
  return os.str();
}

}  // namespace

UvoAxiomReport validate_uvo(const UvoSpace& X) {
  UvoAxiomReport rep;
  std::ostringstream detail;
  CorFamily fam = cor(X);

  // (1) T0: validate_space established antisymmetry for values built through
  // it; re-check here since the checker accepts raw structs too.
  rep.t0 = true;
  for (int x = 0; x < X.m && rep.t0; ++x)
    for (int y = x + 1; y < X.m; ++y)
      if (X.leq(x, y) && X.leq(y, x)) {
        rep.t0 = false;
        detail << "T0 fails at (" << X.names[x] << "," << X.names[y] << "); ";
        break;
      }

  // (2) closure under intersection and star.
  rep.closure = true;
  for (int i = 0; i < fam.size() && rep.closure; ++i) {
    if (fam.index_of(star(X, fam.sets[i])) < 0) {
      rep.closure = false;
      detail << "COR not closed under star at " << point_list(X, fam.sets[i]) << "; ";
      break;
    }
    for (int j = i; j < fam.size(); ++j)
      if (fam.index_of(fam.sets[i] & fam.sets[j]) < 0) {
        rep.closure = false;
        detail << "COR not closed under intersection at " << point_list(X, fam.sets[i]) << ","
               << point_list(X, fam.sets[j]) << "; ";
        break;
      }
  }

  // (3) basis: for every x and open U containing x there is V in COR with
  // x in V, V inside U. It is enough to test U = up[x], the smallest open
  // neighborhood of x.
  rep.basis = true;
  for (int x = 0; x < X.m; ++x) {
    bool found = false;
    for (PointSet v : fam.sets)
      if (has(v, x) && subset_of(v, X.up[x])) {
        found = true;
        break;
      }
    if (!found) {
      rep.basis = false;
      detail << "no COR basis set between " << X.names[x] << " and its up-set; ";
      break;
    }
  }

  // (4) every proper filter of (COR, subset) is COR_X(x) for some x. In a
  // finite meet-semilattice every filter is principal, so the principal
  // filters are exactly the candidates.
  rep.filter_point = true;
  {
    std::vector<std::vector<int>> point_filters(X.m);
    for (int x = 0; x < X.m; ++x)
      for (int i = 0; i < fam.size(); ++i)
        if (has(fam.sets[i], x)) point_filters[x].push_back(i);
    for (int g = 0; g < fam.size() && rep.filter_point; ++g) {
      if (fam.sets[g] == 0) continue;  // filters are proper: bottom excluded
      std::vector<int> filt;
      for (int i = 0; i < fam.size(); ++i)
        if (subset_of(fam.sets[g], fam.sets[i])) filt.push_back(i);
      bool matched = false;
      for (int x = 0; x < X.m && !matched; ++x) matched = point_filters[x] == filt;
      if (!matched) {
        rep.filter_point = false;
        detail << "filter generated by " << point_list(X, fam.sets[g])
               << " is not a point filter; ";
      }
    }
  }

  // (5) perp separation.
  rep.perp_separation = true;
  for (int x = 0; x < X.m && rep.perp_separation; ++x)
    for (int y = 0; y < X.m; ++y) {
      if (!X.orth(x, y)) continue;
      bool found = false;
      for (PointSet u : fam.sets)
        if (has(u, x) && has(star(X, u), y)) {
          found = true;
          break;
        }
      if (!found) {
        rep.perp_separation = false;
        detail << "no COR set separates " << X.names[x] << " _|_ " << X.names[y] << "; ";
        break;
      }
    }

  rep.detail = detail.str();
  return rep;
}

CorAlgebra cor_algebra(const UvoSpace& X) {
  CorFamily fam = cor(X);
  const int n = fam.size();
  if (n > kMaxCarrier) throw CapExceeded("COR family exceeds 64 members");

  LatticeCandidate cand;
  cand.names.resize(n);
  cand.up.assign(n, 0);
  std::vector<int> oc(n);
  for (int i = 0; i < n; ++i) {
    cand.names[i] = point_list(X, fam.sets[i]);
    int st = fam.index_of(star(X, fam.sets[i]));
    if (st < 0)
      throw VerificationError("COR not closed under star; run validate_uvo for the witness");
    oc[i] = st;
    for (int j = 0; j < n; ++j)
      if (subset_of(fam.sets[i], fam.sets[j])) cand.up[i] |= bit(j);
  }
  cand.ocomp = std::move(oc);
  auto v = validate_ortholattice(cand);
  if (!v)
    throw VerificationError("COR algebra failed ortholattice validation: " + v.report.message());
  // The table meet must be literal intersection and the complement literal
  // star; anything else is a bug.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (fam.sets[v->meet(i, j)] != (fam.sets[i] & fam.sets[j]))
        throw VerificationError("COR meet is not intersection");
  return CorAlgebra{*v.value, std::move(fam)};
}

PointSet principal_points(const UvoSpace& X) {
  std::vector<PointSet> opens = all_up_sets(X);
  PointSet out = 0;
  for (int x = 0; x < X.m; ++x) {
    PointSet strictly_below = down_closure(X, bit(x)) & ~bit(x);
    for (PointSet u : opens)
      if (has(u, x) && (u & strictly_below) == 0) {
        out |= bit(x);
        break;
      }
  }
  return out;
}

Orthoframe pframe(const UvoSpace& X) {
  PointSet pr = principal_points(X);
  std::vector<int> keep;
  for_bits(pr, [&](int x) { keep.push_back(x); });
  Orthoframe F;
  F.m = static_cast<int>(keep.size());
  F.names.resize(F.m);
  F.perp.assign(F.m, 0);
  for (int i = 0; i < F.m; ++i) {
    F.names[i] = X.names[keep[i]];
    for (int j = 0; j < F.m; ++j)
      if (X.orth(keep[i], keep[j])) F.perp[i] |= bit(j);
  }
  return F;
}

RegularAlgebra regular_algebra(const Orthoframe& F, int point_cap) {
  if (F.m > point_cap)
    throw CapExceeded("regular-subset sweep capped at " + std::to_string(point_cap) + " points");
  std::vector<PointSet> sets;
  const Mask all = F.points();
  for (Mask y = 0;; ++y) {
    if (star(F, star(F, y)) == y) sets.push_back(y);
    if (y == all) break;
  }
  sort_family(sets);
  const int n = static_cast<int>(sets.size());
  if (n > kMaxCarrier) throw CapExceeded("regular-subset family exceeds 64 members");

  LatticeCandidate cand;
  cand.names.resize(n);
  cand.up.assign(n, 0);
  std::vector<int> oc(n);
  auto index_of = [&](PointSet s) {
    for (int i = 0; i < n; ++i)
      if (sets[i] == s) return i;
    return -1;
  };
  for (int i = 0; i < n; ++i) {
    std::ostringstream nm;
    nm << "r" << i;
    cand.names[i] = nm.str();
    int st = index_of(star(F, sets[i]));
    if (st < 0) throw VerificationError("regular family not closed under star");
    oc[i] = st;
    for (int j = 0; j < n; ++j)
      if (subset_of(sets[i], sets[j])) cand.up[i] |= bit(j);
  }
  cand.ocomp = std::move(oc);
  auto v = validate_ortholattice(cand);
  if (!v)
    throw VerificationError("regular-subset algebra failed validation: " + v.report.message());
  return RegularAlgebra{*v.value, std::move(sets)};
}

}  // namespace ortho
