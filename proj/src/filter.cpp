#include "ortho/filter.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ortho {

Filter principal_filter(const Lattice& L, int a) { return L.up[a]; }

std::optional<Filter> filter_generated(const Lattice& L, ElemSet S) {
  ElemSet u = S | bit(L.top);
  for (bool changed = true; changed;) {
    changed = false;
    ElemSet grown = u;
    for_bits(u, [&](int a) {
      grown |= L.up[a];
      for_bits(u, [&](int b) { grown |= bit(L.meet(a, b)); });
    });
    if (grown != u) {
      u = grown;
      changed = true;
    }
  }
  if (has(u, L.bot)) return std::nullopt;
  return u;
}

bool ortho_rel(const Ortholattice& L, Filter x, Filter y) {
  // exists a with ocomp(a) in x and a in y: map x through ocomp, meet y
  ElemSet oc_x = 0;
  for_bits(x, [&](int a) { oc_x |= bit(L.oc(a)); });
  return (oc_x & y) != 0;
}

std::vector<Filter> enumerate_proper_filters(const Lattice& L) {
  std::vector<Filter> found;
  std::set<Filter> seen;
  auto topf = filter_generated(L, 0);
  if (topf) {
    found.push_back(*topf);
    seen.insert(*topf);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    Filter f = found[i];
    for (int a = 0; a < L.n; ++a) {
      if (has(f, a)) continue;
      auto g = filter_generated(L, f | bit(a));
      if (g && seen.insert(*g).second) found.push_back(*g);
    }
  }

  // Self-test: every filter of a finite lattice is principal, so the closure
  // search must have produced exactly { up[a] | a != bot }.
  std::set<Filter> principal;
  for (int a = 0; a < L.n; ++a)
    if (a != L.bot) principal.insert(principal_filter(L, a));
  if (principal != seen)
    throw VerificationError("closure search and principal filters disagree");

  std::sort(found.begin(), found.end(), [&](Filter x, Filter y) {
    return L.meet_of(x) < L.meet_of(y);
  });
  return found;
}

namespace {

DualSpace build_dual(const Lattice& L, const Ortholattice* ortho) {
  DualSpace D;
  D.filters = enumerate_proper_filters(L);
  const int m = static_cast<int>(D.filters.size());
  D.space.m = m;
  D.space.names.resize(m);
  D.space.up.assign(m, 0);
  D.space.perp.assign(m, 0);
  D.generator.resize(m);
  D.point_of.assign(L.n, -1);
  for (int i = 0; i < m; ++i) {
    int g = L.meet_of(D.filters[i]);
    D.generator[i] = g;
    D.point_of[g] = i;
    D.space.names[i] = "^" + L.names[g];
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool incl = subset_of(D.filters[i], D.filters[j]);
      // Independent characterization: inclusion of principal filters is the
      // dual of the generator order. The two must agree.
      bool dual_order = L.leq(D.generator[j], D.generator[i]);
      if (incl != dual_order)
        throw VerificationError("filter inclusion disagrees with dual generator order");
      if (incl) D.space.up[i] |= bit(j);
    }
  if (ortho) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (ortho_rel(*ortho, D.filters[i], D.filters[j])) D.space.perp[i] |= bit(j);
  }
  D.basic_open.assign(L.n, 0);
  for (int a = 0; a < L.n; ++a)
    for (int i = 0; i < m; ++i)
      if (has(D.filters[i], a)) D.basic_open[a] |= bit(i);
  return D;
}

}  // namespace

DualSpace dual_space(const Ortholattice& L) { return build_dual(L, &L); }

DualSpace filter_poset(const Lattice& L) { return build_dual(L, nullptr); }

PointSet basic_open(const DualSpace& D, int a) { return D.basic_open[a]; }

SpectralReport verify_spectral(const UvoSpace& X, std::size_t open_cap) {
  SpectralReport rep;
  std::vector<PointSet> opens = all_up_sets(X, open_cap);

  // T0: distinct points are separated by some open.
  rep.t0 = true;
  for (int x = 0; x < X.m && rep.t0; ++x)
    for (int y = x + 1; y < X.m; ++y) {
      bool separated = false;
      for (PointSet u : opens)
        if (has(u, x) != has(u, y)) {
          separated = true;
          break;
        }
      if (!separated) {
        rep.t0 = false;
        break;
      }
    }

  // Compactness of every open, via the Alexandrov minimal-neighborhood
  // property: any open containing x contains the whole of up[x], so a cover
  // of an open admits the one-member subcover picked at each point. The
  // property is what the check verifies literally.
  rep.compact = true;
  for (PointSet u : opens)
    for (int x = 0; x < X.m && rep.compact; ++x)
      if (has(u, x) && !subset_of(X.up[x], u)) rep.compact = false;

  // Coherence: the compact opens (= all opens here) are intersection-closed
  // and form a basis.
  rep.coherent = true;
  std::set<PointSet> open_set(opens.begin(), opens.end());
  for (std::size_t i = 0; i < opens.size() && rep.coherent; ++i)
    for (std::size_t j = i; j < opens.size(); ++j)
      if (!open_set.count(opens[i] & opens[j])) {
        rep.coherent = false;
        break;
      }

  // Sobriety: every completely prime filter of the open-set lattice is a
  // point filter O_X(x). Filters of a finite lattice are principal, and the
  // principal filter of U is completely prime exactly when U cannot be
  // covered by the opens that fail to contain it.
  rep.sober = true;
  for (PointSet u : opens) {
    PointSet cover = 0;
    for (PointSet v : opens)
      if (!subset_of(u, v)) cover |= v;
    bool prime = !subset_of(u, cover);
    if (!prime) continue;
    bool is_point_filter = false;
    for (int x = 0; x < X.m && !is_point_filter; ++x)
      is_point_filter = (u == X.up[x]);
    if (!is_point_filter) {
      rep.sober = false;
      break;
    }
  }
  return rep;
}

CharMapResult char_map(const UvoSpace& X) {
  CharMapResult r{std::vector<int>(X.m, -1), cor_algebra(X), DualSpace{}};
  r.dual = dual_space(r.cor.algebra);
  if (r.dual.space.m != X.m)
    throw VerificationError("characterization map: point counts differ (not a UVO-space?)");
  for (int x = 0; x < X.m; ++x) {
    Filter corx = 0;  // { U in COR | x in U } as an element set of the algebra
    for (int i = 0; i < r.cor.family.size(); ++i)
      if (has(r.cor.family.sets[i], x)) corx |= bit(i);
    int p = -1;
    for (int q = 0; q < r.dual.space.m; ++q)
      if (r.dual.filters[q] == corx) {
        p = q;
        break;
      }
    if (p < 0) throw VerificationError("COR_X(x) is not a proper filter point");
    r.map[x] = p;
  }
  std::vector<int> hit(X.m, 0);
  for (int x = 0; x < X.m; ++x) hit[r.map[x]] = 1;
  for (int p = 0; p < X.m; ++p)
    if (!hit[p]) throw VerificationError("characterization map is not onto");
  for (int x = 0; x < X.m; ++x)
    for (int y = 0; y < X.m; ++y) {
      if (X.leq(x, y) != r.dual.space.leq(r.map[x], r.map[y]))
        throw VerificationError("characterization map is not an order isomorphism");
      if (X.orth(x, y) != r.dual.space.orth(r.map[x], r.map[y]))
        throw VerificationError("characterization map is not a perp isomorphism");
    }
  return r;
}

}  // namespace ortho
