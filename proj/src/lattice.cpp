#include "ortho/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace ortho {

const char* law_name(Law law) {
  switch (law) {
    case Law::BadInput: return "BadInput";
    case Law::NotAPoset: return "NotAPoset";
    case Law::NotALattice: return "NotALattice";
    case Law::NotInvolutive: return "NotInvolutive";
    case Law::NotOrderReversing: return "NotOrderReversing";
    case Law::ComplementLawFails: return "ComplementLawFails";
    case Law::DeMorganFails: return "DeMorganFails";
    case Law::HomLawFails: return "HomLawFails";
    case Law::CongruenceLawFails: return "CongruenceLawFails";
  }
  return "?";
}

std::string ValidationReport::message() const { return message({}); }

std::string ValidationReport::message(const std::vector<std::string>& names) const {
  if (ok) return "ok";
  std::ostringstream os;
  os << law_name(law) << "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ",";
    int w = witness[i];
    if (w >= 0 && static_cast<std::size_t>(w) < names.size())
      os << names[w];
    else
      os << "#" << w;
  }
  os << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

namespace {

ValidationReport fail(Law law, std::vector<int> witness, std::string detail) {
  ValidationReport r;
  r.ok = false;
  r.law = law;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

int Lattice::meet_of(ElemSet s) const {
  int m = top;
  for_bits(s, [&](int a) { m = meet(m, a); });
  return m;
}

int Lattice::join_of(ElemSet s) const {
  int j = bot;
  for_bits(s, [&](int a) { j = join(j, a); });
  return j;
}

bool Lattice::covers(int a, int b) const {
  if (a == b || !leq(a, b)) return false;
  // strictly between a and b: up[a] & down[b] minus the endpoints
  Mask between = up[a] & down[b] & ~bit(a) & ~bit(b);
  return between == 0;
}

std::vector<std::pair<int, int>> Lattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<ElemSet> closure_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<ElemSet> up(n);
  for (int a = 0; a < n; ++a) up[a] = bit(a);
  for (auto [a, b] : covers) up[a] |= bit(b);
  // Warshall over the bit rows.
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      Mask row = up[a];
      for_bits(row, [&](int b) { row |= up[b]; });
      if (row != up[a]) {
        up[a] = row;
        changed = true;
      }
    }
  }
  return up;
}

Validated<Lattice> validate_lattice(const LatticeCandidate& cand) {
  Validated<Lattice> out;
  const int n = static_cast<int>(cand.names.size());
  if (n < 1 || n > kMaxCarrier) {
    out.report = fail(Law::BadInput, {}, "carrier size must be between 1 and 64");
    return out;
  }
  if (static_cast<int>(cand.up.size()) != n) {
    out.report = fail(Law::BadInput, {}, "order relation has wrong row count");
    return out;
  }
  const Mask all = full_mask(n);
  for (int a = 0; a < n; ++a) {
    if (cand.up[a] & ~all) {
      out.report = fail(Law::BadInput, {a}, "order row references an element out of range");
      return out;
    }
  }

  Lattice L;
  L.n = n;
  L.names = cand.names;
  L.up = cand.up;

  for (int a = 0; a < n; ++a)
    if (!has(L.up[a], a)) {
      out.report = fail(Law::NotAPoset, {a}, "order is not reflexive");
      return out;
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (has(L.up[a], b) && has(L.up[b], a)) {
        out.report = fail(Law::NotAPoset, {a, b}, "order is not antisymmetric");
        return out;
      }
  for (int a = 0; a < n; ++a) {
    ValidationReport bad;
    bool broken = false;
    for_bits(L.up[a], [&](int b) {
      if (!broken && !subset_of(L.up[b], L.up[a])) {
        int c = first_bit(L.up[b] & ~L.up[a]);
        bad = fail(Law::NotAPoset, {a, b, c}, "order is not transitive");
        broken = true;
      }
    });
    if (broken) {
      out.report = bad;
      return out;
    }
  }

  L.down.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for_bits(L.up[a], [&](int b) { L.down[b] |= bit(a); });

  L.meet_tab.assign(static_cast<std::size_t>(n) * n, 0);
  L.join_tab.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Mask lower = L.down[a] & L.down[b];
      int g = -1;
      for_bits(lower, [&](int c) {
        if (g < 0 && subset_of(lower, L.down[c])) g = c;
      });
      if (g < 0) {
        out.report = fail(Law::NotALattice, {a, b}, "pair has no greatest lower bound");
        return out;
      }
      Mask upper = L.up[a] & L.up[b];
      int j = -1;
      for_bits(upper, [&](int c) {
        if (j < 0 && subset_of(upper, L.up[c])) j = c;
      });
      if (j < 0) {
        out.report = fail(Law::NotALattice, {a, b}, "pair has no least upper bound");
        return out;
      }
      L.meet_tab[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>(g);
      L.join_tab[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>(j);
    }
  }

  // A finite lattice has global bounds: fold the tables.
  int bot = 0, top = 0;
  for (int a = 1; a < n; ++a) {
    bot = L.meet(bot, a);
    top = L.join(top, a);
  }
  L.bot = bot;
  L.top = top;

  out.value = std::move(L);
  return out;
}

Validated<Ortholattice> validate_ortholattice(const LatticeCandidate& cand) {
  Validated<Ortholattice> out;
  auto base = validate_lattice(cand);
  if (!base) {
    out.report = base.report;
    return out;
  }
  if (!cand.ocomp) {
    out.report = fail(Law::BadInput, {}, "orthocomplement map missing");
    return out;
  }
  Ortholattice L;
  static_cast<Lattice&>(L) = std::move(*base.value);
  L.ocomp = *cand.ocomp;

  const int n = L.n;
  if (static_cast<int>(L.ocomp.size()) != n) {
    out.report = fail(Law::BadInput, {}, "orthocomplement map has wrong size");
    return out;
  }
  for (int a = 0; a < n; ++a)
    if (L.ocomp[a] < 0 || L.ocomp[a] >= n) {
      out.report = fail(Law::BadInput, {a}, "orthocomplement image out of range");
      return out;
    }
  for (int a = 0; a < n; ++a)
    if (L.oc(L.oc(a)) != a) {
      out.report = fail(Law::NotInvolutive, {a}, "ocomp(ocomp(a)) != a");
      return out;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(a, b) && !L.leq(L.oc(b), L.oc(a))) {
        out.report = fail(Law::NotOrderReversing, {a, b}, "a <= b but not b' <= a'");
        return out;
      }
  for (int a = 0; a < n; ++a) {
    if (L.meet(a, L.oc(a)) != L.bot) {
      std::string d = "meet(" + L.names[a] + "," + L.names[L.oc(a)] + ") = " +
                      L.names[L.meet(a, L.oc(a))] + ", expected " + L.names[L.bot];
      out.report = fail(Law::ComplementLawFails, {a}, d);
      return out;
    }
    if (L.join(a, L.oc(a)) != L.top) {
      out.report = fail(Law::ComplementLawFails, {a}, "a \\/ a' != 1");
      return out;
    }
  }
  // De Morgan identities are derivable but checked, not assumed.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (L.oc(L.meet(a, b)) != L.join(L.oc(a), L.oc(b)) ||
          L.oc(L.join(a, b)) != L.meet(L.oc(a), L.oc(b))) {
        out.report = fail(Law::DeMorganFails, {a, b}, "");
        return out;
      }
    }

  out.value = std::move(L);
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicates

namespace {

bool incomparable(const Lattice& L, int a, int b) { return !L.leq(a, b) && !L.leq(b, a); }

}  // namespace

std::optional<SublatticeWitness> find_m3(const Lattice& L) {
  for (int x = 0; x < L.n; ++x)
    for (int y = x + 1; y < L.n; ++y) {
      if (!incomparable(L, x, y)) continue;
      int m = L.meet(x, y), j = L.join(x, y);
      for (int z = y + 1; z < L.n; ++z) {
        if (!incomparable(L, x, z) || !incomparable(L, y, z)) continue;
        if (L.meet(x, z) == m && L.meet(y, z) == m && L.join(x, z) == j && L.join(y, z) == j)
          return SublatticeWitness{SublatticeKind::M3, {m, x, y, z, j}};
      }
    }
  return std::nullopt;
}

std::optional<SublatticeWitness> find_n5(const Lattice& L) {
  // Sorted index triples in lexicographic order; within a triple, the
  // chain pair and side element are forced by comparability.
  for (int i = 0; i < L.n; ++i)
    for (int j = i + 1; j < L.n; ++j)
      for (int k = j + 1; k < L.n; ++k) {
        const int t[3] = {i, j, k};
        for (int c = 0; c < 3; ++c) {
          int side = t[c], u = t[(c + 1) % 3], v = t[(c + 2) % 3];
          int p, q;
          if (L.leq(u, v)) {
            p = u;
            q = v;
          } else if (L.leq(v, u)) {
            p = v;
            q = u;
          } else {
            continue;
          }
          if (!incomparable(L, side, p) || !incomparable(L, side, q)) continue;
          int m = L.meet(p, side), jo = L.join(p, side);
          if (L.meet(q, side) != m || L.join(q, side) != jo) continue;
          return SublatticeWitness{SublatticeKind::N5, {m, p, q, side, jo}};
        }
      }
  return std::nullopt;
}

DistributivityResult is_distributive(const Lattice& L) {
  if (auto w = find_m3(L)) return {false, w};
  if (auto w = find_n5(L)) return {false, w};
  return {true, std::nullopt};
}

bool distributive_by_law(const Lattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      for (int c = 0; c < L.n; ++c) {
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) return false;
      }
  return true;
}

OrthomodularResult is_orthomodular(const Ortholattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (!L.leq(a, b)) continue;
      if (L.join(a, L.meet(b, L.oc(a))) != b) return {false, std::make_pair(a, b)};
    }
  return {true, std::nullopt};
}

ModularResult is_modular(const Lattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (!L.leq(a, b)) continue;
      for (int x = 0; x < L.n; ++x)
        if (L.join(a, L.meet(x, b)) != L.meet(L.join(a, x), b))
          return {false, std::array<int, 3>{a, x, b}};
    }
  return {true, std::nullopt};
}

ElemSet atoms(const Lattice& L) {
  ElemSet out = 0;
  for (int a = 0; a < L.n; ++a)
    if (a != L.bot && L.down[a] == (bit(a) | bit(L.bot))) out |= bit(a);
  return out;
}

ElemSet coatoms(const Lattice& L) {
  ElemSet out = 0;
  for (int a = 0; a < L.n; ++a)
    if (a != L.top && L.up[a] == (bit(a) | bit(L.top))) out |= bit(a);
  return out;
}

Ortholattice product(const Ortholattice& L, const Ortholattice& M) {
  const int n = L.n * M.n;
  if (n > kMaxCarrier) throw CapExceeded("product carrier exceeds 64 elements");
  LatticeCandidate cand;
  cand.names.resize(n);
  cand.up.assign(n, 0);
  std::vector<int> oc(n);
  auto ix = [&](int a, int b) { return a * M.n + b; };
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < M.n; ++b) {
      cand.names[ix(a, b)] = "(" + L.names[a] + "," + M.names[b] + ")";
      oc[ix(a, b)] = ix(L.oc(a), M.oc(b));
      for (int c = 0; c < L.n; ++c)
        for (int d = 0; d < M.n; ++d)
          if (L.leq(a, c) && M.leq(b, d)) cand.up[ix(a, b)] |= bit(ix(c, d));
    }
  cand.ocomp = std::move(oc);
  auto v = validate_ortholattice(cand);
  if (!v) throw VerificationError("product failed validation: " + v.report.message());
  return *v.value;
}

int sasaki_hook(const Ortholattice& L, int a, int b) {
  return L.join(L.oc(a), L.meet(b, a));
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

struct IsoSearch {
  const Lattice& L;
  const Lattice& M;
  const std::vector<int>* locomp;  // nullptr for plain lattice search
  const std::vector<int>* mocomp;
  std::vector<int> map, used;

  bool compatible(int a, int t) const {
    if (popcount(L.up[a]) != popcount(M.up[t])) return false;
    if (popcount(L.down[a]) != popcount(M.down[t])) return false;
    for (int b = 0; b < a; ++b) {
      if (L.leq(a, b) != M.leq(t, map[b])) return false;
      if (L.leq(b, a) != M.leq(map[b], t)) return false;
    }
    if (locomp) {
      int ac = (*locomp)[a];
      if (ac < a && map[ac] >= 0 && (*mocomp)[t] != map[ac]) return false;
      if (ac == a && (*mocomp)[t] != t) return false;
    }
    return true;
  }

  bool run(int a) {
    if (a == L.n) return true;
    for (int t = 0; t < M.n; ++t) {
      if (used[t]) continue;
      if (!compatible(a, t)) continue;
      map[a] = t;
      used[t] = 1;
      if (run(a + 1)) return true;
      used[t] = 0;
      map[a] = -1;
    }
    return false;
  }
};

std::optional<std::vector<int>> iso_search(const Lattice& L, const Lattice& M,
                                           const std::vector<int>* lo, const std::vector<int>* mo) {
  if (L.n != M.n) return std::nullopt;
  IsoSearch s{L, M, lo, mo, std::vector<int>(L.n, -1), std::vector<int>(L.n, 0)};
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Ortholattice& L, const Ortholattice& M) {
  return iso_search(L, M, &L.ocomp, &M.ocomp);
}

std::optional<std::vector<int>> find_lattice_isomorphism(const Lattice& L, const Lattice& M) {
  return iso_search(L, M, nullptr, nullptr);
}

// ---------------------------------------------------------------------------
// Homomorphisms

ValidationReport validate_hom(const LatticeHom& h) {
  const Ortholattice& L = h.source;
  const Ortholattice& M = h.target;
  if (static_cast<int>(h.map.size()) != L.n)
    return fail(Law::BadInput, {}, "map has wrong size");
  for (int a = 0; a < L.n; ++a)
    if (h.map[a] < 0 || h.map[a] >= M.n)
      return fail(Law::BadInput, {a}, "image out of range");
  if (h.map[L.bot] != M.bot) return fail(Law::HomLawFails, {L.bot}, "bottom not preserved");
  for (int a = 0; a < L.n; ++a)
    if (h.map[L.oc(a)] != M.oc(h.map[a]))
      return fail(Law::HomLawFails, {a}, "orthocomplement not preserved");
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (h.map[L.meet(a, b)] != M.meet(h.map[a], h.map[b]))
        return fail(Law::HomLawFails, {a, b}, "meet not preserved");
  ValidationReport ok;
  return ok;
}

LatticeHom identity_hom(const Ortholattice& L) {
  LatticeHom h{L, L, std::vector<int>(L.n)};
  for (int a = 0; a < L.n; ++a) h.map[a] = a;
  return h;
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  LatticeHom h{f.source, g.target, std::vector<int>(f.source.n)};
  for (int a = 0; a < f.source.n; ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

bool hom_injective(const LatticeHom& h) {
  std::set<int> seen(h.map.begin(), h.map.end());
  return static_cast<int>(seen.size()) == h.source.n;
}

bool hom_surjective(const LatticeHom& h) {
  std::set<int> seen(h.map.begin(), h.map.end());
  return static_cast<int>(seen.size()) == h.target.n;
}

// ---------------------------------------------------------------------------
// Congruences

namespace {

Congruence canonical_partition(std::vector<int> raw) {
  Congruence theta;
  theta.cls.assign(raw.size(), -1);
  std::map<int, int> renum;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    auto [it, fresh] = renum.emplace(raw[a], theta.classes);
    if (fresh) ++theta.classes;
    theta.cls[a] = it->second;
  }
  return theta;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Congruence identity_congruence(int n) {
  std::vector<int> raw(n);
  for (int a = 0; a < n; ++a) raw[a] = a;
  return canonical_partition(std::move(raw));
}

Congruence total_congruence(int n) { return canonical_partition(std::vector<int>(n, 0)); }

ValidationReport validate_congruence(const Ortholattice& L, const Congruence& theta) {
  if (static_cast<int>(theta.cls.size()) != L.n)
    return fail(Law::BadInput, {}, "partition has wrong size");
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (!theta.same(a, b)) continue;
      if (!theta.same(L.oc(a), L.oc(b)))
        return fail(Law::CongruenceLawFails, {a, b}, "ocomp breaks the partition");
      for (int c = 0; c < L.n; ++c)
        if (!theta.same(L.meet(a, c), L.meet(b, c)))
          return fail(Law::CongruenceLawFails, {a, b, c}, "meet breaks the partition");
    }
  ValidationReport ok;
  return ok;
}

Congruence congruence_generated(const Ortholattice& L,
                                const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(L.n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < L.n; ++a)
      for (int b = a + 1; b < L.n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        if (uf.unite(L.oc(a), L.oc(b))) changed = true;
        for (int c = 0; c < L.n; ++c) {
          if (uf.unite(L.meet(a, c), L.meet(b, c))) changed = true;
          if (uf.unite(L.join(a, c), L.join(b, c))) changed = true;
        }
      }
  }
  std::vector<int> raw(L.n);
  for (int a = 0; a < L.n; ++a) raw[a] = uf.find(a);
  return canonical_partition(std::move(raw));
}

std::vector<Congruence> congruences_bruteforce(const Ortholattice& L, int size_cap) {
  if (L.n > size_cap)
    throw CapExceeded("congruence enumeration capped at " + std::to_string(size_cap) +
                      " elements");
  std::set<std::vector<int>> seen;
  std::vector<Congruence> todo{identity_congruence(L.n)};
  seen.insert(todo.back().cls);
  for (std::size_t next = 0; next < todo.size(); ++next) {
    Congruence theta = todo[next];
    for (int a = 0; a < L.n; ++a)
      for (int b = a + 1; b < L.n; ++b) {
        if (theta.same(a, b)) continue;
        std::vector<std::pair<int, int>> gens{{a, b}};
        for (int c = 0; c < L.n; ++c)
          for (int d = c + 1; d < L.n; ++d)
            if (theta.same(c, d)) gens.emplace_back(c, d);
        Congruence bigger = congruence_generated(L, gens);
        if (seen.insert(bigger.cls).second) todo.push_back(bigger);
      }
  }
  std::sort(todo.begin(), todo.end(),
            [](const Congruence& x, const Congruence& y) { return x.cls < y.cls; });
  return todo;
}

Quotient quotient(const Ortholattice& L, const Congruence& theta) {
  auto rep = validate_congruence(L, theta);
  if (!rep.ok) throw VerificationError("quotient by a non-congruence: " + rep.message(L.names));
  const int m = theta.classes;
  // class representative: smallest member
  std::vector<int> repr(m, -1);
  for (int a = 0; a < L.n; ++a)
    if (repr[theta.cls[a]] < 0) repr[theta.cls[a]] = a;

  LatticeCandidate cand;
  cand.names.resize(m);
  cand.up.assign(m, 0);
  std::vector<int> oc(m);
  for (int i = 0; i < m; ++i) {
    cand.names[i] = "[" + L.names[repr[i]] + "]";
    oc[i] = theta.cls[L.oc(repr[i])];
    for (int j = 0; j < m; ++j) {
      // [x] <= [y] iff x /\ y ~ x
      if (theta.same(L.meet(repr[i], repr[j]), repr[i])) cand.up[i] |= bit(j);
    }
  }
  cand.ocomp = std::move(oc);
  auto v = validate_ortholattice(cand);
  if (!v) throw VerificationError("quotient failed validation: " + v.report.message());
  Quotient q{*v.value, LatticeHom{L, *v.value, std::vector<int>(L.n)}};
  for (int a = 0; a < L.n; ++a) q.projection.map[a] = theta.cls[a];
  auto hrep = validate_hom(q.projection);
  if (!hrep.ok) throw VerificationError("quotient projection is not a homomorphism");
  return q;
}

Subalgebra subalgebra_generated(const Ortholattice& L, ElemSet gens) {
  ElemSet s = gens | bit(L.bot) | bit(L.top);
  for (bool changed = true; changed;) {
    changed = false;
    ElemSet grown = s;
    for_bits(s, [&](int a) {
      grown |= bit(L.oc(a));
      for_bits(s, [&](int b) { grown |= bit(L.meet(a, b)); });
    });
    if (grown != s) {
      s = grown;
      changed = true;
    }
  }
  std::vector<int> elems;
  for_bits(s, [&](int a) { elems.push_back(a); });
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(L.n, -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;

  LatticeCandidate cand;
  cand.names.resize(m);
  cand.up.assign(m, 0);
  std::vector<int> oc(m);
  for (int i = 0; i < m; ++i) {
    cand.names[i] = L.names[elems[i]];
    oc[i] = pos[L.oc(elems[i])];
    for (int j = 0; j < m; ++j)
      if (L.leq(elems[i], elems[j])) cand.up[i] |= bit(j);
  }
  cand.ocomp = std::move(oc);
  auto v = validate_ortholattice(cand);
  if (!v) throw VerificationError("generated subalgebra failed validation: " + v.report.message());
  Subalgebra sub{*v.value, elems, LatticeHom{*v.value, L, elems}};
  auto hrep = validate_hom(sub.inclusion);
  if (!hrep.ok) throw VerificationError("subalgebra inclusion is not a homomorphism");
  return sub;
}

}  // namespace ortho
