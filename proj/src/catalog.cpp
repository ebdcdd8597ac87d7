#include "ortho/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ortho {

namespace {

struct BuiltinSpec {
  const char* name;
  const char* note;
  std::vector<std::string> elems;
  std::vector<std::pair<const char*, const char*>> covers;
  std::vector<std::pair<const char*, const char*>> ocomp;  // empty = lattice only
};

const std::vector<BuiltinSpec>& builtin_table() {
  static const std::vector<BuiltinSpec> table = {
      {"O2", "two-element Boolean algebra", {"0", "1"}, {{"0", "1"}}, {{"0", "1"}}},
      {"TwoByTwo",
       "the 2x2 ortholattice",
       {"0", "a", "a'", "1"},
       {{"0", "a"}, {"0", "a'"}, {"a", "1"}, {"a'", "1"}},
       {{"0", "1"}, {"a", "a'"}}},
      {"B4",
       "Boolean algebra on two atoms",
       {"0", "p", "q", "1"},
       {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}},
       {{"0", "1"}, {"p", "q"}}},
      {"MO1",
       "horizontal sum with one complement pair (same shape as 2x2)",
       {"0", "a", "a'", "1"},
       {{"0", "a"}, {"0", "a'"}, {"a", "1"}, {"a'", "1"}},
       {{"0", "1"}, {"a", "a'"}}},
      {"MO2",
       "horizontal sum with two complement pairs",
       {"0", "a", "a'", "b", "b'", "1"},
       {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
        {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
       {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}},
      {"MO3",
       "horizontal sum with three complement pairs",
       {"0", "a", "a'", "b", "b'", "c", "c'", "1"},
       {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"}, {"0", "c"}, {"0", "c'"},
        {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}, {"c", "1"}, {"c'", "1"}},
       {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}}},
      {"O6",
       "the benzene ring",
       {"0", "a", "b", "a'", "b'", "1"},
       {{"0", "a"}, {"0", "b"}, {"a", "b'"}, {"b", "a'"}, {"b'", "1"}, {"a'", "1"}},
       {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}},
      {"O10",
       "ten-element non-distributive ortholattice",
       {"0", "d", "a", "a'", "b", "c'", "c", "b'", "d'", "1"},
       {{"0", "d"}, {"0", "a"}, {"0", "a'"}, {"0", "c'"}, {"0", "b'"}, {"0", "d'"},
        {"c'", "b"}, {"b'", "c"},
        {"d", "1"}, {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"c", "1"}, {"d'", "1"}},
       {{"0", "1"}, {"d", "d'"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}}},
      {"B8",
       "Boolean algebra on three atoms",
       {"0", "p", "q", "r", "pq", "pr", "qr", "1"},
       {{"0", "p"}, {"0", "q"}, {"0", "r"},
        {"p", "pq"}, {"p", "pr"}, {"q", "pq"}, {"q", "qr"}, {"r", "pr"}, {"r", "qr"},
        {"pq", "1"}, {"pr", "1"}, {"qr", "1"}},
       {{"0", "1"}, {"p", "qr"}, {"q", "pr"}, {"r", "pq"}}},
      {"M3_lattice_only",
       "diamond M3; admits no orthocomplementation, kept as a plain lattice",
       {"0", "a", "b", "c", "1"},
       {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
       {}},
      {"N5_lattice_only",
       "pentagon N5, plain lattice",
       {"0", "c", "a", "b", "1"},
       {{"0", "c"}, {"c", "a"}, {"a", "1"}, {"0", "b"}, {"b", "1"}},
       {}},
  };
  return table;
}

CatalogEntry make_entry(const BuiltinSpec& spec) {
  const int n = static_cast<int>(spec.elems.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[spec.elems[i]] = i;

  LatticeCandidate cand;
  cand.names = spec.elems;
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : spec.covers) covers.emplace_back(index.at(a), index.at(b));
  cand.up = closure_from_covers(n, covers);

  CatalogEntry entry;
  entry.name = spec.name;
  entry.note = spec.note;
  if (!spec.ocomp.empty()) {
    std::vector<int> oc(n, -1);
    for (auto [a, b] : spec.ocomp) {
      oc[index.at(a)] = index.at(b);
      oc[index.at(b)] = index.at(a);
    }
    cand.ocomp = std::move(oc);
    auto v = validate_ortholattice(cand);
    if (!v) throw VerificationError(std::string("catalog entry ") + spec.name +
                                    " failed validation: " + v.report.message());
    entry.ortho = *v.value;
    entry.lattice = *v.value;
  } else {
    auto v = validate_lattice(cand);
    if (!v) throw VerificationError(std::string("catalog entry ") + spec.name +
                                    " failed validation: " + v.report.message());
    entry.lattice = *v.value;
  }
  return entry;
}

CatalogEntry make_b16() {
  // Subsets of {p,q,r,s} ordered by (cardinality, mask value).
  const char* atoms = "pqrs";
  std::vector<int> masks;
  for (int m = 0; m < 16; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    int pa = popcount(static_cast<Mask>(a)), pb = popcount(static_cast<Mask>(b));
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> pos(16);
  for (int i = 0; i < 16; ++i) pos[masks[i]] = i;

  LatticeCandidate cand;
  cand.names.resize(16);
  cand.up.assign(16, 0);
  std::vector<int> oc(16);
  for (int i = 0; i < 16; ++i) {
    int mi = masks[i];
    std::string nm;
    if (mi == 0) nm = "0";
    else if (mi == 15) nm = "1";
    else
      for (int b = 0; b < 4; ++b)
        if (mi & (1 << b)) nm += atoms[b];
    cand.names[i] = nm;
    oc[i] = pos[15 ^ mi];
    for (int j = 0; j < 16; ++j)
      if ((mi & masks[j]) == mi) cand.up[i] |= bit(j);
  }
  cand.ocomp = std::move(oc);
  auto v = validate_ortholattice(cand);
  if (!v) throw VerificationError("catalog entry B16 failed validation");
  CatalogEntry entry;
  entry.name = "B16";
  entry.note = "Boolean algebra on four atoms";
  entry.ortho = *v.value;
  entry.lattice = *v.value;
  return entry;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "O2", "TwoByTwo", "B4", "MO1", "MO2", "MO3", "O6", "O10", "B8", "B16",
      "M3_lattice_only", "N5_lattice_only"};
  return names;
}

std::optional<CatalogEntry> builtin(const std::string& name) {
  if (name == "B16") return make_b16();
  for (const BuiltinSpec& spec : builtin_table())
    if (name == spec.name) return make_entry(spec);
  return std::nullopt;
}

Ortholattice builtin_ortho(const std::string& name) {
  auto entry = builtin(name);
  if (!entry) throw std::invalid_argument("unknown catalog name: " + name);
  if (!entry->ortho)
    throw std::invalid_argument("catalog entry " + name + " is a plain lattice (no ocomp)");
  return *entry->ortho;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Invariant fingerprint for bucketing before exhaustive isomorphism search.
std::vector<int> lattice_fingerprint(const Lattice& L) {
  std::vector<int> fp{L.n, static_cast<int>(L.cover_pairs().size())};
  std::vector<int> profile;
  for (int a = 0; a < L.n; ++a)
    profile.push_back(popcount(L.down[a]) * 64 + popcount(L.up[a]));
  std::sort(profile.begin(), profile.end());
  fp.insert(fp.end(), profile.begin(), profile.end());
  return fp;
}

std::vector<int> ortho_fingerprint(const Ortholattice& L) {
  std::vector<int> fp = lattice_fingerprint(L);
  std::vector<int> pairs;
  for (int a = 0; a < L.n; ++a) pairs.push_back(popcount(L.down[a]) * 64 + popcount(L.down[L.oc(a)]));
  std::sort(pairs.begin(), pairs.end());
  fp.insert(fp.end(), pairs.begin(), pairs.end());
  return fp;
}

// All bounded lattices on n labeled elements (bot = 0, top = n-1, identity
// is a linear extension), as up-row vectors. Meets are pruned per prefix:
// a new element never sits below an old one, so the meet of two existing
// elements can only be an existing element.
void labeled_lattices(int n, std::vector<std::vector<ElemSet>>& out) {
  if (n == 1) {
    out.push_back({bit(0)});
    return;
  }
  const int middles = n - 2;
  // down[i] over {0(bot), 1..middles} as masks, self included
  std::vector<Mask> down(middles + 1);
  down[0] = bit(0);

  std::function<void(int)> rec = [&](int k) {
    if (k == middles + 1) {
      // add the top, build the full order, check joins
      std::vector<ElemSet> up(n, 0);
      for (int i = 0; i <= middles; ++i)
        for (int j = 0; j <= middles; ++j)
          if (has(down[j], i)) up[i] |= bit(j);
      for (int i = 0; i < n; ++i) up[i] |= bit(n - 1);
      up[n - 1] = bit(n - 1);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Mask uppers = up[i] & up[j];
          int least = -1;
          for_bits(uppers, [&](int c) {
            if (least < 0 && subset_of(uppers, up[c])) least = c;
          });
          if (least < 0) return;  // not a lattice
        }
      out.push_back(std::move(up));
      return;
    }
    // choose the strict down-set of middle k among {0} union {1..k-1}:
    // it must be down-closed and it always contains bot
    Mask pool = 0;
    for (int i = 1; i < k; ++i) pool |= bit(i);
    for (Mask sub = pool;; sub = (sub - 1) & pool) {
      Mask d = sub | bit(0);
      bool down_closed = true;
      for_bits(sub, [&](int i) {
        if (!subset_of(down[i] & ~bit(i), d)) down_closed = false;
      });
      if (down_closed) {
        // meet prune: a new element never sits below an old one, so glbs
        // of old pairs are final; pairs with k must resolve inside the prefix
        down[k] = d | bit(k);
        bool ok = true;
        for (int j = 1; j < k && ok; ++j) {
          Mask lower = down[k] & down[j];
          int glb = -1;
          for_bits(lower, [&](int c) {
            if (glb < 0 && subset_of(lower, down[c])) glb = c;
          });
          if (glb < 0) ok = false;
        }
        if (ok) rec(k + 1);
        down[k] = 0;
      }
      if (sub == 0) break;
    }
  };
  rec(1);
}

// All order-reversing complement pairings on a validated lattice.
void ocomp_candidates(const Lattice& L, std::vector<std::vector<int>>& out) {
  std::vector<int> oc(L.n, -1);
  oc[L.bot] = L.top;
  oc[L.top] = L.bot;

  std::function<void()> rec = [&]() {
    int a = -1;
    for (int i = 0; i < L.n; ++i)
      if (oc[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      out.push_back(oc);
      return;
    }
    for (int b = a; b < L.n; ++b) {
      if (oc[b] >= 0) continue;
      if (a == b) continue;  // a middle fixed point fails a /\ a' = 0
      if (L.meet(a, b) != L.bot || L.join(a, b) != L.top) continue;
      if (popcount(L.down[a]) != popcount(L.up[b])) continue;
      if (popcount(L.up[a]) != popcount(L.down[b])) continue;
      bool consistent = true;
      for (int c = 0; c < L.n && consistent; ++c) {
        if (oc[c] < 0 || c == a || c == b) continue;
        if (L.leq(a, c) != L.leq(oc[c], b)) consistent = false;
        if (L.leq(c, a) != L.leq(b, oc[c])) consistent = false;
      }
      if (!consistent) continue;
      oc[a] = b;
      oc[b] = a;
      rec();
      oc[a] = -1;
      oc[b] = -1;
    }
  };
  rec();
}

}  // namespace

std::vector<Ortholattice> enumerate_ortholattices(int n_max) {
  if (n_max > 10) throw CapExceeded("ortholattice enumeration capped at 10 elements");
  std::vector<Ortholattice> result;
  std::map<std::vector<int>, std::vector<int>> buckets;  // fingerprint -> result indices

  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::vector<ElemSet>> orders;
    labeled_lattices(n, orders);

    // dedupe plain lattices first
    std::vector<Lattice> lattices;
    std::map<std::vector<int>, std::vector<int>> lat_buckets;
    for (auto& up : orders) {
      LatticeCandidate cand;
      cand.names.resize(n);
      for (int i = 0; i < n; ++i) cand.names[i] = "e" + std::to_string(i);
      cand.up = up;
      auto v = validate_lattice(cand);
      if (!v) continue;  // labeled_lattices should only emit lattices
      auto fp = lattice_fingerprint(*v.value);
      bool dup = false;
      for (int idx : lat_buckets[fp])
        if (find_lattice_isomorphism(lattices[idx], *v.value)) {
          dup = true;
          break;
        }
      if (!dup) {
        lat_buckets[fp].push_back(static_cast<int>(lattices.size()));
        lattices.push_back(*v.value);
      }
    }

    for (const Lattice& L : lattices) {
      std::vector<std::vector<int>> ocs;
      ocomp_candidates(L, ocs);  // degenerate n = 1 yields the identity pairing
      for (auto& oc : ocs) {
        LatticeCandidate cand;
        cand.names = L.names;
        cand.up = L.up;
        cand.ocomp = oc;
        auto v = validate_ortholattice(cand);
        if (!v) continue;
        auto fp = ortho_fingerprint(*v.value);
        bool dup = false;
        for (int idx : buckets[fp])
          if (find_isomorphism(result[idx], *v.value)) {
            dup = true;
            break;
          }
        if (!dup) {
          buckets[fp].push_back(static_cast<int>(result.size()));
          result.push_back(*v.value);
        }
      }
    }
  }
  return result;
}

std::vector<Ortholattice> enumerate_ortholattices_raw(int n_max) {
  if (n_max > 6) throw CapExceeded("raw enumeration oracle capped at 6 elements");
  std::vector<Ortholattice> result;

  for (int n = 1; n <= n_max; ++n) {
    if (n == 1) {
      LatticeCandidate cand;
      cand.names = {"e0"};
      cand.up = {bit(0)};
      cand.ocomp = std::vector<int>{0};
      result.push_back(*validate_ortholattice(cand).value);
      continue;
    }
    const int middles = n - 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= middles; ++i)
      for (int j = i + 1; j <= middles; ++j) pairs.emplace_back(i, j);

    for (Mask pick = 0; pick < (Mask{1} << pairs.size()); ++pick) {
      std::vector<std::pair<int, int>> covers;
      for (int i = 1; i <= middles; ++i) covers.emplace_back(0, i);
      for (int i = 0; i <= middles; ++i) covers.emplace_back(i, n - 1);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (has(pick, static_cast<int>(e))) covers.push_back(pairs[e]);

      LatticeCandidate cand;
      cand.names.resize(n);
      for (int i = 0; i < n; ++i) cand.names[i] = "e" + std::to_string(i);
      cand.up = closure_from_covers(n, covers);
      auto base = validate_lattice(cand);
      if (!base) continue;

      // every permutation that is an involution, as an ocomp candidate
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      do {
        bool involution = true;
        for (int i = 0; i < n && involution; ++i) involution = perm[perm[i]] == i;
        if (!involution) continue;
        cand.ocomp = perm;
        auto v = validate_ortholattice(cand);
        if (!v) continue;
        bool dup = false;
        for (const Ortholattice& seen : result)
          if (find_isomorphism(seen, *v.value)) {
            dup = true;
            break;
          }
        if (!dup) result.push_back(*v.value);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return result;
}

std::vector<LatticeHom> all_homs(const Ortholattice& L, const Ortholattice& M, int size_cap) {
  if (L.n > size_cap || M.n > size_cap)
    throw CapExceeded("hom enumeration capped at " + std::to_string(size_cap) + " elements");
  std::vector<LatticeHom> out;

  // assignment order: bot, top, atoms, then the rest
  std::vector<int> order;
  ElemSet placed = 0;
  auto place = [&](int a) {
    if (!has(placed, a)) {
      order.push_back(a);
      placed |= bit(a);
    }
  };
  place(L.bot);
  place(L.top);
  for_bits(atoms(L), place);
  for (int a = 0; a < L.n; ++a) place(a);

  std::vector<int> h(L.n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      LatticeHom hom{L, M, h};
      if (validate_hom(hom).ok) out.push_back(std::move(hom));
      return;
    }
    int a = order[k];
    for (int t = 0; t < M.n; ++t) {
      if (a == L.bot && t != M.bot) continue;
      if (a == L.top && t != M.top) continue;
      bool ok = true;
      for (int b = 0; b < L.n && ok; ++b) {
        if (h[b] < 0 || b == a) continue;
        if (L.leq(a, b) && !M.leq(t, h[b])) ok = false;
        if (L.leq(b, a) && !M.leq(h[b], t)) ok = false;
        if (L.oc(a) == b && M.oc(t) != h[b]) ok = false;
        int mab = L.meet(a, b);
        if (h[mab] >= 0 && mab != a && mab != b && M.meet(t, h[b]) != h[mab]) ok = false;
      }
      if (!ok) continue;
      h[a] = t;
      rec(k + 1);
      h[a] = -1;
    }
  };
  rec(0);
  return out;
}

}  // namespace ortho
