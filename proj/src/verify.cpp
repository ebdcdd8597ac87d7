#include "ortho/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "ortho/catalog.hpp"
#include "ortho/dictionary.hpp"
#include "ortho/duality.hpp"
#include "ortho/filter.hpp"
#include "ortho/io.hpp"
#include "ortho/lattice.hpp"
#include "ortho/space.hpp"

namespace ortho {

namespace {

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const std::string& name : catalog_names()) out.push_back(*builtin(name));
  return out;
}

// The UVO-space of Figure 6/7: the filter spectrum of M3 with the
// pairwise orthogonality on its three maximal points.
UvoSpace m3_figure_space() {
  SpaceCandidate cand;
  cand.names = {"x", "y1", "y2", "y3"};
  std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {0, 3}};
  cand.up = closure_from_covers(4, covers);
  cand.perp.assign(4, 0);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) cand.perp[i] |= bit(j);
  auto v = validate_space(cand);
  if (!v) throw VerificationError("figure space invalid");
  return *v.value;
}

std::string names_of(const Lattice& L, const std::vector<int>& elems) {
  std::set<std::string> sorted;
  for (int e : elems) sorted.insert(L.names[e]);
  std::string out = "{";
  for (const auto& s : sorted) out += s + ",";
  if (out.size() > 1) out.pop_back();
  return out + "}";
}

using Runner = std::function<std::string()>;

CriterionResult run_criterion(const std::string& name, const Runner& body) {
  CriterionResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string criterion_spectrum_counts(const std::vector<CatalogEntry>& entries,
                                      const std::vector<Ortholattice>& enumerated) {
  for (const auto& e : entries) {
    DualSpace D = e.lattice_only() ? filter_poset(e.lattice) : dual_space(*e.ortho);
    if (D.space.m != e.lattice.n - 1)
      return e.name + ": expected " + std::to_string(e.lattice.n - 1) + " points, got " +
             std::to_string(D.space.m);
  }
  for (const auto& L : enumerated) {
    DualSpace D = dual_space(L);
    if (D.space.m != L.n - 1) return "enumerated lattice with wrong spectrum count";
  }
  // X+_{M3}: one minimum below three pairwise-incomparable maximal points.
  {
    DualSpace D = filter_poset(builtin("M3_lattice_only")->lattice);
    if (D.space.m != 4) return "X+_{M3} should have 4 points";
    int minima = 0, min_point = -1;
    for (int p = 0; p < 4; ++p)
      if (D.space.up[p] == D.space.points()) {
        ++minima;
        min_point = p;
      }
    if (minima != 1) return "X+_{M3} should have a unique minimum";
    for (int p = 0; p < 4; ++p)
      if (p != min_point)
        for (int q = 0; q < 4; ++q)
          if (q != min_point && p != q && D.space.leq(p, q))
            return "maximal points of X+_{M3} should be incomparable";
  }
  if (dual_space(builtin_ortho("O2")).space.m != 1) return "X+_{O2} should be a single point";
  return "";
}

std::string criterion_representation(const std::vector<CatalogEntry>& entries,
                                     const std::vector<Ortholattice>& enumerated) {
  for (const auto& e : entries)
    if (!e.lattice_only()) representation_hom(*e.ortho);  // throws on failure
  for (const auto& L : enumerated) representation_hom(L);
  return "";
}

std::string criterion_characterization(const std::vector<CatalogEntry>& entries,
                                       const std::vector<Ortholattice>& enumerated) {
  for (const auto& e : entries)
    if (!e.lattice_only()) char_map(dual_space(*e.ortho).space);
  for (const auto& L : enumerated) char_map(dual_space(L).space);
  return "";
}

std::string criterion_dual_equivalence(const std::vector<CatalogEntry>& entries) {
  std::vector<Ortholattice> small;
  std::vector<std::string> small_names;
  for (const auto& e : entries)
    if (!e.lattice_only() && e.lattice.n <= 6) {
      small.push_back(*e.ortho);
      small_names.push_back(e.name);
    }

  // identities map to identities
  for (const auto& L : small) {
    UvoMap idp = hom_to_uvomap(identity_hom(L));
    for (int i = 0; i < idp.source.m; ++i)
      if (idp.map[i] != i) return "identity hom does not dualize to the identity map";
  }

  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < small.size(); ++j) {
      auto homs = all_homs(small[i], small[j]);
      for (const auto& h : homs) {
        auto nat = check_naturality(h);
        if (!nat.holds)
          return "naturality square fails for a hom " + small_names[i] + " -> " + small_names[j];
        auto con = check_conaturality(hom_to_uvomap(h));
        if (!con.holds)
          return "conaturality square fails for the dual of a hom " + small_names[i] + " -> " +
                 small_names[j];
      }
    }

  // functoriality over composable pairs
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < small.size(); ++j)
      for (std::size_t k = 0; k < small.size(); ++k) {
        auto hs = all_homs(small[i], small[j]);
        auto gs = all_homs(small[j], small[k]);
        for (const auto& h : hs)
          for (const auto& g : gs) {
            UvoMap lhs = hom_to_uvomap(compose(g, h));
            UvoMap rhs = compose(hom_to_uvomap(h), hom_to_uvomap(g));
            if (lhs.map != rhs.map) return "(g o h)_+ differs from h_+ o g_+";
            LatticeHom lh = uvomap_to_hom(lhs);
            LatticeHom rh = compose(uvomap_to_hom(hom_to_uvomap(g)),
                                    uvomap_to_hom(hom_to_uvomap(h)));
            if (lh.map != rh.map) return "(f' o f)^+ differs from f^+ o f'^+";
          }
      }
  return "";
}

std::string criterion_dictionary(const std::vector<CatalogEntry>& entries) {
  // (a) meet/join formulas on every catalog dual space
  for (const auto& e : entries) {
    DualSpace D = e.lattice_only() ? filter_poset(e.lattice) : dual_space(*e.ortho);
    CorAlgebra A = cor_algebra(D.space);
    if (!meet_formula_check(D.space, A, 3)) return e.name + ": meet formula fails";
    if (!join_formula_check(D.space, A, 3)) return e.name + ": join formula fails";
  }
  // (b) atoms <-> isolated points
  for (const auto& e : entries) {
    if (e.lattice_only()) continue;
    AtomsBijection ab = atoms_bijection(*e.ortho);
    if (!ab.verified) return e.name + ": atoms bijection fails: " + ab.detail;
    if (is_atomless(*e.ortho) != (atoms(e.lattice) == 0))
      return e.name + ": atomless disagreement";
    if (e.lattice.n > 1 && !is_atomic(*e.ortho))
      return e.name + ": finite nondegenerate lattice should be atomic";
  }
  // (c) Figure 7: X+_{O2} + X+_{M3}
  {
    UvoSpace m3 = m3_figure_space();
    SpaceCandidate zc;
    zc.names = {"z"};
    zc.up = {bit(0)};
    zc.perp = {0};
    UvoSpace o2 = *validate_space(zc).value;  // X+_{O2}, named as in the figure
    SumSpace S = uvo_sum(o2, m3);
    if (S.space.m != 9) return "Figure 7 sum should have 9 points";
    if (S.space.cover_pairs().size() != 13)
      return "Figure 7 sum should have 13 specialization covers, got " +
             std::to_string(S.space.cover_pairs().size());
    // orthogonality = the figure's displayed pairs plus the left-right block
    auto orth_name = [&](const std::string& a, const std::string& b) {
      int x = -1, y = -1;
      for (int p = 0; p < S.space.m; ++p) {
        if (S.space.names[p] == a) x = p;
        if (S.space.names[p] == b) y = p;
      }
      return x >= 0 && y >= 0 && S.space.orth(x, y);
    };
    std::vector<std::pair<std::string, std::string>> expected = {
        {"y1", "y2"}, {"y2", "y3"}, {"y1", "y3"},                      // perp of X+_{M3}
        {"z", "x"}, {"z", "y1"}, {"z", "y2"}, {"z", "y3"},             // left-right block
        {"(z,y1)", "y2"}, {"(z,y1)", "y3"}, {"(z,y2)", "y1"},          // pair-right
        {"(z,y2)", "y3"}, {"(z,y3)", "y1"}, {"(z,y3)", "y2"},
    };
    std::size_t total = 0;
    for (int p = 0; p < S.space.m; ++p) total += popcount(S.space.perp[p]);
    if (total != 2 * expected.size()) return "Figure 7 sum has unexpected orthogonality size";
    for (auto& [a, b] : expected)
      if (!orth_name(a, b)) return "Figure 7 sum misses " + a + " ~ " + b;
  }
  // (d) product-sum homeomorphisms
  {
    ProductSumHomeo h1 = product_sum_homeo(builtin_ortho("O2"), builtin_ortho("TwoByTwo"));
    if (h1.sum.space.m != 7) return "O2 x 2x2 sum side should have 7 points";
    product_sum_homeo(builtin_ortho("TwoByTwo"), builtin_ortho("MO2"));
  }
  // (e) MacNeille both ways and canonical extension, isomorphic to L
  for (const auto& e : entries) {
    if (e.lattice_only()) continue;
    MacNeilleResult mac = macneille(*e.ortho);
    if (!find_isomorphism(mac.via_normals, *e.ortho))
      return e.name + ": MacNeille completion is not isomorphic to L";
    CanonicalExtensionResult ce = canonical_extension(*e.ortho);
    if (!find_isomorphism(ce.regular.algebra, *e.ortho))
      return e.name + ": canonical extension is not isomorphic to L";
  }
  // (f) congruence correspondence counts
  {
    CongCorrespondence c8 = congruence_correspondence(builtin_ortho("B8"));
    if (c8.congruences.size() != 8)
      return "B8 should have 8 congruences, got " + std::to_string(c8.congruences.size());
    CongCorrespondence mo2 = congruence_correspondence(builtin_ortho("MO2"));
    if (mo2.congruences.size() != 2)
      return "MO2 should have 2 congruences, got " + std::to_string(mo2.congruences.size());
  }
  return "";
}

std::string criterion_subset_calculus(const std::vector<CatalogEntry>& entries) {
  std::vector<UvoSpace> spaces;
  for (const auto& e : entries) {
    DualSpace D = e.lattice_only() ? filter_poset(e.lattice) : dual_space(*e.ortho);
    if (D.space.m <= 12) spaces.push_back(D.space);
  }
  spaces.push_back(m3_figure_space());
  for (const UvoSpace& X : spaces) {
    const Mask all = X.points();
    for (Mask y = 0;; ++y) {
      PointSet ss = star(X, star(X, y));
      if (ss != box_diamond(X, y)) return "double star and box-diamond disagree";
      if (star(X, ss) != star(X, y)) return "triple-star law fails";
      // antitone step: adding any point can only shrink the star
      for (int p = 0; p < X.m; ++p)
        if (!has(y, p) && !subset_of(star(X, y | bit(p)), star(X, y)))
          return "star is not antitone";
      if (y == all) break;
    }
  }
  return "";
}

std::string criterion_negative_controls() {
  // the 4-chain admits no orthocomplementation at all
  {
    LatticeCandidate chain;
    chain.names = {"0", "x", "y", "1"};
    chain.up = closure_from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
    for (int m0 = 0; m0 < 4; ++m0)
      for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2)
          for (int m3 = 0; m3 < 4; ++m3) {
            chain.ocomp = std::vector<int>{m0, m1, m2, m3};
            if (validate_ortholattice(chain))
              return "4-chain accepted an orthocomplement map";
          }
  }
  // O6 fails orthomodularity with witness (a, b')
  {
    Ortholattice o6 = builtin_ortho("O6");
    auto om = is_orthomodular(o6);
    if (om.holds) return "O6 should not be orthomodular";
    auto [a, b] = *om.witness;
    if (o6.names[a] != "a" || o6.names[b] != "b'")
      return "O6 orthomodularity witness should be (a,b'), got (" + o6.names[a] + "," +
             o6.names[b] + ")";
  }
  // O10 yields both an M3 and an N5 witness
  {
    Ortholattice o10 = builtin_ortho("O10");
    auto m3 = find_m3(o10);
    if (!m3) return "O10 should contain an M3 sublattice";
    std::vector<int> m3w(m3->elems.begin(), m3->elems.end());
    if (names_of(o10, m3w) != "{0,1,a,a',d}")
      return "O10 M3 witness should be {0,a,a',d,1}, got " + names_of(o10, m3w);
    auto n5 = find_n5(o10);
    if (!n5) return "O10 should contain an N5 sublattice";
    std::vector<int> n5w(n5->elems.begin(), n5->elems.end());
    if (names_of(o10, n5w) != "{0,1,b,c',d}")
      return "O10 N5 witness should be {0,c',b,d,1}, got " + names_of(o10, n5w);
    if (is_distributive(o10).distributive) return "O10 should not be distributive";
  }
  return "";
}

}  // namespace

std::vector<CriterionResult> verify_all(int enum_max) {
  std::vector<CriterionResult> out;
  std::vector<CatalogEntry> entries = catalog_entries();
  std::vector<Ortholattice> enumerated = enumerate_ortholattices(enum_max);

  out.push_back(run_criterion("1 filter-spectrum counts and shapes", [&] {
    return criterion_spectrum_counts(entries, enumerated);
  }));
  out.push_back(run_criterion("2 representation theorem", [&] {
    return criterion_representation(entries, enumerated);
  }));
  out.push_back(run_criterion("3 characterization theorem", [&] {
    return criterion_characterization(entries, enumerated);
  }));
  out.push_back(run_criterion("4 dual equivalence (functors, naturality)", [&] {
    return criterion_dual_equivalence(entries);
  }));
  out.push_back(run_criterion("5 duality dictionary", [&] {
    return criterion_dictionary(entries);
  }));
  out.push_back(run_criterion("6 subset calculus", [&] {
    return criterion_subset_calculus(entries);
  }));
  out.push_back(run_criterion("7 negative controls", [&] {
    return criterion_negative_controls();
  }));
  return out;
}

}  // namespace ortho
