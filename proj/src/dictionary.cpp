#include "ortho/dictionary.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ortho {

namespace {

// All index subsets of {0..n-1} with at most max_arity members.
template <typename F>
void for_subfamilies(int n, int max_arity, F&& visit) {
  std::vector<int> idx;
  // iterative: masks would overflow for n > 20 families; recurse instead
  struct Rec {
    int n, cap;
    F& visit;
    std::vector<int>& idx;
    void go(int from) {
      visit(idx);
      if (static_cast<int>(idx.size()) == cap) return;
      for (int i = from; i < n; ++i) {
        idx.push_back(i);
        go(i + 1);
        idx.pop_back();
      }
    }
  } rec{n, max_arity, visit, idx};
  rec.go(0);
}

}  // namespace

PointSet star_interior_star(const UvoSpace& X, PointSet S) {
  return star(X, interior(X, star(X, S)));
}

bool meet_formula_check(const UvoSpace& X, const CorAlgebra& A, int max_arity) {
  bool ok = true;
  for_subfamilies(A.family.size(), max_arity, [&](const std::vector<int>& idx) {
    if (!ok) return;
    int m = A.algebra.top;
    PointSet inter = X.points();
    for (int i : idx) {
      m = A.algebra.meet(m, i);
      inter &= A.family.sets[i];
    }
    if (A.family.sets[m] != interior(X, inter)) ok = false;
  });
  return ok;
}

bool join_formula_check(const UvoSpace& X, const CorAlgebra& A, int max_arity) {
  bool ok = true;
  for_subfamilies(A.family.size(), max_arity, [&](const std::vector<int>& idx) {
    if (!ok) return;
    int j = A.algebra.bot;
    PointSet uni = 0;
    for (int i : idx) {
      j = A.algebra.join(j, i);
      uni |= A.family.sets[i];
    }
    if (A.family.sets[j] != star_interior_star(X, uni)) ok = false;
  });
  return ok;
}

bool is_complete_uvo(const UvoSpace& X, int point_cap) {
  if (X.m > point_cap)
    throw CapExceeded("completeness sweep capped at " + std::to_string(point_cap) + " points");
  CorFamily fam = cor(X);
  for (PointSet u : all_up_sets(X))
    if (fam.index_of(star_interior_star(X, u)) < 0) return false;
  return true;
}

AtomsBijection atoms_bijection(const Ortholattice& L) {
  AtomsBijection out;
  DualSpace D = dual_space(L);
  for (int p = 0; p < D.space.m; ++p)
    if (D.space.up[p] == bit(p)) out.isolated |= bit(p);  // {p} open = p maximal

  ElemSet at = atoms(L);
  out.verified = true;
  for_bits(at, [&](int a) {
    int p = D.point_of[a];
    if (p < 0 || !has(out.isolated, p)) {
      out.verified = false;
      out.detail = "atom " + L.names[a] + " does not map to an isolated point";
      return;
    }
    out.pairs.emplace_back(a, p);
  });
  // injectivity is immediate (distinct atoms generate distinct filters);
  // surjectivity: every isolated point is the filter of an atom.
  for_bits(out.isolated, [&](int p) {
    if (!has(at, D.generator[p])) {
      out.verified = false;
      out.detail = "isolated point " + D.space.names[p] + " is not generated by an atom";
    }
  });
  if (popcount(at) != popcount(out.isolated)) out.verified = false;
  return out;
}

bool is_atomless(const Ortholattice& L) { return atoms_bijection(L).isolated == 0; }

bool is_atomic(const Ortholattice& L) {
  DualSpace D = dual_space(L);
  AtomsBijection ab = atoms_bijection(L);
  return down_closure(D.space, ab.isolated) == D.space.points();
}

// ---------------------------------------------------------------------------
// UVO-sum

SumSpace uvo_sum(const UvoSpace& X, const UvoSpace& Y) {
  SumSpace S;
  S.left_m = X.m;
  S.right_m = Y.m;
  const int m = X.m + Y.m + X.m * Y.m;
  if (m > kMaxCarrier) throw CapExceeded("UVO-sum exceeds 64 points");
  S.space.m = m;
  S.space.names.resize(m);
  S.space.up.assign(m, 0);
  S.space.perp.assign(m, 0);
  S.tags.resize(m);

  std::set<std::string> left_names(X.names.begin(), X.names.end());
  bool clash = false;
  for (const std::string& nm : Y.names) clash = clash || left_names.count(nm) > 0;
  for (int i = 0; i < X.m; ++i) {
    S.tags[S.left_point(i)] = SumPoint{SumPoint::Left, i, -1};
    S.space.names[S.left_point(i)] = clash ? "l:" + X.names[i] : X.names[i];
  }
  for (int j = 0; j < Y.m; ++j) {
    S.tags[S.right_point(j)] = SumPoint{SumPoint::Right, j, -1};
    S.space.names[S.right_point(j)] = clash ? "r:" + Y.names[j] : Y.names[j];
  }
  for (int i = 0; i < X.m; ++i)
    for (int j = 0; j < Y.m; ++j) {
      int p = S.pair_point(i, j);
      S.tags[p] = SumPoint{SumPoint::Pair, i, j};
      S.space.names[p] = "(" + X.names[i] + "," + Y.names[j] + ")";
    }

  auto add_perp = [&](int p, int q) {
    S.space.perp[p] |= bit(q);
    S.space.perp[q] |= bit(p);
  };
  for (int i = 0; i < X.m; ++i)
    for (int k = 0; k < X.m; ++k)
      if (X.orth(i, k)) add_perp(S.left_point(i), S.left_point(k));
  for (int j = 0; j < Y.m; ++j)
    for (int k = 0; k < Y.m; ++k)
      if (Y.orth(j, k)) add_perp(S.right_point(j), S.right_point(k));
  for (int i = 0; i < X.m; ++i)  // the full X x Y block
    for (int j = 0; j < Y.m; ++j) add_perp(S.left_point(i), S.right_point(j));
  for (int i = 0; i < X.m; ++i)
    for (int j = 0; j < Y.m; ++j) {
      int p = S.pair_point(i, j);
      for (int k = 0; k < X.m; ++k)
        if (X.orth(i, k)) add_perp(p, S.left_point(k));
      for (int k = 0; k < Y.m; ++k)
        if (Y.orth(j, k)) add_perp(p, S.right_point(k));
      for (int k = 0; k < X.m; ++k)
        for (int l = 0; l < Y.m; ++l)
          if (X.orth(i, k) && Y.orth(j, l)) add_perp(p, S.pair_point(k, l));
    }

  auto omega = [&](int p, int q) {
    const SumPoint& a = S.tags[p];
    const SumPoint& b = S.tags[q];
    if (a.kind == SumPoint::Left) return b.kind == SumPoint::Left && X.leq(a.i, b.i);
    if (a.kind == SumPoint::Right) return b.kind == SumPoint::Right && Y.leq(a.i, b.i);
    switch (b.kind) {
      case SumPoint::Left: return X.leq(a.i, b.i);
      case SumPoint::Right: return Y.leq(a.j, b.i);
      case SumPoint::Pair: return X.leq(a.i, b.i) && Y.leq(a.j, b.j);
    }
    return false;
  };
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (omega(p, q)) S.space.up[p] |= bit(q);

  // Cross-check: the order above must be the specialization order of the
  // topology generated by U + V + UxV over COR(X) x COR(Y).
  CorFamily cx = cor(X);
  CorFamily cy = cor(Y);
  std::vector<PointSet> subbasic;
  subbasic.reserve(static_cast<std::size_t>(cx.size()) * cy.size());
  for (PointSet u : cx.sets)
    for (PointSet v : cy.sets) {
      PointSet w = 0;
      for_bits(u, [&](int i) { w |= bit(S.left_point(i)); });
      for_bits(v, [&](int j) { w |= bit(S.right_point(j)); });
      for_bits(u, [&](int i) {
        for_bits(v, [&](int j) { w |= bit(S.pair_point(i, j)); });
      });
      subbasic.push_back(w);
    }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      bool topo = true;
      for (PointSet w : subbasic)
        if (has(w, p) && !has(w, q)) {
          topo = false;
          break;
        }
      if (topo != omega(p, q))
        throw VerificationError("sum specialization disagrees with the generated topology at " +
                                S.space.names[p] + " <= " + S.space.names[q]);
    }

  SpaceCandidate cand{S.space.names, S.space.up, S.space.perp};
  auto v = validate_space(cand);
  if (!v) throw VerificationError("UVO-sum reduct invalid: " + v.report.message());
  return S;
}

UvoMap coprojection_left(const SumSpace& S, const UvoSpace& X) {
  std::vector<int> f(X.m);
  for (int i = 0; i < X.m; ++i) f[i] = S.left_point(i);
  return make_uvo_map(X, S.space, std::move(f));
}

UvoMap coprojection_right(const SumSpace& S, const UvoSpace& Y) {
  std::vector<int> f(Y.m);
  for (int j = 0; j < Y.m; ++j) f[j] = S.right_point(j);
  return make_uvo_map(Y, S.space, std::move(f));
}

ProductSumHomeo product_sum_homeo(const Ortholattice& L, const Ortholattice& M) {
  ProductSumHomeo out{product(L, M), DualSpace{}, SumSpace{}, {}};
  out.prod_dual = dual_space(out.prod);
  DualSpace DL = dual_space(L);
  DualSpace DM = dual_space(M);
  out.sum = uvo_sum(DL.space, DM.space);

  if (out.prod_dual.space.m != out.sum.space.m)
    throw VerificationError("product dual and UVO-sum have different point counts");

  out.map.assign(out.prod_dual.space.m, -1);
  for (int p = 0; p < out.prod_dual.space.m; ++p) {
    int g = out.prod_dual.generator[p];
    int a = g / M.n, b = g % M.n;  // generator (a, b) in L x M
    if (b == M.bot)
      out.map[p] = out.sum.left_point(DL.point_of[a]);       // x_M improper
    else if (a == L.bot)
      out.map[p] = out.sum.right_point(DM.point_of[b]);      // x_L improper
    else
      out.map[p] = out.sum.pair_point(DL.point_of[a], DM.point_of[b]);
  }
  std::vector<int> hit(out.sum.space.m, 0);
  for (int v : out.map) hit[v] = 1;
  for (int v : hit)
    if (!v) throw VerificationError("product-sum case map is not onto");
  const UvoSpace& P = out.prod_dual.space;
  const UvoSpace& Q = out.sum.space;
  for (int p = 0; p < P.m; ++p)
    for (int q = 0; q < P.m; ++q) {
      if (P.leq(p, q) != Q.leq(out.map[p], out.map[q]))
        throw VerificationError("product-sum case map is not an order isomorphism");
      if (P.orth(p, q) != Q.orth(out.map[p], out.map[q]))
        throw VerificationError("product-sum case map is not a perp isomorphism");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Completions

namespace {

ElemSet upper_bounds(const Lattice& L, ElemSet A) {
  ElemSet u = L.carrier();
  for_bits(A, [&](int a) { u &= L.up[a]; });
  return u;
}

ElemSet lower_bounds(const Lattice& L, ElemSet A) {
  ElemSet l = L.carrier();
  for_bits(A, [&](int a) { l &= L.down[a]; });
  return l;
}

Orthoframe maclaren_frame(const Ortholattice& L, bool drop_bottom) {
  Orthoframe F;
  std::vector<int> elems;
  for (int a = 0; a < L.n; ++a)
    if (!drop_bottom || a != L.bot) elems.push_back(a);
  F.m = static_cast<int>(elems.size());
  F.names.resize(F.m);
  F.perp.assign(F.m, 0);
  for (int i = 0; i < F.m; ++i) {
    F.names[i] = L.names[elems[i]];
    for (int j = 0; j < F.m; ++j)
      if (L.leq(elems[i], L.oc(elems[j]))) F.perp[i] |= bit(j);  // a <|> b
  }
  return F;
}

void sort_sets(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

}  // namespace

MacNeilleResult macneille(const Ortholattice& L, int point_cap) {
  if (L.n > point_cap)
    throw CapExceeded("normal-subset sweep capped at " + std::to_string(point_cap) + " elements");
  MacNeilleResult out;

  for (Mask a = 0;; ++a) {
    if (lower_bounds(L, upper_bounds(L, a)) == a) out.normals.push_back(a);
    if (a == L.carrier()) break;
  }
  sort_sets(out.normals);

  // The normal subsets coincide with the <|>-regular subsets of the full
  // carrier frame: A^{<|><|>} = A^{ul}. Checked literally here.
  Orthoframe full = maclaren_frame(L, false);
  RegularAlgebra r_full = regular_algebra(full, point_cap);
  if (r_full.sets != out.normals)
    throw VerificationError("normal subsets and <|>-regular subsets disagree");

  // And dropping the bottom from every member gives the regular subsets of
  // the frame without 0 (MacLaren's restriction).
  Orthoframe reduced = maclaren_frame(L, true);
  RegularAlgebra r_reduced = regular_algebra(reduced, point_cap);
  {
    std::vector<Mask> transported;
    for (Mask a : out.normals) {
      Mask t = 0;
      for_bits(a, [&](int e) {
        if (e != L.bot) t |= bit(e > L.bot ? e - 1 : e);
      });
      transported.push_back(t);
    }
    sort_sets(transported);
    std::vector<Mask> reduced_sets = r_reduced.sets;
    sort_sets(reduced_sets);
    if (transported != reduced_sets)
      throw VerificationError("dropping bottom does not carry Norm(L) onto R(L-,<|>)");
  }

  // Algebra on the normal family: order by inclusion, complement by <|>-star.
  {
    const int n = static_cast<int>(out.normals.size());
    if (n > kMaxCarrier) throw CapExceeded("normal family exceeds 64 members");
    LatticeCandidate cand;
    cand.names.resize(n);
    cand.up.assign(n, 0);
    std::vector<int> oc(n);
    auto index_of = [&](Mask s) {
      for (int i = 0; i < n; ++i)
        if (out.normals[i] == s) return i;
      return -1;
    };
    for (int i = 0; i < n; ++i) {
      cand.names[i] = "n" + std::to_string(i);
      int st = index_of(star(full, out.normals[i]));
      if (st < 0) throw VerificationError("normal family not closed under <|>-star");
      oc[i] = st;
      for (int j = 0; j < n; ++j)
        if (subset_of(out.normals[i], out.normals[j])) cand.up[i] |= bit(j);
    }
    cand.ocomp = std::move(oc);
    auto v = validate_ortholattice(cand);
    if (!v) throw VerificationError("normal-subset algebra failed validation: " + v.report.message());
    out.via_normals = *v.value;
  }

  out.via_frame = regular_algebra(pframe(dual_space(L).space), point_cap);
  auto iso = find_isomorphism(out.via_normals, out.via_frame.algebra);
  if (!iso) throw VerificationError("the two MacNeille constructions are not isomorphic");
  out.iso = *iso;
  return out;
}

CanonicalExtensionResult canonical_extension(const Ortholattice& L, int check_arity) {
  DualSpace D = dual_space(L);
  Orthoframe F = frame_of(D.space);
  CanonicalExtensionResult out{regular_algebra(F), std::vector<int>(L.n, -1)};

  auto index_of = [&](PointSet s) {
    for (std::size_t i = 0; i < out.regular.sets.size(); ++i)
      if (out.regular.sets[i] == s) return static_cast<int>(i);
    return -1;
  };
  for (int a = 0; a < L.n; ++a) {
    out.embedding[a] = index_of(D.basic_open[a]);
    if (out.embedding[a] < 0)
      throw VerificationError("basic open a^ is not orthoregular in the dual frame");
  }
  {
    LatticeHom emb{L, out.regular.algebra, out.embedding};
    auto rep = validate_hom(emb);
    if (!rep.ok)
      throw VerificationError("canonical embedding is not a homomorphism: " + rep.message());
  }

  // Denseness: {u}** is the meet of the basic opens above it, and every
  // regular subset is the join of the point-stars below it.
  for (int u = 0; u < D.space.m; ++u) {
    PointSet uss = star(F, star(F, bit(u)));
    PointSet meet_of_opens = F.points();
    for (int a = 0; a < L.n; ++a)
      if (subset_of(uss, D.basic_open[a])) meet_of_opens &= D.basic_open[a];
    if (meet_of_opens != uss)
      throw VerificationError("{u}** is not a meet of embedded elements");
  }
  for (PointSet y : out.regular.sets) {
    PointSet uni = 0;
    for (int u = 0; u < D.space.m; ++u) {
      PointSet us = star(F, bit(u));
      if (subset_of(us, y)) uni |= us;
    }
    if (star(F, star(F, uni)) != y)
      throw VerificationError("a regular subset is not a join of point-stars");
  }

  // Compactness at finite scale: the space-side inequality holds exactly
  // when the lattice inequality does, for all small subfamilies.
  bool ok = true;
  for_subfamilies(L.n, check_arity, [&](const std::vector<int>& as) {
    if (!ok) return;
    PointSet inter = F.points();
    int meet_l = L.top;
    for (int a : as) {
      inter &= D.basic_open[a];
      meet_l = L.meet(meet_l, a);
    }
    for_subfamilies(L.n, check_arity, [&](const std::vector<int>& bs) {
      if (!ok) return;
      PointSet uni = 0;
      int join_l = L.bot;
      for (int b : bs) {
        uni |= D.basic_open[b];
        join_l = L.join(join_l, b);
      }
      bool space_side = subset_of(inter, star(F, star(F, uni)));
      bool lattice_side = L.leq(meet_l, join_l);
      if (space_side != lattice_side) ok = false;
    });
  });
  if (!ok) throw VerificationError("canonical-extension compactness equivalence fails");
  return out;
}

// ---------------------------------------------------------------------------
// Congruence correspondence

CongCorrespondence congruence_correspondence(const Ortholattice& L, int size_cap) {
  auto om = is_orthomodular(L);
  if (!om.holds)
    throw std::invalid_argument("congruence correspondence requires an orthomodular lattice");

  CongCorrespondence out;
  out.congruences = congruences_bruteforce(L, size_cap);
  DualSpace D = dual_space(L);
  const UvoSpace& X = D.space;

  // Literal generated-subframe reading, for the record.
  for (int p = 0; p < X.m; ++p) {
    PointSet s = X.up[p];
    bool closed = true;
    for_bits(s, [&](int x) {
      PointSet nonperp = X.points() & ~X.perp[x];
      if (!subset_of(nonperp, s)) closed = false;
    });
    if (closed) out.generated_subframes.push_back(s);
  }

  auto g_of = [&](PointSet s) {
    std::vector<int> raw(L.n);
    for (int a = 0; a < L.n; ++a) {
      PointSet trace = D.basic_open[a] & s;
      int cls = -1;
      for (int b = 0; b < a; ++b)
        if ((D.basic_open[b] & s) == trace) {
          cls = raw[b];
          break;
        }
      raw[a] = cls < 0 ? a : cls;
    }
    Congruence theta;
    theta.cls.assign(L.n, -1);
    for (int a = 0; a < L.n; ++a) {
      if (raw[a] == a) theta.cls[a] = theta.classes++;
      else theta.cls[a] = theta.cls[raw[a]];
    }
    return theta;
  };

  auto f_of = [&](const Congruence& theta) -> PointSet {
    ElemSet one_class = 0;
    for (int a = 0; a < L.n; ++a)
      if (theta.same(a, L.top)) one_class |= bit(a);
    if (has(one_class, L.bot)) return 0;  // total congruence: improper class
    int g = L.meet_of(one_class);
    if (principal_filter(L, g) != one_class)
      throw VerificationError("[1]_theta is not a filter");
    return X.up[D.point_of[g]];
  };

  for (const Congruence& theta : out.congruences) {
    PointSet s = f_of(theta);
    // g(f(theta)) must recover theta ...
    Congruence back = g_of(s);
    if (!(back == theta)) throw VerificationError("g(f(theta)) differs from theta");
    // ... and f(theta) must be the range of the dual of the quotient map.
    Quotient q = quotient(L, theta);
    UvoMap pi_plus = hom_to_uvomap(q.projection);
    PointSet ran = 0;
    for (int v : pi_plus.map) ran |= bit(v);
    if (ran != s) throw VerificationError("f(theta) is not the range of the quotient dual");
    out.space_side.push_back(s);
  }

  // Conversely, every candidate principal up-set whose trace kernel is a
  // congruence must already be in the f-image.
  std::set<PointSet> image(out.space_side.begin(), out.space_side.end());
  std::vector<PointSet> candidates{0};
  for (int p = 0; p < X.m; ++p) candidates.push_back(X.up[p]);
  for (PointSet s : candidates) {
    Congruence theta = g_of(s);
    if (!validate_congruence(L, theta).ok) continue;
    PointSet back = f_of(theta);
    if (back == s && !image.count(s))
      throw VerificationError("space-side member missed by the congruence enumeration");
  }
  return out;
}

}  // namespace ortho
