#include "ortho/duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ortho {

namespace {

PointSet preimage(const std::vector<int>& f, int source_m, PointSet target_set) {
  PointSet out = 0;
  for (int x = 0; x < source_m; ++x)
    if (has(target_set, f[x])) out |= bit(x);
  return out;
}

PointSet image(const std::vector<int>& f, PointSet source_set) {
  PointSet out = 0;
  for_bits(source_set, [&](int x) { out |= bit(f[x]); });
  return out;
}

bool same_structure(const Ortholattice& A, const Ortholattice& B) {
  return A.n == B.n && A.up == B.up && A.ocomp == B.ocomp;
}

}  // namespace

SpectralMapCheck is_spectral_map(const UvoSpace& X, const UvoSpace& Y,
                                 const std::vector<int>& f) {
  SpectralMapCheck out;
  for (int x = 0; x < X.m && out.by_order.holds; ++x)
    for (int y = 0; y < X.m; ++y)
      if (X.leq(x, y) && !Y.leq(f[x], f[y])) {
        out.by_order = {false, {x, y}};
        break;
      }
  CorFamily fam = cor(Y);
  for (PointSet u : fam.sets)
    if (!is_up_set(X, preimage(f, X.m, u))) {
      out.by_cor_preimage.holds = false;
      break;
    }
  return out;
}

PMorphismCheck is_p_morphism_nonperp(const UvoSpace& X, const UvoSpace& Y,
                                     const std::vector<int>& f) {
  PMorphismCheck out;
  for (int x = 0; x < X.m && out.forth.holds; ++x)
    for (int y = 0; y < X.m; ++y)
      if (!X.orth(x, y) && Y.orth(f[x], f[y])) {
        out.forth = {false, {x, y}};
        break;
      }
  for (int x = 0; x < X.m && out.back.holds; ++x)
    for (int yp = 0; yp < Y.m; ++yp) {
      if (Y.orth(f[x], yp)) continue;
      bool found = false;
      for (int y = 0; y < X.m && !found; ++y) found = !X.orth(x, y) && f[y] == yp;
      if (!found) {
        out.back = {false, {x, yp}};
        break;
      }
    }
  return out;
}

UvoMap make_uvo_map(UvoSpace source, UvoSpace target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.m)
    throw std::invalid_argument("point map has wrong size");
  for (int v : map)
    if (v < 0 || v >= target.m) throw std::invalid_argument("point map image out of range");

  UvoMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.map = std::move(map);

  auto spec = is_spectral_map(f.source, f.target, f.map);
  f.spectral = spec.by_order.holds;
  auto pm = is_p_morphism_nonperp(f.source, f.target, f.map);
  f.forth = pm.forth.holds;
  f.back_literal = pm.back.holds;

  f.star_preserving = true;
  for (PointSet u : cor(f.target).sets) {
    PointSet lhs = preimage(f.map, f.source.m, star(f.target, u));
    PointSet rhs = star(f.source, preimage(f.map, f.source.m, u));
    if (lhs != rhs) {
      f.star_preserving = false;
      break;
    }
  }

  f.order_back = true;
  for (int x = 0; x < f.source.m && f.order_back; ++x)
    for (int yp = 0; yp < f.target.m; ++yp) {
      if (!f.target.leq(f.map[x], yp)) continue;
      bool found = false;
      for (int y = 0; y < f.source.m && !found; ++y)
        found = f.source.leq(x, y) && f.map[y] == yp;
      if (!found) {
        f.order_back = false;
        break;
      }
    }
  return f;
}

UvoMap identity_uvo_map(const UvoSpace& X) {
  std::vector<int> id(X.m);
  for (int i = 0; i < X.m; ++i) id[i] = i;
  return make_uvo_map(X, X, std::move(id));
}

UvoMap compose(const UvoMap& g, const UvoMap& f) {
  std::vector<int> h(f.source.m);
  for (int x = 0; x < f.source.m; ++x) h[x] = g.map[f.map[x]];
  return make_uvo_map(f.source, g.target, std::move(h));
}

bool uvo_map_injective(const UvoMap& f) {
  std::set<int> seen(f.map.begin(), f.map.end());
  return static_cast<int>(seen.size()) == f.source.m;
}

bool uvo_map_surjective(const UvoMap& f) {
  std::set<int> seen(f.map.begin(), f.map.end());
  return static_cast<int>(seen.size()) == f.target.m;
}

UvoMap hom_to_uvomap(const LatticeHom& h) {
  auto rep = validate_hom(h);
  if (!rep.ok)
    throw std::invalid_argument("hom_to_uvomap needs a valid homomorphism: " + rep.message());
  DualSpace DL = dual_space(h.source);
  DualSpace DM = dual_space(h.target);

  std::vector<int> pmap(DM.space.m, -1);
  for (int y = 0; y < DM.space.m; ++y) {
    ElemSet pre = 0;
    for (int a = 0; a < h.source.n; ++a)
      if (has(DM.filters[y], h.map[a])) pre |= bit(a);
    // The preimage of a proper filter under a homomorphism is a proper
    // filter; locate it among the points of X+_L via its minimum.
    int g = h.source.meet_of(pre);
    if (!has(pre, g) || principal_filter(h.source, g) != pre || g == h.source.bot)
      throw VerificationError("homomorphism preimage of a filter is not a proper filter");
    pmap[y] = DL.point_of[g];
  }

  UvoMap f = make_uvo_map(DM.space, DL.space, std::move(pmap));
  if (!f.valid())
    throw VerificationError("dual of a homomorphism failed the UVO-morphism checks");
  // (h_+)^{-1}[a^] = (h(a))^  for every a.
  for (int a = 0; a < h.source.n; ++a) {
    PointSet lhs = preimage(f.map, f.source.m, DL.basic_open[a]);
    if (lhs != DM.basic_open[h.map[a]])
      throw VerificationError("h_+ preimage of a basic open is not the image basic open");
  }
  return f;
}

LatticeHom uvomap_to_hom(const UvoMap& f) {
  if (!f.valid()) throw std::invalid_argument("uvomap_to_hom needs a verified UVO-map");
  CorAlgebra target_cor = cor_algebra(f.source);   // COR(X)
  CorAlgebra source_cor = cor_algebra(f.target);   // COR(X')

  LatticeHom h{source_cor.algebra, target_cor.algebra,
               std::vector<int>(source_cor.algebra.n, -1)};
  for (int i = 0; i < source_cor.family.size(); ++i) {
    PointSet pre = preimage(f.map, f.source.m, source_cor.family.sets[i]);
    int j = target_cor.family.index_of(pre);
    if (j < 0) throw VerificationError("preimage of a COR member left COR");
    h.map[i] = j;
  }
  auto rep = validate_hom(h);
  if (!rep.ok)
    throw VerificationError("dual of a UVO-map is not a homomorphism: " + rep.message());
  return h;
}

LatticeHom representation_hom(const Ortholattice& L) {
  DualSpace D = dual_space(L);
  CorAlgebra ca = cor_algebra(D.space);
  LatticeHom h{L, ca.algebra, std::vector<int>(L.n, -1)};
  for (int a = 0; a < L.n; ++a) {
    int i = ca.family.index_of(D.basic_open[a]);
    if (i < 0) throw VerificationError("basic open a^ is not in COR(X+_L)");
    h.map[a] = i;
  }
  auto rep = validate_hom(h);
  if (!rep.ok) throw VerificationError("a |-> a^ is not a homomorphism: " + rep.message());
  if (!hom_injective(h) || !hom_surjective(h))
    throw VerificationError("a |-> a^ is not a bijection onto COR(X+_L)");
  return h;
}

WitnessCheck check_naturality(const LatticeHom& h) {
  LatticeHom rep_l = representation_hom(h.source);
  LatticeHom rep_m = representation_hom(h.target);
  UvoMap hplus = hom_to_uvomap(h);
  LatticeHom hplusplus = uvomap_to_hom(hplus);
  // (h_+)^+ : COR(X+_L) -> COR(X+_{L'}); its endpoints are rebuilt from the
  // same deterministic constructions, so they must match the rep targets.
  if (!same_structure(hplusplus.source, rep_l.target) ||
      !same_structure(hplusplus.target, rep_m.target))
    throw VerificationError("naturality square endpoints disagree");
  for (int a = 0; a < h.source.n; ++a)
    if (hplusplus.map[rep_l.map[a]] != rep_m.map[h.map[a]]) return {false, {a}};
  return {true, {}};
}

WitnessCheck check_conaturality(const UvoMap& f) {
  CharMapResult gx = char_map(f.source);
  CharMapResult gy = char_map(f.target);
  LatticeHom fplus = uvomap_to_hom(f);  // COR(X') -> COR(X)
  UvoMap fplusplus = hom_to_uvomap(fplus);
  for (int x = 0; x < f.source.m; ++x)
    if (fplusplus.map[gx.map[x]] != gy.map[f.map[x]]) return {false, {x}};
  return {true, {}};
}

WitnessCheck is_uvo_embedding(const UvoMap& f) {
  if (!f.valid()) throw std::invalid_argument("is_uvo_embedding needs a verified UVO-map");
  for (int x = 0; x < f.source.m; ++x)
    for (int y = x + 1; y < f.source.m; ++y)
      if (f.map[x] == f.map[y]) return {false, {x, y}};
  CorFamily src = cor(f.source);
  CorFamily tgt = cor(f.target);
  PointSet fx = image(f.map, f.source.points());
  for (int i = 0; i < src.size(); ++i) {
    PointSet fu = image(f.map, src.sets[i]);
    bool found = false;
    for (PointSet v : tgt.sets)
      if (fu == (fx & v)) {
        found = true;
        break;
      }
    if (!found) return {false, {i}};
  }
  return {true, {}};
}

}  // namespace ortho
