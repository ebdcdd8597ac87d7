// olat: command-line front end for the finite ortholattice / UVO-space
// engine. Exit codes: 0 all verifications passed, 1 a mathematical
// verification failed (witness printed), 2 usage, parse or io error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ortho/catalog.hpp"
#include "ortho/dictionary.hpp"
#include "ortho/duality.hpp"
#include "ortho/filter.hpp"
#include "ortho/io.hpp"
#include "ortho/lattice.hpp"
#include "ortho/space.hpp"
#include "ortho/verify.hpp"

using nlohmann::json;
using namespace ortho;

namespace {

struct Options {
  std::string format = "text";
  std::string out_file;
  int max_size = 12;
};

int emit(const Options& opt, const json& j, const std::string& text, int code) {
  std::string payload = opt.format == "json" ? j.dump(2) + "\n" : text;
  if (opt.out_file.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out_file, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << opt.out_file << "\n";
      return 2;
    }
    f << payload;
  }
  return code;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

struct LoadedLattice {
  std::string origin;
  Lattice lattice;
  std::optional<Ortholattice> ortho;
};

// 0 = loaded, 1 = validation failed (printed), 2 = parse/io error (printed)
int load_lattice(const std::string& arg, const Options& opt, LoadedLattice& out) {
  out.origin = arg;
  if (!arg.empty() && arg[0] == '@') {
    auto entry = builtin(arg.substr(1));
    if (!entry) {
      std::cerr << "unknown catalog name '" << arg.substr(1) << "'\n";
      return 2;
    }
    out.lattice = entry->lattice;
    out.ortho = entry->ortho;
    return 0;
  }
  std::string text;
  if (!read_file(arg, text)) {
    std::cerr << "cannot read " << arg << "\n";
    return 2;
  }
  auto doc = parse_olat_document(text);
  if (!doc) {
    std::cerr << arg << ": " << doc.error.to_string() << "\n";
    return 2;
  }
  LatticeCandidate cand = candidate_from(*doc);
  if (doc->lattice_only) {
    auto v = validate_lattice(cand);
    if (!v) {
      json j{{"command", "check"}, {"input", arg}, {"ok", false},
             {"law", law_name(v.report.law)}, {"message", v.report.message(cand.names)}};
      emit(opt, j, arg + ": invalid: " + v.report.message(cand.names) + "\n", 1);
      return 1;
    }
    out.lattice = *v.value;
  } else {
    auto v = validate_ortholattice(cand);
    if (!v) {
      json j{{"command", "check"}, {"input", arg}, {"ok", false},
             {"law", law_name(v.report.law)}, {"message", v.report.message(cand.names)}};
      emit(opt, j, arg + ": invalid: " + v.report.message(cand.names) + "\n", 1);
      return 1;
    }
    out.ortho = *v.value;
    out.lattice = *v.value;
  }
  return 0;
}

int load_space(const std::string& arg, UvoSpace& out) {
  std::string text;
  if (!read_file(arg, text)) {
    std::cerr << "cannot read " << arg << "\n";
    return 2;
  }
  auto doc = parse_uvo_document(text);
  if (!doc) {
    std::cerr << arg << ": " << doc.error.to_string() << "\n";
    return 2;
  }
  auto v = validate_space(candidate_from(*doc));
  if (!v) {
    std::cerr << arg << ": invalid: " << v.report.message(doc->points) << "\n";
    return 1;
  }
  out = *v.value;
  return 0;
}

bool is_uvo_path(const std::string& arg) {
  return arg.size() > 4 && arg.substr(arg.size() - 4) == ".uvo";
}

std::string witness_names(const Lattice& L, const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += L.names[w[i]];
  }
  return s;
}

json lattice_summary(const LoadedLattice& in) {
  const Lattice& L = in.lattice;
  json j;
  j["elements"] = L.n;
  j["names"] = L.names;
  j["lattice_only"] = !in.ortho.has_value();
  auto dist = is_distributive(L);
  j["distributive"] = dist.distributive;
  if (dist.witness) {
    json w;
    w["kind"] = dist.witness->kind == SublatticeKind::M3 ? "M3" : "N5";
    w["elements"] = json::array();
    for (int e : dist.witness->elems) w["elements"].push_back(L.names[e]);
    j["witness"] = w;
  }
  auto mod = is_modular(L);
  j["modular"] = mod.holds;
  json at = json::array();
  for_bits(atoms(L), [&](int a) { at.push_back(L.names[a]); });
  j["atoms"] = at;
  if (in.ortho) {
    auto om = is_orthomodular(*in.ortho);
    j["orthomodular"] = om.holds;
    if (om.witness)
      j["orthomodular_witness"] = {L.names[om.witness->first], L.names[om.witness->second]};
  }
  return j;
}

std::string lattice_summary_text(const LoadedLattice& in) {
  const Lattice& L = in.lattice;
  std::ostringstream os;
  os << in.origin << ": valid " << (in.ortho ? "ortholattice" : "bounded lattice") << ", "
     << L.n << " elements\n";
  auto dist = is_distributive(L);
  if (dist.distributive) {
    os << "  distributive\n";
  } else {
    const auto& w = *dist.witness;
    os << "  non-distributive (" << (w.kind == SublatticeKind::M3 ? "M3" : "N5")
       << " witness: " << witness_names(L, {w.elems.begin(), w.elems.end()}) << ")\n";
    auto n5 = find_n5(L);
    if (w.kind == SublatticeKind::M3 && n5)
      os << "  N5 witness: " << witness_names(L, {n5->elems.begin(), n5->elems.end()}) << "\n";
  }
  os << "  modular: " << (is_modular(L).holds ? "yes" : "no") << "\n";
  if (in.ortho) {
    auto om = is_orthomodular(*in.ortho);
    os << "  orthomodular: " << (om.holds ? "yes" : "no");
    if (om.witness)
      os << " (witness: " << L.names[om.witness->first] << "," << L.names[om.witness->second]
         << ")";
    os << "\n";
  }
  os << "  atoms: " << witness_names(L, [&] {
    std::vector<int> v;
    for_bits(atoms(L), [&](int a) { v.push_back(a); });
    return v;
  }()) << "\n";
  return os.str();
}

json axiom_json(const UvoAxiomReport& rep) {
  return json{{"t0", rep.t0},
              {"cor_closed", rep.closure},
              {"cor_basis", rep.basis},
              {"filter_point", rep.filter_point},
              {"perp_separation", rep.perp_separation},
              {"detail", rep.detail}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for finite ortholattices and their dual UVO-spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_file, "write the report to a file");
  app.add_option("--max-size", opt.max_size, "size cap for exhaustive sweeps");

  std::string in_a, in_b;
  int enum_n = 8;

  auto* c_check = app.add_subcommand("check", "parse and validate, report structure");
  c_check->add_option("input", in_a)->required();
  auto* c_dualize = app.add_subcommand("dualize", "filter spectrum of a lattice");
  c_dualize->add_option("input", in_a)->required();
  auto* c_cor = app.add_subcommand("cor", "COR family and algebra of a UVO-space");
  c_cor->add_option("input", in_a)->required();
  auto* c_round = app.add_subcommand("roundtrip", "representation / characterization round trip");
  c_round->add_option("input", in_a)->required();
  auto* c_sum = app.add_subcommand("sum", "UVO-sum of two spaces");
  c_sum->add_option("left", in_a)->required();
  c_sum->add_option("right", in_b)->required();
  auto* c_prod = app.add_subcommand("product", "direct product, with the dual-sum homeomorphism");
  c_prod->add_option("left", in_a)->required();
  c_prod->add_option("right", in_b)->required();
  auto* c_mac = app.add_subcommand("macneille", "MacNeille completion, both constructions");
  c_mac->add_option("input", in_a)->required();
  auto* c_canon = app.add_subcommand("canonical", "canonical extension R(X)");
  c_canon->add_option("input", in_a)->required();
  auto* c_cong = app.add_subcommand("congruences", "congruence lattice and dual correspondence");
  c_cong->add_option("input", in_a)->required();
  auto* c_atoms = app.add_subcommand("atoms", "atoms and isolated points");
  c_atoms->add_option("input", in_a)->required();
  auto* c_enum = app.add_subcommand("enumerate", "all ortholattices up to isomorphism");
  c_enum->add_option("n", enum_n, "maximum carrier size")->required();
  auto* c_dot = app.add_subcommand("export-dot", "DOT diagram");
  c_dot->add_option("input", in_a)->required();
  bool perp_overlay = false;
  c_dot->add_flag("--perp", perp_overlay, "overlay the orthogonality relation");
  auto* c_verify = app.add_subcommand("verify-all", "run the full verification battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) {
      if (is_uvo_path(in_a)) {
        UvoSpace X;
        int rc = load_space(in_a, X);
        if (rc) return rc;
        UvoAxiomReport rep = validate_uvo(X);
        json j{{"command", "check"}, {"input", in_a}, {"ok", true},
               {"points", X.m}, {"uvo_axioms", axiom_json(rep)}};
        std::ostringstream os;
        os << in_a << ": valid orthospace reduct, " << X.m << " points\n"
           << "  uvo axioms: t0=" << rep.t0 << " cor_closed=" << rep.closure
           << " basis=" << rep.basis << " filter_point=" << rep.filter_point
           << " perp_separation=" << rep.perp_separation << "\n";
        if (!rep.ok()) os << "  " << rep.detail << "\n";
        return emit(opt, j, os.str(), 0);
      }
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      json j = lattice_summary(in);
      j["command"] = "check";
      j["input"] = in_a;
      j["ok"] = true;
      return emit(opt, j, lattice_summary_text(in), 0);
    }

    if (c_dualize->parsed()) {
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      DualSpace D = in.ortho ? dual_space(*in.ortho) : filter_poset(in.lattice);
      UvoDocument doc = document_of(D.space);
      json j{{"command", "dualize"}, {"input", in_a}, {"ok", true},
             {"points", D.space.m}, {"document", serialize(doc)}};
      return emit(opt, j, serialize(doc), 0);
    }

    if (c_cor->parsed()) {
      UvoSpace X;
      int rc = load_space(in_a, X);
      if (rc) return rc;
      UvoAxiomReport rep = validate_uvo(X);
      if (!rep.ok()) {
        json j{{"command", "cor"}, {"input", in_a}, {"ok", false},
               {"uvo_axioms", axiom_json(rep)}};
        return emit(opt, j, in_a + ": not a UVO-space: " + rep.detail + "\n", 1);
      }
      CorAlgebra A = cor_algebra(X);
      json j{{"command", "cor"}, {"input", in_a}, {"ok", true},
             {"members", A.family.size()}, {"names", A.algebra.names}};
      std::ostringstream os;
      os << in_a << ": UVO axioms hold; COR(X) has " << A.family.size() << " members\n";
      for (const auto& nm : A.algebra.names) os << "  " << nm << "\n";
      return emit(opt, j, os.str(), 0);
    }

    if (c_round->parsed()) {
      if (is_uvo_path(in_a)) {
        UvoSpace X;
        int rc = load_space(in_a, X);
        if (rc) return rc;
        UvoAxiomReport rep = validate_uvo(X);
        if (!rep.ok()) {
          json j{{"command", "roundtrip"}, {"input", in_a}, {"ok", false},
                 {"uvo_axioms", axiom_json(rep)}};
          return emit(opt, j, in_a + ": not a UVO-space: " + rep.detail + "\n", 1);
        }
        char_map(X);  // throws on failure
        json j{{"command", "roundtrip"}, {"input", in_a}, {"ok", true}};
        return emit(opt, j, in_a + ": X ~ X+_{COR(X)}: homeomorphism verified\n", 0);
      }
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      if (!in.ortho) {
        std::cerr << in_a << ": roundtrip needs an ortholattice\n";
        return 2;
      }
      representation_hom(*in.ortho);  // throws on failure
      json j{{"command", "roundtrip"}, {"input", in_a}, {"ok", true}};
      return emit(opt, j, in_a + ": L ~ COR(X+_L): isomorphism found\n", 0);
    }

    if (c_sum->parsed()) {
      UvoSpace X, Y;
      int rc = load_space(in_a, X);
      if (rc) return rc;
      rc = load_space(in_b, Y);
      if (rc) return rc;
      SumSpace S = uvo_sum(X, Y);
      UvoDocument doc = document_of(S.space);
      json j{{"command", "sum"}, {"ok", true}, {"points", S.space.m},
             {"document", serialize(doc)}};
      return emit(opt, j, serialize(doc), 0);
    }

    if (c_prod->parsed()) {
      LoadedLattice a, b;
      int rc = load_lattice(in_a, opt, a);
      if (rc) return rc;
      rc = load_lattice(in_b, opt, b);
      if (rc) return rc;
      if (!a.ortho || !b.ortho) {
        std::cerr << "product needs two ortholattices\n";
        return 2;
      }
      ProductSumHomeo h = product_sum_homeo(*a.ortho, *b.ortho);
      OlatDocument doc = document_of(h.prod);
      json j{{"command", "product"}, {"ok", true}, {"elements", h.prod.n},
             {"dual_points", h.prod_dual.space.m}, {"document", serialize(doc)}};
      std::ostringstream os;
      os << serialize(doc) << "# dual homeomorphism X+_{LxM} ~ X+_L + X+_M verified ("
         << h.prod_dual.space.m << " points)\n";
      return emit(opt, j, os.str(), 0);
    }

    if (c_mac->parsed()) {
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      if (!in.ortho) {
        std::cerr << in_a << ": macneille needs an ortholattice\n";
        return 2;
      }
      MacNeilleResult mac = macneille(*in.ortho, opt.max_size > 20 ? opt.max_size : 20);
      bool iso_l = find_isomorphism(mac.via_normals, *in.ortho).has_value();
      json j{{"command", "macneille"}, {"input", in_a}, {"ok", true},
             {"normals", mac.normals.size()}, {"isomorphic_to_input", iso_l}};
      std::ostringstream os;
      os << in_a << ": MacNeille completion has " << mac.normals.size()
         << " elements (both constructions isomorphic)\n"
         << "  isomorphic to the input lattice: " << (iso_l ? "yes" : "no") << "\n";
      return emit(opt, j, os.str(), 0);
    }

    if (c_canon->parsed()) {
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      if (!in.ortho) {
        std::cerr << in_a << ": canonical needs an ortholattice\n";
        return 2;
      }
      CanonicalExtensionResult ce = canonical_extension(*in.ortho);
      bool iso_l = find_isomorphism(ce.regular.algebra, *in.ortho).has_value();
      json j{{"command", "canonical"}, {"input", in_a}, {"ok", true},
             {"size", ce.regular.sets.size()}, {"isomorphic_to_input", iso_l}};
      std::ostringstream os;
      os << in_a << ": canonical extension R(X) has " << ce.regular.sets.size()
         << " elements; embedding and denseness verified\n"
         << "  isomorphic to the input lattice: " << (iso_l ? "yes" : "no") << "\n";
      return emit(opt, j, os.str(), 0);
    }

    if (c_cong->parsed()) {
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      if (!in.ortho) {
        std::cerr << in_a << ": congruences needs an ortholattice\n";
        return 2;
      }
      auto congs = congruences_bruteforce(*in.ortho, opt.max_size);
      json j{{"command", "congruences"}, {"input", in_a}, {"ok", true},
             {"count", congs.size()}};
      std::ostringstream os;
      os << in_a << ": " << congs.size() << " congruences\n";
      if (is_orthomodular(*in.ortho).holds) {
        CongCorrespondence cc = congruence_correspondence(*in.ortho, opt.max_size);
        j["space_side"] = cc.space_side.size();
        os << "  dual correspondence verified: " << cc.space_side.size()
           << " principal up-sets (plus the empty set for the total congruence)\n";
      }
      return emit(opt, j, os.str(), 0);
    }

    if (c_atoms->parsed()) {
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      json j{{"command", "atoms"}, {"input", in_a}, {"ok", true}};
      std::ostringstream os;
      std::vector<int> at;
      for_bits(atoms(in.lattice), [&](int a) { at.push_back(a); });
      os << in_a << ": atoms: " << witness_names(in.lattice, at) << "\n";
      json ja = json::array();
      for (int a : at) ja.push_back(in.lattice.names[a]);
      j["atoms"] = ja;
      if (in.ortho) {
        AtomsBijection ab = atoms_bijection(*in.ortho);
        j["isolated_points"] = popcount(ab.isolated);
        j["bijection_verified"] = ab.verified;
        os << "  isolated points of the dual space: " << popcount(ab.isolated)
           << (ab.verified ? " (bijection verified)" : " (BIJECTION FAILED)") << "\n";
        if (!ab.verified) {
          j["ok"] = false;
          return emit(opt, j, os.str(), 1);
        }
      }
      return emit(opt, j, os.str(), 0);
    }

    if (c_enum->parsed()) {
      auto all = enumerate_ortholattices(enum_n);
      std::map<int, int> by_size;
      for (const auto& L : all) by_size[L.n]++;
      json j{{"command", "enumerate"}, {"ok", true}, {"total", all.size()}};
      std::ostringstream os;
      os << "ortholattices up to isomorphism, by carrier size:\n";
      json sizes;
      for (auto [n, c] : by_size) {
        os << "  n=" << n << ": " << c << "\n";
        sizes[std::to_string(n)] = c;
      }
      j["by_size"] = sizes;
      return emit(opt, j, os.str(), 0);
    }

    if (c_dot->parsed()) {
      if (is_uvo_path(in_a)) {
        UvoSpace X;
        int rc = load_space(in_a, X);
        if (rc) return rc;
        return emit(opt, json{{"command", "export-dot"}, {"ok", true}},
                    to_dot(X, perp_overlay), 0);
      }
      LoadedLattice in;
      int rc = load_lattice(in_a, opt, in);
      if (rc) return rc;
      return emit(opt, json{{"command", "export-dot"}, {"ok", true}}, to_dot(in.lattice), 0);
    }

    if (c_verify->parsed()) {
      auto results = verify_all(opt.max_size >= 1 && opt.max_size <= 10 ? opt.max_size : 8);
      bool all_pass = true;
      std::ostringstream os;
      json arr = json::array();
      for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.name;
        if (!r.pass) os << "  [" << r.detail << "]";
        char buf[32];
        std::snprintf(buf, sizeof buf, "  (%.2fs)", r.seconds);
        os << buf << "\n";
        arr.push_back(json{{"criterion", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
      }
      os << (all_pass ? "all criteria passed\n" : "SOME CRITERIA FAILED\n");
      json j{{"command", "verify-all"}, {"ok", all_pass}, {"criteria", arr}};
      return emit(opt, j, os.str(), all_pass ? 0 : 1);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
