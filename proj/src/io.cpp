#include "ortho/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ortho {

std::string ParseError::to_string() const {
  std::ostringstream os;
  os << "parse error at " << line << ":" << col << ": " << msg;
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct LineReader {
  std::vector<std::pair<int, std::vector<Token>>> lines;  // (lineno, tokens)

  explicit LineReader(std::string_view text) {
    std::string cur;
    int lineno = 1;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '\n') {
        auto toks = tokenize_line(cur);
        if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
        cur.clear();
        ++lineno;
      } else {
        cur += text[i];
      }
    }
  }
};

struct NameTable {
  std::vector<std::string> names;
  std::map<std::string, int> index;

  bool add(const std::string& n) {
    if (index.count(n)) return false;
    index[n] = static_cast<int>(names.size());
    names.push_back(n);
    return true;
  }
  int find(const std::string& n) const {
    auto it = index.find(n);
    return it == index.end() ? -1 : it->second;
  }
};

ParseError err(int line, int col, std::string msg) { return {line, col, std::move(msg)}; }

// Shared scaffolding for both grammars: header line, a declaration line,
// then cover lines and binary-relation lines.
struct DocScan {
  NameTable table;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<int, int>> relation;  // normalized index pairs
  bool saw_relation = false;
};

std::optional<ParseError> scan_document(std::string_view text, const char* header,
                                        const char* decl_key, const char* rel_key,
                                        const char* rel_sep, bool allow_self_rel,
                                        DocScan& out) {
  LineReader reader(text);
  if (reader.lines.empty()) return err(1, 1, std::string("missing '") + header + " v1' header");
  std::size_t li = 0;
  {
    auto& [lineno, toks] = reader.lines[li];
    if (toks.size() != 2 || toks[0].text != header || toks[1].text != "v1")
      return err(lineno, toks[0].col, std::string("expected '") + header + " v1' header");
    ++li;
  }
  if (li >= reader.lines.size())
    return err(static_cast<int>(reader.lines.size()), 1,
               std::string("expected '") + decl_key + ":' line");
  {
    auto& [lineno, toks] = reader.lines[li];
    if (toks[0].text != std::string(decl_key) + ":")
      return err(lineno, toks[0].col, std::string("expected '") + decl_key + ":' line");
    if (toks.size() < 2) return err(lineno, toks[0].col, "empty declaration");
    for (std::size_t i = 1; i < toks.size(); ++i)
      if (!out.table.add(toks[i].text))
        return err(lineno, toks[i].col, "duplicate name '" + toks[i].text + "'");
    ++li;
  }
  for (; li < reader.lines.size(); ++li) {
    auto& [lineno, toks] = reader.lines[li];
    const std::string& key = toks[0].text;
    if (key == "covers:") {
      if (toks.size() != 4 || toks[2].text != "<")
        return err(lineno, toks[0].col, "expected 'covers: A < B'");
      for (int t : {1, 3})
        if (out.table.find(toks[t].text) < 0)
          return err(lineno, toks[t].col, "undeclared name '" + toks[t].text + "'");
      if (toks[1].text == toks[3].text)
        return err(lineno, toks[1].col, "cover relates a name to itself");
      out.covers.emplace_back(toks[1].text, toks[3].text);
    } else if (key == std::string(rel_key) + ":") {
      if (toks.size() != 4 || toks[2].text != rel_sep)
        return err(lineno, toks[0].col,
                   std::string("expected '") + rel_key + ": A " + rel_sep + " B'");
      int a = out.table.find(toks[1].text);
      int b = out.table.find(toks[3].text);
      if (a < 0) return err(lineno, toks[1].col, "undeclared name '" + toks[1].text + "'");
      if (b < 0) return err(lineno, toks[3].col, "undeclared name '" + toks[3].text + "'");
      if (!allow_self_rel && a == b)
        return err(lineno, toks[1].col, "'" + toks[1].text + "' related to itself");
      out.relation.emplace_back(std::min(a, b), std::max(a, b));
      out.saw_relation = true;
    } else {
      return err(lineno, toks[0].col, "unknown directive '" + key + "'");
    }
  }
  std::sort(out.relation.begin(), out.relation.end());
  out.relation.erase(std::unique(out.relation.begin(), out.relation.end()),
                     out.relation.end());
  return std::nullopt;
}

}  // namespace

ParseResult<OlatDocument> parse_olat_document(std::string_view text) {
  ParseResult<OlatDocument> out;
  DocScan scan;
  if (auto e = scan_document(text, "olat", "elements", "ocomp", "->", true, scan)) {
    out.error = *e;
    return out;
  }
  OlatDocument doc;
  doc.elements = scan.table.names;
  doc.covers = scan.covers;
  const int n = static_cast<int>(doc.elements.size());

  std::vector<int> oc(n, -1);
  for (auto [a, b] : scan.relation) {
    // declaring a->b implies b->a; conflicts are errors
    if ((oc[a] >= 0 && oc[a] != b) || (oc[b] >= 0 && oc[b] != a)) {
      out.error = err(0, 0,
                      "conflicting orthocomplement for '" + doc.elements[a] + "' / '" +
                          doc.elements[b] + "'");
      return out;
    }
    oc[a] = b;
    oc[b] = a;
  }
  doc.lattice_only = !scan.saw_relation;
  if (!doc.lattice_only) {
    // the bounds may be left out: they pair with each other
    std::vector<std::pair<int, int>> cover_ix;
    for (auto& [a, b] : doc.covers)
      cover_ix.emplace_back(scan.table.find(a), scan.table.find(b));
    auto up = closure_from_covers(n, cover_ix);
    int bot = -1, top = -1;
    for (int i = 0; i < n; ++i) {
      if (up[i] == full_mask(n)) bot = i;
      Mask below = 0;
      for (int j = 0; j < n; ++j)
        if (has(up[j], i)) below |= bit(j);
      if (below == full_mask(n)) top = i;
    }
    if (bot >= 0 && top >= 0 && bot != top && oc[bot] < 0 && oc[top] < 0) {
      oc[bot] = top;
      oc[top] = bot;
    }
    for (int i = 0; i < n; ++i)
      if (oc[i] < 0) {
        out.error = err(0, 0, "incomplete orthocomplement: missing for '" + doc.elements[i] + "'");
        return out;
      }
    for (int i = 0; i < n; ++i) {
      int j = oc[i];
      if (i <= j) doc.ocomp.emplace_back(doc.elements[i], doc.elements[j]);
    }
  }
  out.value = std::move(doc);
  return out;
}

ParseResult<UvoDocument> parse_uvo_document(std::string_view text) {
  ParseResult<UvoDocument> out;
  DocScan scan;
  if (auto e = scan_document(text, "uvo", "points", "perp", "~", false, scan)) {
    out.error = *e;
    return out;
  }
  UvoDocument doc;
  doc.points = scan.table.names;
  for (auto [a, b] : scan.relation) doc.perp.emplace_back(doc.points[a], doc.points[b]);
  doc.covers = scan.covers;
  out.value = std::move(doc);
  return out;
}

std::string serialize(const OlatDocument& doc) {
  std::ostringstream os;
  os << "olat v1\n";
  os << "elements:";
  for (const auto& e : doc.elements) os << " " << e;
  os << "\n";
  for (const auto& [a, b] : doc.covers) os << "covers: " << a << " < " << b << "\n";
  for (const auto& [a, b] : doc.ocomp) os << "ocomp: " << a << " -> " << b << "\n";
  return os.str();
}

std::string serialize(const UvoDocument& doc) {
  std::ostringstream os;
  os << "uvo v1\n";
  os << "points:";
  for (const auto& p : doc.points) os << " " << p;
  os << "\n";
  for (const auto& [a, b] : doc.covers) os << "covers: " << a << " < " << b << "\n";
  for (const auto& [a, b] : doc.perp) os << "perp: " << a << " ~ " << b << "\n";
  return os.str();
}

LatticeCandidate candidate_from(const OlatDocument& doc) {
  const int n = static_cast<int>(doc.elements.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[doc.elements[i]] = i;
  LatticeCandidate cand;
  cand.names = doc.elements;
  std::vector<std::pair<int, int>> covers;
  for (auto& [a, b] : doc.covers) covers.emplace_back(index.at(a), index.at(b));
  cand.up = closure_from_covers(n, covers);
  if (!doc.lattice_only) {
    std::vector<int> oc(n, -1);
    for (auto& [a, b] : doc.ocomp) {
      oc[index.at(a)] = index.at(b);
      oc[index.at(b)] = index.at(a);
    }
    // bounds were auto-paired at parse for well-formed documents; anything
    // still unset is caught by the validator as BadInput
    for (int i = 0; i < n; ++i)
      if (oc[i] < 0) oc[i] = i;
    cand.ocomp = std::move(oc);
  }
  return cand;
}

SpaceCandidate candidate_from(const UvoDocument& doc) {
  const int m = static_cast<int>(doc.points.size());
  std::map<std::string, int> index;
  for (int i = 0; i < m; ++i) index[doc.points[i]] = i;
  SpaceCandidate cand;
  cand.names = doc.points;
  std::vector<std::pair<int, int>> covers;
  for (auto& [a, b] : doc.covers) covers.emplace_back(index.at(a), index.at(b));
  cand.up = closure_from_covers(m, covers);
  cand.perp.assign(m, 0);
  for (auto& [a, b] : doc.perp) {
    cand.perp[index.at(a)] |= bit(index.at(b));
    cand.perp[index.at(b)] |= bit(index.at(a));
  }
  return cand;
}

OlatDocument document_of(const Lattice& L) {
  OlatDocument doc;
  doc.elements = L.names;
  for (auto [a, b] : L.cover_pairs()) doc.covers.emplace_back(L.names[a], L.names[b]);
  doc.lattice_only = true;
  return doc;
}

OlatDocument document_of(const Ortholattice& L) {
  OlatDocument doc = document_of(static_cast<const Lattice&>(L));
  doc.lattice_only = false;
  for (int a = 0; a < L.n; ++a)
    if (a <= L.oc(a)) doc.ocomp.emplace_back(L.names[a], L.names[L.oc(a)]);
  return doc;
}

UvoDocument document_of(const UvoSpace& X) {
  UvoDocument doc;
  doc.points = X.names;
  for (auto [a, b] : X.cover_pairs()) doc.covers.emplace_back(X.names[a], X.names[b]);
  for (int x = 0; x < X.m; ++x)
    for (int y = x + 1; y < X.m; ++y)
      if (X.orth(x, y)) doc.perp.emplace_back(X.names[x], X.names[y]);
  return doc;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_dot(const Lattice& L) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (int a = 0; a < L.n; ++a)
    os << "  n" << a << " [label=" << dot_quote(L.names[a]) << "];\n";
  for (auto [a, b] : L.cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const UvoSpace& X, bool perp_overlay) {
  std::ostringstream os;
  os << "digraph space {\n  rankdir=BT;\n";
  for (int x = 0; x < X.m; ++x)
    os << "  n" << x << " [label=" << dot_quote(X.names[x]) << "];\n";
  for (auto [a, b] : X.cover_pairs()) os << "  n" << a << " -> n" << b << " [style=dotted];\n";
  if (perp_overlay)
    for (int x = 0; x < X.m; ++x)
      for (int y = x + 1; y < X.m; ++y)
        if (X.orth(x, y))
          os << "  n" << x << " -> n" << y << " [dir=none, color=crimson, label=\"~\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const SumSpace& S, bool perp_overlay) { return to_dot(S.space, perp_overlay); }

}  // namespace ortho
