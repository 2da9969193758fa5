#include "hopfsplit/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <tuple>

namespace hopfsplit {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ParseError("key '" + key + "': " + what);
}

const Json& member(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::size_t index_value(const Json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(key, "expected a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

template <class S>
S scalar_value(const Json& v, const FieldSpec& field, const std::string& key) {
  try {
    if (v.is_string()) return parse_scalar<S>(field, v.get<std::string>());
    if (v.is_number_integer()) return scalar<S>(field, v.get<long>());
  } catch (const std::exception& e) {
    fail(key, e.what());
  }
  fail(key, "expected a scalar string such as \"3\" or \"-1/2\"");
}

FieldSpec field_value(const Json& v, const std::string& key) {
  const std::string kind = [&] {
    const Json& k = member(v, "kind", key);
    if (!k.is_string()) fail(key + ".kind", "expected \"Q\" or \"Fp\"");
    return k.get<std::string>();
  }();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    const Json& p = member(v, "p", key);
    if (!p.is_number_integer() || p.get<long long>() < 2) fail(key + ".p", "expected a prime");
    try {
      return FieldSpec::prime(static_cast<std::uint64_t>(p.get<long long>()));
    } catch (const FieldError& e) {
      fail(key + ".p", e.what());
    }
  }
  fail(key + ".kind", "unknown field kind '" + kind + "'");
}

Json field_json(const FieldSpec& f) {
  if (f.is_rational()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", f.modulus()}};
}

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string join_path(const std::string& dir, const std::string& rel) {
  const std::filesystem::path p(rel);
  if (p.is_absolute()) return rel;
  return (std::filesystem::path(dir) / p).string();
}

// Inline structures pass through; strings are loaded relative to base_dir.
std::pair<Json, std::string> resolve(const Json& v, const std::string& base_dir, const std::string& key) {
  if (v.is_object()) return {v, base_dir};
  if (v.is_string()) {
    const std::string path = join_path(base_dir, v.get<std::string>());
    try {
      return {load_json(path), directory_of(path)};
    } catch (const ParseError& e) {
      fail(key, e.what());
    }
  }
  fail(key, "expected a structure object or a path");
}

template <class S>
Bialgebra<S> nested_structure(const Json& doc, const std::string& key, const std::string& base_dir) {
  const auto [sub, dir] = resolve(member(doc, key, ""), base_dir, key);
  try {
    return structure_from_json<S>(sub, dir);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in '") + key + "': " + e.what());
  }
}

template <class S>
std::vector<std::vector<S>> dense_rows(const Json& v, std::size_t n, const FieldSpec& field, const std::string& key) {
  if (!v.is_array() || v.size() != n) fail(key, "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<S>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = v[r];
    const std::string rk = key + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n) fail(rk, "expected " + std::to_string(n) + " entries");
    std::vector<S> out;
    for (std::size_t c = 0; c < n; ++c) out.push_back(scalar_value<S>(row[c], field, rk + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(out));
  }
  return rows;
}

template <class S>
std::vector<S> coefficient_array(const Json& v, std::size_t n, const FieldSpec& field, const std::string& key) {
  if (!v.is_array() || v.size() != n) fail(key, "expected " + std::to_string(n) + " coefficients");
  std::vector<S> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_value<S>(v[i], field, key + "[" + std::to_string(i) + "]"));
  return out;
}

template <class S>
std::vector<Entry<S>> triples(const Json& v, std::size_t n, const FieldSpec& field, const std::string& key, bool comul) {
  if (!v.is_array()) fail(key, "expected an array of [i, j, k, \"c\"]");
  std::vector<Entry<S>> out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::string tk = key + "[" + std::to_string(t) + "]";
    const Json& e = v[t];
    if (!e.is_array() || e.size() != 4) fail(tk, "expected [i, j, k, \"c\"]");
    const std::size_t i = index_value(e[0], tk);
    const std::size_t j = index_value(e[1], tk);
    const std::size_t k = index_value(e[2], tk);
    if (i >= n || j >= n || k >= n) fail(tk, "index out of range for dimension " + std::to_string(n));
    const S c = scalar_value<S>(e[3], field, tk);
    if (comul) {
      out.push_back({j * n + k, i, c});
    } else {
      out.push_back({k, i * n + j, c});
    }
  }
  return out;
}

template <class S>
std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> sorted_triples(const LinMap<S>& f, std::size_t n,
                                                                                          bool comul) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> out;
  for (const auto& e : f.entries()) {
    if (comul) {
      out.emplace_back(e.col, e.row / n, e.row % n, to_string(e.value));
    } else {
      out.emplace_back(e.col / n, e.col % n, e.row, to_string(e.value));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class S>
Json dense_json(const LinMap<S>& f) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(to_string(f.coeff(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string to_string(FileKind kind) {
  switch (kind) {
    case FileKind::structure: return "structure";
    case FileKind::action: return "action";
    case FileKind::extension: return "extension";
  }
  return "?";
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json load_json(const std::string& path) {
  if (path == "-") return parse_json(read_stream(std::cin), "<stdin>");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_json(read_stream(in), path);
}

std::string directory_of(const std::string& path) {
  if (path == "-") return ".";
  const auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? "." : parent.string();
}

FileKind detect_kind(const Json& doc) {
  if (!doc.is_object()) throw ParseError("top level: expected a JSON object");
  if (doc.contains("act")) return FileKind::action;
  if (doc.contains("kappa") || doc.contains("lambda")) return FileKind::extension;
  if (doc.contains("mul")) return FileKind::structure;
  throw ParseError("top level: not a structure, action or extension file");
}

FieldSpec document_field(const Json& doc, const std::string& base_dir) {
  switch (detect_kind(doc)) {
    case FileKind::structure: return field_value(member(doc, "field", ""), "field");
    case FileKind::action: {
      const auto [sub, dir] = resolve(member(doc, "acting", ""), base_dir, "acting");
      return document_field(sub, dir);
    }
    case FileKind::extension: {
      const auto [sub, dir] = resolve(member(doc, "A", ""), base_dir, "A");
      return document_field(sub, dir);
    }
  }
  throw ParseError("unreachable");
}

template <class S>
LinMap<S> map_from_json(const Json& doc, const Space& domain, const Space& codomain, const std::string& key) {
  const std::size_t rows = index_value(member(doc, "rows", key), key + ".rows");
  const std::size_t cols = index_value(member(doc, "cols", key), key + ".cols");
  if (rows != codomain.dim() || cols != domain.dim()) {
    fail(key, "map is " + std::to_string(rows) + "x" + std::to_string(cols) + ", expected " +
                  std::to_string(codomain.dim()) + "x" + std::to_string(domain.dim()));
  }
  const Json& es = member(doc, "entries", key);
  if (!es.is_array()) fail(key + ".entries", "expected an array of [row, col, \"c\"]");
  std::vector<Entry<S>> entries;
  for (std::size_t t = 0; t < es.size(); ++t) {
    const std::string tk = key + ".entries[" + std::to_string(t) + "]";
    const Json& e = es[t];
    if (!e.is_array() || e.size() != 3) fail(tk, "expected [row, col, \"c\"]");
    const std::size_t r = index_value(e[0], tk);
    const std::size_t c = index_value(e[1], tk);
    if (r >= rows || c >= cols) fail(tk, "index out of range");
    entries.push_back({r, c, scalar_value<S>(e[2], domain.field(), tk)});
  }
  return LinMap<S>::from_entries(domain, codomain, entries);
}

template <class S>
Bialgebra<S> structure_from_json(const Json& doc, const std::string& base_dir) {
  (void)base_dir;
  if (!doc.is_object()) throw ParseError("structure: expected a JSON object");
  const FieldSpec field = field_value(member(doc, "field", ""), "field");
  require_field<S>(field);
  const std::size_t n = index_value(member(doc, "dim", ""), "dim");
  if (n == 0) fail("dim", "must be positive");
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const Json& b = doc.at("basis");
    if (!b.is_array() || b.size() != n) fail("basis", "expected " + std::to_string(n) + " labels");
    for (const auto& l : b) {
      if (!l.is_string()) fail("basis", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::string name = "A";
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) fail("name", "expected a string");
    name = doc.at("name").get<std::string>();
  }
  const Space a = Space::base(field, name, n, labels);
  const Space aa = tensor(a, a);
  const Space k(field);

  const LinMap<S> m = LinMap<S>::from_entries(aa, a, triples<S>(member(doc, "mul", ""), n, field, "mul", false));
  const LinMap<S> delta = LinMap<S>::from_entries(a, aa, triples<S>(member(doc, "comul", ""), n, field, "comul", true));
  std::vector<Entry<S>> ue, ce;
  const auto unit = coefficient_array<S>(member(doc, "unit", ""), n, field, "unit");
  const auto counit = coefficient_array<S>(member(doc, "counit", ""), n, field, "counit");
  for (std::size_t i = 0; i < n; ++i) {
    ue.push_back({i, 0, unit[i]});
    ce.push_back({0, i, counit[i]});
  }
  Bialgebra<S> out = make_bialgebra<S>(name, a, m, LinMap<S>::from_entries(k, a, ue), delta,
                                       LinMap<S>::from_entries(a, k, ce));
  auto antipode = [&](const char* key) -> std::optional<LinMap<S>> {
    if (!doc.contains(key)) return std::nullopt;
    const auto rows = dense_rows<S>(doc.at(key), n, field, key);
    std::vector<Entry<S>> es;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) es.push_back({r, c, rows[r][c]});
    }
    return LinMap<S>::from_entries(a, a, es);
  };
  auto sl = antipode("antipode_left");
  auto sr = antipode("antipode_right");
  if (sl && sr) {
    out.s_left = std::move(sl);
    out.s_right = std::move(sr);
  } else if (sl || sr) {
    if (structural_flags(out).associative) return with_antipodes(std::move(out), sl ? sl : sr, sl ? sl : sr);
    out.s_left = std::move(sl);
    out.s_right = std::move(sr);
  }
  return out;
}

template <class S>
ActionData<S> action_from_json(const Json& doc, const std::string& base_dir) {
  Bialgebra<S> acting = nested_structure<S>(doc, "acting", base_dir);
  Bialgebra<S> acted = nested_structure<S>(doc, "acted", base_dir);
  if (!(acting.field() == acted.field())) fail("acted", "field differs from the acting structure");
  LinMap<S> act = map_from_json<S>(member(doc, "act", ""), tensor(acting.space, acted.space), acted.space, "act");
  return make_action(std::move(acting), std::move(acted), std::move(act));
}

template <class S>
SplitExtension<S> extension_from_json(const Json& doc, const std::string& base_dir) {
  Bialgebra<S> x = nested_structure<S>(doc, "X", base_dir);
  Bialgebra<S> a = nested_structure<S>(doc, "A", base_dir);
  Bialgebra<S> b = nested_structure<S>(doc, "B", base_dir);
  if (!(x.field() == a.field())) fail("X", "field differs from A");
  if (!(b.field() == a.field())) fail("B", "field differs from A");
  LinMap<S> kappa = map_from_json<S>(member(doc, "kappa", ""), x.space, a.space, "kappa");
  LinMap<S> alpha = map_from_json<S>(member(doc, "alpha", ""), a.space, b.space, "alpha");
  LinMap<S> e = map_from_json<S>(member(doc, "e", ""), b.space, a.space, "e");
  LinMap<S> lambda = map_from_json<S>(member(doc, "lambda", ""), a.space, x.space, "lambda");
  return make_extension(std::move(x), std::move(a), std::move(b), std::move(kappa), std::move(alpha), std::move(e),
                        std::move(lambda));
}

template <class S>
Json to_json(const LinMap<S>& f) {
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> es;
  for (const auto& e : f.entries()) es.emplace_back(e.row, e.col, to_string(e.value));
  std::sort(es.begin(), es.end());
  Json entries = Json::array();
  for (const auto& [r, c, v] : es) entries.push_back(Json::array({r, c, v}));
  return Json{{"rows", f.rows()}, {"cols", f.cols()}, {"entries", std::move(entries)}};
}

template <class S>
Json to_json(const Bialgebra<S>& a) {
  const std::size_t n = a.dim();
  Json basis = Json::array();
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.space.describe(i));
  auto triple_json = [&](const LinMap<S>& f, bool comul) {
    Json out = Json::array();
    for (const auto& [i, j, k, c] : sorted_triples(f, n, comul)) out.push_back(Json::array({i, j, k, c}));
    return out;
  };
  Json unit = Json::array();
  Json counit = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    unit.push_back(to_string(a.u.coeff(i, 0)));
    counit.push_back(to_string(a.eps.coeff(0, i)));
  }
  Json doc{{"field", field_json(a.field())},
           {"name", a.name},
           {"dim", n},
           {"basis", std::move(basis)},
           {"mul", triple_json(a.m, false)},
           {"unit", std::move(unit)},
           {"comul", triple_json(a.delta, true)},
           {"counit", std::move(counit)}};
  if (a.s_left) doc["antipode_left"] = dense_json(*a.s_left);
  if (a.s_right) doc["antipode_right"] = dense_json(*a.s_right);
  return doc;
}

template <class S>
Json to_json(const ActionData<S>& a) {
  return Json{{"acting", to_json(a.acting)}, {"acted", to_json(a.acted)}, {"act", to_json(a.act)}};
}

template <class S>
Json to_json(const SplitExtension<S>& s) {
  return Json{{"X", to_json(s.x)},         {"A", to_json(s.a)},         {"B", to_json(s.b)},
              {"kappa", to_json(s.kappa)}, {"alpha", to_json(s.alpha)}, {"e", to_json(s.e)},
              {"lambda", to_json(s.lambda)}};
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

std::string canonicalize(const std::string& text, const std::string& base_dir) {
  const Json doc = parse_json(text);
  const FileKind kind = detect_kind(doc);
  const FieldSpec field = document_field(doc, base_dir);
  return visit_field(field, [&]<class S>() {
    switch (kind) {
      case FileKind::structure: return dump_canonical(to_json(structure_from_json<S>(doc, base_dir)));
      case FileKind::action: return dump_canonical(to_json(action_from_json<S>(doc, base_dir)));
      case FileKind::extension: return dump_canonical(to_json(extension_from_json<S>(doc, base_dir)));
    }
    return std::string();
  });
}

#define HOPFSPLIT_INSTANTIATE(S)                                                                             \
  template Bialgebra<S> structure_from_json<S>(const Json&, const std::string&);                             \
  template ActionData<S> action_from_json<S>(const Json&, const std::string&);                               \
  template SplitExtension<S> extension_from_json<S>(const Json&, const std::string&);                        \
  template LinMap<S> map_from_json<S>(const Json&, const Space&, const Space&, const std::string&);          \
  template Json to_json<S>(const LinMap<S>&);                                                                \
  template Json to_json<S>(const Bialgebra<S>&);                                                             \
  template Json to_json<S>(const ActionData<S>&);                                                            \
  template Json to_json<S>(const SplitExtension<S>&);

HOPFSPLIT_INSTANTIATE(Rational)
HOPFSPLIT_INSTANTIATE(Fp)

}  // namespace hopfsplit
