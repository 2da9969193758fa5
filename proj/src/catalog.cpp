#include "hopfsplit/catalog.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace hopfsplit {

namespace {

std::vector<std::size_t> inverses(const Table& table, std::size_t unit) {
  const std::size_t n = table.size();
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == unit && table[b][a] == unit) inv[a] = b;
    }
    if (inv[a] == n) throw MagmaError("element " + std::to_string(a) + " has no two-sided inverse");
  }
  return inv;
}

template <class S>
Bialgebra<S> verified(Bialgebra<S> a) {
  VerificationReport r = verify_structure(a, natural_level(a));
  if (!r.all_passed()) throw CatalogError(a.name + " fails verification: " + r.first_failure()->name);
  return a;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// "f(a,b(c,d))" -> ("f", {"a", "b(c,d)"}); a bare name has no arguments.
std::pair<std::string, std::vector<std::string>> split_call(const std::string& text) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos) return {t, {}};
  if (t.back() != ')') throw CatalogError("malformed catalog name '" + t + "'");
  std::vector<std::string> args;
  std::string cur;
  int depth = 0;
  for (std::size_t i = open + 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw CatalogError("unbalanced parentheses in '" + t + "'");
    if (c == ',' && depth == 0) {
      args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw CatalogError("unbalanced parentheses in '" + t + "'");
  args.push_back(trim(cur));
  return {trim(t.substr(0, open)), args};
}

std::size_t parse_order(const std::string& digits, const std::string& name) {
  if (digits.empty() || digits.size() > 4) throw CatalogError("bad group order in '" + name + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw CatalogError("bad group order in '" + name + "'");
  }
  const std::size_t n = std::stoul(digits);
  if (n == 0) throw CatalogError("group order must be positive in '" + name + "'");
  return n;
}

template <class S>
Bialgebra<S> build_structure(const std::string& name, const FieldSpec& field) {
  const auto [head, args] = split_call(name);
  if (head == "kS3" && args.empty()) return s3_group_algebra<S>(field);
  if (head == "sweedler4" && args.empty()) return sweedler4<S>(field);
  if (head == "octonion_loop" && args.empty()) return octonion_loop<S>(field);
  if (head == "kCn" && args.size() == 1) return cyclic_group_algebra<S>(parse_order(args[0], name), field);
  if (head.rfind("kC", 0) == 0 && args.empty()) return cyclic_group_algebra<S>(parse_order(head.substr(2), name), field);
  throw CatalogError("unknown catalog structure '" + name + "'");
}

template <class S>
LinMap<S> group_like_map(const Space& dom, const Space& cod, const std::vector<std::size_t>& images) {
  return LinMap<S>::from_columns(dom, cod, [&](std::size_t j) {
    return std::vector<std::pair<std::size_t, S>>{{images[j], scalar<S>(dom.field(), 1)}};
  });
}

}  // namespace

template <class S>
Bialgebra<S> group_algebra(const Table& table, std::size_t unit, const FieldSpec& field, std::string name,
                           std::vector<std::string> labels) {
  const auto inv = inverses(table, unit);
  return linearize_magma<S>(table, unit, inv, inv, field, std::move(name), std::move(labels));
}

template <class S>
Bialgebra<S> cyclic_group_algebra(std::size_t n, const FieldSpec& field) {
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
  }
  return verified(group_algebra<S>(t, 0, field, "C" + std::to_string(n), labels));
}

template <class S>
Bialgebra<S> s3_group_algebra(const FieldSpec& field) {
  // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      const std::size_t a = x % 3, b = x / 3, c = y % 3, d = y / 3;
      const std::size_t r = (a + (b == 0 ? c : 3 - c)) % 3;
      t[x][y] = r + 3 * ((b + d) % 2);
    }
  }
  return verified(group_algebra<S>(t, 0, field, "S3", {"e", "r", "r2", "s", "sr", "sr2"}));
}

template <class S>
Bialgebra<S> sweedler4(const FieldSpec& field) {
  if (!field.is_rational() && field.modulus() == 2) throw FieldError("Sweedler's algebra needs characteristic other than 2");
  // basis g^a x^b at index a + 2b
  const Space h = Space::base(field, "H4", 4, {"1", "g", "x", "gx"});
  const Space hh = tensor(h, h);
  const Space k(field);
  const auto one = scalar<S>(field, 1);
  const auto minus = scalar<S>(field, -1);
  using Col = std::vector<std::pair<std::size_t, S>>;
  const LinMap<S> m = LinMap<S>::from_columns(hh, h, [&](std::size_t j) {
    const std::size_t x = j / 4, y = j % 4;
    const std::size_t a = x % 2, b = x / 2, c = y % 2, d = y / 2;
    if (b + d == 2) return Col{};
    return Col{{(a + c) % 2 + 2 * (b + d), (b * c) % 2 ? minus : one}};
  });
  const LinMap<S> u = LinMap<S>::from_entries(k, h, {{0, 0, one}});
  const LinMap<S> delta = LinMap<S>::from_columns(h, hh, [&](std::size_t j) {
    switch (j) {
      case 0: return Col{{0, one}};
      case 1: return Col{{1 * 4 + 1, one}};
      case 2: return Col{{2 * 4 + 0, one}, {1 * 4 + 2, one}};
      default: return Col{{3 * 4 + 1, one}, {0 * 4 + 3, one}};
    }
  });
  const LinMap<S> eps = LinMap<S>::from_entries(h, k, {{0, 0, one}, {0, 1, one}});
  const LinMap<S> s = LinMap<S>::from_entries(h, h, {{0, 0, one}, {1, 1, one}, {3, 2, minus}, {2, 3, one}});
  Bialgebra<S> b = make_bialgebra<S>("H4", h, m, u, delta, eps);
  return verified(with_antipodes<S>(std::move(b), s, s));
}

Table octonion_loop_table() {
  static constexpr std::array<std::array<int, 3>, 7> triples{
      {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
  // unit products e_i e_j = sign * e_k, with e_0 = 1
  std::array<std::array<std::pair<int, int>, 8>, 8> unit{};
  for (int i = 0; i < 8; ++i) {
    unit[0][i] = {1, i};
    unit[i][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) unit[i][i] = {-1, 0};
  for (const auto& t : triples) {
    for (int r = 0; r < 3; ++r) {
      const int i = t[r], j = t[(r + 1) % 3], k = t[(r + 2) % 3];
      unit[i][j] = {1, k};
      unit[j][i] = {-1, k};
    }
  }
  // element ±e_u at index 2u + (sign < 0)
  Table table(16, std::vector<std::size_t>(16));
  for (std::size_t x = 0; x < 16; ++x) {
    for (std::size_t y = 0; y < 16; ++y) {
      const auto [sign, k] = unit[x / 2][y / 2];
      const bool negative = ((x % 2) + (y % 2) + (sign < 0 ? 1 : 0)) % 2 == 1;
      table[x][y] = 2 * static_cast<std::size_t>(k) + (negative ? 1 : 0);
    }
  }
  return table;
}

template <class S>
Bialgebra<S> octonion_loop(const FieldSpec& field) {
  std::vector<std::string> labels{"1", "-1"};
  for (int i = 1; i < 8; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("-e" + std::to_string(i));
  }
  return verified(group_algebra<S>(octonion_loop_table(), 0, field, "O16", labels));
}

template <class S>
ActionData<S> c2_inv_c3_action(const FieldSpec& field) {
  const Bialgebra<S> b = cyclic_group_algebra<S>(2, field);
  const Bialgebra<S> x = cyclic_group_algebra<S>(3, field);
  std::vector<std::size_t> images;
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t h = 0; h < 3; ++h) images.push_back(g == 0 ? h : (3 - h) % 3);
  }
  return make_action(b, x, group_like_map<S>(tensor(b.space, x.space), x.space, images));
}

template <class S>
ActionData<S> c4_pow_c5_action(const FieldSpec& field) {
  Table units(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t c = 0; c < 4; ++c) units[a][c] = ((a + 1) * (c + 1)) % 5 - 1;
  }
  const Bialgebra<S> b = verified(group_algebra<S>(units, 0, field, "U5", {"1", "2", "3", "4"}));
  Table add(5, std::vector<std::size_t>(5));
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t c = 0; c < 5; ++c) add[a][c] = (a + c) % 5;
  }
  const Bialgebra<S> x = verified(group_algebra<S>(add, 0, field, "Z5", {"0", "1", "2", "3", "4"}));
  std::vector<std::size_t> images;
  for (std::size_t bi = 0; bi < 4; ++bi) {
    for (std::size_t xi = 0; xi < 5; ++xi) {
      std::size_t p = 1;
      for (std::size_t k = 0; k <= bi; ++k) p = p * xi % 5;
      images.push_back(p);
    }
  }
  return make_action(b, x, group_like_map<S>(tensor(b.space, x.space), x.space, images));
}

template <class S>
SplitExtension<S> gamma_extension(const Bialgebra<S>& a, const Bialgebra<S>& b, const LinMap<S>& gamma) {
  return make_extension(trivial_bialgebra<S>(a.field()), a, b, a.u, gamma, invert(gamma), a.eps);
}

template <class S>
SplitEpi<S> s3_sign_split(const FieldSpec& field) {
  Bialgebra<S> a = s3_group_algebra<S>(field);
  Bialgebra<S> b = cyclic_group_algebra<S>(2, field);
  LinMap<S> alpha = group_like_map<S>(a.space, b.space, {0, 0, 0, 1, 1, 1});
  LinMap<S> e = group_like_map<S>(b.space, a.space, {0, 3});
  return SplitEpi<S>{std::move(a), std::move(b), std::move(alpha), std::move(e)};
}

template <class S>
SplitEpi<S> sweedler_to_c2(const FieldSpec& field) {
  Bialgebra<S> a = sweedler4<S>(field);
  Bialgebra<S> b = cyclic_group_algebra<S>(2, field);
  const auto one = scalar<S>(field, 1);
  LinMap<S> alpha = LinMap<S>::from_entries(a.space, b.space, {{0, 0, one}, {1, 1, one}});
  LinMap<S> e = group_like_map<S>(b.space, a.space, {0, 1});
  return SplitEpi<S>{std::move(a), std::move(b), std::move(alpha), std::move(e)};
}

std::string to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::bialgebra: return "bialgebra";
    case EntryKind::hopf: return "hopf";
    case EntryKind::action: return "action";
    case EntryKind::extension: return "extension";
  }
  return "?";
}

template <class S>
CatalogEntry<S> build(const std::string& name, const FieldSpec& field) {
  require_field<S>(field);
  const auto [head, args] = split_call(name);
  CatalogEntry<S> out{trim(name), EntryKind::action, std::nullopt, std::nullopt, std::nullopt};
  auto check_action = [&](ActionData<S> a) {
    VerificationReport r = verify_action(a);
    if (!r.all_passed()) throw CatalogError(name + " fails verification: " + r.first_failure()->name);
    out.action = std::move(a);
    return out;
  };
  if (head == "c2_inv_c3_action" && args.empty()) return check_action(c2_inv_c3_action<S>(field));
  if (head == "c4_pow_c5_action" && args.empty()) return check_action(c4_pow_c5_action<S>(field));
  if (head == "trivial_action") {
    if (args.size() != 2) throw CatalogError("trivial_action takes two structures (acted, acting)");
    return check_action(trivial_action(build_structure<S>(args[1], field), build_structure<S>(args[0], field)));
  }
  if (head == "gamma_extension") {
    if (args.empty() || args.size() > 2) throw CatalogError("gamma_extension takes a structure and optionally id|antipode");
    const Bialgebra<S> a = build_structure<S>(args[0], field);
    const std::string gamma = args.size() == 2 ? args[1] : "id";
    LinMap<S> g;
    if (gamma == "id") {
      g = a.id();
    } else if (gamma == "antipode") {
      g = a.left_antipode();
    } else {
      throw CatalogError("gamma must be id or antipode, got '" + gamma + "'");
    }
    const VerificationReport gm = verify_morphism(g, a, a, MorphismKind::hopf);
    if (!gm.all_passed()) throw CatalogError(name + ": gamma is not a Hopf morphism (" + gm.first_failure()->name + ")");
    SplitExtension<S> s;
    try {
      s = gamma_extension(a, a, g);
    } catch (const SingularError&) {
      throw CatalogError(name + ": gamma is not invertible");
    }
    const VerificationReport r = verify_split_extension(s, extension_level(s));
    if (!r.all_passed()) throw CatalogError(name + " fails verification: " + r.first_failure()->name);
    out.kind = EntryKind::extension;
    out.extension = std::move(s);
    return out;
  }
  Bialgebra<S> a = build_structure<S>(name, field);
  out.kind = a.is_hopf() ? EntryKind::hopf : EntryKind::bialgebra;
  out.structure = std::move(a);
  return out;
}

std::vector<std::string> catalog_names() {
  return {"kC2",
          "kC3",
          "kCn(4)",
          "kS3",
          "sweedler4",
          "octonion_loop",
          "trivial_action(kC3,kC2)",
          "c2_inv_c3_action",
          "c4_pow_c5_action",
          "gamma_extension(kS3)",
          "gamma_extension(kC3,antipode)"};
}

std::pair<mpz_class, mpz_class> monoid_semidirect_eval(const std::pair<mpz_class, mpz_class>& p,
                                                       const std::pair<mpz_class, mpz_class>& q) {
  const auto& [x, b] = p;
  const auto& [y, c] = q;
  if (x < 0 || y < 0 || b < 1 || c < 1) throw std::invalid_argument("monoid_semidirect_eval needs x, y >= 0 and b, c >= 1");
  if (!b.fits_ulong_p()) throw std::invalid_argument("exponent too large");
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), y.get_mpz_t(), b.get_ui());
  return {x + power, b * c};
}

#define HOPFSPLIT_INSTANTIATE(S)                                                                               \
  template Bialgebra<S> group_algebra<S>(const Table&, std::size_t, const FieldSpec&, std::string,            \
                                         std::vector<std::string>);                                           \
  template Bialgebra<S> cyclic_group_algebra<S>(std::size_t, const FieldSpec&);                              \
  template Bialgebra<S> s3_group_algebra<S>(const FieldSpec&);                                               \
  template Bialgebra<S> sweedler4<S>(const FieldSpec&);                                                      \
  template Bialgebra<S> octonion_loop<S>(const FieldSpec&);                                                  \
  template ActionData<S> c2_inv_c3_action<S>(const FieldSpec&);                                              \
  template ActionData<S> c4_pow_c5_action<S>(const FieldSpec&);                                              \
  template SplitExtension<S> gamma_extension<S>(const Bialgebra<S>&, const Bialgebra<S>&, const LinMap<S>&); \
  template SplitEpi<S> s3_sign_split<S>(const FieldSpec&);                                                   \
  template SplitEpi<S> sweedler_to_c2<S>(const FieldSpec&);                                                  \
  template CatalogEntry<S> build<S>(const std::string&, const FieldSpec&);

HOPFSPLIT_INSTANTIATE(Rational)
HOPFSPLIT_INSTANTIATE(Fp)

}  // namespace hopfsplit
