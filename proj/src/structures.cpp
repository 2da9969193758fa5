#include "hopfsplit/structures.hpp"

namespace hopfsplit {

Level parse_level(const std::string& text) {
  if (text == "coalgebra") return Level::coalgebra;
  if (text == "algebra") return Level::algebra;
  if (text == "bialgebra") return Level::bialgebra;
  if (text == "hopf") return Level::hopf;
  throw ParseError("unknown level '" + text + "'");
}

std::string to_string(Level level) {
  switch (level) {
    case Level::coalgebra: return "coalgebra";
    case Level::algebra: return "algebra";
    case Level::bialgebra: return "bialgebra";
    case Level::hopf: return "hopf";
  }
  return "";
}

Check combine_checks(const std::string& name, const std::vector<Check>& parts) {
  Check c{name, true, std::nullopt, false, ""};
  for (const auto& p : parts) {
    if (!p.passed) {
      c.passed = false;
      c.witness = p.witness;
      if (c.witness) c.witness->detail = c.witness->detail.empty() ? p.name : p.name + ": " + c.witness->detail;
      break;
    }
  }
  return c;
}

template <class S>
const LinMap<S>& Bialgebra<S>::left_antipode() const {
  if (!s_left) throw Error(name + " has no left antipode");
  return *s_left;
}

template <class S>
const LinMap<S>& Bialgebra<S>::right_antipode() const {
  if (!s_right) throw Error(name + " has no right antipode");
  return *s_right;
}

namespace {

template <class S>
void require_map_shape(const LinMap<S>& f, const Space& dom, const Space& cod, const std::string& what) {
  if (!same_shape(f.domain(), dom) || !same_shape(f.codomain(), cod)) {
    throw DimensionError(what + " has shape " + f.domain().shape_str() + " -> " + f.codomain().shape_str() +
                         ", expected " + dom.shape_str() + " -> " + cod.shape_str());
  }
}

}  // namespace

template <class S>
Bialgebra<S> make_bialgebra(std::string name, Space space, LinMap<S> m, LinMap<S> u, LinMap<S> delta, LinMap<S> eps) {
  const Space i(space.field());
  const Space aa = tensor(space, space);
  require_map_shape(m, aa, space, name + ".m");
  require_map_shape(u, i, space, name + ".u");
  require_map_shape(delta, space, aa, name + ".delta");
  require_map_shape(eps, space, i, name + ".eps");
  // Re-anchor every map on the structure's own words so composites line up.
  Bialgebra<S> a;
  a.name = std::move(name);
  a.m = m.reshaped(aa, space);
  a.u = u.reshaped(i, space);
  a.delta = delta.reshaped(space, aa);
  a.eps = eps.reshaped(space, i);
  a.space = std::move(space);
  return a;
}

template <class S>
Bialgebra<S> with_antipodes(Bialgebra<S> a, std::optional<LinMap<S>> s_left, std::optional<LinMap<S>> s_right) {
  if (s_left) require_map_shape(*s_left, a.space, a.space, a.name + ".antipode_left");
  if (s_right) require_map_shape(*s_right, a.space, a.space, a.name + ".antipode_right");
  if (s_left.has_value() != s_right.has_value()) {
    if (!structural_flags(a).associative) {
      throw Error(a.name + " is not associative, so both a left and a right antipode are required");
    }
    if (!s_left) s_left = s_right;
    if (!s_right) s_right = s_left;
  }
  if (s_left) a.s_left = s_left->reshaped(a.space, a.space);
  if (s_right) a.s_right = s_right->reshaped(a.space, a.space);
  return a;
}

template <class S>
VerificationReport verify_structure(const Bialgebra<S>& a, Level level) {
  VerificationReport r;
  const LinMap<S> one = a.id();
  const Space& A = a.space;
  const LinMap<S> sigma = symmetry<S>(A, A);

  if (level != Level::algebra) {
    r.add(compare_maps("coassociativity", tensor(a.delta, one) * a.delta, tensor(one, a.delta) * a.delta));
    r.add(compare_maps("counit_left", tensor(a.eps, one) * a.delta, one));
    r.add(compare_maps("counit_right", tensor(one, a.eps) * a.delta, one));
  }
  if (level == Level::coalgebra) return r;

  r.add(compare_maps("unit_left", a.m * tensor(a.u, one), one));
  r.add(compare_maps("unit_right", a.m * tensor(one, a.u), one));
  if (level == Level::algebra) return r;

  const LinMap<S> mid = tensor(one, sigma, one);
  r.add(compare_maps("comultiplication_multiplicative", a.delta * a.m,
                     tensor(a.m, a.m) * mid * tensor(a.delta, a.delta)));
  r.add(compare_maps("comultiplication_unital", a.delta * a.u, tensor(a.u, a.u)));
  r.add(compare_maps("counit_multiplicative", a.eps * a.m, tensor(a.eps, a.eps)));
  r.add(compare_maps("counit_unital", a.eps * a.u, identity<S>(a.unit_space())));
  if (level == Level::bialgebra) return r;

  const char* names[] = {"antipode", "left_antipode_anti_algebra", "left_antipode_anti_coalgebra",
                         "right_antipode_anti_algebra", "right_antipode_anti_coalgebra"};
  if (!a.is_hopf()) {
    for (const char* n : names) r.add(n, false, "no antipode supplied");
    return r;
  }
  const LinMap<S>& sl = *a.s_left;
  const LinMap<S>& sr = *a.s_right;
  const LinMap<S> ue = a.u * a.eps;
  r.add(combine_checks(names[0], {compare_maps("left", a.m * tensor(sl, one) * a.delta, ue),
                                  compare_maps("right", a.m * tensor(one, sr) * a.delta, ue)}));
  auto anti_algebra = [&](const char* name, const LinMap<S>& s) {
    return combine_checks(name, {compare_maps("multiplication", s * a.m, a.m * tensor(s, s) * sigma),
                                 compare_maps("unit", s * a.u, a.u)});
  };
  auto anti_coalgebra = [&](const char* name, const LinMap<S>& s) {
    return combine_checks(name, {compare_maps("comultiplication", a.delta * s, tensor(s, s) * sigma * a.delta),
                                 compare_maps("counit", a.eps * s, a.eps)});
  };
  r.add(anti_algebra(names[1], sl));
  r.add(anti_coalgebra(names[2], sl));
  r.add(anti_algebra(names[3], sr));
  r.add(anti_coalgebra(names[4], sr));
  return r;
}

template <class S>
Check associativity_check(const Bialgebra<S>& a) {
  const LinMap<S> one = a.id();
  return compare_maps("associativity", a.m * tensor(a.m, one), a.m * tensor(one, a.m));
}

template <class S>
Check cocommutativity_check(const Bialgebra<S>& a) {
  return compare_maps("cocommutativity", symmetry<S>(a.space, a.space) * a.delta, a.delta);
}

template <class S>
StructuralFlags structural_flags(const Bialgebra<S>& a) {
  return {associativity_check(a).passed, cocommutativity_check(a).passed};
}

template <class S>
VerificationReport verify_morphism(const LinMap<S>& f, const Bialgebra<S>& source, const Bialgebra<S>& target,
                                   MorphismKind kind) {
  require_map_shape(f, source.space, target.space, "morphism " + source.name + " -> " + target.name);
  const LinMap<S> g = f.reshaped(source.space, target.space);
  VerificationReport r;
  const bool alg = kind != MorphismKind::coalgebra;
  const bool coalg = kind != MorphismKind::algebra;
  if (alg) {
    r.add(compare_maps("preserves_multiplication", g * source.m, target.m * tensor(g, g)));
    r.add(compare_maps("preserves_unit", g * source.u, target.u));
  }
  if (coalg) {
    r.add(compare_maps("preserves_comultiplication", target.delta * g, tensor(g, g) * source.delta));
    r.add(compare_maps("preserves_counit", target.eps * g, source.eps));
  }
  if (kind == MorphismKind::hopf) {
    if (!source.is_hopf() || !target.is_hopf()) {
      r.add("preserves_left_antipode", false, "antipode missing");
      r.add("preserves_right_antipode", false, "antipode missing");
    } else {
      r.add(compare_maps("preserves_left_antipode", g * *source.s_left, *target.s_left * g));
      r.add(compare_maps("preserves_right_antipode", g * *source.s_right, *target.s_right * g));
    }
  }
  return r;
}

template <class S>
Bialgebra<S> linearize_magma(const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                             const std::optional<std::vector<std::size_t>>& left_inv,
                             const std::optional<std::vector<std::size_t>>& right_inv, const FieldSpec& field,
                             std::string name, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw MagmaError("empty multiplication table");
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != n) throw MagmaError("expected " + std::to_string(n) + " labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw MagmaError("row " + labels[i] + " of the table has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw MagmaError("product " + labels[i] + "*" + labels[j] + " is out of range");
    }
  }
  if (unit >= n) throw MagmaError("unit index out of range");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[unit][g] != g || table[g][unit] != g) {
      throw MagmaError(labels[unit] + " is not a two-sided unit (fails at " + labels[g] + ")");
    }
  }
  auto check_inverse = [&](const std::vector<std::size_t>& inv, bool left) {
    if (inv.size() != n) throw MagmaError("inverse table has the wrong length");
    for (std::size_t g = 0; g < n; ++g) {
      if (inv[g] >= n) throw MagmaError("inverse of " + labels[g] + " is out of range");
      const std::size_t p = left ? table[inv[g]][g] : table[g][inv[g]];
      if (p != unit) {
        throw MagmaError(std::string(left ? "left" : "right") + " inverse fails at element " + labels[g]);
      }
    }
  };
  if (left_inv) check_inverse(*left_inv, true);
  if (right_inv) check_inverse(*right_inv, false);

  const Space A = Space::base(field, name, n, labels);
  const Space AA = tensor(A, A);
  const Space I(field);
  const S one = scalar<S>(field, 1);
  using Col = std::vector<std::pair<std::size_t, S>>;
  auto m = LinMap<S>::from_columns(AA, A, [&](std::size_t c) { return Col{{table[c / n][c % n], one}}; });
  auto u = LinMap<S>::from_columns(I, A, [&](std::size_t) { return Col{{unit, one}}; });
  auto delta = LinMap<S>::from_columns(A, AA, [&](std::size_t g) { return Col{{g * n + g, one}}; });
  auto eps = LinMap<S>::from_columns(A, I, [&](std::size_t) { return Col{{0, one}}; });
  Bialgebra<S> a = make_bialgebra(name, A, m, u, delta, eps);
  auto perm = [&](const std::vector<std::size_t>& inv) {
    return LinMap<S>::from_columns(A, A, [&](std::size_t g) { return Col{{inv[g], one}}; });
  };
  if (!left_inv && !right_inv) return a;
  std::optional<LinMap<S>> sl, sr;
  if (left_inv) sl = perm(*left_inv);
  if (right_inv) sr = perm(*right_inv);
  return with_antipodes(std::move(a), sl, sr);
}

template <class S>
Bialgebra<S> trivial_bialgebra(const FieldSpec& field) {
  const Space I(field);
  const LinMap<S> one = identity<S>(I);
  Bialgebra<S> a = make_bialgebra<S>("I", I, one, one, one, one);
  a.s_left = one;
  a.s_right = one;
  return a;
}

#define HOPFSPLIT_INSTANTIATE(S)                                                                                   \
  template struct Bialgebra<S>;                                                                                    \
  template Bialgebra<S> make_bialgebra<S>(std::string, Space, LinMap<S>, LinMap<S>, LinMap<S>, LinMap<S>);         \
  template Bialgebra<S> with_antipodes<S>(Bialgebra<S>, std::optional<LinMap<S>>, std::optional<LinMap<S>>);       \
  template VerificationReport verify_structure<S>(const Bialgebra<S>&, Level);                                     \
  template StructuralFlags structural_flags<S>(const Bialgebra<S>&);                                               \
  template Check associativity_check<S>(const Bialgebra<S>&);                                                      \
  template Check cocommutativity_check<S>(const Bialgebra<S>&);                                                    \
  template VerificationReport verify_morphism<S>(const LinMap<S>&, const Bialgebra<S>&, const Bialgebra<S>&,       \
                                                 MorphismKind);                                                    \
  template Bialgebra<S> linearize_magma<S>(const std::vector<std::vector<std::size_t>>&, std::size_t,              \
                                           const std::optional<std::vector<std::size_t>>&,                         \
                                           const std::optional<std::vector<std::size_t>>&, const FieldSpec&,       \
                                           std::string, std::vector<std::string>);                                 \
  template Bialgebra<S> trivial_bialgebra<S>(const FieldSpec&);

HOPFSPLIT_INSTANTIATE(Rational)
HOPFSPLIT_INSTANTIATE(Fp)

}  // namespace hopfsplit
