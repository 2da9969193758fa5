#pragma once

// Finite-dimensional bialgebras and Hopf algebras given by structure maps.
// Multiplication need not be associative; comultiplication is coassociative.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfsplit/report.hpp"

namespace hopfsplit {

enum class Level { coalgebra, algebra, bialgebra, hopf };

Level parse_level(const std::string& text);
std::string to_string(Level level);

/// (A, m, u, Δ, ε) with optional left and right antipodes.
template <class S>
struct Bialgebra {
  std::string name;
  Space space;
  LinMap<S> m;      // A⊗A → A
  LinMap<S> u;      // I → A
  LinMap<S> delta;  // A → A⊗A
  LinMap<S> eps;    // A → I
  std::optional<LinMap<S>> s_left;
  std::optional<LinMap<S>> s_right;

  const FieldSpec& field() const { return space.field(); }
  std::size_t dim() const { return space.dim(); }
  bool is_hopf() const { return s_left.has_value() && s_right.has_value(); }
  Space unit_space() const { return Space(space.field()); }
  LinMap<S> id() const { return identity<S>(space); }
  const LinMap<S>& left_antipode() const;
  const LinMap<S>& right_antipode() const;
};

/// Checks that the four maps have the shapes of a bialgebra on `space`.
template <class S>
Bialgebra<S> make_bialgebra(std::string name, Space space, LinMap<S> m, LinMap<S> u, LinMap<S> delta, LinMap<S> eps);

/// Installs antipodes. With an associative multiplication a single antipode
/// fills both slots; otherwise both must be given.
template <class S>
Bialgebra<S> with_antipodes(Bialgebra<S> a, std::optional<LinMap<S>> s_left, std::optional<LinMap<S>> s_right);

/// One named check per axiom: coalgebra and algebra levels check only their
/// own axioms, bialgebra adds both plus the compatibilities, hopf adds antipodes.
template <class S>
VerificationReport verify_structure(const Bialgebra<S>& a, Level level);

/// The highest level a structure can be asked for (hopf when antipodes are present).
template <class S>
Level natural_level(const Bialgebra<S>& a) {
  return a.is_hopf() ? Level::hopf : Level::bialgebra;
}

struct StructuralFlags {
  bool associative;
  bool cocommutative;
};

template <class S>
StructuralFlags structural_flags(const Bialgebra<S>& a);

template <class S>
Check associativity_check(const Bialgebra<S>& a);

template <class S>
Check cocommutativity_check(const Bialgebra<S>& a);

/// Which structure a map between two structures must preserve.
enum class MorphismKind { algebra, coalgebra, bialgebra, hopf };

template <class S>
VerificationReport verify_morphism(const LinMap<S>& f, const Bialgebra<S>& source, const Bialgebra<S>& target,
                                   MorphismKind kind);

/// A finite unital magma as a bialgebra of group-like elements; given inverse
/// tables it becomes a Hopf algebra with S_L(g) = left_inv[g], S_R(g) = right_inv[g].
template <class S>
Bialgebra<S> linearize_magma(const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                             const std::optional<std::vector<std::size_t>>& left_inv,
                             const std::optional<std::vector<std::size_t>>& right_inv, const FieldSpec& field,
                             std::string name = "M", std::vector<std::string> labels = {});

/// The structure on the unit object I: every map is the identity of K.
template <class S>
Bialgebra<S> trivial_bialgebra(const FieldSpec& field);

/// Passes iff every part passes; a failure carries the first failing part's witness.
Check combine_checks(const std::string& name, const std::vector<Check>& parts);

}  // namespace hopfsplit
