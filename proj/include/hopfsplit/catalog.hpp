#pragma once

// Named instances. Every builder verifies its output before returning it.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hopfsplit/extensions.hpp"

namespace hopfsplit {

using Table = std::vector<std::vector<std::size_t>>;

/// Group algebra of a finite group given by its table; antipode = inversion.
template <class S>
Bialgebra<S> group_algebra(const Table& table, std::size_t unit, const FieldSpec& field, std::string name,
                           std::vector<std::string> labels = {});

/// kC_n with basis 1, g, g2, ..., g^(n-1).
template <class S>
Bialgebra<S> cyclic_group_algebra(std::size_t n, const FieldSpec& field);

/// kS_3 with basis e, r, r2, s, sr, sr2 (r^a s^b at index a + 3b).
template <class S>
Bialgebra<S> s3_group_algebra(const FieldSpec& field);

/// Sweedler's 4-dimensional Hopf algebra on 1, g, x, gx. Rejects characteristic 2.
template <class S>
Bialgebra<S> sweedler4(const FieldSpec& field);

/// The 16-element octonion loop {±1, ±e1, ..., ±e7}, e_i e_j = e_k on the
/// triples (1,2,4), (2,3,5), (3,4,6), (4,5,7), (5,6,1), (6,7,2), (7,1,3).
template <class S>
Bialgebra<S> octonion_loop(const FieldSpec& field);

Table octonion_loop_table();

/// C2 acting on kC3 by inversion.
template <class S>
ActionData<S> c2_inv_c3_action(const FieldSpec& field);

/// The units {1,2,3,4} of Z/5 acting on kC5 by x ↦ x^b mod 5: an action
/// whose module associativity fails (b=2, c=3, x=2).
template <class S>
ActionData<S> c4_pow_c5_action(const FieldSpec& field);

/// I → A ⇄ B for a Hopf isomorphism γ: A → B, with κ = u_A, α = γ, e = γ⁻¹, λ = ε_A.
template <class S>
SplitExtension<S> gamma_extension(const Bialgebra<S>& a, const Bialgebra<S>& b, const LinMap<S>& gamma);

/// A split epimorphism α with section e.
template <class S>
struct SplitEpi {
  Bialgebra<S> a;
  Bialgebra<S> b;
  LinMap<S> alpha;
  LinMap<S> e;
};

/// Sign map kS3 → kC2 with section g ↦ s.
template <class S>
SplitEpi<S> s3_sign_split(const FieldSpec& field);

/// H4 → kC2, g ↦ g, x ↦ 0, with section g ↦ g.
template <class S>
SplitEpi<S> sweedler_to_c2(const FieldSpec& field);

enum class EntryKind { bialgebra, hopf, action, extension };

std::string to_string(EntryKind kind);

template <class S>
struct CatalogEntry {
  std::string name;
  EntryKind kind;
  std::optional<Bialgebra<S>> structure;
  std::optional<ActionData<S>> action;
  std::optional<SplitExtension<S>> extension;
};

/// Names: kC2, kC3, kCn(n) or kC<n>, kS3, sweedler4, octonion_loop,
/// trivial_action(X,B), c2_inv_c3_action, c4_pow_c5_action,
/// gamma_extension(A) and gamma_extension(A,antipode).
/// Throws CatalogError for unknown names and failed verification.
template <class S>
CatalogEntry<S> build(const std::string& name, const FieldSpec& field);

/// Names accepted by build that take no arguments, plus one example of each parametrized form.
std::vector<std::string> catalog_names();

/// (x, b)·(y, c) = (x + y^b, b·c) on (N, +) ⋊ (N, ·).
std::pair<mpz_class, mpz_class> monoid_semidirect_eval(const std::pair<mpz_class, mpz_class>& p,
                                                       const std::pair<mpz_class, mpz_class>& q);

}  // namespace hopfsplit
