#pragma once

// Split extensions X →κ A ⇄(α, e) B with λ: A → X, the semidirect product of
// an action, the action induced by an extension, and the kernel machinery.

#include <optional>

#include "hopfsplit/actions.hpp"

namespace hopfsplit {

template <class S>
struct SplitExtension {
  Bialgebra<S> x;
  Bialgebra<S> a;
  Bialgebra<S> b;
  LinMap<S> kappa;   // X → A
  LinMap<S> alpha;   // A → B
  LinMap<S> e;       // B → A
  LinMap<S> lambda;  // A → X
};

template <class S>
SplitExtension<S> make_extension(Bialgebra<S> x, Bialgebra<S> a, Bialgebra<S> b, LinMap<S> kappa, LinMap<S> alpha,
                                 LinMap<S> e, LinMap<S> lambda);

/// hopf when X, A and B all carry antipodes.
template <class S>
Level extension_level(const SplitExtension<S>& s);

template <class S>
VerificationReport verify_split_extension(const SplitExtension<S>& s, Level level);

template <class S>
struct SemidirectProduct {
  Bialgebra<S> carrier;  // on X⊗B
  LinMap<S> i1;          // 1_X⊗u_B
  LinMap<S> i2;          // u_X⊗1_B
  LinMap<S> pi1;         // 1_X⊗ε_B
  LinMap<S> pi2;         // ε_X⊗1_B
};

template <class S>
struct Semidirect {
  SemidirectProduct<S> product;
  SplitExtension<S> extension;  // (X, X⋊B, B, i1, π2, i2, π1)
};

/// Throws VerificationError unless the action verifies. The carrier gets the
/// antipodes Θ·(S⊗S)·σ_{X,B} when both sides are Hopf and the action is a Hopf action.
template <class S>
Semidirect<S> semidirect(const ActionData<S>& a);

/// ▷ = λ·m·(e⊗κ).
template <class S>
ActionData<S> induce_action(const SplitExtension<S>& s);

template <class S>
struct IsoPair {
  LinMap<S> phi;  // m·(κ⊗e): X⊗B → A
  LinMap<S> psi;  // (λ⊗α)·Δ: A → X⊗B
};

/// Throws ConsistencyError if φ and ψ are not mutually inverse.
template <class S>
IsoPair<S> build_iso_pair(const SplitExtension<S>& s);

/// λ = (1_X⊗ε_B)·φ⁻¹. Throws SingularError when φ = m·(κ⊗e) is not invertible.
template <class S>
LinMap<S> reconstruct_lambda(const Bialgebra<S>& x, const Bialgebra<S>& a, const Bialgebra<S>& b,
                             const LinMap<S>& kappa, const LinMap<S>& alpha, const LinMap<S>& e);

enum class KernelKind { hopf, left, right };

std::string to_string(KernelKind kind);

template <class S>
Subspace<S> kernel(const LinMap<S>& alpha, const Bialgebra<S>& a, const Bialgebra<S>& b, KernelKind kind);

/// The split extension HKer(α) → A ⇄ B with λ = m·(1⊗(S·e·α))·Δ, where HKer(α)
/// carries the structure restricted from A. Throws HypothesisError unless HKer = LKer.
template <class S>
SplitExtension<S> lambda_from_antipode(const Bialgebra<S>& a, const Bialgebra<S>& b, const LinMap<S>& alpha,
                                       const LinMap<S>& e);

/// κ(X) = HKer(α), ker α against the span of A·κ(X)⁺, and e(B) against {a : (1 ⊗ λ)Δa = a ⊗ 1}.
template <class S>
VerificationReport verify_kernel_cokernel(const SplitExtension<S>& s);

template <class S>
struct MorphismTriple {
  SplitExtension<S> source;
  SplitExtension<S> target;
  LinMap<S> g;  // B → B'
  LinMap<S> v;  // X → X'
  LinMap<S> p;  // A → A'
};

template <class S>
VerificationReport verify_morphism_triple(const MorphismTriple<S>& t);

template <class S>
struct FiveLemmaResult {
  VerificationReport report;
  bool applicable = false;
  std::optional<LinMap<S>> p_inverse;
};

template <class S>
FiveLemmaResult<S> split_short_five(const MorphismTriple<S>& t);

/// A' →ι C' →π B' with auxiliary maps ξ: C' → A' and χ: B' → C'.
template <class S>
struct CleftData {
  Bialgebra<S> sub;       // A'
  Bialgebra<S> total;     // C'
  Bialgebra<S> quotient;  // B'
  LinMap<S> iota;
  LinMap<S> pi;
  LinMap<S> xi;
  LinMap<S> chi;
};

template <class S>
VerificationReport verify_cleft_exact(const CleftData<S>& c);

/// Alternative expressions of the induced action and of λ·m; the
/// antipode-based ones only at hopf level.
template <class S>
VerificationReport check_reexpressed_action(const SplitExtension<S>& s, Level level);

}  // namespace hopfsplit
