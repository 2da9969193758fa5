#pragma once

#include "hopfsplit/structures.hpp"

namespace hopfsplit {

/// ▷: B⊗X → X.
template <class S>
struct ActionData {
  Bialgebra<S> acting;  // B
  Bialgebra<S> acted;   // X
  LinMap<S> act;
};

template <class S>
ActionData<S> make_action(Bialgebra<S> acting, Bialgebra<S> acted, LinMap<S> act);

/// ▷ = ε_B ⊗ 1_X.
template <class S>
ActionData<S> trivial_action(const Bialgebra<S>& acting, const Bialgebra<S>& acted);

/// Unit, counit and comultiplication compatibility plus the coco condition.
template <class S>
VerificationReport verify_action(const ActionData<S>& a);

/// verify_action, then (when that passes) module associativity, the
/// module-algebra law and the two antipode conditions.
template <class S>
VerificationReport verify_hopf_action(const ActionData<S>& a);

/// Θ = (▷⊗1_B)·(1_B⊗σ_{B,X})·(Δ⊗1_X): B⊗X → X⊗B.
template <class S>
LinMap<S> build_theta(const ActionData<S>& a);

template <class S>
VerificationReport verify_theta_identities(const ActionData<S>& a);

/// The two associativity conditions and whether m_{X⋊B} is associative.
template <class S>
VerificationReport verify_assoc_conditions(const ActionData<S>& a);

/// m_{X⋊B} = (m⊗m)·(1⊗▷⊗1⊗1)·(1⊗1⊗σ_{B,X}⊗1)·(1⊗Δ⊗1⊗1).
template <class S>
LinMap<S> semidirect_multiplication(const ActionData<S>& a);

}  // namespace hopfsplit
