#include "hopfsplit/actions.hpp"

namespace hopfsplit {

template <class S>
ActionData<S> make_action(Bialgebra<S> acting, Bialgebra<S> acted, LinMap<S> act) {
  if (!(acting.field() == acted.field())) throw FieldError("acting and acted structures over different fields");
  const Space bx = tensor(acting.space, acted.space);
  if (!same_shape(act.domain(), bx) || !same_shape(act.codomain(), acted.space)) {
    throw DimensionError("action has shape " + act.domain().shape_str() + " -> " + act.codomain().shape_str() +
                         ", expected " + bx.shape_str() + " -> " + acted.space.shape_str());
  }
  LinMap<S> a = act.reshaped(bx, acted.space);
  return ActionData<S>{std::move(acting), std::move(acted), std::move(a)};
}

template <class S>
ActionData<S> trivial_action(const Bialgebra<S>& acting, const Bialgebra<S>& acted) {
  return make_action(acting, acted, tensor(acting.eps, acted.id()));
}

template <class S>
VerificationReport verify_action(const ActionData<S>& a) {
  const auto& B = a.acting;
  const auto& X = a.acted;
  const auto& act = a.act;
  const LinMap<S> ib = B.id();
  const LinMap<S> ix = X.id();
  VerificationReport r;
  r.add(compare_maps("unit_acts_trivially", act * tensor(B.u, ix), ix));
  r.add(compare_maps("action_on_unit", act * tensor(ib, X.u), X.u * B.eps));
  const LinMap<S> spread = tensor(ib, act) * tensor(B.delta, ix);
  r.add(compare_maps("coco", spread, tensor(ib, act) * tensor(symmetry<S>(B.space, B.space), ix) * tensor(B.delta, ix)));
  r.add(compare_maps("counit_compatible", X.eps * act, tensor(B.eps, X.eps)));
  r.add(compare_maps("comultiplication_compatible", X.delta * act,
                     tensor(act, act) * tensor(ib, symmetry<S>(B.space, X.space), ix) * tensor(B.delta, X.delta)));
  return r;
}

template <class S>
VerificationReport verify_hopf_action(const ActionData<S>& a) {
  VerificationReport r = verify_action(a);
  if (!r.all_passed()) return r;
  const auto& B = a.acting;
  const auto& X = a.acted;
  const auto& act = a.act;
  const LinMap<S> ib = B.id();
  const LinMap<S> ix = X.id();
  r.add(compare_maps("module_associativity", act * tensor(ib, act), act * tensor(B.m, ix)));
  r.add(compare_maps("module_algebra", act * tensor(ib, X.m),
                     X.m * tensor(act, act) * tensor(ib, symmetry<S>(B.space, X.space), ix) * tensor(B.delta, ix, ix)));
  if (!B.is_hopf() || !X.is_hopf()) {
    r.add("left_antipode_equivariance", false, "antipode missing");
    r.add("right_antipode_condition", false, "antipode missing");
    return r;
  }
  r.add(compare_maps("left_antipode_equivariance", act * tensor(ib, *X.s_left), *X.s_left * act));
  r.add(compare_maps("right_antipode_condition", act * tensor(*B.s_right, *X.s_right) * tensor(ib, act) * tensor(B.delta, ix),
                     tensor(B.eps, *X.s_right)));
  return r;
}

template <class S>
LinMap<S> build_theta(const ActionData<S>& a) {
  const auto& B = a.acting;
  const auto& X = a.acted;
  return tensor(a.act, B.id()) * tensor(B.id(), symmetry<S>(B.space, X.space)) * tensor(B.delta, X.id());
}

template <class S>
VerificationReport verify_theta_identities(const ActionData<S>& a) {
  const auto& B = a.acting;
  const auto& X = a.acted;
  const LinMap<S> theta = build_theta(a);
  const LinMap<S> ib = B.id();
  const LinMap<S> ix = X.id();
  VerificationReport r;
  r.add(compare_maps("theta_acted_multiplication", tensor(X.m, ib) * tensor(ix, theta) * tensor(theta, ix),
                     theta * tensor(ib, X.m)));
  r.add(compare_maps("theta_acting_unit", theta * tensor(B.u, ix), tensor(ix, B.u)));
  r.add(compare_maps("theta_acting_multiplication", tensor(ix, B.m) * tensor(theta, ib) * tensor(ib, theta),
                     theta * tensor(B.m, ix)));
  r.add(compare_maps("theta_acted_unit", theta * tensor(ib, X.u), tensor(X.u, ib)));
  return r;
}

template <class S>
LinMap<S> semidirect_multiplication(const ActionData<S>& a) {
  const auto& B = a.acting;
  const auto& X = a.acted;
  const LinMap<S> ib = B.id();
  const LinMap<S> ix = X.id();
  return tensor(X.m, B.m) * tensor(ix, a.act, ib, ib) * tensor(ix, ib, symmetry<S>(B.space, X.space), ib) *
         tensor(ix, B.delta, ix, ib);
}

template <class S>
VerificationReport verify_assoc_conditions(const ActionData<S>& a) {
  const auto& B = a.acting;
  const auto& X = a.acted;
  const auto& act = a.act;
  const LinMap<S> ib = B.id();
  const LinMap<S> ix = X.id();
  VerificationReport r;
  r.add(compare_maps("module_associativity", act * tensor(B.m, ix), act * tensor(ib, act)));
  r.add(compare_maps("module_algebra", act * tensor(ib, X.m),
                     X.m * tensor(act, act) * tensor(ib, symmetry<S>(B.space, X.space), ix) * tensor(B.delta, ix, ix)));
  const LinMap<S> m = semidirect_multiplication(a);
  const LinMap<S> one = identity<S>(tensor(X.space, B.space));
  Check assoc = compare_maps("semidirect_associative", m * tensor(m, one), m * tensor(one, m));
  assoc.informational = true;
  r.add(std::move(assoc));
  return r;
}

#define HOPFSPLIT_INSTANTIATE(S)                                                                 \
  template ActionData<S> make_action<S>(Bialgebra<S>, Bialgebra<S>, LinMap<S>);                  \
  template ActionData<S> trivial_action<S>(const Bialgebra<S>&, const Bialgebra<S>&);            \
  template VerificationReport verify_action<S>(const ActionData<S>&);                            \
  template VerificationReport verify_hopf_action<S>(const ActionData<S>&);                       \
  template LinMap<S> build_theta<S>(const ActionData<S>&);                                       \
  template VerificationReport verify_theta_identities<S>(const ActionData<S>&);                  \
  template VerificationReport verify_assoc_conditions<S>(const ActionData<S>&);                  \
  template LinMap<S> semidirect_multiplication<S>(const ActionData<S>&);

HOPFSPLIT_INSTANTIATE(Rational)
HOPFSPLIT_INSTANTIATE(Fp)

}  // namespace hopfsplit
