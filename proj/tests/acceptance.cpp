// One line per acceptance criterion; exit status is the number of failures.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <unistd.h>

#include "hopfsplit/io.hpp"
#include "oracle.hpp"

using namespace hopfsplit;
using Q = Rational;
namespace fs = std::filesystem;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

struct Failure {
  std::string why;
};

void need(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::vector<SplitExtension<Q>> catalog_extensions() {
  std::vector<SplitExtension<Q>> out;
  for (const auto& name : catalog_names()) {
    const CatalogEntry<Q> e = build<Q>(name, QQ);
    if (e.extension) out.push_back(*e.extension);
    if (e.action) out.push_back(semidirect(*e.action).extension);
  }
  const auto split = s3_sign_split<Q>(QQ);
  out.push_back(lambda_from_antipode(split.a, split.b, split.alpha, split.e));
  return out;
}

std::vector<ActionData<Q>> catalog_actions() {
  std::vector<ActionData<Q>> out;
  for (const auto& name : catalog_names()) {
    const CatalogEntry<Q> e = build<Q>(name, QQ);
    if (e.action) out.push_back(*e.action);
  }
  return out;
}

// Group-like actions of kC_nb on kC_nx fixing 1 in both slots.
std::vector<ActionData<Q>> random_actions(std::mt19937& rng, std::size_t count) {
  std::vector<ActionData<Q>> out;
  std::uniform_int_distribution<std::size_t> nb(2, 4), nx(3, 5);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t b = nb(rng), x = nx(rng);
    out.push_back(oracle::linearize_action(oracle::random_group_like_action(rng, b, x),
                                           cyclic_group_algebra<Q>(b, QQ), cyclic_group_algebra<Q>(x, QQ)));
  }
  return out;
}

bool mutation_detected(const Bialgebra<Q>& good, const std::function<void(Bialgebra<Q>&)>& mutate) {
  Bialgebra<Q> b = good;
  mutate(b);
  const VerificationReport r = verify_structure(b, Level::hopf);
  for (const Check& c : r.checks()) {
    if (!c.passed && !c.informational && c.witness) return true;
  }
  return false;
}

void criterion_1() {
  using P = std::pair<mpz_class, mpz_class>;
  const P left = monoid_semidirect_eval(monoid_semidirect_eval({0, 2}, {1, 1}), {1, 1});
  const P right = monoid_semidirect_eval({0, 2}, monoid_semidirect_eval({1, 1}, {1, 1}));
  need(left == P{2, 2}, "left-nested product is not (2,2)");
  need(right == P{4, 2}, "right-nested product is not (4,2)");
}

void criterion_2() {
  for (const auto& name : catalog_names()) {
    const CatalogEntry<Q> e = build<Q>(name, QQ);
    if (!e.structure) continue;
    need(verify_structure(*e.structure, natural_level(*e.structure)).all_passed(), name + " fails its level");
  }
  const Bialgebra<Q> c2 = cyclic_group_algebra<Q>(2, QQ);
  using Slot = LinMap<Q> Bialgebra<Q>::*;
  const std::vector<std::pair<std::string, Slot>> slots{
      {"m", &Bialgebra<Q>::m}, {"u", &Bialgebra<Q>::u}, {"delta", &Bialgebra<Q>::delta}, {"eps", &Bialgebra<Q>::eps}};
  std::size_t mutations = 0;
  for (const auto& [label, slot] : slots) {
    const LinMap<Q>& f = c2.*slot;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t c = 0; c < f.cols(); ++c) {
        ++mutations;
        const bool seen = mutation_detected(c2, [&](Bialgebra<Q>& b) {
          LinMap<Q>& g = b.*slot;
          g = g.with_entry(r, c, g.entry(r, c) + Q(1));
        });
        need(seen, label + "(" + std::to_string(r) + "," + std::to_string(c) + ") mutation undetected");
      }
    }
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      mutations += 2;
      need(mutation_detected(c2, [&](Bialgebra<Q>& b) { b.s_left = b.s_left->with_entry(r, c, b.s_left->entry(r, c) + Q(1)); }),
           "S_L mutation undetected");
      need(mutation_detected(c2, [&](Bialgebra<Q>& b) { b.s_right = b.s_right->with_entry(r, c, b.s_right->entry(r, c) + Q(1)); }),
           "S_R mutation undetected");
    }
  }
  need(mutations == 28, "unexpected number of structure constants");
}

void criterion_3() {
  for (const ActionData<Q>& a : catalog_actions()) {
    const SplitExtension<Q> s = semidirect(a).extension;
    need(verify_split_extension(s, extension_level(s)).all_passed(), "semidirect of " + a.acting.name + " fails");
    need(induce_action(s).act == a.act, "induced action differs");
  }
  for (const SplitExtension<Q>& s : catalog_extensions()) {
    const IsoPair<Q> p = build_iso_pair(s);
    const LinMap<Q> phi = p.phi.reshaped(s.a.space, s.a.space);
    const LinMap<Q> psi = p.psi.reshaped(s.a.space, s.a.space);
    need(phi * psi == s.a.id() && psi * phi == s.a.id(), "phi and psi are not inverse on " + s.a.name);
    const SplitExtension<Q> back = semidirect(induce_action(s)).extension;
    const MorphismTriple<Q> t{s, back, s.b.id(), s.x.id(), p.psi.reshaped(s.a.space, back.a.space)};
    need(verify_morphism_triple(t).all_passed(), "(1,1,psi) fails on " + s.a.name);
  }
}

void criterion_4() {
  const ActionData<Q> good = c2_inv_c3_action<Q>(QQ);
  const VerificationReport g = verify_assoc_conditions(good);
  need(g.passed("module_associativity") && g.passed("module_algebra"), "c2_inv_c3 fails a condition");
  need(structural_flags(semidirect(good).product.carrier).associative, "kC3⋊kC2 is not associative");

  const ActionData<Q> bad = c4_pow_c5_action<Q>(QQ);
  const VerificationReport b = verify_assoc_conditions(bad);
  need(!b.passed("module_associativity") && !b.passed("module_algebra"), "c4_pow_c5 passes a condition");
  const Bialgebra<Q> carrier = semidirect(bad).product.carrier;
  need(carrier.dim() == 20, "carrier is not 20-dimensional");
  const Check a = associativity_check(carrier);
  need(!a.passed && a.witness && a.witness->domain_index.size() == 6, "no non-associative basis triple");
  // recompute the triple with integers: ((x,b)(y,c))(z,d) against (x,b)((y,c)(z,d)) on Z5 ⋊ U5
  const auto& w = a.witness->domain_index;
  auto power = [](std::size_t x, std::size_t b) {
    std::size_t v = 1;
    for (std::size_t k = 0; k < b; ++k) v = v * x % 5;
    return v;
  };
  auto mul = [&](std::pair<std::size_t, std::size_t> p, std::pair<std::size_t, std::size_t> q) {
    return std::pair<std::size_t, std::size_t>{(p.first + power(q.first, p.second)) % 5, p.second * q.second % 5};
  };
  const std::pair<std::size_t, std::size_t> p{w[0], w[1] + 1}, q{w[2], w[3] + 1}, r{w[4], w[5] + 1};
  need(mul(mul(p, q), r) != mul(p, mul(q, r)), "witness triple associates in Z5 ⋊ U5");
}

void criterion_5() {
  std::size_t count = 0;
  for (const SplitExtension<Q>& s : catalog_extensions()) {
    need(reconstruct_lambda(s.x, s.a, s.b, s.kappa, s.alpha, s.e) == s.lambda, "lambda differs on " + s.a.name);
    ++count;
  }
  std::mt19937 rng(101);
  std::size_t random = 0;
  for (const ActionData<Q>& a : random_actions(rng, 25)) {
    const SplitExtension<Q> s = semidirect(a).extension;
    need(verify_split_extension(s, extension_level(s)).all_passed(), "random extension is not valid");
    need(reconstruct_lambda(s.x, s.a, s.b, s.kappa, s.alpha, s.e) == s.lambda, "lambda differs on a random extension");
    ++random;
  }
  need(random == 25 && count >= 5, "too few extensions");
}

void criterion_6() {
  const auto split = s3_sign_split<Q>(QQ);
  const SplitExtension<Q> s = lambda_from_antipode(split.a, split.b, split.alpha, split.e);
  const VerificationReport r = verify_split_extension(s, Level::hopf);
  need(r.all_passed(), "kS3 extension fails:\n" + r.text());
  need(r.find("induced_action_s_right_condition") != nullptr, "hopf conditions were not evaluated");

  const auto h = sweedler_to_c2<Q>(QQ);
  bool raised = false;
  try {
    (void)lambda_from_antipode(h.a, h.b, h.alpha, h.e);
  } catch (const HypothesisError&) {
    raised = true;
  }
  need(raised, "H4 did not raise the hypothesis error");
  const Subspace<Q> l = kernel(h.alpha, h.a, h.b, KernelKind::left);
  const Subspace<Q> rk = kernel(h.alpha, h.a, h.b, KernelKind::right);
  need(l.dim() == 2 && rk.dim() == 2, "LKer or RKer is not 2-dimensional");
  need(!(l == rk), "LKer equals RKer");
}

MorphismTriple<Q> transported_triple(const ActionData<Q>& a, std::size_t k, std::size_t j) {
  const std::size_t nx = a.acted.dim(), nb = a.acting.dim();
  std::vector<std::size_t> vx(nx), gb(nb), inv_b(nb);
  for (std::size_t x = 0; x < nx; ++x) vx[x] = x * k % nx;
  for (std::size_t b = 0; b < nb; ++b) {
    gb[b] = b * j % nb;
    inv_b[gb[b]] = b;
  }
  std::vector<Entry<Q>> es;
  for (std::size_t b2 = 0; b2 < nb; ++b2) {
    for (std::size_t x = 0; x < nx; ++x) {
      const auto col = a.act.column(inv_b[b2] * nx + x);
      es.push_back({vx[col.front().first], b2 * nx + vx[x], Q(1)});
    }
  }
  const ActionData<Q> moved = make_action(a.acting, a.acted, LinMap<Q>::from_entries(tensor(a.acting.space, a.acted.space), a.acted.space, es));
  const SplitExtension<Q> s = semidirect(a).extension;
  const SplitExtension<Q> t = semidirect(moved).extension;
  const LinMap<Q> v = oracle::basis_map<Q>(s.x.space, t.x.space, vx);
  const LinMap<Q> g = oracle::basis_map<Q>(s.b.space, t.b.space, gb);
  return {s, t, g, v, tensor(v, g).reshaped(s.a.space, t.a.space)};
}

void certify(const MorphismTriple<Q>& t, const std::string& what) {
  need(verify_morphism_triple(t).all_passed(), what + " is not a morphism triple");
  const FiveLemmaResult<Q> f = split_short_five(t);
  need(f.applicable && f.report.all_passed() && f.p_inverse, what + ": p not certified invertible");
  need(t.p * *f.p_inverse == t.target.a.id() && *f.p_inverse * t.p == t.source.a.id(), what + ": p·p⁻¹ ≠ id");
}

void criterion_7() {
  const SplitExtension<Q> s = semidirect(c2_inv_c3_action<Q>(QQ)).extension;
  const LinMap<Q> v = oracle::basis_map<Q>(s.x.space, s.x.space, {0, 2, 1});
  certify({s, s, s.b.id(), v, tensor(v, s.b.id()).reshaped(s.a.space, s.a.space)}, "inversion triple");

  std::mt19937 rng(7);
  std::size_t done = 0;
  for (const ActionData<Q>& a : random_actions(rng, 10)) {
    const std::size_t nx = a.acted.dim(), nb = a.acting.dim();
    std::vector<std::size_t> ks, js;
    for (std::size_t k = 1; k < nx; ++k) if (std::gcd(k, nx) == 1) ks.push_back(k);
    for (std::size_t j = 1; j < nb; ++j) if (std::gcd(j, nb) == 1) js.push_back(j);
    const std::size_t k = ks[rng() % ks.size()], j = js[rng() % js.size()];
    certify(transported_triple(a, k, j), "random triple " + std::to_string(done));
    ++done;
  }
  need(done == 10, "fewer than 10 random triples");
}

void criterion_8() {
  const auto split = s3_sign_split<Q>(QQ);
  const SplitExtension<Q> s = lambda_from_antipode(split.a, split.b, split.alpha, split.e);
  const VerificationReport r = verify_cleft_exact(CleftData<Q>{s.x, s.a, s.b, s.kappa, s.alpha, s.lambda, s.e});
  need(r.all_passed(), r.text());
  for (const char* name : {"iota_injective", "pi_surjective", "pi_kernel_generated_by_augmentation",
                           "iota_image_is_left_kernel", "cleft_xi_chi", "cleft_decomposition"}) {
    need(r.passed(name), std::string(name) + " missing or failing");
  }
}

void criterion_9() {
  std::size_t actions = 0, extensions = 0;
  for (const ActionData<Q>& a : catalog_actions()) {
    if (!verify_hopf_action(a).all_passed()) continue;
    need(verify_theta_identities(a).all_passed(), "theta identities fail");
    ++actions;
  }
  for (const SplitExtension<Q>& s : catalog_extensions()) {
    if (extension_level(s) != Level::hopf) continue;
    const VerificationReport r = check_reexpressed_action(s, Level::hopf);
    need(r.all_passed(), "re-expressed action fails on " + s.a.name + ":\n" + r.text());
    need(verify_theta_identities(induce_action(s)).all_passed(), "theta identities fail on " + s.a.name);
    ++extensions;
  }
  need(actions >= 2 && extensions >= 4, "too few Hopf instances");
}

void criterion_10() {
  const CatalogEntry<Q> e = build<Q>("octonion_loop", QQ);
  need(e.structure && e.structure->dim() == 16, "not 16-dimensional");
  const VerificationReport r = verify_structure(*e.structure, Level::hopf);
  need(r.all_passed() && r.size() == 14, "hopf checks fail");
  const StructuralFlags f = structural_flags(*e.structure);
  need(!f.associative && f.cocommutative, "flags wrong");
  need(oracle::table_of(*e.structure) == oracle::octonion_table(), "table differs from the Fano-plane oracle");
}

void criterion_11() {
  std::mt19937 rng(11);
  std::vector<ActionData<Q>> actions = catalog_actions();
  for (auto& a : random_actions(rng, 10)) actions.push_back(std::move(a));
  std::size_t seen = 0;
  for (const ActionData<Q>& a : actions) {
    if (!structural_flags(a.acting).cocommutative) continue;
    const VerificationReport r = verify_action(a);
    bool rest = true;
    for (const Check& c : r.checks()) rest = rest && (c.name == "coco" || c.passed);
    if (rest) need(r.passed("coco"), "coco fails on a cocommutative action");
    ++seen;
  }
  for (const SplitExtension<Q>& s : catalog_extensions()) {
    if (!structural_flags(s.a).cocommutative) continue;
    const VerificationReport r = verify_split_extension(s, extension_level(s));
    bool rest = true;
    for (const Check& c : r.checks()) rest = rest && (c.name == "lambda_coco" || c.passed);
    if (rest) need(r.passed("lambda_coco"), "lambda_coco fails on " + s.a.name);
    ++seen;
  }
  need(seen >= 10, "too few cocommutative instances");
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOPFSPLIT_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Failure{"popen failed"};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion_12() {
  const fs::path dir = fs::temp_directory_path() / ("hopfsplit-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path p;
    ~Cleanup() { fs::remove_all(p); }
  } cleanup{dir};
  const std::string good = (dir / "c2.json").string(), bad = (dir / "bad.json").string(),
                    cut = (dir / "cut.json").string();
  need(run("catalog kC2 -o " + good).code == 0, "catalog failed");
  need(run("verify " + good + " --level hopf").code == 0, "valid file does not exit 0");
  Json doc = load_json(good);
  doc["mul"][0][3] = "2";
  std::ofstream(bad) << doc.dump();
  const Run b = run("verify " + bad + " --level hopf");
  need(b.code == 1 && b.out.find("FAIL") != std::string::npos, "mutated file does not exit 1 with a failure");
  const std::string text = slurp(good);
  std::ofstream(cut) << text.substr(0, text.size() - 9);
  need(run("verify " + cut).code == 2, "truncated file does not exit 2");
  need(run("no-such-command").code == 2, "unknown subcommand does not exit 2");

  need(canonicalize(text, dir.string()) == text, "catalog output is not canonical");
  for (const auto& name : catalog_names()) {
    const std::string path = (dir / "entry.json").string();
    need(run("catalog '" + name + "' -o " + path).code == 0, "catalog " + name + " failed");
    const std::string once = slurp(path);
    need(canonicalize(once, dir.string()) == once, name + " does not round-trip byte-exactly");
  }
  for (const char* name : {"c2_inv_c3_action", "c4_pow_c5_action", "trivial_action(kC3,kC2)"}) {
    const std::string act = (dir / "act.json").string(), ext = (dir / "ext.json").string(),
                      back = (dir / "back.json").string();
    need(run(std::string("catalog '") + name + "' -o " + act).code == 0, "catalog failed");
    need(run("semidirect " + act + " -o " + ext).code == 0, "semidirect failed");
    need(run("induce " + ext + " -o " + back).code == 0, "induce failed");
    need(slurp(back) == slurp(act), std::string(name) + ": induced file differs from the action file");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)()>> criteria{
      {"monoid witness (2,2) vs (4,2)", criterion_1},
      {"axiom engine and single-constant mutations of kC2", criterion_2},
      {"functor round trips on actions and extensions", criterion_3},
      {"associativity iff both conditions", criterion_4},
      {"uniqueness of lambda, catalog and 25 random extensions", criterion_5},
      {"HKer = LKer hypothesis: kS3 passes, H4 rejected", criterion_6},
      {"split short five lemma, inversion and 10 random triples", criterion_7},
      {"kS3 sequence is exact and cleft", criterion_8},
      {"theta and re-expressed action identities", criterion_9},
      {"octonion loop", criterion_10},
      {"cocommutative simplification", criterion_11},
      {"cli exit codes and canonical round trip", criterion_12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (why.empty() ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first;
    if (!why.empty()) std::cout << "  (" << why << ")";
    std::cout << std::endl;
    failures += !why.empty();
  }
  return failures;
}
