#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopfsplit/catalog.hpp"
#include "hopfsplit/io.hpp"

using namespace hopfsplit;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  bool json = false;
  std::string level;
  std::string file = "-";
  std::string output;
  std::string name;
  std::string field = "Q";
  bool list = false;
  std::vector<std::string> monoid;
};

struct Loaded {
  Json doc;
  std::string dir;
  FileKind kind;
  FieldSpec field;
};

Loaded load(const std::string& path) {
  Loaded l{load_json(path), directory_of(path), FileKind::structure, FieldSpec::rationals()};
  l.kind = detect_kind(l.doc);
  l.field = document_field(l.doc, l.dir);
  return l;
}

void expect_kind(const Loaded& l, FileKind kind) {
  if (l.kind != kind) throw ParseError("expected " + to_string(kind) + " file, got " + to_string(l.kind) + " file");
}

int emit_report(const VerificationReport& r, const Options& o) {
  std::cout << (o.json ? r.json() + "\n" : r.text());
  return r.all_passed() ? kOk : kFailed;
}

void emit_document(const Json& doc, const std::string& output) {
  const std::string text = dump_canonical(doc);
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write " + output);
  out << text;
}

int run_verify(const Options& o) {
  const Loaded l = load(o.file);
  return visit_field(l.field, [&]<class S>() {
    switch (l.kind) {
      case FileKind::structure: {
        const Bialgebra<S> a = structure_from_json<S>(l.doc, l.dir);
        return emit_report(verify_structure(a, o.level.empty() ? natural_level(a) : parse_level(o.level)), o);
      }
      case FileKind::action: {
        const ActionData<S> a = action_from_json<S>(l.doc, l.dir);
        const bool hopf = !o.level.empty() && parse_level(o.level) == Level::hopf;
        return emit_report(hopf ? verify_hopf_action(a) : verify_action(a), o);
      }
      case FileKind::extension: {
        const SplitExtension<S> s = extension_from_json<S>(l.doc, l.dir);
        return emit_report(verify_split_extension(s, o.level.empty() ? extension_level(s) : parse_level(o.level)), o);
      }
    }
    return kBadInput;
  });
}

int run_semidirect(const Options& o) {
  const Loaded l = load(o.file);
  expect_kind(l, FileKind::action);
  return visit_field(l.field, [&]<class S>() {
    const ActionData<S> a = action_from_json<S>(l.doc, l.dir);
    try {
      const Semidirect<S> sd = semidirect(a);
      emit_document(to_json(sd.extension), o.output);
      if (!o.output.empty()) {
        std::cout << "wrote " << sd.product.carrier.name << " (dim " << sd.product.carrier.dim() << ", "
                  << (sd.product.carrier.is_hopf() ? "hopf" : "bialgebra") << ") to " << o.output << "\n";
      }
      return kOk;
    } catch (const VerificationError& e) {
      std::cerr << e.what() << "\n";
      return emit_report(e.report(), o);
    }
  });
}

int run_induce(const Options& o) {
  const Loaded l = load(o.file);
  expect_kind(l, FileKind::extension);
  return visit_field(l.field, [&]<class S>() {
    const SplitExtension<S> s = extension_from_json<S>(l.doc, l.dir);
    const VerificationReport r = verify_split_extension(s, extension_level(s));
    if (!r.all_passed()) {
      std::cerr << "not a split extension\n";
      return emit_report(r, o);
    }
    emit_document(to_json(induce_action(s)), o.output);
    return kOk;
  });
}

int run_roundtrip(const Options& o) {
  const Loaded l = load(o.file);
  expect_kind(l, FileKind::action);
  return visit_field(l.field, [&]<class S>() {
    const ActionData<S> a = action_from_json<S>(l.doc, l.dir);
    VerificationReport r;
    try {
      const Semidirect<S> sd = semidirect(a);
      r.merge(verify_split_extension(sd.extension, extension_level(sd.extension)), "semidirect.");
      const ActionData<S> back = induce_action(sd.extension);
      r.add(compare_maps("induced_action_equals_original", back.act, a.act));
      r.add("canonical_file_roundtrip", dump_canonical(to_json(back)) == dump_canonical(to_json(a)),
            "induced action file differs from the canonical input");
    } catch (const VerificationError& e) {
      r.merge(e.report(), "action.");
    }
    return emit_report(r, o);
  });
}

int run_kernels(const Options& o) {
  const Loaded l = load(o.file);
  expect_kind(l, FileKind::extension);
  return visit_field(l.field, [&]<class S>() {
    const SplitExtension<S> s = extension_from_json<S>(l.doc, l.dir);
    const Subspace<S> h = kernel(s.alpha, s.a, s.b, KernelKind::hopf);
    const Subspace<S> lk = kernel(s.alpha, s.a, s.b, KernelKind::left);
    const Subspace<S> rk = kernel(s.alpha, s.a, s.b, KernelKind::right);
    const Subspace<S> im = image(s.kappa);
    if (o.json) {
      const Json out{{"HKer", h.dim()},         {"LKer", lk.dim()},       {"RKer", rk.dim()},
                     {"HKer_eq_LKer", h == lk}, {"HKer_eq_RKer", h == rk}, {"LKer_eq_RKer", lk == rk},
                     {"kappa_image_eq_HKer", im == h}};
      std::cout << out.dump(2) << "\n";
    } else {
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      std::cout << "dim HKer = " << h.dim() << "\n"
                << "dim LKer = " << lk.dim() << "\n"
                << "dim RKer = " << rk.dim() << "\n"
                << "HKer = LKer: " << yn(h == lk) << "\n"
                << "HKer = RKer: " << yn(h == rk) << "\n"
                << "LKer = RKer: " << yn(lk == rk) << "\n"
                << "image(kappa) = HKer: " << yn(im == h) << "\n";
    }
    return kOk;
  });
}

int run_catalog(const Options& o) {
  if (o.list || o.name.empty()) {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return kOk;
  }
  const FieldSpec field = FieldSpec::parse(o.field);
  return visit_field(field, [&]<class S>() {
    const CatalogEntry<S> e = build<S>(o.name, field);
    if (e.structure) emit_document(to_json(*e.structure), o.output);
    if (e.action) emit_document(to_json(*e.action), o.output);
    if (e.extension) emit_document(to_json(*e.extension), o.output);
    return kOk;
  });
}

mpz_class natural(const std::string& text) {
  mpz_class v;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || v.set_str(text, 10) != 0) {
    throw ParseError("expected a nonnegative integer, got '" + text + "'");
  }
  return v;
}

int run_eval_monoid(const Options& o) {
  const auto p = std::make_pair(natural(o.monoid[0]), natural(o.monoid[1]));
  const auto q = std::make_pair(natural(o.monoid[2]), natural(o.monoid[3]));
  std::pair<mpz_class, mpz_class> r;
  try {
    r = monoid_semidirect_eval(p, q);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (o.json) {
    std::cout << Json{{"x", r.first.get_str()}, {"b", r.second.get_str()}}.dump() << "\n";
  } else {
    std::cout << "(" << r.first.get_str() << ", " << r.second.get_str() << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify bialgebras, Hopf algebras, actions and split extensions given by structure constants"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  const auto levels = CLI::IsMember({"coalgebra", "algebra", "bialgebra", "hopf"});

  auto* verify = app.add_subcommand("verify", "Check every axiom of a structure, action or extension file");
  verify->add_option("file", o.file, "Input file, - for stdin")->capture_default_str();
  verify->add_option("--level", o.level, "coalgebra|algebra|bialgebra|hopf")->check(levels);

  auto* semi = app.add_subcommand("semidirect", "Write the split extension X -> X⋊B <-> B of an action file");
  semi->add_option("file", o.file, "Action file")->required();
  semi->add_option("-o,--output", o.output, "Output path (stdout when omitted)");

  auto* induce = app.add_subcommand("induce", "Write the action induced by an extension file");
  induce->add_option("file", o.file, "Extension file")->required();
  induce->add_option("-o,--output", o.output, "Output path (stdout when omitted)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Check that inducing from the semidirect product gives the action back");
  roundtrip->add_option("file", o.file, "Action file")->required();

  auto* kernels = app.add_subcommand("kernels", "Hopf, left and right kernels of the split epimorphism");
  kernels->add_option("file", o.file, "Extension file")->required();

  auto* catalog = app.add_subcommand("catalog", "Emit a named instance as a file");
  catalog->add_option("name", o.name, "Catalog name, e.g. kS3 or trivial_action(kC3,kC2)");
  catalog->add_option("--field", o.field, "Q or Fp:<p>")->capture_default_str();
  catalog->add_option("-o,--output", o.output, "Output path (stdout when omitted)");
  catalog->add_flag("--list", o.list, "List catalog names");

  auto* monoid = app.add_subcommand("eval-monoid", "Evaluate (x, b)·(y, c) = (x + y^b, b·c)");
  monoid->add_option("values", o.monoid, "x b y c")->expected(4)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return run_verify(o);
    if (*semi) return run_semidirect(o);
    if (*induce) return run_induce(o);
    if (*roundtrip) return run_roundtrip(o);
    if (*kernels) return run_kernels(o);
    if (*catalog) return run_catalog(o);
    if (*monoid) return run_eval_monoid(o);
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
