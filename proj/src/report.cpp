#include "hopfsplit/report.hpp"

#include <sstream>

#include <json.hpp>

namespace hopfsplit {

std::string Witness::str() const {
  std::ostringstream os;
  if (!input.empty()) {
    os << "at " << input << " -> " << output << ": lhs=" << lhs << " rhs=" << rhs;
    if (!detail.empty()) os << " (" << detail << ")";
  } else {
    os << detail;
  }
  return os.str();
}

void VerificationReport::add(const std::string& name, bool passed, const std::string& detail) {
  Check c{name, passed, std::nullopt, false, ""};
  if (!passed) c.witness = Witness::about(detail);
  checks_.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) {
    if (!c.passed && !c.informational) ++n;
  }
  return n;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool VerificationReport::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->passed;
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed && !c.informational) return &c;
  }
  return nullptr;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : (c.informational ? "INFO " : "FAIL ")) << c.name;
    if (c.witness) os << "  " << c.witness->str();
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
    if (c.passed) ++passed;
  }
  os << passed << "/" << checks_.size() << " checks passed\n";
  return os.str();
}

std::string VerificationReport::json(int indent) const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (c.informational) cj["informational"] = true;
    if (!c.note.empty()) cj["note"] = c.note;
    if (c.witness) {
      const auto& w = *c.witness;
      nlohmann::ordered_json wj;
      if (!w.input.empty()) {
        wj["domain_index"] = w.domain_index;
        wj["codomain_index"] = w.codomain_index;
        wj["input"] = w.input;
        wj["output"] = w.output;
        wj["lhs"] = w.lhs;
        wj["rhs"] = w.rhs;
      }
      if (!w.detail.empty()) wj["detail"] = w.detail;
      cj["witness"] = wj;
    }
    j["checks"].push_back(cj);
  }
  return j.dump(indent);
}

std::string VerificationError::describe(const VerificationReport& r) {
  const Check* c = r.first_failure();
  if (c == nullptr) return "";
  std::string s = ": " + c->name;
  if (c->witness) s += " " + c->witness->str();
  return s;
}

template <class S>
Check compare_maps(const std::string& name, const LinMap<S>& lhs, const LinMap<S>& rhs) {
  Check c{name, true, std::nullopt, false, ""};
  if (!same_shape(lhs.domain(), rhs.domain()) || !same_shape(lhs.codomain(), rhs.codomain())) {
    c.passed = false;
    c.witness = Witness::about("shape mismatch: " + lhs.domain().shape_str() + " -> " + lhs.codomain().shape_str() +
                                  " vs " + rhs.domain().shape_str() + " -> " + rhs.codomain().shape_str());
    return c;
  }
  if (auto d = first_difference(lhs, rhs)) {
    c.passed = false;
    Witness w;
    w.col = d->col;
    w.row = d->row;
    w.domain_index = lhs.domain().unflatten(d->col);
    w.codomain_index = lhs.codomain().unflatten(d->row);
    w.input = lhs.domain().describe(d->col);
    w.output = lhs.codomain().describe(d->row);
    w.lhs = to_string(d->lhs);
    w.rhs = to_string(d->rhs);
    c.witness = std::move(w);
  }
  return c;
}

template <class S>
Check compare_subspaces(const std::string& name, const Subspace<S>& lhs, const Subspace<S>& rhs) {
  Check c{name, lhs == rhs, std::nullopt, false, ""};
  if (!c.passed) {
    std::string detail = "dimensions " + std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim());
    if (lhs.dim() == rhs.dim()) detail += ", different subspaces";
    c.witness = Witness::about(detail);
  }
  return c;
}

template Check compare_maps<Rational>(const std::string&, const LinMap<Rational>&, const LinMap<Rational>&);
template Check compare_maps<Fp>(const std::string&, const LinMap<Fp>&, const LinMap<Fp>&);
template Check compare_subspaces<Rational>(const std::string&, const Subspace<Rational>&, const Subspace<Rational>&);
template Check compare_subspaces<Fp>(const std::string&, const Subspace<Fp>&, const Subspace<Fp>&);

}  // namespace hopfsplit
