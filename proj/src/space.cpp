#include "hopfsplit/space.hpp"

#include <sstream>

namespace hopfsplit {

Space::Space(FieldSpec field, std::vector<Factor> factors) : field_(field), factors_(std::move(factors)) {
  for (auto& f : factors_) {
    if (f.labels.empty()) {
      for (std::size_t i = 0; i < f.dim; ++i) f.labels.push_back("e" + std::to_string(i));
    }
    if (f.labels.size() != f.dim) {
      throw DimensionError("factor " + f.name + " has " + std::to_string(f.labels.size()) +
                           " labels for dimension " + std::to_string(f.dim));
    }
  }
}

Space Space::base(FieldSpec field, std::string name, std::size_t dim, std::vector<std::string> labels) {
  return Space(field, {Factor{std::move(name), dim, std::move(labels)}});
}

std::size_t Space::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

std::vector<std::size_t> Space::shape() const {
  std::vector<std::size_t> s;
  for (const auto& f : factors_) {
    if (f.dim != 1) s.push_back(f.dim);
  }
  return s;
}

std::string Space::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "⊗";
    os << factors_[i].name << ":" << factors_[i].dim;
  }
  os << ")";
  if (factors_.empty()) return "I";
  return os.str();
}

std::string Space::name() const {
  if (factors_.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "⊗";
    s += factors_[i].name;
  }
  return s;
}

std::vector<std::size_t> Space::unflatten(std::size_t index) const {
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    idx[i] = index % factors_[i].dim;
    index /= factors_[i].dim;
  }
  return idx;
}

std::string Space::describe(std::size_t index) const {
  if (factors_.empty()) return "1";
  const auto idx = unflatten(index);
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += "⊗";
    s += factors_[i].labels[idx[i]];
  }
  return s;
}

Space Space::flattened(std::string name) const {
  std::vector<std::string> labels;
  const std::size_t n = dim();
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(describe(i));
  return base(field_, std::move(name), n, std::move(labels));
}

Space tensor(const Space& a, const Space& b) {
  if (!(a.field() == b.field())) {
    throw FieldError("tensoring spaces over " + a.field().str() + " and " + b.field().str());
  }
  auto factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return Space(a.field(), std::move(factors));
}

bool same_shape(const Space& a, const Space& b) {
  return a.field() == b.field() && a.dim() == b.dim() && a.shape() == b.shape();
}

}  // namespace hopfsplit
