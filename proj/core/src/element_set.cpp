#include "geomgroup/element_set.hpp"

#include <algorithm>

namespace geomgroup {

namespace {

void check_same_dim(const ElementSet& a, const ElementSet& b) {
  if (a.dim() != b.dim())
    throw dimension_mismatch("element sets live at different dimensions: " +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
}

}  // namespace

ElementSet::ElementSet(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDimension)
    throw std::invalid_argument("dimension must be in 0.." +
                                std::to_string(kMaxDimension));
}

ElementSet::ElementSet(std::vector<SignedBlade> elements, int dim)
    : ElementSet(dim) {
  for (const SignedBlade& e : elements)
    if (e.dim() != dim)
      throw dimension_mismatch("element " + to_string(e) +
                               " does not live at dimension " +
                               std::to_string(dim));
  std::sort(elements.begin(), elements.end(), canonical_less);
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  elements_ = std::move(elements);
}

ElementSet ElementSet::plus_minus_one(int dim) {
  return ElementSet({SignedBlade::one(dim), SignedBlade::minus_one(dim)}, dim);
}

bool ElementSet::contains(const SignedBlade& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e,
                            canonical_less);
}

ElementSet set_product(const ElementSet& a, const ElementSet& b) {
  check_same_dim(a, b);
  std::vector<SignedBlade> out;
  out.reserve(a.size() * b.size());
  for (const SignedBlade& x : a)
    for (const SignedBlade& y : b) out.push_back(mul(x, y));
  return ElementSet(std::move(out), a.dim());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  check_same_dim(a, b);
  std::vector<SignedBlade> out = a.elements();
  out.insert(out.end(), b.begin(), b.end());
  return ElementSet(std::move(out), a.dim());
}

bool is_group(const ElementSet& s) {
  if (s.empty()) return false;
  return set_product(s, s) == s;
}

std::size_t order(const ElementSet& s) { return s.size(); }

}  // namespace geomgroup
