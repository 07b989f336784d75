#pragma once

#include <cstddef>
#include <vector>

#include "geomgroup/blade.hpp"

namespace geomgroup {

/// Finite set of signed blades at one dimension, kept in canonical order
/// (ascending mask, +1 before -1) with no duplicates.  Value type; equality
/// is exact equality of the canonical listings.
class ElementSet {
 public:
  ElementSet() = default;  // empty at dimension 0
  explicit ElementSet(int dim);
  ElementSet(std::vector<SignedBlade> elements, int dim);

  static ElementSet plus_minus_one(int dim);  // {+1, -1}

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const SignedBlade&) const;
  const std::vector<SignedBlade>& elements() const { return elements_; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<SignedBlade> elements_;
  int dim_ = 0;
};

/// {ab : a in F, b in H}.  Throws dimension_mismatch when dims differ.
ElementSet set_product(const ElementSet&, const ElementSet&);

/// Plain set union at a shared dimension.
ElementSet set_union(const ElementSet&, const ElementSet&);

/// True iff the set is nonempty and closed under the product.  Closure of a
/// finite subset of a finite group forces identity and inverses, so this is
/// the whole subgroup test.
bool is_group(const ElementSet&);

/// Group order; the size of the listing.
std::size_t order(const ElementSet&);

}  // namespace geomgroup
