#pragma once

#include <span>
#include <string>
#include <vector>

#include "geomgroup/element_set.hpp"

namespace geomgroup {

/// Ordered list of nontrivial generators (every mask nonzero, no two equal
/// up to sign) plus the choice of whether -1 is adjoined to the closure.
class GeneratorList {
 public:
  /// Throws std::invalid_argument on a trivial (+-1) or repeated generator,
  /// dimension_mismatch when a generator disagrees with `dim`.
  GeneratorList(std::vector<SignedBlade> generators, bool adjoin_minus_one,
                int dim);

  static GeneratorList from_literals(std::span<const std::string> literals,
                                     bool adjoin_minus_one, int dim);

  const std::vector<SignedBlade>& generators() const { return generators_; }
  bool adjoin_minus_one() const { return adjoin_minus_one_; }
  int dim() const { return dim_; }
  int count() const { return static_cast<int>(generators_.size()); }

 private:
  std::vector<SignedBlade> generators_;
  bool adjoin_minus_one_ = true;
  int dim_ = 0;
};

/// Multiplicative closure of the generators, with -1 thrown in when the
/// list says so.  Fixed point of repeated set squaring; always a group.
ElementSet generate_closure(const GeneratorList&);

}  // namespace geomgroup
