#include "geomgroup/generator_list.hpp"

#include <cassert>

namespace geomgroup {

GeneratorList::GeneratorList(std::vector<SignedBlade> generators,
                             bool adjoin_minus_one, int dim)
    : generators_(std::move(generators)),
      adjoin_minus_one_(adjoin_minus_one),
      dim_(dim) {
  if (dim < 1 || dim > kMaxDimension)
    throw std::invalid_argument("dimension must be in 1.." +
                                std::to_string(kMaxDimension));
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const SignedBlade& g = generators_[i];
    if (g.dim() != dim)
      throw dimension_mismatch("generator " + to_string(g) +
                               " does not live at dimension " +
                               std::to_string(dim));
    if (g.mask() == 0)
      throw std::invalid_argument("trivial generator " + to_string(g) +
                                  " is not allowed");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].mask() == g.mask())
        throw std::invalid_argument("generators " + to_string(generators_[j]) +
                                    " and " + to_string(g) +
                                    " repeat a blade up to sign");
    assert(square_sign(g) == 1 || square_sign(g) == -1);
  }
}

GeneratorList GeneratorList::from_literals(
    std::span<const std::string> literals, bool adjoin_minus_one, int dim) {
  std::vector<SignedBlade> generators;
  generators.reserve(literals.size());
  for (const std::string& lit : literals)
    generators.push_back(parse_blade(lit, dim));
  return GeneratorList(std::move(generators), adjoin_minus_one, dim);
}

ElementSet generate_closure(const GeneratorList& list) {
  std::vector<SignedBlade> seed = list.generators();
  seed.push_back(SignedBlade::one(list.dim()));
  if (list.adjoin_minus_one())
    seed.push_back(SignedBlade::minus_one(list.dim()));
  ElementSet current(std::move(seed), list.dim());
  // 1 is in the seed, so squaring only grows the set; the fixed point is the
  // smallest closed superset.
  for (;;) {
    ElementSet next = set_product(current, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace geomgroup
