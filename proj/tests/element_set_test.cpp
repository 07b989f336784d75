#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "geomgroup/generator_list.hpp"

using namespace geomgroup;

namespace {

SignedBlade sb(const char* lit, int dim = 3) { return parse_blade(lit, dim); }

ElementSet make_set(std::initializer_list<const char*> lits, int dim = 3) {
  std::vector<SignedBlade> elems;
  for (const char* lit : lits) elems.push_back(parse_blade(lit, dim));
  return ElementSet(std::move(elems), dim);
}

GeneratorList gens(std::initializer_list<const char*> lits, bool adjoin = true,
                   int dim = 3) {
  std::vector<SignedBlade> out;
  for (const char* lit : lits) out.push_back(parse_blade(lit, dim));
  return GeneratorList(std::move(out), adjoin, dim);
}

// Every subset of {e1..e123} masks of the given size, as generator lists.
std::vector<std::vector<SignedBlade>> mask_subsets(int dim, int size) {
  std::vector<std::uint16_t> universe;
  for (std::uint16_t m = 1; m < (1u << dim); ++m) universe.push_back(m);
  std::vector<std::vector<SignedBlade>> out;
  std::vector<bool> take(universe.size(), false);
  std::fill(take.end() - size, take.end(), true);
  do {
    std::vector<SignedBlade> subset;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (take[i]) subset.push_back(SignedBlade::from_mask(universe[i], dim));
    out.push_back(std::move(subset));
  } while (std::next_permutation(take.begin(), take.end()));
  return out;
}

ElementSet full_group(int dim) {
  std::vector<SignedBlade> gens;
  for (int j = 1; j <= dim; ++j)
    gens.push_back(SignedBlade::basis_vector(j, dim));
  return generate_closure(GeneratorList(std::move(gens), true, dim));
}

}  // namespace

TEST_SUITE_BEGIN("sets");

TEST_CASE("listings are canonical: mask order, + before -, no duplicates") {
  const ElementSet set = make_set({"-e1", "e23", "1", "e1", "1", "-1"});
  std::vector<std::string> listing;
  for (const SignedBlade& e : set) listing.push_back(to_string(e));
  CHECK(listing == std::vector<std::string>{"1", "-1", "e1", "-e1", "e23"});
  CHECK(set.size() == 5);
  CHECK(set.contains(sb("-e1")));
  CHECK_FALSE(set.contains(sb("-e23")));
}

TEST_CASE("set products multiply every pair") {
  const ElementSet pm = ElementSet::plus_minus_one(3);
  CHECK(set_product(pm, pm) == pm);

  // {+-1}{1,e1}{1,e2} is the eight-element group on e1, e2.
  const ElementSet a = make_set({"1", "e1"});
  const ElementSet b = make_set({"1", "e2"});
  const ElementSet product = set_product(set_product(pm, a), b);
  CHECK(product == make_set({"1", "-1", "e1", "-e1", "e2", "-e2", "e12",
                             "-e12"}));

  const ElementSet empty(3);
  CHECK(set_product(empty, a).empty());
  CHECK_THROWS_AS(set_product(a, ElementSet::plus_minus_one(4)),
                  dimension_mismatch);
}

TEST_CASE("set union behaves like a union") {
  const ElementSet one = make_set({"1"});
  CHECK(set_union(one, ElementSet(3)) == one);
  CHECK(set_union(one, make_set({"-1"})) == ElementSet::plus_minus_one(3));
  const ElementSet a = make_set({"e1", "e23"});
  CHECK(set_union(a, a) == a);
  CHECK(set_union(set_union(a, one), a) == make_set({"1", "e1", "e23"}));
  CHECK_THROWS_AS(set_union(a, ElementSet(4)), dimension_mismatch);
}

TEST_CASE("group membership is closure under the product") {
  CHECK(is_group(make_set({"1", "e1"})));
  CHECK(is_group(ElementSet::plus_minus_one(3)));
  CHECK_FALSE(is_group(make_set({"1", "e12"})));  // e12 squares to -1
  CHECK_FALSE(is_group(make_set({"e1"})));
  CHECK_FALSE(is_group(ElementSet(3)));
  CHECK(is_group(make_set({"1", "-1", "e12", "-e12", "e13", "-e13", "e23",
                           "-e23"})));
  CHECK(order(make_set({"1", "e1"})) == 2);
}

TEST_CASE("closures match hand-built listings") {
  CHECK(generate_closure(gens({"e1"}, false)) == make_set({"1", "e1"}));
  CHECK(generate_closure(gens({"e1"}, true)) ==
        make_set({"1", "-1", "e1", "-e1"}));
  CHECK(generate_closure(gens({"e12"}, false)) ==
        make_set({"1", "-1", "e12", "-e12"}));
  CHECK(generate_closure(gens({}, true)) == ElementSet::plus_minus_one(3));
  CHECK(generate_closure(gens({}, false)) == make_set({"1"}));

  // The quaternion-like closure of two negative-square planes.
  CHECK(generate_closure(gens({"e12", "e13"}, false)) ==
        make_set({"1", "-1", "e12", "-e12", "e13", "-e13", "e23", "-e23"}));

  CHECK(generate_closure(gens({"e1", "e2", "e3"}, true)).size() == 16);
  CHECK(generate_closure(gens({"e1", "e23"}, true)) ==
        make_set({"1", "-1", "e1", "-e1", "e23", "-e23", "e123", "-e123"}));
}

TEST_CASE("closures are fixed points and groups") {
  for (int size = 1; size <= 3; ++size)
    for (const auto& subset : mask_subsets(3, size))
      for (bool adjoin : {false, true}) {
        const ElementSet closure =
            generate_closure(GeneratorList(subset, adjoin, 3));
        CHECK(is_group(closure));
        CHECK(set_product(closure, closure) == closure);
      }
}

TEST_CASE("closures ignore generator order and signs") {
  const ElementSet reference = generate_closure(gens({"e1", "e12", "e23"}));
  const std::vector<std::vector<const char*>> variants = {
      {"e12", "e1", "e23"},
      {"e23", "e12", "e1"},
      {"-e1", "e12", "-e23"},
      {"e1", "-e12", "e23"},
  };
  for (const auto& variant : variants) {
    std::vector<SignedBlade> list;
    for (const char* lit : variant) list.push_back(sb(lit));
    CHECK(generate_closure(GeneratorList(list, true, 3)) == reference);
  }
}

TEST_CASE("adjoined closures are the product of the cyclic pieces") {
  // <g1,...,gk, -1> = {+-1}{1,g1}...{1,gk} whenever each gi squares to +-1.
  for (int size = 1; size <= 3; ++size)
    for (const auto& subset : mask_subsets(3, size)) {
      ElementSet product = ElementSet::plus_minus_one(3);
      for (const SignedBlade& g : subset)
        product = set_product(product, ElementSet({SignedBlade::one(3), g}, 3));
      CHECK(product == generate_closure(GeneratorList(subset, true, 3)));
    }
}

TEST_CASE("multiplying a group by a subgroup changes nothing") {
  const ElementSet group = full_group(3);
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SignedBlade> some;
    for (const SignedBlade& e : group)
      if (rng() & 1u) some.push_back(e);
    some.push_back(SignedBlade::one(3));
    const ElementSet subset(std::move(some), 3);
    CHECK(set_product(subset, group) == group);
    CHECK(set_product(group, subset) == group);
  }
  CHECK(set_product(make_set({"1", "e1"}), group) == group);
}

TEST_CASE("set product distributes over union") {
  const ElementSet group = full_group(3);
  std::mt19937 rng(456);
  auto random_subset = [&] {
    std::vector<SignedBlade> some;
    for (const SignedBlade& e : group)
      if (rng() & 1u) some.push_back(e);
    return ElementSet(std::move(some), 3);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const ElementSet f = random_subset();
    const ElementSet g = random_subset();
    const ElementSet h = random_subset();
    CHECK(set_product(f, set_union(g, h)) ==
          set_union(set_product(f, g), set_product(f, h)));
  }
}

TEST_CASE("plus and minus one commute with everything") {
  const ElementSet pm = ElementSet::plus_minus_one(3);
  for (const SignedBlade& e : full_group(3)) {
    const ElementSet single({e}, 3);
    CHECK(set_product(pm, single) == set_product(single, pm));
  }
}

TEST_CASE("every closure order is a power of two") {
  for (int size = 1; size <= 3; ++size)
    for (const auto& subset : mask_subsets(3, size))
      for (bool adjoin : {false, true}) {
        const std::size_t n =
            generate_closure(GeneratorList(subset, adjoin, 3)).size();
        CHECK(std::has_single_bit(n));
      }
}

TEST_CASE("-1 escapes the raw closure only for lone positive squares") {
  // A raw closure misses -1 exactly when there is one generator and it
  // squares to +1; with two or more distinct generators some pair either
  // anticommutes or multiplies to a negative square.
  for (int size = 1; size <= 3; ++size)
    for (const auto& subset : mask_subsets(3, size)) {
      const ElementSet closure =
          generate_closure(GeneratorList(subset, false, 3));
      const bool has_minus_one = closure.contains(SignedBlade::minus_one(3));
      const bool lone_positive =
          size == 1 && square_sign(subset.front()) == +1;
      CHECK(has_minus_one == !lone_positive);
    }
}

TEST_CASE("generator lists reject bad input") {
  CHECK_THROWS_AS(gens({"1"}), std::invalid_argument);
  CHECK_THROWS_AS(gens({"-1"}), std::invalid_argument);
  CHECK_THROWS_AS(gens({"e1", "-e1"}), std::invalid_argument);
  CHECK_THROWS_AS(gens({"e1", "e1"}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorList({sb("e1", 4)}, true, 3), dimension_mismatch);
  const GeneratorList list = GeneratorList::from_literals(
      std::vector<std::string>{"e1", "e23"}, true, 3);
  CHECK(list.count() == 2);
  CHECK(list.adjoin_minus_one());
}

TEST_SUITE_END();
