#include <doctest.h>

#include <random>
#include <vector>

#include "geomgroup/pattern.hpp"
#include "geomgroup/taxonomy.hpp"

using namespace geomgroup;

namespace {

GeneratorList gens(std::initializer_list<const char*> lits, bool adjoin = true,
                   int dim = 3) {
  std::vector<SignedBlade> out;
  for (const char* lit : lits) out.push_back(parse_blade(lit, dim));
  return GeneratorList(std::move(out), adjoin, dim);
}

std::string name_of(std::initializer_list<const char*> lits,
                    bool adjoin = true, int dim = 3) {
  const GeneratorList list = gens(lits, adjoin, dim);
  return pattern_name(pattern_key(list), !adjoin);
}

}  // namespace

TEST_SUITE_BEGIN("pattern");

TEST_CASE("tuples compare by grade before position") {
  CHECK(tuple_less({2}, {1, 2}));
  CHECK_FALSE(tuple_less({1, 2}, {3}));
  CHECK(tuple_less({1, 2}, {1, 3}));
  CHECK(tuple_less({1, 3}, {2, 3}));
  CHECK_FALSE(tuple_less({1, 2}, {1, 2}));
}

TEST_CASE("keys pick the least relabeling of the used indices") {
  const GeneratorList tricky = gens({"e13", "e23"});
  CHECK(pattern_key(tricky) == PatternKey{{1, 2}, {1, 3}});
  CHECK(pattern_name(pattern_key(tricky), false) == "E_ab E_ac");

  const GeneratorList shifted = gens({"e2", "e13"});
  CHECK(pattern_key(shifted) == PatternKey{{1}, {2, 3}});

  const GeneratorList dense = gens({"e3", "e23"});
  CHECK(pattern_key(dense) == PatternKey{{1}, {1, 2}});
}

TEST_CASE("pattern names render the canonical instantiation") {
  CHECK(name_of({}) == "{±1}");
  CHECK(name_of({"e2"}) == "E_a");
  CHECK(name_of({"e2"}, false) == "{1,e_a}");
  CHECK(name_of({"e13"}) == "E_ab");
  CHECK(name_of({"e123"}) == "E_abc");
  CHECK(name_of({"e1", "e3"}) == "E_a E_b");
  CHECK(name_of({"e3", "e13"}) == "E_a E_ab");
  CHECK(name_of({"e2", "e13"}) == "E_a E_bc");
  CHECK(name_of({"e12", "e13", "e23"}) == "E_ab E_ac E_bc");
  CHECK(name_of({"e123", "e2", "e3"}) == "E_a E_b E_abc");
  // Signs never matter to the pattern.
  CHECK(name_of({"-e2", "e13"}) == "E_a E_bc");
}

TEST_CASE("canonical masks rebuild the key") {
  for (const auto& lits : std::vector<std::vector<const char*>>{
           {"e2"}, {"e13", "e23"}, {"e2", "e13"}, {"e12", "e13", "e123"}}) {
    std::vector<SignedBlade> blades;
    for (const char* lit : lits) blades.push_back(parse_blade(lit, 3));
    const GeneratorList list(blades, true, 3);
    const PatternKey key = pattern_key(list);
    std::vector<std::uint16_t> masks = masks_from_key(key);
    CHECK(pattern_key(masks) == key);
  }
}

TEST_CASE("relabeling carries signs by inversion parity") {
  // Swap 1 and 2: e12 -> e21 = -e12.
  const std::vector<int> swap12{2, 1, 3};
  CHECK(apply_relabeling(parse_blade("e12", 3), swap12) ==
        parse_blade("-e12", 3));
  CHECK(apply_relabeling(parse_blade("e3", 3), swap12) ==
        parse_blade("e3", 3));
  CHECK(apply_relabeling(parse_blade("-e123", 3), swap12) ==
        parse_blade("e123", 3));
  // Cycle 1->2->3->1: e12 -> e23, e13 -> e21 = -e12.
  const std::vector<int> cycle{2, 3, 1};
  CHECK(apply_relabeling(parse_blade("e12", 3), cycle) ==
        parse_blade("e23", 3));
  CHECK(apply_relabeling(parse_blade("e13", 3), cycle) ==
        parse_blade("-e12", 3));
}

TEST_CASE("two lists share a pattern name exactly when they are similar") {
  std::mt19937 rng(31337);
  for (int dim = 3; dim <= 4; ++dim) {
    const std::uint16_t top = static_cast<std::uint16_t>(1u << dim);
    for (int trial = 0; trial < 400; ++trial) {
      auto random_list = [&] {
        std::vector<SignedBlade> blades;
        std::vector<std::uint16_t> masks;
        const int count = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(blades.size()) < count) {
          const std::uint16_t m =
              static_cast<std::uint16_t>(1 + rng() % (top - 1));
          bool seen = false;
          for (std::uint16_t other : masks) seen = seen || other == m;
          if (seen) continue;
          masks.push_back(m);
          blades.push_back(SignedBlade::from_mask(m, dim, rng() & 1u));
        }
        return GeneratorList(std::move(blades), true, dim);
      };
      const GeneratorList a = random_list();
      const GeneratorList b = random_list();
      const bool same_name = pattern_name(pattern_key(a), false) ==
                             pattern_name(pattern_key(b), false);
      CHECK(same_name == similar(a, b));
    }
  }
}

TEST_SUITE_END();
