#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geomgroup/generator_list.hpp"

namespace geomgroup {

/// Ascending vector indices of one generator, e.g. {1,3} for e13.
using IndexTuple = std::vector<int>;

/// Canonical pattern key of an unsigned generator set: the minimum, over all
/// relabelings of the indices actually used onto 1..k, of the sorted list of
/// index tuples.  Two generator sets with the same adjoin flag name the same
/// pattern iff their keys match.
using PatternKey = std::vector<IndexTuple>;

/// Grade first, then lexicographic.
bool tuple_less(const IndexTuple&, const IndexTuple&);

/// Lexicographic over tuple_less, shorter key first on ties.
bool pattern_key_less(const PatternKey&, const PatternKey&);

PatternKey pattern_key(std::span<const std::uint16_t> masks);
PatternKey pattern_key(const GeneratorList&);

/// Render a key as a pattern name: "E_a E_bc" for adjoined closures,
/// "{1,e_a}" for raw ones, "{±1}" for the empty adjoined key.
std::string pattern_name(const PatternKey&, bool raw_form);

/// Positive blades of the canonical instantiation a=1, b=2, c=3, ...
std::vector<std::uint16_t> masks_from_key(const PatternKey&);

/// Rename vector indices: image[j-1] is the new index of e_j.  The sign
/// picks up the inversion parity of the images of the blade's factors.
SignedBlade apply_relabeling(const SignedBlade&, std::span<const int> image);

}  // namespace geomgroup
