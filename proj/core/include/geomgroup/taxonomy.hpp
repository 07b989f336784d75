#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geomgroup/generator_list.hpp"
#include "geomgroup/pattern.hpp"

namespace geomgroup {

/// Unreduced fraction; beat keeps its raw numerator over n(n-1).
struct Fraction {
  int num = 0;
  int den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

enum class GroupClass { choir, band };

/// Everything the classification knows about one generated group.
struct GroupRecord {
  GeneratorList generators;
  ElementSet closure;
  int gen_count = 0;                  // n
  int log2_order = 0;                 // m, order = 2^m
  std::string signature;              // '+'/'-' per generator; empty for n=0
  GroupClass verdict = GroupClass::band;
  std::pair<int, int> clifford_target{0, 0};  // (p,q) read off the signature
  int disorder = 0;                   // phi = n + 1 - m
  std::vector<int> chord;             // per-generator commuting count; empty for n<2
  std::optional<Fraction> beat;       // sum(chord)/(n(n-1)); absent for n<2
  PatternKey key;                     // canonical similarity key
  bool raw_form = false;              // true for closures without -1
  std::string pattern;                // rendered pattern name

  std::size_t group_order() const { return std::size_t{1} << log2_order; }
};

/// Generate the closure and fill in every field.  A choir is a group whose
/// generators pairwise anticommute and whose disorder is zero; everything
/// else is a band.
GroupRecord classify(const GeneratorList&);

/// phi = n + 1 - m for a group of order 2^m on n generators.  Throws
/// internal_error when the order is not a power of two.
int disorder(int gen_count, std::size_t group_order);

/// chord[i] counts the other generators that commute with generator i.
std::vector<int> chord(const GeneratorList&);

/// Total chord over n(n-1), unreduced; absent when n < 2.
std::optional<Fraction> beat(const std::vector<int>& chord, int gen_count);

/// Square signs plus the pairwise commute/anticommute table of a generator
/// list; the data presentation isomorphism compares.
struct Presentation {
  std::vector<int> squares;                 // +1 / -1
  std::vector<std::vector<bool>> commute;   // symmetric, true on the diagonal

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

Presentation presentation_of(const GeneratorList&);

/// Reference presentation of C(p,q): p generators squaring to +1, then q
/// squaring to -1, all pairs anticommuting.
Presentation clifford_presentation(int p, int q);

/// True iff some generator bijection matches squares and commute relations.
bool isomorphic(const Presentation&, const Presentation&);
bool presentation_isomorphic(const GeneratorList&, const GeneratorList&);

/// True iff some renaming of vector indices carries one generator list onto
/// the other as unsigned blades; adjoin flags must agree.  Same dimension
/// required.
bool similar(const GeneratorList&, const GeneratorList&);

/// True iff some renaming of vector indices carries one element set exactly
/// onto the other, signs included.  Same dimension required.
bool equivalent(const ElementSet&, const ElementSet&);

/// Exact equality of canonical listings.
bool equal(const ElementSet&, const ElementSet&);

}  // namespace geomgroup
