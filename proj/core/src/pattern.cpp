#include "geomgroup/pattern.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace geomgroup {

namespace {

// 10! relabelings is the most the exhaustive minimum is asked to scan.
constexpr int kMaxUsedIndices = 10;

std::vector<int> used_indices(std::span<const std::uint16_t> masks) {
  std::uint16_t all = 0;
  for (std::uint16_t m : masks) all |= m;
  std::vector<int> used;
  for (int j = 1; j <= kMaxDimension; ++j)
    if (all >> (j - 1) & 1u) used.push_back(j);
  return used;
}

std::string index_letters(const IndexTuple& tuple) {
  std::string out;
  for (int index : tuple) out += static_cast<char>('a' + index - 1);
  return out;
}

}  // namespace

bool tuple_less(const IndexTuple& a, const IndexTuple& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool pattern_key_less(const PatternKey& a, const PatternKey& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      tuple_less);
}

PatternKey pattern_key(std::span<const std::uint16_t> masks) {
  std::vector<int> used = used_indices(masks);
  const int k = static_cast<int>(used.size());
  if (k > kMaxUsedIndices)
    throw std::invalid_argument(
        "pattern keys support at most " + std::to_string(kMaxUsedIndices) +
        " distinct vector indices, got " + std::to_string(k));
  std::array<int, kMaxDimension + 1> position{};
  for (int i = 0; i < k; ++i) position[used[i]] = i;

  std::vector<int> target(k);
  for (int i = 0; i < k; ++i) target[i] = i + 1;

  PatternKey best;
  bool have_best = false;
  do {
    PatternKey candidate;
    candidate.reserve(masks.size());
    for (std::uint16_t m : masks) {
      IndexTuple tuple;
      for (int j = 1; j <= kMaxDimension; ++j)
        if (m >> (j - 1) & 1u) tuple.push_back(target[position[j]]);
      std::sort(tuple.begin(), tuple.end());
      candidate.push_back(std::move(tuple));
    }
    std::sort(candidate.begin(), candidate.end(), tuple_less);
    if (!have_best || pattern_key_less(candidate, best)) {
      best = std::move(candidate);
      have_best = true;
    }
  } while (std::next_permutation(target.begin(), target.end()));
  if (!have_best) return {};  // no generators
  return best;
}

PatternKey pattern_key(const GeneratorList& list) {
  std::vector<std::uint16_t> masks;
  masks.reserve(list.generators().size());
  for (const SignedBlade& g : list.generators()) masks.push_back(g.mask());
  return pattern_key(masks);
}

std::string pattern_name(const PatternKey& key, bool raw_form) {
  if (key.empty()) return raw_form ? "{1}" : "{±1}";
  std::string out;
  for (const IndexTuple& tuple : key) {
    if (raw_form) {
      out += "{1,e_" + index_letters(tuple) + "}";
    } else {
      if (!out.empty()) out += ' ';
      out += "E_" + index_letters(tuple);
    }
  }
  return out;
}

std::vector<std::uint16_t> masks_from_key(const PatternKey& key) {
  std::vector<std::uint16_t> masks;
  masks.reserve(key.size());
  for (const IndexTuple& tuple : key) {
    std::uint16_t m = 0;
    for (int index : tuple) m |= static_cast<std::uint16_t>(1u << (index - 1));
    masks.push_back(m);
  }
  return masks;
}

SignedBlade apply_relabeling(const SignedBlade& b,
                             std::span<const int> image) {
  std::vector<int> mapped;
  for (int j = 1; j <= b.dim(); ++j)
    if (b.mask() >> (j - 1) & 1u) mapped.push_back(image[j - 1]);
  // Parity of the permutation that re-sorts the mapped factors.
  bool neg = b.neg;
  for (std::size_t i = 0; i < mapped.size(); ++i)
    for (std::size_t j = i + 1; j < mapped.size(); ++j)
      if (mapped[i] > mapped[j]) neg = !neg;
  std::uint16_t mask = 0;
  for (int index : mapped) mask |= static_cast<std::uint16_t>(1u << (index - 1));
  return SignedBlade::from_mask(mask, b.dim(), neg);
}

}  // namespace geomgroup
