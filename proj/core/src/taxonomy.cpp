#include "geomgroup/taxonomy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace geomgroup {

namespace {

std::vector<int> used_indices_of_set(const ElementSet& s) {
  std::uint16_t all = 0;
  for (const SignedBlade& e : s) all |= e.mask();
  std::vector<int> used;
  for (int j = 1; j <= s.dim(); ++j)
    if (all >> (j - 1) & 1u) used.push_back(j);
  return used;
}

std::vector<int> sorted_grades(const ElementSet& s) {
  std::vector<int> grades;
  grades.reserve(s.size());
  for (const SignedBlade& e : s) grades.push_back(grade(e));
  std::sort(grades.begin(), grades.end());
  return grades;
}

}  // namespace

GroupRecord classify(const GeneratorList& list) {
  ElementSet closure = generate_closure(list);
  const int n = list.count();
  const std::size_t group_order = closure.size();
  const int phi = disorder(n, group_order);

  std::string signature;
  for (const SignedBlade& g : list.generators())
    signature += square_sign(g) > 0 ? '+' : '-';
  const int q = static_cast<int>(std::count(signature.begin(),
                                            signature.end(), '-'));
  const int p = n - q;

  bool all_anticommute = true;
  const auto& gens = list.generators();
  for (int i = 0; i < n && all_anticommute; ++i)
    for (int j = i + 1; j < n; ++j)
      if (commutes(gens[i], gens[j])) {
        all_anticommute = false;
        break;
      }

  GroupRecord record{
      .generators = list,
      .closure = std::move(closure),
      .gen_count = n,
      .log2_order = std::countr_zero(group_order),
      .signature = signature,
      .verdict = (all_anticommute && phi == 0) ? GroupClass::choir
                                               : GroupClass::band,
      .clifford_target = {p, q},
      .disorder = phi,
      .chord = n >= 2 ? chord(list) : std::vector<int>{},
      .beat = std::nullopt,
      .key = pattern_key(list),
      .raw_form = false,
      .pattern = {},
  };
  record.beat = beat(record.chord, n);
  record.raw_form = !list.adjoin_minus_one() &&
                    !record.closure.contains(SignedBlade::minus_one(list.dim()));
  record.pattern = pattern_name(record.key, record.raw_form);
  return record;
}

int disorder(int gen_count, std::size_t group_order) {
  if (group_order == 0 || !std::has_single_bit(group_order))
    throw internal_error("group order " + std::to_string(group_order) +
                         " is not a power of two");
  const int m = std::countr_zero(group_order);
  return gen_count + 1 - m;
}

std::vector<int> chord(const GeneratorList& list) {
  const auto& gens = list.generators();
  std::vector<int> out(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && commutes(gens[i], gens[j])) ++out[i];
  return out;
}

std::optional<Fraction> beat(const std::vector<int>& chord, int gen_count) {
  if (gen_count < 2) return std::nullopt;
  const int total = std::accumulate(chord.begin(), chord.end(), 0);
  return Fraction{total, gen_count * (gen_count - 1)};
}

Presentation presentation_of(const GeneratorList& list) {
  const auto& gens = list.generators();
  const std::size_t n = gens.size();
  Presentation out;
  out.squares.reserve(n);
  for (const SignedBlade& g : gens) out.squares.push_back(square_sign(g));
  out.commute.assign(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.commute[i][j] = out.commute[j][i] = commutes(gens[i], gens[j]);
  return out;
}

Presentation clifford_presentation(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative signature");
  const std::size_t n = static_cast<std::size_t>(p + q);
  Presentation out;
  out.squares.assign(n, +1);
  std::fill(out.squares.begin() + p, out.squares.end(), -1);
  out.commute.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) out.commute[i][i] = true;
  return out;
}

bool isomorphic(const Presentation& a, const Presentation& b) {
  const std::size_t n = a.squares.size();
  if (b.squares.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (a.squares[i] != b.squares[perm[i]]) ok = false;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (a.commute[i][j] != b.commute[perm[i]][perm[j]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool presentation_isomorphic(const GeneratorList& a, const GeneratorList& b) {
  return isomorphic(presentation_of(a), presentation_of(b));
}

bool similar(const GeneratorList& a, const GeneratorList& b) {
  if (a.dim() != b.dim())
    throw dimension_mismatch("similar needs one dimension, got " +
                             std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
  if (a.adjoin_minus_one() != b.adjoin_minus_one()) return false;
  if (a.count() != b.count()) return false;

  std::uint16_t all_a = 0, all_b = 0;
  for (const SignedBlade& g : a.generators()) all_a |= g.mask();
  for (const SignedBlade& g : b.generators()) all_b |= g.mask();
  if (std::popcount(all_a) != std::popcount(all_b)) return false;

  std::vector<std::uint16_t> sorted_b;
  sorted_b.reserve(b.generators().size());
  for (const SignedBlade& g : b.generators()) sorted_b.push_back(g.mask());
  std::sort(sorted_b.begin(), sorted_b.end());

  std::vector<int> used_a, used_b;
  for (int j = 1; j <= a.dim(); ++j) {
    if (all_a >> (j - 1) & 1u) used_a.push_back(j);
    if (all_b >> (j - 1) & 1u) used_b.push_back(j);
  }

  // Try every bijection from used_a onto used_b.
  std::vector<int> assignment = used_b;
  do {
    std::vector<int> image(a.dim(), 0);
    for (std::size_t i = 0; i < used_a.size(); ++i)
      image[used_a[i] - 1] = assignment[i];
    std::vector<std::uint16_t> mapped;
    mapped.reserve(sorted_b.size());
    for (const SignedBlade& g : a.generators()) {
      std::uint16_t m = 0;
      for (int j = 1; j <= a.dim(); ++j)
        if (g.mask() >> (j - 1) & 1u)
          m |= static_cast<std::uint16_t>(1u << (image[j - 1] - 1));
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == sorted_b) return true;
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  return false;
}

bool equivalent(const ElementSet& a, const ElementSet& b) {
  if (a.dim() != b.dim())
    throw dimension_mismatch("equivalent needs one dimension, got " +
                             std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
  if (a.size() != b.size()) return false;
  if (sorted_grades(a) != sorted_grades(b)) return false;

  std::vector<int> used_a = used_indices_of_set(a);
  std::vector<int> used_b = used_indices_of_set(b);
  if (used_a.size() != used_b.size()) return false;

  std::vector<int> assignment = used_b;
  do {
    std::vector<int> image(a.dim());
    std::iota(image.begin(), image.end(), 1);
    for (std::size_t i = 0; i < used_a.size(); ++i)
      image[used_a[i] - 1] = assignment[i];
    std::vector<SignedBlade> mapped;
    mapped.reserve(a.size());
    for (const SignedBlade& e : a) mapped.push_back(apply_relabeling(e, image));
    if (ElementSet(std::move(mapped), a.dim()) == b) return true;
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  return false;
}

bool equal(const ElementSet& a, const ElementSet& b) { return a == b; }

}  // namespace geomgroup
