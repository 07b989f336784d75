#include "geomgroup/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "notes.hpp"

namespace geomgroup {

namespace {

// Subsets are identified by their ascending mask vectors.
using SubsetId = std::vector<std::uint16_t>;

std::uint16_t swap_adjacent_bits(std::uint16_t mask, int t) {
  const std::uint16_t lo = static_cast<std::uint16_t>(1u << t);
  const std::uint16_t hi = static_cast<std::uint16_t>(1u << (t + 1));
  const bool has_lo = mask & lo;
  const bool has_hi = mask & hi;
  if (has_lo == has_hi) return mask;
  return static_cast<std::uint16_t>(mask ^ (lo | hi));
}

SubsetId apply_transposition(const SubsetId& subset, int t) {
  SubsetId out;
  out.reserve(subset.size());
  for (std::uint16_t m : subset) out.push_back(swap_adjacent_bits(m, t));
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorList list_from_masks(const std::vector<std::uint16_t>& masks,
                              bool adjoin, int dim) {
  std::vector<SignedBlade> gens;
  gens.reserve(masks.size());
  for (std::uint16_t m : masks)
    gens.push_back(SignedBlade::from_mask(m, dim));
  return GeneratorList(std::move(gens), adjoin, dim);
}

// Canonical form of a closure under index relabeling: the minimum, over all
// relabelings of the used indices onto 1..k, of the signed listing.  Two
// closures are equivalent iff their forms match.
std::vector<std::pair<std::uint16_t, bool>> canonical_closure_form(
    const ElementSet& s) {
  std::uint16_t all = 0;
  for (const SignedBlade& e : s) all |= e.mask();
  std::vector<int> used;
  for (int j = 1; j <= s.dim(); ++j)
    if (all >> (j - 1) & 1u) used.push_back(j);

  std::vector<int> target(used.size());
  for (std::size_t i = 0; i < used.size(); ++i)
    target[i] = static_cast<int>(i) + 1;

  std::vector<std::pair<std::uint16_t, bool>> best;
  bool have_best = false;
  do {
    std::vector<int> image(s.dim(), 0);
    for (std::size_t i = 0; i < used.size(); ++i)
      image[used[i] - 1] = target[i];
    std::vector<std::pair<std::uint16_t, bool>> candidate;
    candidate.reserve(s.size());
    for (const SignedBlade& e : s) {
      SignedBlade mapped = apply_relabeling(e, image);
      candidate.emplace_back(mapped.mask(), mapped.neg);
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have_best || candidate < best) {
      best = std::move(candidate);
      have_best = true;
    }
  } while (std::next_permutation(target.begin(), target.end()));
  return best;
}

bool record_order_less(const GroupRecord& a, const GroupRecord& b) {
  if (a.gen_count != b.gen_count) return a.gen_count < b.gen_count;
  if (a.key != b.key) return pattern_key_less(a.key, b.key);
  return !a.raw_form && b.raw_form;
}

}  // namespace

TaxonomyReport enumerate_groups(const EnumerateOptions& options) {
  const int dim = options.dim;
  if (dim < 1 || dim > 7)
    throw std::invalid_argument("exhaustive enumeration supports dimensions "
                                "1..7, got " + std::to_string(dim));
  const int blade_count = (1 << dim) - 1;
  if (options.max_gens < 0 || options.max_gens > blade_count)
    throw std::invalid_argument("max_gens must be in 0.." +
                                std::to_string(blade_count) + ", got " +
                                std::to_string(options.max_gens));

  std::vector<std::uint16_t> universe;
  const std::uint16_t limit =
      options.universe_limit
          ? std::min<std::uint16_t>(options.universe_limit,
                                    static_cast<std::uint16_t>(1u << dim))
          : static_cast<std::uint16_t>(1u << dim);
  for (std::uint16_t m = 1; m < limit; ++m) universe.push_back(m);

  // One orbit of subsets under index relabeling = one similarity class.
  // BFS over adjacent transpositions marks the whole orbit; the minimal
  // member is the class key.
  std::set<SubsetId> visited;
  std::vector<PatternKey> class_keys;
  const int max_size = std::min<int>(options.max_gens,
                                     static_cast<int>(universe.size()));
  std::vector<std::size_t> pick;
  for (int size = 1; size <= max_size; ++size) {
    pick.assign(static_cast<std::size_t>(size), 0);
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    for (;;) {
      SubsetId subset;
      subset.reserve(pick.size());
      for (std::size_t i : pick) subset.push_back(universe[i]);
      if (!visited.contains(subset)) {
        // pattern_key is the same for every orbit member, so take it from
        // the first one and only walk the orbit to mark it visited.
        class_keys.push_back(pattern_key(subset));
        std::queue<SubsetId> frontier;
        visited.insert(subset);
        frontier.push(subset);
        while (!frontier.empty()) {
          SubsetId current = std::move(frontier.front());
          frontier.pop();
          for (int t = 0; t + 1 < dim; ++t) {
            SubsetId next = apply_transposition(current, t);
            if (visited.insert(next).second) frontier.push(next);
          }
        }
      }
      // Next combination of universe indices.
      int slot = size - 1;
      while (slot >= 0 &&
             pick[slot] == universe.size() - pick.size() + slot)
        --slot;
      if (slot < 0) break;
      ++pick[slot];
      for (std::size_t i = slot + 1; i < pick.size(); ++i)
        pick[i] = pick[i - 1] + 1;
    }
  }
  std::sort(class_keys.begin(), class_keys.end(),
            [](const PatternKey& a, const PatternKey& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return pattern_key_less(a, b);
            });

  TaxonomyReport report;
  report.dim = dim;
  report.max_gens = options.max_gens;

  // The empty adjoined list generates {+-1}.
  report.classes.push_back(
      classify(GeneratorList({}, true, dim)));
  for (const PatternKey& key : class_keys) {
    GeneratorList adjoined = list_from_masks(masks_from_key(key), true, dim);
    report.classes.push_back(classify(adjoined));
    GeneratorList raw = list_from_masks(masks_from_key(key), false, dim);
    GroupRecord raw_record = classify(raw);
    if (raw_record.raw_form) report.classes.push_back(std::move(raw_record));
  }
  std::sort(report.classes.begin(), report.classes.end(), record_order_less);

  std::vector<GroupRecord> choirs, bands;
  std::vector<std::size_t> choir_index, band_index;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    if (report.classes[i].verdict == GroupClass::choir) {
      choirs.push_back(report.classes[i]);
      choir_index.push_back(i);
    } else {
      bands.push_back(report.classes[i]);
      band_index.push_back(i);
    }
  }
  for (const auto& block : mode_partition(choirs)) {
    ClassBlock mapped;
    for (std::size_t member : block)
      mapped.members.push_back(choir_index[member]);
    report.modes.push_back(std::move(mapped));
  }
  for (const auto& block : rhythm_partition(bands)) {
    ClassBlock mapped;
    for (std::size_t member : block)
      mapped.members.push_back(band_index[member]);
    report.rhythms.push_back(std::move(mapped));
  }

  report.counts.total = report.classes.size();
  report.counts.choirs = choirs.size();
  report.counts.bands = bands.size();

  // Count classes again, this time merging presentation-isomorphic ones.
  std::vector<std::size_t> iso_reps;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    bool found = false;
    for (std::size_t rep : iso_reps)
      if (presentation_isomorphic(report.classes[rep].generators,
                                  report.classes[i].generators)) {
        found = true;
        break;
      }
    if (!found) iso_reps.push_back(i);
  }
  report.counts.isomorphism_classes = iso_reps.size();

  if (dim == 3 && options.max_gens == 3 && !options.universe_limit) {
    report.notes.push_back(detail::kModeOneNote);
    report.notes.push_back(detail::kRhythmSingletonNote);
  }
  return report;
}

TaxonomyReport enumerate_groups(int dim, int max_gens) {
  EnumerateOptions options;
  options.dim = dim;
  options.max_gens = max_gens;
  return enumerate_groups(options);
}

std::vector<std::vector<std::size_t>> mode_partition(
    const std::vector<GroupRecord>& choirs) {
  std::map<int, std::vector<std::size_t>> by_count;
  for (std::size_t i = 0; i < choirs.size(); ++i) {
    if (choirs[i].verdict != GroupClass::choir)
      throw std::invalid_argument("mode_partition expects choirs only, got " +
                                  choirs[i].pattern);
    by_count[choirs[i].gen_count].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(by_count.size());
  for (auto& [count, members] : by_count) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<std::size_t>> rhythm_partition(
    const std::vector<GroupRecord>& bands) {
  std::map<std::vector<std::pair<std::uint16_t, bool>>,
           std::vector<std::size_t>>
      by_form;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].verdict != GroupClass::band)
      throw std::invalid_argument("rhythm_partition expects bands only, got " +
                                  bands[i].pattern);
    by_form[canonical_closure_form(bands[i].closure)].push_back(i);
  }
  // Blocks ordered by their leader, the lowest member index.
  std::vector<std::vector<std::size_t>> out;
  out.reserve(by_form.size());
  for (auto& [form, members] : by_form) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace geomgroup
