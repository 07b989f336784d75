#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomgroup/taxonomy.hpp"

namespace geomgroup {

struct EnumerateOptions {
  int dim = 3;
  int max_gens = 3;
  /// Restrict the generator universe to positive blades with mask below this
  /// bound; 0 means every nonscalar blade of the algebra.
  std::uint16_t universe_limit = 0;
};

/// Indices into TaxonomyReport::classes; members are sorted, the first one
/// is the block's leader.
struct ClassBlock {
  std::vector<std::size_t> members;

  std::size_t leader() const { return members.front(); }
};

struct TaxonomyCounts {
  std::size_t total = 0;
  std::size_t choirs = 0;
  std::size_t bands = 0;
  /// Classes counted up to presentation isomorphism instead of similarity.
  std::size_t isomorphism_classes = 0;
};

/// Full classification of every group generated by up to max_gens positive
/// blades, one representative per similarity class.
struct TaxonomyReport {
  int dim = 0;
  int max_gens = 0;
  std::vector<GroupRecord> classes;   // sorted by (n, key, raw last)
  std::vector<ClassBlock> modes;      // choirs, one block per generator count
  std::vector<ClassBlock> rhythms;    // bands, blocks of equivalent closures
  TaxonomyCounts counts;
  std::vector<std::string> notes;
};

/// Walk every subset of the blade universe of size 1..max_gens plus the
/// empty adjoined set, dedupe by similarity, classify one representative of
/// each class.  Emits the raw (no -1) version of a class only when the raw
/// closure actually differs, i.e. when -1 is not already a product of the
/// generators.  Deterministic: two runs give identical reports.
TaxonomyReport enumerate_groups(const EnumerateOptions&);
TaxonomyReport enumerate_groups(int dim, int max_gens);

/// Partition choir records by generator count; mode number = generator
/// count of the block.  Throws std::invalid_argument on a band.
std::vector<std::vector<std::size_t>> mode_partition(
    const std::vector<GroupRecord>& choirs);

/// Partition band records into blocks of pairwise equivalent closures.
/// Throws std::invalid_argument on a choir.
std::vector<std::vector<std::size_t>> rhythm_partition(
    const std::vector<GroupRecord>& bands);

}  // namespace geomgroup
