#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geomgroup/enumerate.hpp"

namespace geomgroup {

struct Table {
  int id = 0;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;  // rendered with a leading '#'
};

/// Reference tables of the dimension-3 taxonomy.  1: all choirs with their
/// names; 2-5: modes 0-3; 6: all bands; 7-10: the first four rhythms.
/// The report must come from enumerate_groups(3, 3); throws
/// std::invalid_argument otherwise and on ids outside 1..10.
Table table_rows(const TaxonomyReport&, int table_id);

/// Fixed-width text rendering, one line per row.
std::string render_table(const Table&);

/// Traditional name of a choir pattern, or "" for patterns without one.
std::string_view angelic_name(std::string_view pattern);

}  // namespace geomgroup
