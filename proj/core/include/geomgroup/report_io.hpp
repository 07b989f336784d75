#pragma once

#include <string>

#include "geomgroup/enumerate.hpp"

namespace geomgroup {

/// JSON texts are pretty-printed with two-space indent, fields in a fixed
/// order, and are byte-identical across runs.

std::string to_json(const ElementSet&);     // array of canonical literals
std::string to_json(const GroupRecord&);    // one class object
std::string to_json(const TaxonomyReport&);

/// CSV with header pattern,n,order,class,signature,target,disorder,chord,
/// beat; fields containing commas are quoted.
std::string to_csv(const GroupRecord&);
std::string to_csv(const TaxonomyReport&);

/// "{1, -1, e1, -e1}" in canonical element order.
std::string to_text(const ElementSet&);

}  // namespace geomgroup
