#pragma once

namespace geomgroup::detail {

// Footnotes attached to the reference taxonomy at dimension 3, cap 3.
inline constexpr const char* kModeOneNote =
    "mode 1 lists single-generator groups; its n column reports the "
    "generator count, so E_ab and E_abc both sit at n = 1";

inline constexpr const char* kRhythmSingletonNote =
    "table ids 7-10 cover four of the five rhythms; the singleton rhythm "
    "of E_ab E_ac E_bc has no table of its own";

}  // namespace geomgroup::detail
