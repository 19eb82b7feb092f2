#pragma once

namespace fspace {

// Size caps for the exponential operations. FSPACE_SIZE_LIMIT, when set to a
// positive integer, overrides both the enumeration cap (default 7) and the
// Γ subset-sum cap (default 14).
int size_limit_override_or(int fallback);

constexpr int kDefaultEnumerationLimit = 7;
constexpr int kDefaultGammaLimit = 14;

}  // namespace fspace
