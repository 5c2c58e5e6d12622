#pragma once

namespace semitsp {

/// Relative slack applied to every guarantee check; absorbs summation
/// noise, never algorithmic error.
inline constexpr double kRelativeSlack = 1e-9;

inline bool within_bound(double value, double bound) noexcept { return value <= bound * (1.0 + kRelativeSlack); }

}  // namespace semitsp
