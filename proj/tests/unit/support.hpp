#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace testing {

// Distance in units in the last place between two finite doubles.
inline double ulps(double a, double b) {
  if (a == b) return 0;
  auto ordered = [](double v) {
    std::int64_t i;
    std::memcpy(&i, &v, sizeof v);
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
  };
  const std::int64_t ia = ordered(a), ib = ordered(b);
  return static_cast<double>(ia > ib ? static_cast<std::uint64_t>(ia) - static_cast<std::uint64_t>(ib)
                                     : static_cast<std::uint64_t>(ib) - static_cast<std::uint64_t>(ia));
}

inline double rel_err(double v, double ref) {
  return ref == 0 ? std::abs(v) : std::abs(v - ref) / std::abs(ref);
}

inline bool same_bits(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace testing
