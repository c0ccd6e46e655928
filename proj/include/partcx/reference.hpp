#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace partcx::reference {

// Published values of χ(K_n) for n = 1..25. Used only by verification code;
// b_n = χ(K_n) - 1.
inline constexpr std::array<std::int64_t, 25> chi_table{
    1, 1, 1, 1, 1, 1, 1, 2, 3, 6, 11, 20, 33, 56, 88, 138, 208, 311, 452, 653, 922, 1294, 1788,
    2454, 3325};

inline std::optional<std::int64_t> published_chi(int n) {
  if (n < 1 || n > static_cast<int>(chi_table.size())) return std::nullopt;
  return chi_table[static_cast<std::size_t>(n - 1)];
}

}  // namespace partcx::reference
