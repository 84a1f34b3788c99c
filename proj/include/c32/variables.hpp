#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace c32 {

inline constexpr std::size_t kMaxVars = 32;

/// Index into the fixed variable registry below.
struct VarId {
    std::uint8_t index = 0;

    friend constexpr bool operator==(VarId, VarId) = default;
    friend constexpr auto operator<=>(VarId, VarId) = default;
};

/// Registry layout (stable for the process lifetime):
///   0..1    x1, x2          diagonal entries of the diagonal traceless x
///   2..10   x11 .. x33      entries of a generic x
///   11..19  y11 .. y33      entries of a generic y
///   20..28  z11 .. z33      entries of a fully generic 3x3 matrix
///   29      t               auxiliary grading variable
///   30..31  t1, t2          Hilbert-series variables
namespace vars {

inline constexpr VarId x1{0};
inline constexpr VarId x2{1};
inline constexpr VarId t{29};
inline constexpr VarId t1{30};
inline constexpr VarId t2{31};

/// Entry (row, col), both 1-based, of the generic x, y and z blocks.
constexpr VarId x(int row, int col) { return VarId{static_cast<std::uint8_t>(2 + 3 * (row - 1) + (col - 1))}; }
constexpr VarId y(int row, int col) { return VarId{static_cast<std::uint8_t>(11 + 3 * (row - 1) + (col - 1))}; }
constexpr VarId z(int row, int col) { return VarId{static_cast<std::uint8_t>(20 + 3 * (row - 1) + (col - 1))}; }

}  // namespace vars

std::string_view var_name(VarId v);
std::optional<VarId> var_by_name(std::string_view name);

}  // namespace c32
