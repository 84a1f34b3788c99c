#include "c32/variables.hpp"

#include <array>

namespace c32 {

namespace {

constexpr std::array<std::string_view, kMaxVars> kNames = {
    "x1",  "x2",                                                    //
    "x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33",  //
    "y11", "y12", "y13", "y21", "y22", "y23", "y31", "y32", "y33",  //
    "z11", "z12", "z13", "z21", "z22", "z23", "z31", "z32", "z33",  //
    "t",   "t1",  "t2",
};

}  // namespace

std::string_view var_name(VarId v)
{
    return kNames.at(v.index);
}

std::optional<VarId> var_by_name(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return VarId{static_cast<std::uint8_t>(i)};
        }
    }
    return std::nullopt;
}

}  // namespace c32
