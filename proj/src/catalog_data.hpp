#pragma once

#include <string_view>
#include <vector>

namespace spinv::detail {

struct NamedNotation {
    std::string_view name;
    std::string_view notation;
};

extern const std::vector<NamedNotation> three_spinor_table;
extern const std::vector<NamedNotation> four_spinor_deg2_table;
extern const std::vector<NamedNotation> four_spinor_t_table;
extern const std::vector<NamedNotation> four_spinor_y_table;
extern const std::vector<NamedNotation> five_spinor_pattern_table;

} // namespace spinv::detail
