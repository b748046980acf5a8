#pragma once

#include <string>

#include "chimeraq/formulations.hpp"

namespace chimeraq {

// Deterministic LP text in the industry dialect: sections Minimize /
// Subject To / Bounds / Binaries / End. The objective constant, which the
// dialect cannot express, rides on the first line as the comment
// "\ objective offset: <int>". Quadratic objectives use the bracketed
// half-convention: the terms inside "[ ... ] / 2" carry doubled
// coefficients. Output is byte-identical for identical models.
std::string emit_lp(const MilpModel& m);
std::string emit_lp(const MiqpModel& m);

// Parses the linear dialect subset produced by emit_lp(MilpModel).
// parse_lp(emit_lp(m)) is structurally equal to m.
MilpModel parse_lp(const std::string& text);

}  // namespace chimeraq
