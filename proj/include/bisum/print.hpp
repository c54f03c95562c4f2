// Canonical text forms. Every emitted string parses back to the same value.
#pragma once

#include <string>
#include <string_view>

#include "bisum/bpoly.hpp"

namespace bisum {

std::string to_string(const Rat& r);
std::string to_string(const UPoly& p, std::string_view var = "x");
std::string to_string(const PolyFrac& f, std::string_view var = "x");
// terms ordered by descending (deg_y, deg_x)
std::string to_string(const BPoly& p);
std::string to_string(const RatFunc& f);
// polynomial in `mainvar` with coefficients rational in `coeffvar`
std::string to_string(const FPoly& p, std::string_view mainvar, std::string_view coeffvar);

}  // namespace bisum
