#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "truthspace.hpp"

namespace fuzzyasp {

/// Shortest decimal that reads back to the same double.
inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of -0
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return std::to_string(v);
    return std::string(buf, end);
}

/// Literal syntax using the derived shape: ifn(a,d), tfn(a,b,d) or trfn(a,b,c,d).
inline std::string render(const FuzzyTruth& x) {
    switch (x.shape()) {
    case Shape::interval:
        return "ifn(" + format_number(x.a()) + "," + format_number(x.d()) + ")";
    case Shape::triangular:
        return "tfn(" + format_number(x.a()) + "," + format_number(x.b()) + "," +
               format_number(x.d()) + ")";
    case Shape::trapezoidal:
        break;
    }
    return "trfn(" + format_number(x.a()) + "," + format_number(x.b()) + "," +
           format_number(x.c()) + "," + format_number(x.d()) + ")";
}

/// Always the full quadruple, trfn(a,b,c,d).
inline std::string render_quadruple(const FuzzyTruth& x) {
    return "trfn(" + format_number(x.a()) + "," + format_number(x.b()) + "," +
           format_number(x.c()) + "," + format_number(x.d()) + ")";
}

} // namespace fuzzyasp
