#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qtop/errors.hpp"

namespace qtop {

/// Exact arbitrary-precision rational. Endpoint arithmetic must distinguish
/// single points, so nothing in the interval layer ever touches floating
/// point.
using Rat = boost::multiprecision::cpp_rational;

inline Rat ratAbs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// "integer" or "integer/positive-integer", e.g. "3", "-1/2".
inline Rat parseRat(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&] { throw ParseError(0, "bad rational '" + text + "'"); };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t numStart = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == numStart) fail();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        std::size_t denStart = ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == denStart || i != text.size()) fail();
        if (text.substr(denStart).find_first_not_of('0') == std::string::npos)
            throw ParseError(0, "zero denominator in '" + text + "'");
    }
    return Rat(text);
}

inline std::string toString(const Rat& r) { return r.str(); }

}  // namespace qtop
