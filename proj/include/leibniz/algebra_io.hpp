#pragma once

#include "leibniz/algebra.hpp"

#include <stdexcept>
#include <string>

namespace leibniz {

/// Raised on malformed algebra documents: invalid JSON, a bad "dim",
/// indices outside 1..n, a zero coefficient listed, or a duplicate
/// (i, j, k) entry.
class AlgebraFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the algebra file format:
///   {"dim": n, "brackets": [{"i": 1, "j": 1, "out": [[3, "1"]]}, ...]}
/// Indices are 1-based; coefficients are "p" or "p/q" strings; pairs not
/// listed multiply to zero.
Algebra parse_algebra(const std::string& text);

/// Canonical emission: brackets sorted by (i, j), "out" sorted by k,
/// coefficients in lowest terms. parse_algebra(emit_algebra(a)) == a.
std::string emit_algebra(const Algebra& a);

}  // namespace leibniz
