#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace posspan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
Rat parseRat(const std::string& tok);

// Renders in lowest terms, "p" when the denominator is 1, else "p/q" with q > 0.
std::string formatRat(const Rat& r);

inline Rat ratAbs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int ratSign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

}  // namespace posspan
