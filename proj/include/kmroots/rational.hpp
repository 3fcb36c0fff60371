#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace kmroots {

// Exact rational scalar. All convex-geometry and classification code is
// required to stay in exact arithmetic; no floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders "p" for integers and "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q" with optional sign on p.
Rat parse_rational(const std::string& s);

}  // namespace kmroots
