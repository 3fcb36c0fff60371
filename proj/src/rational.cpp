#include "kmroots/rational.hpp"

#include "kmroots/error.hpp"

namespace kmroots {

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rational(const std::string& s) {
  require(!s.empty(), "BadRational", "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    require(den != 0, "BadRational", "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    fail("BadRational", "cannot parse '" + s + "'");
  }
}

}  // namespace kmroots
