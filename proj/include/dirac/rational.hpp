#ifndef DIRAC_RATIONAL_HPP
#define DIRAC_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace dirac {

/// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
/// canonicalization; every constructor below canonicalizes.
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p". Rejects zero denominators and malformed input.
inline Rat rat_parse(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  for (char c : text)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw Error("malformed rational literal: " + text);
  Rat r;
  if (r.set_str(text, 10) != 0) throw Error("malformed rational literal: " + text);
  if (r.get_den() == 0) throw Error("zero denominator in rational literal: " + text);
  r.canonicalize();
  return r;
}

/// Renders "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace dirac

#endif
