#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vdlab {

using Int = mpz_class;
using Rat = mpq_class;

// p/q reduced, q > 0. Throws on q == 0.
Rat make_rat(const Int& p, const Int& q);

// Canonical rendering: "p" when q == 1, else "p/q".
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" with optional sign; result canonicalized.
Rat rat_from_string(const std::string& s);

Int binomial(long n, long k);

Int int_pow(const Int& base, unsigned long e);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vdlab
