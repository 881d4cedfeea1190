#pragma once

#include <gmpxx.h>

#include <string>

namespace s3hopf {

// Exact rational scalar. All arithmetic in this project is exact; there is
// no floating point anywhere on a decision path.
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Parses "p", "-p/q" etc. Throws std::invalid_argument on malformed input
// or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical textual form "p" or "p/q" with q > 0 and gcd(p,q)=1.
std::string rat_str(const Rat& q);

// If q is the square of a rational, store it (>= 0) in out and return true.
bool rat_sqrt(const Rat& q, Rat& out);

}  // namespace s3hopf
