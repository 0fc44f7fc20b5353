#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace ipd {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonical rational p/q with positive denominator and gcd(p,q)=1.
inline Rat make_rat(Int p, Int q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  Rat r;
  r.assign(Rat(p, q));
  return r;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

inline Int floor_rat(const Rat& r) {
  Int q, rem;
  boost::multiprecision::divide_qr(rat_num(r), rat_den(r), q, rem);
  if (rem != 0 && rat_num(r) < 0) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q, rem;
  boost::multiprecision::divide_qr(rat_num(r), rat_den(r), q, rem);
  if (rem != 0 && rat_num(r) > 0) ++q;
  return q;
}

// "p/q" when q != 1, plain integer otherwise.
inline std::string rat_str(const Rat& r) {
  if (is_integral(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int ipow(Int base, unsigned exp) {
  Int out = 1;
  while (exp--) out *= base;
  return out;
}

/// Smallest k >= 0 with 2^k >= v (v >= 1).
inline unsigned ceil_log2(const Int& v) {
  unsigned k = 0;
  Int p = 1;
  while (p < v) {
    p <<= 1;
    ++k;
  }
  return k;
}

}  // namespace ipd
