#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gbsn {

// Arbitrary-precision integers and rationals, backed by GMP.  mpq_class
// values are kept canonical (reduced, positive denominator) by GMP itself,
// which is exactly the invariant the rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Floor division a/b for integers, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Parses "n" or "n/d"; returns nullopt on malformed input or zero denominator.
std::optional<Rat> rat_from_string(const std::string& s);

// Nearest rational approximation of x with denominator <= den_cap, by
// continued fractions.  Returns nullopt for non-finite x.
std::optional<Rat> rationalize(double x, const Int& den_cap);

}  // namespace gbsn
