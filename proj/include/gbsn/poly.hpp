#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbsn/matrix.hpp"

namespace gbsn {

// Univariate polynomial over Q, coefficients in ascending degree order with
// a nonzero leading coefficient (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int i) const { return c_[i]; }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly operator*(const Poly& rhs) const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  bool operator==(const Poly& rhs) const = default;

  // Polynomial remainder of *this modulo rhs.
  Poly rem(const Poly& rhs) const;
  // Exact quotient; throws when rhs does not divide *this.
  Poly divexact(const Poly& rhs) const;

  bool is_integral() const;  // all coefficients in Z

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rat> c_;
};

// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

// Number of distinct real roots in the open interval (a, b), by Sturm's
// theorem.  Requires p(a) != 0 and p(b) != 0.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

// Number of real roots in (a, b) counted with multiplicity.
int real_roots_in_interval(const Poly& p, const Rat& a, const Rat& b);

// Exact test: do all complex roots of p lie on the unit circle?
// Requires p nonzero.  Works by stripping roots at +-1, checking that the
// rest is palindromic of even degree, substituting x = z + 1/z, and
// counting real roots of the transformed polynomial in (-2, 2).
bool all_roots_on_unit_circle(const Poly& p);

// Characteristic polynomial det(xI - M), exact (Faddeev-LeVerrier).
Poly char_poly(const MatQ& m);

// Euler totient.
long euler_phi(long m);

// All possible orders of finite-order elements of GL_n(Q): integers m that
// are an lcm of divisors whose totients sum to at most n.  Sorted ascending.
std::vector<long> finite_order_candidates(int n);

struct OrderResult {
  bool finite;
  long order;  // valid when finite
};

// Least k >= 1 with M^k = I, or infinite.  Candidate orders come from
// finite_order_candidates; every candidate failing proves infinite order.
// Throws SingularError for det(M) = 0.
OrderResult order_of(const MatQ& m);

}  // namespace gbsn
