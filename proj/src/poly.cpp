#include "gbsn/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gbsn/errors.hpp"

namespace gbsn {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) {
  if (c == 0) return Poly();
  return Poly(std::vector<Rat>{c});
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = int(c_.size()) - 1; i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(long(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> d(c_);
  Rat lead = d.back();
  for (Rat& q : d) q /= lead;
  return Poly(std::move(d));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rat> out(c_.size() + rhs.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& rhs) const {
  std::vector<Rat> out(std::max(c_.size(), rhs.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
  std::vector<Rat> out(std::max(c_.size(), rhs.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
  return Poly(std::move(out));
}

Poly Poly::rem(const Poly& rhs) const {
  if (rhs.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> r(c_);
  const int dr = rhs.degree();
  while (int(r.size()) - 1 >= dr) {
    Rat f = r.back() / rhs.leading();
    int shift = int(r.size()) - 1 - dr;
    for (int i = 0; i <= dr; ++i) r[shift + i] -= f * rhs.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return Poly(std::move(r));
}

Poly Poly::divexact(const Poly& rhs) const {
  if (rhs.is_zero()) throw Error("polynomial division by zero");
  if (is_zero()) return Poly();
  std::vector<Rat> r(c_);
  std::vector<Rat> q(c_.size() - rhs.c_.size() + 1, Rat(0));
  const int dr = rhs.degree();
  while (int(r.size()) - 1 >= dr) {
    Rat f = r.back() / rhs.leading();
    int shift = int(r.size()) - 1 - dr;
    q[shift] = f;
    for (int i = 0; i <= dr; ++i) r[shift + i] -= f * rhs.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  if (!r.empty()) throw Error("divexact: remainder is nonzero");
  return Poly(std::move(q));
}

bool Poly::is_integral() const {
  for (const Rat& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs_rat(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

int sign_of(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error("sturm_count on the zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].rem(chain.back());
    chain.push_back(Poly() - r);
  }
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int real_roots_in_interval(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error("real_roots_in_interval on the zero polynomial");
  if (p.degree() == 0) return 0;
  Poly g = poly_gcd(p, p.derivative());
  Poly squarefree = p.divexact(g);
  return sturm_count(squarefree, a, b) + real_roots_in_interval(g, a, b);
}

bool all_roots_on_unit_circle(const Poly& p_in) {
  if (p_in.is_zero()) throw Error("all_roots_on_unit_circle on the zero polynomial");
  Poly p = p_in.monic();
  if (p.degree() == 0) return true;
  if (p.eval(Rat(0)) == 0) return false;  // root at 0

  // peel off roots at +1 and -1
  const Poly z_minus_1(std::vector<Rat>{Rat(-1), Rat(1)});
  const Poly z_plus_1(std::vector<Rat>{Rat(1), Rat(1)});
  while (p.degree() > 0 && p.eval(Rat(1)) == 0) p = p.divexact(z_minus_1);
  while (p.degree() > 0 && p.eval(Rat(-1)) == 0) p = p.divexact(z_plus_1);
  if (p.degree() == 0) return true;

  // the remaining roots, if on the circle, come in conjugate pairs
  // z = e^{+-i theta}, so p must be palindromic of even degree
  const int m = p.degree();
  if (m % 2 != 0) return false;
  for (int i = 0; i <= m; ++i)
    if (p.coeff(i) != p.coeff(m - i)) return false;

  // substitute x = z + 1/z: p(z)/z^k = G(x) with deg G = k; circle roots of
  // p correspond to real roots of G in (-2, 2)
  const int k = m / 2;
  // v[j] = z^j + z^{-j} expressed in x:  v0 = 2, v1 = x, v_{j+1} = x v_j - v_{j-1}
  std::vector<Poly> v(k + 1);
  v[0] = Poly(std::vector<Rat>{Rat(2)});
  if (k >= 1) v[1] = Poly(std::vector<Rat>{Rat(0), Rat(1)});
  for (int j = 2; j <= k; ++j) v[j] = v[1] * v[j - 1] - v[j - 2];
  Poly g = Poly::constant(p.coeff(k));
  for (int j = 1; j <= k; ++j) g = g + v[j] * Poly::constant(p.coeff(k - j));
  return real_roots_in_interval(g, Rat(-2), Rat(2)) == k;
}

Poly char_poly(const MatQ& m) {
  const int n = m.dim();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  MatQ acc = m;
  for (int k = 1; k <= n; ++k) {
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += acc.at(i, i);
    c[n - k] = -tr / Rat(long(k));
    if (k < n) acc = m * (acc + matq_scalar(n, c[n - k]));
  }
  return Poly(std::move(c));
}

long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> finite_order_candidates(int n) {
  // divisors with totient <= n (phi(d) >= sqrt(d/2) bounds the scan)
  std::vector<long> small;
  for (long d = 1; d <= 2L * (n + 1) * (n + 1) + 2; ++d)
    if (euler_phi(d) <= n) small.push_back(d);

  // cheapest totient sum achieving each lcm
  std::map<long, long> cost{{1, 0}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [m, c] : std::map<long, long>(cost)) {
      for (long d : small) {
        long l = std::lcm(m, d);
        long nc = c + euler_phi(d);
        if (nc > n) continue;
        auto it = cost.find(l);
        if (it == cost.end() || it->second > nc) {
          cost[l] = nc;
          changed = true;
        }
      }
    }
  }
  std::vector<long> out;
  for (const auto& [m, c] : cost) out.push_back(m);
  return out;  // std::map iteration is already ascending
}

OrderResult order_of(const MatQ& m) {
  if (m.det() == 0) throw SingularError("order_of " + m.to_string());
  for (long cand : finite_order_candidates(m.dim()))
    if (m.pow(Int(cand)).is_identity()) return {true, cand};
  return {false, 0};
}

}  // namespace gbsn
