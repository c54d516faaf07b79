#include "gbsn/rational.hpp"

#include <cmath>

namespace gbsn {

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_class(str) aborts on garbage, so validate by hand first.
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) return std::nullopt;
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

std::optional<Rat> rationalize(double x, const Int& den_cap) {
  if (!std::isfinite(x)) return std::nullopt;
  bool neg = x < 0;
  double v = neg ? -x : x;

  // Continued-fraction convergents p/q of v, stopping before q exceeds cap.
  Int p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  Int p1 = 0, q1 = 1;  // p_0/q_0 seeded so the loop starts at floor(v)
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    Int a(static_cast<long>(fl));
    Int p2 = a * p0 + p1;
    Int q2 = a * q0 + q1;
    if (q2 > den_cap) break;
    p1 = p0; q1 = q0;
    p0 = p2; q0 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q0 == 0) return std::nullopt;
  Rat q(neg ? Int(-p0) : p0, q0);
  q.canonicalize();
  return q;
}

}  // namespace gbsn
