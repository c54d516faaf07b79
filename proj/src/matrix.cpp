#include "gbsn/matrix.hpp"

#include <sstream>

#include "gbsn/errors.hpp"

namespace gbsn {

MatZ MatZ::identity(int n) {
  MatZ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatZ MatZ::operator*(const MatZ& rhs) const {
  if (cols_ != rhs.rows_) throw DimError("MatZ product");
  MatZ out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

void MatZ::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void MatZ::negate_col(int j) {
  for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void MatZ::addmul_col(int j, int i, const Int& c) {
  if (c == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, j) += c * at(r, i);
}

Int MatZ::det() const {
  if (rows_ != cols_) throw DimError("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  MatZ a(*this);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::string MatZ::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

MatQ MatQ::identity(int n) {
  MatQ m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_int(const MatZ& m) {
  if (m.rows() != m.cols()) throw DimError("MatQ::from_int expects square input");
  MatQ out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

MatQ MatQ::operator*(const MatQ& rhs) const {
  if (n_ != rhs.n_) throw DimError("MatQ product");
  MatQ out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

MatQ MatQ::operator+(const MatQ& rhs) const {
  if (n_ != rhs.n_) throw DimError("MatQ sum");
  MatQ out(n_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

MatQ MatQ::operator-(const MatQ& rhs) const {
  if (n_ != rhs.n_) throw DimError("MatQ difference");
  MatQ out(n_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

MatQ MatQ::operator*(const Rat& c) const {
  MatQ out(n_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
  return out;
}

VecQ MatQ::apply(const VecQ& v) const {
  if (int(v.size()) != n_) throw DimError("MatQ apply");
  VecQ out(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

MatQ MatQ::transpose() const {
  MatQ out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Int MatQ::common_denominator() const {
  Int d(1);
  for (const Rat& q : e_) d = lcm(d, q.get_den());
  return d;
}

MatZ MatQ::scaled_integral(const Int& d) const {
  MatZ out(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Rat s = at(i, j) * Rat(d);
      if (s.get_den() != 1) throw Error("scaled_integral: scale does not clear denominators");
      out.at(i, j) = s.get_num();
    }
  return out;
}

MatZ MatQ::to_int() const { return scaled_integral(Int(1)); }

Rat MatQ::det() const {
  if (n_ == 0) return Rat(1);
  Int d = common_denominator();
  Int idet = scaled_integral(d).det();
  Int dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n_));
  Rat r(idet, dn);
  r.canonicalize();
  return r;
}

MatQ MatQ::inverse() const {
  // Gauss-Jordan over Q; exactness comes from mpq arithmetic.
  MatQ a(*this);
  MatQ inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int p = -1;
    for (int i = col; i < n_; ++i)
      if (a.at(i, col) != 0) { p = i; break; }
    if (p < 0) throw SingularError("inverse of " + to_string());
    if (p != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(p, j), a.at(col, j));
        std::swap(inv.at(p, j), inv.at(col, j));
      }
    Rat piv = a.at(col, col);
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) /= piv;
      inv.at(col, j) /= piv;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n_; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

MatQ MatQ::pow(const Int& k) const {
  MatQ base = k < 0 ? inverse() : *this;
  Int e = abs_int(k);
  MatQ acc = identity(n_);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool MatQ::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool MatQ::is_integral() const {
  for (const Rat& q : e_)
    if (q.get_den() != 1) return false;
  return true;
}

bool MatQ::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::string MatQ::to_key() const {
  std::string k;
  k.reserve(e_.size() * 4);
  for (const Rat& q : e_) {
    k += q.get_str();
    k += ';';
  }
  return k;
}

std::string MatQ::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

SymQ::SymQ(MatQ m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw Error("SymQ: matrix is not symmetric");
}

bool is_positive_definite(const SymQ& s) {
  int n = s.dim();
  MatQ a = s.mat();
  for (int k = 0; k < n; ++k) {
    const Rat& piv = a.at(k, k);
    if (piv <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / piv;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return true;
}

MatQ matq_from_rows(int n, const std::vector<std::vector<long>>& rows) {
  MatQ m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rows[i][j]);
  return m;
}

MatQ matq_scalar(int n, const Rat& c) {
  MatQ m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

VecQ vec_add(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw DimError("vector sum");
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecQ vec_neg(const VecQ& a) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool vec_is_zero(const VecQ& a) {
  for (const Rat& q : a)
    if (q != 0) return false;
  return true;
}

std::string vec_to_string(const VecQ& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  s += ")";
  return s;
}

}  // namespace gbsn
