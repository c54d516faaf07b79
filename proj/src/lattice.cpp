#include "gbsn/lattice.hpp"

#include <sstream>

#include "gbsn/errors.hpp"
#include "gbsn/hnf.hpp"

namespace gbsn {

Lattice Lattice::standard(int n) {
  Lattice l;
  l.n_ = n;
  l.basis_ = MatZ::identity(n);
  l.denom_ = 1;
  return l;
}

Lattice Lattice::from_integer_columns(int n, MatZ cols, Int denom) {
  MatZ basis = hnf_basis(cols);
  // strip the common factor so the denominator is minimal
  Int g = denom;
  for (int i = 0; i < n && g != 1; ++i)
    for (int j = i; j < n && g != 1; ++j) g = gcd(g, basis.at(i, j));
  if (g > 1) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mpz_divexact(basis.at(i, j).get_mpz_t(), basis.at(i, j).get_mpz_t(),
                     g.get_mpz_t());
    mpz_divexact(denom.get_mpz_t(), denom.get_mpz_t(), g.get_mpz_t());
  }
  Lattice l;
  l.n_ = n;
  l.basis_ = std::move(basis);
  l.denom_ = std::move(denom);
  return l;
}

Lattice Lattice::from_columns(int n, const std::vector<VecQ>& cols) {
  Int d(1);
  for (const VecQ& c : cols) {
    if (int(c.size()) != n) throw DimError("lattice generator of wrong length");
    for (const Rat& q : c) d = lcm(d, q.get_den());
  }
  MatZ m(n, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < n; ++i) {
      Rat s = cols[j][i] * Rat(d);
      m.at(i, j) = s.get_num();
    }
  return from_integer_columns(n, std::move(m), std::move(d));
}

Lattice Lattice::from_basis(const MatQ& basis) {
  std::vector<VecQ> cols;
  for (int j = 0; j < basis.dim(); ++j) {
    VecQ c(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) c[i] = basis.at(i, j);
    cols.push_back(std::move(c));
  }
  return from_columns(basis.dim(), cols);
}

MatQ Lattice::basis_q() const {
  MatQ b = MatQ::from_int(basis_);
  return b * Rat(Int(1), denom_);
}

bool Lattice::contains(const VecQ& v) const {
  if (int(v.size()) != n_) throw DimError("lattice membership");
  // back-substitution against the upper-triangular basis: solve B x = d*v
  VecQ rhs(n_);
  for (int i = 0; i < n_; ++i) rhs[i] = v[i] * Rat(denom_);
  for (int i = n_ - 1; i >= 0; --i) {
    Rat x = rhs[i] / Rat(basis_.at(i, i));
    if (x.get_den() != 1) return false;
    for (int r = 0; r < i; ++r) rhs[r] -= Rat(basis_.at(r, i)) * x;
  }
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.n_ != n_) throw DimError("lattice containment");
  for (int j = 0; j < n_; ++j) {
    VecQ col(n_);
    for (int i = 0; i < n_; ++i) col[i] = Rat(other.basis_.at(i, j), other.denom_);
    if (!contains(col)) return false;
  }
  return true;
}

std::string Lattice::to_string() const {
  std::ostringstream os;
  os << "(1/" << denom_.get_str() << ") * " << basis_.to_string();
  return os.str();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw DimError("lattice_sum");
  const int n = a.dim();
  std::vector<VecQ> cols;
  cols.reserve(2 * n);
  for (const Lattice* l : {&a, &b})
    for (int j = 0; j < n; ++j) {
      VecQ c(n);
      for (int i = 0; i < n; ++i) c[i] = Rat(l->basis().at(i, j), l->denominator());
      cols.push_back(std::move(c));
    }
  return Lattice::from_columns(n, cols);
}

Lattice lattice_dual(const Lattice& l) {
  // basis of the dual is the inverse transpose of the basis
  MatQ b = l.basis_q();
  return Lattice::from_basis(b.inverse().transpose());
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw DimError("lattice_intersect");
  return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
}

Lattice lattice_image(const MatQ& a, const Lattice& l) {
  if (a.dim() != l.dim()) throw DimError("lattice_image");
  if (a.det() == 0) throw SingularError("lattice_image by " + a.to_string());
  return Lattice::from_basis(a * l.basis_q());
}

Int lattice_index(const Lattice& big, const Lattice& small) {
  if (big.dim() != small.dim()) throw DimError("lattice_index");
  if (!big.contains(small))
    throw ContainmentError(small.to_string() + " is not contained in " +
                           big.to_string());
  // coordinates of small's basis in big's basis
  MatQ coords = big.basis_q().inverse() * small.basis_q();
  Rat d = coords.det();
  return abs_int(d.get_num());  // containment makes coords integral
}

}  // namespace gbsn
