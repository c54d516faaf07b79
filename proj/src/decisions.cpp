#include "gbsn/decisions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gbsn/errors.hpp"

namespace gbsn {

MatGroupGens::MatGroupGens(int dim, std::vector<MatQ> generators)
    : n(dim), gens(std::move(generators)) {
  for (const MatQ& m : gens) {
    if (m.dim() != n) throw DimError("generator of dimension " + std::to_string(m.dim()) +
                                     " in a rank-" + std::to_string(n) + " group");
    if (m.det() == 0) throw SingularError("generator " + m.to_string());
  }
}

MatQ GenWord::evaluate(const MatGroupGens& g) const {
  MatQ acc = MatQ::identity(g.n);
  for (auto [i, s] : letters) {
    if (i < 0 || i >= int(g.gens.size()))
      throw UnknownGenerator("g" + std::to_string(i));
    acc = acc * (s >= 0 ? g.gens[i] : g.gens[i].inverse());
  }
  return acc;
}

GenWord GenWord::inverse() const {
  GenWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.emplace_back(it->first, -it->second);
  return out;
}

std::string GenWord::to_string() const {
  if (letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += " ";
    s += "g" + std::to_string(letters[i].first);
    if (letters[i].second < 0) s += "^-1";
  }
  return s;
}

std::string to_string(InfiniteReason r) {
  switch (r) {
    case InfiniteReason::NonUnitDeterminant: return "non-unit determinant";
    case InfiniteReason::InfiniteOrderElement: return "infinite-order element";
    case InfiniteReason::ClosureCapExceeded: return "closure cap exceeded";
  }
  return "?";
}

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::Yes: return "yes";
    case VerdictTag::No: return "no";
    case VerdictTag::Undecided: return "undecided";
  }
  return "?";
}

Int default_closure_cap(int n) {
  Int three_n;
  mpz_ui_pow_ui(three_n.get_mpz_t(), 3, static_cast<unsigned long>(n));
  Int cap(1), p(1);
  for (int i = 0; i < n; ++i) {
    cap *= three_n - p;
    p *= 3;
  }
  return cap;
}

std::vector<GenWord> short_words(int num_gens, int depth) {
  std::vector<GenWord> out, level;
  for (int i = 0; i < num_gens; ++i)
    for (int s : {1, -1}) level.push_back(GenWord{{{i, s}}});
  out = level;
  for (int d = 2; d <= depth; ++d) {
    std::vector<GenWord> next;
    for (const GenWord& w : level)
      for (int i = 0; i < num_gens; ++i)
        for (int s : {1, -1}) {
          auto [li, ls] = w.letters.back();
          if (li == i && ls == -s) continue;  // immediate cancellation
          GenWord nw = w;
          nw.letters.emplace_back(i, s);
          next.push_back(std::move(nw));
        }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

namespace {

// Binomial coefficient bound C(n, k); a torsion matrix has all eigenvalues
// on the unit circle, so |c_k| of its characteristic polynomial is at most
// C(n, k).  Violations certify infinite order without any power test.
Int binomial(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

bool torsion_char_poly_plausible(const Poly& p, int n) {
  if (!p.is_integral()) return false;
  for (int k = 0; k < n; ++k)
    if (abs_int(p.coeff(k).get_num()) > binomial(n, n - k)) return false;
  return true;
}

}  // namespace

FinitenessResult decide_finite(const MatGroupGens& g, const DecisionConfig& cfg) {
  const int n = g.n;
  const Int cap = cfg.closure_cap > 0 ? cfg.closure_cap : default_closure_cap(n);

  FinitenessResult res;

  // determinant pre-check on the generators
  for (size_t i = 0; i < g.gens.size(); ++i) {
    Rat d = abs_rat(g.gens[i].det());
    if (d != 1) {
      res.finite = false;
      res.witness = GenWord{{{int(i), 1}}};
      res.reason = InfiniteReason::NonUnitDeterminant;
      return res;
    }
  }

  // order pre-check on generators and short products
  for (const GenWord& w : short_words(int(g.gens.size()), 2)) {
    MatQ m = w.evaluate(g);
    if (!order_of(m).finite) {
      res.finite = false;
      res.witness = w;
      res.reason = InfiniteReason::InfiniteOrderElement;
      return res;
    }
  }

  // breadth-first closure; every new element is order-tested, which keeps
  // the search from drifting into an infinite group
  struct Node {
    int parent;
    int gen;
    int sign;
  };
  std::vector<MatQ> elements{MatQ::identity(n)};
  std::vector<Node> nodes{{-1, -1, 0}};
  std::unordered_map<std::string, int> seen{{elements[0].to_key(), 0}};
  auto word_of = [&](int idx) {
    GenWord w;
    while (idx > 0) {
      w.letters.emplace_back(nodes[idx].gen, nodes[idx].sign);
      idx = nodes[idx].parent;
    }
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  };

  std::vector<MatQ> inverses;
  for (const MatQ& m : g.gens) inverses.push_back(m.inverse());

  for (size_t cur = 0; cur < elements.size(); ++cur) {
    for (size_t i = 0; i < g.gens.size(); ++i) {
      for (int s : {1, -1}) {
        MatQ next = elements[cur] * (s > 0 ? g.gens[i] : inverses[i]);
        std::string key = next.to_key();
        if (seen.count(key)) continue;
        int idx = int(elements.size());
        elements.push_back(std::move(next));
        nodes.push_back({int(cur), int(i), s});
        seen.emplace(std::move(key), idx);
        const MatQ& m = elements[idx];
        if (!torsion_char_poly_plausible(char_poly(m), n) || !order_of(m).finite) {
          res.finite = false;
          res.witness = word_of(idx);
          res.reason = InfiniteReason::InfiniteOrderElement;
          return res;
        }
        if (Int(long(elements.size())) > cap) {
          res.finite = false;
          res.witness = word_of(idx);
          res.reason = InfiniteReason::ClosureCapExceeded;
          return res;
        }
      }
    }
  }

  res.finite = true;
  res.order = long(elements.size());
  res.elements = std::move(elements);
  return res;
}

std::vector<SymQ> invariant_form_space(const MatGroupGens& g) {
  std::vector<SymConstraint> constraints;
  for (const MatQ& m : g.gens) {
    auto cs = invariance_constraints(m);
    constraints.insert(constraints.end(), cs.begin(), cs.end());
  }
  return solve_linear_subspace(g.n, constraints);
}

namespace {

// Exact spectral obstruction for conjugacy into O(n): some eigenvalue of w
// (or of its inverse) has modulus > 1.  Returns the side whose polynomial
// provably has a root of modulus > 1.
std::optional<std::pair<GenWord, Poly>> circle_witness(const GenWord& w, const MatQ& m) {
  Poly p = char_poly(m);
  if (all_roots_on_unit_circle(p)) return std::nullopt;
  // not all roots on the circle: if |det| >= 1 some root lies outside;
  // otherwise the inverse has |det| > 1 and therefore such a root
  if (abs_rat(m.det()) >= 1) return std::make_pair(w, p);
  return std::make_pair(w.inverse(), char_poly(m.inverse()));
}

// An element conjugate into O(n) is diagonalizable, i.e. the squarefree
// part of its characteristic polynomial annihilates it.
bool is_semisimple(const MatQ& m) {
  Poly p = char_poly(m);
  Poly radical = p.divexact(poly_gcd(p, p.derivative()));
  const int n = m.dim();
  MatQ acc(n);  // radical(m), by Horner
  for (int i = radical.degree(); i >= 0; --i) {
    acc = acc * m + matq_scalar(n, radical.coeff(i));
  }
  return acc == MatQ(n);
}

std::vector<std::vector<double>> to_doubles(const MatQ& m) {
  std::vector<std::vector<double>> out(m.dim(), std::vector<double>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out[i][j] = mpq_get_d(m.at(i, j).get_mpq_t());
  return out;
}

}  // namespace

OnVerdict decide_conjugate_into_On(const MatGroupGens& g, const DecisionConfig& cfg,
                                   const FinitenessResult* finiteness_hint) {
  const int n = g.n;
  OnVerdict v;

  // finite groups: averaging the standard form over the closure gives an
  // exact invariant positive definite form
  FinitenessResult local;
  const FinitenessResult* fin = finiteness_hint;
  if (!fin || (fin->finite && fin->elements.empty())) {
    local = decide_finite(g, cfg);
    fin = &local;
  }
  if (fin->finite) {
    MatQ s(n);
    for (const MatQ& a : fin->elements) s = s + a.transpose() * a;
    v.tag = VerdictTag::Yes;
    v.certificate = FormCertificate{SymQ(std::move(s))};
    v.diagnostics["method"] = "finite-group averaging";
    return v;
  }

  std::vector<SymQ> space = invariant_form_space(g);
  v.diagnostics["form_space_dim"] = std::to_string(space.size());
  if (space.empty()) {
    v.tag = VerdictTag::No;
    v.no_reason = "empty_invariant_form_space";
    return v;
  }

  // exact element obstructions on short words
  for (const GenWord& w : short_words(int(g.gens.size()), cfg.witness_depth)) {
    MatQ m = w.evaluate(g);
    if (auto cw = circle_witness(w, m)) {
      v.tag = VerdictTag::No;
      v.no_reason = "eigenvalue_off_unit_circle";
      v.witness_word = cw->first;
      v.witness_poly = cw->second;
      return v;
    }
    if (!is_semisimple(m)) {
      v.tag = VerdictTag::No;
      v.no_reason = "non_semisimple_element";
      v.witness_word = w;
      v.witness_poly = char_poly(m);
      return v;
    }
  }

  if (space.size() == 1) {
    // the real invariant forms are the scalar multiples of the basis form
    for (const Rat& sign : {Rat(1), Rat(-1)}) {
      SymQ cand(space[0].mat() * sign);
      if (is_positive_definite(cand)) {
        v.tag = VerdictTag::Yes;
        v.certificate = FormCertificate{cand};
        v.diagnostics["method"] = "one-dimensional form space";
        return v;
      }
    }
    v.tag = VerdictTag::No;
    v.no_reason = "form_space_without_definite_element";
    return v;
  }

  // dim >= 2: numeric averaging toward an invariant form, then exact
  // verification of a rationalization
  std::vector<std::vector<std::vector<double>>> ops;
  for (const MatQ& m : g.gens) {
    ops.push_back(to_doubles(m));
    ops.push_back(to_doubles(m.inverse()));
  }
  auto mul = [n](const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto transpose_d = [n](const std::vector<std::vector<double>>& a) {
    std::vector<std::vector<double>> c(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[i][j] = a[j][i];
    return c;
  };

  std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) s[i][i] = 1.0;
  int iters = 0;
  double delta = 0.0;
  for (; iters < cfg.averaging_max_iters; ++iters) {
    std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
    for (const auto& op : ops) {
      auto contrib = mul(transpose_d(op), mul(s, op));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] += contrib[i][j] / double(ops.size());
    }
    delta = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) delta = std::max(delta, std::abs(t[i][j] - s[i][j]));
    s = std::move(t);
    if (delta < cfg.averaging_tol) break;
  }
  v.diagnostics["averaging_iterations"] = std::to_string(iters);
  {
    std::ostringstream os;
    os << delta;
    v.diagnostics["averaging_residual"] = os.str();
  }

  // project onto the invariant subspace (Frobenius inner product) to strip
  // the component the iteration cannot remove
  std::vector<std::vector<std::vector<double>>> basis_d;
  for (const SymQ& b : space) basis_d.push_back(to_doubles(b.mat()));
  auto dot = [n](const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d += a[i][j] * b[i][j];
    return d;
  };
  for (size_t i = 0; i < basis_d.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      double c = dot(basis_d[i], basis_d[j]);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) basis_d[i][a][b] -= c * basis_d[j][a][b];
    }
    double nrm = std::sqrt(dot(basis_d[i], basis_d[i]));
    if (nrm < 1e-14) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) basis_d[i][a][b] /= nrm;
  }
  std::vector<std::vector<double>> proj(n, std::vector<double>(n, 0.0));
  for (const auto& b : basis_d) {
    double c = dot(s, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) proj[i][j] += c * b[i][j];
  }
  double maxabs = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, std::abs(proj[i][j]));
  if (maxabs > 0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) proj[i][j] /= maxabs;

  // rationalize with growing denominator caps and verify exactly
  for (Int den_cap(10); den_cap <= cfg.rational_denom_cap; den_cap *= 10) {
    MatQ cand(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) {
        auto r = rationalize((proj[i][j] + proj[j][i]) / 2, den_cap);
        if (!r) { ok = false; break; }
        cand.at(i, j) = *r;
        cand.at(j, i) = *r;
      }
    if (!ok) continue;
    SymQ sq(cand);
    FormCertificate cert{sq};
    if (verify_certificate(g, cert) ) {
      v.tag = VerdictTag::Yes;
      v.certificate = cert;
      v.diagnostics["method"] = "numeric averaging, denominator cap " + den_cap.get_str();
      return v;
    }
  }

  v.tag = VerdictTag::Undecided;
  v.diagnostics["note"] = "no exact obstruction found and no rational invariant "
                          "definite form recovered within the configured caps";
  return v;
}

LatticeVerdict decide_conjugate_into_GLnZ(const MatGroupGens& g, const DecisionConfig& cfg) {
  LatticeVerdict v;

  for (size_t i = 0; i < g.gens.size(); ++i) {
    Rat d = abs_rat(g.gens[i].det());
    if (d != 1) {
      v.tag = VerdictTag::No;
      v.no_reason = "non_unit_determinant";
      v.witness_word = GenWord{{{int(i), 1}}};
      v.witness_poly = char_poly(g.gens[i]);
      return v;
    }
  }
  for (const GenWord& w : short_words(int(g.gens.size()), cfg.witness_depth)) {
    MatQ m = w.evaluate(g);
    Poly p = char_poly(m);
    if (!p.is_integral()) {
      v.tag = VerdictTag::No;
      v.no_reason = "non_integral_char_poly";
      v.witness_word = w;
      v.witness_poly = p;
      return v;
    }
  }

  Lattice l = Lattice::standard(g.n);
  std::deque<Int> window;
  for (int iter = 1; iter <= cfg.lattice_max_iters; ++iter) {
    Lattice next = l;
    for (const MatQ& m : g.gens) {
      next = lattice_sum(next, lattice_image(m, l));
      next = lattice_sum(next, lattice_image(m.inverse(), l));
    }
    v.iterations = iter;
    if (next == l) {
      v.tag = VerdictTag::Yes;
      v.certificate = LatticeCertificate{l};
      return v;
    }
    l = std::move(next);
    window.push_back(l.denominator());
    if (int(window.size()) > cfg.lattice_denom_window) window.pop_front();
  }

  v.tag = VerdictTag::Undecided;
  bool strictly_increasing = window.size() >= 2;
  for (size_t i = 1; i < window.size(); ++i)
    if (window[i] <= window[i - 1]) strictly_increasing = false;
  std::string denoms;
  for (size_t i = 0; i < window.size(); ++i)
    denoms += (i ? " " : "") + window[i].get_str();
  v.diagnostics["iterations"] = std::to_string(v.iterations);
  v.diagnostics["denominator_window"] = denoms;
  v.diagnostics["denominators_strictly_increasing"] = strictly_increasing ? "true" : "false";
  return v;
}

Lattice finite_group_invariant_lattice(const std::vector<MatQ>& closure) {
  if (closure.empty()) throw NotAGroup("empty element list");
  const int n = closure.front().dim();
  std::unordered_set<std::string> keys;
  for (const MatQ& m : closure) {
    if (m.dim() != n) throw DimError("mixed dimensions in closure");
    keys.insert(m.to_key());
  }
  bool has_identity = keys.count(MatQ::identity(n).to_key()) > 0;
  if (!has_identity) throw NotAGroup("element list does not contain the identity");
  for (const MatQ& a : closure)
    for (const MatQ& b : closure)
      if (!keys.count((a * b).to_key()))
        throw NotAGroup("element list is not closed under multiplication");

  Lattice l = Lattice::standard(n);
  for (const MatQ& a : closure) l = lattice_intersect(l, lattice_image(a, Lattice::standard(n)));
  return l;
}

bool verify_certificate(const MatGroupGens& g, const FormCertificate& cert) {
  if (cert.form.dim() != g.n) throw DimError("form certificate of wrong dimension");
  for (const MatQ& m : g.gens)
    if (!(m.transpose() * cert.form.mat() * m == cert.form.mat())) return false;
  return is_positive_definite(cert.form);
}

bool verify_certificate(const MatGroupGens& g, const LatticeCertificate& cert) {
  if (cert.lattice.dim() != g.n) throw DimError("lattice certificate of wrong dimension");
  for (const MatQ& m : g.gens)
    if (!(lattice_image(m, cert.lattice) == cert.lattice)) return false;
  return true;
}

}  // namespace gbsn
