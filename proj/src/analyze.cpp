#include "gbsn/analyze.hpp"

#include <chrono>
#include <cmath>

#include "gbsn/errors.hpp"

namespace gbsn {

const char* version() { return "0.1.0"; }

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool is_ascending_hnn(const GLMGraph& reduced) {
  if (reduced.num_vertices() != 1 || reduced.num_edge_pairs() != 1) return false;
  OrientedEdge e{0, false};
  return classify_edge(reduced, e).ascending ||
         classify_edge(reduced, e.reverse()).ascending;
}

}  // namespace

AnalysisReport analyze(const GLMGraph& g, const Config& cfg) {
  AnalysisReport rep;
  rep.rank = g.rank();
  rep.input_vertices = g.num_vertices();
  rep.input_edge_pairs = g.num_edge_pairs();

  auto t0 = std::chrono::steady_clock::now();
  rep.reduced = reduce(g);
  rep.timings_ms["reduce"] = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  rep.tree = spanning_tree(rep.reduced);
  rep.modular = modular_generators(rep.reduced, rep.tree);
  std::vector<MatQ> gens;
  for (int p : rep.modular.nontree_pairs) {
    gens.push_back(rep.modular.edge_image_fwd[p]);
    rep.image_edge_ids.push_back(rep.reduced.edge(p).id);
  }
  rep.image = MatGroupGens(rep.rank, std::move(gens));
  rep.timings_ms["modular"] = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  rep.finiteness = decide_finite(rep.image, cfg.decisions);
  rep.biautomatic = rep.finiteness.finite ? VerdictTag::Yes : VerdictTag::No;
  rep.timings_ms["finiteness"] = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  rep.cat0 = decide_conjugate_into_On(rep.image, cfg.decisions, &rep.finiteness);
  rep.timings_ms["cat0"] = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  rep.ascending_hnn = is_ascending_hnn(rep.reduced);
  rep.glnz = decide_conjugate_into_GLnZ(rep.image, cfg.decisions);
  if (rep.ascending_hnn || rep.glnz.tag == VerdictTag::Yes)
    rep.residually_finite = VerdictTag::Yes;
  else
    rep.residually_finite = rep.glnz.tag;  // exact No witness, or Undecided
  rep.timings_ms["residual_finiteness"] = ms_since(t0);

  // consistency invariants; failures here are bugs, never valid output
  if ((rep.biautomatic == VerdictTag::Yes) != rep.finiteness.finite)
    throw InternalInconsistency("biautomatic verdict disagrees with finiteness");
  if (rep.finiteness.finite && rep.cat0.tag != VerdictTag::Yes)
    throw InternalInconsistency("finite modular image without a CAT(0) certificate");
  if (rep.biautomatic == VerdictTag::Yes && rep.cat0.tag != VerdictTag::Yes)
    throw InternalInconsistency("biautomatic group not recognized as CAT(0)");
  if (rep.cat0.tag == VerdictTag::Yes &&
      !verify_certificate(rep.image, *rep.cat0.certificate))
    throw InternalInconsistency("CAT(0) certificate fails exact verification");
  if (rep.glnz.tag == VerdictTag::Yes &&
      !verify_certificate(rep.image, *rep.glnz.certificate))
    throw InternalInconsistency("invariant-lattice certificate fails exact verification");

  return rep;
}

ActionData cat0_action_data(const AnalysisReport& report) {
  if (report.cat0.tag != VerdictTag::Yes)
    throw NotApplicable("CAT(0) action data requested without a Yes verdict");

  ActionData out;
  out.form = report.cat0.certificate->form;
  const int n = out.form.dim();

  // Cholesky S = R^T R in doubles; R conjugates the image into O(n):
  // (R M R^-1)^T (R M R^-1) = R^-T (M^T S M) R^-1 = R^-T S R^-1 = I.
  std::vector<std::vector<double>> s(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = mpq_get_d(out.form.at(i, j).get_mpq_t());
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double sum = s[i][j];
      for (int k = 0; k < i; ++k) sum -= r[k][i] * r[k][j];
      if (i == j)
        r[i][i] = std::sqrt(sum);
      else
        r[i][j] = sum / r[i][i];
    }
  }
  // residual of the orthogonalization, computed in doubles
  auto matd = [n](const MatQ& m) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = mpq_get_d(m.at(i, j).get_mpq_t());
    return d;
  };
  auto mul = [n](const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::vector<std::vector<double>> rinv(n, std::vector<double>(n, 0.0));
  for (int j = n - 1; j >= 0; --j) {  // invert the upper-triangular factor
    rinv[j][j] = 1.0 / r[j][j];
    for (int i = j - 1; i >= 0; --i) {
      double sum = 0.0;
      for (int k = i + 1; k <= j; ++k) sum += r[i][k] * rinv[k][j];
      rinv[i][j] = -sum / r[i][i];
    }
  }
  for (const MatQ& m : report.image.gens) {
    auto conj = mul(r, mul(matd(m), rinv));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double entry = 0.0;
        for (int k = 0; k < n; ++k) entry += conj[k][i] * conj[k][j];
        out.orthogonality_residual =
            std::max(out.orthogonality_residual, std::abs(entry - (i == j ? 1.0 : 0.0)));
      }
  }
  out.conjugator = std::move(r);

  out.delta = delta_affine(report.reduced, report.tree);
  for (int v = 0; v < report.reduced.num_vertices(); ++v) {
    Int deg(0);
    for (OrientedEdge e : report.reduced.oriented_edges())
      if (report.reduced.initial(e) == v) deg += abs_int(report.reduced.inclusion(e).det());
    out.tree_degrees.emplace_back(report.reduced.vertex_name(v), deg);
  }
  return out;
}

}  // namespace gbsn
