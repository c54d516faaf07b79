// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//   acceptance [tool-path] [data-dir]
//
// defaults to the build-time tool path and repository data directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gbsn/analyze.hpp"
#include "gbsn/errors.hpp"
#include "gbsn/graph_io.hpp"
#include "gbsn/random_graph.hpp"
#include "gbsn/report_io.hpp"
#include "gbsn/tree_ball.hpp"

using namespace gbsn;

namespace {

std::string g_tool = GBSN_TOOL;
std::string g_data = GBSN_DATA_DIR;

std::string data_file(const std::string& name) { return g_data + "/" + name; }

int run_cli(const std::string& args) {
  std::string cmd = g_tool + " " + args + " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string write_temp(const std::string& text, const std::string& tag) {
  std::string path = "/tmp/gbsn_acceptance_" + tag + ".json";
  std::ofstream out(path);
  out << text;
  return path;
}

GLMGraph bs(long m, long n) {
  EdgePair e;
  e.id = "e";
  e.from = 0;
  e.to = 0;
  e.matrix_from = MatZ(1, 1);
  e.matrix_to = MatZ(1, 1);
  e.matrix_from.at(0, 0) = m;
  e.matrix_to.at(0, 0) = n;
  return GLMGraph(1, {"v"}, {e});
}

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> files = {
      "bs11.json",        "bs12.json",   "bs23.json",
      "rank2_rotation.json", "order4_loop.json", "sol_torus.json",
      "shear_loop.json",  "two_vertex_chain.json", "multi_edge.json"};
  return files;
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

// --- criterion 1 -----------------------------------------------------------

void criterion_rotation_loop() {
  AnalysisReport rep = analyze(load_graph_file(data_file("rank2_rotation.json")));
  MatQ expected(2);
  expected.at(0, 0) = make_rat(4, 5);
  expected.at(0, 1) = make_rat(3, 5);
  expected.at(1, 0) = make_rat(-3, 5);
  expected.at(1, 1) = make_rat(4, 5);
  require(rep.image.gens.size() == 1, "expected a single modular generator");
  require(rep.image.gens[0] == expected, "modular generator is not (1/5)[[4,3],[-3,4]]");
  require(rep.biautomatic == VerdictTag::No, "biautomatic must be No");
  require(rep.cat0.tag == VerdictTag::Yes, "CAT(0) must be Yes");
  require(rep.cat0.certificate->form.mat() == MatQ::identity(2), "certificate must be S = I");
  require(verify_certificate(rep.image, *rep.cat0.certificate), "S = I must verify");
  require(rep.residually_finite == VerdictTag::No, "residual finiteness must be No");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_rank1_oracle() {
  for (long m = -6; m <= 6; ++m) {
    if (m == 0) continue;
    for (long n = -6; n <= 6; ++n) {
      if (n == 0) continue;
      AnalysisReport rep = analyze(bs(m, n));
      bool eq = std::abs(m) == std::abs(n);
      bool rf = std::abs(m) == 1 || std::abs(n) == 1 || eq;
      std::string tag = "BS(" + std::to_string(m) + "," + std::to_string(n) + ")";
      require((rep.biautomatic == VerdictTag::Yes) == eq, tag + ": biautomatic oracle");
      require((rep.cat0.tag == VerdictTag::Yes) == eq, tag + ": CAT(0) oracle");
      require(rep.cat0.tag != VerdictTag::Undecided, tag + ": CAT(0) undecided");
      require((rep.residually_finite == VerdictTag::Yes) == rf, tag + ": RF oracle");
      require(rep.residually_finite != VerdictTag::Undecided, tag + ": RF undecided");
    }
  }
}

// --- criterion 3 -----------------------------------------------------------

void criterion_presentation_selfcheck() {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    GLMGraph g = random_graph(rng);
    SpanningTree t = spanning_tree(g);
    PresentationCheck chk =
        verify_presentation(delta_affine(g, t), standard_presentation(g, t));
    require(chk.ok, "relator violated on a valid graph: " + chk.failed_relator);
  }

  int rejected = 0;
  while (rejected < 50) {
    GLMGraph g = random_graph(rng);
    SpanningTree t = spanning_tree(g);
    AffineRep rep = delta_affine(g, t);
    StandardPresentation pres = standard_presentation(g, t);
    int p = int(rand_range(rng, 0, g.num_edge_pairs() - 1));
    int i = int(rand_range(rng, 0, g.rank() - 1));
    int j = int(rand_range(rng, 0, g.rank() - 1));
    AffineRep broken = rep;
    broken.stable[p].at(i, j) += make_rat(1, 2);
    if (broken.stable[p].det() == 0) broken.stable[p].at(i, j) += make_rat(1, 3);
    if (broken.stable[p].det() == 0) continue;
    PresentationCheck chk = verify_presentation(broken, pres);
    require(!chk.ok, "perturbed edge image passed the relator check");
    ++rejected;
  }
}

// --- criterion 4 -----------------------------------------------------------

long integer_order_oracle(const MatZ& d) {
  MatZ acc = d;
  for (long k = 1; k <= 60; ++k) {
    if (acc == MatZ::identity(d.rows())) return k;
    acc = acc * d;
  }
  return -1;
}

void criterion_finiteness_soundness() {
  std::mt19937_64 rng(103);
  std::vector<MatZ> catalog;
  auto add = [&](std::vector<std::vector<long>> rows) {
    MatZ m(int(rows.size()), int(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    catalog.push_back(m);
  };
  add({{1}});
  add({{-1}});
  add({{0, -1}, {1, 0}});
  add({{0, -1}, {1, -1}});
  add({{0, -1}, {1, 1}});
  add({{0, 1}, {1, 0}});
  add({{1, 0}, {0, -1}});
  add({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  add({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  add({{-1, 0, 0}, {0, 0, -1}, {0, 1, 0}});

  for (int trial = 0; trial < 100; ++trial) {
    const MatZ& d = catalog[trial % catalog.size()];
    int n = d.rows();
    long expected = integer_order_oracle(d);
    require(expected > 0, "oracle failed to find the order of a catalog matrix");

    MatQ q = MatQ::from_int(random_unimodular(rng, n, 8));
    MatGroupGens g(n, {q * MatQ::from_int(d) * q.inverse()});
    FinitenessResult fin = decide_finite(g);
    require(fin.finite, "conjugated finite-order matrix reported infinite");
    require(fin.order == expected, "order mismatch: got " + fin.order.get_str() +
                                       ", oracle says " + std::to_string(expected));

    MatZ anosov(2, 2);
    anosov.at(0, 0) = 2; anosov.at(0, 1) = 1;
    anosov.at(1, 0) = 1; anosov.at(1, 1) = 1;
    MatQ q2 = MatQ::from_int(random_unimodular(rng, 2, 8));
    FinitenessResult inf = decide_finite(MatGroupGens(2, {q2 * MatQ::from_int(anosov) * q2.inverse()}));
    require(!inf.finite, "conjugated Anosov matrix reported finite");
  }
}

// --- criterion 5 -----------------------------------------------------------

void criterion_certificate_roundtrip() {
  std::mt19937_64 rng(107);
  int conjugations_checked = 0;
  for (const std::string& name : corpus()) {
    AnalysisReport rep = analyze(load_graph_file(data_file(name)));

    if (rep.cat0.tag == VerdictTag::Yes) {
      std::string path = write_temp(certificate_to_json(*rep.cat0.certificate), "form");
      require(run_cli("certify " + data_file(name) + " --certificate " + path) == 0,
              name + ": form certificate rejected by the certify subcommand");
      std::remove(path.c_str());
    }
    if (rep.glnz.tag == VerdictTag::Yes) {
      std::string path = write_temp(certificate_to_json(*rep.glnz.certificate), "lattice");
      require(run_cli("certify " + data_file(name) + " --certificate " + path) == 0,
              name + ": lattice certificate rejected by the certify subcommand");
      std::remove(path.c_str());
    }
    if (rep.finiteness.finite) {
      std::string path = write_temp(
          "{\"kind\":\"closure\",\"data\":{\"order\":" + rep.finiteness.order.get_str() +
              "}}",
          "closure");
      require(run_cli("certify " + data_file(name) + " --certificate " + path) == 0,
              name + ": closure certificate rejected by the certify subcommand");
      std::remove(path.c_str());
    }

    // transformed certificates under random rational conjugation
    while ((rep.cat0.tag == VerdictTag::Yes || rep.glnz.tag == VerdictTag::Yes) &&
           conjugations_checked < 50) {
      int n = rep.rank;
      MatQ q(n);
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Rat v(rand_range(rng, -3, 3), rand_range(rng, 1, 3));
            v.canonicalize();
            q.at(i, j) = v;
          }
      } while (q.det() == 0);
      std::vector<MatQ> moved_gens;
      for (const MatQ& m : rep.image.gens) moved_gens.push_back(q * m * q.inverse());
      MatGroupGens moved(n, std::move(moved_gens));
      if (rep.cat0.tag == VerdictTag::Yes) {
        MatQ qi = q.inverse();
        SymQ s(qi.transpose() * rep.cat0.certificate->form.mat() * qi);
        require(verify_certificate(moved, FormCertificate{s}),
                name + ": transformed form certificate rejected");
      }
      if (rep.glnz.tag == VerdictTag::Yes) {
        Lattice l = lattice_image(q, rep.glnz.certificate->lattice);
        require(verify_certificate(moved, LatticeCertificate{l}),
                name + ": transformed lattice certificate rejected");
      }
      ++conjugations_checked;
      break;  // next corpus file; loop again over the corpus until 50
    }
  }
  // keep drawing conjugations from the richest case until the quota is met
  AnalysisReport lm = analyze(load_graph_file(data_file("rank2_rotation.json")));
  while (conjugations_checked < 50) {
    MatQ q(2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Rat v(rand_range(rng, -3, 3), rand_range(rng, 1, 3));
          v.canonicalize();
          q.at(i, j) = v;
        }
    } while (q.det() == 0);
    MatGroupGens moved(2, {q * lm.image.gens[0] * q.inverse()});
    MatQ qi = q.inverse();
    SymQ s(qi.transpose() * lm.cat0.certificate->form.mat() * qi);
    require(verify_certificate(moved, FormCertificate{s}),
            "transformed rotation certificate rejected");
    ++conjugations_checked;
  }
}

// --- criterion 6 -----------------------------------------------------------

void criterion_consistency() {
  auto check_report = [](const AnalysisReport& rep, const std::string& tag) {
    require((rep.biautomatic == VerdictTag::Yes) == rep.finiteness.finite,
            tag + ": biautomatic <=> finite violated");
    if (rep.finiteness.finite)
      require(rep.cat0.tag == VerdictTag::Yes, tag + ": finite => CAT(0) violated");
    if (rep.biautomatic == VerdictTag::Yes)
      require(rep.cat0.tag == VerdictTag::Yes, tag + ": biautomatic => CAT(0) violated");
  };

  for (const std::string& name : corpus())
    check_report(analyze(load_graph_file(data_file(name))), name);

  std::mt19937_64 rng(109);
  for (int i = 0; i < 500; ++i) {
    GLMGraph g = random_graph(rng);
    AnalysisReport rep = analyze(g);  // analyze aborts on internal inconsistency
    check_report(rep, "random graph " + std::to_string(i));

    // reduction invariance of the verdict triple
    AnalysisReport rep2 = analyze(reduce(g));
    require(rep.biautomatic == rep2.biautomatic &&
                rep.cat0.tag == rep2.cat0.tag &&
                rep.residually_finite == rep2.residually_finite,
            "verdicts changed under reduction");
  }

  // spanning-tree independence on two-vertex multigraphs: both trees give
  // the same verdict triple
  for (int i = 0; i < 10; ++i) {
    std::vector<EdgePair> edges(2);
    for (int p = 0; p < 2; ++p) {
      edges[p].id = "e" + std::to_string(p);
      edges[p].from = 0;
      edges[p].to = 1;
      edges[p].matrix_from = random_invertible_matz(rng, 2, 3);
      edges[p].matrix_to = random_invertible_matz(rng, 2, 3);
    }
    GLMGraph g(2, {"a", "b"}, edges);

    std::array<VerdictTag, 3> got[2];
    for (int tree_pair = 0; tree_pair < 2; ++tree_pair) {
      SpanningTree t;
      t.root = 0;
      t.tree_pairs = {tree_pair};
      t.edge_to.assign(2, OrientedEdge{});
      t.parent.assign(2, -1);
      t.edge_to[1] = OrientedEdge{tree_pair, false};
      t.parent[1] = 0;
      t.bfs_order = {0, 1};
      ModularRep rep = modular_generators(g, t);
      MatGroupGens gens(2, rep.generators());
      FinitenessResult fin = decide_finite(gens);
      OnVerdict on = decide_conjugate_into_On(gens, {}, &fin);
      LatticeVerdict lat = decide_conjugate_into_GLnZ(gens);
      got[tree_pair] = {fin.finite ? VerdictTag::Yes : VerdictTag::No, on.tag, lat.tag};
    }
    require(got[0] == got[1], "verdicts depend on the spanning tree");
  }
}

// --- criterion 7 -----------------------------------------------------------

void criterion_tree_ball_degrees() {
  auto center_degree = [](const std::string& file) {
    GLMGraph g = load_graph_file(data_file(file));
    return tree_ball(g, spanning_tree(g).root, 1, 1000000).vertices.front().degree;
  };
  require(center_degree("bs23.json") == 5, "BS(2,3) center degree must be 5");
  require(center_degree("rank2_rotation.json") == 10, "rotation loop center degree must be 10");
  require(center_degree("bs11.json") == 2, "BS(1,1) center degree must be 2");

  std::mt19937_64 rng(113);
  for (int i = 0; i < 25; ++i) {
    GLMGraph g = random_graph(rng, {1, 2, 2, 1, 2});
    SpanningTree t = spanning_tree(g);
    TreeBall ball = tree_ball(g, t.root, 1, 1000000);
    Int expect(0);
    for (OrientedEdge e : g.oriented_edges())
      if (g.initial(e) == t.root) expect += abs_int(g.inclusion(e).det());
    require(ball.vertices.front().degree == expect,
            "center degree disagrees with the |det| sum");
    require(Int(long(ball.vertices.size())) == expect + 1,
            "radius-1 ball size disagrees with the center degree");
  }
}

// --- criterion 8 -----------------------------------------------------------

void criterion_lattice_fixpoint() {
  MatQ shear(2);
  shear.at(0, 0) = 1;
  shear.at(0, 1) = make_rat(1, 2);
  shear.at(1, 0) = 0;
  shear.at(1, 1) = 1;
  MatGroupGens g(2, {shear});
  LatticeVerdict v = decide_conjugate_into_GLnZ(g);
  require(v.tag == VerdictTag::Yes, "shear group must accept an invariant lattice");
  require(v.iterations <= 3, "fixpoint took more than 3 iterations");
  require(verify_certificate(g, *v.certificate), "invariant lattice fails verification");
  MatQ basis = v.certificate->lattice.basis_q();
  for (const MatQ& m : g.gens) {
    MatQ conj = basis.inverse() * m * basis;
    require(conj.is_integral(), "conjugated generator is not integral");
    require(abs_rat(conj.det()) == 1, "conjugated generator is not unimodular");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_tool = argv[1];
  if (argc > 2) g_data = argv[2];

  struct Criterion {
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1. rank-2 rotation loop: exact generator, No/Yes(S=I)/No", criterion_rotation_loop},
      {"2. rank-1 BS(m,n) closed-form oracle, |m|,|n| <= 6", criterion_rank1_oracle},
      {"3. relator self-check: 200 random graphs, 50 perturbations", criterion_presentation_selfcheck},
      {"4. finiteness on conjugated finite-order matrices, 100 sets", criterion_finiteness_soundness},
      {"5. certificate round-trip via certify, 50 conjugations", criterion_certificate_roundtrip},
      {"6. consistency invariants on corpus + 500 random graphs", criterion_consistency},
      {"7. tree-ball degrees", criterion_tree_ball_degrees},
      {"8. lattice fixpoint within 3 iterations", criterion_lattice_fixpoint},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::printf("[PASS] %s\n", c.name);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] %s: %s\n", c.name, e.what());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
