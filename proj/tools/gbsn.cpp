#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbsn/analyze.hpp"
#include "gbsn/errors.hpp"
#include "gbsn/graph_io.hpp"
#include "gbsn/modular.hpp"
#include "gbsn/random_graph.hpp"
#include "gbsn/report_io.hpp"
#include "gbsn/tree_ball.hpp"

namespace {

using namespace gbsn;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write to '" + out_path + "'");
  out << text;
}

struct CommonOpts {
  std::string input;
  bool json = false;
  bool quiet = false;
  Config cfg;

  void attach(CLI::App* cmd, bool with_decision_flags) {
    cmd->add_option("file", input, "graph document (JSON)")->required();
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_flag("--quiet", quiet, "suppress non-essential output");
    if (with_decision_flags) {
      cmd->add_option("--max-closure", [this](const CLI::results_t& r) {
            return set_big_int(cfg.decisions.closure_cap, r[0]);
          },
          "override the closure cap for the finiteness decision");
      cmd->add_option("--max-lattice-iters", cfg.decisions.lattice_max_iters,
                      "iteration cap for the invariant-lattice fixpoint");
      cmd->add_option("--witness-depth", cfg.decisions.witness_depth,
                      "word length for exact obstruction scans");
      cmd->add_option("--averaging-iters", cfg.decisions.averaging_max_iters,
                      "iteration cap for the numeric form-averaging search");
      cmd->add_option("--averaging-tol", cfg.decisions.averaging_tol,
                      "convergence tolerance for the form-averaging search");
      cmd->add_option("--denom-cap", [this](const CLI::results_t& r) {
            return set_big_int(cfg.decisions.rational_denom_cap, r[0]);
          },
          "denominator cap when rationalizing numeric candidates");
    }
  }

  static bool set_big_int(Int& target, const std::string& text) {
    if (mpz_set_str(target.get_mpz_t(), text.c_str(), 10) != 0) return false;
    return target > 0;
  }
};

int run_analyze(const CommonOpts& opts, bool with_action) {
  GLMGraph g = parse_graph(read_file(opts.input));
  AnalysisReport rep = analyze(g, opts.cfg);
  std::optional<ActionData> action;
  if (with_action && rep.cat0.tag == VerdictTag::Yes) action = cat0_action_data(rep);
  if (opts.json) {
    std::cout << report_to_json(rep, opts.cfg, true, action ? &*action : nullptr);
  } else if (!opts.quiet) {
    std::cout << report_to_text(rep);
    if (action) std::cout << action_to_text(rep, *action);
  }
  bool undecided = rep.cat0.tag == VerdictTag::Undecided ||
                   rep.residually_finite == VerdictTag::Undecided;
  return undecided ? kExitUndecided : kExitOk;
}

int run_reduce(const CommonOpts& opts, const std::string& out_path) {
  GLMGraph g = parse_graph(read_file(opts.input));
  write_output(serialize_graph(reduce(g)), out_path);
  return kExitOk;
}

int run_delta(const CommonOpts& opts) {
  GLMGraph g = parse_graph(read_file(opts.input));
  GLMGraph red = reduce(g);
  SpanningTree t = spanning_tree(red);
  ModularRep rep = modular_generators(red, t);
  AffineRep aff = delta_affine(red, t);

  if (opts.json) {
    nlohmann::ordered_json doc;
    doc["base_vertex"] = red.vertex_name(rep.base_vertex);
    nlohmann::ordered_json transport = nlohmann::ordered_json::object();
    auto matj = [](const MatQ& m) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
      }
      return rows;
    };
    for (int v = 0; v < red.num_vertices(); ++v)
      transport[red.vertex_name(v)] = matj(rep.transport[v]);
    doc["transport"] = std::move(transport);
    nlohmann::ordered_json images = nlohmann::ordered_json::object();
    for (int p = 0; p < red.num_edge_pairs(); ++p)
      images[red.edge(p).id] = matj(rep.edge_image_fwd[p]);
    doc["edge_images"] = std::move(images);
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (int p : rep.nontree_pairs) gens.push_back(red.edge(p).id);
    doc["generators"] = std::move(gens);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "base vertex: " << red.vertex_name(rep.base_vertex) << "\n";
    std::cout << "transport to the base vertex group:\n";
    for (int v = 0; v < red.num_vertices(); ++v)
      std::cout << "  P[" << red.vertex_name(v) << "] = " << rep.transport[v].to_string()
                << "\n";
    std::cout << "stable letter images (non-tree pairs generate the modular image):\n";
    for (int p = 0; p < red.num_edge_pairs(); ++p)
      std::cout << "  M[" << red.edge(p).id << "] = " << rep.edge_image_fwd[p].to_string()
                << (t.in_tree(p) ? "   (tree)" : "   (generator)") << "\n";
    std::cout << "vertex generators act by translations:\n";
    for (int v = 0; v < red.num_vertices(); ++v)
      for (int k = 0; k < red.rank(); ++k) {
        VecQ tr(red.rank());
        for (int i = 0; i < red.rank(); ++i) tr[i] = aff.transport[v].at(i, k);
        std::cout << "  " << red.vertex_name(v) << "." << k << " -> " << vec_to_string(tr)
                  << "\n";
      }
  }
  return kExitOk;
}

int run_tree(const CommonOpts& opts, int radius, bool dot) {
  GLMGraph g = parse_graph(read_file(opts.input));
  SpanningTree t = spanning_tree(g);
  TreeBall ball = tree_ball(g, t.root, radius, opts.cfg.tree_ball_cap);

  if (dot) {
    std::cout << "graph tree_ball {\n";
    for (size_t i = 0; i < ball.vertices.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << g.vertex_name(ball.vertices[i].type)
                << "\"];\n";
    for (auto [a, b] : ball.edges) std::cout << "  n" << a << " -- n" << b << ";\n";
    std::cout << "}\n";
    return kExitOk;
  }
  if (opts.json) {
    nlohmann::ordered_json doc;
    doc["radius"] = ball.radius;
    doc["vertex_count"] = ball.vertices.size();
    doc["center_degree"] = ball.vertices.front().degree.get_str();
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const TreeBallVertex& v : ball.vertices)
      verts.push_back({{"type", g.vertex_name(v.type)},
                       {"depth", v.depth},
                       {"degree", v.degree.get_str()}});
    doc["vertices"] = std::move(verts);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ball of radius " << ball.radius << ": " << ball.vertices.size()
              << " vertices, center degree " << ball.vertices.front().degree.get_str()
              << "\n";
    std::vector<long long> per_depth(radius + 1, 0);
    for (const TreeBallVertex& v : ball.vertices) ++per_depth[v.depth];
    for (int d = 0; d <= radius; ++d)
      std::cout << "  depth " << d << ": " << per_depth[d] << " vertex(es)\n";
  }
  return kExitOk;
}

int run_certify(const CommonOpts& opts, const std::string& cert_path) {
  GLMGraph g = parse_graph(read_file(opts.input));
  AnyCertificate cert = parse_certificate(read_file(cert_path));

  GLMGraph red = reduce(g);
  SpanningTree t = spanning_tree(red);
  ModularRep rep = modular_generators(red, t);
  MatGroupGens gens(red.rank(), rep.generators());

  bool ok = false;
  std::string kind;
  if (const auto* form = std::get_if<FormCertificate>(&cert)) {
    kind = "form";
    ok = verify_certificate(gens, *form);
  } else if (const auto* lat = std::get_if<LatticeCertificate>(&cert)) {
    kind = "lattice";
    ok = verify_certificate(gens, *lat);
  } else {
    kind = "closure";
    const auto& clo = std::get<ClosureCertificate>(cert);
    if (clo.elements.empty()) {
      FinitenessResult fin = decide_finite(gens, opts.cfg.decisions);
      ok = fin.finite && fin.order == clo.order;
    } else {
      try {
        Lattice l = finite_group_invariant_lattice(clo.elements);
        (void)l;
        ok = Int(long(clo.elements.size())) == clo.order;
        for (const MatQ& m : gens.gens) {
          bool found = false;
          for (const MatQ& e : clo.elements)
            if (e == m) { found = true; break; }
          ok = ok && found;
        }
      } catch (const NotAGroup&) {
        ok = false;
      }
    }
  }
  if (!opts.quiet)
    std::cout << kind << " certificate: " << (ok ? "verifies" : "REJECTED") << "\n";
  return ok ? kExitOk : kExitUndecided;
}

int run_selftest(unsigned long seed, int count, bool quiet) {
  std::mt19937_64 rng(seed);
  Config cfg;
  for (int i = 0; i < count; ++i) {
    GLMGraph g = random_graph(rng);
    SpanningTree t = spanning_tree(g);
    AffineRep aff = delta_affine(g, t);
    PresentationCheck chk = verify_presentation(aff, standard_presentation(g, t));
    if (!chk.ok) {
      std::cerr << "selftest: presentation relator violated: " << chk.failed_relator << "\n"
                << serialize_graph(g);
      return kExitInconsistent;
    }
    analyze(g, cfg);  // throws InternalInconsistency on any invariant violation
  }
  if (!quiet) std::cout << "selftest: " << count << " random graphs passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classifier for rank-n generalized Baumslag-Solitar groups"};
  app.set_version_flag("--version", std::string("gbsn ") + gbsn::version());
  app.require_subcommand(1);

  CommonOpts analyze_opts, reduce_opts, delta_opts, tree_opts, certify_opts;
  bool with_action = false;
  std::string reduce_out, cert_path;
  int radius = 1;
  bool dot = false;
  unsigned long seed = 1;
  int selftest_count = 25;
  bool selftest_quiet = false;

  auto* cmd_analyze = app.add_subcommand("analyze", "full classification report");
  analyze_opts.attach(cmd_analyze, true);
  cmd_analyze->add_flag("--action", with_action, "emit CAT(0) action data when available");

  auto* cmd_reduce = app.add_subcommand("reduce", "emit the reduced graph document");
  reduce_opts.attach(cmd_reduce, false);
  cmd_reduce->add_option("-o,--output", reduce_out, "output file (default: stdout)");

  auto* cmd_delta = app.add_subcommand("delta", "modular generators and affine representation");
  delta_opts.attach(cmd_delta, false);

  auto* cmd_tree = app.add_subcommand("tree", "finite ball of the Bass-Serre tree");
  tree_opts.attach(cmd_tree, false);
  cmd_tree->add_option("--radius", radius, "ball radius")->required();
  cmd_tree->add_flag("--dot", dot, "emit Graphviz DOT");
  cmd_tree->add_option("--cap", tree_opts.cfg.tree_ball_cap, "vertex cap for the ball");

  auto* cmd_certify = app.add_subcommand("certify", "re-verify a certificate file");
  certify_opts.attach(cmd_certify, true);
  cmd_certify->add_option("--certificate", cert_path, "certificate file")->required();

  auto* cmd_selftest = app.add_subcommand("selftest", "randomized consistency checks");
  cmd_selftest->add_option("--seed", seed, "PRNG seed");
  cmd_selftest->add_option("--count", selftest_count, "number of random graphs");
  cmd_selftest->add_flag("--quiet", selftest_quiet, "suppress the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // map CLI11's own exit codes onto the documented ones: 0 for --help
    // and --version, 1 for any usage error
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(analyze_opts, with_action);
    if (cmd_reduce->parsed()) return run_reduce(reduce_opts, reduce_out);
    if (cmd_delta->parsed()) return run_delta(delta_opts);
    if (cmd_tree->parsed()) return run_tree(tree_opts, radius, dot);
    if (cmd_certify->parsed()) return run_certify(certify_opts, cert_path);
    if (cmd_selftest->parsed()) return run_selftest(seed, selftest_count, selftest_quiet);
  } catch (const gbsn::InternalInconsistency& e) {
    std::cerr << "gbsn: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const gbsn::Error& e) {
    std::cerr << "gbsn: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
