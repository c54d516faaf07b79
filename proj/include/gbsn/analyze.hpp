#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbsn/decisions.hpp"
#include "gbsn/graph.hpp"
#include "gbsn/modular.hpp"

namespace gbsn {

struct Config {
  DecisionConfig decisions;
  long long tree_ball_cap = 100000;
};

// Full classification of one GLM graph of groups.
struct AnalysisReport {
  // input summary
  int rank = 0;
  int input_vertices = 0;
  int input_edge_pairs = 0;

  GLMGraph reduced;
  SpanningTree tree;
  ModularRep modular;
  MatGroupGens image;                    // generators of the modular image
  std::vector<std::string> image_edge_ids;  // edge pair id per generator

  FinitenessResult finiteness;
  VerdictTag biautomatic = VerdictTag::Undecided;
  OnVerdict cat0;
  bool ascending_hnn = false;
  LatticeVerdict glnz;
  VerdictTag residually_finite = VerdictTag::Undecided;

  std::map<std::string, double> timings_ms;

  AnalysisReport() : reduced(1, {"v"}, {}) {}
};

// reduce -> spanning tree -> modular generators -> decisions -> verdicts.
// The consistency invariants (biautomatic <=> finite image, finite =>
// CAT(0), biautomatic => CAT(0)) are enforced; a violation throws
// InternalInconsistency and signals a bug.
AnalysisReport analyze(const GLMGraph& g, const Config& cfg = {});

// Data of the isometric action on E^n x T behind a CAT(0) Yes verdict: the
// exact invariant form, a floating-point conjugator into O(n) (Cholesky
// factor of the form), the affine representation, and the local degrees of
// the Bass-Serre tree.  Throws NotApplicable unless cat0 = Yes.
struct ActionData {
  SymQ form;
  std::vector<std::vector<double>> conjugator;
  double orthogonality_residual = 0.0;  // max |(PgP^-1)^T (PgP^-1) - I|
  AffineRep delta;
  std::vector<std::pair<std::string, Int>> tree_degrees;  // per vertex type
};

ActionData cat0_action_data(const AnalysisReport& report);

const char* version();

}  // namespace gbsn
