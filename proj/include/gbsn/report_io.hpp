#pragma once

#include <string>
#include <variant>

#include "gbsn/analyze.hpp"

namespace gbsn {

// Machine-readable report, schema_version 1:
//   { "schema_version", "input", "reduced", "modular_generators",
//     "verdicts", "certificates", "witnesses", "diagnostics" }
// Rationals are printed as "num/den" strings.  Timings live under
// diagnostics.timings_ms and are the only non-deterministic field; pass
// include_timings = false for byte-stable output.  When an ActionData is
// supplied, it is embedded under an additional "action" key, keeping the
// output a single document.
std::string report_to_json(const AnalysisReport& rep, const Config& cfg,
                           bool include_timings = true,
                           const ActionData* action = nullptr);

// Human-readable report; rationals as num/den, never decimals.
std::string report_to_text(const AnalysisReport& rep);

std::string action_to_text(const AnalysisReport& rep, const ActionData& action);

// Certificate files: { "kind": "form" | "lattice" | "closure", "data": ... }
struct ClosureCertificate {
  Int order;
  std::vector<MatQ> elements;  // may be empty: order-only certificate
};

using AnyCertificate = std::variant<FormCertificate, LatticeCertificate, ClosureCertificate>;

std::string certificate_to_json(const FormCertificate& cert);
std::string certificate_to_json(const LatticeCertificate& cert);
AnyCertificate parse_certificate(const std::string& text);

}  // namespace gbsn
