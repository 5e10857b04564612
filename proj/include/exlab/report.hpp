#ifndef EXLAB_REPORT_HPP
#define EXLAB_REPORT_HPP

#include <optional>
#include <string>

#include "exlab/combinatorics.hpp"
#include "exlab/freeness.hpp"
#include "exlab/graph.hpp"
#include "exlab/search.hpp"

namespace exlab {

// DOT text; classes of the optional labeling are rendered as fill colors.
std::string emit_dot(const Graph& g, const PartitionLabeling* labeling = nullptr);

// Fixed-schema JSON: n, p, ks, ex_brute, ex_formula, extremal_g6[], rho_max,
// exsp_g6[], containment_holds, formula_matches, diagnostics{}, runtime_ms.
// Reals carry 12 significant digits; output is byte-stable for golden tests.
std::string emit_report(const VerificationReport& report);

std::string emit_witness(const std::optional<Witness>& w);

} // namespace exlab

#endif
