#pragma once

// Exporters: DOT Hasse diagram of the D-order, CSV class tables, and JSON
// verification/structure reports.  All outputs are deterministic functions
// of their inputs; nothing here emits timing.

#include <string>

#include "origami/congruence.hpp"
#include "origami/greens.hpp"
#include "origami/report.hpp"

namespace origami {

//! Hasse diagram of the D-class order.  Nodes are labelled with the
//! representative word of the least element; arrows point from a class to
//! the classes directly below it.
std::string to_dot(const MonoidTable& m, const GreensStructure& g);

//! Per-element class ids: element,rep,r_class,l_class,h_class,d_class,
//! j_class.
std::string to_csv(const MonoidTable& m, const GreensStructure& g);

//! Class counts and class-size histograms as JSON.
std::string greens_report_json(const MonoidTable& m,
                               const GreensStructure& g);

//! {"suite", "n", "instances_checked", "failures", ...} as JSON.
std::string verify_report_json(const VerifyReport& report);

}  // namespace origami
