// End-to-end experiment pipelines.
//
// pipeline-3i: per N, block counts T/S/R/N over the geometric block ladder
// P = N/mu^(k+1), the assembled lower bound sum nu*N(P), and the integral of
// the solution count by both routes against (b-a) G_N.
//
// pipeline-3ii: per N, the averaged Fourier error term normalized by
// window^2 N / log^3 N together with tail evidence for the pointwise bound
// F_N <= K G_N + J_N.

#pragma once

#include <cstdint>
#include <vector>

#include "pla/config.hpp"
#include "pla/continued_fraction.hpp"
#include "pla/report.hpp"

namespace pla {

// The N values an experiment runs over: the explicit n_list if given, else
// the squared convergent denominators of c up to q_max^2.  When require_s is
// set, every explicit value must belong to that sequence.
std::vector<std::uint64_t> resolve_n_list(const ExperimentConfig& cfg,
                                          const QuadraticIrrational& c, bool require_s);

ExperimentReport run_theorem3i_pipeline(const ExperimentConfig& cfg);
ExperimentReport run_theorem3ii_pipeline(const ExperimentConfig& cfg);

}  // namespace pla
