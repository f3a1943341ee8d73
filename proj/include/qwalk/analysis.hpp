#ifndef QWALK_ANALYSIS_HPP_
#define QWALK_ANALYSIS_HPP_

#include "qwalk/ensembles.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// L1 distance sum_i |p_i - q_i|, in [0, 2] for distributions.
double l1_distance(const Distribution& p, const Distribution& q);

/// Power-law fit of the quantum correction against degree.
/// Convention: ratio (P~_Q)_i / (P_C)_i ~ d_i^(-exponent), so an exponent
/// near +1 means the correction enhances low-degree nodes.
struct FitResult {
    double exponent = 0.0; // kappa3
    double prefactor = 0.0;
    double rms_log_residual = 0.0;
    int points_used = 0;
    int points_excluded = 0; // nodes with P~_Q at or below the floor
};

/// Least-squares fit of ln(P~_Q/P_C) against ln d over nodes with
/// P~_Q > 1e-15 (no degree binning). Requires summary.quantumness > 1e-6
/// and at least 3 usable nodes.
FitResult fit_correction_exponent(const WalkSummary& summary, const DegreeVector& degrees);

} // namespace qwalk

#endif // QWALK_ANALYSIS_HPP_
