#include "qwalk/analysis.hpp"

#include <cmath>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

double l1_distance(const Distribution& p, const Distribution& q) {
    if (p.p.size() != q.p.size())
        throw std::invalid_argument("l1_distance: length mismatch");
    return (p.p - q.p).cwiseAbs().sum();
}

FitResult fit_correction_exponent(const WalkSummary& summary, const DegreeVector& dv) {
    if (summary.quantumness <= 1e-6 || !summary.p_correction)
        throw std::invalid_argument(
            "fit_correction_exponent: quantum correction is undefined (eps ~ 0)");
    const auto& ptilde = summary.p_correction->p;
    const auto& pc = summary.p_classical.p;
    if (ptilde.size() != dv.d.size())
        throw std::invalid_argument("fit_correction_exponent: degree vector length mismatch");

    constexpr double kFloor = 1e-15;
    std::vector<double> deg, ratio;
    int excluded = 0;
    for (Eigen::Index i = 0; i < ptilde.size(); ++i) {
        if (ptilde(i) > kFloor) {
            deg.push_back(dv.d(i));
            ratio.push_back(ptilde(i) / pc(i));
        } else {
            ++excluded;
        }
    }
    if (deg.size() < 3)
        throw std::invalid_argument("fit_correction_exponent: fewer than 3 usable nodes");

    const PowerLawFit fit = fit_power_law_log(deg, ratio);
    FitResult out;
    out.exponent = -fit.exponent; // stored under the d^(-kappa3) convention
    out.prefactor = fit.prefactor;
    out.rms_log_residual = fit.rms_log_residual;
    out.points_used = static_cast<int>(deg.size());
    out.points_excluded = excluded;
    return out;
}

} // namespace qwalk
