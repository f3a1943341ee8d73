#ifndef QWALK_ENSEMBLES_HPP_
#define QWALK_ENSEMBLES_HPP_

#include <span>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Renyi entropy H_q(p) = ln(sum p_i^q) / (1 - q); q = 1 is the Shannon
/// limit -sum p ln p with 0 ln 0 = 0. Requires q >= 0.
double renyi_entropy(const Distribution& p, double q);

double shannon_entropy(const Distribution& p);

/// Upper bound on the uniform-state quantumness from the Shannon entropy of
/// the normalized degrees: 1 - exp(H_1) / N.
double entropy_bound(const Graph& g);

/// Degree density models whose moments determine the ensemble quantumness.
class DegreeDensity {
public:
    /// Continuous scale-free density <d>^2 / (2 d^3) on d >= <d>/2.
    static DegreeDensity ba_continuous(double mean_degree);
    /// Poisson probability mass with the given mean.
    static DegreeDensity poisson(double mean_degree);
    /// Empirical histogram over observed degrees, each with its probability.
    static DegreeDensity empirical(std::vector<double> degree_values,
                                   std::vector<double> probabilities);
    static DegreeDensity empirical(const DegreeVector& dv);

    double mean() const { return mean_; }

    /// <d^p>; the BA kind integrates numerically, Poisson sums the pmf
    /// truncated at tail mass < 1e-12, empirical sums the histogram.
    double moment(double p) const;

    /// 1 - <sqrt(d)>^2 / <d> evaluated from the density's moments. The d=0
    /// term contributes nothing to <sqrt(d)>; the mean is used in full.
    double quantumness() const;

private:
    enum class Kind { ba_continuous, poisson, empirical };
    DegreeDensity() = default;
    Kind kind_ = Kind::poisson;
    double mean_ = 0.0;
    std::vector<double> values_;
    std::vector<double> probs_;
};

/// Ensemble quantumness of the continuous BA degree density, computed by
/// quadrature of its moments (returns 1/9 regardless of the mean).
double quantumness_ba_analytic(double mean_degree = 6.0);

/// Ensemble quantumness of the Poissonian degree distribution.
double quantumness_poisson(double mean_degree);

/// Generic power-law fit y ~ prefactor * x^exponent.
struct PowerLawFit {
    double prefactor = 0.0;
    double exponent = 0.0;
    double rms_log_residual = 0.0;
    int points = 0;
};

/// Linear regression of ln y on ln x. Requires positive data.
PowerLawFit fit_power_law_log(std::span<const double> x, std::span<const double> y);

/// Least-squares best fit in linear space (Gauss-Newton, log-log seeded).
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Power-law fit of the Poisson ensemble quantumness against the mean
/// degree: eps ~ kappa1 <d>^(-kappa2).
struct PoissonFit {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double rms_log_residual = 0.0;
    double mean_min = 0.0;
    double mean_max = 0.0;
};

/// Requires at least 4 distinct means, all > 1.
PoissonFit fit_poisson_quantumness(std::span<const double> means);

} // namespace qwalk

#endif // QWALK_ENSEMBLES_HPP_
