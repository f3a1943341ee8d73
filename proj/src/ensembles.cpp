#include "qwalk/ensembles.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

double renyi_entropy(const Distribution& p, double q) {
    if (q < 0.0) throw std::invalid_argument("renyi_entropy: q must be non-negative");
    if (std::abs(q - 1.0) < 1e-12) return shannon_entropy(p);
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.p.size(); ++i) {
        const double pi = p.p(i);
        if (pi > 0.0) s += std::pow(pi, q); // zero entries never contribute
    }
    return std::log(s) / (1.0 - q);
}

double shannon_entropy(const Distribution& p) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.p.size(); ++i) {
        const double pi = p.p(i);
        if (pi > 0.0) h -= pi * std::log(pi);
    }
    return h;
}

double entropy_bound(const Graph& g) {
    const Distribution pc = classical_stationary(g);
    const double h1 = shannon_entropy(pc);
    const double bound = 1.0 - std::exp(h1) / static_cast<double>(g.size());
    return std::max(0.0, bound);
}

// --- DegreeDensity ----------------------------------------------------------

DegreeDensity DegreeDensity::ba_continuous(double mean_degree) {
    if (mean_degree <= 0.0) throw std::invalid_argument("degree density mean must be positive");
    DegreeDensity d;
    d.kind_ = Kind::ba_continuous;
    d.mean_ = mean_degree;
    return d;
}

DegreeDensity DegreeDensity::poisson(double mean_degree) {
    if (mean_degree <= 0.0) throw std::invalid_argument("degree density mean must be positive");
    DegreeDensity d;
    d.kind_ = Kind::poisson;
    d.mean_ = mean_degree;
    return d;
}

DegreeDensity DegreeDensity::empirical(std::vector<double> degree_values,
                                       std::vector<double> probabilities) {
    if (degree_values.empty() || degree_values.size() != probabilities.size())
        throw std::invalid_argument("empirical density: values and probabilities must match");
    double mass = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < degree_values.size(); ++i) {
        if (degree_values[i] < 0.0 || probabilities[i] < 0.0)
            throw std::invalid_argument("empirical density: negative entry");
        mass += probabilities[i];
        mean += degree_values[i] * probabilities[i];
    }
    if (std::abs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("empirical density: histogram must sum to 1");
    if (mean <= 0.0) throw std::invalid_argument("degree density mean must be positive");
    DegreeDensity d;
    d.kind_ = Kind::empirical;
    d.mean_ = mean;
    d.values_ = std::move(degree_values);
    d.probs_ = std::move(probabilities);
    return d;
}

DegreeDensity DegreeDensity::empirical(const DegreeVector& dv) {
    const auto n = dv.d.size();
    std::vector<double> values(dv.d.data(), dv.d.data() + n);
    std::vector<double> probs(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
    return empirical(std::move(values), std::move(probs));
}

namespace {

/// Composite Simpson on [0, 1].
template <typename F>
double simpson01(F f, int intervals) {
    const double h = 1.0 / intervals;
    double s = f(0.0) + f(1.0);
    for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return s * h / 3.0;
}

} // namespace

double DegreeDensity::moment(double p) const {
    switch (kind_) {
    case Kind::ba_continuous: {
        // integral over d in [mean/2, inf) of d^p * mean^2/(2 d^3), mapped to
        // u in (0, 1] via d = d_min / u^2; the integrand becomes smooth.
        const double dmin = mean_ / 2.0;
        auto integrand = [&](double u) {
            if (u <= 0.0) return 0.0; // limit for p < 3/2
            const double d = dmin / (u * u);
            const double density = mean_ * mean_ / (2.0 * d * d * d);
            const double jacobian = 2.0 * dmin / (u * u * u);
            return std::pow(d, p) * density * jacobian;
        };
        return simpson01(integrand, 4096);
    }
    case Kind::poisson: {
        // Window of +-14 sigma keeps the neglected tail mass far below 1e-12.
        const double width = 14.0 * std::sqrt(mean_) + 20.0;
        const long lo = std::max(0L, static_cast<long>(std::floor(mean_ - width)));
        const long hi = static_cast<long>(std::ceil(mean_ + width));
        double s = 0.0, mass = 0.0;
        for (long d = lo; d <= hi; ++d) {
            const double lp = d * std::log(mean_) - mean_ - std::lgamma(static_cast<double>(d) + 1.0);
            const double pd = std::exp(lp);
            mass += pd;
            if (d > 0) s += std::pow(static_cast<double>(d), p) * pd;
        }
        if (mass < 1.0 - 1e-12)
            throw NumericalError("poisson moment: truncated mass " + std::to_string(mass));
        return s;
    }
    case Kind::empirical: {
        double s = 0.0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] > 0.0) s += std::pow(values_[i], p) * probs_[i];
        return s;
    }
    }
    throw std::logic_error("unreachable");
}

double DegreeDensity::quantumness() const {
    const double root = moment(0.5);
    return 1.0 - root * root / mean_;
}

double quantumness_ba_analytic(double mean_degree) {
    return DegreeDensity::ba_continuous(mean_degree).quantumness();
}

double quantumness_poisson(double mean_degree) {
    return DegreeDensity::poisson(mean_degree).quantumness();
}

// --- power-law fits -----------------------------------------------------------

namespace {

void check_fit_input(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("power-law fit needs matching x/y with >= 2 points");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] <= 0.0 || y[i] <= 0.0)
            throw std::invalid_argument("power-law fit needs positive data");
    const double first = x.front();
    bool distinct = false;
    for (const double v : x)
        if (v != first) distinct = true;
    if (!distinct) throw std::invalid_argument("power-law fit: all x values equal");
}

double rms_log_residual(std::span<const double> x, std::span<const double> y,
                        double prefactor, double exponent) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::log(y[i]) - std::log(prefactor) - exponent * std::log(x[i]);
        s += r * r;
    }
    return std::sqrt(s / static_cast<double>(x.size()));
}

} // namespace

PowerLawFit fit_power_law_log(std::span<const double> x, std::span<const double> y) {
    check_fit_input(x, y);
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    PowerLawFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.prefactor = std::exp((sy - fit.exponent * sx) / n);
    fit.points = static_cast<int>(x.size());
    fit.rms_log_residual = rms_log_residual(x, y, fit.prefactor, fit.exponent);
    return fit;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    PowerLawFit fit = fit_power_law_log(x, y);
    // Gauss-Newton refinement of sum (y_i - a x_i^b)^2 from the log-log seed.
    double a = fit.prefactor, b = fit.exponent;
    for (int iter = 0; iter < 200; ++iter) {
        double j11 = 0.0, j12 = 0.0, j22 = 0.0, g1 = 0.0, g2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double model = a * std::pow(x[i], b);
            const double r = y[i] - model;
            const double da = model / a;
            const double db = model * std::log(x[i]);
            j11 += da * da;
            j12 += da * db;
            j22 += db * db;
            g1 += da * r;
            g2 += db * r;
        }
        const double det = j11 * j22 - j12 * j12;
        if (std::abs(det) < 1e-300) break;
        const double step_a = (j22 * g1 - j12 * g2) / det;
        const double step_b = (j11 * g2 - j12 * g1) / det;
        a += step_a;
        b += step_b;
        if (a <= 0.0) { // fall back to the log-log solution
            a = fit.prefactor;
            b = fit.exponent;
            break;
        }
        if (std::abs(step_a) <= 1e-14 * std::abs(a) && std::abs(step_b) <= 1e-14 * std::abs(b))
            break;
    }
    fit.prefactor = a;
    fit.exponent = b;
    fit.rms_log_residual = rms_log_residual(x, y, a, b);
    return fit;
}

PoissonFit fit_poisson_quantumness(std::span<const double> means) {
    if (means.size() < 4)
        throw std::invalid_argument("fit_poisson_quantumness needs at least 4 mean degrees");
    for (const double m : means)
        if (m <= 1.0)
            throw std::invalid_argument("fit_poisson_quantumness needs all means > 1");
    const double first = means.front();
    bool distinct = false;
    for (const double m : means)
        if (m != first) distinct = true;
    if (!distinct) throw std::invalid_argument("fit_poisson_quantumness: degenerate fit, all means equal");

    std::vector<double> eps(means.size());
    for (std::size_t i = 0; i < means.size(); ++i) eps[i] = quantumness_poisson(means[i]);

    const PowerLawFit fit = fit_power_law(means, eps);
    PoissonFit out;
    out.kappa1 = fit.prefactor;
    out.kappa2 = -fit.exponent;
    out.rms_log_residual = fit.rms_log_residual;
    out.mean_min = *std::min_element(means.begin(), means.end());
    out.mean_max = *std::max_element(means.begin(), means.end());
    if (out.kappa1 <= 0.0 || out.kappa2 <= 0.0)
        throw NumericalError("fit_poisson_quantumness: fit left the valid domain");
    return out;
}

} // namespace qwalk
