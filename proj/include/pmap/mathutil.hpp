#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace pmap {

// Regularized upper incomplete gamma Q(a, x); series/continued-fraction split.
double gamma_q(double a, double x);

// Survival function of the chi-square distribution with k dof.
double chi2_sf(double x, double k);

// One-sided Wilson score bounds for a binomial proportion at normal quantile z.
double wilson_lower(std::uint64_t successes, std::uint64_t n, double z);
double wilson_upper(std::uint64_t successes, std::uint64_t n, double z);

inline constexpr double kZ99 = 2.3263478740408408;  // Phi^-1(0.99)

// Least squares fit y = a + b x; returns (slope, intercept, r_squared).
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// Adaptive Simpson quadrature of f over [lo, hi] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol);

// c(p) = int_0^inf 2 exp(-z^{2/p} / a) dz, computed by quadrature; the
// closed form p a^{p/2} Gamma(p/2) is used as an independent cross-check in
// the tests. Relative quadrature error is at most ~1e-8 at the sizes used.
double tail_moment_constant(double p, double a);

}  // namespace pmap
