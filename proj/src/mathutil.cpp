#include "pmap/mathutil.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace pmap {

namespace {

// lower incomplete gamma P(a,x) by series, for x < a+1
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// upper incomplete gamma Q(a,x) by Lentz continued fraction, for x >= a+1
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi2_sf(double x, double k) { return gamma_q(k / 2.0, x / 2.0); }

namespace {

double wilson_center_half(std::uint64_t k, std::uint64_t n, double z, int sign) {
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = p + z2 / (2.0 * nn);
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    return (center + sign * half) / denom;
}

}  // namespace

double wilson_lower(std::uint64_t successes, std::uint64_t n, double z) {
    if (n == 0) return 0.0;
    return std::max(0.0, wilson_center_half(successes, n, z, -1));
}

double wilson_upper(std::uint64_t successes, std::uint64_t n, double z) {
    if (n == 0) return 1.0;
    return std::min(1.0, wilson_center_half(successes, n, z, +1));
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("linear_fit: need >= 2 points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

namespace {

double simpson(const std::function<double(double)>& f, double lo, double hi, double flo,
               double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double simpson_rec(const std::function<double(double)>& f, double lo, double hi, double flo,
                   double fmid, double fhi, double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flmid = f(lmid), frmid = f(rmid);
    const double left = simpson(f, lo, mid, flo, flmid, fmid);
    const double right = simpson(f, mid, hi, fmid, frmid, fhi);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, lo, mid, flo, flmid, fmid, left, tol / 2.0, depth - 1) +
           simpson_rec(f, mid, hi, fmid, frmid, fhi, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol) {
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = simpson(f, lo, hi, flo, fmid, fhi);
    return simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, 40);
}

double tail_moment_constant(double p, double a) {
    // integrand 2 exp(-z^{2/p}/a); truncate where the exponent reaches 50
    const double zmax = std::pow(50.0 * a, p / 2.0);
    auto f = [&](double z) { return 2.0 * std::exp(-std::pow(z, 2.0 / p) / a); };
    return adaptive_simpson(f, 0.0, zmax, 1e-10 * zmax);
}

}  // namespace pmap
