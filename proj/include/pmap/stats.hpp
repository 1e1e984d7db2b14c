#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmap/degree.hpp"
#include "pmap/forest.hpp"
#include "pmap/map.hpp"
#include "pmap/mathutil.hpp"
#include "pmap/sampler.hpp"

namespace pmap {

struct McOptions {
    std::uint64_t replicas = 10000;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

// One bound comparison: PASS iff the one-sided 99% Wilson lower confidence
// limit of the empirical exceedance stays at or below the bound.
struct ThresholdRow {
    double z = 0.0;
    std::uint64_t exceed = 0;
    std::uint64_t n = 0;
    double phat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double bound = 1.0;
    bool in_range = true;  // threshold satisfies the statement's hypotheses
    bool pass = true;
};

struct TailCheckReport {
    std::string name;
    std::vector<ThresholdRow> rows;
    std::map<std::string, double> diagnostics;
    bool pass = true;

    bool all_rows_pass() const;
};

// P(min_{i <= alpha upsilon} B(i) + alpha rho <= -sigma z)
//   <= exp(-(1-alpha)^3 sigma z^2 / (2 alpha sigma + z))
TailCheckReport check_bridge_min_tail(const DegreeSequence& ds, double alpha,
                                      const std::vector<double>& zs, const McOptions& opt);

// P(W(us) - min_[s,t] W - rho(t-s) > sigma |t-s|^{1/2} x)
//   <= 2 exp(-x^2 / (16 (2 + 1/delta)))   when d(1) <= (1-delta) eps,
// plus the p = 2 moment corollary with the integrated constant.
TailCheckReport check_luka_increment_moment(const DegreeSequence& ds,
                                            std::optional<double> delta, double s, double t,
                                            const std::vector<double>& xs, const McOptions& opt);

// P(LR(x) >= z sigma) <= 4 exp(-z/288) for z >= 1/2, Delta >= 2.
TailCheckReport check_lr_tail(const DegreeSequence& ds, const std::vector<double>& zs,
                              const McOptions& opt);

// P(wid >= z sigma) <= 3 exp(-z/48) for z >= 1, single tree; also reports the
// height companion P(ht <= eps/(z sigma)) <= 3 exp(-z/48) and the qualitative
// log-linear decay of P(ht >= z sigma).
TailCheckReport check_width_tail(const DegreeSequence& ds, const std::vector<double>& zs,
                                 const McOptions& opt);

// Qualitative: log P(|x| >= z eps/sigma) decreases affinely in z.
TailCheckReport check_typical_height_tail(const DegreeSequence& ds,
                                          const std::vector<double>& zs, const McOptions& opt);

struct DeviationReport {
    std::vector<double> sup_devs;  // one per replica
    double median = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
};
// sup_t |Lambda_A(upsilon t)/d(A+1) - t| per replica.
DeviationReport check_lambda_zeta(const DegreeSequence& ds, const std::vector<std::int64_t>& A,
                                  const McOptions& opt);

struct FrequencyReport {
    std::uint64_t hits = 0;
    std::uint64_t n = 0;
    double phat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    double c_n = 0.0;
    double l_n = 0.0;
};
// Frequency of the event that no long branch has too many first children.
FrequencyReport check_en_event(const DegreeSequence& ds, const McOptions& opt);

// D_g(s,t) = g(s) + g(t) - 2 max{ min_[s,t] g, min_{[0,s] u [t,1]} g } for a
// piecewise-linear g given by values on the uniform grid over [0,1].
double d_g_functional(const std::vector<double>& grid_values, double s, double t);

struct HolderReport {
    std::vector<double> gaps;
    std::vector<double> moments;  // E |L(us) - L(u(s+gap))|^q, anchor-averaged
    LinearFit fit;                // log moment vs log gap
    double stationarity_z = 0.0;  // anchor-to-anchor spread in standard errors
    bool hypothesis_ok = true;
};
HolderReport holder_moment_scan(const DegreeSequence& ds, std::uint32_t q,
                                const std::vector<double>& gaps, const McOptions& opt);

struct DistanceBoundReport {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};
// d_gr(phi(x_i), phi(x_j)) <= D_L(i, j) + 2 on sampled index pairs.
DistanceBoundReport check_distance_bound(const LabelledForest& lf, const PointedMap& pm,
                                         std::uint64_t pairs, Rng& rng);

struct ProfileReport {
    std::vector<double> rescaled_two_point;  // sorted
    double median = 0.0;
    double diameter_lb = 0.0;  // double-sweep, rescaled
};
ProfileReport distance_profile(const PointedMap& pm, std::uint64_t samples, double scale,
                               Rng& rng);

double quantile(std::vector<double> values, double q);

}  // namespace pmap
