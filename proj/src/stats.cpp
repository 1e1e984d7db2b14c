#include "pmap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace pmap {

namespace {

// Per-replica results land in a preallocated slot, so the aggregate is
// independent of thread scheduling.
template <class R, class F>
std::vector<R> map_replicas(std::uint64_t n, std::uint64_t seed, unsigned jobs, F&& f) {
    std::vector<R> out(n);
    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) {
            Rng rng = Rng::stream(seed, i);
            out[i] = f(i, rng);
        }
        return out;
    }
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::uint64_t i = w; i < n; i += jobs) {
                Rng rng = Rng::stream(seed, i);
                out[i] = f(i, rng);
            }
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

ThresholdRow make_row(double z, std::uint64_t exceed, std::uint64_t n, double bound,
                      bool in_range) {
    ThresholdRow r;
    r.z = z;
    r.exceed = exceed;
    r.n = n;
    r.phat = n ? static_cast<double>(exceed) / static_cast<double>(n) : 0.0;
    r.ci_low = wilson_lower(exceed, n, kZ99);
    r.ci_high = wilson_upper(exceed, n, kZ99);
    r.bound = bound;
    r.in_range = in_range;
    r.pass = !in_range || r.ci_low <= bound;
    return r;
}

void finish(TailCheckReport& rep) {
    rep.pass = rep.all_rows_pass() && rep.pass;
}

}  // namespace

bool TailCheckReport::all_rows_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const ThresholdRow& r) { return r.pass; });
}

TailCheckReport check_bridge_min_tail(const DegreeSequence& ds, double alpha,
                                      const std::vector<double>& zs, const McOptions& opt) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("check_bridge_min_tail: alpha in (0,1) required");
    TailCheckReport rep;
    rep.name = "bridge-min";
    const double sigma = ds.sigma();
    const double rho = static_cast<double>(ds.rho());
    const std::uint64_t cutoff =
        static_cast<std::uint64_t>(alpha * static_cast<double>(ds.vertices()));

    const auto mins = map_replicas<std::int64_t>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Bridge b = sample_bridge(ds, rng);
            std::int64_t sum = 0, min = 0;
            for (std::uint64_t i = 0; i < cutoff; ++i) {
                sum += b.jumps[i];
                min = std::min(min, sum);
            }
            return min;
        });
    for (double z : zs) {
        std::uint64_t exceed = 0;
        for (std::int64_t m : mins)
            if (static_cast<double>(m) + alpha * rho <= -sigma * z) ++exceed;
        const double e = (1.0 - alpha);
        const double bound = std::exp(-(e * e * e) * sigma * z * z / (2.0 * alpha * sigma + z));
        rep.rows.push_back(make_row(z, exceed, opt.replicas, std::min(1.0, bound), z >= 0.0));
    }
    finish(rep);
    return rep;
}

TailCheckReport check_luka_increment_moment(const DegreeSequence& ds,
                                            std::optional<double> delta_opt, double s, double t,
                                            const std::vector<double>& xs, const McOptions& opt) {
    if (!(0.0 <= s && s < t && t <= 1.0 && t - s <= 0.5))
        throw std::invalid_argument("check_luka_increment_moment: need 0<=s<t<=1, t-s<=1/2");
    const double eps = static_cast<double>(ds.edges());
    const double d1 = static_cast<double>(ds.count(1));
    const double delta_max = 1.0 - d1 / eps;
    const double delta = delta_opt.value_or(delta_max);
    if (delta <= 0.0 || delta > 1.0 || d1 > (1.0 - delta) * eps + 1e-9)
        throw std::invalid_argument("check_luka_increment_moment: delta infeasible for d(1)");

    TailCheckReport rep;
    rep.name = "luka-increment";
    const double sigma = ds.sigma();
    const double rho = static_cast<double>(ds.rho());
    const std::uint64_t upsilon = ds.vertices();
    const std::uint64_t js = static_cast<std::uint64_t>(std::llround(s * upsilon));
    const std::uint64_t jt = static_cast<std::uint64_t>(std::llround(t * upsilon));

    const auto values = map_replicas<double>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Forest f = sample_forest(ds, rng);
            const LukasiewiczPath w = forest_to_lukasiewicz(f);
            std::int64_t min = w.values[js];
            for (std::uint64_t j = js; j <= jt; ++j) min = std::min(min, w.values[j]);
            return static_cast<double>(w.values[js] - min);
        });

    const double gap = t - s;
    const double a = 16.0 * (2.0 + 1.0 / delta);
    for (double x : xs) {
        std::uint64_t exceed = 0;
        for (double v : values)
            if (v - rho * gap > sigma * std::sqrt(gap) * x) ++exceed;
        const double bound = 2.0 * std::exp(-x * x / a);
        rep.rows.push_back(make_row(x, exceed, opt.replicas, std::min(1.0, bound), x > 0.0));
    }

    // p = 2 moment corollary: E[(W(us) - min)^2] <= C(2) (sigma+rho)^2 |t-s|
    double sum_sq = 0.0, sum_q = 0.0;
    for (double v : values) {
        sum_sq += v * v;
        sum_q += v * v * v * v;
    }
    const double n = static_cast<double>(values.size());
    const double mean_sq = sum_sq / n;
    const double se = std::sqrt(std::max(0.0, sum_q / n - mean_sq * mean_sq) / n);
    const double c2 = tail_moment_constant(2.0, a);
    const double moment_bound = 2.0 * (c2 + 1.0) * (sigma + rho) * (sigma + rho) * gap;
    rep.diagnostics["p2_moment"] = mean_sq;
    rep.diagnostics["p2_moment_se"] = se;
    rep.diagnostics["p2_moment_bound"] = moment_bound;
    rep.diagnostics["c2_quadrature"] = c2;
    rep.pass = mean_sq + 3.0 * se <= moment_bound;
    finish(rep);
    return rep;
}

TailCheckReport check_lr_tail(const DegreeSequence& ds, const std::vector<double>& zs,
                              const McOptions& opt) {
    if (ds.max_degree() < 2) throw std::invalid_argument("check_lr_tail: requires Delta >= 2");
    TailCheckReport rep;
    rep.name = "lr-tail";
    const double sigma = ds.sigma();
    const auto lrs = map_replicas<std::uint64_t>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Forest f = sample_forest(ds, rng);
            const std::uint32_t x = 1 + static_cast<std::uint32_t>(rng.below(f.size()));
            return lr_counts(f, x).lr;
        });
    double sum = 0.0;
    for (auto v : lrs) sum += static_cast<double>(v);
    rep.diagnostics["mean_lr"] = sum / static_cast<double>(lrs.size());
    for (double z : zs) {
        std::uint64_t exceed = 0;
        for (std::uint64_t v : lrs)
            if (static_cast<double>(v) >= z * sigma) ++exceed;
        const double bound = 4.0 * std::exp(-z / 288.0);
        rep.rows.push_back(make_row(z, exceed, opt.replicas, std::min(1.0, bound), z >= 0.5));
    }
    finish(rep);
    return rep;
}

TailCheckReport check_width_tail(const DegreeSequence& ds, const std::vector<double>& zs,
                                 const McOptions& opt) {
    if (ds.rho() != 1) throw std::invalid_argument("check_width_tail: requires rho = 1");
    if (ds.max_degree() < 2) throw std::invalid_argument("check_width_tail: requires Delta >= 2");
    TailCheckReport rep;
    rep.name = "width-tail";
    const double sigma = ds.sigma();
    const double eps = static_cast<double>(ds.edges());

    struct WidHt {
        std::uint64_t wid;
        std::uint64_t ht;
    };
    const auto samples = map_replicas<WidHt>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Forest f = sample_forest(ds, rng);
            const HeightProcess h = height_process(f);
            std::uint64_t ht = 0;
            for (std::uint32_t v : h.values) ht = std::max<std::uint64_t>(ht, v);
            std::vector<std::uint64_t> at_height(ht + 1, 0);
            for (std::uint32_t v : h.values) at_height[v]++;
            std::uint64_t wid = 0;
            for (std::uint64_t lvl = 1; lvl <= ht; ++lvl) wid = std::max(wid, at_height[lvl]);
            return WidHt{wid, ht};
        });

    for (double z : zs) {
        const double bound = 3.0 * std::exp(-z / 48.0);
        std::uint64_t wide = 0, short_ = 0;
        for (const auto& s : samples) {
            if (static_cast<double>(s.wid) >= z * sigma) ++wide;
            if (static_cast<double>(s.ht) <= eps / (z * sigma)) ++short_;
        }
        rep.rows.push_back(make_row(z, wide, opt.replicas, std::min(1.0, bound), z >= 1.0));
        // companion lower-bound diagnostic on the height
        ThresholdRow ht_row = make_row(z, short_, opt.replicas, std::min(1.0, bound), z >= 1.0);
        ht_row.z = -z;  // sign marks the companion family in reports
        rep.rows.push_back(ht_row);
    }

    // qualitative height upper tail: log P(ht >= z sigma) affine decreasing
    std::vector<double> zq, logp;
    for (double z = 1.0; z <= 6.0; z += 1.0) {
        std::uint64_t tall = 0;
        for (const auto& s : samples)
            if (static_cast<double>(s.ht) >= z * sigma) ++tall;
        if (tall == 0) break;
        zq.push_back(z);
        logp.push_back(std::log(static_cast<double>(tall) / static_cast<double>(opt.replicas)));
    }
    if (zq.size() >= 3) {
        const LinearFit fit = linear_fit(zq, logp);
        rep.diagnostics["height_tail_slope"] = fit.slope;
        rep.diagnostics["height_tail_r2"] = fit.r_squared;
        rep.pass = rep.pass && fit.slope < 0.0;
    }
    finish(rep);
    return rep;
}

TailCheckReport check_typical_height_tail(const DegreeSequence& ds,
                                          const std::vector<double>& zs, const McOptions& opt) {
    if (ds.max_degree() < 2)
        throw std::invalid_argument("check_typical_height_tail: requires Delta >= 2");
    TailCheckReport rep;
    rep.name = "typical-height";
    const double scale = static_cast<double>(ds.edges()) / ds.sigma();
    const auto heights = map_replicas<std::uint64_t>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Forest f = sample_forest(ds, rng);
            const std::uint32_t x = 1 + static_cast<std::uint32_t>(rng.below(f.size()));
            std::uint64_t depth = 0;
            for (std::uint32_t v = x; !f.is_root(v); v = f.parent(v)) ++depth;
            return depth;
        });
    std::vector<double> zq, logp;
    for (double z : zs) {
        std::uint64_t exceed = 0;
        for (std::uint64_t h : heights)
            if (static_cast<double>(h) >= z * scale) ++exceed;
        ThresholdRow row = make_row(z, exceed, opt.replicas, 1.0, true);
        row.pass = true;  // no explicit constant to compare against
        rep.rows.push_back(row);
        if (exceed > 0 && z > 0.0) {
            zq.push_back(z);
            logp.push_back(std::log(row.phat));
        }
    }
    if (zq.size() >= 3) {
        const LinearFit fit = linear_fit(zq, logp);
        rep.diagnostics["slope"] = fit.slope;
        rep.diagnostics["r2"] = fit.r_squared;
        rep.pass = fit.slope < 0.0 && fit.r_squared >= 0.9;
    } else {
        rep.diagnostics["slope"] = 0.0;
        rep.diagnostics["r2"] = 0.0;
        rep.pass = false;
    }
    return rep;
}

DeviationReport check_lambda_zeta(const DegreeSequence& ds, const std::vector<std::int64_t>& A,
                                  const McOptions& opt) {
    std::uint64_t dA = 0;
    for (std::int64_t a : A)
        if (a >= -1) dA += ds.count(static_cast<std::uint32_t>(a + 1));
    if (dA == 0) throw std::invalid_argument("check_lambda_zeta: d(A+1) = 0");
    const std::uint64_t upsilon = ds.vertices();

    DeviationReport rep;
    rep.sup_devs = map_replicas<double>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Forest f = sample_forest(ds, rng);
            const LukasiewiczPath w = forest_to_lukasiewicz(f);
            const double dd = static_cast<double>(dA);
            const double uu = static_cast<double>(upsilon);
            double sup = 0.0;
            std::uint64_t count = 0;
            for (std::uint64_t j = 0; j <= upsilon; ++j) {
                if (j >= 1 && std::binary_search(A.begin(), A.end(), w.jump(static_cast<std::uint32_t>(j))))
                    ++count;
                const double frac = static_cast<double>(count) / dd;
                sup = std::max(sup, std::fabs(frac - static_cast<double>(j) / uu));
                if (j < upsilon)
                    sup = std::max(sup, std::fabs(frac - static_cast<double>(j + 1) / uu));
            }
            return sup;
        });
    std::vector<double> sorted = rep.sup_devs;
    rep.median = quantile(sorted, 0.5);
    rep.q25 = quantile(sorted, 0.25);
    rep.q75 = quantile(sorted, 0.75);
    return rep;
}

FrequencyReport check_en_event(const DegreeSequence& ds, const McOptions& opt) {
    const double d0 = static_cast<double>(ds.count(0));
    if (d0 < 1.0) throw std::invalid_argument("check_en_event: requires d(0) >= 1");
    const double uu = static_cast<double>(ds.vertices());
    const double c_n = 1.0 - d0 / (2.0 * uu);
    const double l_n = std::pow(4.0 * uu / d0, 2.0) * std::log(4.0 * uu * uu * uu / d0);

    const auto holds = map_replicas<std::uint8_t>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const Forest f = sample_forest(ds, rng);
            // climb from every vertex; prefix of length L > l_n must not have
            // more than c_n L first children
            for (std::uint32_t y = 1; y <= f.size(); ++y) {
                std::uint64_t len = 0, first_children = 0;
                for (std::uint32_t z = y; !f.is_root(z); z = f.parent(z)) {
                    ++len;
                    if (f.sibling_rank(z) == 1) ++first_children;
                    if (static_cast<double>(len) > l_n &&
                        static_cast<double>(first_children) > c_n * static_cast<double>(len))
                        return std::uint8_t{0};
                }
            }
            return std::uint8_t{1};
        });
    FrequencyReport rep;
    rep.n = opt.replicas;
    for (std::uint8_t h : holds) rep.hits += h;
    rep.phat = static_cast<double>(rep.hits) / static_cast<double>(rep.n);
    rep.ci_low = wilson_lower(rep.hits, rep.n, kZ99);
    rep.ci_high = wilson_upper(rep.hits, rep.n, kZ99);
    rep.c_n = c_n;
    rep.l_n = l_n;
    return rep;
}

namespace {

double grid_eval(const std::vector<double>& g, double t) {
    const double x = t * static_cast<double>(g.size() - 1);
    const std::size_t i = std::min(g.size() - 2, static_cast<std::size_t>(x));
    const double frac = x - static_cast<double>(i);
    return g[i] * (1.0 - frac) + g[i + 1] * frac;
}

double grid_min(const std::vector<double>& g, double a, double b) {
    double m = std::min(grid_eval(g, a), grid_eval(g, b));
    const double n1 = static_cast<double>(g.size() - 1);
    for (std::size_t i = static_cast<std::size_t>(std::ceil(a * n1)); i <= g.size() - 1; ++i) {
        const double t = static_cast<double>(i) / n1;
        if (t > b) break;
        m = std::min(m, g[i]);
    }
    return m;
}

}  // namespace

double d_g_functional(const std::vector<double>& g, double s, double t) {
    if (g.size() < 2) throw std::invalid_argument("d_g_functional: grid too small");
    if (s < 0.0 || t < 0.0 || s > 1.0 || t > 1.0)
        throw std::invalid_argument("d_g_functional: arguments outside [0,1]");
    if (s > t) std::swap(s, t);
    const double inner = grid_min(g, s, t);
    const double outer = std::min(grid_min(g, 0.0, s), grid_min(g, t, 1.0));
    return grid_eval(g, s) + grid_eval(g, t) - 2.0 * std::max(inner, outer);
}

HolderReport holder_moment_scan(const DegreeSequence& ds, std::uint32_t q,
                                const std::vector<double>& gaps, const McOptions& opt) {
    if (q < 2 || q % 2) throw std::invalid_argument("holder_moment_scan: q must be even >= 2");
    HolderReport rep;
    rep.hypothesis_ok = ds.count(1) < ds.edges();
    if (!rep.hypothesis_ok)
        throw std::invalid_argument("holder_moment_scan: d(1)/eps must be below 1");
    rep.gaps = gaps;
    const std::vector<double> anchors = {0.1, 0.2, 0.3, 0.4, 0.5};
    const std::uint64_t upsilon = ds.vertices();

    struct Acc {
        std::vector<double> per_gap;          // anchor-averaged |dL|^q
        std::vector<double> first_gap_anchor; // per anchor at gaps[0]
    };
    const auto acc = map_replicas<Acc>(
        opt.replicas, opt.seed, opt.jobs, [&](std::uint64_t, Rng& rng) {
            const LabelledForest lf = sample_labelled_forest(ds, rng);
            const std::vector<std::int64_t> L = label_process(lf);
            Acc a;
            a.per_gap.assign(gaps.size(), 0.0);
            a.first_gap_anchor.assign(anchors.size(), 0.0);
            for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
                double sum = 0.0;
                for (std::size_t ai = 0; ai < anchors.size(); ++ai) {
                    const std::uint64_t i =
                        static_cast<std::uint64_t>(std::llround(anchors[ai] * upsilon));
                    const std::uint64_t j = static_cast<std::uint64_t>(
                        std::llround((anchors[ai] + gaps[gi]) * upsilon));
                    const double d = std::fabs(static_cast<double>(L[j] - L[i]));
                    const double dq = std::pow(d, static_cast<double>(q));
                    sum += dq;
                    if (gi == 0) a.first_gap_anchor[ai] = dq;
                }
                a.per_gap[gi] = sum / static_cast<double>(anchors.size());
            }
            return a;
        });

    rep.moments.assign(gaps.size(), 0.0);
    for (const auto& a : acc)
        for (std::size_t gi = 0; gi < gaps.size(); ++gi) rep.moments[gi] += a.per_gap[gi];
    for (double& m : rep.moments) m /= static_cast<double>(acc.size());

    std::vector<double> lg, lm;
    for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
        lg.push_back(std::log(gaps[gi]));
        lm.push_back(std::log(rep.moments[gi]));
    }
    rep.fit = linear_fit(lg, lm);

    // stationarity of the first-gap moment across anchors
    std::vector<double> anchor_mean(anchors.size(), 0.0), anchor_sq(anchors.size(), 0.0);
    for (const auto& a : acc)
        for (std::size_t ai = 0; ai < anchors.size(); ++ai) {
            anchor_mean[ai] += a.first_gap_anchor[ai];
            anchor_sq[ai] += a.first_gap_anchor[ai] * a.first_gap_anchor[ai];
        }
    double zmax = 0.0;
    const double n = static_cast<double>(acc.size());
    for (std::size_t ai = 0; ai < anchors.size(); ++ai) {
        anchor_mean[ai] /= n;
        anchor_sq[ai] = std::sqrt(std::max(0.0, anchor_sq[ai] / n - anchor_mean[ai] * anchor_mean[ai]) / n);
    }
    for (std::size_t a1 = 0; a1 < anchors.size(); ++a1)
        for (std::size_t a2 = a1 + 1; a2 < anchors.size(); ++a2) {
            const double se = std::sqrt(anchor_sq[a1] * anchor_sq[a1] + anchor_sq[a2] * anchor_sq[a2]);
            if (se > 0.0)
                zmax = std::max(zmax, std::fabs(anchor_mean[a1] - anchor_mean[a2]) / se);
        }
    rep.stationarity_z = zmax;
    return rep;
}

DistanceBoundReport check_distance_bound(const LabelledForest& lf, const PointedMap& pm,
                                         std::uint64_t pairs, Rng& rng) {
    DistanceBoundReport rep;
    const Forest& f = lf.forest;
    const std::uint32_t n = f.size();

    // phi over tree indices 0..n (0 = extra root, whose rightmost descent
    // passes through the last tree root)
    std::vector<std::uint32_t> leaf_id(n + 1, UINT32_MAX);
    std::uint32_t leaves = 0;
    for (std::uint32_t v = 1; v <= n; ++v)
        if (f.is_leaf(v)) leaf_id[v] = leaves++;
    std::uint32_t last_root = 0;
    for (std::uint32_t v = 1; v <= n; ++v)
        if (f.is_root(v)) last_root = v;
    auto phi_of_index = [&](std::uint32_t i) {
        const std::uint32_t v = (i == 0) ? last_root : i;
        return leaf_id[phi_leaf(f, v)];
    };

    const std::vector<std::int64_t> L = label_process(lf);
    const RangeMin rmq(L);

    // group sampled pairs by source to share BFS runs
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_source;
    for (std::uint64_t p = 0; p < pairs; ++p) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng.below(n + 1));
        const std::uint32_t b = static_cast<std::uint32_t>(rng.below(n + 1));
        by_source[a].push_back(b);
    }
    for (const auto& [a, bs] : by_source) {
        const auto dist = bfs_distances(pm.map, phi_of_index(a));
        for (std::uint32_t b : bs) {
            ++rep.checked;
            const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
            const std::int64_t inner = rmq.min(lo, hi);
            std::int64_t outer = std::min(rmq.min(0, lo), rmq.min(hi, n));
            const std::int64_t dl = L[lo] + L[hi] - 2 * std::max(inner, outer);
            if (static_cast<std::int64_t>(dist[phi_of_index(b)]) > dl + 2) ++rep.violations;
        }
    }
    return rep;
}

ProfileReport distance_profile(const PointedMap& pm, std::uint64_t samples, double scale,
                               Rng& rng) {
    ProfileReport rep;
    const PlanarMap& m = pm.map;
    const std::uint32_t non_star = m.n_vertices - 1;
    if (non_star < 2) return rep;

    const std::uint64_t sources = std::max<std::uint64_t>(1, samples / 32);
    for (std::uint64_t s = 0; s < sources; ++s) {
        const std::uint32_t u = static_cast<std::uint32_t>(rng.below(non_star));
        const auto dist = bfs_distances(m, u);
        for (std::uint64_t k = 0; k < 32 && rep.rescaled_two_point.size() < samples; ++k) {
            const std::uint32_t v = static_cast<std::uint32_t>(rng.below(non_star));
            rep.rescaled_two_point.push_back(static_cast<double>(dist[v]) / scale);
        }
    }
    std::sort(rep.rescaled_two_point.begin(), rep.rescaled_two_point.end());
    rep.median = quantile(rep.rescaled_two_point, 0.5);

    // double sweep lower bound on the diameter
    std::uint32_t far = 0;
    std::uint64_t best = 0;
    for (int sweep = 0; sweep < 4; ++sweep) {
        const std::uint32_t start =
            sweep == 0 ? static_cast<std::uint32_t>(rng.below(m.n_vertices)) : far;
        const auto dist = bfs_distances(m, start);
        std::uint32_t arg = start;
        for (std::uint32_t v = 0; v < m.n_vertices; ++v)
            if (dist[v] != UINT32_MAX && dist[v] >= dist[arg]) arg = v;
        if (dist[arg] > best) best = dist[arg];
        far = arg;
    }
    rep.diameter_lb = static_cast<double>(best) / scale;
    return rep;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const double idx = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(idx);
    const std::size_t hi = std::min(values.size() - 1, lo + 1);
    const double frac = idx - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
}

}  // namespace pmap
