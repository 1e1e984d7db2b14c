// Command-line driver: sampling, verification suites, scaling tables,
// enumeration and spine statistics over the pmap library.
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pmap/io.hpp"
#include "pmap/map.hpp"
#include "pmap/oracle.hpp"
#include "pmap/stats.hpp"

using namespace pmap;

namespace {

constexpr const char* kVersion = "pmap 1.0.0 (format 1)";

struct DegreeSource {
    std::string family;
    std::uint64_t n = 100;
    std::uint32_t p = 2;
    std::uint64_t rho = 1;
    double alpha = 1.5;
    std::uint32_t kmax = 0;
    std::uint64_t family_seed = 0;
    std::string file;    // JSON file with "counts" or "face_counts"
    std::string inline_json;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--family", family, "family id: 2p, fig-mixed, big-face, power-law");
        cmd->add_option("--n", n, "family size (number of inner faces)");
        cmd->add_option("--p", p, "half face degree for the 2p family");
        cmd->add_option("--rho", rho, "half boundary length");
        cmd->add_option("--alpha", alpha, "power-law exponent");
        cmd->add_option("--kmax", kmax, "power-law degree cutoff (0 = size)");
        cmd->add_option("--family-seed", family_seed, "seed for randomized families");
        cmd->add_option("--degrees", file, "degree sequence JSON file");
        cmd->add_option("--inline", inline_json, "degree sequence JSON literal");
    }

    FaceDegreeSequence face_sequence() const {
        if (!file.empty()) return face_sequence_from_json(Json::parse(read_file(file)));
        if (!inline_json.empty()) {
            const Json j = Json::parse(inline_json);
            if (j.contains("counts")) {
                // forest-side input: convert to the face view for map work
                const DegreeSequence ds = degree_sequence_from_json(j);
                FaceDegreeSequence::Counts c;
                for (const auto& [k, dk] : ds.counts())
                    if (k >= 1) c.emplace_back(k, dk);
                return FaceDegreeSequence(std::move(c), ds.rho());
            }
            return face_sequence_from_json(j);
        }
        FamilyParams params;
        params.p = p;
        params.rho = rho;
        params.alpha = alpha;
        params.kmax = kmax;
        params.seed = family_seed;
        return family_generator(family.empty() ? "2p" : family, n, params);
    }

    DegreeSequence degree_sequence() const {
        if (!file.empty() || !inline_json.empty()) {
            const std::string text = file.empty() ? inline_json : read_file(file);
            const Json j = Json::parse(text);
            if (j.contains("counts")) return degree_sequence_from_json(j);
            return face_to_forest_degrees(face_sequence_from_json(j));
        }
        return face_to_forest_degrees(face_sequence());
    }
};

std::string out_dir() {
    const char* env = std::getenv("PMAP_OUT_DIR");
    return env ? std::string(env) + "/" : std::string();
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<std::uint64_t> parse_sizes(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    return out;
}

void emit_report(const TailCheckReport& rep, const std::string& out, const std::string& format) {
    if (!out.empty()) {
        if (format == "csv")
            write_file(out, to_csv(rep));
        else
            write_file(out, to_json(rep).dump(2) + "\n");
    }
    std::printf("%-16s %s\n", rep.name.c_str(), rep.pass ? "PASS" : "FAIL");
    for (const auto& row : rep.rows) {
        std::printf("  z=%-8.3f empirical=%.5f ci=[%.5f,%.5f] bound=%.5f %s%s\n", row.z,
                    row.phat, row.ci_low, row.ci_high, row.bound,
                    row.in_range ? "" : "(outside stated range) ", row.pass ? "ok" : "VIOLATED");
    }
    for (const auto& [key, value] : rep.diagnostics)
        std::printf("  %s = %.6g\n", key.c_str(), value);
}

int cmd_sample(const DegreeSource& src, std::uint64_t seed, const std::string& out_prefix) {
    const FaceDegreeSequence fds = src.face_sequence();
    const DegreeSequence ds = face_to_forest_degrees(fds);
    Rng rng = Rng::stream(seed, 0);
    const LabelledForest lf = sample_labelled_forest(ds, rng);
    const PointedMap pm = forest_to_map(lf);

    const auto bad = validate_map(pm.map, fds);
    if (!bad.empty()) {
        for (const auto& b : bad) std::fprintf(stderr, "invariant violated: %s\n", b.c_str());
        return 1;
    }
    Rng prof_rng = Rng::stream(seed, 1);
    const double scale = std::sqrt(ds.sigma() + static_cast<double>(ds.rho()));
    const ProfileReport prof = distance_profile(pm, 256, scale, prof_rng);

    Json summary{{"vertices", ds.vertices()},
                 {"edges", ds.edges()},
                 {"sigma2", ds.sigma2()},
                 {"max_degree", ds.max_degree()},
                 {"rho", ds.rho()},
                 {"map_vertices", pm.map.n_vertices},
                 {"map_edges", pm.map.edges()},
                 {"inner_faces", fds.inner_faces()},
                 {"diameter_lower_bound", prof.diameter_lb * scale},
                 {"seed", seed}};
    const std::string prefix = out_dir() + out_prefix;
    write_file(prefix + "forest.json", to_json(lf).dump(2) + "\n");
    write_file(prefix + "map.json", to_json(pm.map).dump(2) + "\n");
    write_file(prefix + "summary.json", summary.dump(2) + "\n");
    std::printf("%s\n", summary.dump(2).c_str());
    return 0;
}

int cmd_verify_counts(std::uint64_t max_vertices) {
    // full scan: enumerated counts match the closed forms
    std::function<void(std::map<std::uint32_t, std::uint64_t>&, std::uint32_t, std::uint64_t,
                       std::uint64_t)>
        rec;
    bool ok = true;
    std::uint64_t sequences = 0;
    std::map<std::uint32_t, std::uint64_t> counts;
    rec = [&](std::map<std::uint32_t, std::uint64_t>& c, std::uint32_t k, std::uint64_t used,
              std::uint64_t weighted) {
        if (k == max_vertices) {
            if (used >= 1 && used > weighted) {
                const DegreeSequence ds = DegreeSequence::from_map(c, used - weighted);
                ++sequences;
                std::uint64_t forests = 0, labelled = 0;
                enumerate_forests(ds, {}, [&](const Forest&) { ++forests; });
                enumerate_labelled_forests(ds, {}, [&](const LabelledForest&) { ++labelled; });
                if (forests != count_forests(ds)) ok = false;
                if (labelled != count_labelled_forests(ds)) ok = false;
                FaceDegreeSequence::Counts fc;
                for (const auto& [kk, dk] : ds.counts())
                    if (kk >= 1) fc.emplace_back(kk, dk);
                const BigInt lhs = count_maps(FaceDegreeSequence(std::move(fc), ds.rho())) *
                                   BigInt(static_cast<unsigned long>(ds.count(0) + 1));
                if (lhs != 2 * count_labelled_forests(ds)) ok = false;
            }
            return;
        }
        for (std::uint64_t dk = 0; used + dk <= max_vertices; ++dk) {
            if (weighted + k * dk > max_vertices) break;
            if (dk) c[k] = dk;
            rec(c, k + 1, used + dk, weighted + k * dk);
            c.erase(k);
        }
    };
    rec(counts, 0, 0, 0);
    std::printf("counts: %s (%" PRIu64 " degree sequences)\n", ok ? "PASS" : "FAIL", sequences);
    return ok ? 0 : 1;
}

int cmd_verify_uniformity(std::uint64_t trials, std::uint64_t seed) {
    bool ok = true;
    {
        const DegreeSequence ds({{0, 3}, {2, 2}}, 1);
        std::vector<std::string> keys;
        enumerate_forests(ds, {}, [&](const Forest& f) {
            std::string key;
            for (std::uint32_t v = 1; v <= f.size(); ++v)
                key += std::to_string(f.parent(v)) + ",";
            keys.push_back(key);
        });
        Rng rng = Rng::stream(seed, 1);
        const auto rep = uniformity_test(
            [&](Rng& r) {
                const Forest f = sample_forest(ds, r);
                std::string key;
                for (std::uint32_t v = 1; v <= f.size(); ++v)
                    key += std::to_string(f.parent(v)) + ",";
                return key;
            },
            keys, trials, rng);
        ok = ok && rep.p_value > 0.01 && !rep.foreign_outcome;
        std::printf("forest sampler on {0:3,2:2}: chi2=%.3f p=%.4f %s\n", rep.chi2, rep.p_value,
                    rep.p_value > 0.01 ? "PASS" : "FAIL");
    }
    for (std::uint32_t k : {2u, 3u, 4u}) {
        std::vector<std::string> keys;
        for (const auto& lb : enumerate_label_bridges(k)) {
            std::string key;
            for (std::int64_t v : lb.values) key += std::to_string(v) + ",";
            keys.push_back(key);
        }
        Rng rng = Rng::stream(seed, 100 + k);
        const auto rep = uniformity_test(
            [&](Rng& r) {
                const LabelBridge lb = sample_label_bridge(k, r);
                std::string key;
                for (std::int64_t v : lb.values) key += std::to_string(v) + ",";
                return key;
            },
            keys, trials, rng);
        ok = ok && rep.p_value > 0.01 && !rep.foreign_outcome;
        std::printf("label bridges k=%u: chi2=%.3f p=%.4f %s\n", k, rep.chi2, rep.p_value,
                    rep.p_value > 0.01 ? "PASS" : "FAIL");
    }
    return ok ? 0 : 1;
}

int cmd_verify_lemma3(std::uint64_t max_vertices) {
    bool ok = true;
    std::uint64_t rows = 0, skipped = 0;
    std::function<void(std::map<std::uint32_t, std::uint64_t>&, std::uint32_t, std::uint64_t,
                       std::uint64_t)>
        rec;
    std::map<std::uint32_t, std::uint64_t> counts;
    rec = [&](std::map<std::uint32_t, std::uint64_t>& c, std::uint32_t k, std::uint64_t used,
              std::uint64_t weighted) {
        if (k == max_vertices) {
            if (used >= 1 && used > weighted) {
                const DegreeSequence ds = DegreeSequence::from_map(c, used - weighted);
                if (ds.max_degree() < 2) return;
                for (std::uint32_t q : {1u, 2u}) {
                    const Lemma3Report rep = lemma3_exact_check(ds, q, {});
                    rows += rep.checked;
                    skipped += rep.skipped_hypothesis;
                    if (rep.violations != 0) ok = false;
                }
            }
            return;
        }
        for (std::uint64_t dk = 0; used + dk <= max_vertices; ++dk) {
            if (weighted + k * dk > max_vertices) break;
            if (dk) c[k] = dk;
            rec(c, k + 1, used + dk, weighted + k * dk);
            c.erase(k);
        }
    };
    rec(counts, 0, 0, 0);
    std::printf("lemma3: %s (%" PRIu64 " configurations, %" PRIu64
                " outside the q=2 hypothesis)\n",
                ok ? "PASS" : "FAIL", rows, skipped);
    return ok ? 0 : 1;
}

int cmd_verify_tails(const DegreeSource& src, const McOptions& opt, const std::string& out,
                     const std::string& format) {
    const DegreeSequence ds = src.degree_sequence();
    McOptions o = opt;
    const TailCheckReport eq1 = check_bridge_min_tail(ds, 0.5, {1.0, 2.0, 4.0}, o);
    o.seed = opt.seed + 1;
    const TailCheckReport prop1 =
        check_luka_increment_moment(ds, std::nullopt, 0.2, 0.4, {1.0, 2.0, 3.0, 6.0, 8.0}, o);
    o.seed = opt.seed + 2;
    const TailCheckReport lr = check_lr_tail(ds, {0.5, 1.0, 2.0}, o);
    bool ok = eq1.pass && prop1.pass && lr.pass;
    emit_report(eq1, out.empty() ? "" : out + ".bridge-min." + format, format);
    emit_report(prop1, out.empty() ? "" : out + ".increments." + format, format);
    emit_report(lr, out.empty() ? "" : out + ".lr." + format, format);
    if (ds.rho() == 1) {
        o.seed = opt.seed + 3;
        const TailCheckReport wid = check_width_tail(ds, {1.0, 2.0, 4.0}, o);
        emit_report(wid, out.empty() ? "" : out + ".width." + format, format);
        ok = ok && wid.pass;
        o.seed = opt.seed + 4;
        const TailCheckReport ht =
            check_typical_height_tail(ds, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, o);
        emit_report(ht, out.empty() ? "" : out + ".height." + format, format);
        ok = ok && ht.pass;
    }
    return ok ? 0 : 1;
}

int cmd_verify_distance_law(const DegreeSource& src, std::uint64_t maps, std::uint64_t pairs,
                            std::uint64_t seed) {
    const FaceDegreeSequence fds = src.face_sequence();
    const DegreeSequence ds = face_to_forest_degrees(fds);
    std::uint64_t law_violations = 0, bound_violations = 0, invariant_failures = 0;
    for (std::uint64_t i = 0; i < maps; ++i) {
        Rng rng = Rng::stream(seed, i);
        const LabelledForest lf = sample_labelled_forest(ds, rng);
        const PointedMap pm = forest_to_map(lf);
        if (!validate_map(pm.map, fds).empty()) ++invariant_failures;
        law_violations += verify_distance_law(lf, pm).violating_vertices.size();
        bound_violations += check_distance_bound(lf, pm, pairs, rng).violations;
    }
    const bool ok = !law_violations && !bound_violations && !invariant_failures;
    std::printf("distance-law: %s (%" PRIu64 " maps: %" PRIu64 " law, %" PRIu64
                " D_L bound, %" PRIu64 " invariant failures)\n",
                ok ? "PASS" : "FAIL", maps, law_violations, bound_violations,
                invariant_failures);
    return ok ? 0 : 1;
}

int cmd_verify_holder(const DegreeSource& src, std::uint32_t q, const McOptions& opt) {
    const DegreeSequence ds = src.degree_sequence();
    const HolderReport rep =
        holder_moment_scan(ds, q, {1.0 / 64, 1.0 / 32, 1.0 / 16, 1.0 / 8, 1.0 / 4}, opt);
    std::printf("holder q=%u: slope=%.3f r2=%.3f stationarity_z=%.2f\n", q, rep.fit.slope,
                rep.fit.r_squared, rep.stationarity_z);
    for (std::size_t i = 0; i < rep.gaps.size(); ++i)
        std::printf("  gap=%.5f moment=%.6g\n", rep.gaps[i], rep.moments[i]);
    return rep.fit.slope > 0.0 ? 0 : 1;
}

int cmd_verify_en_event(const DegreeSource& src, const std::string& sizes_csv,
                        const McOptions& opt) {
    bool ok = true;
    double prev = -1.0;
    for (std::uint64_t n : parse_sizes(sizes_csv)) {
        DegreeSource s = src;
        s.n = n;
        McOptions o = opt;
        o.seed = opt.seed + n;
        const FrequencyReport rep = check_en_event(s.degree_sequence(), o);
        std::printf("n=%-8" PRIu64 " P(E_n)=%.4f ci=[%.4f,%.4f] l_n=%.1f\n", n, rep.phat,
                    rep.ci_low, rep.ci_high, rep.l_n);
        if (rep.phat + 1e-12 < prev) ok = false;
        prev = rep.phat;
    }
    ok = ok && prev >= 0.95;
    std::printf("en-event: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int cmd_verify_lambda_zeta(const DegreeSource& src, const std::string& sizes_csv,
                           const McOptions& opt) {
    bool ok = true;
    double prev = 1e300;
    for (std::uint64_t n : parse_sizes(sizes_csv)) {
        DegreeSource s = src;
        s.n = n;
        McOptions o = opt;
        o.seed = opt.seed + n;
        const DeviationReport rep = check_lambda_zeta(s.degree_sequence(), {-1}, o);
        std::printf("n=%-8" PRIu64 " median sup|Lambda/d - t| = %.5f (iqr %.5f..%.5f)\n", n,
                    rep.median, rep.q25, rep.q75);
        if (rep.median >= prev) ok = false;
        prev = rep.median;
    }
    std::printf("lambda-zeta: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int cmd_scaling(const DegreeSource& src, const std::string& sizes_csv,
                const std::string& pn_csv, std::uint64_t maps, std::uint64_t seed,
                const std::string& out) {
    const std::vector<std::uint64_t> sizes = parse_sizes(sizes_csv);
    std::vector<std::uint64_t> pn;
    if (!pn_csv.empty()) pn = parse_sizes(pn_csv);
    std::ostringstream csv;
    csv << "n,p,rho,sigma,scale,two_point_median,two_point_q25,two_point_q75,diameter_lb_median,"
           "holder_slope\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        DegreeSource s = src;
        s.n = sizes[i];
        if (!pn.empty()) s.p = static_cast<std::uint32_t>(pn[std::min(i, pn.size() - 1)]);
        const DegreeSequence ds = s.degree_sequence();
        const double scale =
            pn.empty() ? std::sqrt(ds.sigma() + static_cast<double>(ds.rho()))
                       : std::pow(static_cast<double>(s.p) * (s.p - 1) *
                                      static_cast<double>(s.n),
                                  0.25);
        std::vector<double> tp, dia;
        for (std::uint64_t rep = 0; rep < maps; ++rep) {
            Rng rng = Rng::stream(seed + rep, sizes[i]);
            const PointedMap pm = forest_to_map(sample_labelled_forest(ds, rng));
            const ProfileReport prof = distance_profile(pm, 256, scale, rng);
            tp.push_back(prof.median);
            dia.push_back(prof.diameter_lb);
        }
        McOptions hopt;
        hopt.replicas = std::max<std::uint64_t>(50, maps);
        hopt.seed = seed + 7777 + sizes[i];
        const HolderReport hr =
            holder_moment_scan(ds, 8, {1.0 / 32, 1.0 / 16, 1.0 / 8, 1.0 / 4}, hopt);
        csv << sizes[i] << ',' << s.p << ',' << ds.rho() << ',' << ds.sigma() << ',' << scale
            << ',' << quantile(tp, 0.5) << ',' << quantile(tp, 0.25) << ',' << quantile(tp, 0.75)
            << ',' << quantile(dia, 0.5) << ',' << hr.fit.slope << '\n';
    }
    if (!out.empty())
        write_file(out_dir() + out, csv.str());
    else
        std::fputs(csv.str().c_str(), stdout);
    return 0;
}

int cmd_enumerate(const std::string& what, const DegreeSource& src, std::uint32_t k,
                  std::uint64_t limit) {
    std::uint64_t emitted = 0;
    if (what == "label-bridges") {
        for (const auto& lb : enumerate_label_bridges(k)) {
            if (emitted++ >= limit) break;
            std::printf("%s\n", Json(lb.values).dump().c_str());
        }
        return 0;
    }
    const DegreeSequence ds = src.degree_sequence();
    EnumerationBudget budget;
    budget.max_items = limit;
    try {
        if (what == "forests")
            enumerate_forests(ds, budget, [&](const Forest& f) {
                ++emitted;
                std::printf("%s\n", to_json(f).dump().c_str());
            });
        else if (what == "labelled-forests")
            enumerate_labelled_forests(ds, budget, [&](const LabelledForest& lf) {
                ++emitted;
                std::printf("%s\n", to_json(lf).dump().c_str());
            });
        else
            throw std::invalid_argument("enumerate: unknown kind '" + what + "'");
    } catch (const BudgetExceeded&) {
        std::fprintf(stderr, "enumeration stopped at limit %" PRIu64 "\n", limit);
    }
    return 0;
}

int cmd_spine(const DegreeSource& src, std::uint64_t h, std::uint64_t draws,
              std::uint64_t seed) {
    const DegreeSequence ds = src.degree_sequence();
    Rng rng = Rng::stream(seed, 0);
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const SpineSample s = sample_spine(ds, h, rng);
        for (std::uint32_t x : s.xi) {
            sum += x - 1.0;
            sumsq += (x - 1.0) * (x - 1.0);
        }
    }
    const double n = static_cast<double>(draws * h);
    const double mean = sum / n;
    const double target = ds.sigma2() / static_cast<double>(ds.edges());
    std::printf("draws=%" PRIu64 " h=%" PRIu64 " mean(xi-1)=%.5f target sigma^2/eps=%.5f\n",
                draws, h, mean, target);
    std::printf("var(xi-1)=%.5f bound Delta sigma^2/eps=%.5f\n", sumsq / n - mean * mean,
                static_cast<double>(ds.max_degree()) * target);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform bipartite planar maps with prescribed face degrees"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::uint64_t seed = 1, replicas = 10000, maps = 1000, pairs = 1000, trials = 100000;
    std::uint64_t max_vertices = 7, h = 1, draws = 100000, limit = 1000000;
    unsigned jobs = 1;
    std::uint32_t k = 3, q = 8;
    std::string out, format = "json", sizes = "100,1000,10000", pn, what = "forests";

    DegreeSource src;

    auto* sample = app.add_subcommand("sample", "sample a labelled forest and its map");
    src.add_options(sample);
    sample->add_option("--seed", seed);
    sample->add_option("--out", out, "output file prefix");

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* v_counts = verify->add_subcommand("counts", "exact counting oracle");
    v_counts->add_option("--max-vertices", max_vertices);
    auto* v_unif = verify->add_subcommand("uniformity", "chi-square sampler checks");
    v_unif->add_option("--trials", trials);
    v_unif->add_option("--seed", seed);
    auto* v_l3 = verify->add_subcommand("lemma3", "exact spinal inequality");
    v_l3->add_option("--max-vertices", max_vertices);
    auto* v_tails = verify->add_subcommand("tails", "Monte Carlo tail bounds");
    src.add_options(v_tails);
    v_tails->add_option("--replicas", replicas);
    v_tails->add_option("--seed", seed);
    v_tails->add_option("--jobs", jobs);
    v_tails->add_option("--out", out);
    v_tails->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    auto* v_law = verify->add_subcommand("distance-law", "distance law and D_L bound");
    src.add_options(v_law);
    v_law->add_option("--maps", maps);
    v_law->add_option("--pairs", pairs);
    v_law->add_option("--seed", seed);
    auto* v_holder = verify->add_subcommand("holder", "label increment moment scan");
    src.add_options(v_holder);
    v_holder->add_option("--q", q);
    v_holder->add_option("--replicas", replicas);
    v_holder->add_option("--seed", seed);
    v_holder->add_option("--jobs", jobs);
    auto* v_en = verify->add_subcommand("en-event", "long-branch first-child event");
    src.add_options(v_en);
    v_en->add_option("--sizes", sizes);
    v_en->add_option("--replicas", replicas);
    v_en->add_option("--seed", seed);
    v_en->add_option("--jobs", jobs);
    auto* v_lz = verify->add_subcommand("lambda-zeta", "jump count convergence");
    src.add_options(v_lz);
    v_lz->add_option("--sizes", sizes);
    v_lz->add_option("--replicas", replicas);
    v_lz->add_option("--seed", seed);
    v_lz->add_option("--jobs", jobs);

    auto* scaling = app.add_subcommand("scaling", "rescaled distance tables across sizes");
    src.add_options(scaling);
    scaling->add_option("--sizes", sizes);
    scaling->add_option("--pn", pn, "per-size p ladder (uses (p(p-1)n)^{1/4} scaling)");
    scaling->add_option("--maps", maps);
    scaling->add_option("--seed", seed);
    scaling->add_option("--out", out);

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive small-instance enumeration");
    src.add_options(enumerate);
    enumerate->add_option("kind", what)->check(CLI::IsMember({"forests", "label-bridges",
                                                              "labelled-forests"}));
    enumerate->add_option("--k", k, "bridge length for label-bridges");
    enumerate->add_option("--limit", limit);

    auto* spine = app.add_subcommand("spine", "urn draws along ancestral lines");
    src.add_options(spine);
    spine->add_option("--h", h);
    spine->add_option("--draws", draws);
    spine->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) return cmd_sample(src, seed, out);
        if (v_counts->parsed()) return cmd_verify_counts(max_vertices);
        if (v_unif->parsed()) return cmd_verify_uniformity(trials, seed);
        if (v_l3->parsed()) return cmd_verify_lemma3(max_vertices);
        McOptions opt;
        opt.replicas = replicas;
        opt.seed = seed;
        opt.jobs = jobs;
        if (v_tails->parsed()) return cmd_verify_tails(src, opt, out, format);
        if (v_law->parsed()) return cmd_verify_distance_law(src, maps, pairs, seed);
        if (v_holder->parsed()) return cmd_verify_holder(src, q, opt);
        if (v_en->parsed()) return cmd_verify_en_event(src, sizes, opt);
        if (v_lz->parsed()) return cmd_verify_lambda_zeta(src, sizes, opt);
        if (scaling->parsed()) return cmd_scaling(src, sizes, pn, maps, seed, out);
        if (enumerate->parsed()) return cmd_enumerate(what, src, k, limit);
        if (spine->parsed()) return cmd_spine(src, h, draws, seed);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
