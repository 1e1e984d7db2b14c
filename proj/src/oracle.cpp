#include "pmap/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "pmap/mathutil.hpp"

namespace pmap {

namespace {

void check_budget(const DegreeSequence& ds, const EnumerationBudget& budget) {
    if (ds.vertices() > budget.max_vertices)
        throw BudgetExceeded("enumeration: vertex budget exceeded");
}

std::string content_key(const ContentVector& c) {
    std::ostringstream os;
    for (const auto& [k, j] : c.pairs) os << k << ',' << j << ';';
    return os.str();
}

}  // namespace

void enumerate_forests(const DegreeSequence& ds, const EnumerationBudget& budget,
                       const std::function<void(const Forest&)>& fn) {
    check_budget(ds, budget);
    const std::uint32_t n = static_cast<std::uint32_t>(ds.vertices());
    const std::int64_t target = -static_cast<std::int64_t>(ds.rho());

    std::vector<std::pair<std::int64_t, std::uint64_t>> remaining;  // jump -> multiplicity
    for (const auto& [k, dk] : ds.counts())
        remaining.emplace_back(static_cast<std::int64_t>(k) - 1, dk);

    LukasiewiczPath w;
    w.rho = static_cast<std::uint32_t>(ds.rho());
    w.values.assign(n + 1, 0);
    std::uint64_t emitted = 0;

    std::function<void(std::uint32_t)> rec = [&](std::uint32_t pos) {
        if (pos == n + 1) {
            if (++emitted > budget.max_items)
                throw BudgetExceeded("enumeration: item budget exceeded");
            fn(lukasiewicz_to_forest(w));
            return;
        }
        for (auto& [jump, mult] : remaining) {
            if (mult == 0) continue;
            const std::int64_t value = w.values[pos - 1] + jump;
            // first passage: may touch -rho only at the final step
            if (value <= target && pos < n) continue;
            if (pos == n && value != target) continue;
            --mult;
            w.values[pos] = value;
            rec(pos + 1);
            ++mult;
        }
    };
    rec(1);
}

std::vector<LabelBridge> enumerate_label_bridges(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("enumerate_label_bridges: k must be >= 1");
    std::vector<LabelBridge> out;
    std::vector<std::int64_t> values(k);
    std::function<void(std::uint32_t, std::int64_t)> rec = [&](std::uint32_t i,
                                                               std::int64_t prev) {
        const std::int64_t steps_left = static_cast<std::int64_t>(k) - i;
        if (steps_left == 0) {
            if (prev == 0) out.push_back(LabelBridge{values});
            return;
        }
        // increments >= -1 and the walk must return to 0
        for (std::int64_t inc = -1; prev + inc <= steps_left - 1; ++inc) {
            values[i] = prev + inc;
            rec(i + 1, prev + inc);
        }
    };
    rec(0, 0);
    return out;
}

void enumerate_labelled_forests(const DegreeSequence& ds, const EnumerationBudget& budget,
                                const std::function<void(const LabelledForest&)>& fn) {
    check_budget(ds, budget);
    std::map<std::uint32_t, std::vector<LabelBridge>> bridges;
    bridges[static_cast<std::uint32_t>(ds.rho())] =
        enumerate_label_bridges(static_cast<std::uint32_t>(ds.rho()));
    for (const auto& [k, dk] : ds.counts()) {
        (void)dk;
        if (k >= 1 && !bridges.count(k)) bridges[k] = enumerate_label_bridges(k);
    }
    std::uint64_t emitted = 0;
    enumerate_forests(ds, budget, [&](const Forest& f) {
        // slots: the virtual extra root (over the tree roots), then every
        // internal vertex
        std::vector<std::uint32_t> slot_vertex;  // 0 = virtual root
        slot_vertex.push_back(0);
        for (std::uint32_t v = 1; v <= f.size(); ++v)
            if (!f.is_leaf(v)) slot_vertex.push_back(v);

        LabelledForest lf{f, std::vector<std::int64_t>(f.size() + 1, 0)};
        std::function<void(std::size_t)> assign = [&](std::size_t slot) {
            if (slot == slot_vertex.size()) {
                if (++emitted > budget.max_items)
                    throw BudgetExceeded("enumeration: item budget exceeded");
                fn(lf);
                return;
            }
            const std::uint32_t v = slot_vertex[slot];
            const std::uint32_t k =
                (slot == 0) ? static_cast<std::uint32_t>(f.rho()) : f.child_count(v);
            for (const LabelBridge& lb : bridges.at(k)) {
                if (slot == 0) {
                    for (std::uint32_t r = 1, seen = 0; r <= f.size(); ++r)
                        if (f.is_root(r)) lf.labels[r] = lb.values[seen++];
                } else {
                    for (std::uint32_t j = 1; j <= k; ++j)
                        lf.labels[f.child(v, j)] = lf.labels[v] + lb.values[j - 1];
                }
                assign(slot + 1);
            }
        };
        assign(0);
    });
}

UniformityReport uniformity_test(const std::function<std::string(Rng&)>& draw,
                                 const std::vector<std::string>& outcome_keys,
                                 std::uint64_t trials, Rng& rng) {
    UniformityReport r;
    r.trials = trials;
    r.outcomes = outcome_keys.size();
    std::map<std::string, std::uint64_t> counts;
    for (const auto& key : outcome_keys) counts[key] = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::string key = draw(rng);
        auto it = counts.find(key);
        if (it == counts.end()) {
            r.foreign_outcome = true;
            r.p_value = 0.0;
            return r;
        }
        ++it->second;
    }
    const double expected = static_cast<double>(trials) / static_cast<double>(r.outcomes);
    for (const auto& [key, obs] : counts) {
        const double d = static_cast<double>(obs) - expected;
        r.chi2 += d * d / expected;
    }
    r.p_value = chi2_sf(r.chi2, static_cast<double>(r.outcomes - 1));
    r.observed = std::move(counts);
    return r;
}

BigRat spine_prefix_probability(
    const DegreeSequence& ds,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    BigRat p(1);
    std::map<std::uint32_t, std::uint64_t> used;
    std::uint64_t drawn = 0;
    for (const auto& [k, j] : pairs) {
        if (k < 1 || j < 1 || j > k) throw std::invalid_argument("spine pairs: need 1 <= j <= k");
        const std::uint64_t balls = static_cast<std::uint64_t>(k) * ds.count(k);
        const std::uint64_t left = balls > used[k] ? balls - used[k] : 0;
        if (left == 0 || drawn >= ds.edges()) return BigRat(0);
        p *= BigRat(BigInt(static_cast<unsigned long>(left)),
                    BigInt(static_cast<unsigned long>(ds.edges() - drawn)));
        p /= k;  // chi uniform in 1..k
        ++used[k];
        ++drawn;
    }
    p.canonicalize();
    return p;
}

Lemma3Report lemma3_exact_check(const DegreeSequence& ds, std::uint32_t q,
                                const EnumerationBudget& budget) {
    if (ds.max_degree() < 2)
        throw std::invalid_argument("lemma3_exact_check: requires Delta >= 2");
    if (q < 1 || q > 2) throw std::invalid_argument("lemma3_exact_check: q must be 1 or 2");

    const BigInt n_forests = count_forests(ds);
    const std::uint64_t upsilon = ds.vertices();

    // bucket key: (content, b, c) -> tuple count
    struct Bucket {
        ContentVector content;
        std::uint32_t b, c;
        std::uint64_t count = 0;
    };
    std::map<std::string, Bucket> buckets;

    enumerate_forests(ds, budget, [&](const Forest& f) {
        if (q == 1) {
            for (std::uint32_t x = 1; x <= f.size(); ++x) {
                ContentVector cv = content_of(f, x);
                std::string key = content_key(cv) + "|0|1";
                auto& bucket = buckets[key];
                if (bucket.count == 0) bucket = Bucket{std::move(cv), 0, 1, 0};
                bucket.count++;
            }
        } else {
            for (std::uint32_t x1 = 1; x1 <= f.size(); ++x1) {
                for (std::uint32_t x2 = 1; x2 <= f.size(); ++x2) {
                    const ReducedForest rf = reduce_forest(f, {x1, x2});
                    if (rf.leaves != q) continue;  // the lemma's event has q leaves
                    std::ostringstream key;
                    key << content_key(rf.content) << '|' << rf.branch_point_count() << '|'
                        << rf.trees;
                    auto& bucket = buckets[key.str()];
                    if (bucket.count == 0)
                        bucket = Bucket{rf.content, rf.branch_point_count(), rf.trees, 0};
                    bucket.count++;
                }
            }
        }
    });

    Lemma3Report report;
    const BigInt sigma2 = ds.sigma2_exact();
    for (auto& [key, bucket] : buckets) {
        (void)key;
        Lemma3Row row;
        row.content = bucket.content;
        row.b = bucket.b;
        row.c = bucket.c;

        BigInt denom = n_forests;
        for (std::uint32_t i = 0; i < q; ++i) denom *= static_cast<unsigned long>(upsilon);
        row.lhs = BigRat(BigInt(static_cast<unsigned long>(bucket.count)), denom);
        row.lhs.canonicalize();

        const std::uint64_t h = bucket.content.pairs.size();
        // X = rho + (q-1) Delta + sum (k_i - 1)
        BigInt x_term = BigInt(static_cast<unsigned long>(ds.rho())) +
                        BigInt(static_cast<unsigned long>(ds.max_degree())) * (q - 1);
        for (const auto& [k, j] : bucket.content.pairs) {
            (void)j;
            x_term += k - 1;
        }
        const BigRat prob = spine_prefix_probability(ds, bucket.content.pairs);
        // RHS = q^2 2^{q-1} sigma^{q+b-c} rho^{c-1} X / upsilon^{q+b} * prob;
        // compare squares so sigma appears as sigma^2 exactly
        BigInt num = BigInt(q) * q;
        num *= num;                                       // q^4
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),    // * 2^{2(q-1)}
                     2 * (q - 1));
        BigInt sig_pow;
        mpz_pow_ui(sig_pow.get_mpz_t(), sigma2.get_mpz_t(), q + bucket.b - bucket.c);
        num *= sig_pow;
        BigInt rho_pow;
        BigInt rho_big(static_cast<unsigned long>(ds.rho()));
        mpz_pow_ui(rho_pow.get_mpz_t(), rho_big.get_mpz_t(), 2 * (bucket.c - 1));
        num *= rho_pow;
        num *= x_term * x_term;
        BigInt ups_pow;
        BigInt ups_big(static_cast<unsigned long>(upsilon));
        mpz_pow_ui(ups_pow.get_mpz_t(), ups_big.get_mpz_t(), 2 * (q + bucket.b));
        row.rhs_squared = BigRat(num, ups_pow) * prob * prob;
        row.rhs_squared.canonicalize();

        row.hypothesis_ok = (q == 1) || (4 * h <= upsilon && 4ull * q <= upsilon);
        row.bound_ok = (row.lhs * row.lhs <= row.rhs_squared);

        ++report.checked;
        if (!row.hypothesis_ok) ++report.skipped_hypothesis;
        if (!row.bound_ok) {
            ++report.violations_unconditional;
            if (row.hypothesis_ok) ++report.violations;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::map<std::uint64_t, BigRat> exact_tail_table(const DegreeSequence& ds,
                                                 const std::string& functional,
                                                 const EnumerationBudget& budget) {
    if (functional != "lr" && functional != "height" && functional != "width")
        throw std::invalid_argument("exact_tail_table: unknown functional '" + functional + "'");
    std::map<std::uint64_t, std::uint64_t> tally;
    std::uint64_t forests = 0;
    enumerate_forests(ds, budget, [&](const Forest& f) {
        ++forests;
        if (functional == "width") {
            const HeightProcess h = height_process(f);
            std::map<std::uint32_t, std::uint64_t> at_height;
            for (std::uint32_t v : h.values)
                if (v >= 1) at_height[v]++;
            std::uint64_t wid = 0;
            for (const auto& [lvl, cnt] : at_height) wid = std::max(wid, cnt);
            tally[wid]++;
            return;
        }
        const HeightProcess h = height_process(f);
        for (std::uint32_t x = 1; x <= f.size(); ++x)
            tally[functional == "lr" ? lr_counts(f, x).lr : h.values[x - 1]]++;
    });
    BigInt denom(static_cast<unsigned long>(forests));
    if (functional != "width") denom *= static_cast<unsigned long>(ds.vertices());
    std::map<std::uint64_t, BigRat> pmf;
    for (const auto& [value, cnt] : tally) {
        pmf[value] = BigRat(BigInt(static_cast<unsigned long>(cnt)), denom);
        pmf[value].canonicalize();
    }
    return pmf;
}

}  // namespace pmap
