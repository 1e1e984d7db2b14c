#include "pmap/sampler.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace pmap {

std::vector<std::int64_t> Bridge::partial_sums() const {
    std::vector<std::int64_t> b(jumps.size() + 1, 0);
    for (std::size_t i = 0; i < jumps.size(); ++i) b[i + 1] = b[i] + jumps[i];
    return b;
}

Bridge sample_bridge(const DegreeSequence& ds, Rng& rng) {
    Bridge b;
    b.rho = static_cast<std::uint32_t>(ds.rho());
    b.jumps.reserve(ds.vertices());
    for (const auto& [k, dk] : ds.counts())
        b.jumps.insert(b.jumps.end(), dk, static_cast<std::int64_t>(k) - 1);
    rng.shuffle(b.jumps);
    return b;
}

std::vector<std::uint32_t> good_shifts(const Bridge& b) {
    const auto sums = b.partial_sums();
    const std::int64_t min = *std::min_element(sums.begin() + 1, sums.end());
    std::vector<std::uint32_t> idx(b.rho, 0);
    for (std::uint32_t k = 1; k <= b.size(); ++k) {
        const std::int64_t excess = sums[k] - min;
        if (excess < b.rho && idx[static_cast<std::size_t>(excess)] == 0)
            idx[static_cast<std::size_t>(excess)] = k;
    }
    return idx;
}

LukasiewiczPath vervaat(const Bridge& b, std::uint32_t p, VervaatShift* shift) {
    if (p >= b.rho) throw std::invalid_argument("vervaat: p out of range");
    const auto sums = b.partial_sums();
    const std::int64_t min = *std::min_element(sums.begin() + 1, sums.end());
    std::uint32_t i = 0;
    for (std::uint32_t k = 1; k <= b.size(); ++k) {
        if (sums[k] == min + static_cast<std::int64_t>(p)) {
            i = k;
            break;
        }
    }
    if (shift) *shift = VervaatShift{p, i};
    LukasiewiczPath w;
    w.rho = b.rho;
    const std::uint32_t n = b.size();
    w.values.resize(n + 1);
    w.values[0] = 0;
    for (std::uint32_t t = 1; t <= n; ++t)
        w.values[t] = w.values[t - 1] + b.jumps[(i + t - 1) % n];
    return w;
}

Forest sample_forest(const DegreeSequence& ds, Rng& rng) {
    const Bridge b = sample_bridge(ds, rng);
    const std::uint32_t p = static_cast<std::uint32_t>(rng.below(ds.rho()));
    return lukasiewicz_to_forest(vervaat(b, p));
}

LabelBridge sample_label_bridge(std::uint32_t k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("sample_label_bridge: k must be >= 1");
    // Uniform (k-1)-subset of {1..2k-1} marks the bars; gaps are the shifted
    // increments v_i = u_i + 1 >= 0 with sum k.
    LabelBridge lb;
    lb.values.resize(k);
    std::uint32_t need = k - 1;
    std::uint32_t slots = 2 * k - 1;
    std::uint32_t prev_bar = 0;  // virtual bar at slot 0
    std::uint32_t part = 0;
    std::int64_t value = 0;
    for (std::uint32_t s = 1; s <= 2 * k - 1 && part + 1 < k; ++s, --slots) {
        if (rng.below(slots) < need) {
            const std::int64_t v = static_cast<std::int64_t>(s - prev_bar) - 1;
            value += v - 1;
            lb.values[part++] = value;
            prev_bar = s;
            --need;
        }
    }
    const std::int64_t v = static_cast<std::int64_t>(2 * k - prev_bar) - 1;
    value += v - 1;
    lb.values[part++] = value;
    return lb;
}

std::int64_t LabelledForest::min_label() const {
    std::int64_t m = 0;  // the extra root carries label 0
    for (std::size_t v = 1; v < labels.size(); ++v) m = std::min(m, labels[v]);
    return m;
}

namespace {

bool is_label_bridge(const std::vector<std::int64_t>& incr) {
    std::int64_t prev = 0;
    for (const std::int64_t b : incr) {
        if (b - prev < -1) return false;
        prev = b;
    }
    return !incr.empty() && incr.back() == 0;
}

}  // namespace

bool valid_labelling(const LabelledForest& lf) {
    const Forest& f = lf.forest;
    std::vector<std::int64_t> incr;
    // tree roots against the extra root labelled 0
    incr.clear();
    for (std::uint32_t v = 1; v <= f.size(); ++v)
        if (f.is_root(v)) incr.push_back(lf.labels[v]);
    if (!is_label_bridge(incr)) return false;
    for (std::uint32_t v = 1; v <= f.size(); ++v) {
        const std::uint32_t k = f.child_count(v);
        if (k == 0) continue;
        incr.clear();
        for (std::uint32_t j = 1; j <= k; ++j)
            incr.push_back(lf.labels[f.child(v, j)] - lf.labels[v]);
        if (!is_label_bridge(incr)) return false;
    }
    return true;
}

LabelledForest sample_labelled_forest(const DegreeSequence& ds, Rng& rng) {
    LabelledForest lf{sample_forest(ds, rng), {}};
    const Forest& f = lf.forest;
    lf.labels.assign(f.size() + 1, 0);
    const LabelBridge roots = sample_label_bridge(f.rho(), rng);
    for (std::uint32_t v = 1; v <= f.size(); ++v)
        if (f.is_root(v)) lf.labels[v] = roots.values[f.sibling_rank(v) - 1];
    for (std::uint32_t v = 1; v <= f.size(); ++v) {
        const std::uint32_t k = f.child_count(v);
        if (k == 0) continue;
        const LabelBridge lb = sample_label_bridge(k, rng);
        for (std::uint32_t j = 1; j <= k; ++j)
            lf.labels[f.child(v, j)] = lf.labels[v] + lb.values[j - 1];
    }
    return lf;
}

std::vector<std::int64_t> label_process(const LabelledForest& lf) {
    std::vector<std::int64_t> L(lf.forest.size() + 1, 0);
    for (std::uint32_t v = 1; v <= lf.forest.size(); ++v) L[v] = lf.labels[v];
    return L;
}

SpineSample sample_spine(const DegreeSequence& ds, std::uint64_t h, Rng& rng) {
    if (h > ds.edges()) throw std::invalid_argument("sample_spine: h exceeds the urn size");
    std::vector<std::uint32_t> urn;
    urn.reserve(ds.edges());
    for (const auto& [k, dk] : ds.counts()) {
        if (k == 0) continue;
        urn.insert(urn.end(), static_cast<std::size_t>(k) * dk, k);
    }
    SpineSample s;
    s.xi.resize(h);
    s.chi.resize(h);
    for (std::uint64_t i = 0; i < h; ++i) {
        const std::uint64_t j = i + rng.below(urn.size() - i);
        std::swap(urn[i], urn[j]);
        s.xi[i] = urn[i];
        s.chi[i] = 1 + static_cast<std::uint32_t>(rng.below(urn[i]));
    }
    return s;
}

ContentVector content_of(const Forest& f, std::uint32_t x) {
    f.check(x);
    ContentVector c;
    std::uint32_t v = x;
    while (!f.is_root(v)) {
        c.pairs.emplace_back(f.child_count(f.parent(v)), f.sibling_rank(v));
        v = f.parent(v);
    }
    std::reverse(c.pairs.begin(), c.pairs.end());
    return c;
}

ReducedForest reduce_forest(const Forest& f, const std::vector<std::uint32_t>& xs) {
    if (xs.empty()) throw std::invalid_argument("reduce_forest: empty vertex list");
    std::set<std::uint32_t> marked;
    for (std::uint32_t x : xs) {
        f.check(x);
        std::uint32_t v = x;
        while (v != 0 && marked.insert(v).second) v = f.parent(v);
    }
    // kept children per marked vertex, in lexicographic (= sibling) order
    std::map<std::uint32_t, std::vector<std::uint32_t>> kept;
    std::set<std::uint32_t> roots;
    for (std::uint32_t v : marked) {
        if (f.is_root(v))
            roots.insert(v);
        else
            kept[f.parent(v)].push_back(v);
    }
    ReducedForest r;
    r.trees = static_cast<std::uint32_t>(roots.size());
    for (std::uint32_t v : marked) {
        const auto it = kept.find(v);
        const std::size_t deg = (it == kept.end()) ? 0 : it->second.size();
        if (deg == 0) ++r.leaves;
        if (deg >= 2) {
            ReducedForest::BranchPoint bp;
            bp.vertex = v;
            bp.total_children = f.child_count(v);
            bp.kept_children = static_cast<std::uint32_t>(deg);
            for (std::uint32_t c : it->second) bp.positions.push_back(f.sibling_rank(c));
            r.branch_points.push_back(std::move(bp));
        }
    }
    // content pairs: children of single-child vertices of the reduced forest
    for (std::uint32_t v : marked) {
        if (f.is_root(v)) continue;
        const auto it = kept.find(f.parent(v));
        if (it != kept.end() && it->second.size() == 1)
            r.content.pairs.emplace_back(f.child_count(f.parent(v)), f.sibling_rank(v));
    }
    return r;
}

}  // namespace pmap
