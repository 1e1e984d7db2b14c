#include "pmap/forest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pmap {

Forest::Forest(std::vector<std::uint32_t> parent, std::vector<std::uint32_t> child_count,
               std::uint32_t rho)
    : parent_(std::move(parent)), k_(std::move(child_count)), rho_(rho) {
    const std::uint32_t n = static_cast<std::uint32_t>(parent_.size()) - 1;
    if (k_.size() != parent_.size())
        throw std::invalid_argument("forest: parent/child_count size mismatch");

    tree_.assign(n + 1, 0);
    chi_.assign(n + 1, 0);
    kid_off_.assign(n + 2, 0);
    for (std::uint32_t v = 1; v <= n; ++v) kid_off_[v + 1] = kid_off_[v] + k_[v];
    kids_.assign(kid_off_[n + 1], 0);

    std::vector<std::uint32_t> filled(n + 1, 0);
    std::uint32_t roots = 0;
    for (std::uint32_t v = 1; v <= n; ++v) {
        const std::uint32_t p = parent_[v];
        if (p == 0) {
            ++roots;
            tree_[v] = roots;
            chi_[v] = roots;
        } else {
            if (p >= v) throw std::invalid_argument("forest: parent must precede child");
            tree_[v] = tree_[p];
            chi_[v] = ++filled[p];
            if (filled[p] > k_[p]) throw std::invalid_argument("forest: too many children");
            kids_[kid_off_[p] + filled[p] - 1] = v;
        }
    }
    for (std::uint32_t v = 1; v <= n; ++v)
        if (filled[v] != k_[v]) throw std::invalid_argument("forest: missing children");
    if (roots != rho_) throw std::invalid_argument("forest: root count does not match rho");
}

void Forest::check(std::uint32_t v) const {
    if (v == 0 || v > size()) throw std::invalid_argument("forest: invalid vertex id");
}

DegreeSequence Forest::degree_sequence() const {
    std::map<std::uint32_t, std::uint64_t> tally;
    for (std::uint32_t v = 1; v <= size(); ++v) tally[k_[v]]++;
    return DegreeSequence::from_map(tally, rho_);
}

std::optional<PathDefect> check_lukasiewicz(const std::vector<std::int64_t>& values,
                                            std::uint32_t rho) {
    if (values.empty() || values[0] != 0) return PathDefect{0, "path must start at 0"};
    const std::size_t n = values.size() - 1;
    if (n == 0) return PathDefect{0, "path must have at least one jump"};
    const std::int64_t target = -static_cast<std::int64_t>(rho);
    for (std::size_t j = 1; j <= n; ++j) {
        if (values[j] - values[j - 1] < -1) return PathDefect{j, "jump below -1"};
        if (j < n && values[j] <= target) return PathDefect{j, "hits -rho before the last step"};
    }
    if (values[n] != target) return PathDefect{n, "terminal value is not -rho"};
    return std::nullopt;
}

LukasiewiczPath forest_to_lukasiewicz(const Forest& f) {
    LukasiewiczPath w;
    w.rho = f.rho();
    w.values.resize(f.size() + 1);
    w.values[0] = 0;
    for (std::uint32_t v = 1; v <= f.size(); ++v)
        w.values[v] = w.values[v - 1] + static_cast<std::int64_t>(f.child_count(v)) - 1;
    return w;
}

Forest lukasiewicz_to_forest(const LukasiewiczPath& w) {
    if (auto defect = check_lukasiewicz(w.values, w.rho)) {
        throw std::invalid_argument("lukasiewicz_to_forest: " + defect->reason + " at index " +
                                    std::to_string(defect->index));
    }
    const std::uint32_t n = w.size();
    std::vector<std::uint32_t> parent(n + 1, 0), k(n + 1, 0);
    // stack of (vertex, children still to attach)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    for (std::uint32_t v = 1; v <= n; ++v) {
        while (!stack.empty() && stack.back().second == 0) stack.pop_back();
        k[v] = static_cast<std::uint32_t>(w.jump(v) + 1);
        if (!stack.empty()) {
            parent[v] = stack.back().first;
            --stack.back().second;
        }
        stack.emplace_back(v, k[v]);
    }
    return Forest(std::move(parent), std::move(k), w.rho);
}

HeightProcess height_process(const Forest& f) {
    HeightProcess h;
    h.values.resize(f.size());
    for (std::uint32_t v = 1; v <= f.size(); ++v)
        h.values[v - 1] = f.is_root(v) ? 0 : h.values[f.parent(v) - 1] + 1;
    return h;
}

LRCounts lr_counts(const Forest& f, std::uint32_t x) {
    f.check(x);
    LRCounts c;
    std::uint32_t v = x;
    while (!f.is_root(v)) {
        const std::uint32_t p = f.parent(v);
        c.left += f.sibling_rank(v) - 1;
        c.right += f.child_count(p) - f.sibling_rank(v);
        v = p;
    }
    c.lr = c.left + c.right;
    return c;
}

namespace {
bool in_set(const std::vector<std::int64_t>& A, std::int64_t v) {
    return std::binary_search(A.begin(), A.end(), v);
}
}  // namespace

std::uint64_t lambda_jumps(const LukasiewiczPath& w, const std::vector<std::int64_t>& A,
                           double r) {
    if (r < 0.0 || r > static_cast<double>(w.size()))
        throw std::invalid_argument("lambda_jumps: r out of range");
    const std::uint32_t m = static_cast<std::uint32_t>(std::floor(r));
    std::uint64_t count = 0;
    for (std::uint32_t j = 1; j <= m; ++j)
        if (in_set(A, w.jump(j))) ++count;
    return count;
}

std::uint64_t zeta_jumps(const LukasiewiczPath& w, const std::vector<std::int64_t>& A, double p) {
    const std::uint64_t target = static_cast<std::uint64_t>(std::floor(p));
    if (target == 0) return 0;
    std::uint64_t count = 0;
    for (std::uint32_t j = 1; j <= w.size(); ++j) {
        if (in_set(A, w.jump(j))) {
            if (++count == target) return j;
        }
    }
    throw std::invalid_argument("zeta_jumps: fewer than floor(p) jumps with value in A");
}

RangeMin::RangeMin(const std::vector<std::int64_t>& a) {
    const std::size_t n = a.size();
    log2_.assign(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
    table_.push_back(a);
    for (std::uint32_t lvl = 1; (1u << lvl) <= n; ++lvl) {
        const std::size_t len = 1u << lvl;
        std::vector<std::int64_t> row(n - len + 1);
        for (std::size_t i = 0; i + len <= n; ++i)
            row[i] = std::min(table_[lvl - 1][i], table_[lvl - 1][i + len / 2]);
        table_.push_back(std::move(row));
    }
}

std::int64_t RangeMin::min(std::size_t lo, std::size_t hi) const {
    const std::uint32_t lvl = log2_[hi - lo + 1];
    return std::min(table_[lvl][lo], table_[lvl][hi + 1 - (1u << lvl)]);
}

Lemma1Report lemma1_check(const Forest& f) {
    Lemma1Report report;
    const LukasiewiczPath w = forest_to_lukasiewicz(f);
    const RangeMin rmq(w.values);
    // value at a vertex is W(v-1)
    auto at = [&](std::uint32_t v) { return w.values[v - 1]; };
    for (std::uint32_t x = 1; x <= f.size(); ++x) {
        const std::uint32_t k = f.child_count(x);
        if (k == 0) continue;
        if (at(f.child(x, k)) != at(x))
            report.violations.push_back({x, k, k, 1});
        for (std::uint32_t j = 1; j <= k; ++j) {
            for (std::uint32_t jp = j; jp <= k; ++jp) {
                ++report.pairs_checked;
                const std::uint32_t cj = f.child(x, j), cjp = f.child(x, jp);
                if (at(cjp) != rmq.min(cj - 1, cjp - 1))
                    report.violations.push_back({x, j, jp, 2});
                if (static_cast<std::int64_t>(jp - j) != at(cj) - at(cjp))
                    report.violations.push_back({x, j, jp, 3});
            }
        }
    }
    return report;
}

}  // namespace pmap
