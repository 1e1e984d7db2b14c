#include "pmap/degree.hpp"

#include <algorithm>
#include <cmath>

namespace pmap {

DegreeSequence::DegreeSequence(Counts counts, std::uint64_t rho)
    : counts_(std::move(counts)), rho_(rho) {
    std::uint64_t weighted = 0;  // sum k d(k)
    std::uint32_t prev_k = 0;
    bool first = true;
    for (const auto& [k, dk] : counts_) {
        if (dk == 0) throw std::invalid_argument("degree sequence: zero count entry");
        if (!first && k <= prev_k)
            throw std::invalid_argument("degree sequence: keys must be strictly increasing");
        first = false;
        prev_k = k;
        upsilon_ += dk;
        weighted += static_cast<std::uint64_t>(k) * dk;
        if (k >= 1) {
            sigma2_ += BigInt(k) * (k - 1) * BigInt(static_cast<unsigned long>(dk));
            delta_ = k;
        }
    }
    if (upsilon_ == 0) throw std::invalid_argument("degree sequence: empty");
    // rho = sum (1-k) d(k) = upsilon - sum k d(k)
    if (weighted + rho_ != upsilon_ || rho_ == 0)
        throw std::invalid_argument(
            "degree sequence: rho must equal sum_k (1-k) d(k) and be positive");
    epsilon_ = upsilon_ - rho_;
}

DegreeSequence DegreeSequence::from_map(const std::map<std::uint32_t, std::uint64_t>& counts,
                                        std::uint64_t rho) {
    Counts c;
    for (const auto& [k, dk] : counts)
        if (dk > 0) c.emplace_back(k, dk);
    return DegreeSequence(std::move(c), rho);
}

std::uint64_t DegreeSequence::count(std::uint32_t k) const {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), k,
                               [](const auto& p, std::uint32_t key) { return p.first < key; });
    return (it != counts_.end() && it->first == k) ? it->second : 0;
}

double DegreeSequence::sigma() const { return std::sqrt(sigma2_.get_d()); }

FaceDegreeSequence::FaceDegreeSequence(Counts face_counts, std::uint64_t rho)
    : counts_(std::move(face_counts)), rho_(rho) {
    if (rho_ == 0) throw std::invalid_argument("face sequence: rho must be positive");
    std::uint32_t prev_k = 0;
    bool first = true;
    for (const auto& [k, fk] : counts_) {
        if (k == 0) throw std::invalid_argument("face sequence: half-degrees start at 1");
        if (fk == 0) throw std::invalid_argument("face sequence: zero count entry");
        if (!first && k <= prev_k)
            throw std::invalid_argument("face sequence: keys must be strictly increasing");
        first = false;
        prev_k = k;
        n_ += fk;
    }
}

std::uint64_t FaceDegreeSequence::edge_count() const {
    std::uint64_t e = rho_;
    for (const auto& [k, fk] : counts_) e += static_cast<std::uint64_t>(k) * fk;
    return e;
}

DegreeSequence face_to_forest_degrees(const FaceDegreeSequence& fds) {
    std::uint64_t d0 = fds.rho();
    for (const auto& [k, fk] : fds.face_counts()) d0 += static_cast<std::uint64_t>(k - 1) * fk;
    DegreeSequence::Counts c;
    c.emplace_back(0, d0);
    for (const auto& [k, fk] : fds.face_counts()) c.emplace_back(k, fk);
    return DegreeSequence(std::move(c), fds.rho());
}

namespace {

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binom(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

BigInt count_forests(const DegreeSequence& ds) {
    BigInt num = BigInt(static_cast<unsigned long>(ds.rho())) * factorial(ds.vertices() - 1);
    BigInt den = 1;
    for (const auto& [k, dk] : ds.counts()) {
        (void)k;
        den *= factorial(dk);
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt count_labelled_forests(const DegreeSequence& ds) {
    BigInt r = count_forests(ds) * binom(2 * ds.rho() - 1, ds.rho() - 1);
    for (const auto& [k, dk] : ds.counts()) {
        if (k == 0) continue;
        BigInt b = binom(2ull * k - 1, k - 1);
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(dk));
        r *= p;
    }
    return r;
}

BigInt count_maps(const FaceDegreeSequence& fds) {
    const std::uint64_t e = fds.edge_count();
    std::uint64_t d0 = fds.rho();
    for (const auto& [k, fk] : fds.face_counts()) d0 += static_cast<std::uint64_t>(k - 1) * fk;

    BigInt num = 2 * BigInt(static_cast<unsigned long>(fds.rho())) * factorial(e - 1) *
                 binom(2 * fds.rho() - 1, fds.rho() - 1);
    BigInt den = factorial(d0 + 1);
    for (const auto& [k, fk] : fds.face_counts()) {
        BigInt b = binom(2ull * k - 1, k - 1);
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(fk));
        num *= p;
        den *= factorial(fk);
    }
    BigRat q(num, den);
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("count_maps: non-integer result");
    return q.get_num();
}

FaceDegreeSequence family_generator(const std::string& name, std::uint64_t size,
                                    const FamilyParams& params) {
    if (size < 1) throw std::invalid_argument("family_generator: size must be >= 1");
    if (name == "2p" || name == "2p-angulation") {
        if (params.p < 1) throw std::invalid_argument("2p family: p must be >= 1");
        return FaceDegreeSequence({{params.p, size}}, params.rho);
    }
    if (name == "fig-mixed") {
        // half-degree mix 1:2:1:1 over {1,2,3,4} with boundary 4
        std::uint64_t f3 = size / 5, f4 = size / 5, f2 = (2 * size) / 5;
        std::uint64_t f1 = size - f2 - f3 - f4;
        FaceDegreeSequence::Counts c;
        if (f1) c.emplace_back(1, f1);
        if (f2) c.emplace_back(2, f2);
        if (f3) c.emplace_back(3, f3);
        if (f4) c.emplace_back(4, f4);
        return FaceDegreeSequence(std::move(c), 4);
    }
    if (name == "big-face") {
        // one macroscopic face: degree 2*size ~ 2 sigma
        if (size < 3) throw std::invalid_argument("big-face family: size must be >= 3");
        return FaceDegreeSequence({{2, size - 1}, {static_cast<std::uint32_t>(size), 1}},
                                  params.rho);
    }
    if (name == "power-law") {
        // Artifact-defined family: half-degrees drawn iid proportional to
        // k^-alpha on {1, ..., kmax}; the exact law is a tooling choice, not
        // a modelling claim.
        const std::uint32_t kmax =
            params.kmax ? params.kmax : static_cast<std::uint32_t>(std::min<std::uint64_t>(size, 100000));
        std::vector<double> cum(kmax + 1, 0.0);
        for (std::uint32_t k = 1; k <= kmax; ++k)
            cum[k] = cum[k - 1] + std::pow(static_cast<double>(k), -params.alpha);
        Rng rng = Rng::stream(params.seed, 0xfaceu);
        std::map<std::uint32_t, std::uint64_t> tally;
        for (std::uint64_t i = 0; i < size; ++i) {
            const double u = rng.unit() * cum[kmax];
            const auto it = std::lower_bound(cum.begin() + 1, cum.end(), u);
            tally[static_cast<std::uint32_t>(it - cum.begin())]++;
        }
        FaceDegreeSequence::Counts c(tally.begin(), tally.end());
        return FaceDegreeSequence(std::move(c), params.rho);
    }
    throw std::invalid_argument("family_generator: unknown family '" + name + "'");
}

}  // namespace pmap
