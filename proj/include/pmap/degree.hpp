#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pmap/rng.hpp"

namespace pmap {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Out-degree census of a plane forest, stored sparsely as (k, d(k)) pairs
// with d(k) > 0 and k strictly increasing. rho is the number of trees and
// must satisfy rho = sum_k (1-k) d(k); construction rejects anything else.
// Immutable after construction.
class DegreeSequence {
public:
    using Counts = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

    DegreeSequence(Counts counts, std::uint64_t rho);

    static DegreeSequence from_map(const std::map<std::uint32_t, std::uint64_t>& counts,
                                   std::uint64_t rho);

    const Counts& counts() const { return counts_; }
    std::uint64_t rho() const { return rho_; }

    std::uint64_t count(std::uint32_t k) const;  // d(k), 0 if absent

    std::uint64_t vertices() const { return upsilon_; }  // upsilon = sum d(k)
    std::uint64_t edges() const { return epsilon_; }     // epsilon = upsilon - rho
    std::uint32_t max_degree() const { return delta_; }  // Delta

    const BigInt& sigma2_exact() const { return sigma2_; }  // sum k(k-1) d(k)
    double sigma2() const { return sigma2_.get_d(); }
    double sigma() const;

    bool operator==(const DegreeSequence& o) const {
        return rho_ == o.rho_ && counts_ == o.counts_;
    }

private:
    Counts counts_;
    std::uint64_t rho_;
    std::uint64_t upsilon_ = 0;
    std::uint64_t epsilon_ = 0;
    std::uint32_t delta_ = 0;
    BigInt sigma2_ = 0;
};

// Census of inner face degrees of a bipartite map: face_counts(k) = number of
// inner faces of degree 2k (k >= 1); rho = half the boundary length.
class FaceDegreeSequence {
public:
    using Counts = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

    FaceDegreeSequence(Counts face_counts, std::uint64_t rho);

    const Counts& face_counts() const { return counts_; }
    std::uint64_t rho() const { return rho_; }
    std::uint64_t inner_faces() const { return n_; }  // n = sum face_counts
    std::uint64_t edge_count() const;                 // rho + sum k f(k)

    bool operator==(const FaceDegreeSequence& o) const {
        return rho_ == o.rho_ && counts_ == o.counts_;
    }

private:
    Counts counts_;
    std::uint64_t rho_;
    std::uint64_t n_ = 0;
};

// d(0) = rho + sum (k-1) f(k), d(k) = f(k) for k >= 1. Total by construction.
DegreeSequence face_to_forest_degrees(const FaceDegreeSequence& fds);

// rho (upsilon-1)! / prod_k d(k)!
BigInt count_forests(const DegreeSequence& ds);

// count_forests * binom(2 rho - 1, rho - 1) * prod_k binom(2k-1, k-1)^d(k)
BigInt count_labelled_forests(const DegreeSequence& ds);

// 2 rho (E-1)!/(d(0)+1)! * binom(2 rho - 1, rho - 1)
//   * prod_{k>=1} binom(2k-1, k-1)^d(k) / d(k)!,   E = edge count
BigInt count_maps(const FaceDegreeSequence& fds);

// Built-in experiment families. Parameters not used by a family are ignored.
//   "2p"         faces {p: size}, boundary rho            (params: p, rho)
//   "fig-mixed"  degree mix 1:2:1:1 over half-degrees 1..4, rho = 4
//   "big-face"   size-1 quadrangles plus one face of half-degree `size`
//   "power-law"  size faces, half-degrees iid ~ k^-alpha on {1..kmax}
//                (params: alpha, kmax, rho, seed); artifact-defined law
struct FamilyParams {
    std::uint32_t p = 2;
    std::uint64_t rho = 1;
    double alpha = 1.5;
    std::uint32_t kmax = 0;  // 0 = default (size)
    std::uint64_t seed = 0;
};
FaceDegreeSequence family_generator(const std::string& name, std::uint64_t size,
                                    const FamilyParams& params = {});

}  // namespace pmap
