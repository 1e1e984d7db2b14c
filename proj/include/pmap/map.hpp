#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmap/degree.hpp"
#include "pmap/rng.hpp"
#include "pmap/sampler.hpp"

namespace pmap {

// Rooted bipartite planar map with a distinguished (pointed) vertex, stored
// as half-edge arrays. Half-edges 2t and 2t+1 are twins. next[] is the
// rotation: the cyclic successor around origin[]. Faces are the orbits of
// h -> next[twin(h)]; the root face is the orbit of the root half-edge.
struct PlanarMap {
    std::vector<std::uint32_t> twin;
    std::vector<std::uint32_t> next;
    std::vector<std::uint32_t> origin;
    std::uint32_t root = 0;
    std::uint32_t star = 0;
    std::uint32_t n_vertices = 0;

    std::uint32_t darts() const { return static_cast<std::uint32_t>(twin.size()); }
    std::uint32_t edges() const { return darts() / 2; }
    std::uint32_t target(std::uint32_t h) const { return origin[twin[h]]; }
};

struct PointedMap {
    PlanarMap map;
    bool negative = false;
};

// Face partition: id per dart plus per-face degree (number of dart sides).
struct FaceSet {
    std::vector<std::uint32_t> face_of;
    std::vector<std::uint32_t> degree;
    std::uint32_t count() const { return static_cast<std::uint32_t>(degree.size()); }
};
FaceSet face_orbits(const PlanarMap& m);

// The leaf reached from x by repeatedly taking the last child.
std::uint32_t phi_leaf(const Forest& f, std::uint32_t x);

// Closure of the labelled forest into its negative pointed map. Leaves become
// the non-pointed vertices (ids 0..#leaves-1 in lexicographic order), the
// pointed vertex is id #leaves. One edge per forest vertex.
PointedMap forest_to_map(const LabelledForest& lf);

std::vector<std::uint32_t> bfs_distances(const PlanarMap& m, std::uint32_t source);

// Structural checks: twin/rotation permutations, Euler formula, even face
// degrees, boundary degree 2 rho, inner face census, vertex/edge counts,
// connectivity. Returns human-readable failures; empty means valid.
std::vector<std::string> validate_map(const PlanarMap& m, const FaceDegreeSequence& fds);

struct DistanceLawReport {
    std::uint64_t checked = 0;
    std::vector<std::uint32_t> violating_vertices;
    bool ok() const { return violating_vertices.empty(); }
};
// d(v, star) = label - min label + 1, at every non-pointed vertex.
DistanceLawReport verify_distance_law(const LabelledForest& lf, const PointedMap& m);

// Re-roots uniformly among the rho negatively oriented boundary darts.
PointedMap reroot_uniform_negative(const PlanarMap& m, Rng& rng);

// Canonical byte string of the rooted pointed map; equal strings iff the maps
// are isomorphic as rooted pointed maps.
std::string canonical_code(const PointedMap& m);

}  // namespace pmap
