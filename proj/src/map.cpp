#include "pmap/map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace pmap {

std::uint32_t phi_leaf(const Forest& f, std::uint32_t x) {
    f.check(x);
    while (!f.is_leaf(x)) x = f.child(x, f.child_count(x));
    return x;
}

FaceSet face_orbits(const PlanarMap& m) {
    FaceSet fs;
    fs.face_of.assign(m.darts(), UINT32_MAX);
    for (std::uint32_t h = 0; h < m.darts(); ++h) {
        if (fs.face_of[h] != UINT32_MAX) continue;
        const std::uint32_t id = fs.count();
        std::uint32_t deg = 0;
        std::uint32_t cur = h;
        do {
            fs.face_of[cur] = id;
            ++deg;
            cur = m.next[m.twin[cur]];
        } while (cur != h);
        fs.degree.push_back(deg);
    }
    return fs;
}

PointedMap forest_to_map(const LabelledForest& lf) {
    if (!valid_labelling(lf)) throw std::invalid_argument("forest_to_map: invalid labelling");
    const Forest& f = lf.forest;
    const std::uint32_t n = f.size();
    const std::int64_t min_label = lf.min_label();

    // map vertices: leaves in lexicographic order, then the pointed vertex
    std::vector<std::uint32_t> leaf_id(n + 1, UINT32_MAX);
    std::uint32_t leaves = 0;
    for (std::uint32_t v = 1; v <= n; ++v)
        if (f.is_leaf(v)) leaf_id[v] = leaves++;
    const std::uint32_t star = leaves;

    // corner v belongs to map vertex phi(v); the descent is label-preserving
    std::vector<std::uint32_t> corner_vertex(n + 1, 0);
    for (std::uint32_t v = n; v >= 1; --v) {
        corner_vertex[v] =
            f.is_leaf(v) ? leaf_id[v] : corner_vertex[f.child(v, f.child_count(v))];
        if (v == 1) break;
    }

    // cut the cyclic corner order right after the last minimum-label corner;
    // no successor chord crosses that gap
    std::uint32_t mu = 0;
    for (std::uint32_t v = 1; v <= n; ++v)
        if (lf.labels[v] == min_label) mu = v;
    auto pos = [&](std::uint32_t v) { return (v + n - mu - 1) % n + 1; };
    std::vector<std::uint32_t> at_pos(n + 1, 0);
    for (std::uint32_t v = 1; v <= n; ++v) at_pos[pos(v)] = v;

    // successor corner: the next one cyclically carrying label - 1. In cut
    // coordinates every successor lies strictly to the right, so a single
    // right-to-left sweep suffices.
    std::vector<std::uint32_t> succ(n + 1, 0);
    {
        std::map<std::int64_t, std::uint32_t> next_with_label;  // label -> corner
        for (std::uint32_t p = n; p >= 1; --p) {
            const std::uint32_t v = at_pos[p];
            if (lf.labels[v] != min_label) {
                const auto it = next_with_label.find(lf.labels[v] - 1);
                if (it == next_with_label.end())
                    throw std::logic_error("forest_to_map: missing successor");
                succ[v] = it->second;
            }
            next_with_label[lf.labels[v]] = v;
            if (p == 1) break;
        }
    }

    // one arc per corner: darts 2(v-1) at corner v, 2(v-1)+1 at the far end
    PlanarMap m;
    m.n_vertices = leaves + 1;
    m.star = star;
    m.twin.resize(2 * n);
    m.next.assign(2 * n, UINT32_MAX);
    m.origin.assign(2 * n, UINT32_MAX);
    for (std::uint32_t v = 1; v <= n; ++v) {
        const std::uint32_t out = 2 * (v - 1), in = out + 1;
        m.twin[out] = in;
        m.twin[in] = out;
        m.origin[out] = corner_vertex[v];
        m.origin[in] = (lf.labels[v] == min_label) ? star : corner_vertex[succ[v]];
    }

    // incoming darts per corner, collected in ascending cut position so each
    // list can be consumed in descending source order
    std::vector<std::vector<std::uint32_t>> incoming(n + 1);
    for (std::uint32_t p = 1; p <= n; ++p) {
        const std::uint32_t v = at_pos[p];
        if (lf.labels[v] != min_label) incoming[succ[v]].push_back(2 * (v - 1) + 1);
    }

    // rotation around a map vertex: its corners by ascending cut position,
    // each fan = incoming ends by descending source, then the outgoing end
    std::vector<std::vector<std::uint32_t>> corners_of(leaves);
    for (std::uint32_t p = 1; p <= n; ++p) {
        const std::uint32_t v = at_pos[p];
        corners_of[corner_vertex[v]].push_back(v);
    }
    auto link_cycle = [&](const std::vector<std::uint32_t>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            m.next[cycle[i]] = cycle[(i + 1) % cycle.size()];
    };
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t x = 0; x < leaves; ++x) {
        cycle.clear();
        for (std::uint32_t c : corners_of[x]) {
            for (auto it = incoming[c].rbegin(); it != incoming[c].rend(); ++it)
                cycle.push_back(*it);
            cycle.push_back(2 * (c - 1));
        }
        link_cycle(cycle);
    }
    cycle.clear();
    for (std::uint32_t p = n; p >= 1; --p) {
        const std::uint32_t v = at_pos[p];
        if (lf.labels[v] == min_label) cycle.push_back(2 * (v - 1) + 1);
        if (p == 1) break;
    }
    link_cycle(cycle);

    // The boundary face (the extra root's face) is bounded from above by the
    // last corner's arc, on its far side. Root at the first negatively
    // oriented dart along that face.
    const auto dist = bfs_distances(m, star);
    const std::uint32_t start = 2 * (n - 1) + 1;
    std::uint32_t h = m.next[m.twin[start]];
    for (std::uint32_t guard = 0; guard <= 2 * n; ++guard) {
        if (dist[m.origin[h]] == dist[m.origin[m.twin[h]]] + 1) break;
        h = m.next[m.twin[h]];
        if (guard == 2 * n) throw std::logic_error("forest_to_map: no negative boundary dart");
    }
    m.root = h;
    return PointedMap{std::move(m), true};
}

std::vector<std::uint32_t> bfs_distances(const PlanarMap& m, std::uint32_t source) {
    if (source >= m.n_vertices) throw std::invalid_argument("bfs_distances: invalid source");
    // CSR adjacency over darts
    std::vector<std::uint32_t> deg(m.n_vertices + 1, 0);
    for (std::uint32_t h = 0; h < m.darts(); ++h) deg[m.origin[h] + 1]++;
    for (std::uint32_t v = 0; v < m.n_vertices; ++v) deg[v + 1] += deg[v];
    std::vector<std::uint32_t> adj(m.darts());
    {
        std::vector<std::uint32_t> fill(deg.begin(), deg.end() - 1);
        for (std::uint32_t h = 0; h < m.darts(); ++h) adj[fill[m.origin[h]]++] = m.target(h);
    }
    std::vector<std::uint32_t> dist(m.n_vertices, UINT32_MAX);
    std::vector<std::uint32_t> queue;
    queue.reserve(m.n_vertices);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t i = deg[v]; i < deg[v + 1]; ++i) {
            const std::uint32_t u = adj[i];
            if (dist[u] == UINT32_MAX) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

std::vector<std::string> validate_map(const PlanarMap& m, const FaceDegreeSequence& fds) {
    std::vector<std::string> bad;
    const std::uint32_t D = m.darts();
    for (std::uint32_t h = 0; h < D; ++h) {
        if (m.twin[h] == h || m.twin[m.twin[h]] != h) {
            bad.push_back("twin is not a fixed-point-free involution");
            break;
        }
    }
    {
        std::vector<std::uint32_t> seen(D, 0);
        bool perm = true;
        for (std::uint32_t h = 0; h < D; ++h) {
            if (m.next[h] >= D || seen[m.next[h]]++) perm = false;
            if (m.origin[m.next[h]] != m.origin[h]) perm = false;
        }
        if (!perm) bad.push_back("rotation is not a vertex-preserving permutation");
    }
    const FaceSet fs = face_orbits(m);
    const std::uint64_t V = m.n_vertices, E = m.edges(), F = fs.count();
    if (V + F != E + 2) bad.push_back("Euler formula violated");
    for (std::uint32_t f = 0; f < F; ++f)
        if (fs.degree[f] % 2) {
            bad.push_back("odd face degree");
            break;
        }
    const std::uint32_t root_face = fs.face_of[m.root];
    if (fs.degree[root_face] != 2 * fds.rho()) bad.push_back("root face degree is not 2 rho");
    std::map<std::uint64_t, std::uint64_t> census;
    for (std::uint32_t f = 0; f < F; ++f)
        if (f != root_face) census[fs.degree[f]]++;
    std::map<std::uint64_t, std::uint64_t> expected;
    for (const auto& [k, fk] : fds.face_counts()) expected[2ull * k] += fk;
    if (census != expected) bad.push_back("inner face degree census mismatch");
    std::uint64_t d0 = fds.rho();
    for (const auto& [k, fk] : fds.face_counts()) d0 += static_cast<std::uint64_t>(k - 1) * fk;
    if (V != d0 + 1) bad.push_back("vertex count is not d(0) + 1");
    if (E != fds.edge_count()) bad.push_back("edge count mismatch");
    const auto dist = bfs_distances(m, m.origin[m.root]);
    if (std::find(dist.begin(), dist.end(), UINT32_MAX) != dist.end())
        bad.push_back("map is not connected");
    return bad;
}

DistanceLawReport verify_distance_law(const LabelledForest& lf, const PointedMap& pm) {
    DistanceLawReport r;
    const auto dist = bfs_distances(pm.map, pm.map.star);
    const std::int64_t min_label = lf.min_label();
    std::uint32_t id = 0;
    for (std::uint32_t v = 1; v <= lf.forest.size(); ++v) {
        if (!lf.forest.is_leaf(v)) continue;
        ++r.checked;
        const std::int64_t expected = lf.labels[v] - min_label + 1;
        if (static_cast<std::int64_t>(dist[id]) != expected) r.violating_vertices.push_back(id);
        ++id;
    }
    return r;
}

PointedMap reroot_uniform_negative(const PlanarMap& m, Rng& rng) {
    const FaceSet fs = face_orbits(m);
    const std::uint32_t boundary = fs.face_of[m.root];
    const auto dist = bfs_distances(m, m.star);
    std::vector<std::uint32_t> negative_darts;
    for (std::uint32_t h = 0; h < m.darts(); ++h) {
        if (fs.face_of[h] != boundary) continue;
        if (dist[m.origin[h]] == dist[m.target(h)] + 1) negative_darts.push_back(h);
    }
    PointedMap out{m, true};
    out.map.root = negative_darts[static_cast<std::size_t>(rng.below(negative_darts.size()))];
    return out;
}

std::string canonical_code(const PointedMap& pm) {
    const PlanarMap& m = pm.map;
    // breadth-first discovery over darts via (twin, next); discovery order is
    // canonical given the root, and rooted maps have no automorphisms
    std::vector<std::uint32_t> num(m.darts(), UINT32_MAX);
    std::vector<std::uint32_t> order;
    order.reserve(m.darts());
    auto discover = [&](std::uint32_t h) {
        if (num[h] == UINT32_MAX) {
            num[h] = static_cast<std::uint32_t>(order.size());
            order.push_back(h);
        }
    };
    discover(m.root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        discover(m.twin[order[i]]);
        discover(m.next[order[i]]);
    }
    std::string code;
    code.reserve(order.size() * 9 + 8);
    auto put = [&](std::uint32_t x) {
        for (int b = 0; b < 4; ++b) code.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
    };
    put(static_cast<std::uint32_t>(order.size()));
    for (std::uint32_t h : order) {
        put(num[m.twin[h]]);
        put(num[m.next[h]]);
        code.push_back(m.origin[h] == m.star ? '\1' : '\0');
    }
    return code;
}

}  // namespace pmap
