#include "pmap/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmap {

Json to_json(const DegreeSequence& ds) {
    Json counts = Json::array();
    for (const auto& [k, dk] : ds.counts()) counts.push_back({k, dk});
    return Json{{"rho", ds.rho()}, {"counts", counts}};
}

DegreeSequence degree_sequence_from_json(const Json& j) {
    DegreeSequence::Counts counts;
    for (const auto& pair : j.at("counts"))
        counts.emplace_back(pair.at(0).get<std::uint32_t>(), pair.at(1).get<std::uint64_t>());
    return DegreeSequence(std::move(counts), j.at("rho").get<std::uint64_t>());
}

Json to_json(const FaceDegreeSequence& fds) {
    Json counts = Json::array();
    for (const auto& [k, fk] : fds.face_counts()) counts.push_back({k, fk});
    return Json{{"rho", fds.rho()}, {"face_counts", counts}};
}

FaceDegreeSequence face_sequence_from_json(const Json& j) {
    FaceDegreeSequence::Counts counts;
    for (const auto& pair : j.at("face_counts"))
        counts.emplace_back(pair.at(0).get<std::uint32_t>(), pair.at(1).get<std::uint64_t>());
    return FaceDegreeSequence(std::move(counts), j.at("rho").get<std::uint64_t>());
}

Json to_json(const Forest& f) {
    Json parents = Json::array(), k = Json::array();
    for (std::uint32_t v = 1; v <= f.size(); ++v) {
        parents.push_back(f.parent(v));
        k.push_back(f.child_count(v));
    }
    return Json{{"rho", f.rho()}, {"parents", parents}, {"k", k}};
}

Forest forest_from_json(const Json& j) {
    const auto& parents = j.at("parents");
    const auto& k = j.at("k");
    std::vector<std::uint32_t> p(parents.size() + 1, 0), c(k.size() + 1, 0);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        p[i + 1] = parents[i].get<std::uint32_t>();
        c[i + 1] = k[i].get<std::uint32_t>();
    }
    return Forest(std::move(p), std::move(c), j.at("rho").get<std::uint32_t>());
}

Json to_json(const LabelledForest& lf) {
    Json j = to_json(lf.forest);
    Json labels = Json::array();
    for (std::uint32_t v = 1; v <= lf.forest.size(); ++v) labels.push_back(lf.labels[v]);
    j["labels"] = labels;
    return j;
}

LabelledForest labelled_forest_from_json(const Json& j) {
    LabelledForest lf{forest_from_json(j), {}};
    lf.labels.assign(lf.forest.size() + 1, 0);
    const auto& labels = j.at("labels");
    for (std::size_t i = 0; i < labels.size(); ++i)
        lf.labels[i + 1] = labels[i].get<std::int64_t>();
    if (!valid_labelling(lf)) throw std::invalid_argument("labelled forest: invalid labels");
    return lf;
}

Json to_json(const LukasiewiczPath& w) { return Json(w.values); }

Json to_json(const PlanarMap& m) {
    return Json{{"twin", m.twin},
                {"next", m.next},
                {"origin", m.origin},
                {"root", m.root},
                {"star", m.star}};
}

PlanarMap map_from_json(const Json& j) {
    PlanarMap m;
    m.twin = j.at("twin").get<std::vector<std::uint32_t>>();
    m.next = j.at("next").get<std::vector<std::uint32_t>>();
    m.origin = j.at("origin").get<std::vector<std::uint32_t>>();
    m.root = j.at("root").get<std::uint32_t>();
    m.star = j.at("star").get<std::uint32_t>();
    std::uint32_t vmax = 0;
    for (std::uint32_t v : m.origin) vmax = std::max(vmax, v);
    m.n_vertices = vmax + 1;
    return m;
}

Json to_json(const TailCheckReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(Json{{"z", r.z},
                            {"exceed", r.exceed},
                            {"n", r.n},
                            {"empirical", r.phat},
                            {"ci_low", r.ci_low},
                            {"ci_high", r.ci_high},
                            {"bound", r.bound},
                            {"in_range", r.in_range},
                            {"verdict", r.pass ? "PASS" : "FAIL"}});
    }
    return Json{{"name", rep.name},
                {"rows", rows},
                {"diagnostics", rep.diagnostics},
                {"verdict", rep.pass ? "PASS" : "FAIL"}};
}

std::string to_csv(const TailCheckReport& rep) {
    std::ostringstream os;
    os << "z,empirical,ci_low,ci_high,bound,verdict\n";
    for (const auto& r : rep.rows) {
        os << r.z << ',' << r.phat << ',' << r.ci_low << ',' << r.ci_high << ',' << r.bound
           << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace pmap
