#include "lefdt/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "lefdt/errors.hpp"

namespace lefdt {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

json parse_text(const std::string& text, const std::string& where) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad(where + ": not valid JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad(path + ": cannot read file");
    std::ostringstream out;
    out << in.rdbuf();
    return std::move(out).str();
}

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where + ": expected an integer");
    return j.get<int>();
}

DigitalImage image_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where + ": image must be a JSON object");
    for (const std::string key : {"dimension", "adjacency", "points"})
        if (!j.contains(key)) bad(where + ": missing \"" + key + "\"");
    int dimension = require_int(j.at("dimension"), where + ": dimension");

    if (!j.at("points").is_array()) bad(where + ": points must be an array");
    std::vector<Point> points;
    points.reserve(j.at("points").size());
    for (const json& jp : j.at("points")) {
        if (!jp.is_array() || static_cast<int>(jp.size()) != dimension)
            bad(where + ": each point must list exactly " + std::to_string(dimension) +
                " coordinates");
        Point p;
        p.reserve(jp.size());
        for (const json& c : jp) p.push_back(require_int(c, where + ": coordinate"));
        points.push_back(std::move(p));
    }
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i]))
            bad(where + ": points must be listed in strictly increasing order");

    const json& adj = j.at("adjacency");
    try {
        if (adj.is_string()) {
            std::string s = adj.get<std::string>();
            if (s == "c1") return DigitalImage::with_ct(dimension, std::move(points), 1);
            if (s == "c2") return DigitalImage::with_ct(dimension, std::move(points), 2);
            bad(where + ": unknown adjacency \"" + s + "\"");
        }
        if (adj.is_object() && adj.contains("ct"))
            return DigitalImage::with_ct(dimension, std::move(points),
                                         require_int(adj.at("ct"), where + ": ct"));
        if (adj.is_object() && adj.contains("explicit")) {
            const json& je = adj.at("explicit");
            if (!je.is_array()) bad(where + ": explicit edges must be an array");
            std::vector<std::pair<Point, Point>> edges;
            int n = static_cast<int>(points.size());
            for (const json& e : je) {
                if (!e.is_array() || e.size() != 2) bad(where + ": each edge must be a pair");
                int a = require_int(e.at(0), where + ": edge endpoint");
                int b = require_int(e.at(1), where + ": edge endpoint");
                if (a < 0 || a >= n || b < 0 || b >= n)
                    bad(where + ": edge endpoint out of range");
                edges.emplace_back(points[static_cast<size_t>(a)],
                                   points[static_cast<size_t>(b)]);
            }
            return DigitalImage::with_edges(dimension, std::move(points), edges);
        }
        bad(where + ": adjacency must be \"c1\", \"c2\", {\"ct\": t} or {\"explicit\": [...]}");
    } catch (const DomainError& e) {
        // Format invariants (sorted points, t within range, edge sanity) are
        // validated by the constructors; in file context they are parse errors.
        bad(where + ": " + e.what());
    }
}

json int_to_json(const Int& v) { return json(v.convert_to<long long>()); }

json point_to_json(const Point& p) { return json(p); }

json assignment_to_json(const DigitalMap& f) { return json(f.assignment()); }

}  // namespace

DigitalImage parse_image(const std::string& json_text) {
    return image_from_json(parse_text(json_text, "image"), "image");
}

DigitalImage load_image(const std::string& path) {
    return image_from_json(parse_text(slurp(path), path), path);
}

DigitalMap load_map(const std::string& path) {
    json j = parse_text(slurp(path), path);
    if (!j.is_object()) bad(path + ": map must be a JSON object");
    for (const std::string key : {"domain", "codomain", "assignment"})
        if (!j.contains(key)) bad(path + ": missing \"" + key + "\"");
    if (!j.at("domain").is_string() || !j.at("codomain").is_string())
        bad(path + ": domain and codomain must be image file paths");

    auto resolve = [&](const std::string& ref) {
        std::filesystem::path p(ref);
        if (p.is_absolute()) return p.string();
        return (std::filesystem::path(path).parent_path() / p).string();
    };
    DigitalImage dom = load_image(resolve(j.at("domain").get<std::string>()));
    DigitalImage cod = load_image(resolve(j.at("codomain").get<std::string>()));

    const json& ja = j.at("assignment");
    if (!ja.is_array()) bad(path + ": assignment must be an array of [i,j] pairs");
    std::vector<int> assign(static_cast<size_t>(dom.size()), -1);
    for (const json& e : ja) {
        if (!e.is_array() || e.size() != 2) bad(path + ": each assignment entry must be a pair");
        int i = require_int(e.at(0), path + ": assignment index");
        int v = require_int(e.at(1), path + ": assignment value");
        if (i < 0 || i >= dom.size()) bad(path + ": assignment index out of range");
        if (v < 0 || v >= cod.size()) bad(path + ": assignment value out of range");
        if (assign[static_cast<size_t>(i)] != -1)
            bad(path + ": assignment lists point " + std::to_string(i) + " twice");
        assign[static_cast<size_t>(i)] = v;
    }
    for (size_t i = 0; i < assign.size(); ++i)
        if (assign[i] == -1)
            bad(path + ": assignment misses point " + std::to_string(i));
    return DigitalMap(std::move(dom), std::move(cod), std::move(assign));
}

std::string image_to_json(const DigitalImage& img) {
    json j;
    j["dimension"] = img.dimension();
    if (img.adjacency_kind() == AdjacencyKind::ct) {
        if (img.ct() == 1)
            j["adjacency"] = "c1";
        else if (img.ct() == 2)
            j["adjacency"] = "c2";
        else
            j["adjacency"] = json{{"ct", img.ct()}};
    } else {
        json edges = json::array();
        for (const auto& [a, b] : img.edges()) edges.push_back(json::array({a, b}));
        j["adjacency"] = json{{"explicit", std::move(edges)}};
    }
    json points = json::array();
    for (int i = 0; i < img.size(); ++i) points.push_back(point_to_json(img.point(i)));
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

std::string map_to_json(const DigitalMap& f, const std::string& domain_path,
                        const std::string& codomain_path) {
    json j;
    j["domain"] = domain_path;
    j["codomain"] = codomain_path;
    json assignment = json::array();
    const std::vector<int>& a = f.assignment();
    for (size_t i = 0; i < a.size(); ++i)
        assignment.push_back(json::array({static_cast<int>(i), a[i]}));
    j["assignment"] = std::move(assignment);
    return j.dump(2) + "\n";
}

std::string report_to_json(const LefschetzReport& r) {
    json j;
    j["theory"] = r.theory == Theory::simplicial ? "simplicial" : "cubical";
    j["value"] = int_to_json(r.value);
    json chain = json::array(), homology = json::array();
    for (const Int& t : r.chain_traces) chain.push_back(int_to_json(t));
    for (const Int& t : r.homology_traces) homology.push_back(int_to_json(t));
    j["chainTraces"] = std::move(chain);
    j["homologyTraces"] = std::move(homology);
    json cells = json::array();
    for (const FixedCell& c : r.fixed_cells) {
        json jc;
        jc["dim"] = c.dim;
        jc["sign"] = c.sign;
        json vs = json::array();
        for (const Point& p : c.vertices) vs.push_back(point_to_json(p));
        jc["vertices"] = std::move(vs);
        cells.push_back(std::move(jc));
    }
    j["fixedCells"] = std::move(cells);
    json afp = json::array();
    for (const Point& p : r.afp_witnesses) afp.push_back(point_to_json(p));
    j["afpWitnesses"] = std::move(afp);
    return j.dump(2) + "\n";
}

std::string homology_to_json(const std::vector<HomologyGroup>& groups) {
    json out = json::array();
    for (const HomologyGroup& g : groups) {
        json jg;
        jg["betti"] = g.betti;
        json torsion = json::array();
        for (const Int& t : g.torsion) torsion.push_back(int_to_json(t));
        jg["torsion"] = std::move(torsion);
        out.push_back(std::move(jg));
    }
    return out.dump(2) + "\n";
}

std::string spectrum_to_json(const SpectrumResult& r) {
    json j;
    json values = json::array();
    for (const Int& v : r.values) values.push_back(int_to_json(v));
    j["values"] = std::move(values);
    json witnesses = json::array();
    for (const auto& [value, map] : r.witnesses) {
        json w;
        w["value"] = int_to_json(value);
        w["assignment"] = assignment_to_json(map);
        witnesses.push_back(std::move(w));
    }
    j["witnesses"] = std::move(witnesses);
    return j.dump(2) + "\n";
}

std::string certificate_to_json(const HomotopyCertificate& c) {
    json j;
    j["kind"] = c.strong ? "strong" : "ordinary";
    json steps = json::array();
    for (const DigitalMap& s : c.steps) steps.push_back(assignment_to_json(s));
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return std::move(out).str();
}

}  // namespace lefdt
