// lefdt: batch command-line front-end for the digital-image topology library.
//
// Every verb loads its inputs from JSON files (formats documented in
// include/lefdt/io.hpp), computes one operation, and prints a report either
// as human-readable lines or, with --json, as a JSON object carrying the
// same values.  Exit codes: 0 success, 1 internal error or failed verify
// row, 2 domain/validation error (including usage), 3 parse error,
// 4 resource limit.
//
// The environment variable LEFDT_GUARD overrides the enumeration resource
// caps: either a single integer (map cap; the partial-assignment cap scales
// to 10x) or "MAPS,PARTIALS".

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefdt/errors.hpp"
#include "lefdt/homalg.hpp"
#include "lefdt/homotopy.hpp"
#include "lefdt/image.hpp"
#include "lefdt/io.hpp"
#include "lefdt/lefschetz.hpp"

using json = nlohmann::json;
using namespace lefdt;

namespace {

bool g_json = false;
int g_status = 0;
EnumerationGuard g_guard;

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

// LEFDT_GUARD formats: "N" (max_maps = N, max_partial = 10N) or "N,M".
EnumerationGuard guard_from_env() {
    EnumerationGuard g;
    const char* raw = std::getenv("LEFDT_GUARD");
    if (raw == nullptr || *raw == '\0') return g;
    std::string s(raw);
    try {
        size_t used = 0;
        long long maps = std::stoll(s, &used);
        if (used == s.size()) {
            if (maps <= 0) throw DomainError("LEFDT_GUARD must be positive");
            return {10 * maps, maps};
        }
        if (s[used] != ',') throw std::invalid_argument(s);
        size_t used2 = 0;
        long long partial = std::stoll(s.substr(used + 1), &used2);
        if (used + 1 + used2 != s.size() || maps <= 0 || partial <= 0)
            throw std::invalid_argument(s);
        return {partial, maps};
    } catch (const std::invalid_argument&) {
        throw DomainError("LEFDT_GUARD must be an integer or \"MAPS,PARTIALS\", got \"" + s +
                          "\"");
    } catch (const std::out_of_range&) {
        throw DomainError("LEFDT_GUARD value out of range: \"" + s + "\"");
    }
}

Theory parse_theory(const std::string& s) {
    return s == "cubical" ? Theory::cubical : Theory::simplicial;
}

void emit(const json& j, const std::function<void()>& human) {
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        human();
}

std::string points_line(const std::vector<Point>& pts) {
    std::string out;
    for (const Point& p : pts) {
        if (!out.empty()) out += ' ';
        out += to_string(p);
    }
    return out;
}

std::string assignment_line(const std::vector<int>& a) {
    std::string out;
    for (int v : a) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

json points_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(p);
    return arr;
}

std::string adjacency_label(const DigitalImage& img) {
    if (img.adjacency_kind() == AdjacencyKind::ct) return "c" + std::to_string(img.ct());
    return "explicit";
}

std::string group_label(const HomologyGroup& g) {
    std::string out;
    if (g.betti > 0) out = "Z^" + std::to_string(g.betti);
    for (const Int& t : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(to_ll(t));
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- verbs ---

void run_info(const std::string& path) {
    DigitalImage img = load_image(path);
    json j = {{"dimension", img.dimension()},
              {"points", img.size()},
              {"adjacency", adjacency_label(img)},
              {"edges", static_cast<long long>(img.edges().size())},
              {"connected", img.size() > 0 && img.is_connected()}};
    emit(j, [&] {
        std::cout << "dimension: " << img.dimension() << "\n"
                  << "points: " << img.size() << "\n"
                  << "adjacency: " << adjacency_label(img) << "\n"
                  << "edges: " << img.edges().size() << "\n"
                  << "connected: " << (img.size() > 0 && img.is_connected() ? "true" : "false")
                  << "\n";
    });
}

template <typename Complex, typename VertexLister>
void report_complex(const std::string& theory, const Complex& c, bool list_cells,
                    VertexLister vertices_of) {
    json counts = json::array();
    for (const auto& level : c.cells) counts.push_back(level.size());
    Int euler = 0;
    for (size_t q = 0; q < c.cells.size(); ++q)
        euler += (q % 2 == 0 ? 1 : -1) * Int(static_cast<long long>(c.cells[q].size()));
    json j = {{"theory", theory}, {"counts", counts}, {"euler", to_ll(euler)}};
    if (list_cells) {
        json cells = json::array();
        for (const auto& level : c.cells) {
            json jl = json::array();
            for (const auto& cell : level) jl.push_back(points_json(vertices_of(cell)));
            cells.push_back(std::move(jl));
        }
        j["cells"] = std::move(cells);
    }
    emit(j, [&] {
        for (size_t q = 0; q < c.cells.size(); ++q) {
            std::cout << "cells[" << q << "]: " << c.cells[q].size() << "\n";
            if (list_cells)
                for (const auto& cell : c.cells[q])
                    std::cout << "  " << points_line(vertices_of(cell)) << "\n";
        }
        std::cout << "euler: " << euler << "\n";
    });
}

void run_simplices(const std::string& path, bool list_cells) {
    SimplicialComplex sc = build_simplicial_complex(load_image(path));
    report_complex("simplicial", sc, list_cells, [&](const Simplex& s) {
        std::vector<Point> pts;
        for (int v : s) pts.push_back(sc.image.point(v));
        return pts;
    });
}

void run_cubes(const std::string& path, bool list_cells, bool unsafe) {
    CubicalComplex cc = build_cubical_complex(load_image(path), unsafe);
    report_complex("cubical", cc, list_cells, [](const Cube& c) { return c.vertices(); });
}

void run_homology(const std::string& path, const std::string& theory, bool unsafe) {
    DigitalImage img = load_image(path);
    std::vector<HomologyGroup> groups =
        parse_theory(theory) == Theory::simplicial
            ? homology(build_simplicial_complex(img).chain)
            : homology(build_cubical_complex(img, unsafe).chain);
    json j = {{"theory", theory}, {"groups", json::parse(homology_to_json(groups))}};
    emit(j, [&] {
        for (size_t q = 0; q < groups.size(); ++q)
            std::cout << "H_" << q << " = " << group_label(groups[q]) << "\n";
    });
}

void run_euler(const std::string& path, const std::string& theory) {
    DigitalImage img = load_image(path);
    Int chi = parse_theory(theory) == Theory::simplicial ? simplicial_euler(img)
                                                         : cubical_euler(img);
    emit({{"theory", theory}, {"euler", to_ll(chi)}},
         [&] { std::cout << chi << "\n"; });
}

void run_lefschetz(const std::string& path, const std::string& theory, bool unsafe) {
    DigitalMap f = load_map(path);
    LefschetzReport r = parse_theory(theory) == Theory::simplicial
                            ? simplicial_lefschetz(f)
                            : cubical_lefschetz(f, unsafe);
    emit(json::parse(report_to_json(r)), [&] {
        std::cout << "theory: " << to_string(r.theory) << "\n"
                  << "value: " << r.value << "\n";
        std::cout << "chain traces:";
        for (const Int& t : r.chain_traces) std::cout << ' ' << t;
        std::cout << "\nhomology traces:";
        for (const Int& t : r.homology_traces) std::cout << ' ' << t;
        std::cout << "\nfixed cells: " << r.fixed_cells.size() << "\n";
        for (const FixedCell& c : r.fixed_cells)
            std::cout << "  dim " << c.dim << " sign " << (c.sign > 0 ? "+1" : "-1") << ": "
                      << points_line(c.vertices) << "\n";
        std::cout << "approximate fixed point witnesses: " << points_line(r.afp_witnesses)
                  << "\n";
    });
}

void run_fixed(const std::string& path) {
    std::vector<Point> pts = fixed_points(load_map(path));
    emit({{"count", static_cast<long long>(pts.size())}, {"points", points_json(pts)}}, [&] {
        std::cout << "fixed points: " << pts.size() << "\n";
        for (const Point& p : pts) std::cout << "  " << to_string(p) << "\n";
    });
}

void run_afp(const std::string& path, int n) {
    std::vector<Point> pts = approx_fixed_points(load_map(path), n);
    emit({{"n", n},
          {"count", static_cast<long long>(pts.size())},
          {"points", points_json(pts)}},
         [&] {
             std::cout << n << "-approximate fixed points: " << pts.size() << "\n";
             for (const Point& p : pts) std::cout << "  " << to_string(p) << "\n";
         });
}

void run_check_map(const std::string& path) {
    DigitalMap f = load_map(path);
    bool ok = is_continuous(f);
    emit({{"continuous", ok},
          {"domainPoints", f.domain().size()},
          {"codomainPoints", f.codomain().size()}},
         [&] { std::cout << "continuous: " << (ok ? "true" : "false") << "\n"; });
}

void run_homotopic(const std::string& path_g, const std::string& path_h, bool strong) {
    DigitalMap g = load_map(path_g), h = load_map(path_h);
    std::optional<HomotopyCertificate> cert = find_homotopy(g, h, strong, g_guard);
    const char* kind = strong ? "strong" : "ordinary";
    if (!cert) {
        emit({{"kind", kind}, {"homotopic", false}},
             [&] { std::cout << "homotopic: false\n"; });
        return;
    }
    long long moves = static_cast<long long>(cert->steps.size()) - 1;
    json j = {{"kind", kind},
              {"homotopic", true},
              {"moves", moves},
              {"certificate", json::parse(certificate_to_json(*cert))}};
    emit(j, [&] {
        std::cout << "homotopic: true\n"
                  << "moves: " << moves << "\n";
        for (const DigitalMap& step : cert->steps)
            std::cout << "  " << assignment_line(step.assignment()) << "\n";
    });
}

void run_classes(const std::string& path, bool strong) {
    std::vector<HomotopyClass> classes = homotopy_classes(load_image(path), strong, g_guard);
    long long total = 0;
    json jc = json::array();
    for (const HomotopyClass& c : classes) {
        total += static_cast<long long>(c.members.size());
        jc.push_back({{"size", static_cast<long long>(c.members.size())},
                      {"representative", c.representative.assignment()}});
    }
    json j = {{"kind", strong ? "strong" : "ordinary"},
              {"count", static_cast<long long>(classes.size())},
              {"totalMaps", total},
              {"classes", std::move(jc)}};
    emit(j, [&] {
        std::cout << "kind: " << (strong ? "strong" : "ordinary") << "\n"
                  << "classes: " << classes.size() << "\n";
        for (size_t i = 0; i < classes.size(); ++i)
            std::cout << "class " << i + 1 << ": size " << classes[i].members.size()
                      << ", representative " << assignment_line(classes[i].representative.assignment())
                      << "\n";
        std::cout << "total maps: " << total << "\n";
    });
}

void run_contractible(const std::string& path, bool strong) {
    DigitalImage img = load_image(path);
    bool ok = strong ? is_strongly_contractible(img, g_guard) : is_contractible(img, g_guard);
    emit({{"kind", strong ? "strong" : "ordinary"}, {"contractible", ok}},
         [&] { std::cout << "contractible: " << (ok ? "true" : "false") << "\n"; });
}

void run_fpp(const std::string& path) {
    bool ok = has_fpp(load_image(path), g_guard);
    emit({{"fpp", ok}}, [&] { std::cout << (ok ? "true" : "false") << "\n"; });
}

json spectrum_json(const SpectrumResult& s) { return json::parse(spectrum_to_json(s)); }

void print_spectrum(const SpectrumResult& s) {
    std::cout << "values:";
    for (const Int& v : s.values) std::cout << ' ' << v;
    std::cout << "\n";
    for (const auto& [value, map] : s.witnesses)
        std::cout << "value " << value << ": " << assignment_line(map.assignment()) << "\n";
}

void run_spectrum(const std::string& path, const std::string& kind, const std::string& theory,
                  bool unsafe) {
    DigitalImage img = load_image(path);
    SpectrumResult s = kind == "fixed"
                           ? fixed_point_spectrum(img, g_guard)
                           : lefschetz_spectrum(img, parse_theory(theory), g_guard, unsafe);
    json j = spectrum_json(s);
    j["kind"] = kind;
    if (kind == "lefschetz") j["theory"] = theory;
    emit(j, [&] {
        std::cout << "kind: " << kind << "\n";
        print_spectrum(s);
    });
}

void run_afp_spectrum(const std::string& path, int n, bool strong) {
    SpectrumResult s = afp_spectrum(load_map(path), n, strong, g_guard);
    json j = spectrum_json(s);
    j["kind"] = strong ? "strong" : "ordinary";
    j["n"] = n;
    emit(j, [&] {
        std::cout << "kind: " << (strong ? "strong" : "ordinary") << "\n"
                  << "n: " << n << "\n";
        print_spectrum(s);
    });
}

void run_equivalent(const std::string& path_x, const std::string& path_y, bool strong) {
    DigitalImage x = load_image(path_x), y = load_image(path_y);
    std::optional<EquivalenceWitness> w = find_homotopy_equivalence(x, y, strong, g_guard);
    const char* kind = strong ? "strong" : "ordinary";
    if (!w) {
        emit({{"kind", kind}, {"equivalent", false}},
             [&] { std::cout << "equivalent: false\n"; });
        return;
    }
    json j = {{"kind", kind},
              {"equivalent", true},
              {"forward", w->forward.assignment()},
              {"backward", w->backward.assignment()}};
    emit(j, [&] {
        std::cout << "equivalent: true\n"
                  << "forward: " << assignment_line(w->forward.assignment()) << "\n"
                  << "backward: " << assignment_line(w->backward.assignment()) << "\n";
    });
}

ThinMode parse_thin_mode(const std::string& s) {
    if (s == "corner") return ThinMode::corner;
    if (s == "exhaustive") return ThinMode::exhaustive;
    return ThinMode::greedy;
}

void run_thin(const std::string& path, bool strong, const std::string& mode) {
    DigitalImage img = load_image(path);
    ThinResult r = thin(img, strong, parse_thin_mode(mode), g_guard);
    json steps = json::array();
    for (const ThinStep& s : r.steps)
        steps.push_back({{"removed", s.removed}, {"target", s.target}});
    json j = {{"mode", mode},
              {"kind", strong ? "strong" : "ordinary"},
              {"inputPoints", img.size()},
              {"outputPoints", r.image.size()},
              {"minimal", r.minimal},
              {"steps", std::move(steps)},
              {"roundTripMoves", static_cast<long long>(r.round_trip.steps.size()) - 1},
              {"image", json::parse(image_to_json(r.image))}};
    emit(j, [&] {
        std::cout << "mode: " << mode << "\n"
                  << "kind: " << (strong ? "strong" : "ordinary") << "\n"
                  << "input points: " << img.size() << "\n"
                  << "output points: " << r.image.size() << "\n"
                  << "minimal: " << (r.minimal ? "true" : "false") << "\n";
        for (const ThinStep& s : r.steps)
            std::cout << "  removed " << to_string(s.removed) << " -> " << to_string(s.target)
                      << "\n";
        std::cout << "kept: " << points_line(r.image.points()) << "\n";
    });
}

// -------------------------------------------------------------- verify ---

struct VerifyRow {
    std::string label;
    std::function<bool()> check;
};

void run_verify(const std::string& data_dir) {
    auto img = [&](const std::string& name) { return load_image(data_dir + "/" + name); };
    auto map = [&](const std::string& name) { return load_map(data_dir + "/" + name); };

    std::vector<VerifyRow> rows;
    auto add = [&](std::string label, std::function<bool()> check) {
        rows.push_back({std::move(label), std::move(check)});
    };

    add("simplicial euler of grid_3x2 is -1",
        [&] { return simplicial_euler(img("grid_3x2.json")) == -1; });
    add("simplicial euler of grid_4x2 is -2",
        [&] { return simplicial_euler(img("grid_4x2.json")) == -2; });
    add("cubical euler of grid_3x2 is 1",
        [&] { return cubical_euler(img("grid_3x2.json")) == 1; });
    add("cubical euler of grid_4x2 is 1",
        [&] { return cubical_euler(img("grid_4x2.json")) == 1; });
    add("simplicial euler of theta is -1",
        [&] { return simplicial_euler(img("theta.json")) == -1; });
    add("cubical euler of theta is -1",
        [&] { return cubical_euler(img("theta.json")) == -1; });
    add("simplicial euler of robot is -2",
        [&] { return simplicial_euler(img("robot.json")) == -2; });
    add("cubical euler of robot is 0",
        [&] { return cubical_euler(img("robot.json")) == 0; });

    add("simplicial value of half-turn on grid_3x2 is 1 with chain traces 0,-1", [&] {
        LefschetzReport r = simplicial_lefschetz(map("map_rot180_grid_3x2.json"));
        return r.value == 1 && r.chain_traces == std::vector<Int>{0, -1};
    });
    add("simplicial value of half-turn on grid_4x2 is 0",
        [&] { return simplicial_lefschetz(map("map_rot180_grid_4x2.json")).value == 0; });
    add("cubical value of half-turn on grid_4x2 is 1 with chain traces 0,0,1", [&] {
        LefschetzReport r = cubical_lefschetz(map("map_rot180_grid_4x2.json"));
        return r.value == 1 && r.chain_traces == std::vector<Int>{0, 0, 1};
    });
    add("simplicial value of half-turn on theta is 1",
        [&] { return simplicial_lefschetz(map("map_rot180_theta.json")).value == 1; });
    add("cubical value of half-turn on theta is 1 with chain traces 1,0", [&] {
        LefschetzReport r = cubical_lefschetz(map("map_rot180_theta.json"));
        return r.value == 1 && r.chain_traces == std::vector<Int>{1, 0};
    });
    add("cubical value of reflection on the embedded 6-cycle is 2",
        [&] { return cubical_lefschetz(map("map_flip_cycle_embedded_6.json")).value == 2; });

    add("identity self-map realises the euler characteristic on every grid fixture", [&] {
        for (const char* name : {"grid_3x2.json", "grid_4x2.json", "theta.json", "robot.json"}) {
            DigitalImage x = img(name);
            DigitalMap id = identity_map(x);
            if (simplicial_lefschetz(id).value != simplicial_euler(x)) return false;
            if (cubical_lefschetz(id).value != cubical_euler(x)) return false;
        }
        return true;
    });
    add("constant self-maps have value 1 in both theories", [&] {
        DigitalImage x = img("grid_4x2.json");
        DigitalMap c = constant_map(x, x.point(0));
        return simplicial_lefschetz(c).value == 1 && cubical_lefschetz(c).value == 1;
    });

    add("antipodal map on the unit square: all 4 points 2-approximate, none 1-approximate",
        [&] {
            DigitalMap f = map("map_antipodal_hypercube_2.json");
            return approx_fixed_points(f, 2).size() == 4 && approx_fixed_points(f, 1).empty();
        });
    add("antipodal map on the unit cube: all 8 points 3-approximate, none 2-approximate",
        [&] {
            DigitalMap f = map("map_antipodal_hypercube_3.json");
            return approx_fixed_points(f, 3).size() == 8 && approx_fixed_points(f, 2).empty();
        });

    add("only the one-point image has the fixed point property", [&] {
        return has_fpp(img("point.json")) && !has_fpp(img("hypercube_1.json")) &&
               !has_fpp(img("cycle_4.json"));
    });
    add("the 4-cycle is contractible but not strongly contractible", [&] {
        DigitalImage c4 = img("cycle_4.json");
        return is_contractible(c4) && !is_strongly_contractible(c4);
    });
    add("the 8-cycle has exactly 3 ordinary self-map classes over 8872 maps", [&] {
        std::vector<HomotopyClass> cls = homotopy_classes(img("cycle_8.json"), false);
        long long total = 0;
        for (const HomotopyClass& c : cls) total += static_cast<long long>(c.members.size());
        return cls.size() == 3 && total == 8872;
    });
    add("the 4-cycle has exactly 84 continuous self-maps", [&] {
        return count_continuous_self_maps(img("cycle_4.json")) == 84;
    });

    add("fixed-point spectrum of the 2-point interval is {0,1,2}", [&] {
        SpectrumResult s = fixed_point_spectrum(img("hypercube_1.json"));
        return s.values == std::vector<Int>{0, 1, 2};
    });
    add("fixed-point spectrum of the 4-cycle is {0,1,2,3,4}", [&] {
        SpectrumResult s = fixed_point_spectrum(img("cycle_4.json"));
        return s.values == std::vector<Int>{0, 1, 2, 3, 4};
    });
    add("simplicial spectrum of the 4-cycle is {0,1,2}", [&] {
        SpectrumResult s = lefschetz_spectrum(img("cycle_4.json"), Theory::simplicial);
        return s.values == std::vector<Int>{0, 1, 2};
    });
    add("greedy thinning of the robot yields 26 points with cubical euler preserved", [&] {
        DigitalImage robot = img("robot.json");
        ThinResult t = thin(robot, false, ThinMode::greedy);
        return t.image.size() == 26 && cubical_euler(t.image) == cubical_euler(robot);
    });

    int failed = 0;
    json jrows = json::array();
    for (const VerifyRow& row : rows) {
        bool ok = false;
        std::string note;
        try {
            ok = row.check();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        if (!ok) ++failed;
        jrows.push_back({{"label", row.label}, {"pass", ok}});
        if (!g_json) {
            std::cout << (ok ? "PASS" : "FAIL") << "  " << row.label;
            if (!note.empty()) std::cout << "  [" << note << "]";
            std::cout << "\n";
        }
    }
    json j = {{"rows", std::move(jrows)},
              {"passed", static_cast<int>(rows.size()) - failed},
              {"failed", failed}};
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << (failed == 0 ? "all checks passed" : "some checks FAILED") << " ("
                  << rows.size() - failed << "/" << rows.size() << ")\n";
    if (failed != 0) g_status = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital-image topology toolkit: Lefschetz numbers, homology, homotopy"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "emit reports as JSON instead of text");

    std::string image_path, map_path, second_path, data_dir = "data/fixtures";
    std::string theory = "simplicial", kind = "lefschetz", mode = "greedy";
    bool strong = false, list_cells = false, unsafe = false;
    int n = 1;

    auto theory_opt = [&](CLI::App* sub) {
        sub->add_option("--theory", theory, "simplicial or cubical")
            ->check(CLI::IsMember({"simplicial", "cubical"}))
            ->capture_default_str();
    };
    auto strong_opt = [&](CLI::App* sub) {
        sub->add_flag("--strong", strong, "use strong homotopy instead of ordinary");
    };
    auto unsafe_opt = [&](CLI::App* sub) {
        sub->add_flag("--unsafe-high-dimension", unsafe,
                      "lift the ambient-dimension cap on cubical induced maps");
    };

    CLI::App* c;

    c = app.add_subcommand("info", "basic facts about an image");
    c->add_option("image", image_path, "image JSON file")->required();
    c->callback([&] { run_info(image_path); });

    c = app.add_subcommand("simplices", "cells of the clique complex");
    c->add_option("image", image_path, "image JSON file")->required();
    c->add_flag("--cells", list_cells, "list every cell's vertices");
    c->callback([&] { run_simplices(image_path, list_cells); });

    c = app.add_subcommand("cubes", "cells of the cube complex (c_1 images)");
    c->add_option("image", image_path, "image JSON file")->required();
    c->add_flag("--cells", list_cells, "list every cell's corners");
    unsafe_opt(c);
    c->callback([&] { run_cubes(image_path, list_cells, unsafe); });

    c = app.add_subcommand("homology", "integral homology of an image");
    c->add_option("image", image_path, "image JSON file")->required();
    theory_opt(c);
    unsafe_opt(c);
    c->callback([&] { run_homology(image_path, theory, unsafe); });

    c = app.add_subcommand("euler", "Euler characteristic of an image");
    c->add_option("image", image_path, "image JSON file")->required();
    theory_opt(c);
    c->callback([&] { run_euler(image_path, theory); });

    c = app.add_subcommand("lefschetz", "Lefschetz number of a continuous self-map");
    c->add_option("map", map_path, "map JSON file")->required();
    theory_opt(c);
    unsafe_opt(c);
    c->callback([&] { run_lefschetz(map_path, theory, unsafe); });

    c = app.add_subcommand("fixed", "fixed points of a self-map");
    c->add_option("map", map_path, "map JSON file")->required();
    c->callback([&] { run_fixed(map_path); });

    c = app.add_subcommand("afp", "n-approximate fixed points of a self-map");
    c->add_option("map", map_path, "map JSON file")->required();
    c->add_option("-n", n, "geodesic radius")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    c->callback([&] { run_afp(map_path, n); });

    c = app.add_subcommand("check-map", "test a map file for digital continuity");
    c->add_option("map", map_path, "map JSON file")->required();
    c->callback([&] { run_check_map(map_path); });

    c = app.add_subcommand("homotopic", "decide homotopy of two maps, with certificate");
    c->add_option("first", map_path, "map JSON file")->required();
    c->add_option("second", second_path, "map JSON file")->required();
    strong_opt(c);
    c->callback([&] { run_homotopic(map_path, second_path, strong); });

    c = app.add_subcommand("classes", "homotopy classes of all continuous self-maps");
    c->add_option("image", image_path, "image JSON file")->required();
    strong_opt(c);
    c->callback([&] { run_classes(image_path, strong); });

    c = app.add_subcommand("contractible", "is the identity homotopic to a constant?");
    c->add_option("image", image_path, "image JSON file")->required();
    strong_opt(c);
    c->callback([&] { run_contractible(image_path, strong); });

    c = app.add_subcommand("fpp", "does every continuous self-map fix a point?");
    c->add_option("image", image_path, "image JSON file")->required();
    c->callback([&] { run_fpp(image_path); });

    c = app.add_subcommand("spectrum", "value set of an invariant over all self-maps");
    c->add_option("image", image_path, "image JSON file")->required();
    c->add_option("--kind", kind, "fixed (fixed-point counts) or lefschetz")
        ->check(CLI::IsMember({"fixed", "lefschetz"}))
        ->capture_default_str();
    theory_opt(c);
    unsafe_opt(c);
    c->callback([&] { run_spectrum(image_path, kind, theory, unsafe); });

    c = app.add_subcommand("afp-spectrum",
                           "n-approximate fixed point counts over a map's homotopy class");
    c->add_option("map", map_path, "map JSON file")->required();
    c->add_option("-n", n, "geodesic radius")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    strong_opt(c);
    c->callback([&] { run_afp_spectrum(map_path, n, strong); });

    c = app.add_subcommand("equivalent", "decide homotopy equivalence of two images");
    c->add_option("first", image_path, "image JSON file")->required();
    c->add_option("second", second_path, "image JSON file")->required();
    strong_opt(c);
    c->callback([&] { run_equivalent(image_path, second_path, strong); });

    c = app.add_subcommand("thin", "shrink an image to a homotopy-equivalent core");
    c->add_option("image", image_path, "image JSON file")->required();
    c->add_option("--mode", mode, "greedy, corner, or exhaustive")
        ->check(CLI::IsMember({"greedy", "corner", "exhaustive"}))
        ->capture_default_str();
    strong_opt(c);
    c->callback([&] { run_thin(image_path, strong, mode); });

    c = app.add_subcommand("verify", "replay the bundled fixture table and report pass/fail");
    c->add_option("--data", data_dir, "fixture directory")->capture_default_str();
    c->callback([&] { run_verify(data_dir); });

    try {
        g_guard = guard_from_env();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return g_status;
}
