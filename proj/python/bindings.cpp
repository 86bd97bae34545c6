// Python bindings for the digital-image topology library.  The native module
// is `lefdt._lefdt`; the package __init__ re-exports everything.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "lefdt/cubical.hpp"
#include "lefdt/errors.hpp"
#include "lefdt/fixtures.hpp"
#include "lefdt/homalg.hpp"
#include "lefdt/homotopy.hpp"
#include "lefdt/image.hpp"
#include "lefdt/io.hpp"
#include "lefdt/lefschetz.hpp"
#include "lefdt/simplicial.hpp"

namespace py = pybind11;
using namespace lefdt;

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

std::vector<long long> to_ll_vec(const std::vector<Int>& v) {
    std::vector<long long> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(to_ll(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_lefdt, m) {
    m.doc() = "finite digital images: Lefschetz numbers, homology, homotopy, spectra";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
    py::register_exception<InternalError>(m, "InternalError");

    py::class_<EnumerationGuard>(m, "EnumerationGuard")
        .def(py::init<>())
        .def(py::init([](long long max_partial, long long max_maps) {
                 return EnumerationGuard{max_partial, max_maps};
             }),
             py::arg("max_partial"), py::arg("max_maps"))
        .def_readwrite("max_partial", &EnumerationGuard::max_partial)
        .def_readwrite("max_maps", &EnumerationGuard::max_maps);

    py::enum_<Theory>(m, "Theory")
        .value("simplicial", Theory::simplicial)
        .value("cubical", Theory::cubical);

    py::enum_<ThinMode>(m, "ThinMode")
        .value("greedy", ThinMode::greedy)
        .value("corner", ThinMode::corner)
        .value("exhaustive", ThinMode::exhaustive);

    py::class_<DigitalImage>(m, "DigitalImage")
        .def(py::init<>())
        .def_static("with_ct", &DigitalImage::with_ct, py::arg("dimension"), py::arg("points"),
                    py::arg("t"))
        .def_static("with_edges", &DigitalImage::with_edges, py::arg("dimension"),
                    py::arg("points"), py::arg("edges"))
        .def_property_readonly("dimension", &DigitalImage::dimension)
        .def("__len__", &DigitalImage::size)
        .def_property_readonly("points", &DigitalImage::points)
        .def("point", &DigitalImage::point, py::arg("i"))
        .def("index_of", &DigitalImage::index_of, py::arg("p"))
        .def("contains", &DigitalImage::contains, py::arg("p"))
        .def("adjacent",
             py::overload_cast<const Point&, const Point&>(&DigitalImage::adjacent, py::const_),
             py::arg("p"), py::arg("q"))
        .def("close", &DigitalImage::close, py::arg("i"), py::arg("j"))
        .def("neighbors", &DigitalImage::neighbors, py::arg("i"))
        .def_property_readonly("edges", &DigitalImage::edges)
        .def("distance", &DigitalImage::distance, py::arg("i"), py::arg("j"))
        .def("is_connected", &DigitalImage::is_connected)
        .def("induced", &DigitalImage::induced, py::arg("keep"))
        .def("__eq__", &DigitalImage::operator==)
        .def("__repr__", [](const DigitalImage& img) {
            return "<DigitalImage " + std::to_string(img.size()) + " points in Z^" +
                   std::to_string(img.dimension()) + ">";
        });

    py::class_<DigitalMap>(m, "DigitalMap")
        .def(py::init<DigitalImage, DigitalImage, std::vector<int>>(), py::arg("domain"),
             py::arg("codomain"), py::arg("assignment"))
        .def_static("from_pairs", &DigitalMap::from_pairs, py::arg("domain"),
                    py::arg("codomain"), py::arg("pairs"))
        .def_property_readonly("domain", &DigitalMap::domain)
        .def_property_readonly("codomain", &DigitalMap::codomain)
        .def_property_readonly("assignment", &DigitalMap::assignment)
        .def("__call__", py::overload_cast<const Point&>(&DigitalMap::apply, py::const_),
             py::arg("p"))
        .def("apply_index", py::overload_cast<int>(&DigitalMap::apply, py::const_), py::arg("i"))
        .def("is_endomorphism", &DigitalMap::is_endomorphism)
        .def("__eq__", &DigitalMap::operator==)
        .def("__repr__", [](const DigitalMap& f) {
            return "<DigitalMap on " + std::to_string(f.domain().size()) + " points>";
        });

    m.def("is_continuous", &is_continuous, py::arg("f"));
    m.def("compose", &compose, py::arg("f"), py::arg("g"));
    m.def("identity_map", &identity_map, py::arg("img"));
    m.def("constant_map", &constant_map, py::arg("img"), py::arg("value"));
    m.def("fixed_points", &fixed_points, py::arg("f"));
    m.def("approx_fixed_points", &approx_fixed_points, py::arg("f"), py::arg("n"));
    m.def("geodesic_distance", &geodesic_distance, py::arg("img"), py::arg("p"), py::arg("q"));

    py::class_<HomologyGroup>(m, "HomologyGroup")
        .def_readonly("betti", &HomologyGroup::betti)
        .def_property_readonly(
            "torsion", [](const HomologyGroup& g) { return to_ll_vec(g.torsion); })
        .def("__repr__", [](const HomologyGroup& g) {
            std::string s = "<HomologyGroup betti=" + std::to_string(g.betti);
            if (!g.torsion.empty()) s += " torsion=" + std::to_string(g.torsion.size());
            return s + ">";
        });

    m.def(
        "homology",
        [](const DigitalImage& img, Theory theory, bool allow_high_dimension) {
            return theory == Theory::simplicial
                       ? homology(build_simplicial_complex(img).chain)
                       : homology(build_cubical_complex(img, allow_high_dimension).chain);
        },
        py::arg("img"), py::arg("theory") = Theory::simplicial,
        py::arg("allow_high_dimension") = false);

    m.def("simplicial_euler", [](const DigitalImage& img) { return to_ll(simplicial_euler(img)); },
          py::arg("img"));
    m.def("cubical_euler", [](const DigitalImage& img) { return to_ll(cubical_euler(img)); },
          py::arg("img"));

    py::class_<FixedCell>(m, "FixedCell")
        .def_readonly("dim", &FixedCell::dim)
        .def_readonly("vertices", &FixedCell::vertices)
        .def_readonly("sign", &FixedCell::sign);

    py::class_<LefschetzReport>(m, "LefschetzReport")
        .def_property_readonly("theory", [](const LefschetzReport& r) { return r.theory; })
        .def_property_readonly("value", [](const LefschetzReport& r) { return to_ll(r.value); })
        .def_property_readonly(
            "chain_traces", [](const LefschetzReport& r) { return to_ll_vec(r.chain_traces); })
        .def_property_readonly(
            "homology_traces",
            [](const LefschetzReport& r) { return to_ll_vec(r.homology_traces); })
        .def_readonly("fixed_cells", &LefschetzReport::fixed_cells)
        .def_readonly("afp_witnesses", &LefschetzReport::afp_witnesses)
        .def("__repr__", [](const LefschetzReport& r) {
            return "<LefschetzReport " + to_string(r.theory) + " value=" +
                   std::to_string(to_ll(r.value)) + ">";
        });

    m.def("simplicial_lefschetz", &simplicial_lefschetz, py::arg("f"));
    m.def("cubical_lefschetz", &cubical_lefschetz, py::arg("f"),
          py::arg("allow_high_dimension") = false);
    m.def("afp_lower_bound_check", &afp_lower_bound_check, py::arg("f"), py::arg("theory"),
          py::arg("allow_high_dimension") = false);

    m.def("count_continuous_self_maps", &count_continuous_self_maps, py::arg("img"),
          py::arg("guard") = EnumerationGuard{});
    m.def("enumerate_continuous_self_maps", &enumerate_continuous_self_maps, py::arg("img"),
          py::arg("guard") = EnumerationGuard{});
    m.def("sample_continuous_maps", &sample_continuous_maps, py::arg("domain"),
          py::arg("codomain"), py::arg("count"), py::arg("seed"),
          py::arg("guard") = EnumerationGuard{});

    py::class_<HomotopyCertificate>(m, "HomotopyCertificate")
        .def_readonly("steps", &HomotopyCertificate::steps)
        .def_readonly("strong", &HomotopyCertificate::strong);
    m.def("verify_certificate", &verify_certificate, py::arg("certificate"));

    m.def("one_step_homotopic", &one_step_homotopic, py::arg("g"), py::arg("h"),
          py::arg("strong") = false);
    m.def("find_homotopy", &find_homotopy, py::arg("g"), py::arg("h"), py::arg("strong") = false,
          py::arg("guard") = EnumerationGuard{});
    m.def("is_homotopic", &is_homotopic, py::arg("g"), py::arg("h"), py::arg("strong") = false,
          py::arg("guard") = EnumerationGuard{});

    py::class_<HomotopyClass>(m, "HomotopyClass")
        .def_readonly("representative", &HomotopyClass::representative)
        .def_readonly("members", &HomotopyClass::members)
        .def("__len__", [](const HomotopyClass& c) { return c.members.size(); });
    m.def("homotopy_classes", &homotopy_classes, py::arg("img"), py::arg("strong") = false,
          py::arg("guard") = EnumerationGuard{});

    m.def("is_contractible", &is_contractible, py::arg("img"),
          py::arg("guard") = EnumerationGuard{});
    m.def("is_strongly_contractible", &is_strongly_contractible, py::arg("img"),
          py::arg("guard") = EnumerationGuard{});
    m.def("has_fpp", &has_fpp, py::arg("img"), py::arg("guard") = EnumerationGuard{});

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_property_readonly("values",
                               [](const SpectrumResult& s) { return to_ll_vec(s.values); })
        .def_property_readonly("witnesses",
                               [](const SpectrumResult& s) {
                                   std::vector<std::pair<long long, DigitalMap>> out;
                                   for (const auto& [v, f] : s.witnesses)
                                       out.emplace_back(to_ll(v), f);
                                   return out;
                               })
        .def("contains",
             [](const SpectrumResult& s, long long v) { return s.contains(Int(v)); },
             py::arg("value"));

    m.def("fixed_point_spectrum", &fixed_point_spectrum, py::arg("img"),
          py::arg("guard") = EnumerationGuard{});
    m.def("lefschetz_spectrum", &lefschetz_spectrum, py::arg("img"), py::arg("theory"),
          py::arg("guard") = EnumerationGuard{}, py::arg("allow_high_dimension") = false);
    m.def("afp_spectrum", &afp_spectrum, py::arg("f"), py::arg("n"), py::arg("strong") = false,
          py::arg("guard") = EnumerationGuard{});

    py::class_<EquivalenceWitness>(m, "EquivalenceWitness")
        .def_readonly("forward", &EquivalenceWitness::forward)
        .def_readonly("backward", &EquivalenceWitness::backward);
    m.def("find_homotopy_equivalence", &find_homotopy_equivalence, py::arg("x"), py::arg("y"),
          py::arg("strong") = false, py::arg("guard") = EnumerationGuard{});
    m.def("is_homotopy_equivalent", &is_homotopy_equivalent, py::arg("x"), py::arg("y"),
          py::arg("strong") = false, py::arg("guard") = EnumerationGuard{});

    py::class_<ThinStep>(m, "ThinStep")
        .def_readonly("removed", &ThinStep::removed)
        .def_readonly("target", &ThinStep::target);
    py::class_<ThinResult>(m, "ThinResult")
        .def_readonly("image", &ThinResult::image)
        .def_readonly("steps", &ThinResult::steps)
        .def_readonly("minimal", &ThinResult::minimal)
        .def_readonly("retraction", &ThinResult::retraction)
        .def_readonly("inclusion", &ThinResult::inclusion)
        .def_readonly("round_trip", &ThinResult::round_trip);
    m.def("thin", &thin, py::arg("img"), py::arg("strong") = false,
          py::arg("mode") = ThinMode::greedy, py::arg("guard") = EnumerationGuard{});

    // File formats.
    m.def("parse_image", &parse_image, py::arg("json_text"));
    m.def("load_image", &load_image, py::arg("path"));
    m.def("load_map", &load_map, py::arg("path"));
    m.def("image_to_json", &image_to_json, py::arg("img"));

    // Bundled example images.
    namespace fx = lefdt::fixtures;
    auto fm = m.def_submodule("fixtures", "builders for the bundled example images");
    fm.def("point", &fx::make_point);
    fm.def("interval", &fx::make_interval, py::arg("lo"), py::arg("hi"));
    fm.def("grid", &fx::make_grid, py::arg("w"), py::arg("h"));
    fm.def("hypercube", &fx::make_hypercube, py::arg("n"));
    fm.def("cycle", [](int n) { return fx::make_cycle(n).image; }, py::arg("n"));
    fm.def("cycle_embedded", [](int n) { return fx::make_cycle_embedded(n).image; },
           py::arg("n"));
    fm.def("theta", &fx::make_theta);
    fm.def("robot", &fx::make_robot);
    fm.def("rot180_grid", &fx::rot180_grid, py::arg("w"), py::arg("h"));
    fm.def("rot180_theta", &fx::rot180_theta);
    fm.def("antipodal", &fx::antipodal, py::arg("n"));
}
