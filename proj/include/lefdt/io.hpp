#pragma once

#include <string>
#include <vector>

#include "lefdt/homalg.hpp"
#include "lefdt/homotopy.hpp"
#include "lefdt/image.hpp"
#include "lefdt/lefschetz.hpp"

namespace lefdt {

// File formats (JSON, UTF-8).
//
// Image: {"dimension": n,
//         "adjacency": "c1" | "c2" | {"ct": t} | {"explicit": [[i,j],...]},
//         "points": [[..], ...]}
// with 0-based explicit edges indexing the points array, and points in
// strictly increasing lexicographic order.
//
// Map: {"domain": <path>, "codomain": <path>, "assignment": [[i,j],...]}
// meaning domain point i maps to codomain point j; every domain index appears
// exactly once.  Relative image paths resolve against the map file's
// directory.
//
// Any malformed input — unreadable file, invalid JSON, wrong shape, violated
// format invariant — raises ParseError.

DigitalImage parse_image(const std::string& json_text);
DigitalImage load_image(const std::string& path);
DigitalMap load_map(const std::string& path);

std::string image_to_json(const DigitalImage& img);
// Serializes a map with the given image file references (stored verbatim).
std::string map_to_json(const DigitalMap& f, const std::string& domain_path,
                        const std::string& codomain_path);

// Machine-readable reports, one JSON object each.
std::string report_to_json(const LefschetzReport& r);
std::string homology_to_json(const std::vector<HomologyGroup>& groups);
std::string spectrum_to_json(const SpectrumResult& r);
std::string certificate_to_json(const HomotopyCertificate& c);

// Plain-text matrix dump: one row per line, space-separated integers.
std::string matrix_to_text(const IntMatrix& m);

}  // namespace lefdt
