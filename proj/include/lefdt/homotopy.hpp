#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lefdt/homalg.hpp"
#include "lefdt/image.hpp"
#include "lefdt/lefschetz.hpp"

namespace lefdt {

// Budget for backtracking enumerations and breadth-first class scans.  A
// partial assignment is one node of a backtracking tree; the map budget counts
// complete maps produced or visited.  Exceeding either raises
// ResourceLimitError, and no partial results are returned.
struct EnumerationGuard {
    long long max_partial = 100'000'000;
    long long max_maps = 10'000'000;
};

// Streams every continuous map dom -> cod exactly once, as assignment vectors
// (domain index -> codomain index), in a fixed deterministic order.  The
// callback returns false to stop early.  Returns the number of maps produced.
long long for_each_continuous_map(const DigitalImage& dom, const DigitalImage& cod,
                                  const std::function<bool(const std::vector<int>&)>& visit,
                                  const EnumerationGuard& guard = {});

long long count_continuous_self_maps(const DigitalImage& img,
                                     const EnumerationGuard& guard = {});

std::vector<DigitalMap> enumerate_continuous_self_maps(const DigitalImage& img,
                                                       const EnumerationGuard& guard = {});

// Deterministic pseudo-random sample of distinct continuous maps dom -> cod:
// repeated randomized backtracking descents, deduplicated.  Returns at most
// `count` maps; possibly fewer when the space is small or descents repeat.
std::vector<DigitalMap> sample_continuous_maps(const DigitalImage& dom, const DigitalImage& cod,
                                               int count, unsigned long long seed,
                                               const EnumerationGuard& guard = {});

// One homotopy step between continuous maps with equal domain and codomain.
// Ordinary: g(x) close to h(x) for every x.  Strong: g(x) close to h(y) for
// every close pair x, y; this subsumes the ordinary condition.  Both
// directions of the relation agree (it is symmetric).
bool one_step_homotopic(const DigitalMap& g, const DigitalMap& h, bool strong);

// A witnessed homotopy: the full chain of intermediate maps, each continuous,
// consecutive maps one step apart (strong steps when `strong` is set).
struct HomotopyCertificate {
    std::vector<DigitalMap> steps;  // g_0 .. g_m, m >= 0 moves
    bool strong = false;
};

// Throws InternalError when the certificate does not prove what it claims.
void verify_certificate(const HomotopyCertificate& c);

// Breadth-first search in the one-step graph on continuous maps dom -> cod.
// nullopt when g and h are not (strong-)homotopic; otherwise a shortest
// certificate with steps.front() == g and steps.back() == h.
std::optional<HomotopyCertificate> find_homotopy(const DigitalMap& g, const DigitalMap& h,
                                                 bool strong,
                                                 const EnumerationGuard& guard = {});

bool is_homotopic(const DigitalMap& g, const DigitalMap& h, bool strong,
                  const EnumerationGuard& guard = {});

struct HomotopyClass {
    DigitalMap representative;        // lexicographically least assignment in the class
    std::vector<DigitalMap> members;  // sorted by assignment
};

// Partition of all continuous self-maps of img into (strong) homotopy
// classes: the connected components of the one-step graph.  Classes are
// ordered by representative.
std::vector<HomotopyClass> homotopy_classes(const DigitalImage& img, bool strong,
                                            const EnumerationGuard& guard = {});

// Whether the identity is (strong-)homotopic to a constant map.  Only the
// identity's component of the one-step graph is explored.
bool is_contractible(const DigitalImage& img, const EnumerationGuard& guard = {});
bool is_strongly_contractible(const DigitalImage& img, const EnumerationGuard& guard = {});

// Whether every continuous self-map of img has a fixed point.  (A theorem
// says this holds exactly for one-point images; this is the exhaustive check.)
bool has_fpp(const DigitalImage& img, const EnumerationGuard& guard = {});

// The set of values an integer invariant takes over a family of maps, with
// one witness map per value.
struct SpectrumResult {
    std::vector<Int> values;                            // ascending, distinct
    std::vector<std::pair<Int, DigitalMap>> witnesses;  // parallel to values

    bool contains(const Int& v) const;
};

// Fixed-point counts over all continuous self-maps of img.
SpectrumResult fixed_point_spectrum(const DigitalImage& img,
                                    const EnumerationGuard& guard = {});

// Lefschetz values over all continuous self-maps of img.  Every value lies in
// [-#img, #img]; that bound is audited on every call.
SpectrumResult lefschetz_spectrum(const DigitalImage& img, Theory theory,
                                  const EnumerationGuard& guard = {},
                                  bool allow_high_dimension = false);

// n-approximate-fixed-point counts over the homotopy class of f: ordinary
// classes allow any n >= 0; strong classes are paired with n = 1, the
// approximate fixed points the strong theory speaks about.
SpectrumResult afp_spectrum(const DigitalMap& f, int n, bool strong,
                            const EnumerationGuard& guard = {});

// Witness pair for a homotopy equivalence: backward-after-forward is
// homotopic to the identity of X, forward-after-backward to the identity
// of Y (strong homotopies in the strong variant).
struct EquivalenceWitness {
    DigitalMap forward;   // X -> Y
    DigitalMap backward;  // Y -> X
};

std::optional<EquivalenceWitness> find_homotopy_equivalence(const DigitalImage& x,
                                                            const DigitalImage& y, bool strong,
                                                            const EnumerationGuard& guard = {});

bool is_homotopy_equivalent(const DigitalImage& x, const DigitalImage& y, bool strong,
                            const EnumerationGuard& guard = {});

// One thinning move: the point removed from the current image and the point
// its retraction sends it to.
struct ThinStep {
    Point removed;
    Point target;
};

// greedy:     remove dominated points (single-point retractions) until none
//             applies; every move is valid for both homotopy kinds.
// corner:     greedy moves plus degree-2 diagonal corner collapses, certified
//             by two ordinary one-step stages each; ordinary homotopy only.
// exhaustive: search all subimages by increasing size; the only mode that
//             guarantees minimality.
enum class ThinMode { greedy, corner, exhaustive };

// Result of thinning img.  `image` is (strong-)homotopy-equivalent to the
// input; retraction/inclusion witness the equivalence and `round_trip`
// certifies inclusion-after-retraction ~ identity of the input, one move at
// a time (steps records the removals).
struct ThinResult {
    DigitalImage image;
    std::vector<ThinStep> steps;
    bool minimal = false;
    DigitalMap retraction;  // input -> image
    DigitalMap inclusion;   // image -> input
    HomotopyCertificate round_trip;
};

ThinResult thin(const DigitalImage& img, bool strong, ThinMode mode,
                const EnumerationGuard& guard = {});

}  // namespace lefdt
