#include "lefdt/homotopy.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lefdt/cubical.hpp"
#include "lefdt/errors.hpp"
#include "lefdt/simplicial.hpp"

namespace lefdt {

namespace {

// FNV-1a over the entries, so assignment vectors can key visited sets.
struct AssignmentHash {
    size_t operator()(const std::vector<int>& v) const noexcept {
        size_t h = 14695981039346656037ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned int>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

using AssignmentSet = std::unordered_set<std::vector<int>, AssignmentHash>;
using ParentMap = std::unordered_map<std::vector<int>, std::vector<int>, AssignmentHash>;

struct Budget {
    long long partial_left;
    long long maps_left;

    explicit Budget(const EnumerationGuard& g)
        : partial_left(g.max_partial), maps_left(g.max_maps) {}

    void spend_partial() {
        if (--partial_left < 0)
            throw ResourceLimitError(
                "enumeration exceeded the partial-assignment budget; raise the guard to proceed");
    }
    void spend_map() {
        if (--maps_left < 0)
            throw ResourceLimitError(
                "enumeration exceeded the map budget; raise the guard to proceed");
    }
};

// Assignment order for the backtracking enumerator: breadth-first over the
// domain adjacency, seeded at the least index of each component.  Every
// position after a seed has at least one earlier-assigned adjacent point; the
// first of those (the anchor) bounds its candidate pool, the rest only need
// closeness checks.
struct SearchOrder {
    std::vector<int> order;                // position -> domain index
    std::vector<int> anchor;               // position -> earlier adjacent domain index, or -1
    std::vector<std::vector<int>> checks;  // position -> other earlier adjacent domain indices
};

SearchOrder make_search_order(const DigitalImage& dom) {
    int n = dom.size();
    SearchOrder s;
    s.order.reserve(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int seed = 0; seed < n; ++seed) {
        if (seen[static_cast<size_t>(seed)]) continue;
        std::queue<int> q;
        q.push(seed);
        seen[static_cast<size_t>(seed)] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            s.order.push_back(x);
            for (int z : dom.neighbors(x)) {
                if (!seen[static_cast<size_t>(z)]) {
                    seen[static_cast<size_t>(z)] = 1;
                    q.push(z);
                }
            }
        }
    }
    std::vector<int> pos_of(static_cast<size_t>(n), -1);
    for (size_t p = 0; p < s.order.size(); ++p)
        pos_of[static_cast<size_t>(s.order[p])] = static_cast<int>(p);
    s.anchor.assign(s.order.size(), -1);
    s.checks.assign(s.order.size(), {});
    for (size_t p = 0; p < s.order.size(); ++p) {
        int x = s.order[p];
        int best = -1;
        int best_pos = static_cast<int>(p);
        for (int z : dom.neighbors(x)) {
            int zp = pos_of[static_cast<size_t>(z)];
            if (zp < best_pos) {
                best_pos = zp;
                best = z;
            }
        }
        s.anchor[p] = best;
        for (int z : dom.neighbors(x)) {
            int zp = pos_of[static_cast<size_t>(z)];
            if (zp < static_cast<int>(p) && z != best) s.checks[p].push_back(z);
        }
    }
    return s;
}

// Backtracking over assignments dom -> cod in search order.  Continuity
// against already-assigned neighbours is always enforced; `restrict_to`
// (indexed by domain index) additionally confines each point's candidates,
// which is how one-step neighbourhood scans reuse the same core.
class Enumerator {
public:
    Enumerator(const DigitalImage& dom, const DigitalImage& cod, Budget& budget)
        : dom_(dom), cod_(cod), budget_(budget), ord_(make_search_order(dom)) {
        int m = cod.size();
        all_.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) all_[static_cast<size_t>(i)] = i;
        closed_.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            const std::vector<int>& nb = cod.neighbors(i);
            std::vector<int>& c = closed_[static_cast<size_t>(i)];
            c.reserve(nb.size() + 1);
            bool placed = false;
            for (int z : nb) {
                if (!placed && i < z) {
                    c.push_back(i);
                    placed = true;
                }
                c.push_back(z);
            }
            if (!placed) c.push_back(i);
        }
    }

    const DigitalImage& domain() const { return dom_; }
    const DigitalImage& codomain() const { return cod_; }

    // Sorted close neighbourhood (value and its neighbours) of a codomain index.
    const std::vector<int>& closed_neighborhood(int value) const {
        return closed_[static_cast<size_t>(value)];
    }

    // Runs the full enumeration; returns false when the callback stopped it.
    bool run(const std::function<bool(const std::vector<int>&)>& visit,
             const std::vector<const std::vector<int>*>* restrict_to = nullptr) {
        visit_ = &visit;
        restrict_ = restrict_to;
        assign_.assign(static_cast<size_t>(dom_.size()), -1);
        stop_ = false;
        descend(0);
        return !stop_;
    }

private:
    void descend(size_t p) {
        if (p == ord_.order.size()) {
            budget_.spend_map();
            if (!(*visit_)(assign_)) stop_ = true;
            return;
        }
        int x = ord_.order[p];
        int anchor = ord_.anchor[p];
        const std::vector<int>* pool;
        if (restrict_ != nullptr)
            pool = (*restrict_)[static_cast<size_t>(x)];
        else if (anchor >= 0)
            pool = &closed_[static_cast<size_t>(assign_[static_cast<size_t>(anchor)])];
        else
            pool = &all_;
        for (int c : *pool) {
            if (stop_) return;
            // With a restricted pool the anchor constraint is not built in.
            if (restrict_ != nullptr && anchor >= 0 &&
                !cod_.close(c, assign_[static_cast<size_t>(anchor)]))
                continue;
            bool ok = true;
            for (int z : ord_.checks[p]) {
                if (!cod_.close(c, assign_[static_cast<size_t>(z)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            budget_.spend_partial();
            assign_[static_cast<size_t>(x)] = c;
            descend(p + 1);
            assign_[static_cast<size_t>(x)] = -1;
        }
    }

    const DigitalImage& dom_;
    const DigitalImage& cod_;
    Budget& budget_;
    SearchOrder ord_;
    std::vector<int> all_;
    std::vector<std::vector<int>> closed_;
    std::vector<int> assign_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
    const std::vector<const std::vector<int>*>* restrict_ = nullptr;
    bool stop_ = false;
};

void require_comparable(const DigitalMap& g, const DigitalMap& h) {
    if (g.domain() != h.domain() || g.codomain() != h.codomain())
        throw DomainError("homotopy comparisons require maps with equal domains and codomains");
    if (!is_continuous(g) || !is_continuous(h))
        throw DomainError("homotopy comparisons are defined between continuous maps");
}

bool one_step_assignments(const DigitalImage& dom, const DigitalImage& cod,
                          const std::vector<int>& a, const std::vector<int>& b, bool strong) {
    int n = dom.size();
    for (int i = 0; i < n; ++i)
        if (!cod.close(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)])) return false;
    if (!strong) return true;
    for (const auto& [i, j] : dom.edges()) {
        if (!cod.close(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)])) return false;
        if (!cod.close(a[static_cast<size_t>(j)], b[static_cast<size_t>(i)])) return false;
    }
    return true;
}

// Intersects the sorted vector `into` with the sorted vector `other` in place.
void intersect_sorted(std::vector<int>& into, const std::vector<int>& other) {
    size_t w = 0, i = 0, j = 0;
    while (i < into.size() && j < other.size()) {
        if (into[i] < other[j]) {
            ++i;
        } else if (other[j] < into[i]) {
            ++j;
        } else {
            into[w++] = into[i];
            ++i;
            ++j;
        }
    }
    into.resize(w);
}

// Enumerates every continuous map exactly one step (ordinary or strong) from
// `a`, including `a` itself.  Candidate pools: ordinary steps allow each point
// the close neighbourhood of its current value; strong steps intersect that
// over the point's own close neighbourhood in the domain.
bool for_each_one_step(Enumerator& en, const std::vector<int>& a, bool strong,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    const DigitalImage& dom = en.domain();
    int n = dom.size();
    std::vector<std::vector<int>> scratch;
    std::vector<const std::vector<int>*> pools(static_cast<size_t>(n));
    if (strong) {
        scratch.resize(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) {
            std::vector<int>& pool = scratch[static_cast<size_t>(x)];
            pool = en.closed_neighborhood(a[static_cast<size_t>(x)]);
            for (int z : dom.neighbors(x))
                intersect_sorted(pool, en.closed_neighborhood(a[static_cast<size_t>(z)]));
            pools[static_cast<size_t>(x)] = &pool;
        }
    } else {
        for (int x = 0; x < n; ++x)
            pools[static_cast<size_t>(x)] = &en.closed_neighborhood(a[static_cast<size_t>(x)]);
    }
    return en.run(visit, &pools);
}

// Breadth-first flood of the one-step component of `start`.  Calls on_visit
// exactly once per discovered map (including `start`); a false return stops
// the flood.  Fills `visited`, and `parents` when given.
void flood_component(Enumerator& en, const std::vector<int>& start, bool strong, Budget& budget,
                     AssignmentSet& visited, ParentMap* parents,
                     const std::function<bool(const std::vector<int>&)>& on_visit) {
    std::queue<std::vector<int>> queue;
    budget.spend_map();
    visited.insert(start);
    if (!on_visit(start)) return;
    queue.push(start);
    bool stop = false;
    while (!queue.empty() && !stop) {
        std::vector<int> cur = queue.front();
        queue.pop();
        for_each_one_step(en, cur, strong, [&](const std::vector<int>& next) {
            if (visited.contains(next)) return true;
            budget.spend_map();
            visited.insert(next);
            if (parents != nullptr) parents->emplace(next, cur);
            if (!on_visit(next)) {
                stop = true;
                return false;
            }
            queue.push(next);
            return true;
        });
    }
}

std::vector<int> identity_assignment(int n) {
    std::vector<int> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = i;
    return a;
}

bool is_constant_assignment(const std::vector<int>& a) {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != a[0]) return false;
    return !a.empty();
}

// The (strong-)homotopy class of the identity, as a set of assignments.
AssignmentSet identity_class(const DigitalImage& img, bool strong, Budget& budget) {
    Enumerator en(img, img, budget);
    AssignmentSet visited;
    flood_component(en, identity_assignment(img.size()), strong, budget, visited, nullptr,
                    [](const std::vector<int>&) { return true; });
    return visited;
}

SpectrumResult finish_spectrum(const DigitalImage& dom, const DigitalImage& cod,
                               const std::map<long long, std::vector<int>>& seen) {
    SpectrumResult r;
    r.values.reserve(seen.size());
    r.witnesses.reserve(seen.size());
    for (const auto& [value, witness] : seen) {
        r.values.push_back(Int(value));
        r.witnesses.emplace_back(Int(value), DigitalMap(dom, cod, witness));
    }
    return r;
}

// Shared search core of find_homotopy_equivalence and exhaustive thinning:
// the identity class of x is precomputed once by the caller.
std::optional<EquivalenceWitness> equivalence_search(const DigitalImage& x, const DigitalImage& y,
                                                     const AssignmentSet& class_of_id_x,
                                                     bool strong, Budget& budget) {
    std::vector<std::vector<int>> maps_xy;
    {
        Enumerator en(x, y, budget);
        en.run([&](const std::vector<int>& a) {
            maps_xy.push_back(a);
            return true;
        });
    }
    if (maps_xy.empty()) return std::nullopt;
    std::vector<std::vector<int>> maps_yx;
    {
        Enumerator en(y, x, budget);
        en.run([&](const std::vector<int>& a) {
            maps_yx.push_back(a);
            return true;
        });
    }
    if (maps_yx.empty()) return std::nullopt;
    AssignmentSet class_of_id_y = identity_class(y, strong, budget);

    std::vector<int> backward_forward(static_cast<size_t>(x.size()));
    std::vector<int> forward_backward(static_cast<size_t>(y.size()));
    for (const std::vector<int>& f : maps_xy) {
        for (const std::vector<int>& g : maps_yx) {
            budget.spend_partial();
            for (size_t i = 0; i < f.size(); ++i)
                backward_forward[i] = g[static_cast<size_t>(f[i])];
            if (!class_of_id_x.contains(backward_forward)) continue;
            for (size_t j = 0; j < g.size(); ++j)
                forward_backward[j] = f[static_cast<size_t>(g[j])];
            if (!class_of_id_y.contains(forward_backward)) continue;
            return EquivalenceWitness{DigitalMap(x, y, f), DigitalMap(y, x, g)};
        }
    }
    return std::nullopt;
}

}  // namespace

long long for_each_continuous_map(const DigitalImage& dom, const DigitalImage& cod,
                                  const std::function<bool(const std::vector<int>&)>& visit,
                                  const EnumerationGuard& guard) {
    Budget budget(guard);
    Enumerator en(dom, cod, budget);
    long long produced = 0;
    en.run([&](const std::vector<int>& a) {
        ++produced;
        return visit(a);
    });
    return produced;
}

long long count_continuous_self_maps(const DigitalImage& img, const EnumerationGuard& guard) {
    return for_each_continuous_map(
        img, img, [](const std::vector<int>&) { return true; }, guard);
}

std::vector<DigitalMap> enumerate_continuous_self_maps(const DigitalImage& img,
                                                       const EnumerationGuard& guard) {
    std::vector<DigitalMap> out;
    for_each_continuous_map(
        img, img,
        [&](const std::vector<int>& a) {
            out.emplace_back(img, img, a);
            return true;
        },
        guard);
    return out;
}

std::vector<DigitalMap> sample_continuous_maps(const DigitalImage& dom, const DigitalImage& cod,
                                               int count, unsigned long long seed,
                                               const EnumerationGuard& guard) {
    if (count < 0) throw DomainError("sample size must be nonnegative");
    Budget budget(guard);
    std::mt19937_64 rng(seed);
    SearchOrder ord = make_search_order(dom);
    int m = cod.size();

    // One randomized descent: candidates tried in shuffled order, first
    // complete assignment returned.  Fails only when no continuous map exists.
    std::vector<int> assign(static_cast<size_t>(dom.size()), -1);
    std::function<bool(size_t)> descend = [&](size_t p) -> bool {
        if (p == ord.order.size()) return true;
        int x = ord.order[p];
        std::vector<int> pool;
        if (ord.anchor[p] >= 0) {
            int v = assign[static_cast<size_t>(ord.anchor[p])];
            pool.push_back(v);
            const std::vector<int>& nb = cod.neighbors(v);
            pool.insert(pool.end(), nb.begin(), nb.end());
        } else {
            pool.resize(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) pool[static_cast<size_t>(i)] = i;
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int c : pool) {
            bool ok = true;
            for (int z : ord.checks[p]) {
                if (!cod.close(c, assign[static_cast<size_t>(z)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            budget.spend_partial();
            assign[static_cast<size_t>(x)] = c;
            if (descend(p + 1)) return true;
            assign[static_cast<size_t>(x)] = -1;
        }
        return false;
    };

    AssignmentSet seen;
    std::vector<DigitalMap> out;
    long long attempts = 8ll * count + 16;
    while (static_cast<int>(out.size()) < count && attempts-- > 0) {
        std::fill(assign.begin(), assign.end(), -1);
        if (!descend(0)) break;  // no continuous map at all
        budget.spend_map();
        if (seen.insert(assign).second) out.emplace_back(dom, cod, assign);
    }
    return out;
}

bool one_step_homotopic(const DigitalMap& g, const DigitalMap& h, bool strong) {
    require_comparable(g, h);
    return one_step_assignments(g.domain(), g.codomain(), g.assignment(), h.assignment(), strong);
}

void verify_certificate(const HomotopyCertificate& c) {
    if (c.steps.empty()) throw InternalError("homotopy certificate has no steps");
    const DigitalImage& dom = c.steps.front().domain();
    const DigitalImage& cod = c.steps.front().codomain();
    for (const DigitalMap& s : c.steps) {
        if (s.domain() != dom || s.codomain() != cod)
            throw InternalError("homotopy certificate mixes domains or codomains");
        if (!is_continuous(s))
            throw InternalError("homotopy certificate contains a discontinuous stage");
    }
    for (size_t i = 0; i + 1 < c.steps.size(); ++i)
        if (!one_step_assignments(dom, cod, c.steps[i].assignment(), c.steps[i + 1].assignment(),
                                  c.strong))
            throw InternalError("homotopy certificate contains an invalid step");
}

std::optional<HomotopyCertificate> find_homotopy(const DigitalMap& g, const DigitalMap& h,
                                                 bool strong, const EnumerationGuard& guard) {
    require_comparable(g, h);
    const DigitalImage& dom = g.domain();
    const DigitalImage& cod = g.codomain();
    Budget budget(guard);
    Enumerator en(dom, cod, budget);
    AssignmentSet visited;
    ParentMap parents;
    const std::vector<int>& target = h.assignment();
    bool found = false;
    flood_component(en, g.assignment(), strong, budget, visited, &parents,
                    [&](const std::vector<int>& a) {
                        if (a == target) {
                            found = true;
                            return false;
                        }
                        return true;
                    });
    if (!found) return std::nullopt;
    std::vector<std::vector<int>> chain{target};
    while (chain.back() != g.assignment()) chain.push_back(parents.at(chain.back()));
    HomotopyCertificate cert;
    cert.strong = strong;
    cert.steps.reserve(chain.size());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        cert.steps.emplace_back(dom, cod, *it);
    verify_certificate(cert);
    return cert;
}

bool is_homotopic(const DigitalMap& g, const DigitalMap& h, bool strong,
                  const EnumerationGuard& guard) {
    return find_homotopy(g, h, strong, guard).has_value();
}

std::vector<HomotopyClass> homotopy_classes(const DigitalImage& img, bool strong,
                                            const EnumerationGuard& guard) {
    Budget budget(guard);
    std::vector<std::vector<int>> all;
    {
        Enumerator en(img, img, budget);
        en.run([&](const std::vector<int>& a) {
            all.push_back(a);
            return true;
        });
    }
    Enumerator en(img, img, budget);
    AssignmentSet visited;
    std::vector<std::vector<std::vector<int>>> classes;
    for (const std::vector<int>& seed : all) {
        if (visited.contains(seed)) continue;
        std::vector<std::vector<int>> members;
        flood_component(en, seed, strong, budget, visited, nullptr,
                        [&](const std::vector<int>& a) {
                            members.push_back(a);
                            return true;
                        });
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<HomotopyClass> out;
    out.reserve(classes.size());
    for (const auto& members : classes) {
        HomotopyClass c{DigitalMap(img, img, members.front()), {}};
        c.members.reserve(members.size());
        for (const std::vector<int>& a : members) c.members.emplace_back(img, img, a);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

bool contractible_impl(const DigitalImage& img, bool strong, const EnumerationGuard& guard) {
    if (img.size() == 0) return false;  // no constant map exists
    Budget budget(guard);
    Enumerator en(img, img, budget);
    AssignmentSet visited;
    bool found = false;
    flood_component(en, identity_assignment(img.size()), strong, budget, visited, nullptr,
                    [&](const std::vector<int>& a) {
                        if (is_constant_assignment(a)) {
                            found = true;
                            return false;
                        }
                        return true;
                    });
    return found;
}

}  // namespace

bool is_contractible(const DigitalImage& img, const EnumerationGuard& guard) {
    return contractible_impl(img, false, guard);
}

bool is_strongly_contractible(const DigitalImage& img, const EnumerationGuard& guard) {
    return contractible_impl(img, true, guard);
}

bool has_fpp(const DigitalImage& img, const EnumerationGuard& guard) {
    bool all_fix = true;
    for_each_continuous_map(
        img, img,
        [&](const std::vector<int>& a) {
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] == static_cast<int>(i)) return true;
            all_fix = false;  // also reached by the empty image's empty map
            return false;
        },
        guard);
    return all_fix;
}

bool SpectrumResult::contains(const Int& v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

SpectrumResult fixed_point_spectrum(const DigitalImage& img, const EnumerationGuard& guard) {
    std::map<long long, std::vector<int>> seen;
    for_each_continuous_map(
        img, img,
        [&](const std::vector<int>& a) {
            long long fixed = 0;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] == static_cast<int>(i)) ++fixed;
            seen.emplace(fixed, a);
            return true;
        },
        guard);
    return finish_spectrum(img, img, seen);
}

SpectrumResult lefschetz_spectrum(const DigitalImage& img, Theory theory,
                                  const EnumerationGuard& guard, bool allow_high_dimension) {
    // Build the complex once; enumerated maps only contribute diagonal terms.
    std::optional<SimplicialComplex> sc;
    std::optional<CubicalComplex> cc;
    int top = -1;
    if (theory == Theory::simplicial) {
        sc.emplace(build_simplicial_complex(img));
        top = sc->top_dim();
    } else {
        cc.emplace(build_cubical_complex(img, allow_high_dimension));
        top = cc->top_dim();
    }

    // Complexes without 2-cells need no cell-image machinery: the alternating
    // trace is the fixed-point count minus the signed fixed-edge count, read
    // straight off the assignment.
    std::vector<std::pair<int, int>> edge_cells;
    if (top == 1) {
        if (theory == Theory::simplicial) {
            for (const Simplex& s : sc->cells[1])
                edge_cells.emplace_back(s[0], s[1]);
        } else {
            for (const Cube& c : cc->cells[1]) {
                std::vector<Point> vs = c.vertices();
                edge_cells.emplace_back(*img.index_of(vs[0]), *img.index_of(vs[1]));
            }
        }
    }

    std::map<long long, std::vector<int>> seen;
    for_each_continuous_map(
        img, img,
        [&](const std::vector<int>& a) {
            long long value = 0;
            if (top <= 1) {
                for (size_t i = 0; i < a.size(); ++i)
                    if (a[i] == static_cast<int>(i)) ++value;
                for (const auto& [u, v] : edge_cells) {
                    if (a[static_cast<size_t>(u)] == u && a[static_cast<size_t>(v)] == v)
                        --value;  // orientation kept: the edge trace gains +1
                    else if (a[static_cast<size_t>(u)] == v && a[static_cast<size_t>(v)] == u)
                        ++value;  // orientation reversed: the edge trace gains -1
                }
            } else {
                DigitalMap f(img, img, a);
                Int full = theory == Theory::simplicial ? fast_simplicial_lefschetz(f, *sc)
                                                        : fast_cubical_lefschetz(f, *cc);
                value = full.convert_to<long long>();
            }
            seen.emplace(value, a);
            return true;
        },
        guard);
    SpectrumResult r = finish_spectrum(img, img, seen);
    for (const Int& v : r.values)
        if (abs(v) > img.size())
            throw InternalError("a Lefschetz spectrum value escaped the cardinality bound");
    return r;
}

SpectrumResult afp_spectrum(const DigitalMap& f, int n, bool strong,
                            const EnumerationGuard& guard) {
    if (!f.is_endomorphism() || !is_continuous(f))
        throw DomainError("approximate-fixed-point spectra require a continuous self-map");
    if (n < 0) throw DomainError("approximate-fixed-point radius must be nonnegative");
    if (strong && n != 1)
        throw DomainError(
            "the strong approximate-fixed-point spectrum is defined for 1-approximate fixed "
            "points (n = 1)");
    const DigitalImage& img = f.domain();
    Budget budget(guard);
    Enumerator en(img, img, budget);
    AssignmentSet visited;
    std::map<long long, std::vector<int>> seen;
    flood_component(en, f.assignment(), strong, budget, visited, nullptr,
                    [&](const std::vector<int>& a) {
                        DigitalMap g(img, img, a);
                        long long count =
                            static_cast<long long>(approx_fixed_points(g, n).size());
                        seen.emplace(count, a);
                        return true;
                    });
    return finish_spectrum(img, img, seen);
}

std::optional<EquivalenceWitness> find_homotopy_equivalence(const DigitalImage& x,
                                                            const DigitalImage& y, bool strong,
                                                            const EnumerationGuard& guard) {
    Budget budget(guard);
    AssignmentSet class_x = identity_class(x, strong, budget);
    return equivalence_search(x, y, class_x, strong, budget);
}

bool is_homotopy_equivalent(const DigitalImage& x, const DigitalImage& y, bool strong,
                            const EnumerationGuard& guard) {
    return find_homotopy_equivalence(x, y, strong, guard).has_value();
}

namespace {

// One accepted thinning move on the current image: the point being removed,
// its retraction target, and the one-step stages (as self-assignments of the
// current image) leading from the identity to the retraction.
struct Move {
    int removed;
    int target;
    std::vector<std::vector<int>> stages;
};

// A dominated vertex x (a neighbour y with N(x)\{y} inside N[y]) retracts to y
// in one step; the step is strong whenever it is continuous.
std::optional<Move> find_domination(const DigitalImage& cur) {
    int n = cur.size();
    for (int x = 0; x < n; ++x) {
        for (int y : cur.neighbors(x)) {
            bool ok = true;
            for (int z : cur.neighbors(x)) {
                if (z != y && !cur.close(z, y)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<int> r = identity_assignment(n);
            r[static_cast<size_t>(x)] = y;
            return Move{x, y, {std::move(r)}};
        }
    }
    return std::nullopt;
}

// A degree-2 point x whose neighbours u, v share a second common neighbour y
// collapses across the diagonal to y, via the intermediate map that sends
// x to one neighbour and the other-role neighbour to y.  Two ordinary steps;
// never strong (u and v are not close, yet one ends up at y while the other
// stays — the cross condition fails).
std::optional<Move> find_corner_collapse(const DigitalImage& cur) {
    int n = cur.size();
    for (int x = 0; x < n; ++x) {
        const std::vector<int>& nb = cur.neighbors(x);
        if (nb.size() != 2) continue;
        int u = nb[0], v = nb[1];
        for (int y : cur.neighbors(u)) {
            if (y == x || y == v || !cur.adjacent(y, v)) continue;
            // Roles: the neighbour moved to y must keep its other edges close to y.
            auto role_ok = [&](int moved) {
                for (int z : cur.neighbors(moved))
                    if (z != x && z != y && !cur.close(z, y)) return false;
                return true;
            };
            int stay, moved;
            if (role_ok(u)) {
                moved = u;
                stay = v;
            } else if (role_ok(v)) {
                moved = v;
                stay = u;
            } else {
                continue;
            }
            std::vector<int> mid = identity_assignment(n);
            mid[static_cast<size_t>(x)] = stay;
            mid[static_cast<size_t>(moved)] = y;
            std::vector<int> r = identity_assignment(n);
            r[static_cast<size_t>(x)] = y;
            return Move{x, y, {std::move(mid), std::move(r)}};
        }
    }
    return std::nullopt;
}

ThinResult thin_greedy(const DigitalImage& img, bool strong, bool corners,
                       const EnumerationGuard& guard) {
    (void)guard;  // greedy thinning is polynomial; no enumeration happens
    DigitalImage cur = img;
    std::vector<int> comp = identity_assignment(img.size());   // input index -> cur index
    std::vector<int> to_input = identity_assignment(img.size());  // cur index -> input index
    std::vector<DigitalMap> chain{identity_map(img)};
    std::vector<ThinStep> steps;

    for (;;) {
        std::optional<Move> move = find_domination(cur);
        if (!move && corners) move = find_corner_collapse(cur);
        if (!move) break;
        steps.push_back({cur.point(move->removed), cur.point(move->target)});
        for (const std::vector<int>& stage : move->stages) {
            std::vector<int> g(comp.size());
            for (size_t i = 0; i < comp.size(); ++i)
                g[i] = to_input[static_cast<size_t>(stage[static_cast<size_t>(comp[i])])];
            chain.emplace_back(img, img, std::move(g));
        }
        const std::vector<int>& r = move->stages.back();
        std::vector<int> keep;
        keep.reserve(static_cast<size_t>(cur.size()) - 1);
        std::vector<int> pos(static_cast<size_t>(cur.size()), -1);
        for (int i = 0; i < cur.size(); ++i) {
            if (i == move->removed) continue;
            pos[static_cast<size_t>(i)] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
        for (int& c : comp) c = pos[static_cast<size_t>(r[static_cast<size_t>(c)])];
        std::vector<int> new_to_input(keep.size());
        for (size_t j = 0; j < keep.size(); ++j)
            new_to_input[j] = to_input[static_cast<size_t>(keep[j])];
        to_input = std::move(new_to_input);
        cur = cur.induced(keep);
    }

    ThinResult out{cur,
                   std::move(steps),
                   false,
                   DigitalMap(img, cur, comp),
                   DigitalMap(cur, img, to_input),
                   HomotopyCertificate{std::move(chain), strong}};
    verify_certificate(out.round_trip);
    if (out.round_trip.steps.back() != compose(out.inclusion, out.retraction))
        throw InternalError("thinning certificate does not end at the round trip");
    return out;
}

ThinResult thin_exhaustive(const DigitalImage& img, bool strong, const EnumerationGuard& guard) {
    Budget budget(guard);
    AssignmentSet class_x = identity_class(img, strong, budget);
    int n = img.size();
    for (int card = n == 0 ? 0 : 1; card <= n; ++card) {
        // Subsets of the point indices with `card` elements, lexicographic.
        std::vector<int> subset(static_cast<size_t>(card));
        for (int i = 0; i < card; ++i) subset[static_cast<size_t>(i)] = i;
        for (;;) {
            budget.spend_partial();
            DigitalImage sub = img.induced(subset);
            std::optional<EquivalenceWitness> w =
                equivalence_search(img, sub, class_x, strong, budget);
            if (w) {
                std::optional<HomotopyCertificate> round_trip =
                    find_homotopy(identity_map(img), compose(w->backward, w->forward), strong,
                                  guard);
                if (!round_trip)
                    throw InternalError("an equivalence witness failed to certify its round trip");
                return ThinResult{std::move(sub), {},          true, std::move(w->forward),
                                  std::move(w->backward), std::move(*round_trip)};
            }
            // next combination
            int k = card - 1;
            while (k >= 0 && subset[static_cast<size_t>(k)] == n - card + k) --k;
            if (k < 0) break;
            ++subset[static_cast<size_t>(k)];
            for (int j = k + 1; j < card; ++j)
                subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw InternalError("exhaustive thinning found no equivalent subimage, not even the image");
}

}  // namespace

ThinResult thin(const DigitalImage& img, bool strong, ThinMode mode,
                const EnumerationGuard& guard) {
    switch (mode) {
        case ThinMode::greedy:
            return thin_greedy(img, strong, false, guard);
        case ThinMode::corner:
            if (strong)
                throw DomainError(
                    "corner collapses are ordinary homotopies only; strong thinning supports "
                    "greedy and exhaustive modes");
            return thin_greedy(img, false, true, guard);
        case ThinMode::exhaustive:
            return thin_exhaustive(img, strong, guard);
    }
    throw DomainError("unknown thinning mode");
}

}  // namespace lefdt
