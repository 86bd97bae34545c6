"""End-to-end checks of the Python bindings against known fixture values."""

import json

import pytest

import lefdt
from lefdt import fixtures

BIG = lefdt.EnumerationGuard(2_000_000_000, 500_000_000)


# ---------------------------------------------------------------- images


def test_image_basics():
    img = fixtures.grid(3, 2)
    assert img.dimension == 2
    assert len(img) == 6
    assert img.is_connected()
    assert img.adjacent(img.point(0), img.point(1))
    assert not img.adjacent(img.point(0), img.point(0))
    assert img.close(0, 0) and img.close(0, 1)
    assert img.distance(0, 5) == 3


def test_image_constructors():
    sq = lefdt.DigitalImage.with_ct(2, [[0, 0], [0, 1], [1, 0], [1, 1]], 1)
    assert len(sq.edges) == 4
    tri = lefdt.DigitalImage.with_edges(
        1, [[0], [1], [2]], [([0], [1]), ([0], [2]), ([1], [2])]
    )
    assert len(tri.edges) == 3
    assert sq == fixtures.cycle_embedded(4)


def test_maps():
    c4 = fixtures.cycle(4)
    ident = lefdt.identity_map(c4)
    assert lefdt.is_continuous(ident)
    assert ident.is_endomorphism()
    assert len(lefdt.fixed_points(ident)) == 4
    rot = lefdt.DigitalMap(c4, c4, [1, 2, 3, 0])
    assert lefdt.is_continuous(rot)
    assert lefdt.fixed_points(rot) == []
    assert lefdt.compose(rot, rot).assignment == [2, 3, 0, 1]
    fold = lefdt.DigitalMap(c4, c4, [0, 2, 0, 2])
    assert not lefdt.is_continuous(fold)


# ------------------------------------------------------- invariants


def test_euler_characteristics():
    assert lefdt.simplicial_euler(fixtures.grid(3, 2)) == -1
    assert lefdt.cubical_euler(fixtures.grid(3, 2)) == 1
    assert lefdt.simplicial_euler(fixtures.theta()) == -1
    assert lefdt.cubical_euler(fixtures.theta()) == -1
    assert lefdt.simplicial_euler(fixtures.cycle(8)) == 0


def test_homology():
    h = lefdt.homology(fixtures.cycle(8))
    assert [g.betti for g in h] == [1, 1]
    assert all(g.torsion == [] for g in h)
    h = lefdt.homology(fixtures.theta(), theory=lefdt.Theory.cubical)
    assert [g.betti for g in h] == [1, 2]


def test_lefschetz_reports():
    rep = lefdt.cubical_lefschetz(fixtures.rot180_grid(4, 2))
    assert rep.value == 1
    assert rep.chain_traces == [0, 0, 1]
    assert rep.homology_traces == [1, 0, 0]
    assert [c.dim for c in rep.fixed_cells] == [2]

    rep = lefdt.cubical_lefschetz(fixtures.rot180_theta())
    assert rep.value == 1
    assert rep.chain_traces == [1, 0]
    assert [c.dim for c in rep.fixed_cells] == [0]

    rep = lefdt.simplicial_lefschetz(lefdt.identity_map(fixtures.cycle(5)))
    assert rep.value == lefdt.simplicial_euler(fixtures.cycle(5)) == 0


def test_cubical_requires_c1():
    with pytest.raises(lefdt.DomainError):
        lefdt.cubical_lefschetz(lefdt.identity_map(fixtures.cycle(5)))


def test_afp():
    f = fixtures.antipodal(3)
    assert lefdt.fixed_points(f) == []
    assert len(lefdt.approx_fixed_points(f, 3)) == 8
    assert len(lefdt.approx_fixed_points(f, 2)) == 0
    assert lefdt.afp_lower_bound_check(f, lefdt.Theory.cubical)


# ------------------------------------------------------- homotopy


def test_homotopy_and_classes():
    c4 = fixtures.cycle(4)
    ident = lefdt.identity_map(c4)
    const = lefdt.constant_map(c4, c4.point(0))
    assert lefdt.is_homotopic(ident, const, guard=BIG)
    assert not lefdt.is_homotopic(ident, const, strong=True, guard=BIG)

    cert = lefdt.find_homotopy(ident, const, guard=BIG)
    assert cert is not None
    lefdt.verify_certificate(cert)  # raises on a bad certificate

    assert lefdt.is_contractible(c4, guard=BIG)
    assert not lefdt.is_strongly_contractible(c4, guard=BIG)

    classes = lefdt.homotopy_classes(fixtures.cycle(8), guard=BIG)
    assert sorted(len(c) for c in classes) == [8, 8, 8856]


def test_spectra():
    c4 = fixtures.cycle(4)
    assert lefdt.fixed_point_spectrum(c4, guard=BIG).values == [0, 1, 2, 3, 4]
    sp = lefdt.lefschetz_spectrum(c4, lefdt.Theory.simplicial, guard=BIG)
    assert sp.values == [0, 1, 2]
    for value, witness in sp.witnesses:
        assert lefdt.simplicial_lefschetz(witness).value == value

    hexagon = fixtures.cycle_embedded(6)
    sp = lefdt.afp_spectrum(lefdt.identity_map(hexagon), 1, guard=BIG)
    assert sp.values == [0, 6]


def test_fpp_and_equivalence():
    assert lefdt.has_fpp(fixtures.point(), guard=BIG)
    # The two-point interval admits the continuous swap, so it lacks the
    # fixed-point property; among connected images only the point has it.
    assert not lefdt.has_fpp(fixtures.hypercube(1), guard=BIG)
    assert not lefdt.has_fpp(fixtures.cycle(4), guard=BIG)
    w = lefdt.find_homotopy_equivalence(
        fixtures.cycle_embedded(4), fixtures.point(), guard=BIG
    )
    assert w is not None
    assert not lefdt.is_homotopy_equivalent(
        fixtures.cycle(6), fixtures.cycle(8), guard=BIG
    )


def test_thin():
    core = lefdt.thin(fixtures.robot(), mode=lefdt.ThinMode.corner)
    assert len(core.image) == 14
    lefdt.verify_certificate(core.round_trip)
    assert lefdt.compose(core.retraction, core.inclusion) == lefdt.identity_map(
        core.image
    )

    exact = lefdt.thin(fixtures.cycle_embedded(4), mode=lefdt.ThinMode.exhaustive)
    assert len(exact.image) == 1
    assert exact.minimal


def test_enumeration():
    c4 = fixtures.cycle(4)
    assert lefdt.count_continuous_self_maps(c4, guard=BIG) == 84
    maps = lefdt.enumerate_continuous_self_maps(c4, guard=BIG)
    assert len(maps) == 84
    assert all(lefdt.is_continuous(f) for f in maps)
    with pytest.raises(lefdt.ResourceLimitError):
        lefdt.homotopy_classes(
            fixtures.cycle(8), guard=lefdt.EnumerationGuard(1000, 1000)
        )


# ------------------------------------------------------- io


def test_io_round_trip(tmp_path):
    img = fixtures.theta()
    text = lefdt.image_to_json(img)
    assert lefdt.parse_image(text) == img
    path = tmp_path / "theta.json"
    path.write_text(text)
    assert lefdt.load_image(str(path)) == img
    doc = json.loads(text)
    assert doc["adjacency"] == "c1"
    assert doc["dimension"] == 2


def test_parse_errors():
    with pytest.raises(lefdt.ParseError):
        lefdt.parse_image("not json at all {")
    with pytest.raises(lefdt.ParseError):
        lefdt.load_image("/nonexistent/image.json")
