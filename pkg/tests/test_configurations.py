import itertools
import json

import pytest

from pauligeom import configurations as cfg
from pauligeom import polar_geometry as pg
from pauligeom.errors import InternalConsistencyError, UsageError
from pauligeom.pauli_codec import point_to_word, word_to_point


@pytest.fixture(scope="module")
def partition(ostar):
    return pg.triple_partitions(ostar)[0]


def test_fig1_secants(ostar, ctx4):
    rep = cfg.fig_secants(ostar, ctx4)
    assert rep.roles() == {"ovoid": 9, "secant-point": 36}
    assert len(rep.lines) == 36
    classes = {p.role: {q.cls for q in rep.points if q.role == p.role}
               for p in rep.points}
    assert classes["ovoid"] == {"symmetric"}
    assert classes["secant-point"] == {"skew"}


def test_fig2_partition_axis_tetrad(ostar, quadric4, partition):
    rep = cfg.fig_conic_partition(ostar, partition, quadric4)
    roles = rep.roles()
    assert roles["conic-1"] == roles["conic-2"] == roles["conic-3"] == 3
    assert roles["nucleus"] == 3
    assert roles["tetrad-point"] == 9
    assert len(rep.lines) == 4
    skew = [p for p in rep.points if p.cls == "skew"]
    assert len(skew) == 12


def test_fig3_two_ovoids_on_conic(ostar, gens4):
    rep = cfg.fig_two_ovoids_conic(ostar, ostar.points[:3], gens4)
    roles = rep.roles()
    assert roles == {"shared-conic": 3, "ovoid-1": 6, "ovoid-2": 6, "nucleus": 1}
    symmetric = [p for p in rep.points if p.cls == "symmetric"]
    assert len(symmetric) == 15
    assert len(rep.lines) == 6
    nucleus_idx = next(
        i for i, p in enumerate(rep.points) if p.role == "nucleus"
    )
    assert all(nucleus_idx in line for line in rep.lines)


def test_fig4_six_ovoids(ostar, gens4, partition):
    rep = cfg.fig_six_ovoids(ostar, partition, gens4)
    roles = rep.roles()
    assert roles["axis-point"] == 3
    member_roles = [r for r in roles if r.startswith("triad1-")]
    assert sum(roles[r] for r in member_roles) == 27
    for r in member_roles:
        a, b = r.split("|")
        assert a.startswith("triad1-") and b.startswith("triad2-")
    assert len(rep.lines) == 1


def test_fig5_commutation(ostar, gens4, partition):
    rep = cfg.fig_commutation(ostar, partition, gens4)
    assert rep.annotations["symmetric_profile"] == "5,5,5,5,5,5"
    skew_profile = [int(x) for x in rep.annotations["skew_profile"].split(",")]
    assert set(skew_profile) <= {3, 7}
    assert len(rep.points) == 29


def test_fig6_two_ovoids_on_point(ostar, gens4):
    p = word_to_point("XXXX")
    from pauligeom.cli import _standard_split

    rep = cfg.fig_two_ovoids_point(ostar, p, _standard_split(ostar, p), gens4)
    assert len(rep.points) == 19
    assert all(q.cls == "symmetric" for q in rep.points)
    assert rep.annotations["extra_points"] in ("XXII IIXX", "IIXX XXII")
    assert len(rep.lines) == 9
    roles = rep.roles()
    assert roles["shared-point"] == 1
    assert roles["extra-point"] == 2
    assert roles["second-ovoid"] == 8


def test_fig7_pentad(ostar, quadric4):
    rep = cfg.fig_pentad(ostar, ostar.points[:5], quadric4)
    assert len(rep.points) == 11
    assert rep.roles() == {"vertex": 1, "pentad": 5, "quartet-extra": 5}
    assert len(rep.lines) == 5
    vertex_idx = next(i for i, p in enumerate(rep.points) if p.role == "vertex")
    assert all(vertex_idx in line for line in rep.lines)


def test_fig8_sextet(ostar, quadric4):
    triple = tuple(word_to_point(w) for w in ("ZIIX", "XZXI", "XXXX"))
    rep = cfg.fig_sextet(ostar, ostar.complement_in(triple), quadric4)
    assert rep.annotations["pairing_nucleus"] == "ZYII"
    roles = rep.roles()
    assert roles == {
        "double-six-ovoid": 6,
        "double-six-mate": 6,
        "core": 15,
        "pairing-nucleus": 1,
    }
    assert len(rep.lines) == 45 + 6


def test_fig9_nuclei_fan(ostar):
    p = word_to_point("XXXX")
    rep = cfg.fig_nuclei_fan(ostar, p, word_to_point("ZYII"))
    roles = rep.roles()
    assert roles["six-1"] == 6
    assert roles["six-2"] == 6
    assert roles["fan-nucleus"] == 15
    assert roles["gq-core"] == 15
    assert rep.annotations["concurrence"] == "YZXX"
    assert rep.annotations["gq_lines"] == "45"
    # the 28 nuclei: singled + 6 + 6 + 15, all skew
    nuclei_roles = ("singled-nucleus", "six-1", "six-2", "fan-nucleus")
    nuclei = [q for q in rep.points if q.role in nuclei_roles]
    assert len(nuclei) == 28
    assert all(q.cls == "skew" for q in nuclei)
    core = [q for q in rep.points if q.role == "gq-core"]
    assert all(q.cls == "symmetric" for q in core)


def test_fig9_fan_sweep_all_points_and_nuclei(ostar):
    # every point of the ovoid, every one of its 28 conic nuclei
    checked = 0
    for p in ostar.points:
        others = ostar.complement_in((p,))
        for a, b in itertools.combinations(others, 2):
            fan = cfg.nuclei_fan_structure(ostar, p, p ^ a ^ b)
            assert fan.gq_lines == 45
            assert len(fan.fan15) == 15
            checked += 1
    assert checked == 252


def test_fig10_heptad_analogue(ostar):
    rep = cfg.heptad_analogue(
        ostar, word_to_point("ZZIZ"), word_to_point("IXXZ")
    )
    roles = rep.roles()
    assert roles == {
        "shared-ovoid-point": 2,
        "heptad-nucleus": 7,
        "heptad-line-point": 21,
        "triple-nucleus": 35,
    }
    assert len(rep.lines) == 21
    heptad = [q for q in rep.points if q.role == "heptad-nucleus"]
    thirds = [q for q in rep.points if q.role == "heptad-line-point"]
    triples = [q for q in rep.points if q.role == "triple-nucleus"]
    assert all(q.cls == "skew" for q in heptad + thirds)
    assert all(q.cls == "symmetric" for q in triples)


def test_heptad_analogue_all_pairs(ostar):
    for p1, p2 in itertools.combinations(ostar.points, 2):
        rep = cfg.heptad_analogue(ostar, p1, p2)
        assert rep.roles()["triple-nucleus"] == 35


def test_heptad_family_triangle(ostar, gens4):
    a, b, c = ostar.points[:3]
    rep = cfg.heptad_family(ostar, ((a, b), (b, c), (a, c)), gens4)
    assert rep.annotations["kind"] == "triangle"
    assert rep.annotations["heptads"] == "6"
    common = rep.annotations["common_point"]
    assert common == point_to_word(a ^ b ^ c, 4)


def test_heptad_family_quadrangle(ostar, gens4):
    a, b, c, d = ostar.points[:4]
    rep = cfg.heptad_family(ostar, ((a, b), (b, c), (c, d), (d, a)), gens4)
    assert rep.annotations["kind"] == "quadrangle"
    assert len(rep.lines) == 4
    meet = pg.solid_extra_point(ostar, (a, b, c, d))
    assert rep.annotations["concurrence"] == point_to_word(meet, 4)
    meet_idx = next(
        i for i, p in enumerate(rep.points) if p.role == "concurrence-point"
    )
    assert all(meet_idx in line for line in rep.lines)


def test_heptad_family_rejects_other_shapes(ostar, gens4):
    a, b, c, d = ostar.points[:4]
    with pytest.raises(UsageError):
        cfg.heptad_family(ostar, ((a, b), (b, c)), gens4)
    with pytest.raises(UsageError):
        cfg.heptad_family(ostar, ((a, b), (b, c), (c, d)), gens4)


def test_split63(ovoids, ostar):
    p = word_to_point("XXXX")
    rep = cfg.sixty_three_split(ovoids, ostar, p)
    assert rep.annotations["ovoids_through_point"] == "64"
    assert rep.annotations["one_point_neighbours"] == "35"
    assert rep.annotations["conic_neighbours"] == "28"
    tags = [k for k in rep.annotations if k.startswith("ovoid_")]
    assert len(tags) == 64
    assert sum("[one-point]" in k for k in tags) == 35
    assert sum("[conic]" in k for k in tags) == 28
    assert sum("[reference]" in k for k in tags) == 1


def test_split63_reference_invariance(ovoids):
    p = word_to_point("XXXX")
    through = pg.ovoids_through(ovoids, p)
    assert len(through) == 64
    for ref in through:
        assert pg.ovoid_intersection_census(ovoids, ref, p) == (35, 28)


def test_report_json_shape(ostar, ctx4):
    rep = cfg.fig_secants(ostar, ctx4)
    data = json.loads(rep.to_json())
    assert set(data) == {"name", "points", "lines", "annotations"}
    assert data["name"] == "fig1"
    assert set(data["points"][0]) == {"coords", "word", "class", "role"}
    assert all(len(line) == 3 for line in data["lines"])


def test_report_dot_output(ostar, ctx4):
    rep = cfg.fig_secants(ostar, ctx4)
    dot = rep.to_dot()
    assert dot.startswith('graph "fig1"')
    assert dot.count("shape=circle") == 9
    assert dot.count("shape=hexagon") == 36
    nodes = cfg.fig_secants(ostar, ctx4).to_dot(line_style="node")
    assert nodes.count("shape=point") == 36
    with pytest.raises(UsageError):
        rep.to_dot(line_style="wavy")


def test_report_verify_rejects_fake_line(ostar, ctx4):
    rep = cfg.fig_secants(ostar, ctx4)
    rep.lines.append((0, 1, 2))  # three ovoid points are never collinear
    with pytest.raises(InternalConsistencyError):
        rep.verify()
