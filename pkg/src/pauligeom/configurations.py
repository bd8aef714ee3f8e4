"""Named, exportable configurations of the four-qubit dissection.

Each extractor packages one of the distinguished ovoid substructures as a
ConfigReport: labelled points (coordinates, word, symmetry class, role),
the collinear triples that the structure draws, and free-form
annotations.  Reports self-verify on construction: every listed line sums
to zero and every class tag is recomputed from the word.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from . import polar_geometry as pg
from .errors import InternalConsistencyError, UsageError
from .gf2_core import to_string
from .pauli_codec import GeometryContext, is_symmetric, point_to_word
from .polar_geometry import GeneratorSet, Ovoid, Quadric


@dataclass(frozen=True)
class PointEntry:
    coords: str
    word: str
    cls: str
    role: str


@dataclass
class ConfigReport:
    """A named configuration: points with roles, lines, annotations."""

    name: str
    points: list[PointEntry] = field(default_factory=list)
    lines: list[tuple[int, int, int]] = field(default_factory=list)
    annotations: dict[str, str] = field(default_factory=dict)

    def roles(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for p in self.points:
            counts[p.role] = counts.get(p.role, 0) + 1
        return counts

    def verify(self) -> "ConfigReport":
        values = [int(p.coords, 2) for p in self.points]
        for p, v in zip(self.points, values):
            want = "symmetric" if is_symmetric(p.word) else "skew"
            if p.cls != want:
                raise InternalConsistencyError(f"class tag of {p.word} is wrong")
            if v == 0:
                raise InternalConsistencyError("zero vector listed as a point")
        for i, j, k in self.lines:
            if values[i] ^ values[j] ^ values[k] != 0:
                raise InternalConsistencyError("listed line does not sum to zero")
        return self

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "points": [
                {"coords": p.coords, "word": p.word, "class": p.cls, "role": p.role}
                for p in self.points
            ],
            "lines": [list(line) for line in self.lines],
            "annotations": dict(self.annotations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_dot(self, line_style: str = "clique") -> str:
        """Undirected DOT graph: circles for symmetric points, hexagons
        for skew ones; lines either as 3-cliques or as subdivided
        line-nodes."""
        if line_style not in ("clique", "node"):
            raise UsageError(f"unknown line style {line_style!r}")
        out = [f'graph "{self.name}" {{']
        out.append("  overlap=false;")
        for p in self.points:
            shape = "circle" if p.cls == "symmetric" else "hexagon"
            out.append(
                f'  "{p.word}" [shape={shape}, tooltip="{p.role} {p.coords}"];'
            )
        if line_style == "clique":
            for i, j, k in self.lines:
                a, b, c = (self.points[t].word for t in (i, j, k))
                out.append(f'  "{a}" -- "{b}"; "{b}" -- "{c}"; "{a}" -- "{c}";')
        else:
            for idx, (i, j, k) in enumerate(self.lines):
                node = f"line{idx}"
                out.append(f'  "{node}" [shape=point, width=0.05];')
                for t in (i, j, k):
                    out.append(f'  "{node}" -- "{self.points[t].word}";')
        out.append("}")
        return "\n".join(out) + "\n"


class _Builder:
    def __init__(self, name: str, ctx: GeometryContext):
        self.report = ConfigReport(name)
        self.ctx = ctx
        self.index: dict[int, int] = {}

    def add(self, value: int, role: str) -> int:
        if value in self.index:
            return self.index[value]
        word = point_to_word(value, self.ctx.n_qubits)
        entry = PointEntry(
            to_string(value, self.ctx.dim),
            word,
            "symmetric" if is_symmetric(word) else "skew",
            role,
        )
        self.report.points.append(entry)
        self.index[value] = len(self.report.points) - 1
        return self.index[value]

    def add_all(self, values, role: str):
        for v in sorted(values):
            self.add(v, role)

    def line(self, a: int, b: int, c: int):
        self.report.lines.append(tuple(self.index[v] for v in (a, b, c)))

    def note(self, key: str, value):
        self.report.annotations[key] = str(value)

    def done(self) -> ConfigReport:
        self.report.lines.sort()
        return self.report.verify()


def _word(v: int) -> str:
    return point_to_word(v, 4)


def fig_secants(o: Ovoid, ctx: GeometryContext) -> ConfigReport:
    """The ovoid and the 36 skew third points of its secant lines."""
    b = _Builder("fig1", ctx)
    b.add_all(o.points, "ovoid")
    thirds = pg.secant_third_points(o)
    b.add_all(thirds, "secant-point")
    for u, v in itertools.combinations(o.points, 2):
        b.line(u, v, u ^ v)
    b.note("ovoid", " ".join(_word(p) for p in o.points))
    b.note("secant_points", len(thirds))
    return b.done()


def fig_conic_partition(o: Ovoid, partition, quadric: Quadric) -> ConfigReport:
    """A partition into three conics, its axis, and the full tetrad."""
    b = _Builder("fig2", ctx=quadric.context)
    for k, triple in enumerate(partition, start=1):
        b.add_all(triple, f"conic-{k}")
    axis = sorted(pg.axis_of_partition(o, partition))
    b.add_all(axis, "nucleus")
    tetrad = pg.tetrad_of_partition(o, partition, quadric)
    for line in tetrad.lines:
        if sorted(line) == axis:
            continue
        b.add_all(line, "tetrad-point")
    for line in tetrad.lines:
        b.line(*line)
    b.note("axis", " ".join(_word(p) for p in axis))
    b.note("tetrad_lines", len(tetrad.lines))
    return b.done()


def fig_two_ovoids_conic(o: Ovoid, triple, gens: GeneratorSet) -> ConfigReport:
    """Two ovoids on a conic: 15 symmetric points, six lines on the nucleus."""
    ctx = gens.context
    triple = tuple(sorted(triple))
    other = pg.second_ovoid_on_conic(o, triple, gens)
    nucleus = triple[0] ^ triple[1] ^ triple[2]
    b = _Builder("fig3", ctx)
    b.add_all(triple, "shared-conic")
    b.add_all(o.complement_in(triple), "ovoid-1")
    b.add_all(other.complement_in(triple), "ovoid-2")
    b.add(nucleus, "nucleus")
    for u in o.complement_in(triple):
        b.line(u, nucleus ^ u, nucleus)
    plane = sorted(pg.conic_of(o, triple).plane.points())
    b.note("conic_plane", " ".join(_word(p) for p in plane))
    b.note("nucleus", _word(nucleus))
    return b.done()


def fig_six_ovoids(o: Ovoid, partition, gens: GeneratorSet) -> ConfigReport:
    """27 symmetric points that split into three ovoids in two ways."""
    fam = pg.six_ovoid_family(o, partition, gens)
    b = _Builder("fig4", gens.context)
    for p in sorted(fam.points):
        i = next(k for k, ov in enumerate(fam.triad_with_base, 1) if p in ov)
        j = next(k for k, ov in enumerate(fam.triad_other, 1) if p in ov)
        b.add(p, f"triad1-{i}|triad2-{j}")
    axis = sorted(fam.axis)
    b.add_all(axis, "axis-point")
    b.line(*axis)
    for k, ov in enumerate(fam.triad_with_base, 1):
        b.note(f"triad1_{k}", " ".join(_word(p) for p in ov.points))
    for k, ov in enumerate(fam.triad_other, 1):
        b.note(f"triad2_{k}", " ".join(_word(p) for p in ov.points))
    b.note("axis", " ".join(_word(p) for p in axis))
    return b.done()


def fig_commutation(
    o: Ovoid,
    partition,
    gens: GeneratorSet,
    symmetric_center: int | None = None,
    skew_center: int | None = None,
) -> ConfigReport:
    """Commutation pattern of the 27-point family against two centers.

    Defaults: the first symmetric point outside the family and the first
    skew point, in canonical order.
    """
    ctx = gens.context
    fam = pg.six_ovoid_family(o, partition, gens)
    six = fam.all_ovoids()
    quadric = gens.quadric
    if symmetric_center is None:
        symmetric_center = next(
            p for p in quadric.points if p not in fam.points
        )
    if skew_center is None:
        skew_center = quadric.off_points()[0]
    if quadric.contains(skew_center) or not quadric.contains(symmetric_center):
        raise UsageError("centers must be one symmetric and one skew point")
    if symmetric_center in fam.points:
        raise UsageError("symmetric center must lie outside the 27-point family")
    b = _Builder("fig5", ctx)
    for p in sorted(fam.points):
        with_sym = ctx.sigma(symmetric_center, p) == 0
        with_skew = ctx.sigma(skew_center, p) == 0
        role = (
            "commutes-with-both"
            if with_sym and with_skew
            else "commutes-with-symmetric"
            if with_sym
            else "commutes-with-skew"
            if with_skew
            else "commutes-with-neither"
        )
        b.add(p, role)
    b.add(symmetric_center, "center-symmetric")
    b.add(skew_center, "center-skew")
    sym_profile = pg.commutation_profile(symmetric_center, six)
    skew_profile = pg.commutation_profile(skew_center, six)
    if sym_profile != (5, 5, 5, 5, 5, 5):
        raise InternalConsistencyError("symmetric center profile is not all fives")
    if not set(skew_profile) <= {3, 7}:
        raise InternalConsistencyError("skew center profile leaves {3, 7}")
    b.note("symmetric_center", _word(symmetric_center))
    b.note("skew_center", _word(skew_center))
    b.note("symmetric_profile", ",".join(map(str, sym_profile)))
    b.note("skew_profile", ",".join(map(str, skew_profile)))
    return b.done()


def fig_two_ovoids_point(o: Ovoid, p: int, split, gens: GeneratorSet) -> ConfigReport:
    """Two ovoids on one point: 19 symmetric points and the through line."""
    line, mate = pg.point_partition_line(o, p, split, gens)
    e1 = pg.solid_extra_point(o, split[0])
    e2 = pg.solid_extra_point(o, split[1])
    b = _Builder("fig6", gens.context)
    b.add(p, "shared-point")
    b.add_all(split[0], "quad-1")
    b.add_all(split[1], "quad-2")
    b.add(e1, "extra-point")
    b.add(e2, "extra-point")
    b.add_all(mate.complement_in((p,)), "second-ovoid")
    b.line(p, e1, e2)
    # the eight on-quadric lines joining each extra to the opposite quad
    for u in split[1]:
        b.line(e1, u, e1 ^ u)
    for u in split[0]:
        b.line(e2, u, e2 ^ u)
    b.note("through_line", " ".join(_word(v) for v in sorted(line)))
    b.note("extra_points", f"{_word(e1)} {_word(e2)}")
    if len(b.report.points) != 19:
        raise InternalConsistencyError("configuration is not 19 points")
    return b.done()


def fig_pentad(o: Ovoid, pentad, quadric: Quadric) -> ConfigReport:
    """The 11-point cone cut by the span of five ovoid points."""
    cone = pg.pentad_intersection(o, pentad, quadric)
    b = _Builder("fig7", quadric.context)
    b.add(cone.vertex, "vertex")
    b.add_all(sorted(pentad), "pentad")
    b.add_all((p for p in cone.points if p != cone.vertex and p not in pentad),
              "quartet-extra")
    for line in cone.lines:
        b.line(*line)
    b.note("vertex", _word(cone.vertex))
    b.note("complement_quartet",
           " ".join(_word(q) for q in o.complement_in(pentad)))
    return b.done()


def fig_sextet(o: Ovoid, sextet, quadric: Quadric) -> ConfigReport:
    """The 27-point elliptic section over six ovoid points."""
    section = pg.sextet_intersection(o, sextet, quadric)
    b = _Builder("fig8", quadric.context)
    b.add_all(section.sextet, "double-six-ovoid")
    b.add_all(section.mates, "double-six-mate")
    b.add_all(section.core15, "core")
    b.add(section.pairing_nucleus, "pairing-nucleus")
    for line in section.lines:
        b.line(*line)
    for line in section.pairing_lines:
        b.line(*line)
    b.note("pairing_nucleus", _word(section.pairing_nucleus))
    b.note("section_lines", len(section.lines))
    return b.done()


@dataclass(frozen=True)
class NucleiFan:
    """The 28 conic nuclei on an ovoid point, split by a singled nucleus."""

    common_point: int
    singled_nucleus: int
    conic_pair: tuple[int, int]
    six_through_first: tuple[int, ...]
    six_through_second: tuple[int, ...]
    fan15: tuple[int, ...]
    concurrence: int
    cross15: tuple[int, ...]
    gq_lines: int


def nuclei_fan_structure(o: Ovoid, p: int, singled_nucleus: int) -> NucleiFan:
    """Compute and certify the 15 + 2x6 split and its quadrangle structure.

    The abstract 27-point generalized quadrangle uses the 30 collinear
    cross lines plus the 15 triples of concurrence points whose defining
    pairs form a perfect matching (those triples sum to the common point,
    not to zero, so they are genuine incidence-only lines).
    """
    ctx = GeometryContext(4)
    if p not in o:
        raise UsageError("fan point must lie on the ovoid")
    others = o.complement_in((p,))
    nuclei = {
        frozenset(pair): p ^ pair[0] ^ pair[1]
        for pair in itertools.combinations(others, 2)
    }
    if len(set(nuclei.values())) != 28:
        raise InternalConsistencyError("the 28 conic nuclei are not distinct")
    match = [k for k, v in nuclei.items() if v == singled_nucleus]
    if len(match) != 1:
        raise UsageError("singled point is not a nucleus of a conic on the point")
    a, b = sorted(match[0])
    xs = [x for x in others if x not in (a, b)]
    six_a = {x: p ^ a ^ x for x in xs}
    six_b = {x: p ^ b ^ x for x in xs}
    fan15 = sorted(v for k, v in nuclei.items() if not (k & {a, b}))
    concurrence = p ^ singled_nucleus
    cross = {}
    for x, y in itertools.combinations(xs, 2):
        w = six_a[x] ^ six_b[y]
        if w != six_a[y] ^ six_b[x] or not ctx.is_on_quadric(w):
            raise InternalConsistencyError("cross points do not pair symmetrically")
        cross[frozenset((x, y))] = w
    if len(set(cross.values())) != 15:
        raise InternalConsistencyError("cross points are not 15 distinct points")
    for x in xs:
        if six_a[x] ^ six_b[x] != concurrence:
            raise InternalConsistencyError("pairing lines miss the concurrence point")
    # abstract generalized quadrangle on 15 symmetric + 12 skew points
    lines = set()
    for x in xs:
        for y in xs:
            if x != y:
                lines.add(tuple(sorted((six_a[x], six_b[y], cross[frozenset((x, y))]))))
    for matching in _perfect_matchings(xs):
        lines.add(tuple(sorted(cross[frozenset(pair)] for pair in matching)))
    if len(lines) != 45:
        raise InternalConsistencyError("quadrangle structure is not 45 lines")
    points27 = sorted(set(cross.values()) | set(six_a.values()) | set(six_b.values()))
    pg._check_generalized_quadrangle(points27, lines, 2, 4)
    return NucleiFan(
        p,
        singled_nucleus,
        (a, b),
        tuple(sorted(six_a.values())),
        tuple(sorted(six_b.values())),
        tuple(fan15),
        concurrence,
        tuple(sorted(cross.values())),
        len(lines),
    )


def _perfect_matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for m in _perfect_matchings(remaining):
            yield [(first, partner)] + m


def fig_nuclei_fan(o: Ovoid, p: int, singled_nucleus: int) -> ConfigReport:
    """28 nuclei on a point with the 15 + 2x6 split behind one of them."""
    ctx = GeometryContext(4)
    fan = nuclei_fan_structure(o, p, singled_nucleus)
    b = _Builder("fig9", ctx)
    b.add(p, "common-point")
    b.add(fan.singled_nucleus, "singled-nucleus")
    a, bb = fan.conic_pair
    b.add(a, "distinguished-conic-point")
    b.add(bb, "distinguished-conic-point")
    b.add_all(fan.six_through_first, "six-1")
    b.add_all(fan.six_through_second, "six-2")
    b.add_all(fan.fan15, "fan-nucleus")
    b.add(fan.concurrence, "concurrence-point")
    b.add_all(fan.cross15, "gq-core")
    # the six concurrent pairing lines of the double six
    for na in fan.six_through_first:
        nb = na ^ fan.concurrence
        b.line(na, nb, fan.concurrence)
    b.line(p, fan.singled_nucleus, fan.concurrence)
    b.note("concurrence", _word(fan.concurrence))
    b.note("singled_nucleus", _word(fan.singled_nucleus))
    b.note("gq_lines", fan.gq_lines)
    b.note("gq_parameters", "s=2 t=4 points=27")
    return b.done()


def heptad_analogue(o: Ovoid, p1: int, p2: int) -> ConfigReport:
    """Nuclei of the seven conics on two shared ovoid points.

    A seven-point external set whose 21 joining lines stay off the
    quadric, together with the 35 symmetric nuclei of its own triples.
    """
    ctx = GeometryContext(4)
    if p1 not in o or p2 not in o or p1 == p2:
        raise UsageError("need two distinct points of the ovoid")
    rest = o.complement_in((p1, p2))
    heptad = sorted(p1 ^ p2 ^ x for x in rest)
    if len(set(heptad)) != 7 or any(ctx.is_on_quadric(h) for h in heptad):
        raise InternalConsistencyError("conic nuclei do not form a skew heptad")
    thirds = {}
    for u, v in itertools.combinations(heptad, 2):
        w = u ^ v
        if ctx.is_on_quadric(w):
            raise InternalConsistencyError("heptad line touches the quadric")
        thirds[(u, v)] = w
    if len(set(thirds.values())) != 21 or set(thirds.values()) & set(heptad):
        raise InternalConsistencyError("the 28 external points are not distinct")
    triple_nuclei = sorted(
        {x ^ y ^ z for x, y, z in itertools.combinations(heptad, 3)}
    )
    if len(triple_nuclei) != 35 or not all(
        ctx.is_on_quadric(t) for t in triple_nuclei
    ):
        raise InternalConsistencyError("triple nuclei are not 35 symmetric points")
    b = _Builder("fig10", ctx)
    b.add(p1, "shared-ovoid-point")
    b.add(p2, "shared-ovoid-point")
    b.add_all(heptad, "heptad-nucleus")
    b.add_all(sorted(thirds.values()), "heptad-line-point")
    b.add_all(triple_nuclei, "triple-nucleus")
    for (u, v), w in sorted(thirds.items()):
        b.line(u, v, w)
    b.note("shared_points", f"{_word(p1)} {_word(p2)}")
    b.note("heptad", " ".join(_word(h) for h in heptad))
    b.note("triple_nuclei", len(triple_nuclei))
    return b.done()


def _heptad_points(o: Ovoid, pair) -> frozenset[int]:
    rest = o.complement_in(pair)
    return frozenset(pair[0] ^ pair[1] ^ x for x in rest)


def heptad_family(o: Ovoid, pair_set, gens: GeneratorSet) -> ConfigReport:
    """Families of external heptads over a triangle or quadrangle of pairs."""
    pairs = [tuple(sorted(pr)) for pr in pair_set]
    for pr in pairs:
        if len(pr) != 2 or pr[0] not in o or pr[1] not in o or pr[0] == pr[1]:
            raise UsageError("pair set must consist of distinct ovoid point pairs")
    vertices = sorted({p for pr in pairs for p in pr})
    degree = {v: sum(v in pr for pr in pairs) for v in vertices}
    if len(pairs) == 3 and len(vertices) == 3 and set(degree.values()) == {2}:
        return _heptad_triangle(o, pairs, vertices, gens)
    if (
        len(pairs) == 4
        and len(vertices) == 4
        and set(degree.values()) == {2}
        and _is_single_cycle(pairs, vertices)
    ):
        return _heptad_quadrangle(o, pairs, vertices, gens)
    raise UsageError("pair set is neither a triangle nor a quadrangle")


def _is_single_cycle(pairs, vertices) -> bool:
    nbr = {v: set() for v in vertices}
    for a, b in pairs:
        nbr[a].add(b)
        nbr[b].add(a)
    seen = {vertices[0]}
    frontier = [vertices[0]]
    while frontier:
        new = [w for v in frontier for w in nbr[v] if w not in seen]
        seen.update(new)
        frontier = new
    return len(seen) == len(vertices)


def _heptad_triangle(o, pairs, vertices, gens) -> ConfigReport:
    ctx = gens.context
    nucleus = vertices[0] ^ vertices[1] ^ vertices[2]
    heptads = [_heptad_points(o, pr) for pr in pairs]
    other = pg.second_ovoid_on_conic(o, tuple(vertices), gens)
    heptads += [_heptad_points(other, pr) for pr in pairs]
    common = frozenset.intersection(*heptads)
    if common != {nucleus}:
        raise InternalConsistencyError("heptads do not share the triangle nucleus")
    for h1, h2 in itertools.combinations(heptads[:3], 2):
        if len(h1 & h2) != 1:
            raise InternalConsistencyError("triangle heptads overlap badly")
    b = _Builder("heptad-family", ctx)
    b.add_all(vertices, "triangle-vertex")
    b.add(nucleus, "common-nucleus")
    for k, h in enumerate(heptads, 1):
        owner = "base" if k <= 3 else "mate"
        for v in sorted(h - {nucleus}):
            idx = b.index.get(v)
            if idx is None:
                b.add(v, f"heptad-{k}({owner})")
            else:
                entry = b.report.points[idx]
                b.report.points[idx] = PointEntry(
                    entry.coords, entry.word, entry.cls,
                    f"{entry.role}|heptad-{k}({owner})",
                )
    b.note("kind", "triangle")
    b.note("common_point", _word(nucleus))
    b.note("heptads", len(heptads))
    return b.done()


def _heptad_quadrangle(o, pairs, vertices, gens) -> ConfigReport:
    ctx = gens.context
    # order the pairs around the cycle
    cycle = [pairs[0]]
    rest = list(pairs[1:])
    while rest:
        last = cycle[-1]
        nxt = next(pr for pr in rest if set(pr) & set(last))
        rest.remove(nxt)
        cycle.append(nxt)
    heptads = [_heptad_points(o, pr) for pr in cycle]
    meet = pg.solid_extra_point(o, tuple(vertices))
    shared = []
    for i in range(4):
        inter = heptads[i] & heptads[(i + 1) % 4]
        if len(inter) != 1:
            raise InternalConsistencyError("consecutive heptads do not share a point")
        shared.append(next(iter(inter)))
    for i in range(2):
        if heptads[i] & heptads[i + 2]:
            raise InternalConsistencyError("opposite heptads are not disjoint")
    b = _Builder("heptad-family", ctx)
    b.add_all(vertices, "quadrangle-vertex")
    b.add(meet, "concurrence-point")
    for k, h in enumerate(heptads, 1):
        for v in sorted(h):
            idx = b.index.get(v)
            if idx is None:
                b.add(v, f"heptad-{k}")
            else:
                entry = b.report.points[idx]
                if f"heptad-{k}" not in entry.role:
                    b.report.points[idx] = PointEntry(
                        entry.coords, entry.word, entry.cls,
                        f"{entry.role}|heptad-{k}",
                    )
    for s in shared:
        v = s ^ meet
        if v not in vertices:
            raise InternalConsistencyError("pairing lines are not concurrent")
        b.line(s, v, meet)
    b.note("kind", "quadrangle")
    b.note("concurrence", _word(meet))
    b.note("shared_points", " ".join(_word(s) for s in sorted(shared)))
    return b.done()


def sixty_three_split(all_ovoids, o: Ovoid, p: int) -> ConfigReport:
    """The 64 ovoids on a point and their 35/28 census against `o`."""
    ctx = GeometryContext(4)
    if p not in o:
        raise UsageError("census point must lie on the reference ovoid")
    through = pg.ovoids_through(all_ovoids, p)
    if len(through) != 64:
        raise InternalConsistencyError("point is not on exactly 64 ovoids")
    one, three = pg.ovoid_intersection_census(all_ovoids, o, p)
    b = _Builder("split63", ctx)
    b.add(p, "common-point")
    b.note("ovoids_through_point", len(through))
    b.note("one_point_neighbours", one)
    b.note("conic_neighbours", three)
    b.note("reference", " ".join(_word(q) for q in o.points))
    for k, ov in enumerate(through):
        if ov.points == o.points:
            tag = "reference"
        else:
            tag = "one-point" if (ov.mask & o.mask).bit_count() == 1 else "conic"
        b.note(f"ovoid_{k:02d}[{tag}]", " ".join(_word(q) for q in ov.points))
    return b.done()
