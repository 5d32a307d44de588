"""Constructive realizability of norm balls on the torus.

Every centrally symmetric lattice polygon with mod-2 congruent vertices is
a zonotope: the Minkowski sum of the symmetric segments spanned by half of
its (even) edge vectors.  Each segment [-w, w] is the dual ball of m
parallel geodesics in the primitive direction w/m, so the polygon is
realized by the corresponding multicurve and the norm is a weighted sum of
|det| pairings.

When the realizing collection has at least two distinct classes, every
curve crosses some other curve and the collection embeds as a 4-valent map
on the torus; :func:`realize_map` builds that map from exact rational
crossing data of straight geodesics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import polytope
from .maps import CombinatorialMap


class PolygonError(ValueError):
    pass


class TorusCollection:
    """Multiset of parallel-geodesic families: (primitive class, count)."""

    def __init__(self, families):
        fams = []
        for c, m in families:
            c = tuple(int(x) for x in c)
            if len(c) != 2 or gcd(c[0], c[1]) != 1:
                raise ValueError("class %r is not primitive in Z^2" % (c,))
            if m < 1:
                raise ValueError("multiplicity must be positive")
            fams.append((_half_plane(c), int(m)))
        self.families = tuple(sorted(fams))

    def __eq__(self, other):
        return (isinstance(other, TorusCollection)
                and self.families == other.families)

    def __repr__(self):
        return "TorusCollection(%r)" % (self.families,)


def _half_plane(c):
    """Normal form of an unoriented class: first nonzero coordinate > 0."""
    if c[0] < 0 or (c[0] == 0 and c[1] < 0):
        return (-c[0], -c[1])
    return c


def check_polygon(p):
    """Diagnostics for the realizable-polygon preconditions."""
    out = []
    if p.ambient_dim != 2:
        out.append("polygon must live in Z^2")
        return out
    if not polytope.is_symmetric(p):
        out.append("polygon is not centrally symmetric")
    if not polytope.mod2_congruent(p):
        out.append("polygon vertices are not congruent mod 2")
    if len(p.vertices) == 1:
        out.append("polygon is a single point")
    return out


def _boundary_cycle(p):
    """Vertices of a 2-polygon in CCW order (a segment gives its two ends)."""
    verts = list(p.vertices)
    if len(verts) <= 2:
        return verts
    cx = Fraction(sum(v[0] for v in verts), len(verts))
    cy = Fraction(sum(v[1] for v in verts), len(verts))

    def half(v):
        dy = v[1] - cy
        return 0 if dy > 0 or (dy == 0 and v[0] - cx > 0) else 1

    def cross(u, v):
        return ((u[0] - cx) * (v[1] - cy) - (u[1] - cy) * (v[0] - cx))

    import functools

    def cmp(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        c = cross(u, v)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(verts, key=functools.cmp_to_key(cmp))


def zonotope_decompose(p):
    """Generators w_i with p = Minkowski sum of the segments [-w_i, w_i]."""
    diags = check_polygon(p)
    if diags:
        raise PolygonError("; ".join(diags))
    cycle = _boundary_cycle(p)
    k = len(cycle)
    gens = []
    for i in range(k if k > 2 else 1):
        u, v = cycle[i], cycle[(i + 1) % k]
        e = (v[0] - u[0], v[1] - u[1])
        if e[0] % 2 or e[1] % 2:
            raise PolygonError("odd edge vector %r" % (e,))
        w = _half_plane((e[0] // 2, e[1] // 2))
        if w != (0, 0) and w not in gens:
            gens.append(w)
    return sorted(gens)


def realize(p):
    """A torus multicurve whose dual unit ball is the polygon."""
    gens = zonotope_decompose(p)
    if not gens:
        raise PolygonError("degenerate polygon: nothing to realize")
    families = []
    for w in gens:
        m = gcd(w[0], w[1])
        u = (w[0] // m, w[1] // m)
        families.append(((u[1], -u[0]), m))
    return TorusCollection(families)


def torus_norm(collection, a):
    """Intersection norm of a class: sum of m * |det(c, a)|."""
    ax, ay = (int(x) for x in a)
    return sum(m * abs(c[0] * ay - c[1] * ax)
               for c, m in collection.families)


def realized_ball(collection):
    """Dual unit ball of the collection, as a Minkowski sum of segments."""
    ball = None
    for c, m in collection.families:
        seg = polytope.segment((m * c[1], -m * c[0]))
        ball = seg if ball is None else polytope.minkowski_sum(ball, seg)
    return ball


# ---------------------------------------------------------------------------
# Geometric realization as a combinatorial map
# ---------------------------------------------------------------------------

def realize_map(collection):
    """The collection as a 4-valent map on the torus, or None.

    A map needs every curve to carry a crossing, which holds exactly when
    there are at least two distinct (hence non-parallel) classes.  Curves
    are straight geodesics; parallel copies are offset by distinct
    fractions, and all crossings are computed exactly.
    """
    fams = collection.families
    if len(fams) < 2:
        return None
    dirs = [c for c, m in fams for _ in range(m)]
    # generic offsets avoid triple points and coincident parallel copies;
    # retry with a new salt on the (codimension-one) degenerate choices
    for salt in range(64):
        curves = [
            (d, (Fraction((t + 1) * (salt + 3), 997),
                 Fraction((t + 2) * (t + 2) + 5 * salt, 1013)))
            for t, d in enumerate(dirs)]
        try:
            crossings = _line_crossings(curves)
        except _Degenerate:
            continue
        return _map_from_crossings(curves, crossings)
    raise AssertionError("no generic offset found")


class _Degenerate(Exception):
    pass


def _line_crossings(curves):
    """All torus crossings as ((i, s), (j, t), sign) with curve parameters
    s, t in [0, 1)."""
    crossings = []
    for i, (d1, o1) in enumerate(curves):
        for j in range(i + 1, len(curves)):
            d2, o2 = curves[j]
            det = d1[0] * d2[1] - d1[1] * d2[0]
            if det == 0:
                continue
            sign = 1 if det > 0 else -1
            # s*d1 + o1 = t*d2 + o2 + (u, v), one crossing per residue
            rx = o2[0] - o1[0]
            ry = o2[1] - o1[1]
            found = 0
            ru = abs(d1[0]) + abs(d2[0]) + 2
            rv = abs(d1[1]) + abs(d2[1]) + 2
            for u in range(-ru, ru + 1):
                for v in range(-rv, rv + 1):
                    s = Fraction((rx + u) * d2[1] - (ry + v) * d2[0], det)
                    t = Fraction((rx + u) * d1[1] - (ry + v) * d1[0], det)
                    if 0 <= s < 1 and 0 <= t < 1:
                        crossings.append(((i, s), (j, t), sign))
                        found += 1
            assert found == abs(det), "missed torus crossings"
    # distinct parameters along every curve (no triple points)
    per = {}
    for (i, s), (j, t), _ in crossings:
        per.setdefault(i, []).append(s)
        per.setdefault(j, []).append(t)
    for params in per.values():
        if len(set(params)) != len(params):
            raise _Degenerate
    return crossings


def _map_from_crossings(curves, crossings):
    crossings = sorted(set(crossings))
    passages = [[] for _ in curves]
    for v, ((i, s), (j, t), _) in enumerate(crossings):
        passages[i].append((s, v, 0))
        passages[j].append((t, v, 1))
    n = 4 * len(crossings)
    rotation = [0] * n
    for v, (_, _, sign) in enumerate(crossings):
        cycle = (0, 2, 1, 3) if sign > 0 else (0, 3, 1, 2)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            rotation[4 * v + a] = 4 * v + b
    pairing = [-1] * n
    for i in range(len(curves)):
        plist = sorted(passages[i])
        assert plist, "curve without crossings"
        for k, (_, v, br) in enumerate(plist):
            _, w, br2 = plist[(k + 1) % len(plist)]
            out = 4 * v + (0 if br == 0 else 2)
            into = 4 * w + (1 if br2 == 0 else 3)
            pairing[out] = into
            pairing[into] = out
    assert -1 not in pairing
    return CombinatorialMap(rotation, pairing)
