"""Genus-2 collections from the annulus model and the one-faced census.

A collection is labelled by cyclic words over the four configuration arcs
a1, b1 (first handle) and a2, b2 (second handle), with integer twist
exponents around the core of the connecting annulus between consecutive
letters.  The four arcs are disjoint outside the annulus; all crossings
happen between the connecting arcs inside the annulus, so the
self-intersection number and the whole combinatorial map are computed by
the exact chord model of :mod:`isonorm.annulus`.

Port heights and the sign conventions of the emitted homology basis are
pinned by the census fixtures (the four golden dual balls and the
standard symplectic pairing of the basis walks).
"""

from __future__ import annotations

from itertools import product

from . import annulus, coorient, homology, polytope
from .annulus import Endpoint
from .maps import CombinatorialMap, canonical_key, check_valid, validate

LETTERS = ("a1", "b1", "a2", "b2")

# Boundary positions of the arc end-points: (letter, end) -> strip boundary
# point; '-' is where the arc leaves the annulus, '+' where it returns.
# Heights are listed top to bottom on each boundary circle; the letters of
# each handle alternate so the two arcs of a handle stay disjoint.
_LEFT_ORDER = (("b1", "-"), ("a1", "-"), ("b1", "+"), ("a1", "+"))
_RIGHT_ORDER = (("b2", "+"), ("a2", "-"), ("b2", "-"), ("a2", "+"))
_HEIGHTS = (8, 6, 4, 2)

PORTS = {}
for _p, _h in zip(_LEFT_ORDER, _HEIGHTS):
    PORTS[_p] = Endpoint("L", _h)
for _p, _h in zip(_RIGHT_ORDER, _HEIGHTS):
    PORTS[_p] = Endpoint("R", _h)

# Baseline twist of the straightest connector between two ports: a word
# exponent of k twists is drawn as a chord with lift offset k + baseline.
# Only two ordered pairs need a correction under the pinned port layout;
# traversing a connector backwards negates both exponent and baseline.
BASELINES = {
    (("b1", "+"), ("b2", "-")): -1,
    (("b2", "+"), ("b1", "-")): -1,
}


def _base(u, v):
    return BASELINES.get((u, v), -BASELINES.get((v, u), 0))


# Per-coordinate basis walks: (arc letter, True to step along the arc's
# own direction / False against it), in output coordinate order.  The
# four walks pair as a standard symplectic basis.
BASIS_SPEC = (("b1", False), ("a1", True), ("b2", False), ("a2", True))

# Orientation of the strip model relative to the surface: +1 means a
# positive determinant frame reads counterclockwise.
ORIENT = -1


class WordError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Arc words
# ---------------------------------------------------------------------------

def _check_word(curves):
    used = []
    for curve in curves:
        if not curve:
            raise WordError("empty curve word")
        for letter, sign, twist in curve:
            if letter not in LETTERS or sign not in (1, -1) \
                    or twist != int(twist):
                raise WordError("bad letter %r" % ((letter, sign, twist),))
            used.append(letter)
    if sorted(used) != sorted(LETTERS):
        raise WordError("each arc must be used exactly once, got %r" % used)


def reverse_curve(curve):
    """The same curve traversed backwards."""
    n = len(curve)
    return tuple(
        (curve[n - 1 - k][0], -curve[n - 1 - k][1],
         -curve[(n - 2 - k) % n][2])
        for k in range(n))


def canonical_word(curves):
    """Normal form up to cyclic rotation and reversal of each curve."""
    out = []
    for curve in curves:
        curve = tuple(tuple(x) for x in curve)
        best = None
        for cand in (curve, reverse_curve(curve)):
            for r in range(len(cand)):
                rot = cand[r:] + cand[:r]
                if best is None or rot < best:
                    best = rot
        out.append(best)
    return tuple(sorted(out))


def word_label(curves):
    """Human-readable label such as '{a1 a2^-1, b1 b2 eta}'."""
    parts = []
    for curve in canonical_word(curves):
        bits = []
        for letter, sign, twist in curve:
            bits.append(letter if sign > 0 else letter + "^-1")
            if twist:
                bits.append("eta" if twist == 1 else "eta^%d" % twist)
        parts.append(" ".join(bits))
    return "{" + ", ".join(parts) + "}"


def connectors(curves):
    """Connecting arcs of a word: (start port, end port, twist, curve, slot).

    Connector j of a curve runs from the exit end-point of letter j to the
    entry end-point of letter j+1, twisting as many times as the word says.
    """
    _check_word(curves)
    out = []
    for ci, curve in enumerate(curves):
        n = len(curve)
        for j, (letter, sign, twist) in enumerate(curve):
            exit_port = (letter, "+" if sign > 0 else "-")
            nletter, nsign, _ = curve[(j + 1) % n]
            entry_port = (nletter, "-" if nsign > 0 else "+")
            out.append((exit_port, entry_port, twist, ci, j))
    return out


def _conn_chord(conn):
    u, v, twist = conn[0], conn[1], conn[2]
    return annulus.chord(PORTS[u], PORTS[v], twist + _base(u, v))


def self_intersection(curves):
    """Total crossings of the collection, all inside the annulus."""
    conns = connectors(curves)
    chords = [_conn_chord(c) for c in conns]
    total = 0
    for i, ch in enumerate(chords):
        total += annulus.count_self_crossings(ch)
        for j in range(i + 1, len(chords)):
            total += annulus.count_crossings(ch, chords[j])
    return total


# ---------------------------------------------------------------------------
# Arc intersection formulas (four labelled end-points)
# ---------------------------------------------------------------------------

# A above C on the left boundary, B above D on the right.
ARC_POINTS = {
    "A": Endpoint("L", 6),
    "C": Endpoint("L", 3),
    "B": Endpoint("R", 6),
    "D": Endpoint("R", 3),
}


class AnnulusArc:
    """Oriented arc between two labelled end-points with a twist index
    (algebraic crossing number with the cut arc)."""

    def __init__(self, start, end, twist):
        if start not in ARC_POINTS or end not in ARC_POINTS \
                or start == end:
            raise ValueError("end-points must be two of A, B, C, D")
        self.start = start
        self.end = end
        self.twist = int(twist)

    def chord(self):
        return annulus.chord(ARC_POINTS[self.start], ARC_POINTS[self.end],
                             self.twist)

    def __repr__(self):
        return "AnnulusArc(%s->%s, %d)" % (self.start, self.end, self.twist)


def arc_intersection(arc1, arc2):
    """Minimal crossing number of two arcs with fixed end-points."""
    if {arc1.start, arc1.end} & {arc2.start, arc2.end}:
        raise ValueError("arcs must have four distinct end-points")
    return annulus.count_crossings(arc1.chord(), arc2.chord())


# ---------------------------------------------------------------------------
# Building the combinatorial map of a word
# ---------------------------------------------------------------------------

STANDARD_SYMPLECTIC = ((0, 1, 0, 0), (-1, 0, 0, 0),
                       (0, 0, 0, 1), (0, 0, -1, 0))


class Genus2Build:
    """A word realized as a combinatorial map with its basis walks."""

    def __init__(self, word, map_, walks, arc_edges, arc_forward):
        self.word = word
        self.map = map_
        self.walks = walks            # dual walks in coordinate order
        self.arc_edges = arc_edges    # letter -> edge index
        self.arc_forward = arc_forward  # letter -> forward half-edge

    def standard_basis(self):
        """Whether the four walks pair as a standard symplectic basis.

        This fails exactly when two arcs share a map edge, in which case
        the per-arc walks coincide and do not span the homology.
        """
        form = homology.intersection_form(self.map, self.walks)
        return tuple(tuple(r) for r in form) == STANDARD_SYMPLECTIC

    def eulco_classes(self):
        return coorient.enumerate_eulerian(self.map).classes(self.walks)

    def dual_ball(self):
        return polytope.convex_hull(self.eulco_classes())


def word_to_map(curves):
    """Realize a word with minimal-position connecting arcs.

    Returns a Genus2Build whose map has one vertex per crossing; raises
    WordError when some curve has no crossing at all (a vertex-free
    component, not representable as a 4-valent map).
    """
    conns = connectors(curves)
    chords = [_conn_chord(c) for c in conns]

    # crossings: (conn index, parameter, branch) pairs per vertex
    crossings = []
    for i, ci in enumerate(chords):
        for j in range(i, len(chords)):
            for k in annulus.crossing_shifts(ci, chords[j],
                                             self_pair=(i == j)):
                shifted = tuple(Endpoint(s, h + annulus.SCALE * k)
                                for s, h in chords[j])
                hit = annulus.segment_intersection(ci, shifted)
                assert hit is not None
                t1, t2, sign = hit
                crossings.append(((i, t1), (j, t2), sign * ORIENT))
    crossings.sort()
    if not crossings:
        raise WordError("collection has no crossings")

    # passages along each connector, ordered by parameter
    passages = [[] for _ in conns]
    for v, ((i, t1), (j, t2), _) in enumerate(crossings):
        passages[i].append((t1, v, 0))
        passages[j].append((t2, v, 1))
    for plist in passages:
        plist.sort()
        params = [t for t, _, _ in plist]
        assert len(set(params)) == len(params), "degenerate crossing"

    # germs at vertex v: 4v+0 = out along branch 0, 4v+1 = in along
    # branch 0, 4v+2 = out along branch 1, 4v+3 = in along branch 1;
    # rotation reads CCW, which depends on the crossing sign
    n = 4 * len(crossings)
    rotation = [0] * n
    for v, (_, _, sign) in enumerate(crossings):
        cycle = (0, 2, 1, 3) if sign > 0 else (0, 3, 1, 2)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            rotation[4 * v + a] = 4 * v + b

    # walk every curve to pair germs and locate the arc-bearing edges
    pairing = [-1] * n
    arc_edges = {}
    arc_forward = {}
    conn_by_slot = {(c[3], c[4]): idx for idx, c in enumerate(conns)}
    for ci, curve in enumerate(curves):
        items = []  # ('arc', letter, sign) and ('pass', vertex, branch)
        for j, (letter, sign, _) in enumerate(curve):
            items.append(("arc", letter, sign))
            for _, v, br in passages[conn_by_slot[(ci, j)]]:
                items.append(("pass", v, br))
        if not any(it[0] == "pass" for it in items):
            raise WordError(
                "curve %s has no crossings (vertex-free component)"
                % word_label([curve]))
        # rotate so the list starts right after a passage
        start = max(i for i, it in enumerate(items) if it[0] == "pass")
        items = items[start:] + items[:start]
        prev_out = 4 * items[0][1] + (0 if items[0][2] == 0 else 2)
        pending = []
        for it in items[1:] + items[:1]:
            if it[0] == "arc":
                pending.append((it[1], it[2]))
                continue
            _, v, br = it
            in_germ = 4 * v + (1 if br == 0 else 3)
            pairing[prev_out] = in_germ
            pairing[in_germ] = prev_out
            for letter, sign in pending:
                arc_edges[letter] = (prev_out, in_germ)
                arc_forward[letter] = prev_out if sign > 0 else in_germ
            pending = []
            prev_out = 4 * v + (0 if br == 0 else 2)

    assert -1 not in pairing
    m = CombinatorialMap(rotation, pairing)
    walks = tuple(
        (arc_forward[letter] if forward else m.pairing[arc_forward[letter]],)
        for letter, forward in BASIS_SPEC)
    arc_edge_idx = {letter: m.edge_index(g[0])
                    for letter, g in arc_edges.items()}
    return Genus2Build(canonical_word(curves), m, walks, arc_edge_idx,
                       arc_forward)


def has_separating_cycle(build_or_map):
    """Whether the collection graph contains a separating simple cycle.

    An embedded cycle is separating iff its mod-2 homology class vanishes,
    which it does iff it crosses every basis walk an even number of times;
    a dual walk crosses a cycle once for each shared edge.  Simple cycles
    (connected subgraphs with all vertex degrees two) are enumerated over
    edge subsets, which is fine at the census scale.
    """
    m = build_or_map.map if isinstance(build_or_map, Genus2Build) \
        else build_or_map
    walks = homology.homology_basis(m).walks
    walk_edges = [[m.edge_index(h) for h in w] for w in walks]
    ne = m.num_edges
    for mask in range(1, 1 << ne):
        deg = [0] * m.num_vertices
        comp = set()
        for e in range(ne):
            if mask >> e & 1:
                a, b = m.edges[e]
                deg[m.vertex_of[a]] += 1
                deg[m.vertex_of[b]] += 1
                comp.add(m.vertex_of[a])
                comp.add(m.vertex_of[b])
        if any(d not in (0, 2) for d in deg):
            continue
        if not _connected(m, mask, comp):
            continue
        if all(sum(mask >> e & 1 for e in we) % 2 == 0
               for we in walk_edges):
            return True
    return False


def _connected(m, mask, comp):
    start = next(iter(comp))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in range(m.num_edges):
            if mask >> e & 1:
                a, b = m.edges[e]
                va, vb = m.vertex_of[a], m.vertex_of[b]
                if va == v and vb not in seen:
                    seen.add(vb)
                    stack.append(vb)
                elif vb == v and va not in seen:
                    seen.add(va)
                    stack.append(va)
    return seen == comp


# ---------------------------------------------------------------------------
# The census
# ---------------------------------------------------------------------------

_ALL_PORTS = tuple((letter, end) for letter in LETTERS for end in ("-", "+"))


def _port_matchings():
    def rec(free):
        if not free:
            yield ()
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            rest = free[1:i] + free[i + 1:]
            for m in rec(rest):
                yield ((a, b),) + m
    return list(rec(_ALL_PORTS))


def _matching_to_word(matching, twists):
    """Curves of the collection defined by a port matching with one twist
    per connector (twist measured from the first port of the pair)."""
    link = {}
    for (u, v), t in zip(matching, twists):
        link[u] = (v, t)
        link[v] = (u, -t)
    curves = []
    seen = set()
    for letter in LETTERS:
        if letter in seen:
            continue
        curve = []
        cur, sign = letter, 1
        while True:
            seen.add(cur)
            exit_port = (cur, "+" if sign > 0 else "-")
            (nl, ne), t = link[exit_port]
            curve.append((cur, sign, t))
            cur, sign = nl, (1 if ne == "-" else -1)
            if cur == letter:
                # every port has degree two (its arc and its connector),
                # so the cycle can only close where it started
                assert sign == 1
                break
        curves.append(tuple(curve))
    return tuple(curves)


def census(twist_bound=2):
    """One-faced collections with all twists in [-bound, bound].

    Enumerates every port matching with twists in the window, keeps the
    words with exactly three crossings, realizes them as maps, keeps the
    one-faced ones and deduplicates up to isomorphism with reflection.
    Returns a list of Genus2Build representatives sorted by curve count
    (descending), with separating-cycle and genus cross-checks applied.
    """
    if twist_bound < 2:
        raise ValueError("twist_bound must be at least 2")
    window = range(-twist_bound, twist_bound + 1)
    pair_cache = {}
    self_cache = {}
    found = {}
    for matching in _port_matchings():
        ports = [(PORTS[u], PORTS[v]) for u, v in matching]
        bases = [_base(u, v) for u, v in matching]
        for twists in product(window, repeat=4):
            total = 0
            for i in range(4):
                key = (matching[i], twists[i])
                c = self_cache.get(key)
                if c is None:
                    c = annulus.count_self_crossings(
                        annulus.chord(ports[i][0], ports[i][1],
                                      twists[i] + bases[i]))
                    self_cache[key] = c
                total += c
                if total > 3:
                    break
            if total > 3:
                continue
            for i in range(4):
                if total > 3:
                    break
                for j in range(i + 1, 4):
                    key = (matching[i], twists[i], matching[j], twists[j])
                    c = pair_cache.get(key)
                    if c is None:
                        c = annulus.count_crossings(
                            annulus.chord(ports[i][0], ports[i][1],
                                          twists[i] + bases[i]),
                            annulus.chord(ports[j][0], ports[j][1],
                                          twists[j] + bases[j]))
                        pair_cache[key] = c
                    total += c
                    if total > 3:
                        break
            if total != 3:
                continue
            word = _matching_to_word(matching, twists)
            try:
                build = word_to_map(word)
            except WordError:
                continue
            m = build.map
            if validate(m) or len(m.faces) != 1:
                continue
            assert m.genus == 2
            assert not has_separating_cycle(build)
            key = canonical_key(m, allow_reflection=True)
            # prefer representatives whose walks form a genuine basis
            rank = (not build.standard_basis(), word_label(build.word))
            prev = found.get(key)
            if prev is None or rank < prev[0]:
                found[key] = (rank, build)
    reps = sorted((b for _, b in found.values()),
                  key=lambda b: (-len(b.word), word_label(b.word)))
    return reps


def exhaustive_unicellular_maps():
    """All isomorphism classes (with reflection) of connected 4-valent
    maps with three vertices and one face; every one has genus 2."""
    rot = []
    for v in range(3):
        b = 4 * v
        rot.extend((b + 1, b + 2, b + 3, b))
    out = {}

    def matchings(free):
        if not free:
            yield ()
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            rest = free[1:i] + free[i + 1:]
            for m in matchings(rest):
                yield ((a, b),) + m

    for match in matchings(tuple(range(12))):
        pairing = [0] * 12
        for a, b in match:
            pairing[a] = b
            pairing[b] = a
        m = CombinatorialMap(tuple(rot), tuple(pairing))
        if validate(m) or len(m.faces) != 1:
            continue
        key = canonical_key(m, allow_reflection=True)
        if key not in out:
            out[key] = m
    return [out[k] for k in sorted(out)]


INTRO_POLYTOPE_VECTORS = (
    (1, 1, 1, 1), (1, -1, 1, 1), (-1, 1, 1, 1), (1, 1, -1, 1))


def verify_main_theorem(twist_bound=2):
    """End-to-end check that no census dual ball lies in the eight-vertex
    family, while the intro polytope does."""
    reps = census(twist_bound)
    report = {"classes": len(reps), "balls": [], "pass": True}
    for build in reps:
        ball = build.dual_ball()
        entry = {
            "word": word_label(build.word),
            "vertices": len(ball.vertices),
            "is_p8": polytope.is_p8(ball),
            "ball": ball,
        }
        if entry["is_p8"]:
            report["pass"] = False
        report["balls"].append(entry)
    intro = polytope.convex_hull(
        [v for v in INTRO_POLYTOPE_VECTORS]
        + [tuple(-x for x in v) for v in INTRO_POLYTOPE_VECTORS])
    report["intro_is_p8"] = polytope.is_p8(intro)
    report["pass"] = (report["pass"] and report["intro_is_p8"]
                      and len(reps) == 4)
    return report
