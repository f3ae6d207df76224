"""Linking numbers of cycles on a layered surface, and Seifert pairs.

How curves sit on the surface.  Away from the crossings a sheet meets
the knot along exactly one side of each of its arcs, so every passage
along an arc rides a half-open strip glued to that side; parallel
passages keep their lateral order and strips contribute no crossings of
their own.  At a crossing a sheet owns up to two smoothed strands
(over-in -> under-out and under-in -> over-out).  The strands hug
opposite corners of the crossing and never touch each other; which
corner faces the sheet covers decides how the half-twisted band
attaches to a strand:

* if the corner the strand sweeps is covered, the strand's outer flank
  is interior sheet and the band's feet sit on the inner (kiss) flank
  facing the other strand, clear of the strand's through lanes;
* otherwise both kiss-side corners are covered (the sheet meets each
  arc on one side, so there is no third pattern), the only free
  boundary is the notch at the strand's own corner, the feet sit in
  that notch, and the band vaults the whole strand on its way to the
  centre, passing over or under every lane it projects across.

Each (crossing, strand) pair becomes a circular venue.  Its attachment
points run counterclockwise: entry lanes left to right, then the right
flank, then exit lanes right to left, then the left flank.  Feet follow
the band's lateral order along the a-strand and reverse it along the
b-strand (the half twist swaps the band's edges between its two ends);
vault exits nest inside their feet like parentheses.  Two chords cross
iff their endpoints interleave, and the interleaving pattern gives the
crossing sign, so the whole computation is exact integer arithmetic.

Who passes over whom:

* different heights win by height (smaller floats toward the viewer);
  a vaulting band sits strictly between its two sheet heights, and on
  the viewer's side when those heights coincide;
* equal constant heights mean a genuine intersection on the surface;
  that crossing counts once, on the push-off side +epsilon of the
  sheet (a counterclockwise sheet pushes its + copy away from the
  viewer, so the far copy is the one that still meets the other curve);
* two passages of one band swap exactly once inside it; the passage
  nearer the band's over edge (smaller lateral slot) passes in front,
  with sign -(crossing sign) * d_i * d_j for travel directions d.

A cycle may also run along an arc inside a sheet that is not the one
glued to that arc: then both faces beside the arc belong to the sheet
and the passage is nothing but a chord of one of them, so it is
rewritten as one before any counting, picking the side whose corners
legally meet the neighbouring steps.  Chord endpoints at one corner sit
on a road's flank, a segment the face boundary shares; the two venues
walk a shared segment in opposite directions, so the face lists every
corner bundle in reversed road order, arrival-side road first.

Diagonal entries need no framing rule of their own: a push-off of a
cycle to either side links the cycle exactly as a parallel copy drawn
on the surface does, so lk(x^+, x) = lk(x^-, x) is half the signed
crossing count between the cycle and a shadow copy of itself run
through the same machinery (its on-surface meetings with the shadow
cancel in pairs).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .carter import _port_of_end
from .errors import CycleNotOnSurface, InvariantViolation, NotTwoComponents
from .surface import (
    ArcStep,
    BandStep,
    ChordStep,
    LayeredCycle,
    LayeredSurface,
)


@dataclass(frozen=True)
class SeifertPair:
    """The two directed Seifert matrices of a surface basis."""

    vplus: Tuple[Tuple[int, ...], ...]
    vminus: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        validate_pair(self.vplus, self.vminus)

    @property
    def rank(self) -> int:
        return len(self.vplus)

    def intersection_form(self) -> List[List[int]]:
        g = self.rank
        return [
            [self.vminus[i][j] - self.vplus[i][j] for j in range(g)]
            for i in range(g)
        ]


def validate_pair(vplus, vminus) -> None:
    from .intmat import bareiss_det

    g = len(vplus)
    if any(len(r) != g for r in vplus) or len(vminus) != g or any(
        len(r) != g for r in vminus
    ):
        raise InvariantViolation("Seifert matrices must be square, same size")
    for i in range(g):
        for j in range(g):
            if (
                vplus[i][j] + vplus[j][i]
                != vminus[i][j] + vminus[j][i]
            ):
                raise InvariantViolation(
                    f"symmetrized matrices differ at ({i}, {j})"
                )
    diff = [
        [vminus[i][j] - vplus[i][j] for j in range(g)] for i in range(g)
    ]
    det = bareiss_det(diff) if g else 1
    if det != 1:
        raise InvariantViolation(
            f"intersection form determinant {det} != 1"
        )


# ---------------------------------------------------------------------------
# Cycle validation
# ---------------------------------------------------------------------------


def _step_profile(F: LayeredSurface, st) -> Tuple[int, int, int, int]:
    """(start disc, start layer, end disc, end layer) of one step."""
    d = F.diagram
    if isinstance(st, ArcStep):
        if F.arc_carrier.get(st.arc) != st.layer:
            raise CycleNotOnSurface(
                f"arc {st.arc} has no strip on layer {st.layer}"
            )
        if st.direction not in (1, -1):
            raise CycleNotOnSurface(f"bad arc step {st}")
        zt = d.label_at(d.arc_tail(st.arc))
        zh = d.label_at(d.arc_head(st.arc))
        if st.direction > 0:
            return zt, st.layer, zh, st.layer
        return zh, st.layer, zt, st.layer
    if isinstance(st, BandStep):
        try:
            b = F.band_at(st.band)
        except KeyError:
            raise CycleNotOnSurface(f"no band at crossing {st.band}")
        if st.direction not in (1, -1):
            raise CycleNotOnSurface(f"bad band step {st}")
        if st.direction > 0:
            return b.label, b.a.layer, b.label, b.b.layer
        return b.label, b.b.layer, b.label, b.a.layer
    if isinstance(st, ChordStep):
        sub = next(
            (s for s in F.subsurfaces if s.index == st.layer), None
        )
        if sub is None or st.face not in sub.faces:
            raise CycleNotOnSurface(
                f"face {st.face} does not lie on layer {st.layer}"
            )
        corners = F.complex.faces[st.face].corners
        if st.start not in corners or st.end not in corners:
            raise CycleNotOnSurface(
                f"chord endpoints {st.start}, {st.end} not corners of "
                f"face {st.face}"
            )
        return st.start[0], st.layer, st.end[0], st.layer
    raise CycleNotOnSurface(f"unknown step {st!r}")


def _validate_cycle(F: LayeredSurface, x: LayeredCycle) -> None:
    if not x.steps:
        raise CycleNotOnSurface("empty cycle")
    profs = [_step_profile(F, st) for st in x.steps]
    k = len(profs)
    for i in range(k):
        _, _, ez, el = profs[i]
        sz, sl, _, _ = profs[(i + 1) % k]
        if ez != sz:
            raise CycleNotOnSurface(
                f"steps {i} and {(i + 1) % k} do not meet at one crossing"
            )
        if el != sl:
            raise CycleNotOnSurface(
                f"steps {i} and {(i + 1) % k} change layer without a band"
            )


# ---------------------------------------------------------------------------
# The strand venues
# ---------------------------------------------------------------------------

# Kiss corners of a crossing, the two swept by neither strand, as
# (entry-port side, exit-port side).
_KISS = {1: ("SW", "NE"), -1: ("NW", "SE")}
# Which flank of its own travel direction a strand's swept corner is on.
_OWN_FLANK = {(1, "a"): "L", (1, "b"): "R", (-1, "a"): "R", (-1, "b"): "L"}


@dataclass
class _Road:
    """One smoothed strand at one crossing, with its local sheet data."""

    crossing: int
    end: str  # "a" | "b"
    sign: int
    layer: int
    in_arc: int
    out_arc: int
    port_in: str
    port_out: str
    own_corner: str
    kiss_entry: str
    kiss_exit: str
    feet_at_kiss: bool  # own corner covered: feet on the inner flank

    @property
    def own_flank(self) -> str:
        return _OWN_FLANK[(self.sign, self.end)]

    @property
    def kiss_flank(self) -> str:
        return "R" if self.own_flank == "L" else "L"

    @property
    def feet_flank(self) -> str:
        return self.kiss_flank if self.feet_at_kiss else self.own_flank


def _roads(F: LayeredSurface) -> Dict[Tuple[int, str], _Road]:
    corner_face: Dict[Tuple[int, str], int] = {}
    for k, f in enumerate(F.complex.faces):
        for zc in f.corners:
            corner_face[zc] = k
    sheet = {s.index: frozenset(s.faces) for s in F.subsurfaces}
    roads: Dict[Tuple[int, str], _Road] = {}
    for b in F.bands:
        kiss_in, kiss_out = _KISS[b.sign]
        for e in ("a", "b"):
            end = b.a if e == "a" else b.b
            on_sheet = sheet[end.layer]

            def covered(c):
                return corner_face[(b.label, c)] in on_sheet

            own_cov = covered(end.corner)
            if covered(kiss_in) == own_cov or covered(kiss_out) == own_cov:
                raise InvariantViolation(
                    f"crossing {b.label}: sheet {end.layer} does not meet "
                    f"strand {e} along exactly one side"
                )
            roads[(b.label, e)] = _Road(
                b.label, e, b.sign, end.layer, end.in_arc, end.out_arc,
                end.port_in, end.port_out,
                end.corner, kiss_in, kiss_out, own_cov,
            )
    return roads


# Ports flanking each corner, counterclockwise around the crossing.
_CCW_PORTS = {"NE": ("E", "N"), "NW": ("N", "W"), "SW": ("W", "S"), "SE": ("S", "E")}
# Corners left and right of an arc end, keyed by (port, arriving?).
_END_CORNERS = {
    ("W", True): ("NW", "SW"),
    ("N", True): ("NE", "NW"),
    ("E", True): ("SE", "NE"),
    ("S", True): ("SW", "SE"),
    ("W", False): ("SW", "NW"),
    ("N", False): ("NW", "NE"),
    ("E", False): ("NE", "SE"),
    ("S", False): ("SE", "SW"),
}


def _other_port(corner: str, port: str) -> str:
    p, q = _CCW_PORTS[corner]
    return q if port == p else p


def _terminal(ci, si, st, outgoing):
    if isinstance(st, ArcStep):
        ahead = (st.direction > 0) == outgoing
        return ("lane", st.arc, "head" if ahead else "tail", ci, si)
    if isinstance(st, BandStep):
        at_b = (st.direction > 0) == outgoing
        return ("foot", st.band, "b" if at_b else "a", ci, si)
    return ("cpt", ci, si, "end" if outgoing else "start")


def _side_chords(F: LayeredSurface, st: ArcStep) -> Dict[str, ChordStep]:
    """Both one-face rewrites of a passage riding an arc it is not
    glued to, keyed by the side of the arc the chord runs along."""
    d = F.diagram
    zt, pt = _port_of_end(d, d.arc_tail(st.arc), "tail")
    zh, ph = _port_of_end(d, d.arc_head(st.arc), "head")
    lt, rt = _END_CORNERS[(pt, False)]
    lh, rh = _END_CORNERS[(ph, True)]
    cx = F.complex
    sheet = next((s for s in F.subsurfaces if s.index == st.layer), None)
    faces = frozenset(sheet.faces) if sheet is not None else frozenset()
    out: Dict[str, ChordStep] = {}
    for side, face, ct, ch in (
        ("L", cx.left_face.get(st.arc), lt, lh),
        ("R", cx.right_face.get(st.arc), rt, rh),
    ):
        if face is None or face not in faces:
            continue
        if st.direction > 0:
            out[side] = ChordStep(face, st.layer, (zt, ct), (zh, ch))
        else:
            out[side] = ChordStep(face, st.layer, (zh, ch), (zt, ct))
    return out


def _normalize_cycles(F, roads, road_of_end, cycles):
    """Rewrite arc passages that run inside a sheet away from the arc's
    strip layer into face chords (see the module notes)."""
    out = []
    for x in cycles:
        steps = list(x.steps)
        k = len(steps)
        idxs = [
            i
            for i, st in enumerate(steps)
            if isinstance(st, ArcStep)
            and st.direction in (1, -1)
            and F.arc_carrier.get(st.arc) != st.layer
        ]
        if not idxs:
            out.append(x)
            continue
        cand = {i: _side_chords(F, steps[i]) for i in idxs}
        idxset = set(idxs)

        def fits(ch, i, incoming):
            j = (i - 1) % k if incoming else (i + 1) % k
            if j in idxset:
                return True  # coupled below
            nb = steps[j]
            zc = ch.start if incoming else ch.end
            if isinstance(nb, ChordStep):
                other = nb.end if incoming else nb.start
                return other == zc and nb.layer == ch.layer
            t = _terminal(0, 0, nb, incoming)
            venue = road_of_end[(t[1], t[2])] if t[0] == "lane" else (t[1], t[2])
            r = roads.get(venue)
            if r is None or venue[0] != zc[0] or r.layer != ch.layer:
                return False
            if zc[1] == r.own_corner:
                return r.feet_at_kiss
            if zc[1] in (r.kiss_entry, r.kiss_exit):
                return not r.feet_at_kiss
            return False

        for i in idxs:
            cand[i] = {
                s: ch
                for s, ch in cand[i].items()
                if fits(ch, i, True) and fits(ch, i, False)
            }
        for i in idxs:
            j = (i + 1) % k
            if j not in idxset:
                continue
            cand[i], cand[j] = (
                {
                    s: ch
                    for s, ch in cand[i].items()
                    if any(ch.end == c2.start for c2 in cand[j].values())
                },
                {
                    s: ch
                    for s, ch in cand[j].items()
                    if any(c1.end == ch.start for c1 in cand[i].values())
                },
            )
        for i in idxs:
            left, right = steps[(i - 1) % k], steps[(i + 1) % k]
            opts = [cand[i][s] for s in ("L", "R") if s in cand[i]]
            if (i - 1) % k in idxset and isinstance(left, ChordStep):
                opts = [ch for ch in opts if ch.start == left.end]
            if (i + 1) % k in idxset and isinstance(right, ChordStep):
                opts = [ch for ch in opts if ch.end == right.start]
            if not opts:
                raise CycleNotOnSurface(
                    f"arc {steps[i].arc} does not run inside the "
                    f"layer-{steps[i].layer} sheet beside its neighbours"
                )
            steps[i] = opts[0]
        out.append(LayeredCycle(tuple(steps)))
    return out


class _Chord:
    __slots__ = ("ci", "p", "q", "h0", "h1", "layer")

    def __init__(self, ci, p, q, h0, h1, layer):
        self.ci = ci
        self.p = p  # ccw rank of the start point
        self.q = q
        self.h0 = h0  # height at p
        self.h1 = h1  # height at q
        self.layer = layer  # None marks a band vault (height varies)


class _Tally:
    def __init__(self, k: int):
        self.vplus = [[0] * k for _ in range(k)]
        self.vminus = [[0] * k for _ in range(k)]

    def both(self, over: int, under: int, s: int) -> None:
        self.vplus[over][under] += s
        self.vminus[over][under] += s

    def onesided(self, side: int, i: int, j: int, s: int) -> None:
        m = self.vplus if side > 0 else self.vminus
        m[i][j] += s
        m[j][i] -= s


def _chord_sign(a1: int, a2: int, b1: int, b2: int, n: int) -> int:
    """Crossing sign of directed circle chords a1->a2 and b1->b2.

    0 when they do not interleave; otherwise +1 iff b1 lies in the
    counterclockwise interval from a1 to a2 (the sign of
    det(tangent_a, tangent_b) at the crossing).
    """

    def ccw_between(lo, x, hi):
        return (x - lo) % n < (hi - lo) % n

    inside_b1 = ccw_between(a1, b1, a2)
    inside_b2 = ccw_between(a1, b2, a2)
    if inside_b1 == inside_b2:
        return 0
    return 1 if inside_b1 else -1


def seifert_matrices(
    F: LayeredSurface, cycles: Sequence[LayeredCycle]
) -> Tuple[List[List[int]], List[List[int]]]:
    """lk(x_i^+, x_j) and lk(x_i^-, x_j) for cycles drawn on F."""
    m = len(cycles)
    tally = _Tally(m)
    if m == 0:
        return tally.vplus, tally.vminus

    d = F.diagram
    roads = _roads(F)
    road_of_end: Dict[Tuple[int, str], Tuple[int, str]] = {}
    for key, r in roads.items():
        road_of_end[(r.in_arc, "head")] = key
        road_of_end[(r.out_arc, "tail")] = key
    cycles = _normalize_cycles(F, roads, road_of_end, cycles)
    for x in cycles:
        _validate_cycle(F, x)
    heights = {s.index: s.height for s in F.subsurfaces}
    eps = {s.index: s.epsilon for s in F.subsurfaces}

    # The top half are shadow parallels, one per cycle, used only for
    # the diagonal entries.
    curves = list(cycles) + list(cycles)

    # -- lateral order of repeated passages ---------------------------------
    strip: Dict[int, List[Tuple[int, int]]] = {}
    bandtrav: Dict[int, List[Tuple[int, int]]] = {}
    band_dir: Dict[Tuple[int, int], int] = {}
    for ci, x in enumerate(curves):
        for si, st in enumerate(x.steps):
            if isinstance(st, ArcStep):
                strip.setdefault(st.arc, []).append((ci, si))
            elif isinstance(st, BandStep):
                bandtrav.setdefault(st.band, []).append((ci, si))
                band_dir[(ci, si)] = st.direction
    for lst in strip.values():
        lst.sort()
    for lst in bandtrav.values():
        lst.sort()

    # -- junctions: each consecutive pair of steps meets on one strand ------
    def _venue_of(t):
        if t[0] == "lane":
            return road_of_end[(t[1], t[2])]
        if t[0] == "foot":
            return (t[1], t[2])
        return None

    transits: List[Tuple[Tuple[int, str], int, Tuple, Tuple]] = []
    cpt_at: Dict[Tuple[int, int, str], Tuple[Tuple[int, str], str]] = {}

    def _place_cpt(tkey, corner_pair, layer, venue, ci):
        z, corner = corner_pair
        if venue[0] != z:
            raise CycleNotOnSurface(
                f"cycle {ci}: chord corner at crossing {z} joins a strand "
                f"of crossing {venue[0]}"
            )
        r = roads[venue]
        if r.layer != layer:
            raise CycleNotOnSurface(
                f"cycle {ci}: chord on layer {layer} joins a strand on "
                f"layer {r.layer}"
            )
        if corner == r.own_corner:
            ok = r.feet_at_kiss
        elif corner in (r.kiss_entry, r.kiss_exit):
            ok = not r.feet_at_kiss
        else:
            ok = False
        if not ok:
            raise CycleNotOnSurface(
                f"cycle {ci}: chord corner {corner} of crossing {z} is not "
                "sheet boundary beside that strand"
            )
        cpt_at[tkey] = (venue, corner)

    for ci, x in enumerate(curves):
        steps = x.steps
        kk = len(steps)
        for si in range(kk):
            nsi = (si + 1) % kk
            st, nx = steps[si], steps[nsi]
            t1 = _terminal(ci, si, st, True)
            t2 = _terminal(ci, nsi, nx, False)
            v1, v2 = _venue_of(t1), _venue_of(t2)
            if v1 is None and v2 is None:
                if st.end != nx.start or st.layer != nx.layer:
                    raise CycleNotOnSurface(
                        f"cycle {ci}: chords {si} and {nsi} do not share a "
                        "corner"
                    )
                continue
            if v1 is None:
                _place_cpt(t1[1:], st.end, st.layer, v2, ci)
                v1 = v2
            elif v2 is None:
                _place_cpt(t2[1:], nx.start, nx.layer, v1, ci)
                v2 = v1
            if v1 != v2:
                raise CycleNotOnSurface(
                    f"cycle {ci}: steps {si} and {nsi} meet at different "
                    "strands of the crossing"
                )
            transits.append((v1, ci, t1, t2))

    # -- band bookkeeping: twists, and vaults at notch-footed ends ----------
    vaults: List[Tuple[Tuple[int, str], Tuple[int, int], bool]] = []
    for z, lst in bandtrav.items():
        for (ci, si) in lst:
            dd = band_dir[(ci, si)]
            for e in ("a", "b"):
                if roads[(z, e)].feet_at_kiss:
                    continue
                departs = (dd > 0) == (e == "a")
                vaults.append(((z, e), (ci, si), departs))

    # -- counterclockwise point ranks per venue -----------------------------
    cpts_by_venue: Dict[Tuple[int, str], Dict[str, List[Tuple]]] = {}
    for (ci, si, which), (venue, corner) in cpt_at.items():
        cpts_by_venue.setdefault(venue, {}).setdefault(corner, []).append(
            ("cpt", ci, si, which)
        )

    rank: Dict[Tuple, Dict[Tuple, int]] = {}
    size: Dict[Tuple, int] = {}
    for venue, r in roads.items():
        z = r.crossing
        entry = [
            ("lane", r.in_arc, "head", ci, si)
            for (ci, si) in strip.get(r.in_arc, ())
        ]
        exit_ = [
            ("lane", r.out_arc, "tail", ci, si)
            for (ci, si) in reversed(strip.get(r.out_arc, ()))
        ]
        worder = bandtrav.get(z, [])
        asc = (r.end == "a") == (r.feet_flank == "R")
        feet_seq = worder if asc else list(reversed(worder))
        feet = [("foot", z, r.end, ci, si) for (ci, si) in feet_seq]
        portals = [
            ("portal", z, r.end, ci, si) for (ci, si) in reversed(feet_seq)
        ]
        cp = cpts_by_venue.get(venue, {})

        def _pts(corner):
            return sorted(cp.get(corner, ()))

        if r.feet_at_kiss:
            own_items, mid = _pts(r.own_corner), feet
        else:
            own_items, mid = feet, portals
        if r.kiss_flank == "R":
            kiss_items = _pts(r.kiss_entry) + mid + _pts(r.kiss_exit)
        else:
            kiss_items = _pts(r.kiss_exit) + mid + _pts(r.kiss_entry)
        if r.own_flank == "R":
            seq = entry + own_items + exit_ + kiss_items
        else:
            seq = entry + kiss_items + exit_ + own_items
        key = ("road",) + venue
        rank[key] = {p: i for i, p in enumerate(seq)}
        size[key] = len(seq)

    # Face venues walk the boundary; a corner's chord points live on a
    # road flank the face boundary shares, and the two discs run that
    # segment in opposite directions, so each bundle is reversed here,
    # arrival-side road first, loose joint points at the corner tip.
    face_bundles: Dict[int, Dict[Tuple[int, str], List[Tuple[int, int, str]]]] = {}
    for ci, x in enumerate(curves):
        for si, st in enumerate(x.steps):
            if not isinstance(st, ChordStep):
                continue
            bl = face_bundles.setdefault(st.face, {})
            bl.setdefault(st.start, []).append((ci, si, "start"))
            bl.setdefault(st.end, []).append((ci, si, "end"))
    road_at_port: Dict[Tuple[int, str], Tuple[int, str]] = {}
    for key, r in roads.items():
        road_at_port[(r.crossing, r.port_in)] = key
        road_at_port[(r.crossing, r.port_out)] = key
    for k, bundles in face_bundles.items():
        walk = F.complex.faces[k]
        seq = []
        for i, zc in enumerate(walk.corners):
            pts = bundles.get(zc)
            if not pts:
                continue
            z, c = zc
            arc, sg = walk.steps[i]
            p_arr = _port_of_end(
                d,
                d.arc_head(arc) if sg > 0 else d.arc_tail(arc),
                "head" if sg > 0 else "tail",
            )[1]
            v_arr = road_at_port[(z, p_arr)]
            v_dep = road_at_port[(z, _other_port(c, p_arr))]
            arr, tip, dep = [], [], []
            for t in sorted(pts):
                pv = cpt_at.get(t)
                if pv is None:
                    tip.append(t)
                elif pv[0] == v_dep and v_dep != v_arr:
                    dep.append(t)
                else:
                    arr.append(t)
            seq.extend(("fpt",) + t for t in arr[::-1] + tip + dep[::-1])
        rank[("face", k)] = {p: i for i, p in enumerate(seq)}
        size[("face", k)] = len(seq)

    # -- chords --------------------------------------------------------------
    by_venue: Dict[Tuple, List[_Chord]] = {}

    for venue, ci, t1, t2 in transits:
        r = roads[venue]
        key = ("road",) + venue
        rk = rank[key]
        h = heights[r.layer]
        by_venue.setdefault(key, []).append(
            _Chord(ci, rk[t1], rk[t2], h, h, r.layer)
        )

    for venue, (ci, si), departs in vaults:
        r = roads[venue]
        key = ("road",) + venue
        rk = rank[key]
        fk = ("foot", r.crossing, r.end, ci, si)
        pk = ("portal", r.crossing, r.end, ci, si)
        other = roads[(r.crossing, "b" if r.end == "a" else "a")]
        hh, ho = heights[r.layer], heights[other.layer]
        ch = (
            _Chord(ci, rk[fk], rk[pk], hh, ho, None)
            if departs
            else _Chord(ci, rk[pk], rk[fk], ho, hh, None)
        )
        by_venue.setdefault(key, []).append(ch)

    for ci, x in enumerate(curves):
        for si, st in enumerate(x.steps):
            if not isinstance(st, ChordStep):
                continue
            key = ("face", st.face)
            rk = rank[key]
            h = heights[st.layer]
            by_venue.setdefault(key, []).append(
                _Chord(
                    ci,
                    rk[("fpt", ci, si, "start")],
                    rk[("fpt", ci, si, "end")],
                    h,
                    h,
                    st.layer,
                )
            )

    # -- crossings -----------------------------------------------------------
    diag_sum = [0] * m
    diag_check = [0] * m

    def _pairkind(ca, cb):
        if ca < m and cb < m:
            return ("od",) if ca != cb else None
        if ca != cb and ca % m == cb % m:
            return ("diag", ca % m)
        return None

    for key, lst in by_venue.items():
        nn = size[key]
        for i1 in range(len(lst)):
            A = lst[i1]
            for i2 in range(i1 + 1, len(lst)):
                B = lst[i2]
                kind = _pairkind(A.ci, B.ci)
                if kind is None:
                    continue
                if A.p in (B.p, B.q) or A.q in (B.p, B.q):
                    continue
                sgn = _chord_sign(A.p, A.q, B.p, B.q, nn)
                if sgn == 0:
                    continue
                if A.layer is not None and B.layer is not None:
                    if A.h0 == B.h0:
                        if A.layer != B.layer:
                            raise InvariantViolation(
                                "two layers share one height"
                            )
                        if kind[0] == "od":
                            tally.onesided(
                                eps[A.layer], A.ci, B.ci, sgn
                            )
                        else:
                            # net on-surface intersection with the shadow:
                            # surface sign = sheet orientation times the
                            # plane sign, oriented original-then-shadow
                            diag_check[kind[1]] += eps[A.layer] * (
                                sgn if A.ci < B.ci else -sgn
                            )
                        continue
                    over_a = A.h0 < B.h0
                elif A.layer is None and B.layer is None:
                    raise InvariantViolation(
                        "band passages may cross only inside the band"
                    )
                else:
                    vault, flat = (A, B) if A.layer is None else (B, A)
                    h = flat.h0
                    oth = vault.h1 if vault.h0 == h else vault.h0
                    vault_over = oth <= h
                    over_a = vault_over == (A is vault)
                if over_a:
                    ov, un, s = A.ci, B.ci, sgn
                else:
                    ov, un, s = B.ci, A.ci, -sgn
                if kind[0] == "od":
                    tally.both(ov, un, s)
                else:
                    diag_sum[kind[1]] += s

    for z, lst in bandtrav.items():
        sg = F.band_at(z).sign
        for i1 in range(len(lst)):
            ka = lst[i1]
            for i2 in range(i1 + 1, len(lst)):
                kb = lst[i2]
                kind = _pairkind(ka[0], kb[0])
                if kind is None:
                    continue
                s = -sg * band_dir[ka] * band_dir[kb]
                if kind[0] == "od":
                    tally.both(ka[0], kb[0], s)
                else:
                    diag_sum[kind[1]] += s

    for i in range(m):
        if diag_check[i]:
            raise InvariantViolation(
                f"cycle {i} meets its parallel copy on the surface with "
                f"net sign {diag_check[i]}"
            )
        if diag_sum[i] % 2:
            raise InvariantViolation(
                f"cycle {i}: odd crossing total {diag_sum[i]} against its "
                "parallel copy"
            )
        half = diag_sum[i] // 2
        tally.vplus[i][i] = half
        tally.vminus[i][i] = half

    return tally.vplus, tally.vminus


def layered_lk(
    F: LayeredSurface, x: LayeredCycle, y: LayeredCycle, side: int
) -> int:
    """lk of the push-off of x to the given side (+1 or -1) with y."""
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    if x is y or x == y:
        vp, vm = seifert_matrices(F, [x])
        return (vp if side > 0 else vm)[0][0]
    vp, vm = seifert_matrices(F, [x, y])
    return (vp if side > 0 else vm)[0][1]


def surface_seifert_pair(
    F: LayeredSurface,
    basis: Optional[Sequence[LayeredCycle]] = None,
) -> Tuple[SeifertPair, List[LayeredCycle]]:
    """Seifert pair of the surface on a homology basis (computed if
    omitted); the pair's defining relations are enforced on the way out.
    """
    from .surface import homology_basis

    if basis is None:
        basis = homology_basis(F)
    vp, vm = seifert_matrices(F, basis)
    pair = SeifertPair(
        tuple(tuple(r) for r in vp), tuple(tuple(r) for r in vm)
    )
    return pair, list(basis)


# ---------------------------------------------------------------------------
# Band presentations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BandEvent:
    core_a: int
    core_b: int
    kind: str  # "classical" | "virtual"
    over: str  # "a" | "b": which core passes in front
    sign: int
    pos_a: int
    pos_b: int


@dataclass(frozen=True)
class BandPresentation:
    """Cores attached to a disc in a cyclic slot order, plus the crossing
    events the cores make with each other out in the plane."""

    starts: Tuple[int, ...]  # slot of each core's start
    ends: Tuple[int, ...]  # slot of each core's end
    twists: Tuple[int, ...]  # full twists per core
    events: Tuple[BandEvent, ...]

    def __post_init__(self):
        k = len(self.starts)
        if len(self.ends) != k or len(self.twists) != k:
            raise InvariantViolation("ragged band presentation")
        used = sorted(self.starts + self.ends)
        if used != list(range(2 * k)):
            raise InvariantViolation(
                f"band ends must fill slots 0..{2 * k - 1} exactly once"
            )
        for e in self.events:
            if not (0 <= e.core_a < k and 0 <= e.core_b < k):
                raise InvariantViolation(f"event names unknown core: {e}")
            if e.kind not in ("classical", "virtual"):
                raise InvariantViolation(f"event kind {e.kind!r}")
            if e.over not in ("a", "b") or e.sign not in (1, -1):
                raise InvariantViolation(f"bad event {e}")

    @property
    def core_count(self) -> int:
        return len(self.starts)


def band_presentation_from_json(obj: dict) -> BandPresentation:
    try:
        bands = obj["bands"]
        slots = obj["slots"]
        events = obj.get("events", [])
    except (KeyError, TypeError):
        raise InvariantViolation("band JSON needs bands, slots")
    starts = tuple(b["start"] for b in bands)
    ends = tuple(b["end"] for b in bands)
    twists = tuple(int(b.get("twists", 0)) for b in bands)
    k = len(bands)
    expect = [None] * (2 * k)
    for i in range(k):
        for which, slot in (("start", starts[i]), ("end", ends[i])):
            if not (0 <= slot < 2 * k) or expect[slot] is not None:
                raise InvariantViolation(f"slot {slot} reused or out of range")
            expect[slot] = {"band": i, "end": which}
    if slots != expect:
        raise InvariantViolation(
            "slots array disagrees with band start/end indices"
        )
    evs = tuple(
        BandEvent(
            e["core_a"], e["core_b"], e["kind"], e["over"], e["sign"],
            e.get("pos_a", 0), e.get("pos_b", 0),
        )
        for e in events
    )
    return BandPresentation(starts, ends, twists, evs)


def band_presentation_to_json(bp: BandPresentation) -> dict:
    k = bp.core_count
    slots = [None] * (2 * k)
    for i in range(k):
        slots[bp.starts[i]] = {"band": i, "end": "start"}
        slots[bp.ends[i]] = {"band": i, "end": "end"}
    return {
        "bands": [
            {"start": bp.starts[i], "end": bp.ends[i], "twists": bp.twists[i]}
            for i in range(k)
        ],
        "slots": slots,
        "events": [
            {
                "core_a": e.core_a, "core_b": e.core_b, "kind": e.kind,
                "over": e.over, "sign": e.sign,
                "pos_a": e.pos_a, "pos_b": e.pos_b,
            }
            for e in bp.events
        ],
    }


def band_seifert_pair(bp: BandPresentation) -> SeifertPair:
    """Directed Seifert matrices straight off a band presentation.

    The + matrix reads the drawn crossings (self-crossings and twists on
    the diagonal); the - matrix adds the skew form of the straight
    closure chords, each core closed end-slot -> start-slot through the
    disc.
    """
    k = bp.core_count
    vplus = [[0] * k for _ in range(k)]
    for i in range(k):
        vplus[i][i] = bp.twists[i]
    for e in bp.events:
        if e.kind != "classical":
            continue
        if e.core_a == e.core_b:
            vplus[e.core_a][e.core_a] += e.sign
            continue
        over, under = (
            (e.core_a, e.core_b) if e.over == "a" else (e.core_b, e.core_a)
        )
        vplus[over][under] += e.sign
    n = 2 * k
    vminus = [row[:] for row in vplus]
    for i in range(k):
        for j in range(k):
            if i != j:
                vminus[i][j] += _chord_sign(
                    bp.ends[i], bp.starts[i], bp.ends[j], bp.starts[j], n
                )
    return SeifertPair(
        tuple(tuple(r) for r in vplus), tuple(tuple(r) for r in vminus)
    )


# ---------------------------------------------------------------------------
# Virtual linking number
# ---------------------------------------------------------------------------


def vlk(components: Sequence[Sequence[Tuple]], over: int = 1, under: int = 2):
    """Signed count of classical crossings where component `over` passes
    over component `under` (1-based component indices).

    Each component lists its passes in order as tuples
    (crossing id, "O"|"U", sign, "classical"|"virtual").
    """
    if len(components) != 2:
        raise NotTwoComponents(
            f"need exactly two components, got {len(components)}"
        )
    if {over, under} != {1, 2}:
        raise NotTwoComponents("components are named 1 and 2")
    passes: Dict[Tuple[int, str], List[Tuple[int, int, str]]] = {}
    for comp_idx, comp in enumerate(components, start=1):
        for ev in comp:
            cid, role, sign, kind = ev
            if role not in ("O", "U") or sign not in (1, -1) or kind not in (
                "classical", "virtual"
            ):
                raise NotTwoComponents(f"malformed pass {ev!r}")
            passes.setdefault((cid, role), []).append((comp_idx, sign, kind))
    total = 0
    for (cid, role), lst in passes.items():
        if role != "O":
            continue
        partner = passes.get((cid, "U"), [])
        if len(lst) != 1 or len(partner) != 1:
            raise NotTwoComponents(
                f"crossing {cid} does not appear exactly once over, once under"
            )
        (oc, osgn, okind), (uc, usgn, ukind) = lst[0], partner[0]
        if okind != ukind or osgn != usgn:
            raise NotTwoComponents(
                f"crossing {cid} disagrees about its sign or kind"
            )
        if okind == "virtual":
            continue
        if oc == over and uc == under:
            total += osgn
    for (cid, role), lst in passes.items():
        if role == "U" and (cid, "O") not in passes:
            raise NotTwoComponents(f"crossing {cid} has no over pass")
    return total
