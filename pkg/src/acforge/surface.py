"""Layered spanning surfaces: stacked sheets joined by half-twisted bands.

The picture is entirely combinatorial.  Each group of the spanning
solution contributes one *subsurface*: the closed union of its faces
together with every arc strip and crossing disc those faces touch,
floating at its own height (smaller height = closer to the viewer, and
the default height of group j is j, so earlier groups float above later
ones).  At every crossing one *band* joins the two strands of the
oriented smoothing, with a half twist so that the free edges of the band
reproduce the original over/under passage.  Attaching the n bands to the
disjoint sheets produces a surface whose single boundary circle is the
knot and whose Euler characteristic is sum(chi(S_j)) - n.

A cycle on the surface is a closed walk made of arc steps (along an arc
strip at one layer), band steps (through a band, a-end to b-end or
back), and face chord steps (straight across a face between two of its
corners).  The homology basis produced here routes along arcs and bands
only; chords exist for callers that want shortcuts across a sheet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from .carter import CarterComplex, _port_of_end
from .errors import (
    DisconnectedSubsurface,
    MultipleBoundaryComponents,
    RankMismatch,
)
from .intmat import quotient_basis
from .spanning import SpanningSolution


class ArcStep(NamedTuple):
    """Run along arc strip `arc` at layer `layer`; direction is relative
    to the knot's orientation of the arc."""

    arc: int
    direction: int
    layer: int


class BandStep(NamedTuple):
    """Pass through the band at crossing `band`; +1 goes a-end to b-end."""

    band: int
    direction: int


class ChordStep(NamedTuple):
    """Cut across face `face` on layer `layer` between two of its
    corners, each named as (crossing label, corner)."""

    face: int
    layer: int
    start: Tuple[int, str]
    end: Tuple[int, str]


Step = Tuple  # ArcStep | BandStep | ChordStep


@dataclass(frozen=True)
class LayeredCycle:
    steps: Tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def bands(self) -> Tuple[int, ...]:
        return tuple(s.band for s in self.steps if isinstance(s, BandStep))


class BandEnd(NamedTuple):
    in_arc: int  # arc arriving at the crossing on this strand
    out_arc: int  # arc leaving on this strand
    port_in: str
    port_out: str
    corner: str  # seam corner the strand sweeps
    cycle: int  # Seifert cycle index carrying this strand
    layer: int  # group index of that cycle


@dataclass(frozen=True)
class Band:
    label: int  # crossing label
    sign: int
    a: BandEnd  # over-in -> under-out strand
    b: BandEnd  # under-in -> over-out strand

    def end(self, which: int) -> BandEnd:
        return self.a if which > 0 else self.b


@dataclass(frozen=True)
class Subsurface:
    index: int
    faces: Tuple[int, ...]
    epsilon: int
    height: int
    arcs: Tuple[int, ...]  # every arc on the boundary of some face
    crossings: Tuple[int, ...]  # every crossing a face touches
    euler: int


@dataclass
class LayeredSurface:
    diagram: object
    complex: CarterComplex
    solution: SpanningSolution
    subsurfaces: List[Subsurface]
    bands: List[Band]
    euler: int
    arc_carrier: Dict[int, int]  # arc -> group of its Seifert cycle
    boundary: List[Tuple[int, int]]  # (arc, carrier group) in knot order

    @property
    def genus(self) -> int:
        return surface_genus(self)

    def layers_of_arc(self, arc: int) -> Tuple[int, ...]:
        return tuple(
            s.index for s in self.subsurfaces if arc in s.arcs
        )

    def layers_of_crossing(self, z: int) -> Tuple[int, ...]:
        return tuple(
            s.index for s in self.subsurfaces if z in s.crossings
        )

    def band_at(self, z: int) -> Band:
        for b in self.bands:
            if b.label == z:
                return b
        raise KeyError(z)


def _strand_ends(d, z: int) -> Tuple[Tuple[int, int, str, str, str],
                                     Tuple[int, int, str, str, str]]:
    """The two smoothed strands at crossing z.

    Strand a runs over-in -> under-out, strand b under-in -> over-out;
    each is returned as (in_arc, out_arc, port_in, port_out, corner),
    the corner being the quadrant its seam sweeps (between the two ports
    counterclockwise from port_in).
    """
    ar = d.arrows[z]
    po, pu = ar.over_pos, ar.under_pos
    a_in, a_out = d.arc_into(po), d.arc_outof(pu)
    b_in, b_out = d.arc_into(pu), d.arc_outof(po)
    if ar.sign > 0:
        return (a_in, a_out, "W", "N", "NW"), (b_in, b_out, "S", "E", "SE")
    return (a_in, a_out, "W", "S", "SW"), (b_in, b_out, "N", "E", "NE")


def _face_cells(cx: CarterComplex, k: int) -> Tuple[Set[int], Set[int]]:
    """Arcs and crossings on the closure of face k."""
    f = cx.faces[k]
    return set(f.arcs), {lab for lab, _ in f.corners}


def build_surface(
    sol: SpanningSolution,
    heights: Optional[Sequence[int]] = None,
) -> LayeredSurface:
    """Assemble the layered surface for a spanning solution.

    heights optionally reassigns the stacking order; it must list one
    distinct height per group (default: the group index).
    """
    cx = sol.complex
    d = cx.diagram
    groups = len(sol.partition)
    if heights is None:
        heights = list(range(groups))
    if len(heights) != groups or len(set(heights)) != groups:
        raise ValueError("need one distinct height per group")

    cycles = sol.cycles
    group_of_cycle = {}
    for g, grp in enumerate(sol.partition):
        for i in grp:
            group_of_cycle[i] = g
    arc_carrier: Dict[int, int] = {}
    cycle_of_arc: Dict[int, int] = {}
    for i, cyc in enumerate(cycles):
        for a in cyc:
            cycle_of_arc[a] = i
            arc_carrier[a] = group_of_cycle[i]

    subs: List[Subsurface] = []
    for g in range(groups):
        faces = sol.faces_of_group(g)
        arcs: Set[int] = set()
        crossings: Set[int] = set()
        cellmap: Dict[int, Tuple[Set[int], Set[int]]] = {}
        for k in faces:
            cells = _face_cells(cx, k)
            cellmap[k] = cells
            arcs |= cells[0]
            crossings |= cells[1]
        # A sheet must be connected: walk faces that share an arc or a
        # crossing disc.
        if faces:
            seen = {faces[0]}
            frontier = [faces[0]]
            while frontier:
                k = frontier.pop()
                ka, kc = cellmap[k]
                for other in faces:
                    if other in seen:
                        continue
                    oa, oc = cellmap[other]
                    if (ka & oa) or (kc & oc):
                        seen.add(other)
                        frontier.append(other)
            if len(seen) != len(faces):
                raise DisconnectedSubsurface(
                    f"group {g} splits into {sorted(seen)} != {sorted(faces)}"
                )
        euler = len(crossings) - len(arcs) + len(faces)
        subs.append(
            Subsurface(
                g, tuple(faces), sol.epsilons[g], heights[g],
                tuple(sorted(arcs)), tuple(sorted(crossings)), euler,
            )
        )

    bands: List[Band] = []
    for z in sorted(d.arrows):
        (a_in, a_out, a_pi, a_po, a_c), (b_in, b_out, b_pi, b_po, b_c) = (
            _strand_ends(d, z)
        )
        ca, cb = cycle_of_arc[a_out], cycle_of_arc[b_out]
        assert ca == cycle_of_arc[a_in] and cb == cycle_of_arc[b_in]
        bands.append(
            Band(
                z, d.arrows[z].sign,
                BandEnd(a_in, a_out, a_pi, a_po, a_c, ca, group_of_cycle[ca]),
                BandEnd(b_in, b_out, b_pi, b_po, b_c, cb, group_of_cycle[cb]),
            )
        )

    euler = sum(s.euler for s in subs) - d.n
    boundary = [(a, arc_carrier[a]) for a in range(1, d.size + 1)]
    return LayeredSurface(d, cx, sol, subs, bands, euler, arc_carrier, boundary)


def _boundary_components(F: LayeredSurface) -> int:
    """Boundary circles left after attaching every band.

    Attaching the band at z rejoins the two smoothed strands into the
    original crossing passage, so the free boundary is the orbit of the
    arcs under the knot's own successor map.
    """
    d = F.diagram
    if d.n == 0:
        return 1
    seen: Set[int] = set()
    comps = 0
    for start in range(1, d.size + 1):
        if start in seen:
            continue
        comps += 1
        a = start
        while a not in seen:
            seen.add(a)
            a = d.arc_outof(d.arc_head(a))
    return comps


def surface_genus(F: LayeredSurface) -> int:
    if _boundary_components(F) != 1:
        raise MultipleBoundaryComponents(
            "spanning surface boundary is not a single circle"
        )
    chi = F.euler
    if (1 - chi) % 2:
        raise RankMismatch(f"odd first Betti number 1 - chi = {1 - chi}")
    return (1 - chi) // 2


def canonical_slice_genus_of_diagram(d) -> int:
    """(n - p + 1) / 2 for p Seifert cycles: the genus of the surface
    obtained by stacking every cycle on its own layer."""
    from .gauss import seifert_cycles

    p = len(seifert_cycles(d))
    val = d.n - p + 1
    assert val % 2 == 0, "crossing/cycle parity violated"
    return val // 2


# ---------------------------------------------------------------------------
# Homology basis
# ---------------------------------------------------------------------------

# Spine edges are ("arc", arc, layer) directed with the knot, or
# ("band", z) directed a-end -> b-end.  Vertices are (crossing, layer).


def _spine(F: LayeredSurface):
    d = F.diagram
    verts: List[Tuple[int, int]] = []
    for s in F.subsurfaces:
        for z in s.crossings:
            verts.append((z, s.index))
    vidx = {v: i for i, v in enumerate(verts)}
    edges: List[Tuple] = []
    ends: List[Tuple[int, int]] = []
    for s in F.subsurfaces:
        for a in s.arcs:
            u = (d.label_at(d.arc_tail(a)), s.index)
            v = (d.label_at(d.arc_head(a)), s.index)
            edges.append(("arc", a, s.index))
            ends.append((vidx[u], vidx[v]))
    for b in F.bands:
        u = (b.label, b.a.layer)
        v = (b.label, b.b.layer)
        edges.append(("band", b.label))
        ends.append((vidx[u], vidx[v]))
    return verts, vidx, edges, ends


def _spanning_tree(nverts: int, ends: Sequence[Tuple[int, int]]):
    """BFS forest: parent edge index per vertex, roots marked -1."""
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(nverts)]
    for e, (u, v) in enumerate(ends):
        adj[u].append((e, v))
        adj[v].append((e, u))
    parent_edge = [-2] * nverts  # -2 unvisited, -1 root
    parent_vert = [-1] * nverts
    order: List[int] = []
    for root in range(nverts):
        if parent_edge[root] != -2:
            continue
        parent_edge[root] = -1
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for e, v in adj[u]:
                if parent_edge[v] == -2:
                    parent_edge[v] = e
                    parent_vert[v] = u
                    queue.append(v)
    return parent_edge, parent_vert


def _tree_path(u: int, v: int, parent_edge, parent_vert, ends):
    """Darts of the tree path u -> v (possibly through the root)."""

    def up(x):
        out = []
        while parent_edge[x] != -1:
            e = parent_edge[x]
            px = parent_vert[x]
            # dart direction is x -> px: +1 iff the edge's tail is x
            out.append((e, 1 if ends[e][0] == x else -1))
            x = px
        return out, x

    up_u, root_u = up(u)
    up_v, root_v = up(v)
    if root_u != root_v:
        raise RankMismatch("spanning surface spine is disconnected")
    # u -> root -> v, trimming the common tail.
    down_v = [(e, -s) for e, s in reversed(up_v)]
    while up_u and down_v and up_u[-1][0] == down_v[0][0]:
        up_u.pop()
        down_v.pop(0)
    return up_u + down_v


def _flow_to_walk(
    flow: Dict[int, int], ends, parent_edge, parent_vert
) -> List[Tuple[int, int]]:
    """Realize a circulation as one closed dart walk.

    Components of the support are made Eulerian circuits and then
    spliced together along tree paths (a path immediately retraced
    contributes nothing to homology or to linking sums).
    """
    out_darts: Dict[int, List[Tuple[int, int]]] = {}
    for e, f in flow.items():
        u, v = ends[e]
        if f > 0:
            src, cnt, dr = u, f, 1
        else:
            src, cnt, dr = v, -f, -1
        for _ in range(cnt):
            out_darts.setdefault(src, []).append((e, dr))

    def follow(v: int) -> List[Tuple[int, int]]:
        sub: List[Tuple[int, int]] = []
        while out_darts.get(v):
            e, dr = out_darts[v].pop()
            sub.append((e, dr))
            v = ends[e][1] if dr > 0 else ends[e][0]
        return sub

    def circuit_from(v0: int) -> List[Tuple[int, int]]:
        # Hierholzer: walk until stuck (a circulation strands you only
        # back at the start), then splice detours at visited vertices.
        trail = follow(v0)
        changed = True
        while changed:
            changed = False
            v = v0
            for pos in range(len(trail) + 1):
                if out_darts.get(v):
                    trail[pos:pos] = follow(v)
                    changed = True
                    break
                if pos < len(trail):
                    e, dr = trail[pos]
                    v = ends[e][1] if dr > 0 else ends[e][0]
        return trail

    walks: List[Tuple[int, List[Tuple[int, int]]]] = []
    while any(out_darts.get(v) for v in out_darts):
        v0 = next(v for v in sorted(out_darts) if out_darts[v])
        walks.append((v0, circuit_from(v0)))
    if not walks:
        return []
    base_v, walk = walks[0]
    for v0, extra in walks[1:]:
        path = _tree_path(base_v, v0, parent_edge, parent_vert, ends)
        back = [(e, -s) for e, s in reversed(path)]
        walk = walk + path + extra + back
    return walk


def homology_basis(F: LayeredSurface) -> List[LayeredCycle]:
    """A basis of first homology as closed walks on arcs and bands.

    Fundamental cycles of the spine graph are reduced modulo the face
    boundary relations; the survivors are stitched into single closed
    walks.  Their count must equal 1 - chi(F).
    """
    cx = F.complex
    verts, vidx, edges, ends = _spine(F)
    if not verts:
        if F.euler != 1:
            raise RankMismatch("empty spine on a non-disc surface")
        return []
    parent_edge, parent_vert = _spanning_tree(len(verts), ends)
    nontree = [e for e in range(len(edges)) if e not in set(parent_edge)]
    nt_index = {e: i for i, e in enumerate(nontree)}

    # Face boundary relations, written in fundamental-cycle coordinates
    # (a closed walk's coordinates are just its non-tree coefficients).
    edge_index: Dict[Tuple, int] = {edge: e for e, edge in enumerate(edges)}
    rels: List[List[int]] = []
    for s in F.subsurfaces:
        for k in s.faces:
            vec = [0] * len(nontree)
            for arc, sgn in cx.faces[k].steps:
                e = edge_index[("arc", arc, s.index)]
                if e in nt_index:
                    vec[nt_index[e]] += sgn
            rels.append(vec)

    combos = quotient_basis(rels, len(nontree))
    expected = 1 - F.euler
    if len(combos) != expected:
        raise RankMismatch(
            f"homology rank {len(combos)} != 1 - chi = {expected}"
        )

    basis: List[LayeredCycle] = []
    for combo in combos:
        flow: Dict[int, int] = {}
        for i, lam in enumerate(combo):
            if not lam:
                continue
            e = nontree[i]
            flow[e] = flow.get(e, 0) + lam
            u, v = ends[e]
            for pe, s in _tree_path(v, u, parent_edge, parent_vert, ends):
                flow[pe] = flow.get(pe, 0) + lam * s
        flow = {e: f for e, f in flow.items() if f}
        walk = _flow_to_walk(flow, ends, parent_edge, parent_vert)
        steps: List[Step] = []
        for e, dr in walk:
            edge = edges[e]
            if edge[0] == "arc":
                steps.append(ArcStep(edge[1], dr, edge[2]))
            else:
                steps.append(BandStep(edge[1], dr))
        basis.append(LayeredCycle(tuple(steps)))
    return basis


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def step_to_json(s: Step) -> dict:
    if isinstance(s, ArcStep):
        return {"kind": "arc", "arc": s.arc, "direction": s.direction,
                "layer": s.layer}
    if isinstance(s, BandStep):
        return {"kind": "band", "band": s.band, "direction": s.direction}
    return {"kind": "chord", "face": s.face, "layer": s.layer,
            "start": list(s.start), "end": list(s.end)}


def cycle_to_json(c: LayeredCycle) -> list:
    return [step_to_json(s) for s in c.steps]


def surface_to_json(F: LayeredSurface) -> dict:
    return {
        "subsurfaces": [
            {
                "index": s.index,
                "faces": list(s.faces),
                "epsilon": s.epsilon,
                "height": s.height,
                "arcs": list(s.arcs),
                "crossings": list(s.crossings),
                "euler": s.euler,
            }
            for s in F.subsurfaces
        ],
        "bands": [
            {
                "crossing": b.label,
                "sign": b.sign,
                "a": {"inArc": b.a.in_arc, "outArc": b.a.out_arc,
                      "corner": b.a.corner, "cycle": b.a.cycle + 1,
                      "layer": b.a.layer},
                "b": {"inArc": b.b.in_arc, "outArc": b.b.out_arc,
                      "corner": b.b.corner, "cycle": b.b.cycle + 1,
                      "layer": b.b.layer},
            }
            for b in F.bands
        ],
        "euler": F.euler,
        "genus": surface_genus(F),
        "boundary": [{"arc": a, "layer": g} for a, g in F.boundary],
    }
