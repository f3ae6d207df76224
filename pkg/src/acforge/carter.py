"""The closed oriented surface a Gauss diagram lives on, as a 2-complex.

Vertices are the crossings, edges are the 2n circle arcs, and the faces
are traced from the ribbon structure: around every crossing the four
strand ends sit at ports E, N, W, S in counterclockwise order, with

    sign +:  E = over-out, N = under-out, W = over-in, S = under-in
    sign -:  E = over-out, N = under-in,  W = over-in, S = under-out

Walking a face keeps it on a fixed side: arriving at a port, the walk
leaves through the neighbouring port (clockwise for the frozen
handedness), which traces every directed arc side exactly once.  Each
arc therefore appears in the face system once with +1 and once with -1,
which is what makes the face columns a genuine cellular boundary map.

This cyclic port order is invariant under over/under swaps, so the
complex is literally unchanged by crossing changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatch,
    InconsistentOrientation,
    NotCheckerboard,
)
from .gauss import GaussDiagram, is_checkerboard
from .intmat import smith_normal_form, snf_rank, solve_integer

# Frozen handedness of the face walk (see the calibration tests): the
# walk turns to the clockwise-neighbouring port, so each face lies on
# the left of every dart it traverses.
_PORTS_CCW = ("E", "N", "W", "S")
_CW_NEXT = {"E": "S", "S": "W", "W": "N", "N": "E"}

# Corner of the disc swept when arriving at one port and leaving by its
# clockwise neighbour.
_CORNER = {("W", "N"): "NW", ("N", "E"): "NE", ("E", "S"): "SE", ("S", "W"): "SW"}


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of one face."""

    steps: Tuple[Tuple[int, int], ...]  # (arc, +-1), in walk order
    corners: Tuple[Tuple[int, str], ...]  # (crossing label, corner) after step i

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def arcs(self) -> Tuple[int, ...]:
        return tuple(sorted({a for a, _ in self.steps}))


@dataclass
class CarterComplex:
    diagram: GaussDiagram
    faces: List[FaceWalk]
    boundary2: List[List[int]]  # 2n x m, net arc coefficients per face
    boundary1: List[List[int]]  # n x 2n over sorted crossing labels
    corner_face: Dict[Tuple[int, str], int] = field(default_factory=dict)
    left_face: Dict[int, int] = field(default_factory=dict)
    right_face: Dict[int, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def m(self) -> int:
        return len(self.faces)

    @property
    def genus(self) -> int:
        chi = self.n - 2 * self.n + self.m if self.n else 2
        assert (2 - chi) % 2 == 0
        return (2 - chi) // 2

    def face_size(self, k: int) -> int:
        return len(self.faces[k])

    def default_missing_face(self) -> int:
        """Largest boundary walk, lowest index on ties."""
        return max(range(self.m), key=lambda k: (self.face_size(k), -k))


def _port_of_end(d: GaussDiagram, pos: int, end: str) -> Tuple[int, str]:
    """Map an arc end at a circle position to (crossing label, port).

    end is 'head' (arc arriving at pos) or 'tail' (arc leaving pos).
    """
    kind, lab = d.kind_at(pos), d.label_at(pos)
    sgn = d.arrows[lab].sign
    if kind == "O":
        return lab, ("W" if end == "head" else "E")
    if sgn > 0:
        return lab, ("S" if end == "head" else "N")
    return lab, ("N" if end == "head" else "S")


def build_complex(d: GaussDiagram) -> CarterComplex:
    if not is_checkerboard(d):
        raise NotCheckerboard("surface complex needs even crossing indices")
    if d.n == 0:
        # The unknot circle on the sphere: two empty faces, no arcs.
        return CarterComplex(d, [FaceWalk((), ()), FaceWalk((), ())], [], [])

    size = d.size
    # port_out[(label, port)] = dart leaving the crossing through the port.
    port_out: Dict[Tuple[int, str], Tuple[int, int]] = {}
    # dart_in_port[dart] = port it arrives at.
    dart_in_port: Dict[Tuple[int, int], Tuple[int, str]] = {}
    for pos in range(size):
        a_in, a_out = d.arc_into(pos), d.arc_outof(pos)
        lab_h, port_h = _port_of_end(d, pos, "head")
        lab_t, port_t = _port_of_end(d, pos, "tail")
        dart_in_port[(a_in, 1)] = (lab_h, port_h)
        port_out[(lab_h, port_h)] = (a_in, -1)  # leave backwards along a_in
        dart_in_port[(a_out, -1)] = (lab_t, port_t)
        port_out[(lab_t, port_t)] = (a_out, 1)

    faces: List[FaceWalk] = []
    corner_face: Dict[Tuple[int, str], int] = {}
    left: Dict[int, int] = {}
    right: Dict[int, int] = {}
    seen: Dict[Tuple[int, int], bool] = {}
    for arc0 in range(1, size + 1):
        for dir0 in (1, -1):
            start = (arc0, dir0)
            if start in seen:
                continue
            steps: List[Tuple[int, int]] = []
            corners: List[Tuple[int, str]] = []
            dart = start
            while dart not in seen:
                seen[dart] = True
                steps.append(dart)
                lab, port = dart_in_port[dart]
                nxt_port = _CW_NEXT[port]
                corners.append((lab, _CORNER[(port, nxt_port)]))
                dart = port_out[(lab, nxt_port)]
            if dart != start:
                raise InconsistentOrientation("face walk did not close")
            idx = len(faces)
            faces.append(FaceWalk(tuple(steps), tuple(corners)))
            for arc, sgn in steps:
                if sgn > 0:
                    if arc in left:
                        raise InconsistentOrientation(
                            f"arc {arc} traversed twice positively"
                        )
                    left[arc] = idx
                else:
                    if arc in right:
                        raise InconsistentOrientation(
                            f"arc {arc} traversed twice negatively"
                        )
                    right[arc] = idx
            for corner in corners:
                corner_face[corner] = idx

    m = len(faces)
    b2 = [[0] * m for _ in range(size)]
    for k, f in enumerate(faces):
        for arc, sgn in f.steps:
            b2[arc - 1][k] += sgn
    labels = d.labels()
    row_of = {lab: i for i, lab in enumerate(labels)}
    b1 = [[0] * size for _ in labels]
    for arc in range(1, size + 1):
        b1[row_of[d.label_at(d.arc_head(arc))]][arc - 1] += 1
        b1[row_of[d.label_at(d.arc_tail(arc))]][arc - 1] -= 1

    cx = CarterComplex(d, faces, b2, b1, corner_face, left, right)
    # d1 o d2 == 0: every face walk is a closed loop of arcs.
    for k in range(m):
        col = [b2[i][k] for i in range(size)]
        for row in b1:
            if sum(r * c for r, c in zip(row, col)):
                raise InconsistentOrientation("boundary maps do not compose to 0")
    return cx


def carter_genus(d: GaussDiagram) -> int:
    return build_complex(d).genus


def arc_chain_of_cycle(cx: CarterComplex, arcs: Sequence[int]) -> List[int]:
    """The 1-chain (over all 2n arcs) of a forward-traversed arc set."""
    v = [0] * (2 * cx.n)
    for a in arcs:
        v[a - 1] += 1
    return v


def image_membership(
    cx: CarterComplex, target: Sequence[int], pivot_face: int = 0
) -> Optional[List[int]]:
    """Solve boundary2 @ x = target over Z, normalized to x[pivot] = 0.

    Returns None when the target is not a face boundary.  The kernel of
    boundary2 is spanned by the all-ones vector (the fundamental class),
    so pinning one coordinate to 0 makes the answer unique.
    """
    size = 2 * cx.n
    if len(target) != size:
        raise DimensionMismatch(
            f"chain has length {len(target)}, expected {size}"
        )
    if not 0 <= pivot_face < cx.m:
        raise DimensionMismatch(f"no face indexed {pivot_face}")
    x = solve_integer(cx.boundary2, list(target))
    if x is None:
        return None
    shift = x[pivot_face]
    return [xi - shift for xi in x]


def boundary2_rank(cx: CarterComplex) -> int:
    s, _, _, _ = smith_normal_form(cx.boundary2)
    return snf_rank(s)
