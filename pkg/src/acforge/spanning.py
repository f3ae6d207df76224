"""Grouping Seifert cycles so each group bounds inside the surface complex.

A group of Seifert cycles is *spannable* when the sum of their arc
chains is a face boundary; the integer face vector normalized to vanish
on a chosen missing face must then have all entries in {0,1} or all in
{-1,0} -- the sheet lies on the left (+1) or right (-1) of its cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .carter import CarterComplex, arc_chain_of_cycle, image_membership
from .errors import NonBinarySolution, NotNullHomologous
from .gauss import seifert_cycles


@dataclass
class SpanningSolution:
    complex: CarterComplex
    cycles: List[Tuple[int, ...]]  # Seifert cycles (arc tuples)
    partition: List[Tuple[int, ...]]  # groups of 0-based cycle indices
    missing: int  # pivot face index
    vectors: List[List[int]]  # one face vector per group
    epsilons: List[int]  # sheet side: +1 left of its cycles, -1 right
    flips: frozenset = frozenset()  # faces whose orientation was reversed

    @property
    def group_count(self) -> int:
        return len(self.partition)

    def group_of_cycle(self, cycle_idx: int) -> int:
        for g, grp in enumerate(self.partition):
            if cycle_idx in grp:
                return g
        raise KeyError(cycle_idx)

    def faces_of_group(self, g: int) -> Tuple[int, ...]:
        return tuple(k for k, y in enumerate(self.vectors[g]) if y)


def _group_chain(cx: CarterComplex, cycles, group) -> List[int]:
    v = [0] * (2 * cx.n)
    for idx in group:
        chain = arc_chain_of_cycle(cx, cycles[idx])
        v = [x + y for x, y in zip(v, chain)]
    return v


def minimal_partition(cx: CarterComplex) -> List[Tuple[int, ...]]:
    """Greedy partition into smallest spannable groups.

    Repeatedly take the first spannable subset of the remaining cycles,
    ordering candidates by cardinality and then lexicographically by
    cycle index.  Raises NotNullHomologous when some remainder admits no
    spannable subset at all (the diagram is not almost classical).
    """
    cycles = seifert_cycles(cx.diagram)
    if cx.n == 0:
        return [(0,)]
    remaining = list(range(len(cycles)))
    groups: List[Tuple[int, ...]] = []
    while remaining:
        found = None
        for size in range(1, len(remaining) + 1):
            for combo in combinations(remaining, size):
                target = _group_chain(cx, cycles, combo)
                if image_membership(cx, target, 0) is not None:
                    found = combo
                    break
            if found:
                break
        if not found:
            raise NotNullHomologous(
                "no subset of the remaining Seifert cycles bounds"
            )
        groups.append(found)
        remaining = [i for i in remaining if i not in found]
    return groups


def spanning_solution(
    cx: CarterComplex,
    partition: Optional[Sequence[Tuple[int, ...]]] = None,
    missing: Optional[int] = None,
    face_flips: Optional[Sequence[int]] = None,
) -> SpanningSolution:
    """Solve each group for its face vector, pinned to 0 on the missing face.

    face_flips lists face indices whose orientation the caller considers
    reversed; the returned vectors are expressed in that flipped basis
    (so a flipped face on a +1 sheet carries coefficient -1), while the
    sign test and the recorded epsilons always refer to the common
    coherent orientation.
    """
    cycles = seifert_cycles(cx.diagram)
    flips = frozenset(face_flips or ())
    bad = [k for k in flips if not 0 <= k < cx.m]
    if bad:
        raise NonBinarySolution(f"cannot flip nonexistent faces {sorted(bad)}")
    if partition is None:
        partition = minimal_partition(cx)
    if missing is None:
        missing = cx.default_missing_face()

    def reframe(x: List[int]) -> List[int]:
        return [-v if k in flips else v for k, v in enumerate(x)]

    if cx.n == 0:
        # The unknot spans the face that is not pinned away.
        x = [0, 0]
        x[1 - missing] = 1
        return SpanningSolution(
            cx, cycles, [(0,)], missing, [reframe(x)], [1], flips
        )

    vectors: List[List[int]] = []
    epsilons: List[int] = []
    for group in partition:
        target = _group_chain(cx, cycles, group)
        x = image_membership(cx, target, missing)
        if x is None:
            raise NotNullHomologous(
                f"cycle group {tuple(i + 1 for i in group)} does not bound"
            )
        vals = set(x)
        if vals <= {0, 1}:
            eps = 1
        elif vals <= {-1, 0}:
            eps = -1
        else:
            raise NonBinarySolution(
                f"group {tuple(i + 1 for i in group)} has entries "
                f"{sorted(vals)} after pinning face {missing}"
            )
        vectors.append(reframe(x))
        epsilons.append(eps)
    return SpanningSolution(
        cx, cycles, [tuple(g) for g in partition], missing, vectors, epsilons,
        flips,
    )
