#!/usr/bin/env python3
"""Reconstruct the worked-example Gauss codes from their frozen data.

Each worked example is pinned by arc-level data that is independent of
how the diagram happened to be drawn: the Seifert-cycle supports, the
face/arc incidence matrix (up to face order and a global orientation
flip), the default spanning solution, and (for the first example) the
alternating-repair arrow set.  This script enumerates all chord
diagrams with the right cycle supports, then all over/under + sign
assignments, and keeps the codes whose computed data matches.

Run:  python3 tools/search_codes.py
"""

from __future__ import annotations

import itertools
import sys
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

sys.path.insert(0, "src")

from acforge.carter import build_complex
from acforge.gauss import (
    GaussDiagram,
    from_arrow_data,
    is_almost_classical,
    make_alternating,
    seifert_cycles,
)
from acforge.spanning import spanning_solution

Support = FrozenSet[int]


def perfect_matchings(points: List[int]):
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        b = points[i]
        rest = points[1:i] + points[i + 1 :]
        for tail in perfect_matchings(rest):
            yield [(a, b)] + tail


def cycle_supports(pairing: Sequence[Tuple[int, int]]) -> List[Support]:
    d = from_arrow_data([(a, b, 1) for a, b in pairing])
    return [frozenset(c) for c in seifert_cycles(d)]


def match_columns(
    mine: List[Tuple[int, ...]], paper: List[Tuple[int, ...]]
) -> Optional[Tuple[Dict[int, int], Dict[int, int]]]:
    """Bijection sigma[k] * mine[k] == paper[perm[k]] with per-column
    signs sigma[k]; returns (perm, sigma)."""
    perm: Dict[int, int] = {}
    sigma: Dict[int, int] = {}
    used = set()
    for k, col in enumerate(mine):
        hit = None
        for j, pc in enumerate(paper):
            if j in used:
                continue
            if pc == col:
                hit, s = j, 1
                break
            if pc == tuple(-x for x in col):
                hit, s = j, -1
                break
        if hit is None:
            return None
        perm[k] = hit
        sigma[k] = s
        used.add(hit)
    return perm, sigma


class Target:
    def __init__(
        self,
        name: str,
        n: int,
        supports: List[Support],
        b2t: List[List[int]],
        partition: List[FrozenSet[Support]],
        vectors: Dict[FrozenSet[Support], List[int]],
        plus_flipped: Optional[int] = None,
    ):
        self.name = name
        self.n = n
        self.supports = sorted(supports, key=sorted)
        self.b2t = b2t
        self.partition = set(partition)
        self.vectors = vectors
        self.plus_flipped = plus_flipped
        self.paper_cols = [tuple(row) for row in b2t]


def search(t: Target) -> List[str]:
    hits: List[str] = []
    pair_hits = 0
    for pairing in perfect_matchings(list(range(2 * t.n))):
        if sorted(cycle_supports(pairing), key=sorted) != t.supports:
            continue
        pair_hits += 1
        for dirs in itertools.product((0, 1), repeat=t.n):
            for signs in itertools.product((1, -1), repeat=t.n):
                data = []
                for (a, b), flip, s in zip(pairing, dirs, signs):
                    data.append((b, a, s) if flip else (a, b, s))
                d = from_arrow_data(data)
                if not is_almost_classical(d):
                    continue
                if t.plus_flipped is not None:
                    plus = {lab for lab, ar in d.arrows.items() if ar.sign > 0}
                    if len(plus) != t.plus_flipped:
                        continue
                    alt = make_alternating(d)
                    if set(alt.flipped) != plus:
                        continue
                cx = build_complex(d)
                if cx.m != len(t.b2t):
                    continue
                mine = [
                    tuple(cx.boundary2[r][k] for r in range(2 * t.n))
                    for k in range(cx.m)
                ]
                mc = match_columns(mine, t.paper_cols)
                if mc is None:
                    continue
                perm, sigma = mc
                if perm[cx.default_missing_face()] != 0:
                    continue
                sol = spanning_solution(cx)
                part = set()
                vecs: Dict[FrozenSet[Support], List[int]] = {}
                for gi, grp in enumerate(sol.partition):
                    key = frozenset(frozenset(sol.cycles[i]) for i in grp)
                    part.add(key)
                    mapped = [0] * cx.m
                    for k, y in enumerate(sol.vectors[gi]):
                        mapped[perm[k]] = sigma[k] * y
                    vecs[key] = mapped
                if part != t.partition:
                    continue
                if any(vecs[key] != t.vectors[key] for key in vecs):
                    continue
                hits.append(d.code())
    print(f"  {t.name}: {pair_hits} chord diagrams had the right cycles")
    return hits


S = frozenset

EX1 = Target(
    "knot-4.99",
    4,
    [S({1, 5}), S({2, 4, 6, 8}), S({3, 7})],
    [
        [1, -1, 1, -1, 1, -1, 1, -1],
        [-1, 0, 0, 0, -1, 0, 0, 0],
        [0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, -1, 0, 0, 0, -1, 0],
    ],
    [S([S({1, 5})]), S([S({2, 4, 6, 8})]), S([S({3, 7})])],
    {
        S([S({1, 5})]): [0, -1, 0, 0],
        S([S({2, 4, 6, 8})]): [0, 0, 1, 0],
        S([S({3, 7})]): [0, 0, 0, -1],
    },
    plus_flipped=2,
)

EX2 = Target(
    "knot-5.2025",
    5,
    [S({2, 4, 6, 8, 10}), S({1, 3, 5, 7, 9})],
    [
        # the 2-handle missing from the spanning solution; its printed
        # tail breaks the around-the-circle alternation that every
        # state satisfies, so the row is used in corrected form (this
        # is sign-insensitive anyway: columns match up to sign)
        [-1, 1, -1, 1, -1, 1, -1, 1, -1, 1],
        [0, -1, 0, -1, 0, -1, 0, -1, 0, -1],
        [1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
    ],
    [S([S({2, 4, 6, 8, 10})]), S([S({1, 3, 5, 7, 9})])],
    {
        S([S({2, 4, 6, 8, 10})]): [0, -1, 0],
        S([S({1, 3, 5, 7, 9})]): [0, 0, 1],
    },
)

EX3 = Target(
    "knot-6.87548",
    6,
    [S({1, 9}), S({2, 8}), S({3, 7}), S({5, 11}), S({4, 6, 10, 12})],
    [
        [-1, 1, 0, 1, 0, 1, 0, 1, -1, 1, 0, 1],
        [0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0],
        [0, -1, 1, -1, 0, -1, 1, -1, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, -1],
        [1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    ],
    [
        S([S({1, 9})]),
        S([S({3, 7})]),
        S([S({5, 11})]),
        S([S({2, 8}), S({4, 6, 10, 12})]),
    ],
    {
        S([S({1, 9})]): [0, 0, 0, 0, 0, 1],
        S([S({3, 7})]): [0, -1, 0, 0, 0, 0],
        S([S({5, 11})]): [0, 0, -1, 0, 0, 0],
        S([S({2, 8}), S({4, 6, 10, 12})]): [0, -1, -1, -1, -1, 0],
    },
)


def search_figure8() -> List[str]:
    """Planar alternating 4-crossing prime codes (the figure-eight)."""
    out = []
    for pairing in perfect_matchings(list(range(8))):
        # prime + reduced: interlacement graph connected, no isolated chord
        def interleaved(c1, c2):
            a, b = sorted(c1)
            return (a < c2[0] < b) != (a < c2[1] < b)

        adj = {
            i: {j for j in range(4) if j != i and interleaved(pairing[i], pairing[j])}
            for i in range(4)
        }
        if any(not v for v in adj.values()):
            continue
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        if len(seen) != 4:
            continue
        if len(cycle_supports(pairing)) != 3:
            continue
        for dirs in itertools.product((0, 1), repeat=4):
            for signs in itertools.product((1, -1), repeat=4):
                data = []
                for (a, b), flip, s in zip(pairing, dirs, signs):
                    data.append((b, a, s) if flip else (a, b, s))
                d = from_arrow_data(data)
                if not d.is_alternating():
                    continue
                if not is_almost_classical(d):
                    continue
                cx = build_complex(d)
                if cx.genus != 0:
                    continue
                out.append(d.code())
    return sorted(set(out))


def main() -> None:
    for t in (EX1, EX2, EX3):
        codes = sorted(set(search(t)))
        print(f"  {t.name}: {len(codes)} candidate codes")
        for c in codes:
            print(f"    {c}")
        print()
    figs = search_figure8()
    print(f"  figure-eight planar candidates: {len(figs)}")
    for c in figs[:8]:
        print(f"    {c}")
    if figs:
        print(f"  lex-min: {min(figs)}")


if __name__ == "__main__":
    main()
