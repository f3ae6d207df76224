#!/usr/bin/env python3
"""One-off dump of everything the frozen example codes must reproduce.

Prints, for each frozen code: counts, cycle supports, the face/arc
incidence in the paper-matched order, spanning data mapped through the
face bijection, surface shape, Seifert pair, and the polynomial
invariants derived from it.  Used to double-check the data frozen in
tests/fixtures.py before the test suite was written.
"""

from __future__ import annotations

import sys

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from acforge.carter import build_complex
from acforge.gauss import parse_gauss_code, seifert_cycles
from acforge.intmat import bareiss_det, transpose
from acforge.laurent import LaurentPoly
from acforge.linking import surface_seifert_pair
from acforge.spanning import minimal_partition, spanning_solution
from acforge.surface import build_surface, canonical_slice_genus_of_diagram
from search_codes import EX1, EX2, EX3, match_columns

CODES = {
    "4.99": ("O1- U2- U3+ O4+ O2- U1- U4+ O3+", EX1),
    "5.2025": ("O1+ O2- O3+ O4- U2- O5- U4- U1+ U5- U3+", EX2),
    "6.87548": ("O1+ U2+ U3+ O4+ O5- U6- U4+ O3+ O2+ U1+ O6- U5-", EX3),
    "trefoil": ("O1+U2+O3+U1+O2+U3+", None),
    "figure8": ("O1+ U2+ O3- U4- O2+ U1+ O4- U3-", None),
}


def poly_of(rows_a, rows_b):
    """t^{-g} det(t*A - B) for integer matrices."""
    g = len(rows_a) // 2
    t = LaurentPoly.t_power(1)
    m = [
        [t * a - LaurentPoly.const(b) for a, b in zip(ra, rb)]
        for ra, rb in zip(rows_a, rows_b)
    ]
    det = bareiss_det(m) if m else LaurentPoly.const(1)
    if isinstance(det, int):
        det = LaurentPoly.const(det)
    return det.shift(-g)


def main():
    for name, (code, target) in CODES.items():
        d = parse_gauss_code(code)
        cx = build_complex(d)
        cycles = seifert_cycles(d)
        print(f"== {name}  {code}")
        print(f"   n={cx.n} m={cx.m} carter_genus={cx.genus} p={len(cycles)}")
        print(f"   cycles={[tuple(c) for c in cycles]}")
        print(f"   missing={cx.default_missing_face()} "
              f"face_sizes={[cx.face_size(k) for k in range(cx.m)]}")
        part = minimal_partition(cx)
        sol = spanning_solution(cx)
        print(f"   partition={part} eps={sol.epsilons}")
        print(f"   vectors={sol.vectors}")
        if target is not None:
            mine = [
                tuple(cx.boundary2[r][k] for r in range(2 * cx.n))
                for k in range(cx.m)
            ]
            mc = match_columns(mine, target.paper_cols)
            assert mc is not None, "boundary matrix no longer matches"
            perm, sigma = mc
            print(f"   face perm (mine->paper)={perm} sigma={sigma}")
            assert perm[cx.default_missing_face()] == 0
            for gi, grp in enumerate(sol.partition):
                mapped = [0] * cx.m
                for k, y in enumerate(sol.vectors[gi]):
                    mapped[perm[k]] = sigma[k] * y
                print(f"   group {grp} -> paper-frame vector {mapped}")
        F = build_surface(sol)
        print(f"   surface: genus={F.genus} chi={F.euler} "
              f"sheets={[tuple(s.faces) for s in F.subsurfaces]} "
              f"heights={[s.height for s in F.subsurfaces]}")
        print(f"   slice-canonical genus={canonical_slice_genus_of_diagram(d)}")
        pair, basis = surface_seifert_pair(F)
        print(f"   V+ = {pair.vplus}")
        print(f"   V- = {pair.vminus}")
        vp = [list(r) for r in pair.vplus]
        vm = [list(r) for r in pair.vminus]
        print(f"   alexander   = {poly_of(vm, vp).display()}")
        print(f"   nabla+      = {poly_of(vp, transpose(vp)).display()}")
        print(f"   nabla-      = {poly_of(vm, transpose(vm)).display()}")
        print()


if __name__ == "__main__":
    main()
