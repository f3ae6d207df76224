"""Check the linking engine on classical knots, then pin example codes.

Stage 1 runs the right trefoil and the figure eight end to end: their
planar diagrams give genus-0 complexes, so the layered surface is an
honest classical Seifert surface and must reproduce V+ == (V-)^T, the
textbook polynomials, and signature -2 for the right trefoil.  Stage 2
filters the reconstructed candidate codes for the three worked examples
by their frozen invariants; surviving codes are reported with the
lexicographically least one first.

Run:  python3 tools/calibrate.py
"""

from __future__ import annotations

import sys
import time

sys.path.insert(0, "src")

from acforge.carter import build_complex
from acforge.errors import AcforgeError
from acforge.gauss import parse_gauss_code
from acforge.intmat import bareiss_det
from acforge.laurent import LaurentPoly
from acforge.linking import seifert_matrices, validate_pair
from acforge.spanning import spanning_solution
from acforge.surface import build_surface, homology_basis

T = LaurentPoly.t_power(1)
ONE = LaurentPoly.const(1)


def poly(pairs):
    return LaurentPoly(dict(pairs))


def alexander(vminus, vplus):
    g = len(vminus) // 2
    rows = [
        [T * vminus[i][j] - LaurentPoly.const(vplus[i][j])
         for j in range(len(vminus))]
        for i in range(len(vminus))
    ]
    return bareiss_det(rows).shift(-g) if vminus else ONE


def nabla(v):
    g = len(v) // 2
    rows = [
        [T * v[i][j] - LaurentPoly.const(v[j][i]) for j in range(len(v))]
        for i in range(len(v))
    ]
    return bareiss_det(rows).shift(-g) if v else ONE


def pipeline(code):
    d = parse_gauss_code(code)
    sol = spanning_solution(build_complex(d))
    F = build_surface(sol)
    basis = homology_basis(F)
    vp, vm = seifert_matrices(F, basis)
    validate_pair(vp, vm)
    return d, F, vp, vm


TREFOIL = "O1+U2+O3+U1+O2+U3+"
FIG8 = "O1+ U2+ O3- U4- O2+ U1+ O4- U3-"
TREFOIL_ALEX = poly([(1, 1), (0, -1), (-1, 1)])
FIG8_ALEX = poly([(1, -1), (0, 3), (-1, -1)])

EX1_ALEX = poly([(0, 2), (-1, -1)])  # 4.99
EX1_NPLUS = poly([(1, -1), (0, 2), (-1, -1)])
EX1_NMINUS = poly([(0, 4)])
EX2_ALEX = poly([(1, 1)])  # 5.2025
EX2_N = ONE
EX3_ALEX = poly([(1, -1), (0, 2), (-1, 1), (-2, -1)])  # 6.87548


def sig_at_minus_one(vp):
    g = len(vp)
    sym = [[vp[i][j] + vp[j][i] for j in range(g)] for i in range(g)]
    # eigen count by Jacobi-free 2x2 handling is enough for rank-2 cases
    if g == 2:
        det = sym[0][0] * sym[1][1] - sym[0][1] * sym[1][0]
        if det > 0:
            return 2 if sym[0][0] > 0 else -2
        return 0
    raise NotImplementedError


def classical_ok(code, target, report=False):
    try:
        d, F, vp, vm = pipeline(code)
    except AcforgeError as e:
        if report:
            print("   ", code, "->", type(e).__name__, e)
        return False
    ok = True
    if vp != [list(r) for r in zip(*vm)]:
        if report:
            print("    V+ != transpose(V-):", vp, vm)
        ok = False
    if not alexander(vm, vp).equals_up_to_units(target):
        if report:
            print("    alexander", alexander(vm, vp).display(), "!=",
                  target.display())
        ok = False
    if report:
        print("   ", code)
        print("      V+ =", vp)
        print("      V- =", vm)
        print("      alexander =", alexander(vm, vp).display())
    return ok


def candidates(name):
    lines = open("/root/notes/search_candidates.txt").read().splitlines()
    out, active = [], False
    for l in lines:
        if "candidate codes" in l:
            active = name in l
            continue
        if active:
            if l.startswith("    ") and l.strip():
                out.append(l.strip())
            elif not l.strip():
                active = False
    return out


def main():
    t0 = time.time()
    ok1 = classical_ok(TREFOIL, TREFOIL_ALEX, report=True)
    ok2 = classical_ok(FIG8, FIG8_ALEX, report=True)
    if ok1:
        _, _, vp, _ = pipeline(TREFOIL)
        print("    trefoil sigma(-1) =", sig_at_minus_one(vp))
    print(f"stage 1: trefoil {'ok' if ok1 else 'FAIL'}, "
          f"figure-eight {'ok' if ok2 else 'FAIL'}")
    if not (ok1 and ok2):
        return

    ex1 = candidates("4.99")
    ex2 = candidates("5.2025")
    ex3 = candidates("6.87548")
    good1, good2, good3 = [], [], []
    for code in ex1:
        try:
            d, F, vp, vm = pipeline(code)
        except AcforgeError:
            continue
        if (
            nabla(vp).equals(EX1_NPLUS)
            and nabla(vm).equals(EX1_NMINUS)
            and alexander(vm, vp).equals_up_to_units_and_inversion(EX1_ALEX)
        ):
            good1.append(code)
    for code in ex2:
        try:
            d, F, vp, vm = pipeline(code)
        except AcforgeError:
            continue
        if (
            nabla(vp).equals(EX2_N)
            and nabla(vm).equals(EX2_N)
            and alexander(vm, vp).equals_up_to_units_and_inversion(EX2_ALEX)
        ):
            good2.append(code)
    for code in ex3:
        try:
            d, F, vp, vm = pipeline(code)
        except AcforgeError:
            continue
        if alexander(vm, vp).equals_up_to_units_and_inversion(EX3_ALEX):
            good3.append(code)

    print(f"stage 2 ({time.time() - t0:.1f}s): "
          f"4.99 {len(good1)}/{len(ex1)}  "
          f"5.2025 {len(good2)}/{len(ex2)}  "
          f"6.87548 {len(good3)}/{len(ex3)}")
    for name, lst in (("4.99", good1), ("5.2025", good2),
                      ("6.87548", good3)):
        if lst:
            print(f"  {name}: lex-min {min(lst)}")
            for c in sorted(lst)[:6]:
                print("      ", c)


if __name__ == "__main__":
    main()