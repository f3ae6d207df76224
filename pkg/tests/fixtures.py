"""Frozen inputs and expected values shared by the test suite.

The three tabulated virtual knots (4.99, 5.2025, 6.87548) come with
reference data transcribed from their worked write-up: directed Seifert
matrix pairs, face/arc incidence matrices, Seifert-cycle supports,
spanning solutions, and invariant values.  The Gauss codes themselves
were reconstructed by exhaustive search against that same data (see
tools/search_codes.py) and the lexicographically smallest hits are
frozen here.

ENGINE_PAIRS pins this build's own pipeline output matrices; they are
regression guards, not external targets (any unimodular change of
homology basis would alter them while preserving every invariant).
"""

from __future__ import annotations

# --- Gauss codes ---------------------------------------------------------

CODE_499 = "O1- U2- U3+ O4+ O2- U1- U4+ O3+"
CODE_52025 = "O1+ O2- O3+ O4- U2- O5- U4- U1+ U5- U3+"
CODE_687548 = "O1+ U2+ U3+ O4+ O5- U6- U4+ O3+ O2+ U1+ O6- U5-"
CODE_TREFOIL = "O1+U2+O3+U1+O2+U3+"
CODE_FIGURE8 = "O1+ U2+ O3- U4- O2+ U1+ O4- U3-"

# Checkerboard (indices 2, 0, -2) but not almost classical; the smallest
# such code in lexicographic order.  No spanning solution exists.
CODE_CB_NOT_AC = "O1+ O2+ O3+ U1+ U2+ U3+"

# Not even checkerboard (indices 1, -1).
CODE_ODD = "O1+O2+U1+U2+"

# --- reference directed Seifert matrix pairs -----------------------------

PAIR_499 = {
    "vplus": [[1, 0], [0, -1]],
    "vminus": [[1, 1], [-1, -1]],
}
PAIR_52025 = {
    "vplus": [[0, 0, 0, 0], [0, 0, 0, 0], [-1, 1, 0, 0], [0, -1, 0, 0]],
    "vminus": [[0, 1, 0, 1], [-1, 0, 0, 0], [-1, 1, 0, 1], [-1, -1, -1, 0]],
}
PAIR_687548 = {
    "vplus": [[-1, 0, 0, 0], [-1, 1, 1, 0], [0, -1, 0, 1], [0, 0, 0, 1]],
    "vminus": [[-1, -1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 1, 1]],
}

# --- reference face/arc incidence (rows = faces d_1.., cols = arcs c_1..) --
# The d_1 row of the 5.2025 table is used in corrected form: its printed
# tail repeats -1 at arcs 5 and 6, which no face of a complex with the
# printed d_2/d_3 rows can do (every arc must appear once with each
# sign); strict alternation is forced.

B2T_499 = [
    [1, -1, 1, -1, 1, -1, 1, -1],
    [-1, 0, 0, 0, -1, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, -1, 0, 0, 0, -1, 0],
]
B2T_52025 = [
    [-1, 1, -1, 1, -1, 1, -1, 1, -1, 1],
    [0, -1, 0, -1, 0, -1, 0, -1, 0, -1],
    [1, 0, 1, 0, 1, 0, 1, 0, 1, 0],
]
B2T_687548 = [
    [-1, 1, 0, 1, 0, 1, 0, 1, -1, 1, 0, 1],
    [0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0],
    [0, -1, 1, -1, 0, -1, 1, -1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, -1],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
]

# --- Seifert-cycle supports (arc label sets) ------------------------------

CYCLES_499 = [{1, 5}, {2, 4, 6, 8}, {3, 7}]
CYCLES_52025 = [{1, 3, 5, 7, 9}, {2, 4, 6, 8, 10}]
CYCLES_687548 = [{1, 9}, {2, 8}, {3, 7}, {4, 6, 10, 12}, {5, 11}]

# --- spanning solutions, keyed by cycle support, in the reference face
# frame (index 0 = the largest face d_1, which is also the default
# missing face in all three examples) ------------------------------------

SPAN_499 = {
    frozenset({1, 5}): [0, -1, 0, 0],
    frozenset({2, 4, 6, 8}): [0, 0, 1, 0],
    frozenset({3, 7}): [0, 0, 0, -1],
}
SPAN_52025 = {
    frozenset({2, 4, 6, 8, 10}): [0, -1, 0],
    frozenset({1, 3, 5, 7, 9}): [0, 0, 1],
}
SPAN_687548 = {
    frozenset({1, 9}): [0, 0, 0, 0, 0, 1],
    frozenset({3, 7}): [0, -1, 0, 0, 0, 0],
    frozenset({5, 11}): [0, 0, -1, 0, 0, 0],
    frozenset({2, 8}) | frozenset({4, 6, 10, 12}): [0, -1, -1, -1, -1, 0],
}

# Grouping: which cycle supports travel together (the composite group of
# 6.87548 spans the union of two cycles on four faces).

PARTITION_499 = {
    frozenset([frozenset({1, 5})]),
    frozenset([frozenset({2, 4, 6, 8})]),
    frozenset([frozenset({3, 7})]),
}
PARTITION_52025 = {
    frozenset([frozenset({1, 3, 5, 7, 9})]),
    frozenset([frozenset({2, 4, 6, 8, 10})]),
}
PARTITION_687548 = {
    frozenset([frozenset({1, 9})]),
    frozenset([frozenset({3, 7})]),
    frozenset([frozenset({5, 11})]),
    frozenset([frozenset({2, 8}), frozenset({4, 6, 10, 12})]),
}

# In the reference face frame the composite subsurface of 6.87548 uses
# faces d_2, d_3, d_4, d_5 (0-based indices 1..4).
COMPOSITE_FACES_687548 = {1, 2, 3, 4}

# --- polynomial targets (exponent -> coefficient) ------------------------

ALEX_499 = {0: 2, -1: -1}                     # 2 - 1/t
ALEX_52025 = {1: 1}                           # t
ALEX_687548 = {1: -1, 0: 2, -1: 1, -2: -1}    # 2 - t + 1/t - 1/t^2
ALEX_TREFOIL = {1: 1, 0: -1, -1: 1}           # t - 1 + 1/t
ALEX_FIGURE8 = {1: -1, 0: 3, -1: -1}          # -t + 3 - 1/t

NABLA_PLUS_499 = {1: -1, 0: 2, -1: -1}        # 2 - t - 1/t
NABLA_MINUS_499 = {0: 4}                      # 4
NABLA_PLUS_52025 = {0: 1}
NABLA_MINUS_52025 = {0: 1}
NABLA_PLUS_687548 = {2: -1, 1: -1, 0: 5, -1: -1, -2: -1}
NABLA_MINUS_687548 = {1: -1, 0: 3, -1: -1}    # 3 - t - 1/t

FOX_MILNOR_FACTOR_499 = {0: 1, 1: -1}         # 1 - t, for the + side

# --- structural counts ----------------------------------------------------

CARTER_499 = {"n": 4, "m": 4, "genus": 1}
CARTER_52025 = {"n": 5, "m": 3, "genus": 2}
CARTER_687548 = {"n": 6, "m": 6, "genus": 1}

SURFACE_499 = {"genus": 1, "euler": -1, "subsurfaces": 3}
SURFACE_52025 = {"genus": 2, "euler": -3, "subsurfaces": 2}
SURFACE_687548 = {"genus": 2, "euler": -3, "subsurfaces": 4}

GENUS_REPORT_687548 = {
    "widthLowerBound": "3/2",
    "surfaceGenus": 2,
    "canonicalSliceGenus": "1",
}
GENUS_REPORT_499 = {
    "widthLowerBound": "1/2",
    "surfaceGenus": 1,
    "canonicalSliceGenus": "1",
}

# Record: signature of the positive-trefoil pipeline pair at the half
# turn omega = -1 comes out -2 under this build's frozen conventions.
TREFOIL_SIGNATURE_AT_MINUS_ONE = -2

# --- this build's own pipeline matrices (regression pins) -----------------

ENGINE_PAIRS = {
    "4.99": {
        "vplus": [[1, 0], [0, -1]],
        "vminus": [[1, 1], [-1, -1]],
    },
    "5.2025": {
        "vplus": [[1, -1, 0, 0], [0, 0, 0, 1], [0, -1, -1, 1], [0, 0, 0, 0]],
        "vminus": [[1, -1, -1, 1], [0, 0, 0, 0], [1, -1, -1, 0],
                   [-1, 1, 1, 0]],
    },
    "6.87548": {
        "vplus": [[-3, -1, 1, -1], [-2, -1, 1, -1], [0, -1, 0, 0],
                  [0, 0, 0, 1]],
        "vminus": [[-3, -2, 1, 0], [-1, -1, 0, 0], [0, 0, 0, 0],
                   [-1, -1, 0, 1]],
    },
    "trefoil": {
        "vplus": [[-1, 0], [1, -1]],
        "vminus": [[-1, 1], [0, -1]],
    },
    "figure8": {
        "vplus": [[-1, 0], [1, 1]],
        "vminus": [[-1, 1], [0, 1]],
    },
}

# --- a small valid band presentation (the classical (2,-3)ish trefoil
# annulus: two interleaved bands, one negative twist each, one negative
# classical crossing between the cores) ------------------------------------

BAND_TREFOIL = {
    "bands": [
        {"start": 0, "end": 2, "twists": -1},
        {"start": 1, "end": 3, "twists": -1},
    ],
    "slots": [
        {"band": 0, "end": "start"},
        {"band": 1, "end": "start"},
        {"band": 0, "end": "end"},
        {"band": 1, "end": "end"},
    ],
    "events": [
        {"core_a": 0, "core_b": 1, "kind": "classical", "over": "a",
         "sign": -1, "pos_a": 0, "pos_b": 0},
    ],
}


# --- helpers ---------------------------------------------------------------


def chain_of(cx, cycles, group) -> list:
    """The arc chain (as a length-2n vector) bounded by a cycle group."""
    v = [0] * (2 * cx.n)
    for idx in group:
        for a in cycles[idx]:
            v[a - 1] += 1
    return v


def assert_solution_valid(sol) -> None:
    """Every group's 2-chain really bounds its cycles, omits the missing
    face, and is one-sided."""
    cx = sol.complex
    for g, group in enumerate(sol.partition):
        x = sol.vectors[g]
        # undo the flip framing before hitting boundary2, which is
        # expressed in the unflipped orientation
        raw = [-v if k in sol.flips else v for k, v in enumerate(x)]
        hit = [
            sum(cx.boundary2[a][k] * raw[k] for k in range(cx.m))
            for a in range(2 * cx.n)
        ]
        assert hit == chain_of(cx, sol.cycles, group)
        assert raw[sol.missing] == 0
        eps = sol.epsilons[g]
        assert set(raw) <= {0, eps}


def random_gauss_code(rng, n: int) -> str:
    """A random signed code on n crossings: random chord pairing, random
    over/under split, random signs.  Usually virtual, rarely nice."""
    order = list(range(2 * n))
    rng.shuffle(order)
    tokens = [""] * (2 * n)
    for lab in range(1, n + 1):
        a, b = order[2 * lab - 2], order[2 * lab - 1]
        sign = rng.choice("+-")
        first, second = ("O", "U") if rng.random() < 0.5 else ("U", "O")
        tokens[a] = f"{first}{lab}{sign}"
        tokens[b] = f"{second}{lab}{sign}"
    return " ".join(tokens)


def random_ac_code(rng, n: int) -> str:
    """Rejection-sample random codes until one is almost classical."""
    from acforge.gauss import is_almost_classical, parse_gauss_code

    while True:
        code = random_gauss_code(rng, n)
        if is_almost_classical(parse_gauss_code(code)):
            return code


def face_rows(cx) -> list:
    """Boundary-2 transposed to one row per face (len 2n each)."""
    return [
        [cx.boundary2[a][k] for a in range(2 * cx.n)] for k in range(cx.m)
    ]


def match_faces(mine: list, ref: list):
    """Correspondence my-face -> (ref-face, sign) with rows equal up to
    sign, or None when no bijection exists."""
    m = len(mine)
    if len(ref) != m:
        return None
    out = [None] * m
    used = [False] * m

    def go(i: int) -> bool:
        if i == m:
            return True
        for j in range(m):
            if used[j]:
                continue
            for s in (1, -1):
                if mine[i] == [s * x for x in ref[j]]:
                    used[j] = True
                    out[i] = (j, s)
                    if go(i + 1):
                        return True
                    used[j] = False
                    out[i] = None
        return False

    return out if go(0) else None
