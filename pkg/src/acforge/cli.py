"""Command-line front end.

Each subcommand prints one JSON report on stdout (``batch`` prints one
report per line plus a trailing summary line).  Reports carry a
``schemaVersion`` field and validate against ``report_schema.json``
shipped next to this module.

Exit codes:
  0  success
  2  input could not be read or parsed (bad code, bad file, bad option)
  3  a computation failed one of its own consistency checks
  4  the command needs an almost classical diagram and did not get one

The environment variable ACFORGE_SEED is reserved for future use;
nothing in the current pipeline is randomized, so output is
deterministic for a given input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from .carter import build_complex
from .errors import (
    AcforgeError,
    DuplicateSign,
    MalformedToken,
    UnbalancedLabel,
)
from .gauss import (
    crossing_indices,
    is_almost_classical,
    is_checkerboard,
    parse_gauss_code,
    read_tabulation,
    seifert_cycles,
)
from .invariants import (
    DEFAULT_SIGNATURE_SAMPLES,
    alexander,
    directed_alexander,
    fox_milnor,
    genus_report,
    omega_of,
    signature_profile,
)
from .linking import (
    SeifertPair,
    band_presentation_from_json,
    band_seifert_pair,
    surface_seifert_pair,
)
from .spanning import spanning_solution
from .surface import build_surface, surface_genus

SCHEMA_VERSION = 1

_SIDE_NAME = {1: "plus", -1: "minus"}

# How far down the pipeline each subcommand goes.
_LEVEL = {"check": 0, "carter-info": 1, "spanning": 2, "surface": 3,
          "invariants": 4}


class _BadInput(Exception):
    """Input that cannot be interpreted at all (exit 2)."""


class _NotAlmostClassical(Exception):
    """The command needs an almost classical diagram (exit 4)."""


# ---------------------------------------------------------------------------
# JSON bits
# ---------------------------------------------------------------------------


def _laurent_json(p) -> dict:
    return {"terms": [[e, c] for e, c in p.terms], "display": p.display()}


def _matrix_json(rows) -> list:
    return [list(r) for r in rows]


def _rat(x) -> str:
    return str(Fraction(x))


def _profile_json(profile) -> list:
    return [
        {
            "u": str(s.u),
            "signature": s.signature,
            "nondegenerate": s.nondegenerate,
        }
        for s in profile.samples
    ]


# ---------------------------------------------------------------------------
# Report assembly
# ---------------------------------------------------------------------------


def _append_invariants(rep: dict, pair: SeifertPair, samples: int,
                       diagram=None, surface=None,
                       csv_rows: Optional[list] = None) -> None:
    """Fill in everything downstream of the Seifert pair.

    With a diagram and surface at hand the genus report uses them;
    for bare matrix or band input the surface-genus slot falls back to
    half the pair's rank and the diagram-only bound is omitted.
    """
    rep["seifertPair"] = {
        "vplus": _matrix_json(pair.vplus),
        "vminus": _matrix_json(pair.vminus),
    }
    alex = alexander(pair)
    nabla = {side: directed_alexander(pair, side) for side in (1, -1)}
    rep["alexander"] = _laurent_json(alex)
    rep["nablaPlus"] = _laurent_json(nabla[1])
    rep["nablaMinus"] = _laurent_json(nabla[-1])

    profiles = {side: signature_profile(pair, side, samples)
                for side in (1, -1)}
    rep["signatureProfiles"] = {
        _SIDE_NAME[side]: _profile_json(profiles[side]) for side in (1, -1)
    }
    if csv_rows is not None:
        for side in (1, -1):
            for s in profiles[side].samples:
                w = omega_of(s.u)
                csv_rows.append([
                    _SIDE_NAME[side], str(s.u), str(w.re), str(w.im),
                    "" if s.signature is None else s.signature,
                    str(s.nondegenerate).lower(),
                ])

    factors = {side: fox_milnor(nabla[side]) for side in (1, -1)}
    if diagram is not None:
        rg = genus_report(diagram, surface, pair, profiles)
        width_bound = rg.width_lower_bound
        genus_f: Optional[int] = rg.surface_genus
        canonical: Optional[Fraction] = rg.canonical_slice_genus
        sig_bound = rg.slice_signature_bound
    else:
        width_bound = Fraction(alex.width(), 2)
        genus_f = pair.rank // 2
        canonical = None
        sig_bound = Fraction(
            max(profiles[side].max_abs() for side in (1, -1)), 2)
    rep["genusReport"] = {
        "widthLowerBound": _rat(width_bound),
        "surfaceGenus": genus_f,
        "canonicalSliceGenus": None if canonical is None else _rat(canonical),
        "sliceSignatureBound": _rat(sig_bound),
        "foxMilnorObstructed": {
            _SIDE_NAME[side]: factors[side] is None for side in (1, -1)
        },
        "foxMilnorFactors": {
            _SIDE_NAME[side]: (None if factors[side] is None
                               else _laurent_json(factors[side]))
            for side in (1, -1)
        },
    }

    reasons = []
    for side in (1, -1):
        if factors[side] is None:
            reasons.append(f"fox-milnor:{_SIDE_NAME[side]}")
    for side in (1, -1):
        if profiles[side].max_abs() > 0:
            reasons.append(f"signature:{_SIDE_NAME[side]}")
    rep["sliceVerdict"] = {"obstructed": bool(reasons), "reasons": reasons}


def _gauss_report(code: str, *, name: Optional[str] = None,
                  missing: Optional[int] = None, level: int = 4,
                  samples: int = DEFAULT_SIGNATURE_SAMPLES,
                  csv_rows: Optional[list] = None) -> dict:
    d = parse_gauss_code(code)
    echo: Dict[str, str] = {"kind": "gauss", "gauss": code}
    if name is not None:
        echo["name"] = name
    rep: dict = {"schemaVersion": SCHEMA_VERSION, "input": echo}
    rep["ac"] = is_almost_classical(d)
    rep["checkerboard"] = is_checkerboard(d)
    rep["crossingIndices"] = {
        str(lab): idx for lab, idx in sorted(crossing_indices(d).items())
    }
    if level < 1:
        return rep
    if level >= 2 and not rep["ac"]:
        raise _NotAlmostClassical(code)

    cx = build_complex(d)
    rep["carter"] = {
        "n": cx.n,
        "m": cx.m,
        "genus": cx.genus,
        "boundary2": _matrix_json(cx.boundary2),
        "faceSizes": [cx.face_size(k) for k in range(cx.m)],
        "defaultMissing": cx.default_missing_face(),
    }
    rep["seifertCycles"] = [list(c) for c in seifert_cycles(d)]
    if level < 2:
        return rep

    if missing is not None and not 0 <= missing < cx.m:
        raise _BadInput(
            f"--missing {missing} out of range (diagram has {cx.m} faces)")
    sol = spanning_solution(cx, missing=missing)
    rep["spanning"] = {
        "missing": sol.missing,
        "groups": [
            {
                "cycles": [i + 1 for i in grp],
                "vector": list(sol.vectors[g]),
                "faces": list(sol.faces_of_group(g)),
                "epsilon": sol.epsilons[g],
            }
            for g, grp in enumerate(sol.partition)
        ],
    }
    if level < 3:
        return rep

    F = build_surface(sol)
    rep["surface"] = {
        "genus": surface_genus(F),
        "euler": F.euler,
        "bands": len(F.bands),
        "subsurfaces": [
            {"index": s.index, "faces": list(s.faces),
             "epsilon": s.epsilon, "height": s.height}
            for s in F.subsurfaces
        ],
    }
    if level < 4:
        return rep

    pair, _basis = surface_seifert_pair(F)
    _append_invariants(rep, pair, samples, diagram=d, surface=F,
                       csv_rows=csv_rows)
    return rep


# ---------------------------------------------------------------------------
# File inputs
# ---------------------------------------------------------------------------


def _load_json_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _BadInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _BadInput(f"{path} is not valid JSON: {exc}") from exc


def _pair_from_matrices(obj) -> SeifertPair:
    if not isinstance(obj, dict):
        raise _BadInput("matrices input must be a JSON object")
    rows = {}
    for key in ("vplus", "vminus"):
        val = obj.get(key)
        ok = isinstance(val, list) and all(
            isinstance(r, list) and all(isinstance(x, int) for x in r)
            for r in val
        )
        if not ok:
            raise _BadInput(f"matrices input needs integer rows under {key!r}")
        rows[key] = tuple(tuple(r) for r in val)
    return SeifertPair(rows["vplus"], rows["vminus"])


def _pair_from_band_file(obj) -> SeifertPair:
    try:
        bp = band_presentation_from_json(obj)
    except (AcforgeError, KeyError, TypeError, ValueError,
            AttributeError) as exc:
        # shape trouble; violations raised later by the pair itself stay 3
        raise _BadInput(f"band presentation malformed: {exc}") from exc
    return band_seifert_pair(bp)


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def _emit(rep: dict) -> None:
    print(json.dumps(rep, indent=2, ensure_ascii=False))


def _emit_line(rep: dict) -> None:
    print(json.dumps(rep, sort_keys=True, separators=(",", ":"),
                     ensure_ascii=False))


def _write_csv(path: str, rows: list) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["side", "u", "omega_re", "omega_im", "signature",
             "nondegenerate"])
        writer.writerows(rows)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _run_pipeline_command(args) -> None:
    rep = _gauss_report(args.gauss, missing=getattr(args, "missing", None),
                        level=_LEVEL[args.command])
    _emit(rep)


def _run_invariants(args) -> None:
    if args.signature_samples < 1:
        raise _BadInput("--signature-samples must be at least 1")
    if args.missing is not None and args.gauss is None:
        raise _BadInput("--missing only applies to --gauss input")
    csv_rows: Optional[list] = [] if args.csv else None

    if args.gauss is not None:
        rep = _gauss_report(args.gauss, missing=args.missing, level=4,
                            samples=args.signature_samples,
                            csv_rows=csv_rows)
    else:
        if args.matrices is not None:
            kind, path = "matrices", args.matrices
            pair = _pair_from_matrices(_load_json_file(path))
        else:
            kind, path = "band", args.band
            pair = _pair_from_band_file(_load_json_file(path))
        rep = {
            "schemaVersion": SCHEMA_VERSION,
            "input": {"kind": kind, "path": path},
            "ac": None,
            "checkerboard": None,
        }
        _append_invariants(rep, pair, args.signature_samples,
                           csv_rows=csv_rows)

    if args.csv:
        _write_csv(args.csv, csv_rows or [])
    _emit(rep)


def _run_batch(args) -> None:
    if args.signature_samples < 1:
        raise _BadInput("--signature-samples must be at least 1")
    try:
        with open(args.tabulation, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _BadInput(f"cannot read {args.tabulation}: {exc}") from exc
    try:
        entries = read_tabulation(text)
    except AcforgeError as exc:
        raise _BadInput(f"{args.tabulation}: {exc}") from exc

    reports = skipped = errors = 0
    for name, code in entries:
        base = {
            "schemaVersion": SCHEMA_VERSION,
            "input": {"kind": "gauss", "gauss": code, "name": name},
        }
        try:
            d = parse_gauss_code(code)
            if not is_almost_classical(d):
                line = dict(base)
                line["ac"] = False
                line["checkerboard"] = is_checkerboard(d)
                line["skipped"] = True
                skipped += 1
            else:
                line = _gauss_report(code, name=name, level=4,
                                     samples=args.signature_samples)
                reports += 1
        except AcforgeError as exc:
            line = dict(base)
            line["error"] = {"type": type(exc).__name__,
                             "message": str(exc)}
            errors += 1
        _emit_line(line)
    _emit_line({
        "schemaVersion": SCHEMA_VERSION,
        "summary": {
            "entries": len(entries),
            "reports": reports,
            "skipped": skipped,
            "errors": errors,
        },
    })


# ---------------------------------------------------------------------------
# Argument parsing / entry point
# ---------------------------------------------------------------------------


def _add_gauss(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gauss", required=True, metavar="CODE",
                   help="signed Gauss code, e.g. 'O1+U2+O3+U1+O2+U3+'")


def _add_missing(p: argparse.ArgumentParser) -> None:
    p.add_argument("--missing", type=int, metavar="FACE",
                   help="0-based index of the face left out of the 2-chain")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="acforge",
        description="Layered Seifert surfaces and directed Alexander "
                    "invariants for almost classical knot diagrams.",
        epilog="ACFORGE_SEED is reserved for future use; all current "
               "subcommands are deterministic.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check",
                       help="parse a code, report basic properties")
    _add_gauss(p)

    p = sub.add_parser("carter-info",
                       help="faces and genus of the induced surface complex")
    _add_gauss(p)

    p = sub.add_parser("spanning",
                       help="2-chains bounding the Seifert cycles")
    _add_gauss(p)
    _add_missing(p)

    p = sub.add_parser("surface",
                       help="layered Seifert surface summary")
    _add_gauss(p)
    _add_missing(p)

    p = sub.add_parser("invariants",
                       help="Seifert pair and everything derived from it")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gauss", metavar="CODE",
                   help="signed Gauss code of an almost classical diagram")
    g.add_argument("--band", metavar="FILE",
                   help="JSON band presentation of a spanning surface")
    g.add_argument("--matrices", metavar="FILE",
                   help="JSON object with 'vplus' and 'vminus' matrices")
    _add_missing(p)
    p.add_argument("--signature-samples", type=int,
                   default=DEFAULT_SIGNATURE_SAMPLES, metavar="N",
                   help="number of unit-circle sample points per side "
                        f"(default {DEFAULT_SIGNATURE_SAMPLES})")
    p.add_argument("--csv", metavar="FILE",
                   help="also dump the signature profiles as CSV")

    p = sub.add_parser("batch",
                       help="run the full pipeline over a tabulation file")
    p.add_argument("--tabulation", required=True, metavar="FILE",
                   help="lines of '<name><TAB><gauss code>'; '#' comments")
    p.add_argument("--signature-samples", type=int,
                   default=DEFAULT_SIGNATURE_SAMPLES, metavar="N")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    try:
        sys.stdout.reconfigure(encoding="utf-8")
    except AttributeError:  # stdout replaced by something simpler
        pass
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("check", "carter-info", "spanning", "surface"):
            _run_pipeline_command(args)
        elif args.command == "invariants":
            _run_invariants(args)
        else:
            _run_batch(args)
    except _BadInput as exc:
        print(f"acforge: {exc}", file=sys.stderr)
        return 2
    except (MalformedToken, UnbalancedLabel, DuplicateSign) as exc:
        print(f"acforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except _NotAlmostClassical as exc:
        print(f"acforge: diagram is not almost classical: {exc}",
              file=sys.stderr)
        return 4
    except AcforgeError as exc:
        print(f"acforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
