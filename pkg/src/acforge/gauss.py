"""Signed Gauss codes and their chord-diagram combinatorics.

A diagram is given by a whitespace-separated word of tokens
``(O|U)<label><+|->`` read counterclockwise around the knot circle.
Position k (0-based) is the k-th token.  Arc c_j (1-based, j = 1..2n)
is the circle interval from position j-1 to position j, with c_{2n}
closing up back to position 0.  The empty word is the unknot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Sequence, Tuple

from .errors import (
    DuplicateSign,
    MalformedToken,
    NotAlternating,
    NotCheckerboard,
    UnbalancedLabel,
    UnknownArrow,
)

_TOKEN_RE = re.compile(r"([OU])(\d+)([+-])|\s+")


@dataclass(frozen=True)
class Arrow:
    """One crossing: where its over/under endpoints sit and its sign."""

    label: int
    over_pos: int
    under_pos: int
    sign: int


class GaussDiagram:
    """Immutable parsed form of a signed Gauss code."""

    def __init__(self, arrows: Sequence[Arrow]):
        self.arrows: Dict[int, Arrow] = {a.label: a for a in arrows}
        self.n = len(self.arrows)
        self.size = 2 * self.n  # number of positions == number of arcs
        kind_at: Dict[int, Tuple[str, int]] = {}
        for a in self.arrows.values():
            kind_at[a.over_pos] = ("O", a.label)
            kind_at[a.under_pos] = ("U", a.label)
        if len(kind_at) != self.size or (
            self.size and sorted(kind_at) != list(range(self.size))
        ):
            raise ValueError("arrow endpoints must fill positions 0..2n-1")
        self._kind_at = kind_at

    # -- structure queries -------------------------------------------------

    def labels(self) -> List[int]:
        return sorted(self.arrows)

    def kind_at(self, pos: int) -> str:
        """'O' or 'U' at a circle position."""
        return self._kind_at[pos][0]

    def label_at(self, pos: int) -> int:
        return self._kind_at[pos][1]

    def partner(self, pos: int) -> int:
        """The other endpoint of the chord through this position."""
        kind, lab = self._kind_at[pos]
        a = self.arrows[lab]
        return a.under_pos if kind == "O" else a.over_pos

    def sign_at(self, pos: int) -> int:
        return self.arrows[self._kind_at[pos][1]].sign

    def is_alternating(self) -> bool:
        return all(
            self.kind_at(p) != self.kind_at((p + 1) % self.size)
            for p in range(self.size)
        )

    # -- arcs ---------------------------------------------------------------

    def arc_head(self, j: int) -> int:
        """Position the (1-based) arc c_j ends at."""
        return j % self.size

    def arc_tail(self, j: int) -> int:
        return j - 1

    def arc_into(self, pos: int) -> int:
        """Arc arriving at a position: c_pos, with c_{2n} arriving at 0."""
        return pos if pos else self.size

    def arc_outof(self, pos: int) -> int:
        return pos + 1

    # -- round trip ----------------------------------------------------------

    def code(self) -> str:
        toks = []
        for p in range(self.size):
            kind, lab = self._kind_at[p]
            sgn = "+" if self.arrows[lab].sign > 0 else "-"
            toks.append(f"{kind}{lab}{sgn}")
        return " ".join(toks)

    def __eq__(self, other):
        return isinstance(other, GaussDiagram) and self.code() == other.code()

    def __hash__(self):
        return hash(self.code())

    def __repr__(self):
        return f"GaussDiagram({self.code()!r})"


def _tokenize(text: str) -> List[Tuple[str, int, int]]:
    """Split into (kind, label, sign) triples; tokens may abut or be
    separated by whitespace."""
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if not m:
            raise MalformedToken(
                f"bad token at offset {i}: {text[i:i + 8]!r}"
            )
        if m.group(1):
            out.append((m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1))
        i = m.end()
    return out


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a signed Gauss code; whitespace-only input is the unknot."""
    seen: Dict[int, Dict[str, int]] = {}
    signs: Dict[int, int] = {}
    for pos, (kind, lab, sgn) in enumerate(_tokenize(text)):
        ends = seen.setdefault(lab, {})
        if kind in ends:
            raise UnbalancedLabel(f"label {lab} occurs twice as {kind}")
        ends[kind] = pos
        if lab in signs and signs[lab] != sgn:
            raise DuplicateSign(f"label {lab} carries both signs")
        signs[lab] = sgn
    arrows = []
    for lab, ends in seen.items():
        if "O" not in ends or "U" not in ends:
            raise UnbalancedLabel(f"label {lab} is missing an O or U endpoint")
        arrows.append(Arrow(lab, ends["O"], ends["U"], signs[lab]))
    return GaussDiagram(arrows)


def from_arrow_data(data: Sequence[Tuple[int, int, int]]) -> GaussDiagram:
    """Build a diagram from (over_pos, under_pos, sign) triples, labels 1..n."""
    return GaussDiagram(
        [Arrow(i + 1, o, u, s) for i, (o, u, s) in enumerate(data)]
    )


# ---------------------------------------------------------------------------
# crossing indices
# ---------------------------------------------------------------------------

def crossing_index(d: GaussDiagram, label: int) -> int:
    """Signed count of arrows with exactly one endpoint strictly inside
    the forward interval from this arrow's over endpoint to its under
    endpoint.  An arrow whose over endpoint is the one inside counts
    +sign, otherwise -sign."""
    if label not in d.arrows:
        raise UnknownArrow(f"no crossing labelled {label}")
    a = d.arrows[label]
    span = (a.under_pos - a.over_pos) % d.size

    def inside(p: int) -> bool:
        return 0 < (p - a.over_pos) % d.size < span

    total = 0
    for b in d.arrows.values():
        if b.label == label:
            continue
        o_in, u_in = inside(b.over_pos), inside(b.under_pos)
        if o_in != u_in:
            total += b.sign if o_in else -b.sign
    return total


def crossing_indices(d: GaussDiagram) -> Dict[int, int]:
    return {lab: crossing_index(d, lab) for lab in d.labels()}


def is_almost_classical(d: GaussDiagram) -> bool:
    return all(v == 0 for v in crossing_indices(d).values())


def is_checkerboard(d: GaussDiagram) -> bool:
    return all(v % 2 == 0 for v in crossing_indices(d).values())


# ---------------------------------------------------------------------------
# alternating normal form
# ---------------------------------------------------------------------------

class AlternatingResult(NamedTuple):
    diagram: GaussDiagram
    flipped: FrozenSet[int]


def make_alternating(d: GaussDiagram) -> AlternatingResult:
    """Crossing-change normal form with strictly alternating O/U kinds.

    Positions are 2-colored by parity; an arrow is flipped (over and
    under swapped, sign negated) exactly when its over endpoint sits at
    an odd position.  Only defined for checkerboard diagrams; on them
    the parity coloring is consistent, so the result alternates.
    """
    if not is_checkerboard(d):
        raise NotCheckerboard("diagram has an odd crossing index")
    flipped = []
    arrows = []
    for a in d.arrows.values():
        if a.over_pos % 2 == 1:
            arrows.append(Arrow(a.label, a.under_pos, a.over_pos, -a.sign))
            flipped.append(a.label)
        else:
            arrows.append(a)
    alt = GaussDiagram(arrows)
    if alt.size and not alt.is_alternating():
        # Cannot happen for checkerboard inputs; guard the contract anyway.
        raise NotCheckerboard("parity recoloring failed to alternate")
    return AlternatingResult(alt, frozenset(flipped))


# ---------------------------------------------------------------------------
# Seifert cycles and state components
# ---------------------------------------------------------------------------

def seifert_cycles(d: GaussDiagram) -> List[Tuple[int, ...]]:
    """Orbits of arcs under the oriented smoothing of every crossing.

    Each cycle is the tuple of arc labels in traversal order, rotated to
    start at its smallest arc; cycles are sorted by that smallest arc.
    The empty diagram yields one empty cycle (the unknot circle).
    """
    if d.n == 0:
        return [()]
    nxt = {}
    for j in range(1, d.size + 1):
        q = d.partner(d.arc_head(j))
        nxt[j] = d.arc_outof(q)
    cycles = []
    seen = set()
    for start in range(1, d.size + 1):
        if start in seen:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = nxt[j]
        cycles.append(tuple(cyc))
    return sorted(cycles, key=lambda c: c[0])


class StateComponent(NamedTuple):
    """A closed curve of one smoothing state: arcs with traversal signs."""

    steps: Tuple[Tuple[int, int], ...]  # (arc, +-1) in traversal order

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(a for a, _ in self.steps))

    def sign_of(self, arc: int) -> int:
        for a, s in self.steps:
            if a == arc:
                return s
        raise KeyError(arc)


def state_components(d: GaussDiagram, kind: str) -> List[StateComponent]:
    """Components of the all-A or all-B state of an alternating diagram.

    At a crossing of sign s the smoothing is orientation-respecting when
    (kind == 'A') == (s > 0); otherwise the two incoming arc ends are
    joined to each other (and likewise the outgoing ends), reversing the
    traversal direction.
    """
    if kind not in ("A", "B"):
        raise ValueError("kind must be 'A' or 'B'")
    if not d.is_alternating():
        raise NotAlternating("state resolution needs an alternating diagram")
    if d.n == 0:
        return [StateComponent(())]

    # Arc ends: (arc, 'head') sits at position arc % 2n, (arc, 'tail') at
    # arc-1.  Each smoothing pairs up the four ends at its two positions.
    join: Dict[Tuple[int, str], Tuple[int, str]] = {}

    def pair(e1, e2):
        join[e1] = e2
        join[e2] = e1

    done = set()
    for p in range(d.size):
        q = d.partner(p)
        if frozenset((p, q)) in done:
            continue
        done.add(frozenset((p, q)))
        oriented = (kind == "A") == (d.sign_at(p) > 0)
        in_p, out_p = (d.arc_into(p), "head"), (d.arc_outof(p), "tail")
        in_q, out_q = (d.arc_into(q), "head"), (d.arc_outof(q), "tail")
        if oriented:
            pair(in_p, out_q)
            pair(in_q, out_p)
        else:
            pair(in_p, in_q)
            pair(out_p, out_q)

    comps = []
    visited = set()
    for start_arc in range(1, d.size + 1):
        if start_arc in visited:
            continue
        steps = []
        arc, direction = start_arc, 1
        while arc not in visited:
            visited.add(arc)
            steps.append((arc, direction))
            exit_end = (arc, "head" if direction > 0 else "tail")
            nxt_arc, nxt_end = join[exit_end]
            # Entering at a tail means we traverse the next arc forward.
            direction = 1 if nxt_end == "tail" else -1
            arc = nxt_arc
        comps.append(StateComponent(tuple(steps)))
    return sorted(comps, key=lambda c: c.steps[0][0])


# ---------------------------------------------------------------------------
# tabulation files
# ---------------------------------------------------------------------------

def read_tabulation(text: str) -> List[Tuple[str, str]]:
    """Parse a name<TAB>code tabulation; '#' starts a comment line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise MalformedToken(
                f"line {lineno}: expected name<TAB>gauss_code"
            )
        name, code = line.split("\t", 1)
        out.append((name.strip(), code.strip()))
    return out
