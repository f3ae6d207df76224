"""Polynomial and signature invariants of a Seifert pair, plus genus reports.

Everything is exact.  The half-integer powers of the usual determinant
formulas are removed analytically: with a pair of 2g x 2g matrices the
determinant det(t^{1/2}A - t^{-1/2}B) equals t^{-g} det(tA - B), so all
arithmetic stays in Z[t, 1/t].  Signatures are computed over Gaussian
rationals by pivoted elimination -- no floating point anywhere.

The unit circle is parametrized rationally: u ranges over nonzero
rationals and omega(u) = ((1 - u^2) + 2u*i) / (1 + u^2), which walks the
whole circle minus the point 1 (u = 0 would give omega = 1, where the
signature form degenerates to zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import DegreeTooLarge, InvariantViolation, OmegaEqualsOne
from .intmat import bareiss_det
from .laurent import LaurentPoly
from .linking import SeifertPair


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class GaussianRational(NamedTuple):
    """An element a + b*i of Q(i), held as two exact fractions."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re=0, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other):
        other = _coerce(other)
        n2 = other.re * other.re + other.im * other.im
        if not n2:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conj()
        return GaussianRational(num.re / n2, num.im / n2)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, e: int) -> "GaussianRational":
        if e < 0:
            return (GaussianRational.of(1) / self) ** (-e)
        out = GaussianRational.of(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    raise TypeError(f"cannot coerce {type(x).__name__} to Q(i)")


def omega_of(u) -> GaussianRational:
    """The circle point ((1 - u^2) + 2u*i) / (1 + u^2).

    u is a nonzero rational; u = 0 is refused because it lands on
    omega = 1, where the signature form vanishes identically.  u = None
    is accepted as the projective point at infinity and gives omega = -1
    (the half turn, unreachable by finite u).
    """
    if u is None:
        return GaussianRational.of(-1)
    u = Fraction(u)
    if not u:
        raise OmegaEqualsOne("u = 0 lands on omega = 1")
    den = 1 + u * u
    return GaussianRational((1 - u * u) / den, 2 * u / den)


# ---------------------------------------------------------------------------
# Determinant polynomials
# ---------------------------------------------------------------------------


def _det_poly(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]):
    """det(t*a - b) as a LaurentPoly (the 0x0 case gives 1)."""
    t = LaurentPoly.t_power(1)
    m = [
        [t * aij - LaurentPoly.const(bij) for aij, bij in zip(ra, rb)]
        for ra, rb in zip(a, b)
    ]
    det = bareiss_det(m) if m else LaurentPoly.const(1)
    if isinstance(det, int):
        det = LaurentPoly.const(det)
    return det


def alexander(pair: SeifertPair) -> LaurentPoly:
    """The normalized determinant t^{-g} det(t*Vminus - Vplus).

    Its value at t = 1 is det(Vminus - Vplus) = 1, which is asserted;
    the empty pair gives the constant 1.
    """
    g = pair.rank // 2
    poly = _det_poly(pair.vminus, pair.vplus).shift(-g)
    at1 = poly(Fraction(1))
    if at1 != 1:
        raise InvariantViolation(
            f"normalized Alexander polynomial has value {at1} at t = 1"
        )
    return poly


def directed_alexander(pair: SeifertPair, side: int) -> LaurentPoly:
    """t^{-g} det(t*V - V^T) for V the chosen side's matrix.

    At t = 1 this is the determinant of a skew-symmetric integer matrix,
    hence a perfect square >= 0 (the Pfaffian squared); the polynomial is
    also symmetric under t -> 1/t up to an overall sign.  Both facts are
    asserted on the way out.
    """
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    v = pair.vplus if side > 0 else pair.vminus
    g = pair.rank // 2
    vt = [[v[j][i] for j in range(pair.rank)] for i in range(pair.rank)]
    poly = _det_poly(v, vt).shift(-g)
    at1 = int(poly(Fraction(1)))
    if at1 < 0 or math.isqrt(at1) ** 2 != at1:
        raise InvariantViolation(
            f"directed polynomial value {at1} at t = 1 is not a square"
        )
    ok, _sign = poly.is_palindromic_up_to_sign()
    if not ok:
        raise InvariantViolation("directed polynomial is not palindromic")
    return poly


# ---------------------------------------------------------------------------
# Signatures
# ---------------------------------------------------------------------------


def _hermitian_signature(
    h: List[List[GaussianRational]],
) -> Tuple[int, bool]:
    """(signature, nonsingular) of a Hermitian matrix, by exact pivoting.

    Diagonal pivots contribute their sign directly; when the active
    diagonal is all zero but the block is not, an off-diagonal entry is
    used as a hyperbolic pair (one + and one - eigenvalue, signature 0).
    The matrix is singular exactly when elimination runs out of pivots
    with active rows left over.
    """
    a = [list(row) for row in h]
    active = list(range(len(a)))
    sig = 0
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is not None:
            d = a[k][k]
            if d.im:
                raise InvariantViolation("non-real diagonal in Hermitian form")
            sig += 1 if d.re > 0 else -1
            active.remove(k)
            for i in active:
                if not a[i][k]:
                    continue
                f = a[i][k] / d
                for j in active:
                    a[i][j] = a[i][j] - f * a[k][j]
                a[i][k] = GaussianRational.of(0)
            continue
        pq = next(
            (
                (p, q)
                for p in active
                for q in active
                if p != q and a[p][q]
            ),
            None,
        )
        if pq is None:
            return sig, False  # leftover zero block
        p, q = pq
        b = a[p][q]
        bc = b.conj()
        active.remove(p)
        active.remove(q)
        for i in active:
            cp, cq = a[i][p], a[i][q]
            if not cp and not cq:
                continue
            for j in active:
                a[i][j] = a[i][j] - cq * a[p][j] / b - cp * a[q][j] / bc
        # the 2x2 hyperbolic block has signature 0; nothing to add
    return sig, True


def directed_signature(
    pair: SeifertPair, side: int, u
) -> Tuple[int, bool]:
    """Signature of (1 - omega)V + (1 - conj(omega))V^T at omega(u).

    Returns (signature, nondegenerate).  The nondegeneracy flag is the
    nonsingularity of the Hermitian form, and it is cross-checked against
    the directed determinant polynomial: the form is singular exactly at
    the circle zeros of that polynomial.
    """
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    w = omega_of(u)
    one_minus = GaussianRational.of(1) - w
    one_minus_bar = GaussianRational.of(1) - w.conj()
    v = pair.vplus if side > 0 else pair.vminus
    size = pair.rank
    h = [
        [
            one_minus * v[i][j] + one_minus_bar * v[j][i]
            for j in range(size)
        ]
        for i in range(size)
    ]
    sig, nondeg = _hermitian_signature(h)
    nabla = directed_alexander(pair, side)
    if bool(nabla(w)) != nondeg:
        raise InvariantViolation(
            "signature form singularity disagrees with the directed "
            f"polynomial at u = {u}"
        )
    return sig, nondeg


# Master order of circle samples.  The leading sixteen are the default
# profile; the list continues deterministically with k/(k+1) pairs for
# callers who ask for more points.
_MASTER_SAMPLES: Tuple[Fraction, ...] = tuple(
    Fraction(*pq)
    for q in ((1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (1, 5), (5, 1), (2, 3),
              (3, 2))
    for pq in (q, (-q[0], q[1]))
)
DEFAULT_SIGNATURE_SAMPLES = 16


def sample_points(count: int) -> List[Fraction]:
    """The first `count` u values of the deterministic sample order."""
    if count < 1:
        raise ValueError("need at least one sample point")
    pts = list(_MASTER_SAMPLES[:count])
    k = 3
    have = set(pts) | set(_MASTER_SAMPLES)
    while len(pts) < count:
        q = Fraction(k, k + 1)
        for cand in (q, -q):
            if cand not in have and len(pts) < count:
                pts.append(cand)
                have.add(cand)
        k += 1
    return pts


class SignatureSample(NamedTuple):
    u: Fraction
    signature: Optional[int]  # None where the form is singular
    nondegenerate: bool


@dataclass(frozen=True)
class SignatureProfile:
    """Directed signatures across a sweep of circle points."""

    side: int
    samples: Tuple[SignatureSample, ...]

    def max_abs(self) -> int:
        vals = [abs(s.signature) for s in self.samples if s.nondegenerate]
        return max(vals, default=0)

    def all_zero_where_defined(self) -> bool:
        return all(not s.signature for s in self.samples if s.nondegenerate)


def signature_profile(
    pair: SeifertPair, side: int, samples: int = DEFAULT_SIGNATURE_SAMPLES
) -> SignatureProfile:
    out = []
    for u in sample_points(samples):
        sig, nondeg = directed_signature(pair, side, u)
        out.append(SignatureSample(u, sig if nondeg else None, nondeg))
    return SignatureProfile(side, tuple(out))


# ---------------------------------------------------------------------------
# Fox-Milnor factorization
# ---------------------------------------------------------------------------

_FM_DEGREE_BOUND = 12


def _signed_divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.extend((d, -d))
    return out


def fox_milnor(poly: LaurentPoly) -> Optional[LaurentPoly]:
    """A factor f with poly == f(t) * f(1/t), or None when none exists.

    Only polynomials of width at most 12 are searched (raising
    DegreeTooLarge beyond); candidate factors are enumerated by value
    interpolation at small integers, with divisor constraints at every
    point, square constraints at t = +-1, and a coefficient bound that
    discards interpolants too large to divide the input.  Any returned
    factor is re-verified by exact multiplication.  The zero polynomial
    factors trivially (f = 0).
    """
    if not poly:
        return LaurentPoly()
    width = poly.width()
    if width > _FM_DEGREE_BOUND:
        raise DegreeTooLarge(f"width {width} exceeds {_FM_DEGREE_BOUND}")
    if width % 2:
        return None
    m = width // 2
    if poly.min_degree() != -m:
        # f(t) f(1/t) is always balanced around degree zero.
        return None
    if m == 0:
        c = poly.coeff(0)
        if c < 0:
            return None
        r = math.isqrt(c)
        return LaurentPoly.const(r) if r * r == c else None

    q = poly.shift(m)  # ordinary polynomial of degree 2m
    if q.coeff(0) != q.coeff(2 * m):
        return None  # both equal a_0 * a_m for any factorization

    # Sample points: 0 and +-1 first (cheap, strong constraints), then
    # growing integers; points where q vanishes give no divisor bound
    # and are skipped.
    points: List[int] = []
    values: List[int] = []
    x = 0
    order = [0, 1, -1]
    while len(points) < m + 1:
        if order:
            x = order.pop(0)
        else:
            x = -x if x > 0 else -x + 1  # 2, -2, 3, -3, ...
        qx = int(q(Fraction(x))) if x else q.coeff(0)
        if qx:
            points.append(x)
            values.append(qx)

    candidate_values: List[List[int]] = []
    for x, qx in zip(points, values):
        if x == 1:
            r = math.isqrt(abs(qx))
            if qx < 0 or r * r != qx:
                return None
            candidate_values.append([r, -r] if r else [0])
        elif x == -1:
            target = qx if m % 2 == 0 else -qx
            r = math.isqrt(abs(target))
            if target < 0 or r * r != target:
                return None
            candidate_values.append([r, -r] if r else [0])
        else:
            candidate_values.append(_signed_divisors(qx))

    norm2 = math.isqrt(sum(c * c for _e, c in q.terms)) + 1
    coeff_bound = (2 ** m) * norm2

    def interpolate(vals: Sequence[int]) -> Optional[List[int]]:
        coeffs = [Fraction(0)] * (m + 1)
        for i, (xi, vi) in enumerate(zip(points, vals)):
            num = [Fraction(vi)]
            den = Fraction(1)
            for j, xj in enumerate(points):
                if j == i:
                    continue
                den *= xi - xj
                num = [Fraction(0)] + num[:]  # multiply by t
                for k in range(len(num) - 1):
                    num[k] -= Fraction(xj) * num[k + 1]
            for k, c in enumerate(num):
                coeffs[k] += c / den
        out = []
        for c in coeffs:
            if c.denominator != 1 or abs(c) > coeff_bound:
                return None
            out.append(int(c))
        return out

    def walk(idx: int, chosen: List[int]) -> Optional[LaurentPoly]:
        if idx == len(points):
            coeffs = interpolate(chosen)
            if coeffs is None or not coeffs[0] or not coeffs[m]:
                return None
            f = LaurentPoly(enumerate(coeffs))
            if f * f.invert_t() == poly:
                return f
            return None
        for v in candidate_values[idx]:
            got = walk(idx + 1, chosen + [v])
            if got is not None:
                return got
        return None

    return walk(0, [])


# ---------------------------------------------------------------------------
# Genus report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenusReport:
    """Bounds and obstructions assembled from one surface's invariants."""

    width_lower_bound: Fraction  # width(alexander)/2, a 3-genus bound
    surface_genus: int
    canonical_slice_genus: Fraction
    slice_signature_bound: Fraction
    fox_milnor_obstructed: Dict[int, bool]  # by side +1 / -1

    @property
    def slice_obstructed(self) -> bool:
        return (
            any(self.fox_milnor_obstructed.values())
            or self.slice_signature_bound > 0
        )


def genus_report(
    diagram,
    surface,
    pair: SeifertPair,
    profiles: Dict[int, SignatureProfile],
) -> GenusReport:
    """Bundle the genus bounds for one diagram/surface/pair triple.

    `profiles` maps side (+1/-1) to a SignatureProfile; the signature
    bound is the largest |signature|/2 over all nondegenerate samples of
    every supplied profile.
    """
    from .surface import canonical_slice_genus_of_diagram

    delta = alexander(pair)
    width_lower = Fraction(delta.width(), 2)
    sgenus = surface.genus
    canonical = Fraction(canonical_slice_genus_of_diagram(diagram))
    sig_bound = Fraction(
        max((p.max_abs() for p in profiles.values()), default=0), 2
    )
    obstructed = {
        side: fox_milnor(directed_alexander(pair, side)) is None
        for side in (1, -1)
    }
    if width_lower > sgenus:
        raise InvariantViolation(
            f"polynomial width {2 * width_lower} exceeds 2*genus {2 * sgenus}"
        )
    if canonical > sgenus:
        raise InvariantViolation(
            f"stacked-cycle genus {canonical} exceeds surface genus {sgenus}"
        )
    return GenusReport(width_lower, sgenus, canonical, sig_bound, obstructed)
