"""Integer Laurent polynomials in one variable t.

Coefficients are plain ints and every operation is exact.  The class is
deliberately small: just what determinant computations, normalization
up to units +-t^k, and the t -> 1/t symmetry checks need.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple


class LaurentPoly:
    """A finite sum  sum_k  c_k t^k  with integer c_k and k in Z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        c: Dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for k, v in items:
            if v:
                c[k] = c.get(k, 0) + v
                if not c[k]:
                    del c[k]
        self._c = c

    # -- constructors ------------------------------------------------

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def t_power(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        return cls({k: coeff})

    # -- basic protocol ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
            if not c[k]:
                del c[k]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly({k: v * other for k, v in self._c.items()})
        c: Dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k: v for k, v in c.items() if v}
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- shape ----------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """Sorted (exponent, coefficient) pairs, ascending exponent."""
        return tuple(sorted(self._c.items()))

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def width(self) -> int:
        """max degree - min degree; 0 for the zero polynomial."""
        if not self._c:
            return 0
        return max(self._c) - min(self._c)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def invert_t(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    # -- comparisons up to units ----------------------------------------

    def equals(self, other: "LaurentPoly") -> bool:
        return self == other

    def equals_up_to_units(self, other: "LaurentPoly") -> bool:
        """True when self == +- t^k * other for some integer k."""
        if not self._c or not other._c:
            return self._c == other._c
        k = self.min_degree() - other.min_degree()
        shifted = other.shift(k)
        return self == shifted or self == -shifted

    def equals_up_to_units_and_inversion(self, other: "LaurentPoly") -> bool:
        return self.equals_up_to_units(other) or self.equals_up_to_units(
            other.invert_t()
        )

    def is_palindromic_up_to_sign(self) -> Tuple[bool, int]:
        """Check self(1/t) == s * t^k * self(t); return (holds, s).

        For the zero polynomial this is vacuously (True, +1).
        """
        if not self._c:
            return True, 1
        flipped = self.invert_t()
        k = flipped.min_degree() - self.min_degree()
        shifted = self.shift(k)
        if flipped == shifted:
            return True, 1
        if flipped == -shifted:
            return True, -1
        return False, 1

    # -- evaluation ------------------------------------------------------

    def __call__(self, x):
        """Evaluate at x.  x may be int, Fraction, or any field element
        supporting 1/x for the negative powers."""
        if not self._c:
            return 0 * x if not isinstance(x, int) else 0
        neg = min(self.min_degree(), 0)
        inv = None
        if neg < 0:
            inv = 1 / x
        total = None
        for e, v in self._c.items():
            term = v * (x ** e if e >= 0 else inv ** (-e))
            total = term if total is None else total + term
        return total

    # -- exact division (for fraction-free determinants) -----------------

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return q with self == q * other, raising if division is inexact."""
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return LaurentPoly()
        # Shift both to ordinary polynomials and long-divide over Z.
        a = self.shift(-self.min_degree())
        b = other.shift(-other.min_degree())
        da, db = a.max_degree(), b.max_degree()
        if da < db:
            raise ArithmeticError("inexact Laurent division")
        acoef = [a.coeff(i) for i in range(da + 1)]
        bcoef = [b.coeff(i) for i in range(db + 1)]
        lead = bcoef[-1]
        q = [0] * (da - db + 1)
        for i in range(da - db, -1, -1):
            top = acoef[i + db]
            if top % lead:
                raise ArithmeticError("inexact Laurent division")
            q[i] = top // lead
            if q[i]:
                for j, bc in enumerate(bcoef):
                    acoef[i + j] -= q[i] * bc
        if any(acoef):
            raise ArithmeticError("inexact Laurent division")
        shift = self.min_degree() - other.min_degree()
        return LaurentPoly({i + shift: v for i, v in enumerate(q) if v})

    # -- display ----------------------------------------------------------

    def display(self) -> str:
        """Readable form, highest power first, e.g. '2 - t + t^-1'."""
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                body = str(abs(v))
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if abs(v) == 1 else f"{abs(v)}*{tpow}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.display()!r})"
