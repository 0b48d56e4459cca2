"""Exact Laurent polynomials in q with integer coefficients.

A QPoly stores an offset (lowest exponent) and a dense coefficient list;
Python ints make all arithmetic exact with no overflow.  Half-integer
symmetry centers are handled by passing a doubled center (center2) to
the palindromicity test, so fractional powers of q never appear.
"""

from __future__ import annotations

from typing import Iterator


class QPoly:
    """Laurent polynomial in q; coeffs[k] is the coefficient of q**(offset+k).

    Canonical form: coeffs is empty (the zero polynomial, offset 0) or has
    nonzero first and last entries.  Instances are immutable.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs=(), offset: int = 0):
        coeffs = list(coeffs)
        lo = 0
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", offset + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def term(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        """The monomial coefficient * q**exponent."""
        return cls((coefficient,), exponent)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "QPoly":
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls(coeffs, lo)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs with nonzero coefficient."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                yield self.offset + k, c

    def coefficient(self, exponent: int) -> int:
        k = exponent - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __add__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for k, c in enumerate(self.coeffs):
            out[self.offset - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.offset - lo + k] += c
        return QPoly(out, lo)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs], self.offset)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out, self.offset + other.offset)

    def add_term(self, exponent: int, coefficient: int) -> "QPoly":
        """Return self + coefficient * q**exponent."""
        return self + QPoly.term(exponent, coefficient)

    def scale(self, k: int) -> "QPoly":
        return QPoly([k * c for c in self.coeffs], self.offset)

    def degree(self):
        """Highest exponent, or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return self.offset + len(self.coeffs) - 1

    def low_degree(self):
        """Lowest exponent, or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return self.offset

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_palindromic(self, center2: int) -> bool:
        """True iff coeff(q^e) == coeff(q^(center2 - e)) for all e.

        center2 is twice the center of symmetry, so half-integer centers
        stay exact.  The zero polynomial is palindromic about any center.
        """
        if not self.coeffs:
            return True
        lo = self.offset
        hi = self.offset + len(self.coeffs) - 1
        if 2 * lo + 2 * hi != 2 * center2:
            return False
        n = len(self.coeffs)
        return all(self.coeffs[k] == self.coeffs[n - 1 - k] for k in range(n))

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls(data["coeffs"], data["offset"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for e, c in self.terms():
            if e == 0:
                body = str(abs(c))
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                body = qpow if abs(c) == 1 else f"{abs(c)}*{qpow}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r}, offset={self.offset})"


def q_integer(k: int) -> QPoly:
    """The q-integer [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0."""
    if k < 0:
        raise ValueError("q_integer needs k >= 0")
    return QPoly([1] * k)


def q_factorial(k: int) -> QPoly:
    """[k]_q! = [1]_q [2]_q ... [k]_q; empty product is 1."""
    if k < 0:
        raise ValueError("q_factorial needs k >= 0")
    out = QPoly.one()
    for j in range(1, k + 1):
        out = out * q_integer(j)
    return out
