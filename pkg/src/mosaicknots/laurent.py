"""Sparse integer Laurent polynomials in one variable."""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable map ``exponent -> nonzero integer coefficient``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-e * -k: c ** -k})
        out = LaurentPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def min_degree(self) -> int:
        return next(iter(self._terms))

    def max_degree(self) -> int:
        return next(reversed(self._terms))

    def span(self) -> int:
        if not self._terms:
            raise ValueError("span of the zero polynomial")
        return self.max_degree() - self.min_degree()

    def substitute(self, k: int) -> "LaurentPoly":
        """Replace the variable ``x`` by ``x**k`` (``k`` may be negative)."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def scale_exponents(self, d: int) -> "LaurentPoly":
        """Divide every exponent by ``d``; all exponents must be multiples."""
        if any(e % d for e in self._terms):
            raise ValueError(f"exponents are not all multiples of {d}")
        return LaurentPoly({e // d: c for e, c in self._terms.items()})

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._terms.items())

    def format(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + ("" if e == 1 else f"^{e}")
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"


_TERM = re.compile(r"([+-]?)(\d*)(?:([A-Za-z])(?:\^(-?\d+))?)?")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.format` (any single-letter variable)."""
    compact = "".join(text.split())
    if compact == "0":
        return LaurentPoly()
    pos, terms = 0, []
    while pos < len(compact):
        mt = _TERM.match(compact, pos)
        if mt is None or mt.end() == pos or not (mt.group(2) or mt.group(3)):
            raise ValueError(f"bad polynomial text near {compact[pos:]!r}")
        coeff = int(mt.group(2) or 1) * (-1 if mt.group(1) == "-" else 1)
        if mt.group(3):
            exp = int(mt.group(4)) if mt.group(4) is not None else 1
        else:
            exp = 0
        terms.append((exp, coeff))
        pos = mt.end()
    return LaurentPoly(terms)


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
# loop value -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})
