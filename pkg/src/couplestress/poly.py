"""Exact multivariate polynomials in the coordinates (x1, x2, x3).

A :class:`Poly` maps exponent triples ``(i, j, k)`` to :class:`fractions.Fraction`
coefficients.  Zero coefficients are never stored, so two polynomials are equal
exactly when their term dictionaries are equal.

    >>> x1, x2, x3 = Poly.variables()
    >>> p = x1**2 * x3 - Fraction(1, 2)
    >>> p.diff(0)
    Poly({(1, 0, 1): 2})
    >>> p.evaluate((1, 5, 3))
    Fraction(5, 2)
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Exps = tuple[int, int, int]

__all__ = ["Poly", "as_fraction"]


def as_fraction(value) -> Fraction:
    """Coerce an exact scalar (int, Fraction, ``"p/q"`` string) to a Fraction.

    Floats are rejected: nothing in this package is allowed to round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


_SCALARS = (int, Fraction)


def _check_exps(exps) -> Exps:
    exps = tuple(int(e) for e in exps)
    if len(exps) != 3 or min(exps) < 0:
        raise ValueError(f"exponent triple must be three non-negative ints, got {exps}")
    return exps  # type: ignore[return-value]


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        clean: dict[Exps, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                c = as_fraction(coeff)
                if c:
                    key = _check_exps(exps)
                    clean[key] = clean.get(key, Fraction(0)) + c
                    if not clean[key]:
                        del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, Fraction]) -> "Poly":
        # trusted constructor: keys valid, no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value) -> "Poly":
        c = as_fraction(value)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def monomial(cls, coeff, exps: Sequence[int]) -> "Poly":
        return cls({tuple(exps): coeff})

    @classmethod
    def variable(cls, axis: int) -> "Poly":
        exps = [0, 0, 0]
        exps[axis] = 1
        return cls._raw({tuple(exps): Fraction(1)})

    @classmethod
    def variables(cls) -> tuple["Poly", "Poly", "Poly"]:
        return cls.variable(0), cls.variable(1), cls.variable(2)

    @property
    def terms(self) -> Mapping[Exps, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            c = Fraction(other)
            if not c:
                return Poly.zero()
            return Poly._raw({e: v * c for e, v in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Exps, Fraction] = {}
        for (a1, a2, a3), ca in self._terms.items():
            for (b1, b2, b3), cb in other._terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self._terms.items()))
        return f"Poly({{{body}}})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            mono = "*".join(
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}" for i, p in enumerate(exps) if p
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- calculus -----------------------------------------------------------

    def diff(self, axis: int, order: int = 1) -> "Poly":
        """Partial derivative with respect to ``x_{axis+1}``."""
        p = self
        for _ in range(order):
            out: dict[Exps, Fraction] = {}
            for exps, c in p._terms.items():
                n = exps[axis]
                if n:
                    e = list(exps)
                    e[axis] = n - 1
                    out[tuple(e)] = c * n  # type: ignore[index]
            p = Poly._raw(out)
        return p

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [as_fraction(v) for v in point]
        total = Fraction(0)
        for (a, b, c), coeff in self._terms.items():
            total += coeff * pt[0] ** a * pt[1] ** b * pt[2] ** c
        return total

    def substitute(self, axis: int, value) -> "Poly":
        """Fix ``x_{axis+1} = value``; the result no longer depends on that axis."""
        v = as_fraction(value)
        out: dict[Exps, Fraction] = {}
        for exps, c in self._terms.items():
            e = list(exps)
            n = e[axis]
            e[axis] = 0
            key = tuple(e)
            s = out.get(key, 0) + c * v**n
            if s:
                out[key] = s  # type: ignore[index]
            else:
                out.pop(key, None)  # type: ignore[arg-type]
        return Poly._raw(out)

    def integrate(self, axis: int, lower, upper) -> "Poly":
        """Definite integral over ``x_{axis+1}`` in ``[lower, upper]``."""
        lo, hi = as_fraction(lower), as_fraction(upper)
        out: dict[Exps, Fraction] = {}
        for exps, c in self._terms.items():
            e = list(exps)
            n = e[axis]
            e[axis] = 0
            key = tuple(e)
            s = out.get(key, 0) + c * (hi ** (n + 1) - lo ** (n + 1)) / (n + 1)
            if s:
                out[key] = s  # type: ignore[index]
            else:
                out.pop(key, None)  # type: ignore[arg-type]
        return Poly._raw(out)

    def compose(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute ``x_i -> images[i]`` for all three coordinates at once."""
        imgs = [self._coerce(p) for p in images]
        powers: list[dict[int, Poly]] = [{0: Poly.constant(1)} for _ in range(3)]

        def power(axis: int, n: int) -> Poly:
            cache = powers[axis]
            if n not in cache:
                cache[n] = power(axis, n - 1) * imgs[axis]
            return cache[n]

        result = Poly.zero()
        for (a, b, c), coeff in self._terms.items():
            result = result + power(0, a) * power(1, b) * power(2, c) * coeff
        return result

    def shift(self, offset: Sequence) -> "Poly":
        """Return ``q`` with ``q(xi) = p(xi + offset)``."""
        off = [as_fraction(v) for v in offset]
        return self.compose([Poly.variable(i) + off[i] for i in range(3)])

    def max_abs_coefficient(self, min_degree: int = 0) -> Fraction:
        return max(
            (abs(c) for e, c in self._terms.items() if sum(e) >= min_degree),
            default=Fraction(0),
        )
