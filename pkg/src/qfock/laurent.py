"""Exact Laurent polynomials in ``v`` with integer coefficients.

Every coefficient computed by the package (Fock space vectors, canonical
bases, decomposition numbers) lives in ``Z[v, v^-1]``.  Values are immutable
and hashable; the term map never stores a zero coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
import re
from typing import Iterable, Iterator, Mapping

__all__ = ["Laurent", "V", "ONE", "ZERO", "gauss_number", "gauss_factorial", "bar", "specialize"]


class Laurent:
    """An element of ``Z[v, v^-1]``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = 0):
        if isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            clean = {}
            for e, c in items:
                if not isinstance(c, int) or isinstance(c, bool):
                    if isinstance(c, Fraction) and c.denominator == 1:
                        c = int(c)
                    else:
                        raise TypeError(f"coefficients must be integers, got {c!r}")
                if c:
                    clean[int(e)] = clean.get(int(e), 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "Laurent":
        # caller guarantees: int keys, nonzero int values
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "Laurent":
        return cls._raw({exponent: coefficient} if coefficient else {})

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_monomial(self) -> bool:
        """True for ``c*v^k`` with ``c != 0`` (at most one term, nonzero)."""
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def in_positive_part(self) -> bool:
        """All exponents > 0, i.e. the value lies in ``vZ[v]``."""
        return all(e > 0 for e in self._terms)

    def in_negative_part(self) -> bool:
        """All exponents < 0, i.e. the value lies in ``v^-1 Z[v^-1]``."""
        return all(e < 0 for e in self._terms)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._terms)

    def nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Laurent | None":
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Laurent(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        t = dict(self._terms)
        for e, c in o._terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return Laurent._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return ZERO
        if len(o._terms) == 1:
            (f, d), = o._terms.items()
            return Laurent._raw({e + f: c * d for e, c in self._terms.items()})
        if len(self._terms) == 1:
            (f, d), = self._terms.items()
            return Laurent._raw({e + f: c * d for e, c in o._terms.items()})
        t: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return Laurent._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            if len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1:
                (e, c), = self._terms.items()
                return Laurent._raw({e * k: c if k % 2 else 1})
            raise ValueError("only units may be raised to negative powers")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "Laurent":
        """Multiply by ``v^k``."""
        return Laurent._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "Laurent":
        """The involution ``v -> v^-1``."""
        return Laurent._raw({-e: c for e, c in self._terms.items()})

    def substitute_monomial(self, sign: int, power: int) -> "Laurent":
        """Substitute ``v -> sign * v^power`` (``sign`` is +1 or -1)."""
        return Laurent._raw({e * power: c * (sign ** (e % 2)) for e, c in self._terms.items()})

    def positive_part(self) -> "Laurent":
        return Laurent._raw({e: c for e, c in self._terms.items() if e > 0})

    def negative_part(self) -> "Laurent":
        return Laurent._raw({e: c for e, c in self._terms.items() if e < 0})

    def __call__(self, value):
        return specialize(self, value)

    # -- comparison, hashing, display ---------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Laurent({self.terms()!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items()):
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if mono == "":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> "Laurent":
        """Inverse of ``str``: accepts sums like ``1 + 2v - v^-3``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        pos, terms = 0, {}
        for m in _TERM.finditer(s):
            if m.start() != pos or not m.group(0)[1:]:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            pos = m.end()
            sign, coef, var, exp = m.groups()
            if not coef and not var:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            c = (-1 if sign == "-" else 1) * int(coef or 1)
            e = (int(exp) if exp else 1) if var else 0
            terms[e] = terms.get(e, 0) + c
        if pos != len(s):
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        return cls(terms)

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data) -> "Laurent":
        return cls((int(e), int(c)) for e, c in data)


_TERM = re.compile(r"([+-])(\d*)(v)?(?:\^(-?\d+))?")

ZERO = Laurent._raw({})
ONE = Laurent._raw({0: 1})
V = Laurent._raw({1: 1})


def bar(p: Laurent) -> Laurent:
    return p.bar()


def gauss_number(j: int) -> Laurent:
    """Balanced quantum integer ``[j] = (v^j - v^-j)/(v - v^-1)``."""
    if j < 0:
        raise ValueError("gauss_number needs j >= 0")
    return Laurent._raw({e: 1 for e in range(1 - j, j, 2)})


def gauss_factorial(k: int) -> Laurent:
    result = ONE
    for j in range(2, k + 1):
        result = result * gauss_number(j)
    return result


def specialize(p: Laurent, value) -> Fraction:
    """Evaluate ``p`` at a nonzero rational ``v = value``."""
    if not isinstance(value, Rational):
        raise TypeError("specialize expects an int or Fraction")
    value = Fraction(value)
    if value == 0:
        raise ValueError("cannot evaluate a Laurent polynomial at v = 0")
    return sum((Fraction(c) * value ** e for e, c in p._terms.items()), Fraction(0))


def divexact(num: Laurent, den: Laurent) -> Laurent:
    """Exact quotient in ``Z[v, v^-1]``; raises ``ArithmeticError`` if inexact.

    Used internally for divided powers; not part of the ring interface.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.is_zero():
        return ZERO
    d_lo, d_hi = den.min_degree, den.max_degree
    lead = den._terms[d_hi]
    rem = dict(num._terms)
    quot: dict[int, int] = {}
    while rem:
        hi = max(rem)
        if hi - d_hi < min(rem) - d_lo:
            raise ArithmeticError(f"{num} is not divisible by {den}")
        c, r = divmod(rem[hi], lead)
        if r:
            raise ArithmeticError(f"{num} is not divisible by {den}")
        shift = hi - d_hi
        quot[shift] = c
        for e, dc in den._terms.items():
            k = e + shift
            val = rem.get(k, 0) - c * dc
            if val:
                rem[k] = val
            else:
                rem.pop(k, None)
    return Laurent._raw(quot)
