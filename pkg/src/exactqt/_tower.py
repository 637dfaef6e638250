"""Internal finite fields F_{p^n} of arbitrary degree, plus inclusions.

These carry no conjugation structure (the involution hook is the identity);
they exist so closure-level evaluation can range over every extension degree,
not just the even ones the public quadratic fields provide.  Fields and the
inclusion maps between them are cached and fully deterministic: moduli are
the canonical lexicographically smallest irreducibles and an inclusion sends
the generator to the first root in the bigger field's element order.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator

from . import _fppoly
from ._intnum import is_prime
from .errors import DivisionByZero, NonPrimeCharacteristic
from .starfield import Element, FieldDescriptor


class TowerField(FieldDescriptor):
    """F_p[t]/(canonical irreducible of degree n), identity involution."""

    kind = "tower"
    involution_order = 1

    def __init__(self, p: int, n: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if not isinstance(n, int) or n < 1:
            raise ValueError("tower degree must be a positive integer")
        self.p = p
        self.n = n
        self.characteristic = p
        self.order = p**n
        self.modulus = _fppoly.canonical_irreducible(p, n)
        self._trim_mod = _fppoly.trim(self.modulus)

    def _pad(self, c: tuple[int, ...]) -> tuple[int, ...]:
        return c + (0,) * (self.n - len(c))

    def payload_from_int(self, k: int) -> tuple[int, ...]:
        return self._pad((k % self.p,) if k % self.p else ())

    def payload_canonical(self, raw) -> tuple[int, ...]:
        if isinstance(raw, (tuple, list)) and all(isinstance(c, int) for c in raw):
            reduced = _fppoly.mod(_fppoly.trim(tuple(c % self.p for c in raw)), self._trim_mod, self.p)
            return self._pad(reduced)
        return super().payload_canonical(raw)

    def payload_add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def payload_neg(self, a):
        return tuple((-x) % self.p for x in a)

    def payload_mul(self, a, b):
        return self._pad(_fppoly.mulmod(_fppoly.trim(a), _fppoly.trim(b), self._trim_mod, self.p))

    def payload_inv(self, a):
        if not _fppoly.trim(a):
            raise DivisionByZero(f"0 has no inverse in {self.shorthand()}")
        return self._pad(_fppoly.invmod(_fppoly.trim(a), self._trim_mod, self.p))

    def payload_involute(self, a):
        return a

    def payload_parse(self, s: str) -> tuple[int, ...]:
        raw = _fppoly.parse_poly(s, self.p)
        return self._pad(_fppoly.mod(raw, self._trim_mod, self.p))

    def payload_format(self, a) -> str:
        return _fppoly.format_poly(_fppoly.trim(a))

    def payload_sort_key(self, a):
        return a

    def elements(self) -> Iterator[Element]:
        for tup in itertools.product(range(self.p), repeat=self.n):
            yield Element(self, tup)

    def shorthand(self) -> str:
        return f"tower:{self.p}:{self.n}"

    def to_json(self) -> dict:
        return {"kind": "tower", "p": self.p, "n": self.n, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return isinstance(other, TowerField) and other.p == self.p and other.n == self.n

    def __hash__(self) -> int:
        return hash(("tower", self.p, self.n))


@functools.lru_cache(maxsize=None)
def tower_field(p: int, n: int) -> TowerField:
    return TowerField(p, n)


@functools.lru_cache(maxsize=None)
def _generator_image(p: int, n: int, m: int) -> Element:
    """First root of the degree-n canonical modulus inside F_{p^m}."""
    small = tower_field(p, n)
    big = tower_field(p, m)
    for cand in big.elements():
        acc = big.zero()
        for c in reversed(small.modulus):
            acc = acc * cand + big.element(c)
        if acc.is_zero():
            return cand
    raise ArithmeticError(f"degree-{n} modulus has no root in F_{p}^{m}")  # unreachable for n | m


def lift(x: Element, m: int) -> Element:
    """Include an element of F_{p^n} into F_{p^m}; requires n | m."""
    small = x.owner
    assert isinstance(small, TowerField)
    if small.n == m:
        return x
    if m % small.n:
        raise ValueError(f"F_{small.p}^{small.n} does not embed in F_{small.p}^{m}")
    big = tower_field(small.p, m)
    u = _generator_image(small.p, small.n, m)
    acc = big.zero()
    for c in reversed(x.payload):
        acc = acc * u + big.element(c)
    return acc
