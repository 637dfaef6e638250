"""Fields with involution and their exact element arithmetic.

Three backends share one element interface: prime fields F_p carrying the
identity involution, quadratic extensions F_{q^2} = F_p[t]/(modulus) with
the Frobenius involution x -> x^q, and the Gaussian rationals Q(i) with
complex conjugation.  The involution plays the role complex conjugation
plays in ordinary quantum mechanics; fields where it degenerates to the
identity are called improper and refuse conjugation-specific requests.

All values are immutable and every operation is exact; nothing in this
module (or the package) touches floating point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator

from . import _fppoly
from ._intnum import is_prime
from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldNotFinite,
    ImproperField,
    NonPrimeCharacteristic,
    ParseError,
    ReducibleModulus,
)


class Element:
    """A single field element; arithmetic dispatches to the owning field."""

    __slots__ = ("owner", "payload")

    def __init__(self, owner: FieldDescriptor, payload):
        self.owner = owner
        self.payload = payload

    def _check(self, other: Element) -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if self.owner != other.owner:
            raise FieldMismatch(f"{self.owner.shorthand()} vs {other.owner.shorthand()}")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.owner, self.owner.payload_add(self.payload, other.payload))

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.owner, self.owner.payload_sub(self.payload, other.payload))

    def __mul__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.owner, self.owner.payload_mul(self.payload, other.payload))

    def __neg__(self) -> Element:
        return Element(self.owner, self.owner.payload_neg(self.payload))

    def __truediv__(self, other: Element) -> Element:
        return self * other.inverse()

    def __pow__(self, n: int) -> Element:
        if n < 0:
            return self.inverse() ** (-n)
        result = self.owner.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Element:
        return Element(self.owner, self.owner.payload_inv(self.payload))

    def conj(self) -> Element:
        """Image under the field involution."""
        return Element(self.owner, self.owner.payload_involute(self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.owner.payload_from_int(0)

    def is_fixed(self) -> bool:
        return self.owner.payload_involute(self.payload) == self.payload

    def sort_key(self):
        return self.owner.payload_sort_key(self.payload)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.owner == other.owner
            and self.payload == other.payload
        )

    def __hash__(self) -> int:
        return hash((self.owner.shorthand(), self.payload))

    def __str__(self) -> str:
        return self.owner.payload_format(self.payload)

    def __repr__(self) -> str:
        return f"<{self} in {self.owner.shorthand()}>"


class FieldDescriptor:
    """Common surface of the three field backends."""

    kind: str = ""
    involution_order: int = 1
    is_finite: bool = True

    # Subclasses implement payload_* for their concrete representation.

    def element(self, value) -> Element:
        """Coerce an int, textual string, payload, or Element into this field."""
        if isinstance(value, Element):
            if value.owner != self:
                raise FieldMismatch(f"element of {value.owner.shorthand()} given to {self.shorthand()}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return Element(self, self.payload_from_int(value))
        if isinstance(value, str):
            return Element(self, self.payload_parse(value))
        return Element(self, self.payload_canonical(value))

    def zero(self) -> Element:
        return Element(self, self.payload_from_int(0))

    def one(self) -> Element:
        return Element(self, self.payload_from_int(1))

    def elements(self) -> Iterator[Element]:
        raise FieldNotFinite(f"{self.shorthand()} is not finite")

    def payload_sub(self, a, b):
        return self.payload_add(a, self.payload_neg(b))

    def payload_canonical(self, raw):
        raise TypeError(f"cannot interpret {raw!r} as an element of {self.shorthand()}")

    def shorthand(self) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.shorthand()


class PrimeField(FieldDescriptor):
    """F_p with the identity involution (an improper field)."""

    kind = "prime"
    involution_order = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def payload_from_int(self, n: int) -> int:
        return n % self.p

    def payload_canonical(self, raw) -> int:
        if isinstance(raw, int):
            return raw % self.p
        return super().payload_canonical(raw)

    def payload_add(self, a, b):
        return (a + b) % self.p

    def payload_neg(self, a):
        return (-a) % self.p

    def payload_mul(self, a, b):
        return a * b % self.p

    def payload_inv(self, a):
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self.shorthand()}")
        return pow(a, self.p - 2, self.p)

    def payload_involute(self, a):
        return a

    def payload_parse(self, s: str) -> int:
        try:
            return int(s.strip()) % self.p
        except ValueError:
            raise ParseError(f"bad prime-field element {s!r}", 0) from None

    def payload_format(self, a) -> str:
        return str(a)

    def payload_sort_key(self, a):
        return (a,)

    def elements(self) -> Iterator[Element]:
        for n in range(self.p):
            yield Element(self, n)

    def fixed_elements(self) -> tuple[Element, ...]:
        return tuple(self.elements())

    def shorthand(self) -> str:
        return f"prime:{self.p}"

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime", self.p))


class QuadExt(FieldDescriptor):
    """F_{q^2} with q = p^e, as F_p[t]/(modulus), involution x -> x^q.

    The modulus defaults to the lexicographically smallest monic irreducible
    polynomial of degree 2e over F_p (coefficient tuples compared low degree
    first), which pins down a canonical field for each (p, e).
    """

    kind = "quadext"
    involution_order = 2

    def __init__(self, p: int, e: int, modulus: tuple[int, ...] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if not isinstance(e, int) or e < 1:
            raise ValueError("extension parameter e must be a positive integer")
        self.p = p
        self.e = e
        self.q = p**e
        self.degree = 2 * e
        self.characteristic = p
        self.order = self.q * self.q
        if modulus is None:
            self.modulus = _fppoly.canonical_irreducible(p, self.degree)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != self.degree + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {self.degree}")
            if not _fppoly.is_irreducible(_fppoly.trim(mod), p):
                raise ReducibleModulus(f"{list(mod)} is reducible over F_{p}")
            self.modulus = mod
        self._trim_mod = _fppoly.trim(self.modulus)
        self._fixed_cache: tuple[Element, ...] | None = None

    def _pad(self, c: tuple[int, ...]) -> tuple[int, ...]:
        return c + (0,) * (self.degree - len(c))

    def payload_from_int(self, n: int) -> tuple[int, ...]:
        return self._pad((n % self.p,) if n % self.p else ())

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
        return self._pad(_fppoly.powmod(_fppoly.trim(a), self.q, self._trim_mod, self.p))

    def payload_parse(self, s: str) -> tuple[int, ...]:
        raw = _fppoly.parse_poly(s, self.p)
        return self._pad(_fppoly.mod(raw, self._trim_mod, self.p))

    def payload_format(self, a) -> str:
        return _fppoly.format_poly(_fppoly.trim(a))

    def payload_sort_key(self, a):
        return a

    def generator(self) -> Element:
        """The class of t, the canonical element outside the fixed field."""
        return Element(self, self._pad((0, 1)))

    def elements(self) -> Iterator[Element]:
        for tup in itertools.product(range(self.p), repeat=self.degree):
            yield Element(self, tup)

    def fixed_elements(self) -> tuple[Element, ...]:
        """The fixed field F_q, in canonical element order (cached)."""
        if self._fixed_cache is None:
            self._fixed_cache = tuple(x for x in self.elements() if x.is_fixed())
        return self._fixed_cache

    def shorthand(self) -> str:
        return f"quadext:{self.p}:{self.e}"

    def to_json(self) -> dict:
        return {"kind": "quadext", "p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadExt)
            and other.p == self.p
            and other.e == self.e
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("quadext", self.p, self.e, self.modulus))


class GaussianRationals(FieldDescriptor):
    """Q(i) with complex conjugation; payloads are (Fraction, Fraction) pairs."""

    kind = "gaussian"
    involution_order = 2
    is_finite = False

    def __init__(self):
        self.characteristic = 0
        self.order = None

    def payload_from_int(self, n: int):
        return (Fraction(n), Fraction(0))

    def payload_canonical(self, raw):
        if isinstance(raw, (tuple, list)) and len(raw) == 2:
            return (Fraction(raw[0]), Fraction(raw[1]))
        if isinstance(raw, Fraction):
            return (raw, Fraction(0))
        return super().payload_canonical(raw)

    def payload_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def payload_neg(self, a):
        return (-a[0], -a[1])

    def payload_mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def payload_inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        if n == 0:
            raise DivisionByZero("0 has no inverse in Q(i)")
        return (a[0] / n, -a[1] / n)

    def payload_involute(self, a):
        return (a[0], -a[1])

    def payload_parse(self, s: str):
        text = s.replace(" ", "")
        if not text:
            raise ParseError("empty element string", 0)
        pieces: list[str] = []
        start = 0
        for idx in range(1, len(text)):
            if text[idx] in "+-":
                pieces.append(text[start:idx])
                start = idx
        pieces.append(text[start:])
        if len(pieces) > 2:
            raise ParseError(f"bad Gaussian rational {s!r}", 0)
        re_part, im_part = Fraction(0), Fraction(0)
        seen_re = seen_im = False
        for piece in pieces:
            try:
                if piece.endswith("i"):
                    if seen_im:
                        raise ValueError
                    seen_im = True
                    body = piece[:-1]
                    if body in ("", "+"):
                        im_part = Fraction(1)
                    elif body == "-":
                        im_part = Fraction(-1)
                    else:
                        im_part = Fraction(body)
                else:
                    if seen_re:
                        raise ValueError
                    seen_re = True
                    re_part = Fraction(piece)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad Gaussian rational {s!r}", 0) from None
        return (re_part, im_part)

    def payload_format(self, a) -> str:
        re_part, im_part = a
        if im_part == 0:
            return str(re_part)
        if im_part == 1:
            im_text = "i"
        elif im_part == -1:
            im_text = "-i"
        else:
            im_text = f"{im_part}i"
        if re_part == 0:
            return im_text
        sign = "+" if im_part > 0 else ""
        return f"{re_part}{sign}{im_text}"

    def payload_sort_key(self, a):
        return a

    def imag_unit(self) -> Element:
        return Element(self, (Fraction(0), Fraction(1)))

    def fixed_elements(self):
        raise FieldNotFinite("Q(i) has infinitely many fixed elements")

    def shorthand(self) -> str:
        return "gaussian"

    def to_json(self) -> dict:
        return {"kind": "gaussian"}

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussianRationals)

    def __hash__(self) -> int:
        return hash("gaussian")


def make_field(kind: str, p: int | None = None, e: int | None = None,
               modulus=None) -> FieldDescriptor:
    """Construct a field descriptor by kind: 'prime', 'quadext', or 'gaussian'."""
    if kind == "prime":
        if p is None:
            raise ValueError("prime field needs p")
        return PrimeField(p)
    if kind == "quadext":
        if p is None or e is None:
            raise ValueError("quadratic extension needs p and e")
        return QuadExt(p, e, tuple(modulus) if modulus is not None else None)
    if kind == "gaussian":
        return GaussianRationals()
    raise ValueError(f"unknown field kind {kind!r}")


def parse_field(spec) -> FieldDescriptor:
    """Accept a shorthand string ('quadext:3:1', 'prime:5', 'gaussian') or a
    descriptor dict ({"kind": "quadext", "p": 3, "e": 1, "modulus": [1, 0, 1]})."""
    if isinstance(spec, FieldDescriptor):
        return spec
    if isinstance(spec, str):
        parts = spec.strip().split(":")
        try:
            if parts[0] == "gaussian" and len(parts) == 1:
                return GaussianRationals()
            if parts[0] == "prime" and len(parts) == 2:
                return PrimeField(int(parts[1]))
            if parts[0] == "quadext" and len(parts) == 3:
                return QuadExt(int(parts[1]), int(parts[2]))
        except ValueError:
            pass
        raise ParseError(f"bad field shorthand {spec!r}", 0)
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "prime":
            return PrimeField(spec["p"])
        if kind == "quadext":
            modulus = spec.get("modulus")
            return QuadExt(spec["p"], spec["e"], tuple(modulus) if modulus else None)
        if kind == "gaussian":
            return GaussianRationals()
        raise ParseError(f"bad field descriptor kind {kind!r}", 0)
    raise TypeError(f"cannot interpret {spec!r} as a field")


def involute(x: Element) -> Element:
    """The field involution applied to one element."""
    return x.conj()


def is_fixed(x: Element) -> bool:
    """True when the involution fixes x (x lies in the fixed field)."""
    return x.is_fixed()


def fixed_field_coordinates(x: Element) -> tuple[Element, Element]:
    """Write x = a + kappa * b with a, b in the fixed field.

    kappa is i for Q(i) and the canonical generator t for quadratic
    extensions.  Improper fields have no such decomposition.
    """
    f = x.owner
    if f.involution_order == 1:
        raise ImproperField(f"{f.shorthand()} has the identity involution")
    if isinstance(f, GaussianRationals):
        return f.element((x.payload[0], Fraction(0))), f.element((x.payload[1], Fraction(0)))
    kappa = f.generator()
    denom = kappa - kappa.conj()
    b = (x - x.conj()) / denom
    a = x - kappa * b
    return a, b
