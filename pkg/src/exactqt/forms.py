"""Vectors, matrices, Hermitian forms, and exact spectral decomposition.

The standard sesquilinear form conjugates the first argument:
<x, y> = sum over k of involute(x_k) * y_k.  Everything downstream
(adjoints, unitarity, Born weights) is phrased against this convention.

char_poly runs a fraction-free Bareiss elimination over the polynomial
ring, which stays exact in every characteristic; eigenvalues over finite
fields come from an exhaustive root scan, and over Q(i) from a divisor
search on the scaled constant term (so the owner-field spectrum is always
complete, even when the closure spectrum is not).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ._gaussint import gaussian_divisors
from .errors import DimensionMismatch, FieldMismatch, Inconsistent, NonSquare
from .starfield import Element, FieldDescriptor, GaussianRationals


class StateVector:
    """A column of field elements; states are nonzero but the type allows 0."""

    __slots__ = ("owner", "entries")

    def __init__(self, owner: FieldDescriptor, entries: Sequence):
        if len(entries) < 1:
            raise DimensionMismatch("vectors need at least one entry")
        self.owner = owner
        self.entries = tuple(owner.element(v) for v in entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def basis_vector(cls, owner: FieldDescriptor, dim: int, k: int) -> StateVector:
        return cls(owner, [1 if j == k else 0 for j in range(dim)])

    def _check(self, other: StateVector) -> None:
        if self.owner != other.owner:
            raise FieldMismatch("vectors live in different fields")
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")

    def __add__(self, other: StateVector) -> StateVector:
        self._check(other)
        return StateVector(self.owner, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: StateVector) -> StateVector:
        self._check(other)
        return StateVector(self.owner, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> StateVector:
        return StateVector(self.owner, [-a for a in self.entries])

    def scale(self, c: Element) -> StateVector:
        return StateVector(self.owner, [c * a for a in self.entries])

    def conj(self) -> StateVector:
        return StateVector(self.owner, [a.conj() for a in self.entries])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def sort_key(self):
        return tuple(a.sort_key() for a in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> Element:
        return self.entries[k]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StateVector)
            and self.owner == other.owner
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.entries) + "]"


class Matrix:
    __slots__ = ("owner", "rows", "cols", "entries")

    def __init__(self, owner: FieldDescriptor, rows: Sequence[Sequence]):
        if len(rows) < 1 or len(rows[0]) < 1:
            raise DimensionMismatch("matrices need at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        self.owner = owner
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(tuple(owner.element(v) for v in r) for r in rows)

    @classmethod
    def identity(cls, owner: FieldDescriptor, n: int) -> Matrix:
        return cls(owner, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, owner: FieldDescriptor, diag: Sequence) -> Matrix:
        n = len(diag)
        elems = [owner.element(d) for d in diag]
        return cls(owner, [[elems[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, owner: FieldDescriptor, n: int, c) -> Matrix:
        return cls.diagonal(owner, [c] * n)

    @classmethod
    def from_columns(cls, owner: FieldDescriptor, columns: Sequence[StateVector]) -> Matrix:
        dim = columns[0].dim
        return cls(owner, [[col[i] for col in columns] for i in range(dim)])

    def entry(self, i: int, j: int) -> Element:
        return self.entries[i][j]

    def row(self, i: int) -> StateVector:
        return StateVector(self.owner, self.entries[i])

    def column(self, j: int) -> StateVector:
        return StateVector(self.owner, [r[j] for r in self.entries])

    def _check_field(self, other) -> None:
        if self.owner != other.owner:
            raise FieldMismatch("operands live in different fields")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(self.owner, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix(self.owner, [[-a for a in r] for r in self.entries])

    def scale(self, c: Element) -> Matrix:
        return Matrix(self.owner, [[c * a for a in r] for r in self.entries])

    def __matmul__(self, other):
        self._check_field(other)
        if isinstance(other, StateVector):
            if self.cols != other.dim:
                raise DimensionMismatch(f"{self.cols} columns vs dim {other.dim}")
            return StateVector(self.owner, [
                _dot(row, other.entries, self.owner) for row in self.entries])
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.cols} columns vs {other.rows} rows")
        cols = [tuple(other.entries[k][j] for k in range(other.rows)) for j in range(other.cols)]
        return Matrix(self.owner, [[_dot(row, col, self.owner) for col in cols]
                                   for row in self.entries])

    def transpose(self) -> Matrix:
        return Matrix(self.owner, [[self.entries[i][j] for i in range(self.rows)]
                                   for j in range(self.cols)])

    def conj_entrywise(self) -> Matrix:
        return Matrix(self.owner, [[a.conj() for a in r] for r in self.entries])

    def map_entries(self, fn: Callable[[Element], Element], owner: FieldDescriptor | None = None) -> Matrix:
        return Matrix(owner or self.owner, [[fn(a) for a in r] for r in self.entries])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.owner == other.owner
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "[" + "; ".join(", ".join(str(a) for a in r) for r in self.entries) + "]"


def _dot(xs, ys, owner) -> Element:
    acc = owner.zero()
    for a, b in zip(xs, ys):
        acc = acc + a * b
    return acc


def herm_form(x: StateVector, y: StateVector) -> Element:
    """<x, y> with the involution applied to the first argument."""
    x._check(y)
    acc = x.owner.zero()
    for a, b in zip(x.entries, y.entries):
        acc = acc + a.conj() * b
    return acc


def conj_transpose(m: Matrix) -> Matrix:
    """The adjoint with respect to herm_form: entrywise involution, then transpose."""
    return m.conj_entrywise().transpose()


def is_hermitian(m: Matrix) -> bool:
    if not m.is_square():
        raise NonSquare("hermitian test needs a square matrix")
    return conj_transpose(m) == m


def is_unitary(m: Matrix) -> bool:
    if not m.is_square():
        raise NonSquare("unitarity test needs a square matrix")
    return conj_transpose(m) @ m == Matrix.identity(m.owner, m.rows)


class Polynomial:
    """Univariate polynomial with field coefficients, low degree first."""

    __slots__ = ("owner", "coeffs")

    def __init__(self, owner: FieldDescriptor, coeffs: Sequence):
        elems = [owner.element(c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        self.owner = owner
        self.coeffs = tuple(elems)

    @classmethod
    def constant(cls, owner: FieldDescriptor, c) -> Polynomial:
        return cls(owner, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.owner.one()

    def coefficient(self, k: int) -> Element:
        return self.coeffs[k] if k <= self.degree else self.owner.zero()

    def evaluate(self, x: Element) -> Element:
        acc = self.owner.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(self.owner, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.owner, [-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.is_zero() or other.is_zero():
            return Polynomial(self.owner, [])
        out = [self.owner.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.owner, out)

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Division known to be remainder-free (Bareiss guarantees it)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead_inv = other.coeffs[-1].inverse()
        qlen = max(len(rem) - len(other.coeffs) + 1, 0)
        quot = [self.owner.zero()] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(other.coeffs) - 1] * lead_inv
            quot[i] = c
            if c.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - c * b
        if any(not c.is_zero() for c in rem):
            raise ArithmeticError("division was not exact")
        return Polynomial(self.owner, quot)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.owner == other.owner
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                terms.append(str(c))
            else:
                var = "x" if k == 1 else f"x^{k}"
                terms.append(var if c == self.owner.one() else f"({c})*{var}")
        return " + ".join(terms)


def char_poly(m: Matrix) -> Polynomial:
    """det(x*I - m) by fraction-free Bareiss elimination; monic of degree n.

    Bareiss's two-term update divides by the previous pivot, and that
    division is exact in any integral domain, so no characteristic-specific
    integer divisions appear (Leverrier-style traces would divide by k!).
    """
    if not m.is_square():
        raise NonSquare("characteristic polynomial needs a square matrix")
    f = m.owner
    n = m.rows
    work: list[list[Polynomial]] = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Polynomial(f, [-m.entry(i, j), f.one()]))
            else:
                row.append(Polynomial(f, [-m.entry(i, j)]))
        work.append(row)
    sign = 1
    prev = Polynomial.constant(f, 1)
    for k in range(n - 1):
        if work[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not work[i][k].is_zero()), None)
            if pivot_row is None:
                raise ArithmeticError("unexpected zero column in Bareiss sweep")
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = num.exact_div(prev)
            work[i][k] = Polynomial(f, [])
        prev = work[k][k]
    det = work[n - 1][n - 1]
    if sign < 0:
        det = -det
    if det.degree != n or not det.is_monic():
        raise ArithmeticError("characteristic polynomial lost monicity")
    return det


def _rref(rows: list[list[Element]], field: FieldDescriptor) -> tuple[list[list[Element]], list[int]]:
    """Reduced row echelon form with first-nonzero pivoting (deterministic)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.entries]
    return len(_rref(rows, m.owner)[1])


def null_space(m: Matrix) -> list[StateVector]:
    """Deterministic kernel basis: one vector per free column, in column order."""
    rows = [list(r) for r in m.entries]
    rref, pivots = _rref(rows, m.owner)
    f = m.owner
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [f.zero()] * m.cols
        v[fc] = f.one()
        for r_idx, pc in enumerate(pivots):
            v[pc] = -rref[r_idx][fc]
        basis.append(StateVector(f, v))
    return basis


def solve(m: Matrix, b: StateVector) -> StateVector:
    """One exact solution of m x = b (free variables set to zero)."""
    m._check_field(b)
    if m.rows != b.dim:
        raise DimensionMismatch(f"{m.rows} rows vs dim {b.dim}")
    rows = [list(r) + [b[i]] for i, r in enumerate(m.entries)]
    rref, pivots = _rref(rows, m.owner)
    if m.cols in pivots:
        raise Inconsistent("linear system has no solution")
    f = m.owner
    x = [f.zero()] * m.cols
    for r_idx, pc in enumerate(pivots):
        x[pc] = rref[r_idx][m.cols]
    return StateVector(f, x)


@dataclass(frozen=True)
class EigenPair:
    value: Element
    basis: tuple[StateVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class EigenDecomposition:
    pairs: tuple[EigenPair, ...]
    complete: bool

    @property
    def eigenvalues(self) -> tuple[Element, ...]:
        return tuple(p.value for p in self.pairs)

    @property
    def total_dimension(self) -> int:
        return sum(p.dimension for p in self.pairs)


def eigen_decompose(m: Matrix) -> EigenDecomposition:
    """All eigenvalues in the owner field, with deterministic eigenbases.

    Finite fields are scanned exhaustively for roots of the characteristic
    polynomial.  Over Q(i) the roots are recovered from Gaussian-integer
    divisors of the scaled constant term, which finds every Gaussian-rational
    root; roots outside the owner field are reported only through
    complete=False.
    """
    cp = char_poly(m)
    f = m.owner
    if f.is_finite:
        roots = [lam for lam in f.elements() if cp.evaluate(lam).is_zero()]
    else:
        roots = _gaussian_rational_roots(cp)
    pairs = []
    total = 0
    for lam in roots:
        basis = null_space(m - Matrix.scalar(f, m.rows, lam))
        if not basis:
            raise ArithmeticError("char poly root with trivial eigenspace")
        pairs.append(EigenPair(lam, tuple(basis)))
        total += len(basis)
    return EigenDecomposition(tuple(pairs), total == m.rows)


def _gaussian_rational_roots(cp: Polynomial) -> list[Element]:
    """Every root of cp lying in Q(i); cp is monic with Q(i) coefficients.

    Scaling mu = D*x turns cp into a monic Z[i] polynomial, whose Q(i) roots
    are Gaussian integers dividing the constant term (Z[i] is integrally
    closed), so enumerating Gaussian divisors is exhaustive.
    """
    f = cp.owner
    assert isinstance(f, GaussianRationals) and cp.is_monic()
    n = cp.degree
    if n == 0:
        return []
    denoms = [frac.denominator for c in cp.coeffs for frac in c.payload]
    d_scale = math.lcm(*denoms)
    scaled: list[tuple[int, int]] = []
    for k, c in enumerate(cp.coeffs):
        re_s = c.payload[0] * d_scale ** (n - k)
        im_s = c.payload[1] * d_scale ** (n - k)
        assert re_s.denominator == 1 and im_s.denominator == 1
        scaled.append((int(re_s), int(im_s)))
    roots: set[Element] = set()
    while len(scaled) > 1 and scaled[0] == (0, 0):
        roots.add(f.zero())
        scaled.pop(0)
    if len(scaled) > 1:
        for mu in gaussian_divisors(scaled[0]):
            lam = f.element((Fraction(mu[0], d_scale), Fraction(mu[1], d_scale)))
            if cp.evaluate(lam).is_zero():
                roots.add(lam)
    return sorted(roots, key=lambda x: x.sort_key())
