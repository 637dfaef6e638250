"""Observables, measurement, collapse, projectors, and unitary evolution.

States are nonzero vectors taken projectively; isotropic states (nonzero x
with <x, x> = 0) are unavoidable over F_{q^2} and are admitted everywhere.
Measurement reports two layers per outcome: the modal layer (is the
projection nonzero at all) and the Born layer (an exact form-valued weight),
where the latter is only defined when the eigenspace admits an orthogonal
basis of non-isotropic vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    ImpossibleOutcome,
    IncompleteSpectrum,
    IsotropicVector,
    NotHermitian,
    NotOrthogonal,
    NotUnitary,
    WrongField,
    ZeroState,
)
from .forms import (
    EigenDecomposition,
    Matrix,
    StateVector,
    conj_transpose,
    eigen_decompose,
    herm_form,
    is_hermitian,
    is_unitary,
    solve,
)
from .starfield import Element, GaussianRationals


@dataclass(frozen=True)
class Observable:
    """A Hermitian matrix bundled with its verified spectral data."""

    matrix: Matrix
    spectrum: EigenDecomposition

    @property
    def complete(self) -> bool:
        return self.spectrum.complete

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def owner(self):
        return self.matrix.owner


def make_observable(m: Matrix) -> Observable:
    """Check Hermiticity, decompose, and re-verify every eigenpair exactly."""
    if not is_hermitian(m):
        raise NotHermitian("observables must satisfy conj_transpose(A) = A")
    spectrum = eigen_decompose(m)
    for pair in spectrum.pairs:
        for v in pair.basis:
            if m @ v != v.scale(pair.value):
                raise ArithmeticError("eigenpair failed re-verification")
    return Observable(m, spectrum)


def evolve(u: Matrix, psi: StateVector) -> StateVector:
    """Apply a unitary to a state; exact unitarity is a precondition."""
    if not is_unitary(u):
        raise NotUnitary("evolution requires conj_transpose(U) @ U = I exactly")
    if u.cols != psi.dim:
        raise DimensionMismatch(f"{u.cols} columns vs dim {psi.dim}")
    return u @ psi


@dataclass(frozen=True)
class MeasurementOutcome:
    eigenvalue: Element
    projected_state: StateVector
    modal_possible: bool
    born_weight: Element | None

    @property
    def weight_defined(self) -> bool:
        return self.born_weight is not None


@dataclass(frozen=True)
class MeasurementReport:
    outcomes: tuple[MeasurementOutcome, ...]
    total_form_value: Element

    def outcome_for(self, eigenvalue: Element) -> MeasurementOutcome:
        for outcome in self.outcomes:
            if outcome.eigenvalue == eigenvalue:
                return outcome
        raise ImpossibleOutcome(f"{eigenvalue} is not an eigenvalue")


def _full_eigenbasis(obs: Observable) -> list[StateVector]:
    vectors: list[StateVector] = []
    for pair in obs.spectrum.pairs:
        vectors.extend(pair.basis)
    return vectors


def _decompose(obs: Observable, psi: StateVector) -> list[Element]:
    """Coefficients of psi in the full eigenbasis (unique by completeness)."""
    basis = _full_eigenbasis(obs)
    b_matrix = Matrix.from_columns(obs.owner, basis)
    return list(solve(b_matrix, psi))


def _orthogonalize(basis: tuple[StateVector, ...]) -> list[StateVector] | None:
    """Greedy Gram-Schmidt in input order; None on an isotropic pivot.

    No reordering heuristics: the first vanishing <u, u> aborts, which keeps
    the procedure deterministic and surfaces genuinely isotropic eigenspaces.
    """
    ortho: list[StateVector] = []
    for v in basis:
        u = v
        for w in ortho:
            u = u - w.scale(herm_form(w, u) / herm_form(w, w))
        if herm_form(u, u).is_zero():
            return None
        ortho.append(u)
    return ortho


def measure(obs: Observable, psi: StateVector) -> MeasurementReport:
    """Exact measurement report for a complete observable and nonzero state.

    Per eigenvalue: the projection of psi obtained from the full-eigenbasis
    decomposition, the modal verdict (projection nonzero), and the Born
    weight sum(involute(c) * c / <b, b>) over an orthogonalized eigenspace
    basis with c = <b, psi>, or None when orthogonalization hits an
    isotropic pivot.  Weights, when all defined, sum to <psi, psi>.
    """
    if psi.owner != obs.owner:
        raise FieldMismatch("state and observable live in different fields")
    if psi.dim != obs.dim:
        raise DimensionMismatch(f"dim {psi.dim} vs observable dim {obs.dim}")
    if psi.is_zero():
        raise ZeroState("states are nonzero vectors")
    if not obs.complete:
        raise IncompleteSpectrum("measurement needs a complete eigendecomposition")
    coeffs = _decompose(obs, psi)
    outcomes = []
    offset = 0
    for pair in obs.spectrum.pairs:
        block = coeffs[offset : offset + pair.dimension]
        offset += pair.dimension
        projected = StateVector(obs.owner, [obs.owner.zero()] * psi.dim)
        for c, v in zip(block, pair.basis):
            projected = projected + v.scale(c)
        ortho = _orthogonalize(pair.basis)
        weight = None
        if ortho is not None:
            weight = obs.owner.zero()
            for b in ortho:
                c = herm_form(b, psi)
                weight = weight + c.conj() * c / herm_form(b, b)
        outcomes.append(
            MeasurementOutcome(pair.value, projected, not projected.is_zero(), weight)
        )
    return MeasurementReport(tuple(outcomes), herm_form(psi, psi))


def collapse(obs: Observable, psi: StateVector, eigenvalue: Element) -> StateVector:
    """Post-measurement state: the eigenspace component of psi, exactly.

    Idempotent on its outcome: collapsing the result on the same eigenvalue
    returns the identical vector, hence the same projective point.
    """
    if psi.owner != obs.owner:
        raise FieldMismatch("state and observable live in different fields")
    if psi.dim != obs.dim:
        raise DimensionMismatch(f"dim {psi.dim} vs observable dim {obs.dim}")
    if psi.is_zero():
        raise ZeroState("states are nonzero vectors")
    if not obs.complete:
        raise IncompleteSpectrum("collapse projects along the full eigenbasis")
    target = next((p for p in obs.spectrum.pairs if p.value == eigenvalue), None)
    if target is None:
        raise ImpossibleOutcome(f"{eigenvalue} is not an eigenvalue of the observable")
    coeffs = _decompose(obs, psi)
    offset = 0
    projected = StateVector(obs.owner, [obs.owner.zero()] * psi.dim)
    for pair in obs.spectrum.pairs:
        block = coeffs[offset : offset + pair.dimension]
        offset += pair.dimension
        if pair.value == eigenvalue:
            for c, v in zip(block, pair.basis):
                projected = projected + v.scale(c)
    if projected.is_zero():
        raise ImpossibleOutcome(f"state has zero component in eigenspace of {eigenvalue}")
    return projected


def projector_onto(vectors: list[StateVector]) -> Matrix:
    """P = sum of v v* / <v, v> over pairwise orthogonal non-isotropic vectors.

    The result satisfies P @ P = P and conj_transpose(P) = P exactly.
    """
    if not vectors:
        raise DimensionMismatch("projector needs at least one vector")
    f = vectors[0].owner
    dim = vectors[0].dim
    for v in vectors:
        if v.owner != f:
            raise FieldMismatch("projector vectors live in different fields")
        if v.dim != dim:
            raise DimensionMismatch("projector vectors have mixed dimensions")
        if v.is_zero():
            raise ZeroState("projector vectors must be nonzero")
        if herm_form(v, v).is_zero():
            raise IsotropicVector(f"{v!r} has zero form value")
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if not herm_form(vectors[a], vectors[b]).is_zero():
                raise NotOrthogonal(f"vectors {a} and {b} are not orthogonal")
    total = Matrix(f, [[f.zero()] * dim for _ in range(dim)])
    for v in vectors:
        norm_inv = herm_form(v, v).inverse()
        outer = Matrix(f, [[v[i] * v[j].conj() * norm_inv for j in range(dim)]
                           for i in range(dim)])
        total = total + outer
    assert total @ total == total and conj_transpose(total) == total
    return total


def probability_profile(psi: StateVector) -> list[Fraction]:
    """Entrywise a_k^2 + b_k^2 for a state over Q(i); Q(i)-specific.

    The profile is invariant under entrywise multiplication by unit-norm
    scalars, so it is a function on the torus orbit of the state.
    """
    if not isinstance(psi.owner, GaussianRationals):
        raise WrongField("probability profiles are defined over Q(i) only")
    return [entry.payload[0] ** 2 + entry.payload[1] ** 2 for entry in psi.entries]
