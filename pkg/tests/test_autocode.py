"""Semilinear maps, the squaring dichotomy, and projective fixed points."""

import itertools
import random

import pytest

from exactqt import (
    Matrix,
    PrimeField,
    QuadExt,
    SemilinearMap,
    StateVector,
    eigen_decompose,
    fixed_points,
    involute,
    square_is_linear,
)
from exactqt.errors import DimensionMismatch, FieldMismatch, ImproperField, NonSquare
from exactqt.sampling import random_invertible, random_semilinear, random_state

F9 = QuadExt(3, 1)


def test_construction_guards():
    with pytest.raises(ImproperField):
        SemilinearMap(Matrix.identity(PrimeField(3), 2), 1)
    with pytest.raises(NonSquare):
        SemilinearMap(Matrix(F9, [["1", "0", "0"], ["0", "1", "0"]]), 0)
    with pytest.raises(ValueError):
        SemilinearMap(Matrix.identity(F9, 2), 2)


def test_apply_conjugates_before_matrix():
    phi = SemilinearMap(Matrix.identity(F9, 2), 1)
    psi = StateVector(F9, ["t", "1"])
    assert phi.apply(psi) == StateVector(F9, ["2t", "1"])
    with pytest.raises(FieldMismatch):
        phi.apply(StateVector(QuadExt(5, 1), ["1", "0"]))
    with pytest.raises(DimensionMismatch):
        phi.apply(StateVector(F9, ["1", "0", "0"]))


def test_apply_is_projectively_well_defined():
    rng = random.Random(89)
    for _ in range(40):
        phi = random_semilinear(rng, F9, 3)
        psi = random_state(rng, F9, 3)
        c = F9.element(rng.randrange(1, 9))
        lhs = phi.apply(psi.scale(c))
        rhs = phi.apply(psi)
        scale = involute(c) if phi.twist else c
        assert lhs == rhs.scale(scale)


def test_compose_matches_pointwise_application():
    rng = random.Random(97)
    for t1 in (0, 1):
        for t2 in (0, 1):
            m1 = random_invertible(rng, F9, 2)
            m2 = random_invertible(rng, F9, 2)
            phi1 = SemilinearMap(m1, t1)
            phi2 = SemilinearMap(m2, t2)
            chain = phi1.compose(phi2)
            assert chain.twist == (t1 + t2) % 2
            for _ in range(10):
                psi = random_state(rng, F9, 2)
                assert chain.apply(psi) == phi1.apply(phi2.apply(psi))


def test_square_is_always_linear():
    rng = random.Random(101)
    for _ in range(60):
        phi = random_semilinear(rng, F9, rng.randint(1, 3))
        assert square_is_linear(phi)
        sq = phi.compose(phi)
        assert sq.twist == 0
        psi = random_state(rng, F9, phi.dim)
        assert sq.apply(psi) == phi.apply(phi.apply(psi))


def normalized_reps(field, dim):
    for c in itertools.product(field.elements(), repeat=dim):
        v = StateVector(field, list(c))
        if v.is_zero():
            continue
        pivot = next(e for e in v if not e.is_zero())
        if pivot == field.one():
            yield v


def pg_scan(phi: SemilinearMap):
    """Oracle: every normalized rep psi with M psi^(gamma^twist) || psi."""
    hits = []
    for psi in normalized_reps(phi.owner, phi.dim):
        image = phi.apply(psi)
        pivot = next(i for i in range(psi.dim) if not psi[i].is_zero())
        lam = image[pivot]
        if lam.is_zero():
            continue
        if image == psi.scale(lam):
            hits.append(tuple(str(e) for e in psi))
    return sorted(hits)


def test_linear_fixed_points_match_eigen_oracle():
    rng = random.Random(103)
    for _ in range(25):
        dim = rng.randint(2, 3)
        phi = SemilinearMap(random_invertible(rng, F9, dim), 0)
        report = fixed_points(phi, max_ext=1)
        got = sorted(p.coordinates for p in report.points)
        assert got == pg_scan(phi)
        dec = eigen_decompose(phi.matrix)
        expected_count = sum(
            (F9.order ** p.dimension - 1) // (F9.order - 1) for p in dec.pairs)
        assert len(report.points) == expected_count


def test_antilinear_points_satisfy_defining_equation():
    from exactqt import build_embedding, extend_matrix

    rng = random.Random(107)
    for _ in range(15):
        phi = SemilinearMap(random_invertible(rng, F9, 2), 1)
        report = fixed_points(phi, max_ext=3)
        assert report.twist == 1
        for pt in report.points:
            fld = QuadExt(3, pt.level)
            lifted = (phi.matrix if pt.level == 1 else
                      extend_matrix(build_embedding(F9, pt.level), phi.matrix))
            psi = StateVector(fld, [fld.element(c) for c in pt.coordinates])
            lam = fld.element(pt.multiplier)
            assert not lam.is_zero()
            assert lifted @ psi.conj() == psi.scale(lam)


def test_antilinear_identity_point_counts():
    # psi^gamma = lam psi on normalized reps means every coordinate lies in
    # the fixed field: P^1(F_3) at level 1, P^1(F_27)'s new points at level 3
    phi = SemilinearMap(Matrix.identity(F9, 2), 1)
    report = fixed_points(phi, max_ext=3)
    by_level = {}
    for pt in report.points:
        by_level[pt.level] = by_level.get(pt.level, 0) + 1
    assert by_level == {1: 4, 3: 24}
    assert all(pt.form_compatible for pt in report.points)


def test_even_levels_skipped_by_default():
    phi = SemilinearMap(Matrix.identity(F9, 2), 1)
    report = fixed_points(phi, max_ext=4)
    assert all(pt.level % 2 == 1 for pt in report.points)
    assert any("level 2" in note for note in report.notes)
    assert any("level 4" in note for note in report.notes)


def test_form_incompatible_levels_opt_in():
    # char poly x^2 - (1+t) is irreducible over F_9 (1+t generates F_9*),
    # so the eigenvalues live at level 2, reachable only without the form
    m = Matrix(F9, [["0", "1+t"], ["1", "0"]])
    phi = SemilinearMap(m, 0)
    narrow = fixed_points(phi, max_ext=2)
    assert narrow.points == ()
    assert narrow.bound_too_small
    wide = fixed_points(phi, max_ext=2, include_form_incompatible=True)
    assert len(wide.points) == 2
    assert all(pt.level == 2 and not pt.form_compatible for pt in wide.points)


def test_fixed_points_deduplicates_transported_points():
    phi = SemilinearMap(Matrix.identity(F9, 2), 0)
    report = fixed_points(phi, max_ext=3)
    level1 = [pt for pt in report.points if pt.level == 1]
    level3 = [pt for pt in report.points if pt.level == 3]
    # identity fixes all of P^1: 4 points over F_9, 91 - 10 lifted... the
    # level-3 list must not repeat any transported level-1 representative
    assert len(level1) == (81 - 1) // (9 - 1)
    from exactqt import build_embedding

    emb = build_embedding(F9, 3)
    transported = {tuple(str(emb(F9.element(c))) for c in pt.coordinates)
                   for pt in level1}
    assert transported.isdisjoint({pt.coordinates for pt in level3})


def test_singular_matrix_rejected():
    with pytest.raises(ValueError):
        fixed_points(SemilinearMap(Matrix(F9, [["1", "1"], ["1", "1"]]), 0))


def test_report_is_deterministic():
    rng = random.Random(109)
    phi = SemilinearMap(random_invertible(rng, F9, 2), 1)
    a = fixed_points(phi, max_ext=3).to_json()
    b = fixed_points(phi, max_ext=3).to_json()
    assert a == b
