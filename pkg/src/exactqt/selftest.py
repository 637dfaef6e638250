"""Deterministic end-to-end invariant suite.

Every check uses frozen inputs or fixed seeds, so two runs on any machine
produce byte-identical reports.  The report is JSON-safe: names, booleans,
and short detail strings only.
"""

from __future__ import annotations

import random

from . import __version__
from .autocode import SemilinearMap, fixed_points, square_is_linear
from .compose import BipartiteState, is_product, no_cloning_witness, tensor_op, tensor_state
from .embed import build_embedding, extend_state
from .errors import EvenExtensionDegree
from .forms import Matrix, StateVector, char_poly, eigen_decompose, herm_form, is_unitary
from .jsonio import matrix_from_json, matrix_to_json
from .lefschetz import curves_meet, eval_closure, eval_finite, lefschetz_sample, parse_sentence, pretty
from .qcore import collapse, make_observable, measure, probability_profile
from .sampling import random_observable_matrix, random_unitary
from .starfield import GaussianRationals, PrimeField, QuadExt


def _check_field_arithmetic() -> str:
    f = QuadExt(3, 1)
    for x in f.elements():
        assert x.conj().conj() == x
        assert (x.conj() * x).is_fixed()
        if not x.is_zero():
            assert x * x.inverse() == f.one()
    assert f.modulus == (1, 0, 1)
    assert QuadExt(2, 1).modulus == (1, 1, 1)
    assert QuadExt(2, 2).modulus == (1, 0, 0, 1, 1)
    assert QuadExt(5, 1).modulus == (1, 1, 1)
    return "inverses, double conjugation, norms, canonical moduli"


def _check_isotropy() -> str:
    f = QuadExt(3, 1)
    v = StateVector(f, ["1", "1+t"])
    assert herm_form(v, v).is_zero()
    iso = 0
    for a in f.elements():
        for b in f.elements():
            w = StateVector(f, [a, b])
            if not w.is_zero() and herm_form(w, w).is_zero():
                iso += 1
        assert (a.conj() * a).is_zero() == a.is_zero()
    assert iso == 32
    return "witness (1, 1+t); 32 isotropic vectors in dimension 2; scalar norm anisotropic"


def _check_empty_spectrum() -> str:
    f = QuadExt(3, 1)
    m = Matrix(f, [["0", "t", "0"], ["2t", "0", "t"], ["0", "2t", "1"]])
    cp = char_poly(m)
    assert [str(c) for c in cp.coeffs] == ["1", "1", "2", "1"]
    dec = eigen_decompose(m)
    assert not dec.pairs and not dec.complete
    return "hermitian 3x3 with empty spectrum in its own field"


def _check_measurement() -> str:
    f = QuadExt(3, 1)
    obs = make_observable(Matrix(f, [["0", "t"], ["2t", "0"]]))
    psi = StateVector(f, ["1", "0"])
    rep = measure(obs, psi)
    weights = {str(o.eigenvalue): str(o.born_weight) for o in rep.outcomes}
    assert weights == {"1": "2", "2": "2"} and str(rep.total_form_value) == "1"
    proj = make_observable(Matrix.diagonal(f, [0, 1]))
    post = collapse(proj, StateVector(f, ["1", "1"]), f.element(0))
    assert post == StateVector(f, ["1", "0"])
    assert collapse(proj, post, f.element(0)) == post
    return "finite born weights and idempotent collapse"


def _check_gaussian_measurement() -> str:
    qi = GaussianRationals()
    obs = make_observable(Matrix.diagonal(qi, [1, 2]))
    psi = StateVector(qi, ["3", "4i"])
    rep = measure(obs, psi)
    assert [str(o.born_weight) for o in rep.outcomes] == ["9", "16"]
    assert str(rep.total_form_value) == "25"
    assert [str(p) for p in probability_profile(psi)] == ["9", "16"]
    return "rational weights 9 + 16 = 25 and matching profile"


def _check_tensor() -> str:
    f = QuadExt(3, 1)
    x = StateVector(f, ["1", "2t"])
    y = StateVector(f, ["1", "t"])
    st = tensor_state(x, y)
    assert [str(c) for c in st.vector] == ["1", "t", "2t", "1"]
    ok, factors = is_product(st)
    assert ok and factors[0] == x and factors[1] == y
    ent = BipartiteState((2, 2), StateVector(f, ["1", "0", "0", "1"]))
    assert is_product(ent) == (False, None)
    a = Matrix(f, [["0", "1"], ["t", "0"]])
    b = Matrix(f, [["1", "t"], ["0", "2"]])
    assert tensor_op(a, b) @ st.vector == tensor_state(a @ x, b @ y).vector
    return "product detection, canonical factors, operator compatibility"


def _check_no_cloning() -> str:
    w = no_cloning_witness(QuadExt(3, 1), 2)
    assert w.linear_image_rank == 2 and w.required_clone_rank == 1
    assert w.cloning_impossible
    return "rank 2 linear image vs rank 1 clone"


def _check_embedding() -> str:
    f = QuadExt(3, 1)
    emb = build_embedding(f, 3)
    cert = emb.certificate
    assert cert.elements_checked == 9 and cert.addition_pairs == 81
    assert cert.involution_compatible and cert.injective
    v = StateVector(f, ["1", "t"])
    w = StateVector(f, ["2t", "1+t"])
    assert emb(herm_form(v, w)) == herm_form(extend_state(emb, v), extend_state(emb, w))
    try:
        build_embedding(f, 2)
        raise AssertionError("even degree accepted")
    except EvenExtensionDegree:
        pass
    return "exhaustive certificate, form preservation, even degree refused"


def _check_sentences() -> str:
    for text in ["E x . x*x + 1 = 0", "A x . E y . y*y = x",
                 "E x . (x = 0 | x = 1) & !(x*x = x)"]:
        assert parse_sentence(pretty(parse_sentence(text))) == parse_sentence(text)
    assert eval_finite("A x . E y . y*y = x", PrimeField(2)) is True
    assert eval_finite("A x . E y . y*y = x", PrimeField(3)) is False
    v3 = eval_closure("E x . x*x + 1 = 0", 3)
    assert v3.value is True and v3.certified and v3.witness_level == 2
    v5 = eval_closure("E x . x*x + 1 = 0", 5)
    assert v5.value is True and v5.certified and v5.witness_level == 1
    return "round trips, finite truths, certified closure witnesses"


def _check_sampling_records() -> str:
    rep = lefschetz_sample("E x . x*x + 1 = 0", primes=(2, 3, 5, 7, 11, 13, 17, 19, 23, 29))
    assert rep.certified_true == 10 and rep.certified_false == 0
    assert all(v.witness_level <= 2 for _, v in rep.verdicts)
    assert rep.conjecture is not None and rep.conjecture.startswith("true")
    assert rep == lefschetz_sample("E x . x*x + 1 = 0",
                                   primes=(2, 3, 5, 7, 11, 13, 17, 19, 23, 29))
    return "ten primes certified, levels at most 2, characteristic 0 conjecture"


def _check_curves() -> str:
    r = curves_meet(3, "x^2 + y^2 + z^2", "x + y + z")
    assert r.meet and r.level == 1 and r.point == ("1", "1", "1")
    r = curves_meet(3, "x^2 + y^2 + 2*z^2", "x^2 + y*z", max_level=4)
    assert r.meet and r.level == 4
    r = curves_meet(2, "x^2 + y*z", "x*y + z^2")
    assert r.meet and r.level == 1 and r.point == ("0", "1", "0")
    return "line meets conic at (1:1:1); a quartic-level pair resolves at level 4"


def _check_semilinear() -> str:
    f = QuadExt(3, 1)
    phi = SemilinearMap(Matrix(f, [["0", "1"], ["1", "0"]]), 0)
    assert square_is_linear(phi)
    rep = fixed_points(phi, max_ext=3)
    assert [(p.level, p.coordinates) for p in rep.points] == [(1, ("1", "1")), (1, ("1", "2"))]
    anti = SemilinearMap(Matrix.identity(f, 2), 1)
    rep = fixed_points(anti, max_ext=3)
    by_level = {}
    for p in rep.points:
        by_level[p.level] = by_level.get(p.level, 0) + 1
    assert by_level == {1: 4, 3: 24} and rep.levels_scanned == (1, 3)
    return "linear fixed directions and antilinear point counts 4 and 24"


def _check_generators() -> str:
    f = QuadExt(3, 1)
    u1 = random_unitary(random.Random(7), f, 3)
    u2 = random_unitary(random.Random(7), f, 3)
    assert u1 == u2 and is_unitary(u1)
    obs = make_observable(random_observable_matrix(random.Random(11), f, 2))
    assert obs.complete
    return "seeded unitary generator is stable and exact"


def _check_json_roundtrip() -> str:
    f = QuadExt(3, 1)
    m = Matrix(f, [["1", "t"], ["2t", "1+2t"]])
    assert matrix_from_json(matrix_to_json(m)) == m
    qi = GaussianRationals()
    m2 = Matrix(qi, [["3/2+4i", "-i"], ["0", "7"]])
    assert matrix_from_json(matrix_to_json(m2)) == m2
    return "matrix serialization round trips in both backends"


_CHECKS = (
    ("field-arithmetic", _check_field_arithmetic),
    ("isotropy", _check_isotropy),
    ("empty-spectrum", _check_empty_spectrum),
    ("measurement", _check_measurement),
    ("gaussian-measurement", _check_gaussian_measurement),
    ("tensor", _check_tensor),
    ("no-cloning", _check_no_cloning),
    ("embedding", _check_embedding),
    ("sentences", _check_sentences),
    ("sentence-sampling", _check_sampling_records),
    ("curves", _check_curves),
    ("semilinear", _check_semilinear),
    ("generators", _check_generators),
    ("json-roundtrip", _check_json_roundtrip),
)


def run_selftest() -> dict:
    checks = []
    for name, fn in _CHECKS:
        try:
            detail = fn()
            checks.append({"name": name, "passed": True, "detail": detail})
        except Exception as exc:  # a failing invariant must not kill the report
            checks.append({"name": name, "passed": False,
                           "detail": f"{type(exc).__name__}: {exc}"})
    return {
        "version": __version__,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
        "total": len(checks),
        "failures": sum(1 for c in checks if not c["passed"]),
    }
