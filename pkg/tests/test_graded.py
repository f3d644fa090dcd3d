import pytest
import sympy as sp

from qlie.basis import generators
from qlie.graded import (PreconditionUnverified, filtration_basis, filtration_product_check,
                         graded_component, omega_check, omega_matrix, omega_multiplicativity,
                         render_matrix, zero_divisor_probe)
from qlie.pbw import RewriteSystem, overlap_confluence
from qlie.scalars import ONE, ZERO
from qlie.structure import abelianized, quantum_sl_plus

t = sp.Symbol("t")


def hilbert_series(n, upto):
    """Coefficients of prod 1/(1 - t^(j-i+1)) over the generators, by sympy series."""
    f = sp.Integer(1)
    for g in generators(n):
        f *= 1 / (1 - t ** (g.j - g.i + 1))
    poly = sp.series(f, t, 0, upto + 1).removeO()
    return [int(poly.coeff(t, m)) for m in range(upto + 1)]


GOLDEN = {2: [1, 0, 2, 1, 3, 2, 5], 3: [1, 0, 3, 2, 7, 6, 16], 4: [1, 0, 4, 3, 12, 13, 34]}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_omega_is_bijective_per_level(n):
    s = quantum_sl_plus(n)
    rs = RewriteSystem(s)
    conf = overlap_confluence(rs)
    series = hilbert_series(n, 6)
    for m in range(7):
        r = omega_check(s, m, confluence=conf, rs=rs)
        assert r["injective"] and r["surjective"] and r["filtration_ok"] and r["passed"]
        assert r["dim_G_m"] == r["sorted_word_count"] == series[m]
        if n in GOLDEN:
            assert r["dim_G_m"] == GOLDEN[n][m]


def test_golden_dims_match_series():
    for n, dims in GOLDEN.items():
        assert hilbert_series(n, 6) == dims


def test_omega_n4_level4():
    s = quantum_sl_plus(4)
    r = omega_check(s, 4, assume_confluent=True)
    assert r["passed"] and r["dim_G_m"] == 12


def test_precondition_enforced():
    s = quantum_sl_plus(2)
    with pytest.raises(PreconditionUnverified):
        omega_check(s, 2)
    other = overlap_confluence(RewriteSystem(quantum_sl_plus(3)))
    with pytest.raises(PreconditionUnverified):
        omega_check(s, 2, confluence=other)
    sym = overlap_confluence(RewriteSystem(abelianized(s), "symmetric"))
    with pytest.raises(PreconditionUnverified):
        omega_check(s, 2, confluence=sym)


def test_filtration_bases():
    s = quantum_sl_plus(2)
    assert filtration_basis(s, -1).basis == []
    assert filtration_basis(s, 0).basis == [()]
    assert len(graded_component(s, 4).basis) == 3
    assert len(filtration_basis(s, 4).basis) == 1 + 0 + 2 + 1 + 3


def test_omega_matrix_is_identity():
    s = quantum_sl_plus(3)
    rows, cols, mat = omega_matrix(s, 4)
    for i, r in enumerate(mat):
        for j, v in enumerate(r):
            assert v == (ONE if i == j else ZERO)
    text = render_matrix(4, rows, cols, mat)
    assert text.startswith("# level 4: 7 x 7\n")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_filtration_products(n):
    assert filtration_product_check(quantum_sl_plus(n), 6)["passed"]


def test_omega_multiplicativity():
    assert omega_multiplicativity(quantum_sl_plus(2), 6)["passed"]
    r = omega_multiplicativity(quantum_sl_plus(3), 6)
    # the pseudobracket survives in top degree: e24 e13 keeps its (q - q^-1) term in G
    assert (r["checked"], r["failures"]) == (67, 1)
    assert r["witness"]["left"] == "e(2,4)" and r["witness"]["right"] == "e(1,3)"
    assert r["witness"]["product_in_G"] == "e(1,3)*e(2,4) - (q - q^-1)*e(2,3)*e(1,4)"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_no_zero_divisors(n):
    r = zero_divisor_probe(quantum_sl_plus(n), 2, 100, seed=0)
    assert r["passed"] and r["zero_products"] == 0


def test_probe_is_deterministic_and_validates():
    s = quantum_sl_plus(2)
    assert zero_divisor_probe(s, 2, 10, seed=5) == zero_divisor_probe(s, 2, 10, seed=5)
    with pytest.raises(ValueError):
        zero_divisor_probe(s, 0, 10)
