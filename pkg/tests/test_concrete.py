from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hsrigid import linalg
from hsrigid.catalog import load_catalog
from hsrigid.concrete import (
    ConcreteError,
    GradedModule,
    GradedSubspace,
    PolynomialMap,
    fundamental_form_dims,
    iota_closure_check,
    prolong,
    realize_nu,
    spencer_bruteforce,
    spencer_bruteforce_module,
    trace_orthogonal_complement,
)
from hsrigid.concrete import models
from hsrigid.concrete import poly as P
from hsrigid.concrete.complex import degree_data, module_from_gl_subspace, nonzero_degrees
from hsrigid.concrete.jets import bracket
from hsrigid.concrete.prolong import is_nu_stable, killing_form_gl, trace_form


def pipeline(pmap):
    profile, F = fundamental_form_dims(pmap)
    data = realize_nu(F)
    return profile, F, data, prolong(data)


@pytest.mark.parametrize("pmap,dims", [
    (models.segre([1, 1]), (1, 2, 1)),
    (models.segre([1, 2]), (1, 3, 2)),
    (models.segre([2, 2]), (1, 4, 4)),
    (models.veronese(2, 2), (1, 2, 3)),
    (models.quadric(3), (1, 3, 1)),
    (models.grassmannian(2, 4), (1, 4, 1)),
    (models.veronese(1, 3), (1, 1, 1, 1)),
])
def test_jet_profiles(pmap, dims):
    profile, F = fundamental_form_dims(pmap)
    assert profile.dims == dims == F.dims
    assert F.pieces[0] == (P.const(pmap.n),)
    assert all(P.degree(b) == r for r, b in F.basis())


def test_base_point_moves_do_not_change_the_profile():
    moved = PolynomialMap(2, models.segre([1, 1]).coords, (Fraction(1), Fraction(-2)))
    assert fundamental_form_dims(moved)[0].dims == (1, 2, 1)


def test_degenerate_charts_rejected():
    z = P.var(2, 0)
    with pytest.raises(ConcreteError, match="degenerate chart"):
        fundamental_form_dims(PolynomialMap(2, (P.const(2), z, z), ()))
    with pytest.raises(ConcreteError, match="constant function"):
        fundamental_form_dims(PolynomialMap(1, (P.var(1, 0),), ()))
    with pytest.raises(ConcreteError, match="gap"):
        fundamental_form_dims(PolynomialMap(1, (P.const(1), P.mul(P.var(1, 0), P.var(1, 0))), ()))
    with pytest.raises(ConcreteError, match="wrong dimension"):
        PolynomialMap(2, (P.const(2),), (Fraction(0),))


def test_iota_closure_failure_has_a_witness():
    # F^1 = <z1>, F^2 = <z2^2>: d/dz2 of z2^2 is 2 z2, not in F^1
    F = GradedSubspace(2, ((P.const(2),), (P.var(2, 0),), (P.mul(P.var(2, 1), P.var(2, 1)),)))
    ok, witness = iota_closure_check(F)
    assert not ok
    assert witness.direction == 1 and witness.degree == 2
    assert witness.image == P.scale(P.var(2, 1), 2)
    with pytest.raises(ConcreteError, match="not closed"):
        realize_nu(F)


def test_full_symmetric_algebra_is_closed():
    n = 3
    pieces = tuple(tuple({e: Fraction(1)} for e in P.monomials(n, r)) for r in range(4))
    assert iota_closure_check(GradedSubspace(n, pieces)) == (True, None)


def test_nu_for_p1_times_p1():
    _, F, data, _ = pipeline(models.segre([1, 1]))
    assert data.dim_S == 4 and data.n == 2
    for M in data.nu:
        assert {v for row in M for v in row} <= {0, 1}
        # constants are killed
        assert all(M[r][0] == 0 for r in range(4))
    assert not any(any(row) for row in bracket(data.nu[0], data.nu[1]))


@pytest.mark.parametrize("pmap,dims", [
    (models.veronese(1, 1), (1, 2, 1, 0)),
    (models.segre([1, 1]), (2, 3, 2, 0)),
    (models.segre([2, 2]), (4, 9, 4, 0)),
    (models.segre([1, 2]), (3, 6, 3, 0)),
    (models.quadric(3), (3, 5, 3, 0)),
])
def test_prolongation_dims(pmap, dims):
    assert pipeline(pmap)[3].dims == dims


def test_gperp_for_p2_times_p2():
    _, _, data, g = pipeline(models.segre([2, 2]))
    gperp = trace_orthogonal_complement(data, g)
    assert sum(len(v) for v in gperp.values()) == 64
    assert is_nu_stable(data, gperp)
    assert nonzero_degrees(spencer_bruteforce(data, gperp)) == {0: 16}


def test_gperp_for_p1_times_p2_has_degree_one_class():
    _, _, data, g = pipeline(models.segre([1, 2]))
    gperp = trace_orthogonal_complement(data, g)
    h = nonzero_degrees(spencer_bruteforce(data, gperp))
    assert h == {0: 4, 1: 2}


def test_trivial_module_has_h11_equal_n():
    for n in (1, 2, 4):
        module = GradedModule({0: 1}, tuple({} for _ in range(n)))
        assert spencer_bruteforce_module(module) == {1: n}


def test_killing_form_is_degenerate_on_the_identity():
    m = 3
    ident = {(i, i): Fraction(1) for i in range(m)}
    for a in range(m):
        for b in range(m):
            E = {(a, b): Fraction(1)}
            assert killing_form_gl(m, ident, E) == 0
    assert trace_form(ident, ident) == m
    E12, E21 = {(0, 1): Fraction(1)}, {(1, 0): Fraction(1)}
    assert killing_form_gl(m, E12, E21) == 2 * m * trace_form(E12, E21)


def _catalog_models():
    return [e for e in load_catalog().values() if e.has_model]


@pytest.mark.parametrize("entry", _catalog_models(), ids=lambda e: e.name)
def test_d_squared_vanishes_on_catalog_complexes(entry):
    _, _, data, g = pipeline(entry.polynomial_map())
    gperp = trace_orthogonal_complement(data, g)
    module = module_from_gl_subspace(data, gperp)
    if not module.dims:
        # projective space itself: g is all of gl(S)
        assert g.dim == data.dim_S ** 2
        return
    lo, hi = min(module.dims), max(module.dims)
    for p in range(lo + 1, hi + 2):
        dd = degree_data(module, p, check=True)
        # Euler bookkeeping: dims of C^0, C^1, C^2 against H^0, H^1 and coker d1
        assert dd.dim_c0 - dd.dim_c1 + dd.dim_c2 == dd.h0 - dd.h1 + dd.coker_d1
        assert min(dd.h0, dd.h1, dd.coker_d1) >= 0


def test_h0_is_the_common_kernel():
    _, _, data, g = pipeline(models.segre([1, 2]))
    module = module_from_gl_subspace(data, trace_orthogonal_complement(data, g))
    for p, d in module.dims.items():
        stacked = [list(row) for i in range(module.n) for row in (module.act(i, p) or ())]
        kernel = d - linalg.rank(stacked) if stacked else d
        assert degree_data(module, p).h0 == kernel


def test_non_stable_subspace_rejected():
    _, _, data, _ = pipeline(models.segre([1, 1]))
    # a single degree-1 matrix unit whose brackets leave the span
    with pytest.raises(ConcreteError, match="not stable"):
        module_from_gl_subspace(data, {1: [{(1, 0): Fraction(1)}]})


exponents = st.lists(st.integers(0, 3), min_size=2, max_size=2).map(tuple)
polys = st.dictionaries(exponents, st.fractions(min_value=-5, max_value=5, max_denominator=6),
                        max_size=5).map(P.clean)


@given(polys)
def test_sparse_json_roundtrip(p):
    assert P.from_sparse_json(P.to_sparse_json(p), 2) == p


@given(polys, polys)
def test_leibniz_rule(p, q):
    for i in range(2):
        lhs = P.derivative(P.mul(p, q), i)
        rhs = P.add(P.mul(P.derivative(p, i), q), P.mul(p, P.derivative(q, i)))
        assert lhs == rhs


@given(polys, st.lists(st.integers(-2, 2), min_size=2, max_size=2))
def test_shift_then_unshift(p, base):
    back = [-b for b in base]
    assert P.shift(P.shift(p, base), back) == p


def test_poly_formatting():
    z1, z2 = P.var(2, 0), P.var(2, 1)
    assert P.format_poly(P.sub(P.mul(z1, z1), P.scale(z2, 3))) == "-3*z2 + z1^2"
    assert P.format_poly({}) == "0"
    with pytest.raises(ValueError, match="entries"):
        P.from_sparse_json({"1,0,0": "1"}, 2)
