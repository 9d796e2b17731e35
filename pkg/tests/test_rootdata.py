from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hsrigid.rootdata import (
    RootDataError,
    SimpleComponent,
    build_root_datum,
    parse_components,
)

ALL_SIMPLE = [(s, n) for s in "ABCD" for n in range(1, 9)
              if (s, n) not in {("B", 1), ("C", 1), ("D", 1), ("D", 2)}]
ALL_SIMPLE += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("series,n", ALL_SIMPLE)
def test_positive_root_count_matches_classical_formula(series, n):
    datum = build_root_datum([f"{series}{n}"])
    assert len(datum.positive_roots) == oracles.positive_root_count(series, n)
    assert all(min(r) >= 0 for r in datum.positive_roots)


@pytest.mark.parametrize("series,n", ALL_SIMPLE)
def test_cartan_inverse_and_sym_form_invariants(series, n):
    d = build_root_datum([f"{series}{n}"])
    ell = d.rank
    for i in range(ell):
        for j in range(ell):
            assert sum(d.cartan[i][k] * d.cartan_inverse[k][j] for k in range(ell)) == (i == j)
            assert d.cartan_inverse[i][j] >= 0
            assert Fraction(2 * d.sym_form[i][j], d.sym_form[j][j]) == d.cartan[j][i]
            assert d.sym_form[i][j] == d.sym_form[j][i]
        assert d.cartan_inverse[i][i] > 0


@pytest.mark.parametrize("key", sorted(oracles.HIGHEST_ROOT))
def test_highest_roots(key):
    series, n = key
    assert build_root_datum([f"{series}{n}"]).highest_root() == oracles.HIGHEST_ROOT[key]


@pytest.mark.parametrize("n", range(1, 8))
def test_type_a_inverse_cartan_closed_form(n):
    d = build_root_datum([f"A{n}"])
    assert [list(r) for r in d.cartan_inverse] == oracles.a_inverse_cartan(n)


def test_rank_one_and_product_examples():
    a1 = build_root_datum(["A1"])
    assert a1.cartan == ((2,),)
    assert a1.cartan_inverse == ((Fraction(1, 2),),)
    assert a1.positive_roots == ((1,),)
    b2 = build_root_datum(["B2"])
    assert set(b2.positive_roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}
    aa = build_root_datum(parse_components("A2+A2"))
    assert len(aa.positive_roots) == 6
    assert aa.cartan[0][2] == aa.cartan[2][0] == 0 and len(aa.cartan) == 4


def test_pairing_examples():
    a2 = build_root_datum(["A2"])
    assert a2.pairing((1, 0), (1, 0)) == 1
    assert a2.pairing(a2.simple_root(0), (0, 1)) == -1
    b2 = build_root_datum(["B2"])
    # alpha_1 long, alpha_2 short
    assert b2.pairing(b2.simple_root(1), (1, 0)) == -1
    assert b2.pairing(b2.simple_root(0), (0, 1)) == -2
    with pytest.raises(RootDataError):
        b2.pairing((1, 0), (2, 1))


def test_reflection_examples():
    a3 = build_root_datum(["A3"])
    assert a3.reflect((1, 0, 0), 1) == (1, 0, 0)
    alpha1 = a3.simple_root(0)
    assert a3.reflect(alpha1, 0) == tuple(-c for c in alpha1)
    with pytest.raises(IndexError):
        a3.reflect((0, 0, 0), 3)


def test_dominant_representative_examples():
    a1 = build_root_datum(["A1"])
    assert a1.dominant_representative((3,)) == ((3,), 1, 0)
    w, parity, steps = a1.dominant_representative((-2,))
    assert (w, parity, steps) == ((2,), -1, 1)
    a2 = build_root_datum(["A2"])
    # -rho + rho sits on every wall
    assert a2.dot_dominant((-1, 0)) is None


def test_weyl_vector():
    for name in ("A2", "B3", "G2"):
        d = build_root_datum([name])
        rho = d.weyl_vector()
        assert rho == (1,) * d.rank
        for i in range(d.rank):
            simple = tuple(int(j == i) for j in range(d.rank))
            assert d.pairing(rho, simple) == 1
            assert d.inner(rho, d.simple_root(i)) == Fraction(d.sym_form[i][i], 2)


def test_component_validation():
    for bad in ("B1", "D2", "E5", "F3", "G3", "H3"):
        with pytest.raises(RootDataError, match=bad[0]):
            SimpleComponent.parse(bad)
    assert SimpleComponent.parse("c2") == SimpleComponent("C", 2)
    with pytest.raises(RootDataError):
        SimpleComponent.parse("A")


datum_names = st.sampled_from(["A1", "A3", "B3", "C3", "D4", "G2", "F4", "E6", "A2+B2"])


@given(datum_names, st.data())
def test_reflect_is_an_involution(name, data):
    d = build_root_datum(parse_components(name))
    w = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=d.rank, max_size=d.rank)))
    i = data.draw(st.integers(0, d.rank - 1))
    assert d.reflect(d.reflect(w, i), i) == w


@given(datum_names, st.data())
def test_pairing_is_linear(name, data):
    d = build_root_datum(parse_components(name))
    coords = st.lists(st.integers(-5, 5), min_size=d.rank, max_size=d.rank)
    u, v = data.draw(coords), data.draw(coords)
    s, t = data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3))
    root = data.draw(st.sampled_from(d.positive_roots))
    combo = tuple(s * a + t * b for a, b in zip(u, v))
    assert d.pairing(combo, root) == s * d.pairing(u, root) + t * d.pairing(v, root)


@given(datum_names, st.data())
def test_pairing_with_simple_roots_reads_coordinates(name, data):
    d = build_root_datum(parse_components(name))
    w = data.draw(st.lists(st.integers(-5, 5), min_size=d.rank, max_size=d.rank))
    for i in range(d.rank):
        assert d.pairing(w, tuple(int(j == i) for j in range(d.rank))) == w[i]


@pytest.mark.parametrize("name", ["B3", "C4", "G2", "F4", "E6", "D5"])
def test_simple_reflections_permute_roots(name):
    d = build_root_datum([name])
    roots = set(d.positive_roots)
    for r in d.positive_roots:
        rw = d.root_to_weight(r)
        for i in range(d.rank):
            img = d.reflect(rw, i)
            coords = d.weight_to_root_coords(img)
            as_root = tuple(int(c) for c in coords)
            assert as_root in roots or tuple(-c for c in as_root) in roots


@given(datum_names, st.data())
def test_dominant_representative_stays_in_orbit(name, data):
    d = build_root_datum(parse_components(name))
    w = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=d.rank, max_size=d.rank)))
    dom, parity, steps = d.dominant_representative(w)
    assert d.is_dominant(dom)
    assert d.inner(dom, dom) == d.inner(w, w)
    assert parity == (-1) ** steps
