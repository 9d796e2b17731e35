import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hsrigid.grading import graded_dims, parse_grading
from hsrigid.repmod import (
    IrreducibleModule,
    ModuleDecomposition,
    RepresentationError,
    dual_module,
    fundamental_form_profile,
    gl_decomposition,
    gperp_constituents,
    lowest_weight,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
)
from hsrigid.rootdata import build_root_datum, parse_components

RANK_LE_5 = [f"A{n}" for n in range(1, 6)] + [f"B{n}" for n in range(2, 6)] \
    + [f"C{n}" for n in range(2, 6)] + [f"D{n}" for n in range(3, 6)] + ["G2", "F4"]


def module(name, w):
    return IrreducibleModule(build_root_datum(parse_components(name)), tuple(w))


def test_weyl_dim_examples():
    assert weyl_dim(module("A2", (1, 0))) == 3
    assert weyl_dim(module("A1", (2,))) == 3
    assert weyl_dim(module("D5", (0, 0, 0, 0, 1))) == 16
    assert weyl_dim(module("E7", (0, 0, 0, 0, 0, 0, 1))) == 56
    assert weyl_dim(module("E8", (0, 0, 0, 0, 0, 0, 0, 1))) == 248
    assert weyl_dim(module("G2", (1, 0))) == 7
    assert weyl_dim(module("F4", (0, 0, 0, 1))) == 26


def test_non_dominant_weight_rejected():
    with pytest.raises(RepresentationError, match="dominant"):
        module("A2", (1, -1))
    with pytest.raises(RepresentationError, match="coordinates"):
        module("A2", (1,))


@pytest.mark.parametrize("name", RANK_LE_5)
def test_freudenthal_total_equals_weyl_dim_on_fundamentals(name):
    d = build_root_datum([name])
    for i in range(d.rank):
        m = IrreducibleModule(d, d.fundamental_weight(i))
        table = weight_multiplicities(m).table
        assert sum(table.values()) == weyl_dim(m)
        assert table[m.highest_weight] == 1


@pytest.mark.parametrize("w", [(1, 0, 0), (0, 1, 0), (1, 0, 1), (2, 1, 0), (0, 2, 1), (1, 1, 1)])
def test_freudenthal_matches_tableaux_in_type_a(w):
    m = module("A3", w)
    assert dict(weight_multiplicities(m).table) == dict(oracles.ssyt_weight_multiplicities(w))
    assert weyl_dim(m) == oracles.hook_content_dim(w)


def test_a2_adjoint_and_sl2_strings():
    table = weight_multiplicities(module("A2", (1, 1))).table
    assert table[(0, 0)] == 2
    assert sorted(m for w, m in table.items() if w != (0, 0)) == [1] * 6
    assert dict(weight_multiplicities(module("A1", (2,))).table) == {(2,): 1, (0,): 1, (-2,): 1}


@pytest.mark.parametrize("name,w", [("A2", (1, 1)), ("B3", (0, 1, 0)), ("G2", (0, 1))])
def test_self_dual_tables_are_symmetric(name, w):
    table = weight_multiplicities(module(name, w)).table
    assert all(table.get(tuple(-c for c in k)) == v for k, v in table.items())


def test_dual_examples():
    assert dual_module(module("A2", (1, 0))).highest_weight == (0, 1)
    assert dual_module(module("B2", (1, 0))).highest_weight == (1, 0)
    assert dual_module(module("A3", (0, 1, 0))).highest_weight == (0, 1, 0)
    m = module("E6", (1, 0, 0, 0, 0, 0))
    assert dual_module(dual_module(m)) == m
    assert lowest_weight(module("A2", (1, 0))) == (-0, -1)


def test_tensor_examples():
    assert tensor_decompose(module("A1", (1,)), module("A1", (1,))).as_dict() == {(2,): 1, (0,): 1}
    assert tensor_decompose(module("A2", (1, 0)), module("A2", (0, 1))).as_dict() == {
        (1, 1): 1, (0, 0): 1}
    s = module("A2+A2", (1, 0, 1, 0))
    dec = tensor_decompose(s, dual_module(s))
    assert dec.multiplicity((1, 1, 1, 1)) == 1


def _character_oracle(m1, m2):
    d = m1.datum
    return oracles.character_tensor(
        d, weight_multiplicities(m1).table, weight_multiplicities(m2).table,
        lambda w: weight_multiplicities(IrreducibleModule(d, w)).table,
    )


def test_klimyk_dimension_identity_and_character_oracle_on_random_pairs():
    rng = random.Random(20240611)
    names = ["A2", "A3", "B2", "C3", "G2", "B3", "D4", "A1+A2"]
    checked = 0
    while checked < 50:
        name = rng.choice(names)
        d = build_root_datum(parse_components(name))
        w1 = tuple(rng.randint(0, 2) for _ in range(d.rank))
        w2 = tuple(rng.randint(0, 1) for _ in range(d.rank))
        m1, m2 = IrreducibleModule(d, w1), IrreducibleModule(d, w2)
        if weyl_dim(m1) * weyl_dim(m2) > 3000:
            continue
        dec = tensor_decompose(m1, m2)
        assert dec.dim == weyl_dim(m1) * weyl_dim(m2)
        assert all(m > 0 for _, m in dec.entries)
        assert dec.as_dict() == dict(_character_oracle(m1, m2))
        checked += 1


@pytest.mark.parametrize("spec,w,profile", [
    ("A2:1+A2:1", (1, 0, 1, 0), (1, 4, 4)),
    ("B2:1", (1, 0), (1, 3, 1)),
    ("A2:1", (1, 0), (1, 2)),
    ("A5:1", (1, 0, 0, 0, 0), (1, 5)),
    ("A2:1", (2, 0), (1, 2, 3)),
    ("A4:2", (0, 1, 0, 0), (1, 6, 3)),
    ("E6:1", (1, 0, 0, 0, 0, 0), (1, 16, 10)),
    ("E7:7", (0, 0, 0, 0, 0, 0, 1), (1, 27, 27, 1)),
    ("C3:3", (0, 0, 1), (1, 6, 6, 1)),
    ("D5:5", (0, 0, 0, 0, 1), (1, 10, 5)),
])
def test_profile_examples(spec, w, profile):
    g = parse_grading(spec)
    m = IrreducibleModule(g.datum, w)
    p = fundamental_form_profile(g, m)
    assert p.dims == profile
    assert sum(p.dims) == weyl_dim(m)
    assert p.dims[0] == 1 and p.dims[-1] >= 1


def test_profile_rejects_modules_without_a_line():
    g = parse_grading("A2:1")
    with pytest.raises(RepresentationError, match="lowest Z-eigenspace not a line"):
        fundamental_form_profile(g, IrreducibleModule(g.datum, (1, 1)))


@pytest.mark.parametrize("spec,w", [
    ("A4:2", (0, 1, 0, 0)), ("D5:5", (0, 0, 0, 0, 1)), ("E6:1", (1, 0, 0, 0, 0, 0)),
    ("A2:1+A3:1", (1, 0, 1, 0, 0)), ("B3:1", (1, 0, 0)),
])
def test_dual_grading_reverses_profile(spec, w):
    # V(lambda)* graded by -Z is the same filtration read backwards
    g = parse_grading(spec)
    m = IrreducibleModule(g.datum, w)
    weights = weight_multiplicities(m).table
    levels = Counter()
    for mu, k in weights.items():
        levels[g.z_value(mu)] += k
    top = sorted(levels, reverse=True)
    assert tuple(levels[z] for z in top) == fundamental_form_profile(g, m).dims
    dual_levels = Counter()
    for mu, k in weight_multiplicities(dual_module(m)).table.items():
        dual_levels[g.z_value(mu)] += k
    assert tuple(dual_levels[z] for z in sorted(dual_levels, reverse=True)) == \
        fundamental_form_profile(g, m).dims[::-1]


def test_gl_decomposition_examples():
    g = parse_grading("A1:1")
    assert gl_decomposition(g, IrreducibleModule(g.datum, (1,))).as_dict() == {(2,): 1, (0,): 1}
    g = parse_grading("A2:1+A2:1")
    dec = gl_decomposition(g, IrreducibleModule(g.datum, (1, 0, 1, 0)))
    assert dec.as_dict() == {(0, 0, 0, 0): 1, (1, 1, 0, 0): 1, (0, 0, 1, 1): 1, (1, 1, 1, 1): 1}
    assert dec.dim == 81
    g = parse_grading("E6:1")
    assert gl_decomposition(g, IrreducibleModule(g.datum, (1, 0, 0, 0, 0, 0))).dim == 729


def test_gperp_examples():
    g = parse_grading("A2:1+A2:1")
    dec = gperp_constituents(g, IrreducibleModule(g.datum, (1, 0, 1, 0)))
    assert dec.as_dict() == {(1, 1, 1, 1): 1} and dec.dim == 64
    g = parse_grading("A1:1+A2:1")
    dec = gperp_constituents(g, IrreducibleModule(g.datum, (1, 1, 0)))
    assert dec.multiplicity((2, 1, 1)) == 1
    g = parse_grading("A1:1")
    assert len(gperp_constituents(g, IrreducibleModule(g.datum, (1,)))) == 0


def test_gperp_requires_faithful_module():
    g = parse_grading("A1:1+A2:1")
    with pytest.raises(RepresentationError, match="not faithful"):
        gperp_constituents(g, IrreducibleModule(g.datum, (1, 0, 0)))


@pytest.mark.parametrize("spec,w", [
    ("A4:2", (0, 1, 0, 0)), ("C3:3", (0, 0, 1)), ("E7:7", (0, 0, 0, 0, 0, 0, 1)),
    ("A2:1+A2:1+A2:1", (1, 0, 1, 0, 1, 0)), ("B2:1", (1, 0)), ("A2:1", (2, 0)),
])
def test_gperp_dimension_identity(spec, w):
    g = parse_grading(spec)
    m = IrreducibleModule(g.datum, w)
    dm, d0, dp = graded_dims(g)
    assert gperp_constituents(g, m).dim == weyl_dim(m) ** 2 - (dm + d0 + dp) - 1


@given(st.sampled_from(["A2", "B2", "G2", "A1+A1", "C3"]), st.data())
def test_klimyk_is_symmetric(name, data):
    d = build_root_datum(parse_components(name))
    w1 = tuple(data.draw(st.lists(st.integers(0, 2), min_size=d.rank, max_size=d.rank)))
    w2 = tuple(data.draw(st.lists(st.integers(0, 1), min_size=d.rank, max_size=d.rank)))
    m1, m2 = IrreducibleModule(d, w1), IrreducibleModule(d, w2)
    assert tensor_decompose(m1, m2) == tensor_decompose(m2, m1)


def test_decomposition_helpers():
    d = build_root_datum(["A1"])
    dec = ModuleDecomposition.from_counts(d, {(2,): 1, (0,): 0, (4,): 2})
    assert dec.entries == (((2,), 1), ((4,), 2))
    assert dec.dim == 3 + 2 * 5 and len(dec) == 2
