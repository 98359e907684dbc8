import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog as scipy_linprog

from tropid.bicyclic import BicyclicElement, b_eval
from tropid.polyfun import (
    BasisMismatch, Cone, Coordinate, MaxPlusPoly, bicyclic_basis, bicyclic_value_polys,
    canonicalize, dominated, equivalent, u2_basis, u2_entry_polys,
)
from tropid.tropical import NEG_INF, TropMatrix, eval_word_matrix

vectors = st.lists(st.integers(-3, 3), min_size=3, max_size=3).map(tuple)
vector_sets = st.sets(vectors, min_size=1, max_size=6)


def _coords(d):
    return tuple(Coordinate(f"v{i}", "a") for i in range(d))


def _poly(vecs):
    vecs = list(vecs)
    return MaxPlusPoly.from_vectors(_coords(len(vecs[0])), vecs)


def _scipy_dominated(e, S, cone):
    # feasibility of sum l_s s (=, or >= on the orthant) e with l a convex combination
    S = list(S)
    d, m = len(e), len(S)
    A_eq = [[1.0] * m]
    b_eq = [1.0]
    A_ub, b_ub = [], []
    for k in range(d):
        row = [float(s[k]) for s in S]
        if cone is Cone.FULL:
            A_eq.append(row)
            b_eq.append(float(e[k]))
        else:
            A_ub.append([-v for v in row])
            b_ub.append(-float(e[k]))
    res = scipy_linprog([0.0] * m, A_ub=A_ub or None, b_ub=b_ub or None, A_eq=A_eq, b_eq=b_eq,
                        bounds=[(0, None)] * m, method="highs")
    return res.status == 0


def test_small_examples():
    S = [(0, 0), (2, 1)]
    over_orthant = dominated((1, 0), S, Cone.ORTHANT)
    assert over_orthant
    # (1, 0) is not below any single monomial, only below their midpoint
    mid = dominated((1, 1), [(0, 2), (2, 0)], Cone.ORTHANT)
    assert mid and mid.weights == (Fraction(1, 2), Fraction(1, 2))
    full = dominated((1, 0), S, Cone.FULL)
    assert not full
    x = full.point
    assert 1 * x[0] > max(0, 2 * x[0] + x[1])


@settings(max_examples=150, deadline=None)
@given(vectors, vector_sets, st.sampled_from([Cone.FULL, Cone.ORTHANT]))
def test_domination_matches_reference_lp(e, S, cone):
    res = dominated(e, S, cone)
    assert bool(res) == _scipy_dominated(e, S, cone)
    if res:
        S_sorted = sorted(S, reverse=True)
        combo = [sum(w * s[k] for w, s in zip(res.weights, S_sorted)) for k in range(3)]
        assert sum(res.weights) == 1 and all(w >= 0 for w in res.weights)
        if cone is Cone.FULL:
            assert tuple(combo) == e
        else:
            assert all(c >= v for c, v in zip(combo, e))
    else:
        x = res.point
        if cone is Cone.ORTHANT:
            assert all(v >= 0 for v in x)
        dot = lambda u: sum(a * b for a, b in zip(u, x))  # noqa: E731
        assert dot(e) > max(dot(s) for s in S)


@settings(max_examples=100, deadline=None)
@given(vector_sets, st.sampled_from([Cone.FULL, Cone.ORTHANT]))
def test_canonicalize_idempotent_and_value_preserving(S, cone):
    p = _poly(S)
    c = canonicalize(p, cone)
    assert canonicalize(c, cone) == c
    assert c.monomials <= p.monomials
    assert equivalent(p, c, cone)
    rng = random.Random(len(S))
    for _ in range(30):
        pt = [rng.randint(0 if cone is Cone.ORTHANT else -5, 5) for _ in range(3)]
        assert p.evaluate(pt) == c.evaluate(pt)


def test_canonical_form_ignores_redundant_monomials():
    base = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    extra = base + [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    assert canonicalize(_poly(extra), Cone.FULL) == _poly(base)
    assert canonicalize(_poly(base + [(1, 0, 0), (0, 0, 0)]), Cone.ORTHANT) == _poly(base)
    # the origin is a vertex of the full-space hull
    assert canonicalize(_poly(base + [(0, 0, 0)]), Cone.FULL) == _poly(base + [(0, 0, 0)])


def test_equivalent_returns_separating_point():
    p = _poly([(1, 0), (0, 1)])
    q = _poly([(1, 0), (0, 1), (2, -1)])
    eq = equivalent(p, q, Cone.FULL)
    assert not eq
    assert eq.values[0] != eq.values[1]
    assert not equivalent(p, q, Cone.ORTHANT)  # differ at (1, 0)
    assert equivalent(_poly([(1, 1)]), _poly([(0, 0), (2, 2)]), Cone.ORTHANT).equivalent is False
    assert equivalent(_poly([(0, 0), (1, 1), (2, 2)]), _poly([(0, 0), (2, 2)]), Cone.FULL)


def test_basis_mismatch():
    p = MaxPlusPoly.from_vectors(_coords(2), [(1, 0)])
    q = MaxPlusPoly.from_vectors((Coordinate("w", "a"), Coordinate("w", "b")), [(1, 0)])
    with pytest.raises(BasisMismatch):
        equivalent(p, q, Cone.FULL)
    with pytest.raises(BasisMismatch):
        MaxPlusPoly(_coords(2), frozenset([(1, 2, 3)]))


def test_bicyclic_polys_of_xy():
    coords = bicyclic_basis(["x", "y"])
    pB, pA = bicyclic_value_polys(tuple("xy"), coords)
    # B-exponent of B^a1 A^b1 B^a2 A^b2 is max(a1, a1 - b1 + a2)
    assert pB.monomials == {(1, 0, 0, 0), (1, -1, 1, 0)}
    assert pA.monomials == {(0, 1, -1, 1), (0, 0, 0, 1)}


@pytest.mark.parametrize("w", ["xy", "xyyxxyxyyx", "xyzyxxyxyzyx", "zzxzyx"])
def test_bicyclic_polys_match_direct_evaluation(w):
    w = tuple(w)
    variables = list(dict.fromkeys(w))
    pB, pA = bicyclic_value_polys(w)
    raw_B, _ = bicyclic_value_polys(w, canonical=False)
    rng = random.Random("".join(w))
    for _ in range(500):
        phi = {x: BicyclicElement(rng.randint(0, 9), rng.randint(0, 9)) for x in variables}
        pt = [v for x in variables for v in phi[x]]
        value = b_eval(w, phi)
        assert (pB.evaluate(pt), pA.evaluate(pt)) == (value.a, value.b)
        assert raw_B.evaluate(pt) == value.a


def _random_entry(rng):
    return NEG_INF if rng.random() < 0.25 else rng.randint(-6, 6)


@pytest.mark.parametrize("w, classes", [
    ("xy", None), ("xyyxxyxyyx", None), ("ABAAB", [["A", "B"]]), ("xzyzx", [["x", "z"]]),
])
def test_u2_polys_match_matrix_products(w, classes):
    w = tuple(w)
    variables = list(dict.fromkeys(w))
    coords, symbols = u2_basis(variables, classes)
    polys = u2_entry_polys(w, coords, symbols)
    rng = random.Random("".join(w))
    for _ in range(300):
        values = [_random_entry(rng) for _ in coords]
        phi = {x: TropMatrix([[values[symbols[x][0]], values[symbols[x][1]]],
                              [NEG_INF, values[symbols[x][2]]]]) for x in variables}
        M = eval_word_matrix(w, phi)
        assert (polys[0].evaluate(values), polys[1].evaluate(values), polys[2].evaluate(values)) \
            == (M[0, 0], M[0, 1], M[1, 1])


def test_u2_diagonal_classes_share_coordinates():
    coords, symbols = u2_basis(["A", "B"], [["A", "B"]])
    assert len(coords) == 4
    assert symbols["A"][0] == symbols["B"][0] and symbols["A"][2] == symbols["B"][2]
    assert symbols["A"][1] != symbols["B"][1]
