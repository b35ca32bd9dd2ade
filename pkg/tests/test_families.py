from __future__ import annotations

from fractions import Fraction

import pytest

from chernbound import partitions as P
from chernbound.catalog import manifold, point, projective
from chernbound.classes import ChernVector, chi_functionals, milnor_s
from chernbound.errors import PreconditionError
from chernbound.families import (
    DOLGACHEV_LATTICE,
    DolgachevModel,
    Xq_vector,
    alpha_generator,
    alpha_vector,
    build_Eq,
    build_Yq,
    family_chern,
    family_table,
    product_chern_vector,
)
from chernbound.ring import external_product, integrate


def _Y_classes(q, genus=0, model=DolgachevModel()):
    Y = build_Yq(q, genus, model)
    s, c = Y.ring.factors
    G = external_product(Y.ring, s.symbol("G"), c.one())
    F = external_product(Y.ring, s.one(), c.symbol("F"))
    return Y, G, F


def test_tangent_classes_at_three():
    Y, G, F = _Y_classes(3)
    assert Y.tangent.c(1) == G + 2 * F


@pytest.mark.parametrize("q", [3, 5, 11])
@pytest.mark.parametrize("genus", [0, 1, 3])
def test_tangent_numbers(q, genus):
    Y, _, _ = _Y_classes(q, genus)
    c1, c2, c3 = (Y.tangent.c(i) for i in (1, 2, 3))
    chi = 2 - 2 * genus
    assert integrate(c1**3) == 0
    assert integrate(c1 * c2) == 12 * chi
    assert integrate(c3) == 12 * chi


@pytest.mark.parametrize("q", [4, 1, -3])
def test_bad_q(q):
    with pytest.raises(PreconditionError):
        build_Yq(q)


def test_family_needs_dimension_four():
    with pytest.raises(PreconditionError, match="n >= 4"):
        build_Eq(3, 3)
    with pytest.raises(PreconditionError):
        family_chern((2, 1))


@pytest.mark.parametrize(
    "q, genus, w, t",
    [(3, 0, 1, 1), (5, 0, 1, 1), (3, 2, 3, -1), (7, 1, Fraction(1, 2), 5)],
)
def test_bundle_classes(q, genus, w, t):
    model = DolgachevModel(w, t)
    E = build_Eq(q, 4, genus, model)
    assert E.rank == 2
    assert not E.bundle.c(2)
    Y = build_Yq(q, genus, model)
    value = integrate(Y.tangent.c(1) * E.bundle.c(1) ** 2)
    # c1(Y) c1(E)^2 = ((q-2)G + (2-2g)F)(w pt + 2 omega F)
    assert value == 2 * (q - 2) * t + (2 - 2 * genus) * w
    if (q, genus, w, t) == (3, 0, 1, 1):
        assert value == 4


def test_family_known_slopes():
    assert family_chern((2, 2)).slope == 0
    assert family_chern((1, 1, 1, 1)).slope != 0
    assert family_chern((4, 1)).slope == 0
    assert family_chern((3, 2)).slope != 0


def test_family_polynomial_evaluates():
    poly = family_chern((1, 1, 1, 1))
    for q in (3, 5, 7, 9, 11):
        assert poly(q) == Xq_vector(q, 4)[(1, 1, 1, 1)]


def test_bundle_rank_matches_dimension():
    for n in range(4, 8):
        E = build_Eq(3, n)
        assert E.rank == n - 2
        assert E.dimension == n


@pytest.mark.parametrize("n", [4, 5, 6])
def test_slope_scales_with_t_and_ignores_w(n):
    base = family_table(n, model=DolgachevModel(1, 1))
    for w, t in [(1, 3), (2, 3), (Fraction(5, 2), Fraction(-1, 2))]:
        table = family_table(n, model=DolgachevModel(w, t))
        for lam in P.partitions(n):
            assert table[lam].slope == t * base[lam].slope


@pytest.mark.parametrize("n", [4, 5])
def test_intercept_is_affine_in_w(n):
    tables = [family_table(n, model=DolgachevModel(w, 2)) for w in (1, 2, 3)]
    for lam in P.partitions(n):
        a, b, c = (t[lam].intercept for t in tables)
        assert c - b == b - a


@pytest.mark.parametrize("genus", [1, 2])
def test_other_genera_are_affine(genus):
    table = family_table(5, genus=genus)
    for q in (9, 11):
        v = Xq_vector(q, 5, genus)
        assert all(table[lam](q) == v[lam] for lam in P.partitions(5))


def test_default_model_lattice_witness():
    # odd lattice of signature (1, 9): omega = e0, G = e0 - e1
    plus, minus = DOLGACHEV_LATTICE
    form = [1] * plus + [-1] * minus
    omega = [1] + [0] * 9
    G = [1, 1] + [0] * 8
    dot = lambda x, y: sum(f * a * b for f, a, b in zip(form, x, y))  # noqa: E731
    model = DolgachevModel()
    assert (dot(omega, omega), dot(omega, G), dot(G, G)) == (model.w, model.t, 0)


def test_model_validation():
    with pytest.raises(PreconditionError):
        DolgachevModel(0, 1)
    with pytest.raises(PreconditionError):
        DolgachevModel(1, 0)


# -- generators and products -----------------------------------------------------------


def test_low_generators():
    assert alpha_vector(1) == projective(1).chern_vector()
    assert alpha_vector(1)[(1,)] == 2
    assert alpha_vector(2) == projective(2).chern_vector()


def test_generator_bundle_shape():
    gen = alpha_generator(5)
    assert gen.rank == 4 and gen.base_dimension == 2
    assert not gen.tangent.c(1) and not gen.tangent.c(2)


def test_third_generator():
    v = alpha_vector(3)
    assert milnor_s(3)(v) != 0
    assert all(f(v) == 0 for f in chi_functionals(3))


def test_polarization_changes_the_generator():
    assert alpha_vector(4, 2) != alpha_vector(4, 3)
    assert alpha_vector(4, 3) == alpha_vector(4, Fraction(3))


def test_products_of_lines():
    line = alpha_vector(1)
    quadric = product_chern_vector(line, line)
    assert quadric[(1, 1)] == 8 and quadric[(2,)] == 4
    cube = product_chern_vector(quadric, line)
    assert cube[(1, 1, 1)] == 48


def test_product_unit():
    unit = point().chern_vector()
    assert unit == ChernVector(0, {(): 1})
    v = alpha_vector(3)
    assert product_chern_vector(v, unit) == v == product_chern_vector(unit, v)


@pytest.mark.parametrize("names", [("pp1", "pp1"), ("pp1", "pp2"), ("pp2", "curve(0)"), ("abelian(2)", "pp1")])
def test_product_formula_matches_product_ring(names):
    a, b = (manifold(n) for n in names)
    expected = manifold(" x ".join(names)).chern_vector()
    assert product_chern_vector(a.chern_vector(), b.chern_vector()) == expected


def test_product_is_commutative_and_associative():
    a, b, c = alpha_vector(1), alpha_vector(2), alpha_vector(3)
    assert product_chern_vector(a, b) == product_chern_vector(b, a)
    assert product_chern_vector(product_chern_vector(a, b), c) == product_chern_vector(a, product_chern_vector(b, c))
