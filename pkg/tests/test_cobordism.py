from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernbound import partitions as P
from chernbound.classes import ChernVector
from chernbound.cobordism import (
    cobordism_space,
    decompose,
    format_coords,
    ideal_contains,
    ideal_I_formula,
    ideal_slice_I,
    ideal_slice_J,
    monomial_vector,
    span_report,
    upper_bound,
    xq_decomposition,
)
from chernbound.errors import PreconditionError
from chernbound.families import alpha_vector, product_chern_vector
from chernbound.report import decomposition_section, family_section, ideals_section, report, spans_section


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_vectors_have_unit_coordinates(n):
    for lam in P.partitions(n):
        coords = decompose(monomial_vector(lam))
        assert coords == {mu: Fraction(mu == lam) for mu in P.partitions(n)}


def test_monomial_vector_is_a_product_of_generators():
    expected = product_chern_vector(product_chern_vector(alpha_vector(3), alpha_vector(1)), alpha_vector(1))
    assert monomial_vector((3, 1, 1)) == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.data())
def test_decompose_inverts_assemble(n, data):
    space = cobordism_space(n)
    coords = {lam: Fraction(data.draw(st.integers(-20, 20)), data.draw(st.integers(1, 5))) for lam in space.basis}
    assert space.decompose(space.assemble(coords)) == coords


def test_decompose_rejects_wrong_dimension():
    with pytest.raises(PreconditionError):
        cobordism_space(3).decompose(ChernVector(2, {(2,): 1}))


def test_ideals_in_dimension_four():
    I, J = ideal_slice_I(4), ideal_slice_J(4)
    assert I.generators == ((3, 1),)
    assert I.rank == 1
    assert set(J.generators) == {(3, 1)}
    assert ideal_contains(J, I) and ideal_contains(I, J)


def test_J_is_strictly_larger_in_dimension_three():
    I, J = ideal_slice_I(3), ideal_slice_J(3)
    assert I.rank == 0 and J.rank == 1
    assert ideal_contains(J, I) and not ideal_contains(I, J)


@pytest.mark.parametrize("n", range(1, 11))
def test_bound_complements_I(n):
    assert ideal_slice_I(n).rank == ideal_I_formula(n)
    assert ideal_slice_I(n).rank + upper_bound(n) == P.count(n)


def test_small_upper_bounds():
    assert [upper_bound(n) for n in range(1, 9)] == [1, 2, 3, 4, 5, 7, 8, 11]


@pytest.mark.parametrize("n", range(1, 9))
def test_span_report_is_consistent(n):
    r = span_report(n)
    assert r.chi_dim == n // 2 + 1
    assert r.sum_dim == r.chi_dim + r.pontryagin_dim - r.intersection_dim
    assert r.sum_dim <= r.upper_bound
    assert set(r.chi_members) <= set(r.sum_members)
    doc = json.loads(json.dumps(r.to_json()))
    assert doc["codim_J"] == P.count(n) - r.J_rank


def test_span_report_needs_positive_dimension():
    with pytest.raises(PreconditionError):
        span_report(0)


def test_family_decomposition_moves_one_coordinate():
    coords = xq_decomposition(5)
    changed = {lam for lam in P.partitions(5) if len({coords[q][lam] for q in coords}) > 1}
    assert changed == {(4, 1)}
    assert set(format_coords(coords[3])) == {P.fmt(lam) for lam in P.partitions(5)}


# -- report sections ---------------------------------------------------------------


def test_family_section():
    single = family_section(4, partition=(2, 2), q=5)
    assert single["slopes"] == [{"partition": [2, 2], "slope": "0", "intercept": "96", "value": "96"}]
    assert single["unbounded"] == []
    full = family_section(4)
    assert {tuple(lam) for lam in full["unbounded"]} == {(1, 1, 1, 1), (2, 1, 1)}
    assert len(full["slopes"]) == P.count(4)


def test_decomposition_section():
    section = decomposition_section(6)
    assert section["moving_coordinate"] == [5, 1]
    assert section["affine"] and section["strictly_monotone"]


@pytest.mark.parametrize("n", [4, 7])
def test_ideals_section(n):
    section = ideals_section(n)
    assert section["match"] and section["I_in_J"] and section["functionals_vanish_on_J"]
    assert section["I_equals_J"] == (n == 4)
    assert section["I_rank"] + section["upper_bound"] == P.count(n)


def test_spans_section_reports_sum_at_four():
    assert spans_section(4)["sum_equals_bound"]
    assert not spans_section(6)["sum_equals_bound"]


def test_report_bounds():
    with pytest.raises(PreconditionError):
        report(3)
    with pytest.raises(PreconditionError):
        report(13)
    doc = report(5)
    assert json.loads(json.dumps(doc)) == doc
    assert doc["sections"]
