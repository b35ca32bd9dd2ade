"""Per-dimension summaries combining the family, cobordism and span computations.

Each function returns a JSON-ready dict with rationals printed as ``"p/q"``.
"""

from __future__ import annotations

from . import partitions as P
from .classes import chi_functionals, pontryagin_functionals
from .cobordism import (
    cobordism_space,
    ideal_contains,
    ideal_I_formula,
    ideal_slice_I,
    ideal_slice_J,
    monomial_vector,
    span_report,
    upper_bound,
    xq_decomposition,
)
from .errors import PreconditionError
from .families import DolgachevModel, Xq_vector, family_table
from .rational import fmt, to_fraction

__all__ = [
    "family_section",
    "pontryagin_check",
    "decomposition_section",
    "ideals_section",
    "spans_section",
    "report",
]

DEFAULT_QS = (3, 5, 7)


def _collinear(xs, ys) -> bool:
    (x0, y0), (x1, y1) = (xs[0], ys[0]), (xs[1], ys[1])
    return all((y - y0) * (x1 - x0) == (y1 - y0) * (x - x0) for x, y in zip(xs, ys))


def _strictly_monotone(ys) -> bool:
    steps = [b - a for a, b in zip(ys, ys[1:])]
    return all(s > 0 for s in steps) or all(s < 0 for s in steps)


def pontryagin_check(n: int, genus=0, model=DolgachevModel(), qs=DEFAULT_QS) -> list[dict]:
    """Every Pontryagin number of ``X_q`` at the given q values."""
    rows = []
    for mu, f in pontryagin_functionals(n).items():
        values = [f(Xq_vector(q, n, genus, model)) for q in qs]
        rows.append(
            {
                "pontryagin": "p" + "*p".join(str(m) for m in mu),
                "partition": list(mu),
                "values": [fmt(v) for v in values],
                "q_independent": len(set(values)) == 1,
            }
        )
    return rows


def family_section(n: int, genus=0, model=DolgachevModel(), partition=None, q=None) -> dict:
    """Chern numbers of ``X_q`` as affine functions of q."""
    table = family_table(n, genus, model)
    if partition is not None:
        lam = P.normalize(partition)
        if lam not in table:
            raise PreconditionError(f"{P.fmt(lam)} is not a partition of {n}")
        table = {lam: table[lam]}
    rows = []
    for poly in table.values():
        row = poly.to_json()
        if q is not None:
            row["value"] = fmt(poly(q))
        rows.append(row)
    doc = {
        "n": n,
        "model": {"w": fmt(model.w), "t": fmt(model.t), "genus": genus},
        "slopes": rows,
        "unbounded": [list(lam) for lam, poly in table.items() if poly.slope],
    }
    if q is not None:
        doc["q"] = q
    if partition is None and n % 2 == 0:
        doc["pontryagin"] = pontryagin_check(n, genus, model)
    return doc


def decomposition_section(n: int, genus=0, model=DolgachevModel(), polarization=2, qs=DEFAULT_QS) -> dict:
    """Alpha-monomial coordinates of ``X_q``; only the ``(n-1, 1)`` one should move with q."""
    coords = xq_decomposition(n, qs, genus, model, polarization)
    basis = cobordism_space(n, polarization).basis
    key = (n - 1, 1)
    varying = [lam for lam in basis if len({coords[q][lam] for q in qs}) > 1]
    moving = [coords[q][key] for q in qs]
    fixed = {P.fmt(lam): fmt(coords[qs[0]][lam]) for lam in basis if lam != key and coords[qs[0]][lam]}
    slope = (moving[1] - moving[0]) / (qs[1] - qs[0])
    return {
        "n": n,
        "qs": list(qs),
        "varying": [list(lam) for lam in varying],
        "moving_coordinate": list(key),
        "moving_values": [fmt(v) for v in moving],
        "moving_slope": fmt(slope),
        "moving_intercept": fmt(moving[0] - slope * qs[0]),
        "affine": _collinear(qs, moving),
        "strictly_monotone": _strictly_monotone(moving),
        "fixed_coordinates": fixed,
    }


def _vanish_on_J(n: int, polarization) -> bool:
    functionals = list(chi_functionals(n))
    if n % 2 == 0:
        functionals += list(pontryagin_functionals(n).values())
    for lam in ideal_slice_J(n, polarization).generators:
        v = monomial_vector(lam, polarization)
        if any(f(v) for f in functionals):
            return False
    return True


def ideals_section(n: int, polarization=2) -> dict:
    """Ranks of the ideal slices, the rank formula and the complementary bound."""
    if n < 1:
        raise PreconditionError("n must be positive")
    I, J = ideal_slice_I(n, polarization), ideal_slice_J(n, polarization)
    formula = ideal_I_formula(n)
    bound = upper_bound(n)
    contained = ideal_contains(J, I, polarization)
    return {
        "n": n,
        "partitions": P.count(n),
        "I_rank": I.rank,
        "formula": formula,
        "match": I.rank == formula,
        "upper_bound": bound,
        "complementary": I.rank + bound == P.count(n),
        "J_rank": J.rank,
        "I_in_J": contained,
        "I_equals_J": contained and I.rank == J.rank,
        "functionals_vanish_on_J": _vanish_on_J(n, polarization),
    }


def spans_section(n: int) -> dict:
    doc = span_report(n).to_json()
    doc["sum_equals_bound"] = doc["sum_dim"] == doc["upper_bound"]
    return doc


def report(n_max: int, genus=0, model=DolgachevModel(), polarization=2) -> dict:
    """One section per n in ``4..n_max`` with every family, ideal and span number."""
    if not 4 <= n_max <= 12:
        raise PreconditionError("report needs 4 <= n <= 12")
    polarization = to_fraction(polarization)
    return {
        "model": {"w": fmt(model.w), "t": fmt(model.t), "genus": genus, "polarization": fmt(polarization)},
        "sections": [
            {
                "n": n,
                "family": family_section(n, genus, model),
                "decomposition": decomposition_section(n, genus, model, polarization),
                "ideals": ideals_section(n, polarization),
                "spans": spans_section(n),
            }
            for n in range(4, n_max + 1)
        ],
    }
