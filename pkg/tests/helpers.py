"""Shared test utilities: random bundles and evaluation of Chern polynomials at numeric roots."""

from __future__ import annotations

import random
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import prod

from chernbound.catalog import manifold
from chernbound.classes import ChernData
from chernbound.projective import BundleOnBase

BASES = [
    "point",
    "pp1",
    "pp2",
    "pp3",
    "curve(0)",
    "curve(1)",
    "curve(3)",
    "abelian(2)",
    "dolgachev(1,1,3)",
    "pp1 x pp1",
    "pp1 x curve(2)",
    "pp2 x pp1",
    "pp1 x pp1 x pp1",
]


def random_class(rng: random.Random, ring, degree: int, spread: int = 3):
    names = ring.basis_of_degree(degree)
    return ring.element({name: rng.randint(-spread, spread) for name in names})


def random_bundle(rng: random.Random, max_dim: int = 6, max_rank: int = 4) -> BundleOnBase:
    while True:
        base = manifold(rng.choice(BASES))
        k = rng.randint(1, max_rank)
        if base.dimension + k - 1 <= max_dim and base.dimension + k - 1 >= 1:
            break
    ring = base.ring
    length = min(k, ring.dimension)
    classes = [random_class(rng, ring, 2 * i) for i in range(1, length + 1)]
    return BundleOnBase(base.tangent, ChernData(ring, k, classes))


def elementary(roots, i: int) -> Fraction:
    if i == 0:
        return Fraction(1)
    return sum((prod(c) for c in combinations(roots, i)), Fraction(0))


def evaluate_at_roots(functional, roots) -> Fraction:
    """Value of a Chern polynomial with ``c_i`` replaced by ``e_i(roots)``."""
    e = [elementary(roots, i) for i in range(functional.dimension + 1)]
    return sum((c * prod(e[p] for p in lam) for lam, c in functional.coefficients.items()), Fraction(0))


def random_roots(rng: random.Random, n: int, spread: int = 5) -> list[Fraction]:
    return [Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(n)]


@lru_cache(maxsize=None)
def sympy_genus_coefficients(order: int) -> tuple[tuple[Fraction, ...], ...]:
    """Taylor coefficients of ``x(1 + y e^-x)/(1 - e^-x)`` up to ``x^order``.

    Entry k lists the coefficients of ``y^0, y^1, ...`` in the ``x^k`` term.
    """
    import sympy as sp

    x, y = sp.symbols("x y")
    series = sp.series(x * (1 + y * sp.exp(-x)) / (1 - sp.exp(-x)), x, 0, order + 1).removeO()
    poly = sp.Poly(sp.expand(series), x, y)
    out = []
    for k in range(order + 1):
        out.append(tuple(Fraction(int(c.p), int(c.q)) for c in (poly.coeff_monomial(x**k * y**j) for j in range(2))))
    return tuple(out)


def _ymul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return out


def genus_at_roots(roots, order: int) -> list[Fraction]:
    """Degree-``order`` part of ``prod_i Q(r_i)``: its coefficients of ``y^0..y^order``."""
    q = sympy_genus_coefficients(max(order, 8))
    # series in t whose coefficients are polynomials in y
    total = [[Fraction(1)]] + [[Fraction(0)] for _ in range(order)]
    for r in roots:
        factor = [[c * r**k for c in q[k]] for k in range(order + 1)]
        new = [[Fraction(0)] for _ in range(order + 1)]
        for i in range(order + 1):
            for j in range(order + 1 - i):
                prod_ij = _ymul(total[i], factor[j])
                acc = new[i + j]
                acc += [Fraction(0)] * (len(prod_ij) - len(acc))
                new[i + j] = [a + b for a, b in zip(acc, prod_ij)]
        total = new
    top = total[order]
    return top + [Fraction(0)] * (order + 1 - len(top))
