"""Chern numbers of projectivized vector bundles.

Two independent routes are implemented:

* :func:`chern_number_pbundle` sums base integrals of ``c_J(B) * f(m - J)``
  where :func:`f_class` is a finite sum over Segre classes of the bundle;
* :func:`chern_number_oracle` builds the cohomology ring of ``P(E)`` itself
  (basis ``beta * y^j`` with the Grothendieck relation) together with its
  total Chern class, and integrates there.

Agreement of the two on random bundles is the main correctness check.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, prod
from typing import Iterable, NamedTuple, Sequence

from . import partitions as P
from .classes import ChernData, ChernVector, Manifold, chern_number, segre
from .errors import PreconditionError
from .ring import RingElement, RingPresentation, integrate, truncated_ring

__all__ = [
    "BundleOnBase",
    "f_class",
    "f_closed_form",
    "chern_number_pbundle",
    "pbundle_chern_vector",
    "pbundle_oracle_ring",
    "chern_number_oracle",
    "positivity_scan",
    "PositivityRow",
    "symbolic_bundle",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero if ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


class BundleOnBase:
    """A rank-k bundle E over a base B; ``P(E)`` has dimension ``n_B + k - 1``."""

    def __init__(self, tangent: ChernData, bundle: ChernData):
        if tangent.ring != bundle.ring:
            raise PreconditionError("tangent and bundle classes live in different rings")
        if bundle.rank < 1:
            raise PreconditionError("bundle rank must be at least 1")
        self.tangent = tangent
        self.bundle = bundle
        self._segre: list[RingElement] | None = None
        self._f_cache: dict[tuple[int, ...], RingElement] = {}
        self._term_cache: dict[tuple[int, ...], RingElement] = {}

    @property
    def base(self) -> RingPresentation:
        return self.tangent.ring

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def base_dimension(self) -> int:
        return self.base.dimension

    @property
    def dimension(self) -> int:
        return self.base_dimension + self.rank - 1

    @property
    def segre(self) -> list[RingElement]:
        if self._segre is None:
            self._segre = segre(self.bundle, self.base_dimension)
        return self._segre

    def __repr__(self) -> str:
        return f"BundleOnBase(rank={self.rank}, n_B={self.base_dimension}, bundle={self.bundle!r})"


def symbolic_bundle(k: int, weight: int = 2) -> BundleOnBase:
    """Rank-k bundle with free Chern classes ``e1, e2, ...`` up to the given weight."""
    if weight < 0:
        raise PreconditionError("weight must be nonnegative")
    ring = truncated_ring(range(1, min(k, weight) + 1), weight, prefix="e")
    classes = [ring.symbol(f"e{i}") for i in range(1, min(k, weight) + 1)]
    return BundleOnBase(ChernData(ring, ring.dimension), ChernData(ring, k, classes))


def f_class(a: Sequence[int], bundle: BundleOnBase) -> RingElement:
    """The class f(a) of degree ``2(|a| - (k-1))`` on the base.

    ``f(a) = sum_d prod_i binom(k - d_i, k - a_i) c_{d_i}(E) * s_{|a| - |d| - (k-1)}``
    with ``s`` the Segre classes of E.  Entries of ``a`` are kept in order.
    """
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise PreconditionError(f"negative entry in {a}")
    cached = bundle._f_cache.get(a)
    if cached is not None:
        return cached
    k, nb = bundle.rank, bundle.base_dimension
    ring = bundle.base
    top = sum(a) - (k - 1)
    result = ring.zero()
    if 0 <= top <= nb and all(x <= k for x in a):
        caps = [min(x, k, nb) for x in a]
        for d in P.bounded_tuples(caps, top):
            coeff = prod(binom(k - di, k - ai) for di, ai in zip(d, a))
            if not coeff:
                continue
            term = _segre_term(bundle, top - sum(d), d)
            if term:
                result = result + coeff * term
    bundle._f_cache[a] = result
    return result


def _segre_term(bundle: BundleOnBase, j: int, d: tuple[int, ...]) -> RingElement:
    """``s_j(E) * prod_i c_{d_i}(E)``, memoized on the multiset of nonzero d_i."""
    key = (j,) + P.normalize(d)
    term = bundle._term_cache.get(key)
    if term is None:
        term = bundle.segre[j]
        for di in key[1:]:
            if not term:
                break
            term = term * bundle.bundle.c(di)
        bundle._term_cache[key] = term
    return term


def f_closed_form(a: Sequence[int], bundle: BundleOnBase) -> RingElement:
    """Closed forms of f for weights k-1, k and k+1."""
    a = tuple(int(x) for x in a)
    k = bundle.rank
    ring = bundle.base
    if any(x < 0 or x > k for x in a):
        raise PreconditionError("closed form needs 0 <= a_i <= k")
    w = sum(a)
    scale = prod(binom(k, x) for x in a)
    if w == k - 1:
        return scale * ring.one()
    if w == k:
        return ring.zero()
    if w == k + 1:
        pair_sum = sum(a[s] * a[t] for s in range(len(a)) for t in range(s + 1, len(a)))
        e1, e2 = bundle.bundle.c(1), bundle.bundle.c(2)
        quad = Fraction(1, k * k) * e1 * e1
        if k > 1:
            quad = quad - Fraction(2, k * (k - 1)) * e2
        return scale * (pair_sum - k) * quad
    raise PreconditionError(f"closed form unavailable for weight {w} with k={k}")


def _check_weight(m: Sequence[int], bundle: BundleOnBase) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if any(x <= 0 for x in m) or sum(m) != bundle.dimension:
        raise PreconditionError(f"{m} is not a partition of {bundle.dimension}")
    return m


def chern_number_pbundle(m: Sequence[int], bundle: BundleOnBase) -> Fraction:
    """Chern number ``c_m(P(E))`` as a sum of base integrals against f."""
    m = _check_weight(m, bundle)
    nb = bundle.base_dimension
    caps = [min(x, nb) for x in m]
    total = Fraction(0)
    for j in P.bounded_tuples(caps, nb):
        base_part = bundle.base.one()
        for jt in j:
            if jt:
                base_part = base_part * bundle.tangent.c(jt)
                if not base_part:
                    break
        if not base_part:
            continue
        fa = f_class(tuple(mt - jt for mt, jt in zip(m, j)), bundle)
        if fa:
            total += integrate(base_part * fa)
    return total


def pbundle_chern_vector(bundle: BundleOnBase) -> ChernVector:
    n = bundle.dimension
    return ChernVector(n, {lam: chern_number_pbundle(lam, bundle) for lam in P.partitions(n)})


# -- oracle: the cohomology ring of P(E) ---------------------------------------


def _fresh_generator(names: Iterable[str]) -> str:
    tokens = {factor.split("^")[0] for n in names for factor in n.split("*")}
    y = "y"
    while y in tokens:
        y += "'"
    return y


class _ProjectiveRing:
    """Helper turning y-polynomials with base coefficients into ring elements."""

    def __init__(self, bundle: BundleOnBase):
        self.bundle = bundle
        self.k = bundle.rank
        base = bundle.base
        self.y = _fresh_generator(base.names)
        unit = base.unit_name
        self.pairs = [(i, j) for j in range(self.k) for i in range(len(base))]
        self.pairs.sort(key=lambda ij: (base.degrees[ij[0]] + 2 * ij[1], ij[1], ij[0]))
        self.index = {ij: n for n, ij in enumerate(self.pairs)}

        def name(i: int, j: int) -> str:
            ypow = "" if j == 0 else (self.y if j == 1 else f"{self.y}^{j}")
            if not ypow:
                return base.names[i]
            return ypow if base.names[i] == unit else f"{base.names[i]}*{ypow}"

        self.names = [name(i, j) for i, j in self.pairs]

    def reduce(self, poly: list[RingElement]) -> list[RingElement]:
        """Reduce modulo ``sum_i e_i y^(k-i) = 0`` to degree below k in y."""
        k = self.k
        poly = list(poly) + [self.bundle.base.zero()] * max(0, k - len(poly))
        for p in range(len(poly) - 1, k - 1, -1):
            coef = poly[p]
            if not coef:
                continue
            for i in range(1, k + 1):
                ei = self.bundle.bundle.c(i)
                if ei:
                    poly[p - i] = poly[p - i] - ei * coef
            poly[p] = self.bundle.base.zero()
        return poly[:k]

    def coords(self, poly: list[RingElement]) -> dict[str, Fraction]:
        out: dict[str, Fraction] = {}
        for j, coef in enumerate(self.reduce(poly)):
            for i, c in enumerate(coef.coeffs):
                if c:
                    out[self.names[self.index[(i, j)]]] = c
        return out

    def build(self) -> RingPresentation:
        base = self.bundle.base
        products = {}
        for a, (i1, j1) in enumerate(self.pairs):
            for b, (i2, j2) in enumerate(self.pairs):
                if b < a:
                    continue
                beta = [base.zero()] * (j1 + j2) + [_basis(base, i1) * _basis(base, i2)]
                products[(self.names[a], self.names[b])] = self.coords(beta)
        basis = [(self.names[n], base.degrees[i] + 2 * j) for n, (i, j) in enumerate(self.pairs)]
        top = self.names[self.index[(base.index_of(base.top), self.k - 1)]]
        return RingPresentation(base.dimension + self.k - 1, basis, products, top)


def _basis(ring: RingPresentation, i: int) -> RingElement:
    return ring.symbol(ring.names[i])


def pbundle_oracle_ring(bundle: BundleOnBase) -> Manifold:
    """Cohomology ring of ``P(E)`` and its tangent Chern classes.

    The ring is free over the base on ``1, y, ..., y^(k-1)``; ``y^k`` is
    reduced by ``sum_i e_i y^(k-i) = 0`` and the fundamental class pairs with
    ``[base top] * y^(k-1)``.  The total Chern class is
    ``c(B) * sum_i e_i (1 + y)^(k-i)``.
    """
    helper = _ProjectiveRing(bundle)
    ring = helper.build()
    k = bundle.rank
    base = bundle.base

    def lift(poly: list[RingElement]) -> RingElement:
        return ring.element(helper.coords(poly))

    # sum_i e_i (1+y)^(k-i) as a y-polynomial with base coefficients
    fibre = [base.zero() for _ in range(k + 1)]
    for i in range(k + 1):
        ei = bundle.bundle.c(i)
        if not ei:
            continue
        for ell in range(k - i + 1):
            fibre[ell] = fibre[ell] + comb(k - i, ell) * ei
    total = lift([bundle.tangent.total()]) * lift(fibre)
    n = ring.dimension
    classes = [total.homogeneous(2 * i) for i in range(1, n + 1)]
    return Manifold(ring, ChernData(ring, n, classes))


def chern_number_oracle(m: Sequence[int], bundle: BundleOnBase, model: Manifold | None = None) -> Fraction:
    m = _check_weight(m, bundle)
    if model is None:
        model = pbundle_oracle_ring(bundle)
    return chern_number(model.tangent, m)


# -- positivity of the weight k+1 constant --------------------------------------


class PositivityRow(NamedTuple):
    partition: tuple[int, ...]
    value: int
    sign: str


def positivity_scan(k: int) -> list[PositivityRow]:
    """``prod binom(k, a_i) * (sum_{s<t} a_s a_t - k)`` over partitions of k+1 with parts <= k."""
    if k < 2:
        raise PreconditionError("positivity scan needs k >= 2")
    rows = []
    for lam in P.partitions(k + 1):
        if max(lam) > k:
            continue
        pair_sum = sum(lam[s] * lam[t] for s in range(len(lam)) for t in range(s + 1, len(lam)))
        value = prod(comb(k, x) for x in lam) * (pair_sum - k)
        sign = "positive" if value > 0 else ("zero" if value == 0 else "negative")
        rows.append(PositivityRow(lam, value, sign))
    return rows
