"""The example families: projective bundles X_q over S_q x C, and generators alpha_n.

``X_q = P(E_q)`` where ``Y_q = S_q x C`` with ``S_q`` a Dolgachev surface,
``C`` a genus-g curve and ``E_q = (L_omega boxtimes O_C(1)) + O^(n-3)``.  Only
the subring ``<1, omega, G, [pt]>`` of ``H^*(S_q)`` is modelled: every class
entering the Chern numbers of ``X_q`` lies there.

The cobordism generators are ``alpha_1 = CP^1``, ``alpha_2 = CP^2`` and
``alpha_n = P(O_A(1) + O_A^(n-2))`` over an abelian surface ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as P
from .catalog import abelian_ring, curve_ring, dolgachev_ring, point
from .classes import ChernData, ChernVector, Manifold
from .errors import InvariantError, PreconditionError
from .partitions import Partition
from .projective import BundleOnBase, pbundle_chern_vector
from .rational import fmt, to_fraction
from .ring import external_product, product_ring

__all__ = [
    "DolgachevModel",
    "FamilyChernPolynomial",
    "check_q",
    "build_Yq",
    "build_Eq",
    "Xq_vector",
    "family_chern",
    "family_table",
    "alpha_generator",
    "alpha_vector",
    "product_chern_vector",
]

# numerical invariants of S_q that do not enter the ring model directly
DOLGACHEV_C1_SQUARED = 0
DOLGACHEV_EULER = 12
DOLGACHEV_B2 = 10
DOLGACHEV_LATTICE = (1, 9)


@dataclass(frozen=True)
class DolgachevModel:
    """Intersection numbers ``omega^2 = w`` and ``omega.G = t`` (``G^2 = 0``).

    The defaults are realized in the odd (1, 9) lattice by ``omega = e_0`` and
    ``G = e_0 - e_1``.
    """

    w: Fraction = Fraction(1)
    t: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "w", to_fraction(self.w))
        object.__setattr__(self, "t", to_fraction(self.t))
        if self.w <= 0:
            raise PreconditionError("omega^2 must be positive")
        if self.t == 0:
            raise PreconditionError("omega.G must be nonzero")

    def ring(self):
        return dolgachev_ring(self.w, self.t)


@dataclass(frozen=True)
class FamilyChernPolynomial:
    partition: Partition
    slope: Fraction
    intercept: Fraction

    def __call__(self, q) -> Fraction:
        return self.slope * q + self.intercept

    def to_json(self) -> dict:
        return {"partition": list(self.partition), "slope": fmt(self.slope), "intercept": fmt(self.intercept)}


def check_q(q: int) -> None:
    if q < 3 or q % 2 == 0:
        raise PreconditionError(f"q must be an odd integer >= 3, got {q}")


@lru_cache(maxsize=None)
def _Yq_ring(model: DolgachevModel):
    return product_ring(model.ring(), curve_ring())


def build_Yq(q: int, genus: int = 0, model: DolgachevModel = DolgachevModel()) -> Manifold:
    """``Y_q = S_q x C`` with ``c(Y_q) = (1 + (q-2)G + 12[pt]) (1 + (2-2g)F)``."""
    check_q(q)
    ring = _Yq_ring(model)
    s, c = ring.factors
    G = external_product(ring, s.symbol("G"), c.one())
    pt = external_product(ring, s.symbol("pt"), c.one())
    F = external_product(ring, s.one(), c.symbol("F"))
    chi = 2 - 2 * genus
    c1 = (q - 2) * G + chi * F
    c2 = 12 * pt + chi * (q - 2) * G * F
    c3 = chi * 12 * pt * F
    return Manifold(ring, ChernData(ring, 3, [c1, c2, c3]))


def build_Eq(q: int, n: int, genus: int = 0, model: DolgachevModel = DolgachevModel()) -> BundleOnBase:
    """Rank ``n - 2`` bundle on ``Y_q`` with ``c_1 = omega + F`` and ``c_i = 0`` for ``i >= 2``."""
    if n < 4:
        raise PreconditionError("family requires n >= 4")
    Y = build_Yq(q, genus, model)
    s, c = Y.ring.factors
    omega = external_product(Y.ring, s.symbol("omega"), c.one())
    F = external_product(Y.ring, s.one(), c.symbol("F"))
    return BundleOnBase(Y.tangent, ChernData(Y.ring, n - 2, [omega + F]))


@lru_cache(maxsize=None)
def _Xq_vector(q: int, n: int, genus: int, model: DolgachevModel) -> ChernVector:
    return pbundle_chern_vector(build_Eq(q, n, genus, model))


def Xq_vector(q: int, n: int, genus: int = 0, model: DolgachevModel = DolgachevModel()) -> ChernVector:
    """All Chern numbers of ``X_q = P(E_q)``."""
    return _Xq_vector(q, n, genus, model)


def family_table(
    n: int, genus: int = 0, model: DolgachevModel = DolgachevModel(), check_at: int = 7
) -> dict[Partition, FamilyChernPolynomial]:
    """Chern numbers of ``X_q`` as exact affine functions of q, one per partition of n.

    The line through q = 3 and q = 5 is checked at ``check_at``.
    """
    v3, v5 = Xq_vector(3, n, genus, model), Xq_vector(5, n, genus, model)
    vc = Xq_vector(check_at, n, genus, model)
    out = {}
    for lam in P.partitions(n):
        slope = (v5[lam] - v3[lam]) / 2
        poly = FamilyChernPolynomial(lam, slope, v3[lam] - 3 * slope)
        if poly(check_at) != vc[lam]:
            raise InvariantError(f"c_{lam}(X_q) is not affine in q")
        out[lam] = poly
    return out


def family_chern(
    m, n: int | None = None, genus: int = 0, model: DolgachevModel = DolgachevModel()
) -> FamilyChernPolynomial:
    m = P.normalize(m)
    n = sum(m) if n is None else n
    if sum(m) != n:
        raise PreconditionError(f"{m} is not a partition of {n}")
    if n < 4:
        raise PreconditionError("family requires n >= 4")
    return family_table(n, genus, model)[m]


# -- cobordism generators -------------------------------------------------------


def alpha_generator(n: int, polarization=2) -> BundleOnBase:
    """``alpha_n`` as a projective bundle (over a point for n <= 2)."""
    if n < 1:
        raise PreconditionError("n must be positive")
    if n <= 2:
        base = point()
        return BundleOnBase(base.tangent, ChernData(base.ring, n + 1))
    ring = abelian_ring(polarization)
    return BundleOnBase(ChernData(ring, 2), ChernData(ring, n - 1, [ring.symbol("theta")]))


@lru_cache(maxsize=None)
def _alpha_vector(n: int, polarization: Fraction) -> ChernVector:
    return pbundle_chern_vector(alpha_generator(n, polarization))


def alpha_vector(n: int, polarization=2) -> ChernVector:
    return _alpha_vector(n, to_fraction(polarization))


def product_chern_vector(v: ChernVector, w: ChernVector) -> ChernVector:
    """Chern numbers of a product: ``c(X x Y) = c(X) c(Y)`` split part by part."""
    n1, n2 = v.dimension, w.dimension
    out = {}
    for lam in P.partitions(n1 + n2):
        total = Fraction(0)
        for i in P.compositions(n1, len(lam), lam):
            x = v[i]
            if x:
                total += x * w[tuple(m - a for m, a in zip(lam, i))]
        out[lam] = total
    return ChernVector(n1 + n2, out)
