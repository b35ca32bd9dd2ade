"""Linear algebra in rational complex cobordism, in Chern-number coordinates.

Monomials ``alpha_lam = prod alpha_{lam_i}`` over partitions of n form a basis
of the degree-n part; an n-dimensional class is identified with its vector of
Chern numbers.  Ideals generated by monomials become spans of rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from . import linalg
from . import partitions as P
from .classes import (
    ChernVector,
    LinearFunctional,
    chi_functionals,
    pontryagin_functionals,
)
from .errors import InvariantError, PreconditionError
from .families import DolgachevModel, Xq_vector, alpha_vector, product_chern_vector
from .partitions import Partition
from .rational import fmt, to_fraction

__all__ = [
    "CobordismSpace",
    "IdealSlice",
    "monomial_vector",
    "cobordism_space",
    "decompose",
    "ideal_slice_I",
    "ideal_slice_J",
    "upper_bound",
    "ideal_I_formula",
    "ideal_contains",
    "SpanReport",
    "span_report",
    "xq_decomposition",
]


@lru_cache(maxsize=None)
def _monomial_vector(lam: Partition, polarization: Fraction) -> ChernVector:
    if not lam:
        return ChernVector(0, {(): 1})
    head = _monomial_vector(lam[:-1], polarization)
    return product_chern_vector(head, alpha_vector(lam[-1], polarization))


def monomial_vector(lam, polarization=2) -> ChernVector:
    """Chern numbers of ``alpha_{lam_1} ... alpha_{lam_p}``."""
    return _monomial_vector(P.normalize(lam), to_fraction(polarization))


@dataclass(frozen=True)
class CobordismSpace:
    """Degree-n rational cobordism with the alpha-monomial basis.

    ``matrix[i]`` is the Chern vector of the i-th basis monomial; columns are
    indexed by partitions in canonical order.
    """

    dimension: int
    polarization: Fraction
    basis: tuple[Partition, ...] = field(init=False)
    matrix: tuple[tuple[Fraction, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        basis = P.partitions(self.dimension)
        object.__setattr__(self, "basis", basis)
        rows = tuple(tuple(monomial_vector(lam, self.polarization).dense()) for lam in basis)
        object.__setattr__(self, "matrix", rows)

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.matrix)

    @cached_property
    def _inverse(self):
        inv = linalg.inverse(self.matrix)
        if inv is None:
            raise InvariantError(f"alpha-monomial matrix is singular in dimension {self.dimension}")
        return inv

    def decompose(self, v: ChernVector) -> dict[Partition, Fraction]:
        """Coordinates x with ``sum_i x_i * matrix[i] = v``."""
        if v.dimension != self.dimension:
            raise PreconditionError("dimension mismatch")
        dense = v.dense()
        size = len(self.basis)
        x = [sum((dense[r] * self._inverse[r][i] for r in range(size) if dense[r]), Fraction(0)) for i in range(size)]
        return dict(zip(self.basis, x))

    def assemble(self, coords: dict[Partition, Fraction]) -> ChernVector:
        n = self.dimension
        dense = [Fraction(0)] * len(self.basis)
        for lam, row in zip(self.basis, self.matrix):
            c = to_fraction(coords.get(lam, 0))
            if c:
                dense = [a + c * b for a, b in zip(dense, row)]
        return ChernVector(n, dict(zip(P.partitions(n), dense)))


@lru_cache(maxsize=None)
def _space(n: int, polarization: Fraction) -> CobordismSpace:
    return CobordismSpace(n, polarization)


def cobordism_space(n: int, polarization=2) -> CobordismSpace:
    return _space(n, to_fraction(polarization))


def decompose(v: ChernVector, polarization=2) -> dict[Partition, Fraction]:
    """Coordinates of a Chern vector on the alpha-monomial basis."""
    return cobordism_space(v.dimension, polarization).decompose(v)


# -- ideals ----------------------------------------------------------------------


@dataclass(frozen=True)
class IdealSlice:
    dimension: int
    generators: tuple[Partition, ...]
    rank: int

    def rows(self, polarization=2) -> list[list[Fraction]]:
        return [monomial_vector(lam, polarization).dense() for lam in self.generators]

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "generators": [list(g) for g in self.generators],
            "rank": self.rank,
        }


def _slice(n: int, generators: list[Partition], polarization) -> IdealSlice:
    rows = [monomial_vector(lam, polarization).dense() for lam in generators]
    return IdealSlice(n, tuple(generators), linalg.rank(rows) if rows else 0)


def ideal_slice_I(n: int, polarization=2) -> IdealSlice:
    """Degree-n part of the ideal generated by ``alpha_1 alpha_k``, k >= 3."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    gens = [lam for lam in P.partitions(n) if 1 in lam and max(lam) >= 3]
    return _slice(n, gens, polarization)


def ideal_slice_J(n: int, polarization=2) -> IdealSlice:
    """Degree-n part of the ideal generated by ``alpha_{2k+1}`` (k >= 1) and ``alpha_1 alpha_{2k}`` (k >= 2)."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    gens = [
        lam
        for lam in P.partitions(n)
        if any(p >= 3 and p % 2 for p in lam) or (1 in lam and any(p >= 4 and p % 2 == 0 for p in lam))
    ]
    return _slice(n, gens, polarization)


def ideal_contains(big: IdealSlice, small: IdealSlice, polarization=2) -> bool:
    """Subspace inclusion, tested by the rank of the concatenated rows."""
    rows = big.rows(polarization) + small.rows(polarization)
    return (linalg.rank(rows) if rows else 0) == big.rank


def upper_bound(n: int) -> int:
    """``p(n) - p(n-1) + floor((n+1)/2)``."""
    if n < 1:
        raise PreconditionError("n must be positive")
    return P.count(n) - P.count(n - 1) + (n + 1) // 2


def ideal_I_formula(n: int) -> int:
    if n < 1:
        raise PreconditionError("n must be positive")
    return P.count(n - 1) - (n + 1) // 2


# -- spans of functionals ---------------------------------------------------------


@dataclass
class SpanReport:
    dimension: int
    chi_dim: int
    pontryagin_dim: int
    sum_dim: int
    intersection_dim: int
    chi_members: list[Partition]
    sum_members: list[Partition]
    upper_bound: int
    I_rank: int
    J_rank: int

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "chi_span_dim": self.chi_dim,
            "pontryagin_span_dim": self.pontryagin_dim,
            "sum_dim": self.sum_dim,
            "intersection_dim": self.intersection_dim,
            "chern_numbers_in_chi_span": [P.chern_monomial(lam) for lam in self.chi_members],
            "chern_numbers_in_sum": [P.chern_monomial(lam) for lam in self.sum_members],
            "upper_bound": self.upper_bound,
            "I_rank": self.I_rank,
            "J_rank": self.J_rank,
            "codim_J": P.count(self.dimension) - self.J_rank,
        }


def _rows(fs: list[LinearFunctional]) -> list[list[Fraction]]:
    return [f.dense() for f in fs]


def span_report(n: int) -> SpanReport:
    """Dimensions of the chi^p span, the Pontryagin span, and single-number membership."""
    if n < 1:
        raise PreconditionError("n must be positive")
    chi = _rows(chi_functionals(n))
    pont = _rows(list(pontryagin_functionals(n).values())) if n % 2 == 0 else []
    both = chi + pont
    chi_dim = linalg.rank(chi)
    pont_dim = linalg.rank(pont) if pont else 0
    sum_dim = linalg.rank(both)
    chi_span, both_span = linalg.Span(chi), linalg.Span(both)
    chi_members, sum_members = [], []
    for lam in P.partitions(n):
        e = LinearFunctional.monomial(lam).dense()
        if e in chi_span:
            chi_members.append(lam)
        if e in both_span:
            sum_members.append(lam)
    return SpanReport(
        dimension=n,
        chi_dim=chi_dim,
        pontryagin_dim=pont_dim,
        sum_dim=sum_dim,
        intersection_dim=chi_dim + pont_dim - sum_dim,
        chi_members=chi_members,
        sum_members=sum_members,
        upper_bound=upper_bound(n),
        I_rank=ideal_slice_I(n).rank,
        J_rank=ideal_slice_J(n).rank,
    )


def xq_decomposition(
    n: int, qs=(3, 5, 7), genus: int = 0, model: DolgachevModel = DolgachevModel(), polarization=2
) -> dict[int, dict[Partition, Fraction]]:
    """Alpha-monomial coordinates of ``X_q`` for each q."""
    return {q: decompose(Xq_vector(q, n, genus, model), polarization) for q in qs}


def format_coords(coords: dict[Partition, Fraction]) -> dict[str, str]:
    return {P.fmt(lam): fmt(c) for lam, c in coords.items()}
