"""Chern data, Segre classes and linear functionals on Chern numbers.

A degree-n polynomial in the Chern classes ``c_1, c_2, ...`` is stored as a
:class:`LinearFunctional` keyed by partitions: ``(2, 1, 1)`` is the monomial
``c_1^2 c_2``.  Evaluating such a functional on a :class:`ChernVector` (the
Chern numbers of an n-dimensional manifold) is the duality pairing between
Chern-number coordinates and rational cobordism.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import partitions as P
from .errors import PreconditionError, SchemaError
from .partitions import Partition
from .rational import fmt, to_fraction
from .ring import RingElement, RingPresentation, integrate


class ChernData:
    """Chern classes ``c_1..c_min(rank, n_B)`` of a bundle, as ring elements."""

    def __init__(self, ring: RingPresentation, rank: int, classes: Sequence[RingElement] = ()):
        if rank < 0:
            raise PreconditionError("rank must be nonnegative")
        length = min(rank, ring.dimension)
        classes = list(classes)
        for i, c in enumerate(classes, start=1):
            if c.ring != ring:
                raise PreconditionError(f"c_{i} lives in a different presentation")
            if not c.is_homogeneous(2 * i):
                raise PreconditionError(f"c_{i} is not homogeneous of degree {2 * i}")
            if i > rank and c:
                raise PreconditionError(f"c_{i} must vanish for a rank-{rank} bundle")
        classes = classes[:length] + [ring.zero()] * (length - len(classes))
        self.ring = ring
        self.rank = rank
        self.classes: tuple[RingElement, ...] = tuple(classes)

    def c(self, i: int) -> RingElement:
        if i == 0:
            return self.ring.one()
        if 1 <= i <= len(self.classes):
            return self.classes[i - 1]
        return self.ring.zero()

    def __getitem__(self, i: int) -> RingElement:
        return self.c(i)

    def total(self) -> RingElement:
        return sum(self.classes, self.ring.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernData):
            return NotImplemented
        return self.ring == other.ring and self.rank == other.rank and self.classes == other.classes

    def __repr__(self) -> str:
        body = ", ".join(f"c{i}={c}" for i, c in enumerate(self.classes, start=1))
        return f"ChernData(rank={self.rank}, {body})"

    def to_json(self) -> list:
        return [c.to_json() for c in self.classes]


def segre(e: ChernData, max_degree: int) -> list[RingElement]:
    """Components ``s_0..s_max`` of the inverse of the total Chern class."""
    if max_degree > e.ring.dimension:
        raise PreconditionError("max_degree exceeds the base dimension")
    alpha = [e.ring.one()]
    for j in range(1, max_degree + 1):
        acc = e.ring.zero()
        for i in range(1, j + 1):
            ci = e.c(i)
            if ci:
                acc = acc - ci * alpha[j - i]
        alpha.append(acc)
    return alpha


# -- functionals and vectors ---------------------------------------------------


def _check_partition(lam: Iterable[int], n: int) -> Partition:
    lam = tuple(lam)
    if P.normalize(lam) != lam:
        raise SchemaError(f"{lam} is not a partition (positive, non-increasing parts)")
    if sum(lam) != n:
        raise SchemaError(f"{lam} is not a partition of {n}")
    return lam


class LinearFunctional:
    """Rational combination of Chern monomials of total degree ``dimension``."""

    def __init__(self, dimension: int, coefficients: Mapping[Iterable[int], object] | None = None):
        self.dimension = int(dimension)
        coeffs: dict[Partition, Fraction] = {}
        for lam, c in (coefficients or {}).items():
            lam = _check_partition(lam, self.dimension)
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + to_fraction(c)
        self.coefficients = {lam: coeffs[lam] for lam in P.partitions(self.dimension) if coeffs.get(lam)}

    @classmethod
    def monomial(cls, lam: Iterable[int], coeff=1) -> LinearFunctional:
        lam = P.normalize(lam)
        return cls(sum(lam), {lam: coeff})

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.coefficients.get(tuple(lam), Fraction(0))

    def dense(self) -> list[Fraction]:
        return [self[lam] for lam in P.partitions(self.dimension)]

    def _check(self, other: LinearFunctional) -> None:
        if other.dimension != self.dimension:
            raise PreconditionError("dimension mismatch")

    def __add__(self, other: LinearFunctional) -> LinearFunctional:
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.coefficients)
        for lam, c in other.coefficients.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return LinearFunctional(self.dimension, out)

    __radd__ = __add__

    def __neg__(self) -> LinearFunctional:
        return LinearFunctional(self.dimension, {lam: -c for lam, c in self.coefficients.items()})

    def __sub__(self, other: LinearFunctional) -> LinearFunctional:
        return self + (-other)

    def __mul__(self, other) -> LinearFunctional:
        if isinstance(other, LinearFunctional):
            out: dict[Partition, Fraction] = {}
            for (a, x), (b, y) in itertools.product(self.coefficients.items(), other.coefficients.items()):
                lam = P.normalize(a + b)
                out[lam] = out.get(lam, Fraction(0)) + x * y
            return LinearFunctional(self.dimension + other.dimension, out)
        c = to_fraction(other)
        return LinearFunctional(self.dimension, {lam: c * x for lam, x in self.coefficients.items()})

    def __rmul__(self, other) -> LinearFunctional:
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return self.dimension == other.dimension and self.coefficients == other.coefficients

    __hash__ = None  # type: ignore[assignment]

    def __call__(self, v: ChernVector) -> Fraction:
        return apply(self, v)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        out = ""
        for lam in self.coefficients:
            c = self.coefficients[lam]
            mono = P.chern_monomial(lam)
            mag = abs(c)
            body = mono if mag == 1 and lam else (fmt(mag) if not lam else f"{fmt(mag)}*{mono}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += f" {'-' if c < 0 else '+'} {body}"
        return out

    def __repr__(self) -> str:
        return f"LinearFunctional({self.dimension}, {self})"

    def to_json(self) -> dict:
        return _entries_json(self.dimension, self.dense())

    @classmethod
    def from_json(cls, data: Mapping) -> LinearFunctional:
        n, entries = _entries_parse(data)
        return cls(n, entries)


class ChernVector:
    """Chern numbers of an n-dimensional class, one per partition of n."""

    def __init__(self, dimension: int, values: Mapping[Iterable[int], object] | None = None):
        self.dimension = int(dimension)
        vals: dict[Partition, Fraction] = {lam: Fraction(0) for lam in P.partitions(self.dimension)}
        for lam, c in (values or {}).items():
            lam = _check_partition(lam, self.dimension)
            vals[lam] = to_fraction(c)
        self.values = vals

    def __getitem__(self, lam: Iterable[int]) -> Fraction:
        return self.values[P.normalize(lam)]

    def dense(self) -> list[Fraction]:
        return [self.values[lam] for lam in P.partitions(self.dimension)]

    def __add__(self, other: ChernVector) -> ChernVector:
        if other.dimension != self.dimension:
            raise PreconditionError("dimension mismatch")
        return ChernVector(self.dimension, {lam: x + other.values[lam] for lam, x in self.values.items()})

    def __sub__(self, other: ChernVector) -> ChernVector:
        return self + (-1) * other

    def __mul__(self, c) -> ChernVector:
        c = to_fraction(c)
        return ChernVector(self.dimension, {lam: c * x for lam, x in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernVector):
            return NotImplemented
        return self.dimension == other.dimension and self.values == other.values

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"{P.chern_monomial(lam)}={fmt(x)}" for lam, x in self.values.items())
        return f"ChernVector({self.dimension}: {body})"

    def to_json(self) -> dict:
        return _entries_json(self.dimension, self.dense())

    @classmethod
    def from_json(cls, data: Mapping) -> ChernVector:
        n, entries = _entries_parse(data)
        return cls(n, entries)


def _entries_json(n: int, dense: Sequence[Fraction]) -> dict:
    return {
        "dimension": n,
        "entries": [{"partition": list(lam), "value": fmt(x)} for lam, x in zip(P.partitions(n), dense)],
    }


def _entries_parse(data: Mapping) -> tuple[int, dict[Partition, Fraction]]:
    try:
        n = int(data["dimension"])
        entries: dict[Partition, Fraction] = {}
        for e in data["entries"]:
            lam = _check_partition(e["partition"], n)
            if lam in entries:
                raise SchemaError(f"duplicate partition {lam}")
            entries[lam] = to_fraction(e["value"])
        return n, entries
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed entries document: {exc!r}") from exc


def apply(f: LinearFunctional, v: ChernVector) -> Fraction:
    if f.dimension != v.dimension:
        raise PreconditionError(f"functional of dimension {f.dimension} applied to a {v.dimension}-vector")
    return sum((c * v.values[lam] for lam, c in f.coefficients.items()), Fraction(0))


def chern_number(tangent: ChernData, lam: Iterable[int]) -> Fraction:
    """Integrate ``c_{m_1} ... c_{m_p}`` of ``tangent`` over its ring."""
    lam = P.normalize(lam)
    if sum(lam) != tangent.ring.dimension:
        raise PreconditionError(f"partition {lam} does not have weight {tangent.ring.dimension}")
    prod = tangent.ring.one()
    for part in lam:
        prod = prod * tangent.c(part)
        if not prod:
            return Fraction(0)
    return integrate(prod)


def chern_vector(tangent: ChernData) -> ChernVector:
    n = tangent.ring.dimension
    return ChernVector(n, {lam: chern_number(tangent, lam) for lam in P.partitions(n)})


# -- named functionals ---------------------------------------------------------


class Manifold(NamedTuple):
    """Even rational cohomology ring of a manifold with its tangent Chern classes."""

    ring: RingPresentation
    tangent: ChernData

    @property
    def dimension(self) -> int:
        return self.ring.dimension

    def chern_vector(self) -> ChernVector:
        return chern_vector(self.tangent)


def euler_functional(n: int) -> LinearFunctional:
    return LinearFunctional.monomial((n,))


def _c_poly(i: int) -> LinearFunctional:
    return LinearFunctional.monomial((i,) if i else ())


@lru_cache(maxsize=None)
def pontryagin_class(j: int) -> LinearFunctional:
    """``p_j = sum_i (-1)^(j+i) c_i c_(2j-i)`` as a degree-2j Chern polynomial."""
    total = LinearFunctional(2 * j)
    for i in range(2 * j + 1):
        total = total + (-1) ** (j + i) * (_c_poly(i) * _c_poly(2 * j - i))
    return total


def pontryagin_functionals(n: int) -> dict[Partition, LinearFunctional]:
    """Pontryagin numbers ``p_mu`` for partitions mu of n/2, keyed by mu."""
    if n % 2:
        raise PreconditionError("no Pontryagin numbers in odd complex dimension")
    out = {}
    for mu in P.partitions(n // 2):
        f = LinearFunctional(0, {(): 1})
        for part in mu:
            f = f * pontryagin_class(part)
        out[mu] = f
    return out


@lru_cache(maxsize=None)
def milnor_s(n: int) -> LinearFunctional:
    """Power sum of the Chern roots via Newton's identities."""
    if n < 1:
        raise PreconditionError("n must be positive")
    s: list[LinearFunctional] = [LinearFunctional(0, {(): 0})]
    for j in range(1, n + 1):
        acc = (-1) ** (j - 1) * j * _c_poly(j)
        for i in range(1, j):
            acc = acc + (-1) ** (i - 1) * (_c_poly(i) * s[j - i])
        s.append(acc)
    return s[n]


# -- symmetric functions -------------------------------------------------------


@lru_cache(maxsize=None)
def _zero_one_matrices(rows: Partition, cols: tuple[int, ...]) -> int:
    """Number of 0/1 matrices with the given row sums and column sums.

    ``cols`` is a sorted multiset of remaining column sums; columns with equal
    remaining sums are interchangeable, so each row picks how many to take
    from each group.
    """
    if not rows:
        return 1 if not cols else 0
    need, rest = rows[0], rows[1:]
    groups = sorted(Counter(cols).items())
    total = 0

    def choose(g: int, left: int, ways: int, new: list[int]) -> None:
        nonlocal total
        if g == len(groups):
            if left == 0:
                total += ways * _zero_one_matrices(rest, tuple(sorted(x for x in new if x)))
            return
        value, mult = groups[g]
        for take in range(min(mult, left) + 1):
            choose(g + 1, left - take, ways * comb(mult, take), new + [value] * (mult - take) + [value - 1] * take)

    choose(0, need, 1, [])
    return total


@lru_cache(maxsize=None)
def _elementary_in_monomials(nvars: int, mu: Partition) -> dict[Partition, int]:
    """Coefficients of ``e_mu`` on the monomial symmetric basis, ``nvars`` variables.

    The coefficient of ``m_lam`` counts 0/1 matrices with row sums mu and
    column sums lam.
    """
    if mu and mu[0] > nvars:
        return {}
    out = {}
    for lam in P.partitions(sum(mu)):
        if len(lam) <= nvars:
            k = _zero_one_matrices(mu, tuple(sorted(lam)))
            if k:
                out[lam] = k
    return out


def to_elementary(sym: Mapping[Partition, Fraction], nvars: int) -> dict[Partition, Fraction]:
    """Rewrite a symmetric polynomial in elementary symmetric polynomials.

    ``sym`` gives the coefficient of each monomial symmetric function ``m_lam``.
    Repeatedly strips the lexicographically leading monomial ``x^lam`` by
    subtracting ``e_{lam'}``, whose leading monomial is exactly ``x^lam``.
    """
    f = {P.normalize(lam): Fraction(c) for lam, c in sym.items() if c}
    if any(len(lam) > nvars for lam in f):
        raise PreconditionError("monomial needs more variables than available")
    out: dict[Partition, Fraction] = {}
    while f:
        lead = max(f)
        c = f[lead]
        mu = P.conjugate(lead)
        out[mu] = out.get(mu, Fraction(0)) + c
        for lam, k in _elementary_in_monomials(nvars, mu).items():
            f[lam] = f.get(lam, Fraction(0)) - c * k
            if not f[lam]:
                del f[lam]
    return {mu: c for mu, c in out.items() if c}


def _series_inverse(a: Sequence[Fraction], order: int) -> list[Fraction]:
    inv = [1 / Fraction(a[0])]
    for k in range(1, order + 1):
        inv.append(-sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
    return inv


@lru_cache(maxsize=None)
def chi_y_series(order: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """Coefficients of ``x (1 + y e^-x) / (1 - e^-x)`` as ``(const, y-coefficient)`` pairs."""
    # (1 - e^-x)/x = sum (-1)^k x^k / (k+1)!
    denom = [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]
    todd = _series_inverse(denom, order)
    exp_neg = [Fraction((-1) ** k, factorial(k)) for k in range(order + 1)]
    twisted = [sum((todd[i] * exp_neg[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order + 1)]
    return tuple((todd[k], twisted[k]) for k in range(order + 1))


@lru_cache(maxsize=None)
def _chi_functionals(n: int) -> tuple[LinearFunctional, ...]:
    q = chi_y_series(n)
    by_power: list[dict[Partition, Fraction]] = [{} for _ in range(n + 1)]
    for lam in P.partitions(n):
        padded = lam + (0,) * (n - len(lam))
        # product of the linear-in-y factors q_k(y) = a_k + b_k y
        poly = [Fraction(1)]
        for k in padded:
            a, b = q[k]
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, x in enumerate(poly):
                nxt[i] += a * x
                nxt[i + 1] += b * x
            poly = nxt
        for p, coeff in enumerate(poly):
            if coeff:
                by_power[p][lam] = coeff
    return tuple(LinearFunctional(n, to_elementary(sym, n)) for sym in by_power)


def chi_functionals(n: int) -> list[LinearFunctional]:
    """``[chi^0, ..., chi^n]`` with ``chi^p = chi(X, Omega^p)`` as Chern polynomials."""
    if n < 1:
        raise PreconditionError("n must be positive")
    return list(_chi_functionals(n))


def chi_y_at(n: int, y) -> LinearFunctional:
    y = to_fraction(y)
    return sum((y**p * f for p, f in enumerate(chi_functionals(n))), LinearFunctional(n))


def signature_functional(n: int) -> LinearFunctional:
    return chi_y_at(n, 1)
