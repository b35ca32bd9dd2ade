"""Finitely presented graded commutative Q-algebras given by multiplication tables.

A :class:`RingPresentation` is a finite basis of even-degree symbols together
with explicit structure constants and a designated top-degree symbol whose
coefficient is the integral over the fundamental class.  Presentations are
validated exhaustively (unit, grading, commutativity, associativity) when
constructed, so a modelling mistake fails immediately instead of producing a
wrong Chern number later.

>>> pp2 = projective_space(2)
>>> h = pp2.symbol("h")
>>> integrate(3 * h * h)
Fraction(3, 1)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvariantError, PreconditionError, SchemaError
from .partitions import partitions
from .rational import fmt, to_fraction

__all__ = [
    "RingPresentation",
    "RingElement",
    "ValidationReport",
    "ring_validate",
    "ring_mul",
    "integrate",
    "product_ring",
    "external_product",
    "point_ring",
    "projective_space",
    "truncated_ring",
]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problem: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "problem": self.problem}


class RingPresentation:
    """Graded commutative Q-algebra with an explicit multiplication table.

    Parameters
    ----------
    dimension : int
        Complex dimension ``n_B``; symbol degrees are real degrees in ``0..2*n_B``.
    basis : sequence of (name, degree)
    products : mapping (left, right) -> {symbol: coefficient}
        Missing entries are zero.  Products with the unit and the mirrored
        entry of a given pair are filled in when absent.
    top : str
        The degree ``2*n_B`` symbol dual to the fundamental class.
    check : bool
        Raise :class:`InvariantError` if :func:`ring_validate` fails.
    """

    def __init__(
        self,
        dimension: int,
        basis: Sequence[tuple[str, int]],
        products: Mapping[tuple[str, str], Mapping[str, object]],
        top: str,
        *,
        check: bool = True,
    ):
        self.dimension = int(dimension)
        self.names: tuple[str, ...] = tuple(name for name, _ in basis)
        self.degrees: tuple[int, ...] = tuple(int(deg) for _, deg in basis)
        self.top = top
        self._index = {name: i for i, name in enumerate(self.names)}
        self.factors: tuple[RingPresentation, RingPresentation] | None = None
        self._pair_index: dict[tuple[int, int], int] | None = None

        size = len(self.names)
        table: list[list[dict[int, Fraction] | None]] = [[None] * size for _ in range(size)]
        for (left, right), result in products.items():
            i, j = self._lookup(left), self._lookup(right)
            cell = {self._lookup(sym): to_fraction(c) for sym, c in result.items()}
            table[i][j] = {s: c for s, c in cell.items() if c}
        units = [i for i, d in enumerate(self.degrees) if d == 0]
        if len(units) == 1:
            u = units[0]
            for i in range(size):
                if table[u][i] is None:
                    table[u][i] = {i: Fraction(1)}
                if table[i][u] is None:
                    table[i][u] = {i: Fraction(1)}
        for i in range(size):
            for j in range(size):
                if table[i][j] is None:
                    table[i][j] = dict(table[j][i]) if table[j][i] is not None else {}
        self._table = tuple(tuple(tuple(sorted(cell.items())) for cell in row) for row in table)
        self._unit = units[0] if len(units) == 1 else None

        if check:
            report = ring_validate(self)
            if not report:
                raise InvariantError(f"invalid ring presentation: {report.problem}")

    def _lookup(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SchemaError(f"unknown basis symbol {name!r}") from None

    # -- structure -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        return self._lookup(name)

    def degree_of(self, name: str) -> int:
        return self.degrees[self._lookup(name)]

    def basis_product(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        return self._table[i][j]

    @property
    def unit_name(self) -> str:
        if self._unit is None:
            raise InvariantError("presentation has no unique unit")
        return self.names[self._unit]

    def _key(self):
        return (self.dimension, self.names, self.degrees, self.top, self._table)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"RingPresentation(dimension={self.dimension}, basis={list(self.names)}, top={self.top!r})"

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: Mapping[str, object] | None = None) -> RingElement:
        vec = [Fraction(0)] * len(self)
        for name, c in (coeffs or {}).items():
            vec[self._lookup(name)] += to_fraction(c)
        return RingElement(self, tuple(vec))

    def symbol(self, name: str) -> RingElement:
        return self.element({name: 1})

    def zero(self) -> RingElement:
        return RingElement(self, (Fraction(0),) * len(self))

    def one(self) -> RingElement:
        return self.symbol(self.unit_name)

    def scalar(self, c) -> RingElement:
        return to_fraction(c) * self.one()

    def basis_of_degree(self, degree: int) -> list[str]:
        return [n for n, d in zip(self.names, self.degrees) if d == degree]

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        products = []
        for i, j in itertools.product(range(len(self)), repeat=2):
            cell = self._table[i][j]
            if cell:
                products.append(
                    {
                        "left": self.names[i],
                        "right": self.names[j],
                        "result": [{"symbol": self.names[s], "coeff": fmt(c)} for s, c in cell],
                    }
                )
        return {
            "dimension": self.dimension,
            "basis": [{"name": n, "degree": d} for n, d in zip(self.names, self.degrees)],
            "products": products,
            "top": self.top,
        }

    @classmethod
    def from_json(cls, data: Mapping, *, check: bool = True) -> RingPresentation:
        try:
            basis = [(b["name"], int(b["degree"])) for b in data["basis"]]
            products = {}
            for entry in data.get("products", []):
                key = (entry["left"], entry["right"])
                if key in products:
                    raise SchemaError(f"duplicate product entry {key}")
                result: dict[str, Fraction] = {}
                for term in entry["result"]:
                    result[term["symbol"]] = result.get(term["symbol"], Fraction(0)) + to_fraction(
                        term["coeff"]
                    )
                products[key] = result
            return cls(int(data["dimension"]), basis, products, data["top"], check=check)
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed ring presentation: {exc!r}") from exc


class RingElement:
    """Immutable element of a :class:`RingPresentation`, stored densely."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingPresentation, coeffs: Sequence[Fraction]):
        if len(coeffs) != len(ring):
            raise ValueError("coefficient vector does not match the basis")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _same_ring(self, other: RingElement) -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise PreconditionError("elements belong to different presentations")

    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            self._same_ring(other)
            return other
        return self.ring.scalar(other)

    def __add__(self, other) -> RingElement:
        other = self._coerce(other)
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> RingElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RingElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> RingElement:
        if not isinstance(other, RingElement):
            c = to_fraction(other)
            return RingElement(self.ring, tuple(c * a for a in self.coeffs))
        self._same_ring(other)
        out = [Fraction(0)] * len(self.ring)
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in right:
                for s, c in self.ring.basis_product(i, j):
                    out[s] += a * b * c
        return RingElement(self.ring, tuple(out))

    def __rmul__(self, other) -> RingElement:
        return self * other

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return (self.ring is other.ring or self.ring == other.ring) and self.coeffs == other.coeffs
        if other == 0:
            return not self
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def terms(self) -> dict[str, Fraction]:
        return {n: c for n, c in zip(self.ring.names, self.coeffs) if c}

    def homogeneous(self, degree: int) -> RingElement:
        """Degree-``degree`` component (real degree)."""
        return RingElement(
            self.ring, tuple(c if d == degree else Fraction(0) for c, d in zip(self.coeffs, self.ring.degrees))
        )

    def is_homogeneous(self, degree: int) -> bool:
        return all(not c or d == degree for c, d in zip(self.coeffs, self.ring.degrees))

    def to_json(self) -> list[dict]:
        return [{"symbol": n, "coeff": fmt(c)} for n, c in self.terms().items()]

    def __str__(self) -> str:
        pieces = []
        unit = self.ring._unit
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == unit:
                body = fmt(mag)
            elif mag == 1:
                body = self.ring.names[i]
            else:
                body = f"{fmt(mag)}*{self.ring.names[i]}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"<{self}>"


def ring_validate(p: RingPresentation) -> ValidationReport:
    """Check every presentation invariant; report the first violation."""
    n = p.dimension
    size = len(p)
    if n < 0:
        return ValidationReport(False, "negative dimension")
    if len(set(p.names)) != size:
        return ValidationReport(False, "duplicate basis symbol")
    for name, d in zip(p.names, p.degrees):
        if d % 2:
            return ValidationReport(False, f"odd degree for {name!r}")
        if not 0 <= d <= 2 * n:
            return ValidationReport(False, f"degree of {name!r} outside 0..{2 * n}")
    units = [i for i, d in enumerate(p.degrees) if d == 0]
    if len(units) != 1:
        return ValidationReport(False, "missing unit" if not units else "multiple degree-0 symbols")
    tops = [i for i, d in enumerate(p.degrees) if d == 2 * n]
    if p.top not in p._index:
        return ValidationReport(False, "missing top symbol")
    if len(tops) != 1 or p.names[tops[0]] != p.top:
        return ValidationReport(False, f"top symbol must be the unique degree-{2 * n} symbol")
    u = units[0]
    for i in range(size):
        identity = ((i, Fraction(1)),)
        if p.basis_product(u, i) != identity or p.basis_product(i, u) != identity:
            return ValidationReport(False, f"unit law fails for {p.names[i]!r}")
    for i, j in itertools.product(range(size), repeat=2):
        target = p.degrees[i] + p.degrees[j]
        for s, _ in p.basis_product(i, j):
            if p.degrees[s] != target:
                return ValidationReport(
                    False, f"degree additivity: {p.names[i]}*{p.names[j]} has a term {p.names[s]!r}"
                )
        if p.basis_product(i, j) != p.basis_product(j, i):
            return ValidationReport(False, f"commutativity: {p.names[i]}*{p.names[j]}")

    def times_basis(vec: dict[int, Fraction], k: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for s, a in vec.items():
            for t, c in p.basis_product(s, k):
                out[t] = out.get(t, Fraction(0)) + a * c
        return {t: c for t, c in out.items() if c}

    # with commutativity in hand, the three bracketings of each multiset suffice
    nonunit = [i for i in range(size) if i != u]
    for i, j, k in itertools.combinations_with_replacement(nonunit, 3):
        if p.degrees[i] + p.degrees[j] + p.degrees[k] > 2 * n:
            continue
        ij_k = times_basis(dict(p.basis_product(i, j)), k)
        jk_i = times_basis(dict(p.basis_product(j, k)), i)
        ik_j = times_basis(dict(p.basis_product(i, k)), j)
        if not ij_k == jk_i == ik_j:
            return ValidationReport(
                False, f"associativity fails on ({p.names[i]}, {p.names[j]}, {p.names[k]})"
            )
    return ValidationReport(True)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def integrate(a: RingElement) -> Fraction:
    """Evaluate on the fundamental class: the coefficient of the top symbol."""
    return a.coeffs[a.ring.index_of(a.ring.top)]


def _pair_name(x: str, y: str, x_unit: bool, y_unit: bool) -> str:
    if y_unit:
        return x
    if x_unit:
        return y
    return f"{x}*{y}"


def _generators(name: str) -> list[str]:
    return [factor.split("^")[0] for factor in name.split("*")]


def product_ring(p: RingPresentation, q: RingPresentation, *, check: bool = True) -> RingPresentation:
    """Kunneth product of two even-degree presentations.

    Generator names in ``q`` that also occur in ``p`` are primed, so the
    ``h^2`` of a second projective factor becomes ``h'^2``.
    """
    pu, qu = p.index_of(p.unit_name), q.index_of(q.unit_name)
    taken = {g for i, n in enumerate(p.names) if i != pu for g in _generators(n)}
    renamed: dict[str, str] = {}
    for j, name in enumerate(q.names):
        if j == qu:
            continue
        for g in _generators(name):
            if g not in renamed:
                new = g
                while new in taken:
                    new += "'"
                renamed[g] = new
    q_names = [
        name if j == qu else "*".join(renamed[f.split("^")[0]] + f[len(f.split("^")[0]):] for f in name.split("*"))
        for j, name in enumerate(q.names)
    ]

    pairs = list(itertools.product(range(len(p)), range(len(q))))
    pairs.sort(key=lambda ij: (p.degrees[ij[0]] + q.degrees[ij[1]], ij))
    names = [_pair_name(p.names[i], q_names[j], i == pu, j == qu) for i, j in pairs]
    if len(set(names)) != len(names):
        raise InvariantError("product ring symbol names are not unique")
    pair_index = {ij: k for k, ij in enumerate(pairs)}
    basis = [(names[k], p.degrees[i] + q.degrees[j]) for k, (i, j) in enumerate(pairs)]

    products: dict[tuple[str, str], dict[str, Fraction]] = {}
    for (a, (i1, j1)), (b, (i2, j2)) in itertools.product(enumerate(pairs), repeat=2):
        result: dict[str, Fraction] = {}
        for s, c1 in p.basis_product(i1, i2):
            for t, c2 in q.basis_product(j1, j2):
                key = names[pair_index[(s, t)]]
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        products[(names[a], names[b])] = result

    top = names[pair_index[(p.index_of(p.top), q.index_of(q.top))]]
    ring = RingPresentation(p.dimension + q.dimension, basis, products, top, check=check)
    ring.factors = (p, q)
    ring._pair_index = pair_index
    return ring


def external_product(ring: RingPresentation, a: RingElement, b: RingElement) -> RingElement:
    """The class ``a x b`` in a ring built by :func:`product_ring` from ``(a.ring, b.ring)``."""
    if ring.factors is None:
        raise PreconditionError("ring was not built by product_ring")
    left, right = ring.factors
    if a.ring != left or b.ring != right:
        raise PreconditionError("factor presentations do not match")
    vec = [Fraction(0)] * len(ring)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    vec[ring._pair_index[(i, j)]] += x * y
    return RingElement(ring, tuple(vec))


def point_ring() -> RingPresentation:
    return RingPresentation(0, [("1", 0)], {}, "1")


def projective_space(n: int, generator: str = "h") -> RingPresentation:
    """Cohomology of CP^n: ``Q[h]/(h^{n+1})``."""
    names = ["1"] + [generator if i == 1 else f"{generator}^{i}" for i in range(1, n + 1)]
    basis = [(name, 2 * i) for i, name in enumerate(names)]
    products = {
        (names[i], names[j]): ({names[i + j]: 1} if i + j <= n else {})
        for i in range(n + 1)
        for j in range(n + 1)
    }
    return RingPresentation(n, basis, products, names[n])


def truncated_ring(generators: Sequence[int], weight: int, *, prefix: str = "e") -> RingPresentation:
    """Free graded ring on classes ``e_i`` (complex degree i), truncated above ``weight``.

    Used to compute with symbolic Chern classes.  A presentation needs a
    unique top symbol, so a formal class ``[X]`` of complex degree
    ``weight + 1`` is adjoined; it annihilates every positive-degree class and
    every monomial of total weight above ``weight`` is zero.  Integration on
    such a ring is meaningless; only the multiplication is used.
    """
    gens = sorted(set(generators))
    monomials: list[tuple[int, ...]] = []
    for w in range(weight + 1):
        for lam in partitions(w):
            if all(part in gens for part in lam):
                monomials.append(lam)

    def name(lam: tuple[int, ...]) -> str:
        if not lam:
            return "1"
        out = []
        for part in sorted(set(lam)):
            e = lam.count(part)
            out.append(f"{prefix}{part}" if e == 1 else f"{prefix}{part}^{e}")
        return "*".join(out)

    top = "[X]"
    basis = [(name(lam), 2 * sum(lam)) for lam in monomials] + [(top, 2 * (weight + 1))]
    products: dict[tuple[str, str], dict[str, int]] = {}
    for a, b in itertools.product(monomials, repeat=2):
        lam = tuple(sorted(a + b, reverse=True))
        products[(name(a), name(b))] = {name(lam): 1} if sum(lam) <= weight else {}
    return RingPresentation(weight + 1, basis, products, top)


def parse_class(ring: RingPresentation, terms: Iterable[Mapping]) -> RingElement:
    try:
        return ring.element({t["symbol"]: t["coeff"] for t in _merge(terms)})
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed class: {exc!r}") from exc


def _merge(terms: Iterable[Mapping]) -> list[dict]:
    acc: dict[str, Fraction] = {}
    for t in terms:
        acc[t["symbol"]] = acc.get(t["symbol"], Fraction(0)) + to_fraction(t["coeff"])
    return [{"symbol": k, "coeff": v} for k, v in acc.items()]
