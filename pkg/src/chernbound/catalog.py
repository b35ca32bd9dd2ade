"""Named base manifolds and the JSON loaders for rings and bundles.

Catalog names::

    point            a point
    ppN              complex projective space CP^N (pp1, pp2, ...)
    curve(g)         even cohomology of a genus-g curve, c_1 = (2-2g)F
    abelian(d)       even cohomology of an abelian surface, theta^2 = d [pt]
    dolgachev(w,t,q) the <1, omega, G, pt> model of a Dolgachev surface S_q
    A x B            product of two catalog entries

Arguments are optional and may be rationals written ``p/q``.
"""

from __future__ import annotations

import json
import re
from math import comb
from pathlib import Path
from typing import Mapping

from .classes import ChernData, Manifold
from .errors import SchemaError
from .projective import BundleOnBase
from .rational import to_fraction
from .ring import RingPresentation, external_product, parse_class, point_ring, product_ring, projective_space

__all__ = [
    "point",
    "projective",
    "curve",
    "abelian_surface",
    "dolgachev_surface",
    "product_manifold",
    "manifold",
    "load_ring",
    "load_base",
    "bundle_from_json",
    "parse_model",
    "curve_ring",
    "abelian_ring",
    "dolgachev_ring",
]


def point() -> Manifold:
    ring = point_ring()
    return Manifold(ring, ChernData(ring, 0))


def projective(n: int) -> Manifold:
    ring = projective_space(n)
    h = ring.symbol("h")
    # c(CP^n) = (1 + h)^(n+1)
    classes = [comb(n + 1, i) * h**i for i in range(1, n + 1)]
    return Manifold(ring, ChernData(ring, n, classes))


def curve_ring() -> RingPresentation:
    return RingPresentation(1, [("1", 0), ("F", 2)], {("F", "F"): {}}, "F")


def curve(genus: int = 0) -> Manifold:
    ring = curve_ring()
    return Manifold(ring, ChernData(ring, 1, [(2 - 2 * genus) * ring.symbol("F")]))


def abelian_ring(polarization=2) -> RingPresentation:
    d = to_fraction(polarization)
    return RingPresentation(
        2,
        [("1", 0), ("theta", 2), ("pt", 4)],
        {("theta", "theta"): {"pt": d}},
        "pt",
    )


def abelian_surface(polarization=2) -> Manifold:
    ring = abelian_ring(polarization)
    return Manifold(ring, ChernData(ring, 2))


def dolgachev_ring(w=1, t=1) -> RingPresentation:
    """The subring <1, omega, G, [pt]> with omega^2 = w, omega.G = t, G^2 = 0."""
    w, t = to_fraction(w), to_fraction(t)
    if w <= 0:
        raise SchemaError("omega^2 must be positive")
    if t == 0:
        raise SchemaError("omega.G must be nonzero")
    return RingPresentation(
        2,
        [("1", 0), ("omega", 2), ("G", 2), ("pt", 4)],
        {("omega", "omega"): {"pt": w}, ("omega", "G"): {"pt": t}, ("G", "G"): {}},
        "pt",
    )


def dolgachev_surface(w=1, t=1, q: int = 3) -> Manifold:
    """c_1 = (q-2) G and c_2 = 12 [pt]."""
    ring = dolgachev_ring(w, t)
    return Manifold(ring, ChernData(ring, 2, [(q - 2) * ring.symbol("G"), 12 * ring.symbol("pt")]))


def product_manifold(a: Manifold, b: Manifold) -> Manifold:
    ring = product_ring(a.ring, b.ring)
    total = external_product(ring, a.tangent.total(), b.tangent.total())
    n = ring.dimension
    return Manifold(ring, ChernData(ring, n, [total.homogeneous(2 * i) for i in range(1, n + 1)]))


_ATOM = re.compile(r"^([a-z]+?)(\d*)(?:\((.*)\))?$")


def _split_product(name: str) -> list[str]:
    parts, depth, current = [], 0, ""
    for ch in name:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += ch
    parts.append(current)
    return [p.strip() for p in parts]


def _atom(name: str) -> Manifold:
    match = _ATOM.match(name.replace(" ", ""))
    if not match:
        raise SchemaError(f"unknown catalog entry {name!r}")
    kind, number, args = match.groups()
    argv = [a for a in (args or "").split(",") if a]
    try:
        if kind == "point" and not number and not argv:
            return point()
        if kind == "pp" and number and not argv:
            return projective(int(number))
        if kind == "curve" and not number and len(argv) <= 1:
            return curve(int(argv[0]) if argv else 0)
        if kind == "abelian" and not number and len(argv) <= 1:
            return abelian_surface(argv[0] if argv else 2)
        if kind == "dolgachev" and not number and len(argv) <= 3:
            w = argv[0] if len(argv) > 0 else 1
            t = argv[1] if len(argv) > 1 else 1
            q = int(argv[2]) if len(argv) > 2 else 3
            return dolgachev_surface(w, t, q)
    except ValueError as exc:
        raise SchemaError(f"bad arguments in {name!r}: {exc}") from exc
    raise SchemaError(f"unknown catalog entry {name!r}")


def manifold(name: str) -> Manifold:
    """Look up a catalog entry such as ``"pp1 x curve(2)"``."""
    factors = _split_product(name)
    if any(not f for f in factors):
        raise SchemaError(f"malformed product {name!r}")
    result = _atom(factors[0])
    for f in factors[1:]:
        result = product_manifold(result, _atom(f))
    return result


def load_ring(source: str | Mapping, base_dir: Path | None = None) -> RingPresentation:
    """A ring from a JSON document, a path to one, or a catalog name."""
    if isinstance(source, Mapping):
        return RingPresentation.from_json(source)
    path = Path(source) if base_dir is None else base_dir / source
    if path.suffix == ".json" or path.is_file():
        return RingPresentation.from_json(_read_json(path))
    return manifold(source).ring


def load_base(source: str | Mapping, base_dir: Path | None = None) -> Manifold | RingPresentation:
    if isinstance(source, str):
        path = Path(source) if base_dir is None else base_dir / source
        if not (path.suffix == ".json" or path.is_file()):
            return manifold(source)
    return load_ring(source, base_dir)


def _read_json(path: Path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def bundle_from_json(data: Mapping, base_dir: Path | None = None) -> BundleOnBase:
    """Parse ``{"base": ..., "tangent": [...], "bundle": {"rank": k, "classes": [...]}}``.

    ``tangent`` may be omitted when ``base`` names a catalog entry.
    """
    try:
        base = load_base(data["base"], base_dir)
        if isinstance(base, Manifold):
            ring, tangent = base.ring, base.tangent
        else:
            ring, tangent = base, None
        if "tangent" in data:
            tangent = ChernData(ring, ring.dimension, [parse_class(ring, c) for c in data["tangent"]])
        if tangent is None:
            raise SchemaError("'tangent' is required when the base is a ring file")
        entry = data["bundle"]
        rank = int(entry["rank"])
        classes = [parse_class(ring, c) for c in entry.get("classes", [])]
        return BundleOnBase(tangent, ChernData(ring, rank, classes))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed bundle document: {exc!r}") from exc


def parse_model(data: Mapping) -> dict:
    """Model parameters ``{"w": "1", "t": "1", "genus": 0, "polarization": 2}``."""
    unknown = set(data) - {"w", "t", "genus", "polarization"}
    if unknown:
        raise SchemaError(f"unknown model parameters {sorted(unknown)}")
    return {
        "w": to_fraction(data.get("w", 1)),
        "t": to_fraction(data.get("t", 1)),
        "genus": int(data.get("genus", 0)),
        "polarization": to_fraction(data.get("polarization", 2)),
    }
