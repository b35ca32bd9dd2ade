"""Command-line entry point.

Every command prints one JSON document (or an aligned text rendering of it
with ``--format table``).  Failures print ``{"error": {...}}`` on stderr and
exit with 2 (bad input), 3 (internal invariant violated) or 4 (precondition).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import partitions as P
from . import report as R
from .catalog import bundle_from_json, manifold, parse_model
from .classes import ChernVector, segre
from .cobordism import decompose, format_coords
from .errors import InvariantError, PreconditionError, SchemaError
from .families import DolgachevModel, Xq_vector, check_q
from .projective import (
    BundleOnBase,
    chern_number_oracle,
    chern_number_pbundle,
    f_class,
    f_closed_form,
    pbundle_chern_vector,
    pbundle_oracle_ring,
    positivity_scan,
    symbolic_bundle,
)
from .rational import fmt
from .ring import RingPresentation, ring_validate

EXIT_SCHEMA, EXIT_INVARIANT, EXIT_PRECONDITION = 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message)


# -- input helpers ----------------------------------------------------------------


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def _tuple(text: str | None, what: str) -> tuple[int, ...]:
    if text is None:
        raise SchemaError(f"--{what} is required")
    try:
        values = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise SchemaError(f"--{what} must be comma-separated integers, got {text!r}") from None
    if any(v < 0 for v in values):
        raise SchemaError(f"--{what} entries must be nonnegative")
    return values


def _partition(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    parts = _tuple(text, "partition")
    if not parts or any(p == 0 for p in parts):
        raise SchemaError("--partition needs positive parts")
    return P.normalize(parts)


def _require(value, flag: str):
    if value is None:
        raise SchemaError(f"{flag} is required")
    return value


def _model(args) -> tuple[DolgachevModel, int, object]:
    params = parse_model(_read_json(args.model_file)) if args.model_file else parse_model({})
    try:
        model = DolgachevModel(params["w"], params["t"])
    except PreconditionError as exc:
        raise SchemaError(str(exc)) from exc
    genus = params["genus"] if args.genus is None else args.genus
    if genus < 0:
        raise PreconditionError("genus must be nonnegative")
    return model, genus, params["polarization"]


def _bundle(args):
    if args.input:
        path = Path(args.input)
        return bundle_from_json(_read_json(args.input), path.parent)
    if args.symbolic:
        k = _require(args.k, "--k")
        if k < 1:
            raise PreconditionError("rank must be at least 1")
        return symbolic_bundle(k, 2 if args.weight is None else args.weight)
    raise SchemaError("give --input <bundle.json> or --symbolic --k <rank>")


def _class_json(x) -> dict:
    return {"class": str(x), "terms": x.to_json()}


# -- commands ---------------------------------------------------------------------


def cmd_validate(args) -> tuple[dict, int]:
    source = _require(args.ring, "--ring")
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        ring = RingPresentation.from_json(_read_json(source), check=False)
    else:
        ring = manifold(source).ring
    result = ring_validate(ring)
    doc = {"ring": source, "dimension": ring.dimension, "basis_size": len(ring), **result.to_json()}
    return doc, 0 if result else EXIT_INVARIANT


def cmd_segre(args) -> tuple[dict, int]:
    bundle = _bundle(args)
    top = args.max_degree
    if top is None:
        top = bundle.base_dimension - 1 if args.symbolic and not args.input else bundle.base_dimension
    classes = segre(bundle.bundle, top)
    return {
        "rank": bundle.rank,
        "segre": [{"degree": j, **_class_json(s)} for j, s in enumerate(classes)],
    }, 0


def cmd_f(args) -> tuple[dict, int]:
    a = _tuple(args.tuple, "tuple")
    if args.symbolic and not args.input:
        k = _require(args.k, "--k")
        if args.weight is None:
            args.weight = max(1, sum(a) - (k - 1))
    bundle = _bundle(args)
    value = f_closed_form(a, bundle) if args.closed_form else f_class(a, bundle)
    return {"tuple": list(a), "rank": bundle.rank, **_class_json(value)}, 0


def _integrable_bundle(args) -> BundleOnBase:
    # the symbolic ring has a formal top class, so its integrals carry no information
    if args.symbolic and not args.input:
        raise PreconditionError("Chern numbers need a geometric base; pass --input <bundle.json>")
    return _bundle(args)


def cmd_pbundle(args) -> tuple[dict, int]:
    bundle = _integrable_bundle(args)
    lam = _partition(args.partition)
    doc = {"dimension": bundle.dimension, "rank": bundle.rank}
    if lam is not None:
        doc.update({"partition": list(lam), "value": fmt(chern_number_pbundle(lam, bundle))})
    else:
        doc["chern_numbers"] = pbundle_chern_vector(bundle).to_json()["entries"]
    return doc, 0


def cmd_oracle_check(args) -> tuple[dict, int]:
    bundle = _integrable_bundle(args)
    model = pbundle_oracle_ring(bundle)
    valid = ring_validate(model.ring)
    rows = []
    for lam in P.partitions(bundle.dimension):
        a, b = chern_number_pbundle(lam, bundle), chern_number_oracle(lam, bundle, model)
        rows.append({"partition": list(lam), "formula": fmt(a), "oracle": fmt(b), "agree": a == b})
    agree = all(r["agree"] for r in rows)
    doc = {"dimension": bundle.dimension, "oracle_ring_valid": bool(valid), "all_agree": agree, "rows": rows}
    return doc, 0 if agree and valid else EXIT_INVARIANT


def cmd_positivity(args) -> tuple[dict, int]:
    k = _require(args.k, "--k")
    rows = [{"partition": list(r.partition), "value": r.value, "sign": r.sign} for r in positivity_scan(k)]
    return {"k": k, "rows": rows, "negative": sum(r["sign"] == "negative" for r in rows)}, 0


def cmd_family(args) -> tuple[dict, int]:
    n = _require(args.n, "--n")
    model, genus, _ = _model(args)
    if args.q is not None:
        check_q(args.q)
    lam = _partition(args.partition)
    if lam is not None and sum(lam) != n:
        raise PreconditionError(f"{P.fmt(lam)} is not a partition of {n}")
    if n < 4:
        raise PreconditionError("family requires n >= 4")
    return R.family_section(n, genus, model, lam, args.q), 0


def cmd_decompose(args) -> tuple[dict, int]:
    model, genus, polarization = _model(args)
    if args.input:
        doc = _read_json(args.input)
        if isinstance(doc, dict) and "entries" in doc:
            vector = ChernVector.from_json(doc)
        else:
            vector = pbundle_chern_vector(bundle_from_json(doc, Path(args.input).parent))
        coords = decompose(vector, polarization)
        return {"dimension": vector.dimension, "coordinates": format_coords(coords)}, 0
    n = _require(args.n, "--n")
    if n < 4:
        raise PreconditionError("family requires n >= 4")
    if args.q is not None:
        check_q(args.q)
        coords = decompose(Xq_vector(args.q, n, genus, model), polarization)
        return {"n": n, "q": args.q, "coordinates": format_coords(coords)}, 0
    return R.decomposition_section(n, genus, model, polarization), 0


def cmd_ideals(args) -> tuple[dict, int]:
    n = _require(args.n, "--n")
    _, _, polarization = _model(args)
    return R.ideals_section(n, polarization), 0


def cmd_spans(args) -> tuple[dict, int]:
    return R.spans_section(_require(args.n, "--n")), 0


def cmd_report(args) -> tuple[dict, int]:
    model, genus, polarization = _model(args)
    return R.report(_require(args.n, "--n"), genus, model, polarization), 0


COMMANDS = {
    "validate": (cmd_validate, "check the invariants of a ring presentation"),
    "segre": (cmd_segre, "Segre classes of a bundle"),
    "f": (cmd_f, "the class f(a) for a tuple a"),
    "pbundle": (cmd_pbundle, "Chern numbers of P(E)"),
    "oracle-check": (cmd_oracle_check, "compare the f-sum with the P(E) cohomology ring"),
    "positivity": (cmd_positivity, "sign of the weight k+1 constant over partitions of k+1"),
    "family": (cmd_family, "Chern numbers of X_q as affine functions of q"),
    "decompose": (cmd_decompose, "alpha-monomial coordinates"),
    "ideals": (cmd_ideals, "ranks of the ideal slices I and J"),
    "spans": (cmd_spans, "spans of chi^p and Pontryagin functionals"),
    "report": (cmd_report, "all sections for n = 4..N"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--model-file", help='JSON like {"w": "1", "t": "1", "genus": 0, "polarization": 2}')
    common.add_argument("--n", type=int)
    common.add_argument("--partition", help="comma-separated parts, e.g. 2,1,1")
    common.add_argument("--q", type=int)
    common.add_argument("--genus", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--tuple", help="comma-separated entries, order kept")
    common.add_argument("--symbolic", action="store_true", help="free Chern classes e1, e2, ...")
    common.add_argument("--weight", type=int, help="truncation weight of the symbolic ring")
    common.add_argument("--closed-form", action="store_true")
    common.add_argument("--max-degree", type=int)
    common.add_argument("--input", help="bundle JSON document")
    common.add_argument("--ring", help="ring JSON file or catalog name")

    parser = _Parser(prog="chernbound", description="Exact Chern numbers of projective bundles.")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


# -- output -----------------------------------------------------------------------


def _int_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in x)


def _scalar(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if _int_list(x):
        return ",".join(str(v) for v in x) or "()"
    if isinstance(x, list):
        return "  ".join(_scalar(v) for v in x) or "-"
    return str(x)


def _is_flat(x) -> bool:
    if isinstance(x, list):
        return all(not isinstance(v, (dict, list)) or _int_list(v) for v in x)
    return not isinstance(x, dict)


def _table(rows: list[dict]) -> list[str]:
    keys: list[str] = []
    for r in rows:
        keys += [k for k in r if k not in keys]
    cells = [[_scalar(r.get(k, "")) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return lines


def render_table(doc, indent: str = "") -> list[str]:
    """Aligned text: scalars as ``key  value``, lists of records as column tables."""
    lines: list[str] = []
    flat = [(k, v) for k, v in doc.items() if _is_flat(v)]
    width = max((len(k) for k, _ in flat), default=0)
    for k, v in doc.items():
        if _is_flat(v):
            lines.append(f"{indent}{k.ljust(width)}  {_scalar(v)}")
        elif isinstance(v, dict):
            lines.append(f"{indent}[{k}]")
            lines += render_table(v, indent + "  ")
        elif all(isinstance(r, dict) for r in v) and all(all(_is_flat(x) for x in r.values()) for r in v):
            lines.append(f"{indent}[{k}]")
            lines += [indent + "  " + line for line in _table(v)]
        else:
            for i, item in enumerate(v):
                lines.append(f"{indent}[{k} {i + 1}]")
                lines += render_table(item, indent + "  ") if isinstance(item, dict) else [indent + "  " + _scalar(item)]
    return lines


def _emit(doc, fmt_name: str, stream) -> None:
    if fmt_name == "table":
        stream.write("\n".join(render_table(doc)) + "\n")
    else:
        stream.write(json.dumps(doc, indent=2) + "\n")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run the command and write its output; return the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    status_of = ((SchemaError, EXIT_SCHEMA), (InvariantError, EXIT_INVARIANT), (PreconditionError, EXIT_PRECONDITION))
    try:
        args = build_parser().parse_args(argv)
        handler = COMMANDS[args.command][0]
        doc, status = handler(args)
    except (SchemaError, InvariantError, PreconditionError) as exc:
        status = next(code for kind, code in status_of if isinstance(exc, kind))
        error = {"error": {"kind": type(exc).__name__, "message": str(exc), "status": status}}
        stderr.write(json.dumps(error) + "\n")
        return status
    _emit(doc, args.format, stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
