"""Command-line interface and the JSON file formats it speaks.

State files carry {"dims", "kind", "vector"|"matrix"}; marginal files carry
{"dims", "marginals": [{"parties", "matrix"}, ...], "global_purity"?}.
Complex numbers serialize as two-element [re, im] arrays, and every number is
printed with 17 significant digits so doubles round-trip losslessly. Every
report carries a schema_version and the tolerances used for its verdicts.

Exit codes: 0 success / inequality holds, 2 input error, 3 certificate of
violation, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import math
from pathlib import Path

import numpy as np

from .compatibility import (
    CompatReport,
    MarginalSet,
    VERDICT_CONSISTENT,
    VERDICT_INCOMPATIBLE,
    VERDICT_INCONCLUSIVE,
    consistency_precheck,
    theorem1_check,
    theorem2_check,
)
from .config import TOL_INPUT, TOL_ROUTE, TOL_VERDICT
from .hilbert import Operator, PureState, SpaceShape, SubsetMask, validate_density
from .measures import (
    entanglement_E_partitions,
    entanglement_E_projector,
    entanglement_E_subset_sum,
    measure_all,
    subset_purities,
)
from .monogamy import corollary1_scan, disorder_check
from .oracle import EXHAUSTIVE_MAX_PARTIES, exhaustive_E
from .states import random_mixed, random_pure

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_VIOLATION = 3
EXIT_INCONCLUSIVE = 4

_VERDICT_EXIT = {
    VERDICT_CONSISTENT: EXIT_OK,
    VERDICT_INCOMPATIBLE: EXIT_VIOLATION,
    VERDICT_INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


# --- JSON emission (17 significant digits for lossless double round-trips) ---

def _format_number(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite number in JSON output")
    return format(x, ".17g")


def _emit_scalar(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return _format_number(x)
    if isinstance(x, str):
        return json.dumps(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _is_scalar(x) -> bool:
    return x is None or isinstance(x, (bool, int, float, str))


def _emit(obj, level: int, out: list[str]) -> None:
    pad = "  " * level
    if _is_scalar(obj):
        out.append(_emit_scalar(obj))
        return
    if isinstance(obj, (list, tuple)):
        items = list(obj)
        if not items:
            out.append("[]")
            return
        if all(_is_scalar(v) for v in items):
            out.append("[" + ", ".join(_emit_scalar(v) for v in items) + "]")
            return
        out.append("[\n")
        for i, v in enumerate(items):
            out.append("  " * (level + 1))
            _emit(v, level + 1, out)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "]")
        return
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        pairs = list(obj.items())
        out.append("{\n")
        for i, (k, v) in enumerate(pairs):
            if not isinstance(k, str):
                raise TypeError("JSON object keys must be strings")
            out.append("  " * (level + 1) + json.dumps(k) + ": ")
            _emit(v, level + 1, out)
            out.append(",\n" if i < len(pairs) - 1 else "\n")
        out.append(pad + "}")
        return
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    out: list[str] = []
    _emit(obj, 0, out)
    return "".join(out)


# --- state and marginal file formats ---

def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _vector_json(v: np.ndarray) -> list:
    return [_pair(z) for z in v]


def _matrix_json(m: np.ndarray) -> list:
    return [[_pair(z) for z in row] for row in m]


def _parse_complex(obj, where: str) -> complex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in obj)
    ):
        raise ValueError(f"{where}: complex entries must be [re, im] number pairs")
    return complex(obj[0], obj[1])


def _parse_dims(data: dict, where: str) -> SpaceShape:
    dims = data.get("dims")
    if (
        not isinstance(dims, list)
        or not dims
        or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims)
    ):
        raise ValueError(f"{where}: 'dims' must be a nonempty list of integers")
    return SpaceShape(tuple(dims))


def _parse_matrix(obj, side: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != side:
        raise ValueError(f"{where}: expected a {side}x{side} matrix")
    out = np.zeros((side, side), dtype=complex)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != side:
            raise ValueError(f"{where}: expected a {side}x{side} matrix")
        for j, cell in enumerate(row):
            out[i, j] = _parse_complex(cell, where)
    return out


def state_file_dict(state: PureState | Operator) -> dict:
    if isinstance(state, PureState):
        return {
            "dims": list(state.shape.dims),
            "kind": "pure",
            "vector": _vector_json(state.amplitudes),
        }
    return {
        "dims": list(state.shape.dims),
        "kind": "mixed",
        "matrix": _matrix_json(state.entries),
    }


def parse_state_dict(data) -> PureState | Operator:
    if not isinstance(data, dict):
        raise ValueError("state file: top level must be a JSON object")
    shape = _parse_dims(data, "state file")
    kind = data.get("kind")
    if kind == "pure":
        vec = data.get("vector")
        if not isinstance(vec, list) or len(vec) != shape.total_dim:
            raise ValueError(
                f"state file: 'vector' must hold {shape.total_dim} [re, im] pairs"
            )
        amp = np.array([_parse_complex(z, "state file") for z in vec])
        return PureState(shape, amp)
    if kind == "mixed":
        mat = _parse_matrix(data.get("matrix"), shape.total_dim, "state file")
        op = Operator(shape, mat)
        diag = validate_density(op, TOL_INPUT)
        if not diag.passes:
            raise ValueError(f"state file: not a density matrix: {diag.describe()}")
        return op
    raise ValueError("state file: 'kind' must be 'pure' or 'mixed'")


def load_state_file(path: str) -> PureState | Operator:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    return parse_state_dict(data)


def marginal_file_dict(
    shape: SpaceShape,
    entries: dict[SubsetMask, Operator],
    global_purity: float | None = None,
) -> dict:
    marginals = [
        {
            "parties": list(mask.parties),
            "matrix": _matrix_json(entries[mask].entries),
        }
        for mask in sorted(entries, key=lambda m: (m.cardinality, m.bits))
    ]
    doc: dict = {"dims": list(shape.dims), "marginals": marginals}
    if global_purity is not None:
        doc["global_purity"] = float(global_purity)
    return doc


def parse_marginal_dict(data) -> tuple[MarginalSet, float | None]:
    if not isinstance(data, dict):
        raise ValueError("marginal file: top level must be a JSON object")
    shape = _parse_dims(data, "marginal file")
    raw = data.get("marginals")
    if not isinstance(raw, list) or not raw:
        raise ValueError("marginal file: 'marginals' must be a nonempty list")
    entries: dict[SubsetMask, Operator] = {}
    for i, item in enumerate(raw):
        where = f"marginal file entry {i}"
        if not isinstance(item, dict):
            raise ValueError(f"{where}: must be an object")
        parties = item.get("parties")
        if (
            not isinstance(parties, list)
            or not parties
            or not all(isinstance(p, int) and not isinstance(p, bool) for p in parties)
            or sorted(set(parties)) != parties
        ):
            raise ValueError(
                f"{where}: 'parties' must be a strictly increasing list of party indices"
            )
        mask = SubsetMask.from_parties(parties, shape.n_parties)
        if mask in entries:
            raise ValueError(f"{where}: duplicate marginal for parties {parties}")
        side = shape.subshape(mask).total_dim
        mat = _parse_matrix(item.get("matrix"), side, where)
        entries[mask] = Operator(shape.subshape(mask), mat)
    purity_raw = data.get("global_purity")
    global_purity: float | None = None
    if purity_raw is not None:
        if isinstance(purity_raw, bool) or not isinstance(purity_raw, (int, float)):
            raise ValueError("marginal file: 'global_purity' must be a number")
        global_purity = float(purity_raw)
    return MarginalSet(shape, entries), global_purity


def load_marginal_file(path: str) -> tuple[MarginalSet, float | None]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    return parse_marginal_dict(data)


# --- report documents ---

def _purity_items(purities: dict[SubsetMask, float] | None):
    if purities is None:
        return None
    return [
        {"parties": list(mask.parties), "purity": float(purities[mask])}
        for mask in sorted(purities, key=lambda m: (m.cardinality, m.bits))
    ]


def error_dict(message: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": "error", "message": message}


def compat_report_dict(rep: CompatReport, violations) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "compat_report",
        "theorem": rep.theorem,
        "dims": list(rep.dims),
        "verdict": rep.verdict,
        "lhs": rep.lhs,
        "lhs_proper": rep.lhs_proper,
        "bound": rep.bound,
        "slack": rep.slack,
        "assumed_global_purity": rep.assumed_global_purity,
        "per_subset_purities": _purity_items(rep.per_subset_purities),
        "missing_subsets": [list(m.parties) for m in rep.missing_subsets],
        "consistency_violations": [
            {
                "subset": list(v.subset.parties),
                "superset": list(v.superset.parties),
                "max_deviation": float(v.max_deviation),
            }
            for v in violations
        ],
        "tolerances": {"verdict": rep.tol_verdict, "input": TOL_INPUT},
    }


# --- commands ---

def cmd_measure(args) -> int:
    state = load_state_file(args.state)
    if not isinstance(state, PureState):
        raise ValueError("the measure is defined for pure states; got kind 'mixed'")
    n = state.shape.n_parties
    values: dict[str, float | None] = {
        "partitions": None,
        "projector": None,
        "subset_sum": None,
        "oracle": None,
    }
    purities = None
    if args.route == "all":
        rep = measure_all(state)
        values["projector"] = rep.value_projector
        values["partitions"] = rep.value_partitions
        values["subset_sum"] = rep.value_subset_sum
        purities = rep.per_subset_purities
        if n % 2 == 0 and n <= EXHAUSTIVE_MAX_PARTIES:
            values["oracle"] = exhaustive_E(state)
    elif args.route == "partitions":
        values["partitions"] = entanglement_E_partitions(state)
        purities = subset_purities(state)
    elif args.route == "projector":
        values["projector"] = entanglement_E_projector(state)
    elif args.route == "subset-sum":
        values["subset_sum"] = entanglement_E_subset_sum(state)
        purities = subset_purities(state)
    else:
        values["oracle"] = exhaustive_E(state)
    present = {k: v for k, v in values.items() if v is not None}
    deltas = {}
    names = sorted(present)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            deltas[f"{a}_vs_{b}"] = abs(present[a] - present[b])
    max_delta = max(deltas.values()) if deltas else None
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "measure_report",
        "dims": list(state.shape.dims),
        "route": args.route,
        "values": values,
        "route_deltas": deltas,
        "max_route_delta": max_delta,
        "routes_agree": None if max_delta is None else max_delta <= TOL_ROUTE,
        "per_subset_purities": _purity_items(purities),
        "tolerances": {"route_agreement": TOL_ROUTE, "input": TOL_INPUT},
    }
    print(dumps(doc))
    return EXIT_OK


def cmd_compat(args) -> int:
    marginals, file_purity = load_marginal_file(args.marginals)
    if args.pure and args.global_purity is not None:
        raise ValueError("--pure and --global-purity are mutually exclusive")
    if args.pure:
        rep = theorem1_check(marginals)
    else:
        g = args.global_purity if args.global_purity is not None else file_purity
        rep = theorem2_check(marginals, g)
    violations = consistency_precheck(marginals)
    print(dumps(compat_report_dict(rep, violations)))
    return _VERDICT_EXIT[rep.verdict]


def cmd_monogamy(args) -> int:
    state = load_state_file(args.state)
    if not isinstance(state, PureState):
        raise ValueError("monogamy reports are defined for pure states; got kind 'mixed'")
    reports = corollary1_scan(state)
    all_hold = all(r.holds for r in reports)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "monogamy_report",
        "dims": list(state.shape.dims),
        "reports": [
            {
                "parties": list(r.index_set.parties),
                "lhs": r.lhs,
                "rhs": r.rhs,
                "slack": r.slack,
                "holds": r.holds,
            }
            for r in reports
        ],
        "all_hold": all_hold,
        "tolerances": {"verdict": TOL_VERDICT},
    }
    print(dumps(doc))
    return EXIT_OK if all_hold else EXIT_VIOLATION


def cmd_disorder(args) -> int:
    state = load_state_file(args.state)
    rho = state.density() if isinstance(state, PureState) else state
    rep = disorder_check(rho)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "disorder_report",
        "dims": list(rho.shape.dims),
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "slack": rep.slack,
        "holds": rep.holds,
        "tolerances": {"verdict": TOL_VERDICT},
    }
    print(dumps(doc))
    return EXIT_OK if rep.holds else EXIT_VIOLATION


def _parse_dims_arg(text: str) -> SpaceShape:
    try:
        dims = tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--dims must be comma-separated integers, got {text!r}") from exc
    return SpaceShape(dims)


def cmd_sample(args) -> int:
    shape = _parse_dims_arg(args.dims)
    if args.kind == "pure":
        if args.rank is not None:
            raise ValueError("--rank applies only to mixed sampling")
        state: PureState | Operator = random_pure(shape, args.seed)
    else:
        rank = args.rank if args.rank is not None else shape.total_dim
        state = random_mixed(shape, rank, args.seed)
    text = dumps(state_file_dict(state)) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def eq8_marginal_file() -> dict:
    """The built-in four-qubit marginal set that no global state can produce."""
    third = 1.0 / 3.0
    single = np.diag([2.0 * third, third]).astype(complex)
    pair = np.zeros((4, 4), dtype=complex)
    pair[0, 0] = third
    pair[1:3, 1:3] = third
    triple = np.zeros((8, 8), dtype=complex)
    for i in (1, 2, 4):
        for j in (1, 2, 4):
            triple[i, j] = third
    shape = SpaceShape((2, 2, 2, 2))
    entries: dict[SubsetMask, Operator] = {}
    for bits in range(1, 15):
        mask = SubsetMask(bits, 4)
        matrix = {1: single, 2: pair, 3: triple}[mask.cardinality]
        entries[mask] = Operator(shape.subshape(mask), matrix)
    return marginal_file_dict(shape, entries)


def cmd_demo(args) -> int:
    file_dict = eq8_marginal_file()
    marginals, global_purity = parse_marginal_dict(file_dict)
    rep = theorem2_check(marginals, global_purity)
    violations = consistency_precheck(marginals)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "demo_eq8",
        "marginal_file": file_dict,
        "certificate": compat_report_dict(rep, violations),
    }
    print(dumps(doc))
    return _VERDICT_EXIT[rep.verdict]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcert",
        description=(
            "Multipartite entanglement measure and marginal-compatibility "
            "certificates over JSON state files."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="evaluate the entanglement measure of a pure state")
    p.add_argument("--state", required=True, help="path to a pure state file")
    p.add_argument(
        "--route",
        choices=["partitions", "projector", "subset-sum", "all", "oracle"],
        default="all",
    )
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("compat", help="run a compatibility certificate on a marginal set")
    p.add_argument("--marginals", required=True, help="path to a marginal file")
    p.add_argument("--pure", action="store_true", help="claim a pure global state")
    p.add_argument("--global-purity", type=float, default=None, dest="global_purity")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("monogamy", help="monogamy inequality scan of a pure state")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_monogamy)

    p = sub.add_parser("disorder", help="disorder inequality check of a density matrix")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_disorder)

    p = sub.add_parser("sample", help="write a deterministic random state file")
    p.add_argument("--dims", required=True, help="comma-separated party dimensions")
    p.add_argument("--kind", choices=["pure", "mixed"], default="pure")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("demo", help="built-in demonstrations")
    p.add_argument("topic", choices=["eq8"])
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(dumps(error_dict(str(exc))))
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
