"""Command-line front end.

Problems are JSON documents::

    {"name": "triangle", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]],
     "A": [], "B": [[0, 1]]}

Exit codes: 0 all verdicts true, 1 some verdict false, 2 bad input,
3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from typing import Any, Sequence

from .enumeration import count_valid, verify_theorem_main
from .equivalence import ReversalMode, equivalence_classes, filter_valid_classes, verify_theorem_eqclass
from .errors import SizeGuardError
from .fourientation import ConstraintSystem
from .graph import Multigraph
from .series import eval_identity, ira_series, random_weights, verify_ira

EXIT_OK, EXIT_VERDICT, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class Problem:
    graph: Multigraph
    constraints: ConstraintSystem
    name: str | None
    digest: str


def _vertex_pairs(doc: dict, key: str, n: int, required: bool) -> list[tuple[int, int]]:
    if key not in doc:
        if required:
            raise InputError(f"{key}: missing field")
        return []
    raw = doc[key]
    if not isinstance(raw, list):
        raise InputError(f"{key}: expected a list of [u, v] pairs")
    out = []
    for i, pair in enumerate(raw):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise InputError(f"{key}[{i}]: expected a pair [u, v], got {pair!r}")
        for j, x in enumerate(pair):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"{key}[{i}][{j}]: expected an integer vertex id, got {x!r}")
            if not 0 <= x < n:
                raise InputError(f"{key}[{i}][{j}]: vertex {x} is outside [0, {n})")
        out.append((pair[0], pair[1]))
    return out


def parse_problem(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("top level: expected a JSON object")
    n = doc.get("vertices")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"vertices: expected a nonnegative integer, got {n!r}")
    edges = _vertex_pairs(doc, "edges", n, required=True)
    A = _vertex_pairs(doc, "A", n, required=False)
    B = _vertex_pairs(doc, "B", n, required=False)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("name: expected a string")
    canonical = json.dumps({"vertices": n, "edges": edges, "A": A, "B": B, "name": name}, sort_keys=True, separators=(",", ":"))
    digest = "sha256:" + hashlib.sha256(canonical.encode()).hexdigest()
    return Problem(Multigraph(n, tuple(edges)), ConstraintSystem(tuple(A), tuple(B)), name, digest)


def load_problem(path: str) -> Problem:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_problem(text)


def parse_solid(spec: str, n_edges: int) -> list[int] | None:
    """Solid-set masks for a spec: ``none``, ``all``, ``every`` (returns None), or ``0,2,5``."""
    spec = spec.strip()
    if spec == "none":
        return [0]
    if spec == "all":
        return [(1 << n_edges) - 1]
    if spec == "every":
        return None
    mask = 0
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            i = int(part)
        except ValueError:
            raise InputError(f"--solid: expected none, all, every or edge indices, got {spec!r}") from None
        if not 0 <= i < n_edges:
            raise InputError(f"--solid: edge index {i} is outside [0, {n_edges})")
        mask |= 1 << i
    return [mask]


def _edge_list(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _counts_payload(counts: dict[int, int]) -> dict[str, Any]:
    return {
        "counts": [{"solid": _edge_list(s), "solid_mask": s, "count": k} for s, k in sorted(counts.items())],
        "verdict": len(set(counts.values())) <= 1,
    }


def cmd_count(args) -> tuple[dict, bool]:
    problem = load_problem(args.graph)
    g, c = problem.graph, problem.constraints
    masks = parse_solid(args.solid, g.n_edges)
    if masks is None:
        payload = _counts_payload(verify_theorem_main(g, c).counts)
        return _wrap("count", problem, payload), payload["verdict"]
    (s,) = masks
    payload = {"solid": _edge_list(s), "solid_mask": s, "count": count_valid(g, c, s, workers=args.threads)}
    return _wrap("count", problem, payload), True


def cmd_classes(args) -> tuple[dict, bool]:
    problem = load_problem(args.graph)
    g, c = problem.graph, problem.constraints
    mode = ReversalMode(args.mode)
    masks = parse_solid(args.solid, g.n_edges)
    if masks is None:
        payload = _counts_payload(verify_theorem_eqclass(g, c, mode).counts)
        payload["mode"] = mode.value
        return _wrap("classes", problem, payload), payload["verdict"]
    (s,) = masks
    part = equivalence_classes(g, c, s, mode)
    valid = filter_valid_classes(part, g, c, mode)
    payload = {
        "mode": mode.value,
        "solid": _edge_list(s),
        "solid_mask": s,
        "valid_fourientations": len(part.members),
        "classes": len(part),
        "valid_classes": len(valid),
        "representatives": [str(info.representative) for info in valid.classes],
        "class_sizes": [info.size for info in valid.classes],
    }
    return _wrap("classes", problem, payload), True


VERIFY_TARGETS = ("main", "eqclass-cyc", "eqclass-coc", "eqclass-cc", "identity", "ira")


def cmd_verify(args) -> tuple[dict, bool]:
    which = args.which
    if which == "ira":
        series = ira_series(args.max_n)
        ok = verify_ira(args.max_n)
        payload = {
            "max_n": args.max_n,
            "t": list(series.t),
            "s": list(series.s),
            "lhs": [str(x) for x in series.lhs.coeffs],
            "rhs": [str(x) for x in series.rhs.coeffs],
            "verdict": ok,
        }
        return {"command": "verify ira", "name": None, "input_digest": None, "result": payload}, ok
    if args.graph is None:
        raise InputError(f"--graph is required for verify {which}")
    problem = load_problem(args.graph)
    g, c = problem.graph, problem.constraints
    if which == "main":
        payload = _counts_payload(verify_theorem_main(g, c).counts)
    elif which.startswith("eqclass-"):
        mode = ReversalMode(which.split("-", 1)[1])
        payload = _counts_payload(verify_theorem_eqclass(g, c, mode).counts)
        payload["mode"] = mode.value
    else:
        w = random_weights(g, args.seed)
        lhs, rhs = eval_identity(g, w)
        payload = {"seed": args.seed, "lhs": lhs, "rhs": rhs, "verdict": lhs == rhs}
    return _wrap(f"verify {which}", problem, payload), payload["verdict"]


def _wrap(command: str, problem: Problem, payload: dict) -> dict:
    return {"command": command, "name": problem.name, "input_digest": problem.digest, "result": payload}


def _table(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("name"):
        lines.append(f"name: {report['name']}")
    result = report["result"]
    if "counts" in result:
        width = max([len(",".join(map(str, row["solid"]))) for row in result["counts"]] + [5])
        lines.append(f"{'solid':<{width}}  count")
        for row in result["counts"]:
            lines.append(f"{','.join(map(str, row['solid'])) or '-':<{width}}  {row['count']}")
    for key in sorted(result):
        if key != "counts":
            lines.append(f"{key}: {result[key]}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fourientations", description="Exact counts of constrained fourientations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count valid fourientations")
    p.add_argument("--graph", required=True)
    p.add_argument("--solid", default="none", help="none, all, every, or comma-separated edge indices")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classes", parents=[common], help="reversal classes of valid fourientations")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=[m.value for m in ReversalMode], default="cyc")
    p.add_argument("--solid", default="none")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", parents=[common], help="check an equidistribution statement")
    p.add_argument("which", choices=VERIFY_TARGETS)
    p.add_argument("--graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, ok = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardError as exc:
        print(f"error: size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(_table(report))
    return EXIT_OK if ok else EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
