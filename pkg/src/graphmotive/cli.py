"""Command-line front end: ``graphmotive <command> ...``.

Exit codes: 0 success, 1 verification failed, 2 invalid input,
3 invalid embedding, 4 size guard tripped.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field

from .count import DEFAULT_MAX_WORK, count_zeros, cremona_point_check, verify_class
from .embedding import RotationSystem, dual, family_rotation
from .errors import DomainTooLargeError, EmbeddingError, GraphMotiveError, NotConnectedError
from .graph import FAMILIES, Multigraph
from .irred import classify_graph, classify_poly
from .kirchhoff import psi
from .motive import ClassPoly, banana_displayed_value, family_class
from .multipoly import is_prime

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_EMBEDDING, EXIT_SIZE = range(5)


@dataclass
class RunReport:
    command: str
    inputs_digest: str
    result: dict
    passed: bool | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "result": self.result,
            "pass": self.passed,
            **({"extra": self.extra} if self.extra else {}),
        }

    @classmethod
    def from_json(cls, data: dict) -> RunReport:
        return cls(data["command"], data["inputs_digest"], data["result"], data["pass"], data.get("extra", {}))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _digest(inputs: dict) -> str:
    return hashlib.sha256(json.dumps(inputs, sort_keys=True).encode()).hexdigest()[:16]


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphMotiveError(f"cannot read {path}: {exc}") from exc


def _source(args) -> tuple[Multigraph, RotationSystem | None, dict]:
    """Graph (and rotation, when available) from a file or family flags."""
    if args.file:
        data = _load(args.file)
        if "rotation" in data:
            r = RotationSystem.from_json(data)
            return r.graph, r, data
        return Multigraph.from_json(data), None, data
    if args.family and args.n is not None:
        r = family_rotation(args.family, args.n)
        return r.graph, r, {"family": args.family, "n": args.n}
    raise GraphMotiveError("give a graph file or --family and --n")


def _emit(args, report: RunReport, text: str) -> None:
    print(report.dumps() if args.format == "json" else text)


def cmd_psi(args) -> int:
    g, _, inputs = _source(args)
    p = psi(g)
    report = RunReport("psi", _digest(inputs), {"text": str(p), "poly": p.to_json()})
    _emit(args, report, str(p))
    return EXIT_OK


def cmd_dual(args) -> int:
    g, r, inputs = _source(args)
    if r is None:
        raise EmbeddingError("dual needs a rotation file")
    d = dual(r)
    report = RunReport("dual", _digest(inputs), d.to_json())
    _emit(args, report, json.dumps(d.to_json(), sort_keys=True))
    return EXIT_OK


def cmd_class(args) -> int:
    if not args.family or args.n is None:
        raise GraphMotiveError("class needs --family and --n")
    c = family_class(args.family, args.n)
    result = {"T": str(c), "L": c.render_L(), "coeffs": list(c.coeffs)}
    report = RunReport("class", _digest({"family": args.family, "n": args.n}), result)
    _emit(args, report, f"{c}\n{c.render_L()}")
    return EXIT_OK


def _check_q(q) -> int:
    if q is None or not is_prime(q):
        raise GraphMotiveError(f"--q must be a prime, got {q}")
    return q


def cmd_count(args) -> int:
    q = _check_q(args.q)
    g, _, inputs = _source(args)
    c = count_zeros(psi(g), q, args.max_work)
    result = {"q": q, "total": c.total, "off_sigma": c.off_sigma, "on_sigma": c.on_sigma}
    report = RunReport("count", _digest({**inputs, "q": q}), result)
    _emit(args, report, f"total {c.total}  off_sigma {c.off_sigma}  on_sigma {c.on_sigma}")
    return EXIT_OK


def cmd_verify(args) -> int:
    q = _check_q(args.q)
    g, r, inputs = _source(args)
    p = psi(g)
    lines = []
    checks = []
    result: dict = {}
    if args.family:
        if args.variant == "displayed":
            if args.family != "banana":
                raise GraphMotiveError("--variant displayed applies to the banana family only")
            counts = count_zeros(p, q, args.max_work)
            value = banana_displayed_value(args.n, q)
            ok = value == counts.total
            value_out = int(value) if value.denominator == 1 else str(value)
            result["class"] = {
                "q": q, "total": counts.total, "off_sigma": counts.off_sigma,
                "on_sigma": counts.on_sigma, "class_value": value_out, "pass": ok,
            }
            lines.append(f"class {value_out} vs count {counts.total}: {'pass' if ok else 'FAIL'}")
            checks.append(ok)
        else:
            rep = verify_class(family_class(args.family, args.n), p, q, args.max_work)
            result["class"] = rep.to_json()
            lines.append(f"class {rep.class_value} vs count {rep.total}: {'pass' if rep.passed else 'FAIL'}")
            checks.append(rep.passed)
    elif args.class_coeffs:
        c = ClassPoly(json.loads(args.class_coeffs))
        rep = verify_class(c, p, q, args.max_work)
        result["class"] = rep.to_json()
        lines.append(f"class {rep.class_value} vs count {rep.total}: {'pass' if rep.passed else 'FAIL'}")
        checks.append(rep.passed)
    if r is not None:
        crem = cremona_point_check(r, q, args.max_work)
        result["cremona"] = crem.to_json()
        lines.append(
            f"cremona off-sigma {crem.primal_off_sigma} -> {crem.dual_off_sigma}: "
            f"{'pass' if crem.passed else 'FAIL'}"
        )
        checks.append(crem.passed)
    if not checks:
        raise GraphMotiveError("nothing to verify: give a family, --class-coeffs or a rotation file")
    ok = all(checks)
    inputs = {**inputs, "q": q, "variant": args.variant, "class_coeffs": args.class_coeffs}
    report = RunReport("verify", _digest(inputs), result, ok)
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_irred(args) -> int:
    g, _, inputs = _source(args)
    v = classify_graph(g)
    check = classify_poly(psi(g))
    agree = check.kind == v.kind
    report = RunReport("irred", _digest(inputs), v.to_json(), agree)
    text = v.kind.value
    if v.witness is not None:
        w = v.witness
        text += f" at vertex {w.separating_vertex}: ({w.factors[0]}) * ({w.factors[1]})"
    _emit(args, report, text)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_families(args) -> int:
    if args.family and args.n is not None:
        r = family_rotation(args.family, args.n)
        print(json.dumps(r.to_json(), sort_keys=True))
    else:
        print("\n".join(FAMILIES))
    return EXIT_OK


COMMANDS = {
    "psi": cmd_psi,
    "dual": cmd_dual,
    "class": cmd_class,
    "count": cmd_count,
    "verify": cmd_verify,
    "irred": cmd_irred,
    "families": cmd_families,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphmotive", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file", nargs="?", help="graph or rotation JSON file")
        sp.add_argument("--family", choices=FAMILIES)
        sp.add_argument("--n", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--max-work", type=float, default=DEFAULT_MAX_WORK,
                        help="cap on n*log2(q) for brute-force counting")
        if name == "verify":
            sp.add_argument("--class-coeffs", help="class as a JSON list of T coefficients")
            sp.add_argument("--variant", choices=("summed", "displayed"), default="summed",
                            help="banana class expression to check")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except EmbeddingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMBEDDING
    except (NotConnectedError, GraphMotiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
