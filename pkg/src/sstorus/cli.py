"""Command-line interface: element arithmetic, canonical forms, basis
construction and the verification driver, all emitting JSON on stdout.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 label cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import canonical as canon
from . import ss_basis, torus
from .idempotents import multiply_idempotent_basis
from .modp import is_prime
from .supersymmetry import is_supersymmetric
from .torus import (
    Basis,
    CapExceededError,
    DEFAULT_CAP,
    ExponentVector,
    MismatchError,
    TorusSpec,
)

DEFAULT_GRID = [
    (1, 1, 2, 1),
    (1, 1, 2, 2),
    (1, 1, 3, 1),
    (2, 1, 2, 1),
    (2, 1, 3, 1),
    (1, 2, 3, 1),
    (3, 1, 2, 1),
    (2, 2, 2, 1),
    (2, 2, 3, 1),
]

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_element(path: str, cap: int):
    return torus.element_from_json(_read_text(path), cap=cap)


def _load_config(args) -> dict:
    if not getattr(args, "config", None):
        return {}
    data = json.loads(_read_text(args.config))
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    return data


def _effective_cap(args, config: dict) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    return int(config.get("cap", DEFAULT_CAP))


def _spec_from_args(args, cap: int) -> TorusSpec:
    for name in ("m", "n", "p", "r"):
        if getattr(args, name, None) is None:
            raise ValueError(f"--{name} is required here")
    return TorusSpec(args.m, args.n, args.p, args.r, cap=cap)


def _parse_label(text: str, m: int, n: int) -> ExponentVector:
    left, sep, right = text.partition("|")
    if not sep:
        raise ValueError("label must look like 'a1,..,am|b1,..,bn'")

    def parse_side(side: str) -> tuple:
        side = side.strip()
        if not side:
            return ()
        return tuple(int(tok) for tok in side.replace(" ", "").split(","))

    a, b = parse_side(left), parse_side(right)
    if len(a) != m or len(b) != n:
        raise ValueError(
            f"label has {len(a)}|{len(b)} entries, expected {m}|{n}"
        )
    return ExponentVector(a, b)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_mul(args) -> int:
    config = _load_config(args)
    cap = _effective_cap(args, config)
    f = _load_element(args.lhs, cap)
    g = _load_element(args.rhs, cap)
    if f.basis is Basis.IDEMPOTENT and g.basis is Basis.IDEMPOTENT:
        result = multiply_idempotent_basis(f, g)
    else:
        result = torus.multiply(f, g)
    _emit(torus.element_to_dict(result))
    return EXIT_OK


def cmd_canonical(args) -> int:
    config = _load_config(args)
    cap = _effective_cap(args, config)
    spec = _spec_from_args(args, cap)
    ev = _parse_label(args.label, spec.m, spec.n)
    spec.check_label(ev)
    label = canon.canonicalize(ev, spec)
    cls = canon.enumerate_equivalence_class(label, spec)
    _emit(
        {
            "canonical": {"a": list(label.ev.a), "b": list(label.ev.b)},
            "defect": label.defect,
            "e": label.e,
            "f": label.f,
            "class_size": len(cls.members),
        }
    )
    return EXIT_OK


def cmd_basis(args) -> int:
    config = _load_config(args)
    cap = _effective_cap(args, config)
    spec = _spec_from_args(args, cap)
    if args.oracle:
        elements = ss_basis.ss_nullspace_oracle(spec)
    else:
        elements = [
            ss_basis.build_H(c, spec) for c in canon.enumerate_canonical(spec)
        ]
    _emit([torus.element_to_dict(e) for e in elements])
    return EXIT_OK


def cmd_count(args) -> int:
    config = _load_config(args)
    cap = _effective_cap(args, config)
    for name in ("m", "n", "p", "r"):
        if getattr(args, name) is None:
            raise ValueError(f"--{name} is required here")
    m, n, p, r = args.m, args.n, args.p, args.r
    if m < 1 or n < 1 or r < 1:
        raise ValueError("counting requires m, n, r >= 1")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    q = p**r
    total = canon._count_canonical_total(m, n, q, p)
    enumerated = None
    try:
        spec = TorusSpec(m, n, p, r, cap=cap)
        enumerated = len(canon.enumerate_canonical(spec))
    except CapExceededError:
        pass
    out = {"total": total, "enumerated": enumerated}
    if args.by_defect:
        by_defect = {"0": canon.count_c(m, n, q, p)}
        for d in range(1, min(m, n) + 1):
            by_defect[str(d)] = canon.count_defect(m, n, d, q, p)
        out["by_defect"] = by_defect
    _emit(out)
    return EXIT_OK


def _grid_from(args, config: dict):
    grid = config.get("grid")
    if grid is None:
        return DEFAULT_GRID
    return [tuple(int(v) for v in entry) for entry in grid]


def cmd_verify(args) -> int:
    config = _load_config(args)
    cap = _effective_cap(args, config)

    if args.check_ss:
        element = _load_element(args.check_ss, cap)
        ok = is_supersymmetric(element)
        _emit({"supersymmetric": ok})
        return EXIT_OK if ok else EXIT_VERIFY

    if args.grid:
        specs = [TorusSpec(*entry, cap=cap) for entry in _grid_from(args, config)]
        with ThreadPoolExecutor(max_workers=min(8, len(specs))) as pool:
            reports = list(pool.map(ss_basis.verify_basis, specs))
        _emit([rep.to_dict() for rep in reports])
        bad = [rep for rep in reports if not rep.passed]
        for rep in bad:
            for failure in rep.failures:
                print(f"FAIL {rep.spec}: {failure}", file=sys.stderr)
        return EXIT_VERIFY if bad else EXIT_OK

    spec = _spec_from_args(args, cap)
    report = ss_basis.verify_basis(spec)
    _emit(report.to_dict())
    for failure in report.failures:
        print(f"FAIL {spec}: {failure}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _add_spec_flags(sub):
    sub.add_argument("--m", type=int)
    sub.add_argument("--n", type=int)
    sub.add_argument("--p", type=int)
    sub.add_argument("--r", type=int)


def _add_common_flags(sub):
    sub.add_argument("--cap", type=int, default=None, help="label-count cap")
    sub.add_argument("--config", type=str, default=None, help="JSON config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sstorus",
        description="Exact torus algebra computations over prime fields.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    mul = subs.add_parser("mul", help="multiply two element JSON files")
    mul.add_argument("lhs")
    mul.add_argument("rhs")
    _add_common_flags(mul)
    mul.set_defaults(func=cmd_mul)

    can = subs.add_parser("canonical", help="canonical form of a label")
    _add_spec_flags(can)
    can.add_argument("label", help="label like '1,2|0'")
    _add_common_flags(can)
    can.set_defaults(func=cmd_canonical)

    basis = subs.add_parser("basis", help="emit the supersymmetric basis")
    _add_spec_flags(basis)
    basis.add_argument("--oracle", action="store_true", help="emit the nullspace basis instead")
    _add_common_flags(basis)
    basis.set_defaults(func=cmd_basis)

    verify = subs.add_parser("verify", help="run the verification bundle")
    _add_spec_flags(verify)
    verify.add_argument("--grid", action="store_true", help="verify the built-in grid")
    verify.add_argument("--check-ss", type=str, default=None, metavar="FILE",
                        help="check one element file ('-' for stdin) for supersymmetry")
    _add_common_flags(verify)
    verify.set_defaults(func=cmd_verify)

    count = subs.add_parser("count", help="canonical-label counts")
    _add_spec_flags(count)
    count.add_argument("--by-defect", action="store_true", dest="by_defect")
    _add_common_flags(count)
    count.set_defaults(func=cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MismatchError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
