"""Command-line front end.

Subcommands:
  derive-roots  run the constrained root-set search and write the JSON cache
  verify        run a verification suite, write a JSON/Markdown report
  sample-slocal draw deterministic samples of the monodromy locus

Exit codes: 0 all checks pass, 1 check failure, 2 usage error, 3 root-set
search failure.
"""

import argparse
import json
import sys

import numpy as np

from .core import encode_matrix
from .errors import SearchFailureError, UcglError
from .groupoid import sample_slocal_fiber
from .involutions import slocal_membership
from .report import SUITES, run_suite
from .stokes import build_M, derive_root_sets, root_sets_to_dict


def _build_parser():
    parser = argparse.ArgumentParser(prog="ucgl")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive-roots", help="run the root-set search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=float, default=60.0)
    p.add_argument("--out", type=str, default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=None,
                   help="override tolerance for every check (use with care)")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--config", type=str, default=None,
                   help="JSON config file; explicit flags override its entries")

    p = sub.add_parser("sample-slocal", help="sample the monodromy locus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--out", type=str, default=None)
    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        print(text)


def cmd_derive_roots(args):
    try:
        rs = derive_root_sets(args.n, time_budget=args.budget, force=True)
    except SearchFailureError as exc:
        print(f"search failure: {exc}", file=sys.stderr)
        return 3
    _emit(json.dumps(root_sets_to_dict(rs), sort_keys=True, indent=2), args.out)
    return 0


def cmd_verify(args, argv):
    config = {}
    if args.config:
        with open(args.config) as fh:
            config.update(json.load(fh))
    # explicit flags override the config file
    explicit = {a.split("=")[0].lstrip("-").replace("-", "_") for a in argv if a.startswith("--")}
    for key in ("n", "suite", "seed", "samples"):
        if key not in config or key in explicit:
            config[key] = getattr(args, key)
    try:
        report = run_suite(config)
    except SearchFailureError as exc:
        print(f"search failure: {exc}", file=sys.stderr)
        return 3
    if args.tol is not None:
        for c in report.checks:
            c.tol = args.tol
    text = report.to_json() if args.format == "json" else report.to_markdown()
    _emit(text, args.out)
    return 0 if report.all_passed else 1


def cmd_sample_slocal(args):
    rs = derive_root_sets(args.n)
    rng = np.random.default_rng(args.seed)
    records = []
    for _ in range(args.count):
        half = rng.standard_normal((args.n + 1) // 2)
        s = np.zeros(args.n, dtype=complex)
        for i in range((args.n + 1) // 2):
            s[i] = half[i]
            s[args.n - 1 - i] = half[i]
        A = build_M(rs, s)
        p = sample_slocal_fiber(rs, A, int(rng.integers(0, 2 ** 31)))
        flags = slocal_membership(rs, p, tol=1e-8)
        records.append(
            {
                "B": encode_matrix(p.B),
                "A": encode_matrix(p.A),
                "s": [[float(z.real), float(z.imag)] for z in p.s],
                "flags": flags,
            }
        )
    _emit(json.dumps({"n": args.n, "seed": args.seed, "points": records},
                     sort_keys=True, indent=2), args.out)
    return 0


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "derive-roots":
            return cmd_derive_roots(args)
        if args.command == "verify":
            return cmd_verify(args, argv)
        return cmd_sample_slocal(args)
    except UcglError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
