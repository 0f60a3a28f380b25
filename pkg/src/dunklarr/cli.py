"""Command-line interface.

Exit codes: 0 success (or decision "dunkl"), 1 decision "not_dunkl",
2 not applicable / unsupported arrangement, 64 usage error, 65 invalid input,
70 internal inconsistency between equivalent predicates.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time

from . import __version__
from .arrangement import enumerate_flats
from .balance import balance
from .catalog import FAMILIES, catalog
from .dunkl import DUNKL, NOT_APPLICABLE, dunkl_decision
from .errors import DunklError, InputError
from .hirzebruch import langer_statistic, q_evaluate
from .jsonio import arrangement_to_dict, convert_mode, dumps, load_arrangement, load_weights
from .reports import (
    balance_payload,
    dunkl_payload,
    feasibility_payload,
    langer_payload,
    poset_payload,
    qform_payload,
    stability_payload,
)
from .stability import stability_cone, stability_report
from .weightfinder import find_dunkl_weights, sample_feasible
from .weights import make_weights

EXIT_OK, EXIT_NOT_DUNKL, EXIT_NA = 0, 1, 2
EXIT_USAGE, EXIT_DATAERR, EXIT_SOFTWARE = 64, 65, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dunklarr", description="Dunkl metrics of weighted hyperplane arrangements")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, weights=False):
        sp.add_argument("arrangement", help="arrangement JSON file")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--mode", choices=("exact", "float"), help="override the scalar mode")
        sp.add_argument("--timing", action="store_true", help="include wall-clock stage timings")
        if weights:
            sp.add_argument("--weights", help='weights JSON {"weights": [...]} (default: all ones)')

    c = sub.add_parser("catalog", help="write a catalog arrangement as JSON")
    c.add_argument("--family", required=True, choices=FAMILIES[:-1])
    c.add_argument("--param", type=int, action="append", default=[])
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--mode", choices=("exact", "float"))
    c.add_argument("--out")

    common(sub.add_parser("analyze", help="intersection poset summary"))
    common(sub.add_parser("stability", help="stability report and cone"), weights=True)
    common(sub.add_parser("qform", help="Hirzebruch form, gradient and critical-point residual"), weights=True)

    b = sub.add_parser("balance", help="balanced metric by scaling iteration")
    common(b, weights=True)
    b.add_argument("--tol", type=float, default=1e-12)
    b.add_argument("--max-iter", type=int, default=10000)
    b.add_argument("--no-precheck", action="store_true")
    b.add_argument("--no-accelerate", action="store_true", help="plain S^-1/2 scaling without Newton steps")

    d = sub.add_parser("dunkl", help="full decision pipeline")
    common(d, weights=True)
    d.add_argument("--tol", type=float, default=1e-12, help="balance tolerance")
    d.add_argument("--max-iter", type=int, default=10000)

    f = sub.add_parser("find-weights", help="search for Dunkl weights")
    common(f)
    f.add_argument("--samples", type=int, default=0)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--weights-out", help="write the LP sample as a weights file")

    common(sub.add_parser("langer", help="line-arrangement multiplicity statistic (d = 3)"))
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args, raws: list):
    arr, raw = load_arrangement(args.arrangement)
    raws.append(raw)
    if args.mode:
        arr = convert_mode(arr, args.mode)
    weights = None
    if getattr(args, "weights", None):
        weights, raw = load_weights(args.weights, arr.n, arr.exact)
        raws.append(raw)
    elif hasattr(args, "weights"):
        weights = make_weights([1] * arr.n, arr.n, arr.exact)
    return arr, weights


def _run(args) -> tuple[int, dict | None, dict]:
    timing: dict[str, float] = {}
    raws: list[bytes] = []
    t0 = time.perf_counter()

    def stage(name):
        nonlocal t0
        now = time.perf_counter()
        timing[name] = now - t0
        t0 = now

    arr, weights = _load(args, raws)
    stage("load")
    poset = enumerate_flats(arr)
    stage("poset")
    code = EXIT_OK
    cmd = args.command
    if cmd == "analyze":
        payload = poset_payload(poset)
    elif cmd == "stability":
        payload = stability_payload(stability_report(poset, weights), stability_cone(poset))
    elif cmd == "qform":
        payload = qform_payload(q_evaluate(poset, weights))
    elif cmd == "balance":
        res = balance(arr, weights, tol=args.tol, max_iter=args.max_iter,
                      precheck=not args.no_precheck, poset=poset, accelerate=not args.no_accelerate)
        payload = balance_payload(res)
    elif cmd == "dunkl":
        v = dunkl_decision(arr, weights, tol_balance=args.tol, max_iter=args.max_iter, poset=poset)
        payload = dunkl_payload(v)
        if v.inconsistencies:
            code = EXIT_SOFTWARE
        elif v.decision == DUNKL:
            code = EXIT_OK
        elif v.decision == NOT_APPLICABLE:
            code = EXIT_NA
        else:
            code = EXIT_NOT_DUNKL
    elif cmd == "find-weights":
        res = find_dunkl_weights(arr, poset)
        samples = sample_feasible(arr, res, args.samples, args.seed, poset) if args.samples and res.feasible else []
        payload = feasibility_payload(res, samples)
        if args.weights_out and res.feasible:
            with open(args.weights_out, "w") as fh:
                fh.write(dumps(payload["sample"]))
    elif cmd == "langer":
        payload = langer_payload(langer_statistic(poset))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd}")
    stage(cmd)
    digest = hashlib.sha256(b"".join(raws)).hexdigest()
    report = {
        "command": cmd,
        "version": __version__,
        "mode": arr.scalar_mode,
        "input_digest": digest,
        "payload": payload,
        "timing": timing if args.timing else None,
    }
    return code, report, timing


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "catalog":
            arr = catalog(args.family, *args.param, seed=args.seed, mode=args.mode)
            _emit(dumps(arrangement_to_dict(arr)), args.out)
            return EXIT_OK
        code, report, _ = _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except DunklError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NA
    _emit(dumps(report), args.out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
