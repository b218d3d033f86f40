"""Batch verification front end.

Exit code 0 iff every verdict in the run is true.  All configuration is by
flags; reports are deterministic for fixed flags unless --timing is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import cfrac, foata, registry, tableaux
from .errors import QZigzagError, UnknownIdentity
from .perm import Permutation
from .report import IdentityReport


def _emit(reports: list[IdentityReport], fmt: str, timing: bool) -> None:
    for r in reports:
        if fmt == "human":
            line = r.summary()
            if timing and r.runtime_ms is not None:
                line += f" ({r.runtime_ms} ms)"
            print(line)
        elif fmt == "json":
            print(r.to_json(include_runtime=timing))
        elif fmt == "tsv":
            fields = [
                r.identity_id,
                json.dumps(r.params, sort_keys=True),
                str(r.order),
                "true" if r.verdict else "false",
            ]
            if timing and r.runtime_ms is not None:
                fields.append(str(r.runtime_ms))
            print("\t".join(fields))
        else:
            raise ValueError(f"unknown format {fmt!r}")


def _timed(fn, *args, **kwargs) -> list[IdentityReport]:
    t0 = time.perf_counter()
    reports = fn(*args, **kwargs)
    ms = int((time.perf_counter() - t0) * 1000)
    for r in reports:
        r.runtime_ms = ms
    return reports


def cmd_verify(args) -> int:
    overrides = {
        key: getattr(args, key)
        for key in ("n", "k", "a", "b", "order", "shape", "row", "kind", "scheme", "N", "max_len")
        if getattr(args, key, None) is not None
    }
    if args.cap is not None:
        from . import perm as perm_mod

        perm_mod.ENUMERATION_CAP = args.cap
    ok = True
    if args.all:
        for identity_id in registry.all_ids():
            try:
                reports = _timed(registry.sweep, identity_id, args.profile)
            except QZigzagError as exc:
                reports = [IdentityReport(identity_id, {}, None, None, None, False,
                                          detail=f"{exc.__class__.__name__}: {exc}")]
            _emit(reports, args.format, args.timing)
            ok = ok and all(r.verdict for r in reports)
    elif args.id:
        reports = _timed(registry.run_identity, args.id, **overrides)
        _emit(reports, args.format, args.timing)
        ok = all(r.verdict for r in reports)
    else:
        print("verify needs --id or --all", file=sys.stderr)
        return 2
    return 0 if ok else 1


def cmd_list(args) -> int:
    for identity_id in registry.all_ids():
        entry = registry.REGISTRY[identity_id]
        defaults = ", ".join(f"{k}={v}" for k, v in sorted(entry.defaults.items()))
        print(f"{identity_id}\t{entry.anchor}\t[{defaults}]")
    return 0


def cmd_foata(args) -> int:
    word = tuple(int(c) for c in args.input)
    p = Permutation(word)
    if args.map == "FA":
        row = foata.FA_ROW
    else:
        row = foata.get_row(args.map)
    sigma = foata.f_mod(p, row)
    a = foata.row_stat_a(p, row)
    b = foata.row_stat_b(sigma, row)
    print("".join(map(str, sigma.word)))
    print(f"source statistic: {a}")
    print(f"image statistic:  {b}")
    return 0 if a == b else 1


def cmd_tableaux(args) -> int:
    shape = tableaux.parse_shape(args.shape)
    modes = ("oracle", "extension") if args.mode == "both" else (args.mode,)
    results = {}
    for mode in modes:
        results[mode] = tableaux.tableau_gf(shape, args.kind, args.order, mode=mode)
        print(f"{mode}: {results[mode]}")
    if len(results) == 2:
        agree = results["oracle"].eq_mod(results["extension"])
        print(f"modes agree: {agree}")
        return 0 if agree else 1
    return 0


def cmd_pleasant(args) -> int:
    from .errors import CapExceeded
    from .excited import pleasant_count

    shape = tableaux.parse_shape(args.shape)
    values = {}
    for method in ("definition", "rho_star"):
        try:
            values[method] = pleasant_count(shape, method)
            print(f"{method}: {values[method]}")
        except CapExceeded as exc:
            print(f"{method}: skipped ({exc})")
    if len(values) == 2:
        agree = values["definition"] == values["rho_star"]
        print(f"methods agree: {agree}")
        return 0 if agree else 1
    return 0


def cmd_cfrac(args) -> int:
    report = cfrac.table1_row_check(args.row, args.n, args.qorder)
    print(report.summary())
    print(f"value: {report.lhs}")
    return 0 if report.verdict else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzigzag",
        description="Exact verification of q-series, path, and tableau identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run registered identity checks")
    v.add_argument("--id", help="identity id (see `qzigzag list`)")
    v.add_argument("--all", action="store_true", help="run the whole registry")
    v.add_argument("--profile", choices=("quick", "full"), default="quick")
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--a", type=int)
    v.add_argument("--b", type=int)
    v.add_argument("--N", type=int)
    v.add_argument("--max-len", dest="max_len", type=int)
    v.add_argument("--order", type=int, help="q-order (default per identity, usually 20)")
    v.add_argument("--xorder", type=int, help="accepted for symmetry; orders are derived")
    v.add_argument("--cap", type=int, help="enumeration cap override")
    v.add_argument("--shape", help="shape such as d6/d2 or 4,4,3,3/2,1")
    v.add_argument("--row", help="row selector for table identities")
    v.add_argument("--kind", choices=("ssyt", "rpp", "st"))
    v.add_argument("--scheme", choices=("VAL_COUNT", "MPP_RPP"))
    v.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    v.add_argument("--timing", action="store_true", help="include runtime_ms in output")
    v.set_defaults(func=cmd_verify)

    l = sub.add_parser("list", help="list registered identities")
    l.set_defaults(func=cmd_list)

    f = sub.add_parser("foata", help="apply a block-shuffle map to one permutation")
    f.add_argument("--map", default="FA", help="FA or a table row id such as ralt-odd-kappa")
    f.add_argument("--input", required=True, help="one-line word, e.g. 317295486")
    f.set_defaults(func=cmd_foata)

    t = sub.add_parser("tableaux", help="filling generating functions")
    tsub = t.add_subparsers(dest="subcommand", required=True)
    tg = tsub.add_parser("gf")
    tg.add_argument("--shape", required=True)
    tg.add_argument("--kind", choices=("ssyt", "rpp", "st"), required=True)
    tg.add_argument("--order", type=int, default=20)
    tg.add_argument("--mode", choices=("oracle", "extension", "both"), default="both")
    tg.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("pleasant", help="pleasant-diagram counts by both methods")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_pleasant)

    c = sub.add_parser("cfrac", help="check one tangent-table row")
    c.add_argument("--row", required=True)
    c.add_argument("--n", type=int, default=2)
    c.add_argument("--qorder", type=int, default=20)
    c.set_defaults(func=cmd_cfrac)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownIdentity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QZigzagError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
