"""Command line interface: ``asmdpp {count,enumerate,gf,verify,biject} ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import asm_side, dpp_side, paths_lgv
from .harness import CHECKS, golden_n2, run_check, verify_all
from .identities import IDENTITIES, verify_identity
from .laurent import LaurentPoly, Ring, parse_text
from .opformula import DEFAULT_MAX_N, CapacityError, DecorWeights, gf_amt_closed, gf_generalized_closed

SELECTORS = ("asm", "mt", "amt", "damt", "dpp", "sbcspp", "pairs", "bcspp", "paths", "lgv", "closed")

COMPATIBLE = {
    "count": {"asm", "mt", "amt", "damt", "dpp", "sbcspp", "pairs", "bcspp", "paths"},
    "enumerate": {"asm", "mt", "amt", "damt", "dpp", "sbcspp", "pairs", "bcspp", "paths"},
    "gf": {"mt", "amt", "damt", "sbcspp", "pairs", "bcspp", "paths", "lgv", "closed"},
    "biject": {"asm", "mt", "dpp", "paths", "sbcspp", "pairs"},
}


class UsageError(Exception):
    pass


# -- argument helpers ----------------------------------------------------------------------


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _bottom(args) -> tuple[int, ...]:
    if args.bottom is not None:
        return args.bottom
    if args.n is None:
        raise UsageError("give --n or --bottom")
    return tuple(range(1, args.n + 1))


def _order(args) -> int:
    if args.n is not None:
        return args.n
    if args.bottom is not None:
        return len(args.bottom)
    raise UsageError("give --n")


def _max_x_index(text: str) -> int:
    return max((int(m) for m in re.findall(r"X(\d+)", text)), default=0)


def _ring_for(args, n: int) -> Ring:
    extra = _max_x_index(args.empty_weight or "")
    if args.weights:
        extra = max(extra, *(_max_x_index(str(e.get("coeff", ""))) for e in _load_weights(args.weights)))
    return Ring(max(n, extra))


def _load_weights(path: str) -> list[dict]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read weight table {path}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(e, dict) and {"s", "t", "coeff"} <= set(e) for e in data):
        raise UsageError('weight table must be a list of {"s", "t", "coeff"} objects')
    return data


def _coeff(text, ring: Ring):
    text = str(text).strip()
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    try:
        return parse_text(text, ring.n)
    except ValueError as exc:
        raise UsageError(f"bad coefficient {text!r}: {exc}") from None


def _weight_table(args, ring: Ring) -> dict | None:
    if not args.weights:
        return None
    table: dict[tuple[int, int], object] = {}
    for e in _load_weights(args.weights):
        st = (int(e["s"]), int(e["t"]))
        if st[0] < 0 or st[1] < 0:
            raise UsageError("s and t must be nonnegative")
        c = _coeff(e["coeff"], ring)
        table[st] = table[st] + c if st in table else c
    return table


def _decor_weights(args, ring: Ring) -> DecorWeights:
    empty = _coeff(args.empty_weight, ring) if args.empty_weight not in (None, "0") else 0
    return DecorWeights(ring.u, ring.v, ring.w, empty)


def _assignment(args, p: LaurentPoly):
    values: dict[str, object] = {}
    if args.specialize == "sign":
        values.update({"u": 1, "v": 1, "w": -1})
        values.update({f"X{i}": 1 for i in range(1, p.n + 1)})
    for item in args.assign or []:
        for part in item.split(","):
            if not part:
                continue
            name, _, val = part.partition("=")
            try:
                values[name.strip()] = int(val)
            except ValueError:
                raise UsageError(f"bad assignment {part!r}") from None
    return values


# -- subcommands ----------------------------------------------------------------------------


def _objects(sel: str, args) -> list:
    if sel == "asm":
        return asm_side.enumerate_asm(_order(args))
    if sel == "mt":
        return asm_side.enumerate_mt(_bottom(args))
    if sel == "amt":
        return asm_side.enumerate_amt(_bottom(args))
    if sel == "damt":
        return [(m, arr) for m in asm_side.enumerate_mt(_bottom(args)) for arr in asm_side.down_arrowings(m)]
    n = _order(args)
    if sel == "dpp":
        return dpp_side.enumerate_dpp(n)
    if sel == "sbcspp":
        return dpp_side.enumerate_sbcspp(n)
    if sel == "pairs":
        return dpp_side.enumerate_dpp_pairs(n)
    if sel == "bcspp":
        return dpp_side.enumerate_bcspp(n)
    if sel == "paths":
        return paths_lgv.enumerate_extended_families(n)
    raise UsageError(f"cannot enumerate {sel}")


def _render(sel: str, obj, fmt: str) -> str:
    if fmt == "json":
        if sel in ("asm", "dpp", "bcspp"):
            return json.dumps([list(r) for r in obj], separators=(",", ":"))
        if sel == "damt":
            m, arr = obj
            return json.dumps({"triangle": m.to_json_obj(), "arrows": [list(r) for r in arr]}, separators=(",", ":"))
        return json.dumps(obj.to_json_obj(), separators=(",", ":"))
    if sel in ("asm", "dpp", "bcspp"):
        return "\n".join(" ".join(f"{x:>2}" for x in r) for r in obj) if obj else "(empty)"
    if sel == "damt":
        m, arr = obj
        return m.render() + "\n" + " | ".join(",".join(a or "-" for a in r) for r in arr)
    if sel == "pairs":
        return json.dumps(obj.to_json_obj(), separators=(",", ":"))
    return obj.render() or "(empty)"


def cmd_count(args) -> int:
    if args.selector == "asm":
        print(asm_side.asm_count(_order(args)))
    else:
        print(len(_objects(args.selector, args)))
    return 0


def cmd_enumerate(args) -> int:
    objs = _objects(args.selector, args)
    sep = "\n" if args.format == "json" else "\n\n"
    print(sep.join(_render(args.selector, o, args.format) for o in objs))
    return 0


def _gf(args) -> LaurentPoly:
    sel = args.selector
    if sel in ("mt", "amt", "damt", "closed"):
        k = _bottom(args)
        ring = _ring_for(args, len(k))
        table = _weight_table(args, ring)
        if sel == "mt":
            return asm_side.gf_mt_enum(k, ring)
        if sel == "damt":
            return asm_side.gf_damt_enum(k, ring)
        if sel == "closed":
            if table is not None:
                return gf_generalized_closed(k, table, ring, args.max_n)
            return gf_amt_closed(k, _decor_weights(args, ring), ring, args.max_n)
        if table is not None:
            return asm_side.gf_generalized_recursion(k, table, ring)
        dw = _decor_weights(args, ring)
        strictly = all(a < b for a, b in zip(k, k[1:]))
        if strictly and dw.empty == 0:
            return asm_side.gf_amt_enum(k, dw, ring)
        return asm_side.gf_extended_recursion(k, dw, ring)
    n = _order(args)
    if n > args.max_n:
        raise CapacityError(f"n={n} exceeds --max-n {args.max_n}")
    ring = Ring(n)
    if sel == "sbcspp":
        return dpp_side.gf_sbcspp(n, ring)
    if sel == "pairs":
        return dpp_side.gf_dpp_pairs(n, ring)
    if sel == "bcspp":
        return dpp_side.gf_bcspp(n, ring)
    if sel == "paths":
        return paths_lgv.gf_paths_enum(n, ring)
    return paths_lgv.gf_lgv(n, ring)


def _emit_poly(p: LaurentPoly, args) -> None:
    values = _assignment(args, p)
    if values:
        val = p.substitute(values)
        if isinstance(val, LaurentPoly):
            print(val.serialize(args.format).decode())
        elif args.format == "json":
            print(json.dumps(str(val) if not isinstance(val, int) else val))
        else:
            print(val)
        return
    print(p.serialize(args.format).decode())


def cmd_gf(args) -> int:
    _emit_poly(_gf(args), args)
    return 0


def cmd_verify(args) -> int:
    name = args.check
    if name == "all":
        report = verify_all(args.max_n if args.max_n <= 5 else 5)
        print(json.dumps(report, indent=2))
        return 0 if report["passed"] else 1
    if name in IDENTITIES:
        n = args.n or 2
        ok, diff = verify_identity(name, n)
        if ok:
            print(f"{name} n={n}: ok")
            return 0
        print(f"{name} n={n}: FAILED\ndifference: {diff.to_text()}")
        return 1
    if name == "main2" and args.n is not None:
        n = args.n
        ring = Ring(n)
        lhs = asm_side.gf_amt_enum(tuple(range(1, n + 1)), ring=ring)
        rhs = dpp_side.gf_sbcspp(n, ring)
        print(lhs.serialize(args.format).decode())
        print(rhs.serialize(args.format).decode())
        if lhs != rhs:
            print(f"main2 n={n}: FAILED\ndifference: {(lhs - rhs).to_text()}")
            return 1
        if n == 2 and lhs != golden_n2():
            print(f"main2 n=2: FAILED against the table\ndifference: {(lhs - golden_n2()).to_text()}")
            return 1
        return 0
    if name not in CHECKS:
        raise UsageError(f"unknown check {name!r}; choose from all, {', '.join(CHECKS)}, {', '.join(IDENTITIES)}")
    result = run_check(name, args.n or args.max_n)
    status = "ok" if result["passed"] else "FAILED"
    print(f"{name}: {status} ({result['detail']}) [{result['seconds']}s]")
    return 0 if result["passed"] else 1


def _read_input(args):
    text = args.input if args.input is not None else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}") from None


def cmd_biject(args) -> int:
    sel = args.selector
    obj = _read_input(args)
    dump = lambda o: print(json.dumps(o, separators=(",", ":")))
    if sel == "asm":
        dump(asm_side.asm_to_mt(obj).to_json_obj())
    elif sel == "mt":
        dump([list(r) for r in asm_side.mt_to_asm(asm_side.triangle_from_json(obj))])
    elif sel == "dpp":
        n = args.n or max((x for r in obj for x in r), default=1)
        dump(paths_lgv.dpp_to_paths(tuple(tuple(r) for r in obj), n).to_json_obj())
    elif sel == "paths":
        fam = paths_lgv.family_from_json(obj)
        if fam.extended:
            dump(paths_lgv.family_to_dpp_pair(fam).to_json_obj())
        else:
            dump([list(r) for r in paths_lgv.paths_to_dpp(fam)])
    elif sel == "sbcspp":
        d = dpp_side.sbcspp_from_json(obj)
        if args.to == "pairs":
            dump(dpp_side.pair_from_sbcspp(d).to_json_obj())
        else:
            dump([list(r) for r in dpp_side.dpp_sbcspp_to_dpp(d)])
    elif sel == "pairs":
        pair = dpp_side.DppPair(
            tuple(tuple(tuple(c) for c in r) for r in obj["L"]), tuple(tuple(r) for r in obj["R"])
        )
        if args.to == "paths":
            dump(paths_lgv.dpp_pair_to_family(pair, args.n or _pair_order(pair)).to_json_obj())
        else:
            d = dpp_side.sbcspp_from_pair(pair)
            dump(d.to_json_obj() if d is not None else None)
    return 0


def _pair_order(pair) -> int:
    vals = [x for r in pair.L for c in r for x in c] + [x for r in pair.R for x in r]
    return max(vals, default=1)


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="order")
    common.add_argument("--bottom", type=_int_list, help="bottom row k1,k2,...")
    common.add_argument("--weights", help="JSON file with a generalized weight table")
    common.add_argument("--empty-weight", default=None, help="weight of the empty decoration (polynomial or 0)")
    common.add_argument("--specialize", choices=["sign"], help="u=v=1, w=-1, X=1")
    common.add_argument("--assign", action="append", help="var=val,... integer assignments")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="size cap for symbolic expansions")

    parser = argparse.ArgumentParser(prog="asmdpp", description="ASM and DPP generating functions")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("count", "enumerate", "gf", "biject"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("selector", choices=SELECTORS)
        if name == "biject":
            p.add_argument("--input", help="JSON object (default: stdin)")
            p.add_argument("--to", choices=["dpp", "pairs", "paths", "sbcspp"], help="target for sbcspp and pairs")
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("check", help="all, a named acceptance check, or an identity name")
    return parser


HANDLERS = {"count": cmd_count, "enumerate": cmd_enumerate, "gf": cmd_gf, "verify": cmd_verify, "biject": cmd_biject}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command in COMPATIBLE and args.selector not in COMPATIBLE[args.command]:
            raise UsageError(f"'{args.command}' does not support '{args.selector}'")
        if args.n is not None and args.n < 0:
            raise UsageError("--n must be nonnegative")
        return HANDLERS[args.command](args)
    except (UsageError, CapacityError, dpp_side.DomainError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
