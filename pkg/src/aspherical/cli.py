"""Batch command-line frontend.  Exit codes: 0 ok, 2 usage, 3 domain error."""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import crystal, ideals, parameters as P, quiver, supports
from .errors import DomainError
from .multipartition import parse_multipartition
from .scalar import ExactScalar, parse_scalar


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # values such as -1/2, -1,0 or -k are arguments, not flags
        self._negative_number_matcher = re.compile(r"^-[\d.(kκ]")

    def error(self, message):
        raise _Usage(message)


class _Usage(Exception):
    pass


def _vector(text: str) -> tuple[ExactScalar, ...]:
    return tuple(parse_scalar(x) for x in text.split(","))


def _table(rows: list[dict]) -> str:
    if not rows:
        return "(no rows)"
    cols = list(rows[0])
    cells = [[_cell(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _cell(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_cell(y) for y in x) + ")"
    if x is None:
        return "-"
    return str(x)


def _kv(d: dict) -> list[dict]:
    return [{"key": k, "value": v} for k, v in d.items()]


# params

def _read_params(args, which: str):
    ell = args.ell
    if which == "c":
        return P.CParams(ell, parse_scalar(args.c0), _vector(args.d))
    if which == "h":
        return P.HParams(ell, parse_scalar(args.kappa), _vector(args.h))
    return P.SParams(ell, parse_scalar(args.kappa), _vector(args.s))


_CONVERT = {
    ("c", "h"): P.c_to_h, ("h", "c"): P.h_to_c, ("h", "s"): P.h_to_s,
    ("s", "h"): P.s_to_h, ("c", "s"): P.c_to_s, ("s", "c"): P.s_to_c,
}


def _params_json(p) -> dict:
    out = {"ell": p.ell}
    for name in ("c0", "kappa"):
        if hasattr(p, name):
            out[name] = str(getattr(p, name))
    for name in ("d", "h", "s"):
        if hasattr(p, name):
            out[name] = [str(x) for x in getattr(p, name)]
    return out


def cmd_params(args):
    if args.action == "convert":
        src = _read_params(args, args.src)
        out = src if args.src == args.dst else _CONVERT[(args.src, args.dst)](src)
        data = _params_json(out)
        if isinstance(out, P.CParams):
            data["lambda_classical"] = [str(x) for x in P.lambda_classical(out)]
            data["lambda_quantum"] = [str(x) for x in P.lambda_quantum(out)]
        return data, _kv({k: _cell(v) for k, v in data.items()})
    if args.action == "aspherical":
        if args.c0 is not None:
            ok, w = P.is_aspherical_c(_read_params(args, "c"), args.n)
        else:
            ok, w = P.is_aspherical_s(_read_params(args, "s"), args.n)
        data = {"aspherical": ok, "witness": None if w is None else w._asdict()}
        if w is not None and w.kind == "b":
            data["hyperplane"] = str(P.witness_hyperplane(args.ell, w))
        return data, _kv({k: _cell(v) if not isinstance(v, dict) else json.dumps(v) for k, v in data.items()})
    hps = P.enumerate_aspherical_hyperplanes(args.ell, args.n)
    rows = [{"i": h.i, "j": h.j, "m": h.m, "t": h.t, "q": P.rectangle_bound(args.n, h.m)} for h in hps]
    return rows, rows


# crystal

def _hp(args) -> P.HyperplaneParams:
    try:
        return P.parse_hyperplane(args.ell, args.hyperplane)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise P.ParameterError(str(exc)) from exc


def cmd_crystal(args):
    nu = parse_multipartition(args.nu)
    hp = _hp(args)
    conv = crystal.Convention(args.convention)
    if args.action == "apply":
        z = crystal.parse_zclass(args.z)
        sig = crystal.signature(nu, z, hp, conv)
        op = crystal.e_tilde if args.op == "e" else crystal.f_tilde
        res = op(nu, z, hp, conv)
        data = {"nu": str(nu), "op": args.op, "z": str(z), "signature": sig.word,
                "reduced": crystal.reduce_signature(sig).word, "result": None if res is None else str(res)}
        return data, _kv(data)
    greedy = crystal.depth_by_descent(nu, hp, conv)
    data = {"nu": str(nu), "depth": greedy, "closed_form": supports.closed_form_depth(nu, hp),
            "highest_weight": greedy == 0,
            "z_classes": " ".join(str(z) for z in crystal.z_classes(nu, hp))}
    return data, _kv(data)


def cmd_supports(args):
    rows = supports.support_table(_hp(args), args.n)
    return rows, rows


def cmd_quiver(args):
    if args.preset == "grassmann":
        for name in ("v", "w", "lam"):
            if getattr(args, name) is None:
                raise _Usage(f"--preset grassmann needs --v, --w and --lambda")
        if args.w <= 2 * args.v:
            raise ideals.PreconditionError(f"need w > 2v, got v={args.v}, w={args.w}")
        slices = [(s, quiver.grassmannian_slice(args.v, args.w, s, args.lam)) for s in range(args.v + 1)]
    else:
        if args.ell is None or args.n is None or args.hyperplane is None:
            raise _Usage("--preset cherednik needs --ell, --n and --hyperplane")
        hp = _hp(args)
        q = P.rectangle_bound(args.n, hp.m)
        slices = [(s, quiver.cherednik_slice(hp, args.n, s)) for s in range(q + 1)]
    rows = [{"s": s, "vhat": list(sl.vhat), "what": list(sl.what),
             "lambda_hat": [str(x) for x in sl.lambda_hat]} for s, sl in slices]
    return rows, rows


def cmd_ideals(args):
    if args.action == "chain":
        if args.hyperplane is not None:
            chain = ideals.cherednik_chain(_hp(args), args.n)
        else:
            if args.v is None or args.w is None or args.lam is None:
                raise _Usage("ideals chain needs --hyperplane or --v/--w/--lambda")
            chain = ideals.grass_chain(args.v, args.w, args.lam)
        data = chain.to_json()
        rows = [{"s": d.s, "slice": None if d.slice is None else list(d.slice),
                 "leaf_dim": d.leaf_dim, "e_in_ideal": ideals.e_membership(chain, d.s)} for d in chain.ideals]
        return data, rows
    hp = _hp(args)
    fn = ideals.annihilated_simples if args.action == "annihilated" else ideals.k0_kernel
    found = fn(hp, args.n)
    rows = [{"nu": str(nu), "depth": supports.closed_form_depth(nu, hp)} for nu in found]
    return rows, rows


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="aspherical", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("params", parents=[fmt])
    p.add_argument("action", choices=("convert", "aspherical", "hyperplanes"))
    p.add_argument("--from", dest="src", choices=("c", "h", "s"), default="c")
    p.add_argument("--to", dest="dst", choices=("c", "h", "s"), default="s")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int)
    for name in ("c0", "d", "kappa", "h", "s"):
        p.add_argument(f"--{name}")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("crystal", parents=[fmt])
    p.add_argument("action", choices=("apply", "depth"))
    p.add_argument("--op", choices=("e", "f"), default="e")
    p.add_argument("--z")
    p.add_argument("--nu", required=True)
    p.add_argument("--hyperplane", required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--convention", choices=("printed", "example"), default="printed")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("supports", parents=[fmt])
    p.add_argument("action", choices=("table",))
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hyperplane", required=True)
    p.set_defaults(func=cmd_supports)

    p = sub.add_parser("quiver", parents=[fmt])
    p.add_argument("action", choices=("slice",))
    p.add_argument("--preset", choices=("cherednik", "grassmann"), required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--hyperplane")
    p.add_argument("--v", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("ideals", parents=[fmt])
    p.add_argument("action", choices=("chain", "annihilated", "k0"))
    p.add_argument("--ell", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--hyperplane")
    p.add_argument("--v", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.set_defaults(func=cmd_ideals)
    return ap


def _fill_ell(args) -> None:
    # crystal commands may infer ell from the multipartition
    if getattr(args, "ell", None) is None and getattr(args, "nu", None):
        args.ell = parse_multipartition(args.nu).ell


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _fill_ell(args)
        if args.command == "crystal" and args.action == "apply" and args.z is None:
            raise _Usage("crystal apply needs --z")
        if args.command in ("params",) and args.action != "convert" and args.n is None:
            raise _Usage("--n is required")
        if args.command == "ideals" and args.action != "chain" and (args.hyperplane is None or args.n is None):
            raise _Usage("--ell, --n and --hyperplane are required")
        data, rows = args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return 3
    except (TypeError, AttributeError) as exc:
        # a flag needed by the chosen parameter system was left out
        print(f"usage error: {exc}", file=err)
        return 2
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True, default=str), file=out)
    else:
        print(_table(rows), file=out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)
