"""Command-line front end: ``qfock VERB [flags]``.

Exit status is 0 on success, 1 on bad input or a request outside a formula's
domain, and 2 when a ``verify-theorem1`` or ``scopes --verify`` run finds a
mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .canonical import canonical_basis, canonical_vector
from .fock import BlockId
from .partitions import (
    core_coords,
    is_core,
    n_core,
    n_quotient,
    n_sign,
    n_weight,
    parse_partition,
)
from .rouquier import closed_d, closed_e, rouquier_block, rouquier_coords, verify_theorem1
from .scopes import orbit_classes, scopes_bijection, scopes_move, verify_scopes_invariance
from .serialize import serialize
from .symfunc import lr_coefficient


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _partition(text: str):
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse partition {text!r}: {exc}") from None


def _n(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return n


def _nonneg(text: str) -> int:
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return k


def _pos(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qfock", description="Canonical bases of the level-one q-deformed Fock space.")
    p.add_argument("--version", action="version", version=f"qfock {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    s = verb("core", "n-core and n-weight of a partition, with core coordinates")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("partition", type=_partition)

    s = verb("quotient", "n-quotient and n-sign of a partition")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--core", type=_partition, default=None,
                   help="core fixing the runner labelling (default: the partition's own core)")
    s.add_argument("partition", type=_partition)

    s = verb("rouquier-core", "the Rouquier core rho(w)")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--w", type=_pos, required=True)

    s = verb("gcan", "canonical basis vector G(lam) or G-(lam)")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--minus", action="store_true")
    s.add_argument("partition", type=_partition)

    s = verb("dmatrix", "canonical basis of a whole block")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--core", type=_partition, required=True)
    s.add_argument("--w", type=_nonneg, required=True)
    s.add_argument("--minus", action="store_true")

    for name in ("closed-d", "closed-e"):
        s = verb(name, f"closed formula for {name[-1]}(v) on a Rouquier family")
        s.add_argument("--n", type=_n, required=True)
        s.add_argument("--w", type=_pos, required=True)
        s.add_argument("lam", type=_partition)
        s.add_argument("mu", type=_partition)

    s = verb("lrcoef", "Littlewood-Richardson coefficient c^lam_{mu,nu}")
    s.add_argument("lam", type=_partition)
    s.add_argument("mu", type=_partition)
    s.add_argument("nu", type=_partition)

    s = verb("verify-theorem1", "compare G, G- with the closed eta/psi route on a Rouquier family")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--w", type=_pos, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--minus", action="store_true", help="check G- only")
    g.add_argument("--plus", action="store_true", help="check G only")
    s.add_argument("--jobs", type=_pos, default=1)

    s = verb("scopes", "Scopes move from core tau along residue i")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--core", type=_partition, required=True)
    s.add_argument("--i", type=_nonneg, required=True)
    s.add_argument("--w", type=_nonneg, required=True)
    s.add_argument("--verify", action="store_true")

    s = verb("orbit", "classes of cores linked by admissible reflections")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--w", type=_nonneg, required=True)
    s.add_argument("--bound", type=_nonneg, required=True)
    return p


def _run(args) -> tuple[object, int]:
    v = args.verb
    if v == "core":
        lam, n = args.partition, args.n
        core = n_core(lam, n)
        return {"partition": str(lam), "core": str(core), "weight": n_weight(lam, n),
                "coords": list(core_coords(core, n).a)}, 0
    if v == "quotient":
        lam, n = args.partition, args.n
        if args.core is not None and not is_core(args.core, n):
            raise UsageError(f"{args.core} is not a {n}-core")
        q = n_quotient(lam, n, convention=args.core)
        return {"partition": str(lam), "quotient": [str(p) for p in q], "sign": n_sign(lam, n)}, 0
    if v == "rouquier-core":
        blk = rouquier_block(args.n, args.w)
        if args.format == "table":
            return blk.rho, 0
        return {"n": args.n, "w": args.w, "core": str(blk.rho),
                "coords": list(rouquier_coords(args.n, args.w)), "r": blk.r}, 0
    if v == "gcan":
        return canonical_vector(args.partition, args.n, minus=args.minus), 0
    if v == "dmatrix":
        if not is_core(args.core, args.n):
            raise UsageError(f"{args.core} is not a {args.n}-core")
        return canonical_basis(BlockId(args.n, args.core, args.w), minus=args.minus), 0
    if v in ("closed-d", "closed-e"):
        fn = closed_d if v == "closed-d" else closed_e
        return fn(args.lam, args.mu, rouquier_block(args.n, args.w)), 0
    if v == "lrcoef":
        return lr_coefficient(args.mu, args.nu, args.lam), 0
    if v == "verify-theorem1":
        minus = True if args.minus else (False if args.plus else None)
        rep = verify_theorem1(args.n, args.w, minus=minus, jobs=args.jobs)
        return rep.to_json(), (0 if rep.ok else 2)
    if v == "scopes":
        if not is_core(args.core, args.n):
            raise UsageError(f"{args.core} is not a {args.n}-core")
        if args.i >= args.n:
            raise UsageError(f"residue {args.i} outside 0..{args.n - 1}")
        if args.verify:
            rep = verify_scopes_invariance(args.core, args.i, args.w, args.n)
            return rep, (0 if rep["ok"] else 2)
        move = scopes_move(args.core, args.i, args.n)
        out = {"n": args.n, "core": str(move.tau), "i": args.i, "k_i": move.k_i,
               "target": str(move.target), "w": args.w, "regime": move.admits(args.w)}
        if move.admits(args.w):
            from .fock import block_partitions
            out["bijection"] = [{"from": str(lam), "to": str(scopes_bijection(lam, args.i, args.n))}
                                for lam in block_partitions(BlockId(args.n, move.tau, args.w))]
        return out, 0
    if v == "orbit":
        return {"n": args.n, "w": args.w, "bound": args.bound,
                "classes": [c.to_json() for c in orbit_classes(args.n, args.w, args.bound)]}, 0
    raise UsageError(f"unknown verb {v}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, code = _run(args)
    except ValueError as exc:
        print(f"qfock {args.verb}: {exc}", file=sys.stderr)
        return 1
    print(serialize(result, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
