"""Command-line interface: build, verify, export, info.

Exit status: 0 pass, 1 verification failure, 2 usage, parse or construction error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .assembly import (
    chain_for,
    new_orders,
    order4_codes,
    prop7_assemble,
    prop8_assemble,
    theorem1_assemble,
    theorem2_ingredients,
    theorem2_pipeline,
)
from .codes import Code, code_read, code_write, cubes_write, to_latin_cubes, to_oa_rows
from .combine import product
from .errors import MDSError
from .fields import field_make
from .holes import HoleCode, hole_verify
from .linear import coset_partition, kernel_enumerate, nested_parity, rs_parity, super_chain
from .steiner import design_read, theorem3_assemble, trivial_designs
from .tables import lemma1_code, prop7_ingredients
from .verify import cubes_check_code, distance_check, mds_check, oa_check

log = logging.getLogger("mdscubes")

BUILD_KINDS = (
    "rs", "super", "product", "coset-partition", "lemma1",
    "prop7", "prop8", "theorem1", "theorem2", "steiner",
)


class UsageError(Exception):
    pass


def _sibling(path: Path, tag: str) -> Path:
    return path.with_name(f"{path.stem}.{tag}{path.suffix}")


def _summary(c: Code | HoleCode) -> str:
    code = c.code if isinstance(c, HoleCode) else c
    line = f"order q={code.q} length d={code.d} strength t={code.t} size n={len(code)}"
    if isinstance(c, HoleCode):
        line += f" hole j={c.j} A={','.join(map(str, c.hole))}"
    return line


def _load(path: str) -> Code | HoleCode:
    return code_read(path)


def _plain(c: Code | HoleCode) -> Code:
    return c.code if isinstance(c, HoleCode) else c


def _rs_code(q: int, d: int = 5, rho: int = 3) -> Code:
    return kernel_enumerate(rs_parity(field_make(q), d, rho))


def _certify(c: Code | HoleCode, workers: int) -> None:
    if isinstance(c, HoleCode):
        rep = hole_verify(c, workers)
    else:
        rep = mds_check(c, workers=workers)
    print(rep.summary())
    if not rep:
        raise SystemExit(1)


def cmd_build(args: argparse.Namespace) -> int:
    out = Path(args.output)
    certify = args.certify or args.level == "full"
    kind = args.kind
    outputs: list[tuple[Path, Code | HoleCode]] = []

    if kind == "rs":
        _need(args, "q")
        outputs.append((out, _rs_code(args.q, args.d, args.rho)))
    elif kind == "super":
        if args.p is not None:
            chain = chain_for(args.p)
        else:
            _need(args, "q")
            chain = super_chain(field_make(args.q))
        outputs += [(out, chain.M), (_sibling(out, "m1"), chain.M1), (_sibling(out, "m2"), chain.M2)]
    elif kind == "product":
        if args.left and args.right:
            left, right = _plain(_load(args.left)), _plain(_load(args.right))
        else:
            _need(args, "q1", "q2")
            left, right = _rs_code(args.q1, args.d), _rs_code(args.q2, args.d)
        outputs.append((out, product(left, right)))
    elif kind == "coset-partition":
        _need(args, "q")
        f = field_make(args.q)
        h = nested_parity(f, args.d, args.rho, min_rows=args.rho - 1)
        sup, sub = kernel_enumerate(h.prefix(args.rho - 1)), kernel_enumerate(h)
        outputs.append((out, sup))
        for i, cls in enumerate(coset_partition(sub, sup, f)):
            outputs.append((_sibling(out, f"class{i}"), cls))
    elif kind == "lemma1":
        outputs.append((out, lemma1_code()))
    elif kind == "prop7":
        ing = prop7_ingredients()
        outputs.append((out, prop7_assemble(ing["M"], ing["M1"], ing["D"], ing["E"], ing["F"], certify)))
    elif kind == "prop8":
        m4, classes = order4_codes()
        hole6 = lemma1_code()
        if not 0 <= args.k <= len(classes):
            raise UsageError(f"--k must lie in 0..{len(classes)}")
        res = prop8_assemble(m4, classes[: args.k], m4, [hole6] * args.k, certify=certify)
        outputs.append((out, res))
    elif kind == "theorem1":
        _need(args, "p")
        ing = theorem2_ingredients()
        overrides = {k: getattr(args, f"{k.lower()}_code") for k in "DEFG"}
        for key, path in overrides.items():
            if path:
                ing = {**ing, key: _load(path)}
        code = theorem1_assemble(chain_for(args.p), _plain(ing["D"]), _plain(ing["E"]),
                                 ing["F"], ing["G"], certify, args.workers)
        outputs.append((out, code))
    elif kind == "theorem2":
        _need(args, "p")
        outputs.append((out, theorem2_pipeline(args.p, certify, args.workers)))
    elif kind == "steiner":
        if args.d2 and args.d3:
            d2, d3 = design_read(args.d2), design_read(args.d3)
        else:
            d2, d3 = trivial_designs()
        outputs.append((out, theorem3_assemble(d2, d3, certify)))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown kind {kind}")

    for path, code in outputs:
        if args.certify:
            _certify(code, args.workers)
        code_write(code, path)
        print(f"{path}: {_summary(code)}")
    return 0


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"build {args.kind} needs " + ", ".join(f"--{n}" for n in missing))


def cmd_verify(args: argparse.Namespace) -> int:
    c = _load(args.path)
    code = _plain(c)
    prop = args.property
    if prop == "mds":
        rep = mds_check(code, workers=args.workers)
    elif prop == "oa":
        rep = oa_check(to_oa_rows(code), code.d - code.t, code.q)
    elif prop == "cubes":
        rep = cubes_check_code(code)
    elif prop == "hole":
        if not isinstance(c, HoleCode):
            raise UsageError(f"{args.path} has no hole header")
        rep = hole_verify(c, args.workers)
    else:
        dist = distance_check(code)
        ok = dist == code.t + 1
        print(f"distance: {'PASS' if ok else 'FAIL'} (minimum distance {dist}, declared {code.t + 1})")
        return 0 if ok else 1
    print(rep.summary())
    if args.keyvalue:
        print(rep.keyvalue())
    return 0 if rep else 1


def cmd_export(args: argparse.Namespace) -> int:
    code = _plain(_load(args.path))
    out = Path(args.output)
    if args.format == "cubes":
        cubes_write(to_latin_cubes(code), out)
    elif args.format == "oa":
        with open(out, "w", newline="\n") as fh:
            fh.write(f"# OA_1({code.d - code.t},{code.d},{code.q}) rows={len(code)}\n")
            np.savetxt(fh, to_oa_rows(code), fmt="%d", delimiter=" ")
    else:
        with open(out, "w", newline="\n") as fh:
            np.savetxt(fh, code.words, fmt="%d", delimiter=" ")
    print(f"{out}: {args.format} export of {_summary(code)}")
    return 0


def cmd_info(args: argparse.Namespace) -> int:
    if args.path:
        c = _load(args.path)
        code = _plain(c)
        print(_summary(c))
        print(f"q^(d-t) = {code.q ** (code.d - code.t)}")
    if args.orders:
        for p, n in new_orders(args.orders):
            print(f"p={p} order={n} size={n ** 3}")
    if not args.path and not args.orders:
        raise UsageError("info needs a PATH or --orders N")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdscubes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="verifier threads")
    common.add_argument("--seed", type=int, default=None, help="reserved; constructions are deterministic")

    b = sub.add_parser("build", parents=[common], help="run a construction and write a code file")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--q", type=int, help="field order (rs, super, coset-partition)")
    b.add_argument("--d", type=int, default=5, help="code length (default 5)")
    b.add_argument("--rho", type=int, default=3, help="target distance for rs / sup distance for coset-partition")
    b.add_argument("--p", type=int, help="super chain order (super, theorem1, theorem2)")
    b.add_argument("--q1", type=int)
    b.add_argument("--q2", type=int)
    b.add_argument("--left")
    b.add_argument("--right")
    b.add_argument("--k", type=int, default=2, help="number of filled subcodes (prop8)")
    for name in "DEFG":
        b.add_argument(f"--{name.lower()}-code", dest=f"{name.lower()}_code",
                       help=f"override the {name} ingredient (theorem1)")
    b.add_argument("--d2", help="S(2,5,q) design file (steiner)")
    b.add_argument("--d3", help="S(3,5,q) design file (steiner)")
    b.add_argument("--level", choices=("full", "cardinality"), default="full")
    b.add_argument("--certify", action="store_true", help="re-verify every output before writing")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", parents=[common], help="certify a code file")
    v.add_argument("path")
    v.add_argument("--property", choices=("mds", "oa", "cubes", "hole", "distance"), default="mds")
    v.add_argument("--keyvalue", action="store_true", help="also print a key=value block")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="convert a code file")
    e.add_argument("path")
    e.add_argument("--format", choices=("cubes", "oa", "codewords"), required=True)
    e.add_argument("-o", "--output", required=True)
    e.set_defaults(func=cmd_export)

    i = sub.add_parser("info", help="describe a code file or list new orders")
    i.add_argument("path", nargs="?")
    i.add_argument("--orders", type=int, default=0)
    i.set_defaults(func=cmd_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    start = time.perf_counter()
    try:
        status = args.func(args)
    except SystemExit as exc:
        status = int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = 2
    except (MDSError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        status = 2
    log.info("%s finished in %.2fs", args.command, time.perf_counter() - start)
    return status


if __name__ == "__main__":
    sys.exit(main())
