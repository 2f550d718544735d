"""Command-line front end: table export, verification, norm and field reports.

Subcommands
    mul-table      emit the full structure-constant table as CSV or JSON
    twist          sign and product index of one basis pair
    blocks         2x2 tile classification of a sign table
    verify         run the invariant suites and report counts
    fib-norm       direct and closed-form norms of one Fibonacci quaternion
    threshold      energy sign and stabilization index for a parameter pair
    residue-field  representatives and label table of a residue field
    label          label of a subring element, or the element behind a label
    encode         map symbols onto constellation points and back

Exit codes: 0 success, 1 contract violation or failed verification,
2 usage errors.  Output is deterministic for fixed flags.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra import Convention, make_algebra
from .fibonacci import (QuaternionParams, energy, fib_norm_direct,
                        fib_norm_formula, invertibility_threshold)
from .residue import ResidueField, UElement, make_w, residue_field
from .suites import SUITES
from .twist import (BlockKind, TwistTable, build_table, partition_blocks,
                    twist_sign)


class CliError(Exception):
    """Contract violation reported with exit code 1."""


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _fraction_list(text: str) -> List[Fraction]:
    return [_fraction(part) for part in text.split(",") if part != ""]


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from exc


def _convention(text: str) -> Convention:
    try:
        return Convention(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"convention must be one of {[c.value for c in Convention]}") from exc


# ---- serialization ----------------------------------------------------------

def mask_string(mask: int, t: int) -> str:
    """Stage-selection mask as a bit string, highest stage first."""
    return format(mask, f"0{t}b") if t else ""


def table_rows(table: TwistTable) -> List[dict]:
    rows = []
    for p in range(table.dimension):
        for q in range(table.dimension):
            coeff = table.entry(p, q)
            rows.append({
                "p": p, "q": q, "index": p ^ q,
                "sign": coeff.sign,
                "gamma_mask": mask_string(coeff.gamma_mask, table.t),
            })
    return rows


def table_to_dict(table: TwistTable, gammas: Sequence[Fraction]) -> dict:
    return {
        "t": table.t,
        "convention": table.convention.value,
        "gammas": [str(Fraction(g)) for g in gammas],
        "entries": table_rows(table),
    }


def table_from_dict(data: dict) -> TwistTable:
    """Rebuild a table from its JSON form and cross-check the index law."""
    import numpy as np

    t = int(data["t"])
    n = 1 << t
    signs = np.zeros((n, n), dtype=np.int8)
    masks = np.zeros((n, n), dtype=np.uint16)
    for row in data["entries"]:
        p, q = int(row["p"]), int(row["q"])
        if int(row["index"]) != p ^ q:
            raise ValueError(f"index law violated at ({p}, {q})")
        signs[p, q] = int(row["sign"])
        masks[p, q] = int(row["gamma_mask"], 2) if row["gamma_mask"] else 0
    return TwistTable(t, Convention(data["convention"]), signs, masks)


def field_to_dict(field: ResidueField) -> dict:
    return {
        "p": field.p,
        "s": field.s,
        "pi": [field.pi.a, field.pi.b],
        "w_trace": field.gen.q,
        "w_norm": field.gen.m,
        "t": field.gen.w.signature.t,
        "w_coeffs": list(field.gen.w.coeffs),
        "labels": [{"k": k, "a": u.a, "b": u.b, "norm": u.norm()}
                   for k, u in enumerate(field.reps)],
    }


def field_from_dict(data: dict) -> ResidueField:
    """Rebuild a residue field from its JSON form, revalidating labels."""
    from .algebra import AlgebraSignature
    from .residue import WGenerator

    sig = AlgebraSignature(int(data["t"]), (-1,) * int(data["t"]))
    gen = WGenerator(sig.element([int(c) for c in data["w_coeffs"]]))
    if (gen.q, gen.m) != (data["w_trace"], data["w_norm"]):
        raise ValueError("generator quadratic data does not match")
    pi = UElement(int(data["pi"][0]), int(data["pi"][1]), gen)
    reps = [None] * int(data["p"])
    for row in data["labels"]:
        u = UElement(int(row["a"]), int(row["b"]), gen)
        if u.norm() != row["norm"]:
            raise ValueError(f"stored norm mismatch at label {row['k']}")
        reps[int(row["k"])] = u
    field = ResidueField(pi=pi, p=int(data["p"]), s=int(data["s"]),
                         reps=tuple(reps))
    for k, u in enumerate(field.reps):
        if field.label(u) != k:
            raise ValueError(f"label table inconsistent at {k}")
    return field


def field_rows(field: ResidueField) -> List[dict]:
    return [{"k": k, "a": u.a, "b": u.b, "norm": u.norm(), "element": str(u)}
            for k, u in enumerate(field.reps)]


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(rows: List[dict], columns: List[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row[c] for c in columns})
    return buf.getvalue()


# ---- subcommand handlers ----------------------------------------------------

def _cmd_mul_table(args) -> int:
    gammas = args.gammas
    sig = make_algebra(args.t, gammas, args.convention)  # validates count/nonzero
    table = build_table(args.t, args.convention)
    if args.format == "csv":
        text = _csv_text(table_rows(table), ["p", "q", "index", "sign", "gamma_mask"])
    else:
        text = json.dumps(table_to_dict(table, sig.gammas), indent=2) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_twist(args) -> int:
    sign = twist_sign(args.p, args.q, args.t, args.convention)
    _emit(f"sign={sign:+d} index={args.p ^ args.q}\n", args.output)
    return 0


def _cmd_blocks(args) -> int:
    table = build_table(args.t, args.convention)
    kinds = partition_blocks(table)
    lines = []
    for row in kinds:
        lines.append(" ".join(f"{BlockKind(k).label():>3}" for k in row))
    total = kinds.size
    lines.append(f"all {total} blocks classified: PASS")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    chunks = []
    for name in names:
        kwargs = {}
        if name in ("core",) and args.samples:
            kwargs["samples"] = args.samples
        if name == "core" and args.t:
            kwargs["depths"] = tuple(range(1, args.t + 1))
        result = SUITES[name](**kwargs)
        ok = ok and result.passed
        chunks.append(result.summary())
    _emit("\n".join(chunks) + "\n", args.output)
    if not ok:
        raise CliError("one or more suites failed")
    return 0


def _cmd_fib_norm(args) -> int:
    params = QuaternionParams(args.alpha1, args.alpha2)
    direct = Fraction(fib_norm_direct(args.n, params))
    formula = Fraction(fib_norm_formula(args.n, params))
    equal = direct == formula
    _emit(f"direct={direct}\nformula={formula}\nequal={str(equal).lower()}\n",
          args.output)
    if not equal:
        raise CliError("closed form disagrees with the direct norm")
    return 0


def _cmd_threshold(args) -> int:
    params = QuaternionParams(args.alpha1, args.alpha2)
    e = energy(params)
    if e.is_zero():
        raise CliError("energy is zero; sign criterion does not apply")
    n0 = invertibility_threshold(params, n_max=args.nmax)
    if n0 is None:
        raise CliError(f"sign did not stabilize by n={args.nmax}")
    _emit(f"energy={e}\nenergy_sign={e.sign():+d}\nn0={n0}\n", args.output)
    return 0


def _build_field(args) -> ResidueField:
    basis = args.basis if args.basis else [1, 2, 3]
    if len(args.pi) != 2:
        raise CliError("--pi takes exactly two coordinates a,b")
    gen = make_w(args.t, basis, args.w)
    pi = UElement(args.pi[0], args.pi[1], gen)
    field = residue_field(pi)
    if args.p is not None and field.p != args.p:
        raise CliError(f"modulus norm is {field.p}, not the requested {args.p}")
    return field


def _cmd_residue_field(args) -> int:
    field = _build_field(args)
    if args.format == "csv":
        text = _csv_text(field_rows(field), ["k", "a", "b", "norm", "element"])
    else:
        text = json.dumps(field_to_dict(field), indent=2) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_label(args) -> int:
    field = _build_field(args)
    if (args.u is None) == (args.k is None):
        raise CliError("provide exactly one of --u or --k")
    if args.u is not None:
        u = UElement(args.u[0], args.u[1], field.gen)
        _emit(f"label={field.label(u)}\n", args.output)
    else:
        u = field.unlabel(args.k)
        _emit(f"element={u.a},{u.b}\n", args.output)
    return 0


def _cmd_encode(args) -> int:
    from .residue import decode_symbols, encode_symbols

    field = _build_field(args)
    bad = [k for k in args.symbols if not 0 <= k < field.p]
    if bad:
        raise CliError(f"symbols out of range for field size {field.p}: {bad}")
    encoded = encode_symbols(args.symbols, field)
    lines = [f"{u.a},{u.b}" for u in encoded]
    decoded = decode_symbols(encoded, field)
    lines.append("decoded=" + ",".join(str(k) for k in decoded))
    _emit("\n".join(lines) + "\n", args.output)
    if decoded != list(args.symbols):
        raise CliError("decode of the encoded stream does not round-trip")
    return 0


# ---- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdalgebra",
        description="Exact doubling-algebra tables, norms and residue fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", help="write to this path instead of stdout")

    p = sub.add_parser("mul-table", help="emit the structure-constant table")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--gammas", type=_fraction_list, required=True,
                   help="comma-separated stage parameters, e.g. -1,-1")
    p.add_argument("--convention", type=_convention,
                   default=Convention.CONJUGATE_RIGHT)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_common(p)
    p.set_defaults(func=_cmd_mul_table)

    p = sub.add_parser("twist", help="sign and index of one basis product")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--convention", type=_convention,
                   default=Convention.CONJUGATE_RIGHT)
    add_common(p)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("blocks", help="classify 2x2 tiles of the sign table")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--convention", type=_convention,
                   default=Convention.CONJUGATE_LEFT)
    add_common(p)
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--t", type=int, default=0,
                   help="cap the depth range for the core suite")
    p.add_argument("--suite", choices=("core", "twist", "fib", "residue", "all"),
                   default="all")
    p.add_argument("--samples", type=int, default=0,
                   help="random samples per depth for the core suite")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fib-norm", help="norms of one Fibonacci quaternion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha1", type=_fraction, required=True)
    p.add_argument("--alpha2", type=_fraction, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_fib_norm)

    p = sub.add_parser("threshold", help="energy sign and stabilization index")
    p.add_argument("--alpha1", type=_fraction, required=True)
    p.add_argument("--alpha2", type=_fraction, required=True)
    p.add_argument("--nmax", type=int, default=200)
    add_common(p)
    p.set_defaults(func=_cmd_threshold)

    def add_field_flags(p):
        p.add_argument("--p", type=int, default=None,
                       help="expected prime size, checked against the norm")
        p.add_argument("--pi", type=_int_list, required=True,
                       help="prime as a,b coordinates over (1, w)")
        p.add_argument("--w", type=_int_list, required=True,
                       help="generator coefficients c0,c1,c2,c3")
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--basis", type=_int_list, default=None,
                       help="three distinct basis indices, default 1,2,3")
        add_common(p)

    p = sub.add_parser("residue-field", help="representatives and label table")
    add_field_flags(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_residue_field)

    p = sub.add_parser("label", help="label one element or unlabel one symbol")
    add_field_flags(p)
    p.add_argument("--u", type=_int_list, default=None,
                   help="element as a,b coordinates")
    p.add_argument("--k", type=int, default=None, help="symbol to unlabel")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("encode", help="encode symbols onto the constellation")
    add_field_flags(p)
    p.add_argument("--symbols", type=_int_list, required=True)
    p.set_defaults(func=_cmd_encode)

    return parser


_LIST_FLAGS = ("--pi", "--w", "--u", "--basis", "--symbols", "--gammas",
               "--alpha1", "--alpha2")


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """Glue list/rational flags to values that start with a minus sign.

    argparse mistakes ``--pi -1,2`` for a flag followed by an unknown
    option; rewriting it as ``--pi=-1,2`` keeps the documented syntax
    working.
    """
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in _LIST_FLAGS and i + 1 < len(argv)
                and argv[i + 1].startswith("-")
                and any(ch.isdigit() for ch in argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_negative_values(argv))
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
