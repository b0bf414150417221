"""Command line front end.

Every subcommand prints one JSON report to standard output:

    {"schema": "lietype/1", "command": ..., "params": ..., "status": "ok",
     "result": ...}

with sorted keys, so identical invocations produce identical bytes.
Tabular subcommands accept ``--csv`` to print CSV instead.  Exit codes:
0 on success, 1 on usage errors, 2 on domain errors (invalid
mathematical input, enumeration bounds, and so on).  Cyclotomic numbers
are emitted exactly, as a conductor plus rational coordinates in the
power basis.  The only environment variable consulted is LIETYPE_LOG,
which sets the log level.
"""

from __future__ import annotations

import argparse
import csv as _csv
import io
import json
import logging
import os
import sys
from fractions import Fraction

from .brauer import brauer_character, brauer_space_dim, brauer_stability_check
from .cuspidal import cuspidal_data, specialize_q1, validate
from .cyclotomic import Cyclotomic
from .dl import (
    coxeter_condition_check,
    dl_piece_counts,
    drinfeld_count,
    mu_orbit_check,
    sl2_invariance_check,
)
from .errors import LieTypeError, UnsupportedSpec
from .flags import (
    MAX_FLAGS,
    SymplecticForm,
    enumerate_flags,
    make_flag,
    relative_position,
    split_prime_power,
)
from .fourier import (
    burnside_triple_count,
    brute_force_triple_count,
    fourier_checks,
    m_set,
    pairing_matrix,
)
from .gf import make_field
from .groups import MAX_GROUP_SIZE, FiniteGroup, cycle_string, parse_cycles
from .hecke import hecke_algebra
from .weyl import CoxeterSpec, weyl_group

SCHEMA = "lietype/1"

log = logging.getLogger("lietype")


class UsageError(Exception):
    """Bad command line input, reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# serialization helpers


def _cyclotomic_json(value: Cyclotomic) -> dict:
    coords = [
        [f.numerator, f.denominator]
        for f in (Fraction(num, value.den) for num in value.num)
    ]
    return {"conductor": value.n, "coords": coords}


def _word_text(word) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def _emit_json(command: str, params: dict, result) -> None:
    report = {
        "schema": SCHEMA,
        "command": command,
        "params": params,
        "status": "ok",
        "result": result,
    }
    print(json.dumps(report, sort_keys=True, indent=2))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit(args, command: str, params: dict, result, table=None) -> None:
    if getattr(args, "csv", False):
        if table is None:
            raise UsageError(f"{command} has no CSV form")
        header, rows = table
        _emit_csv(header, rows)
    else:
        _emit_json(command, params, result)


# ---------------------------------------------------------------------------
# group resolution


def _builtin_group(name: str) -> FiniteGroup:
    if name == "Z2":
        return FiniteGroup.cyclic(2)
    if name in ("S3", "S4", "S5"):
        return FiniteGroup.symmetric(int(name[1]))
    if name in ("A4", "A5"):
        return FiniteGroup.alternating(int(name[1]))
    if name.startswith("F2^"):
        try:
            n = int(name[3:])
        except ValueError:
            raise UsageError(f"bad builtin group {name!r}")
        if not 1 <= n <= 16:
            raise UsageError("F2^n supports 1 <= n <= 16")
        return FiniteGroup.elementary_abelian_2(n)
    raise UsageError(
        f"unknown builtin group {name!r}; "
        "expected Z2, S3, S4, S5, A4, A5, or F2^n"
    )


def _resolve_group(args) -> tuple[FiniteGroup, str]:
    max_size = args.max_size or MAX_GROUP_SIZE
    if args.group and args.perm_file:
        raise UsageError("give either --group or --perm-file, not both")
    if args.group:
        if not args.group.startswith("builtin:"):
            raise UsageError("--group takes builtin:<name>; files go via --perm-file")
        return _builtin_group(args.group[len("builtin:"):]), args.group
    if args.perm_file:
        try:
            with open(args.perm_file, encoding="utf-8") as handle:
                lines = [
                    line.strip()
                    for line in handle
                    if line.strip() and not line.strip().startswith("#")
                ]
        except OSError as exc:
            raise UsageError(f"cannot read {args.perm_file}: {exc}")
        if not lines:
            raise UsageError(f"{args.perm_file} contains no generators")
        degree = max(len(parse_cycles(line)) for line in lines)
        gens = [parse_cycles(line, degree) for line in lines]
        return FiniteGroup.from_generators(gens, max_size=max_size), args.perm_file
    raise UsageError("a group is required: --group builtin:<name> or --perm-file")


def _coxeter_spec(args) -> CoxeterSpec:
    return CoxeterSpec(args.type, args.rank)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_kl(args) -> None:
    spec = _coxeter_spec(args)
    group = weyl_group(spec)
    group.enumerate(args.max_size)
    algebra = hecke_algebra(group)
    params = {"type": str(spec)}
    if args.all:
        entries = algebra.kl_table_json()
        table = (
            ["y", "w", "coeffs"],
            [
                [_word_text(e["y"]), _word_text(e["w"]), " ".join(map(str, e["coeffs"]))]
                for e in entries
            ],
        )
        _emit(args, "kl", params, {"entries": entries}, table)
        return
    if args.w is None:
        raise UsageError("kl needs --all or --w (optionally with --y)")
    w = group.parse_element(args.w)
    y = group.parse_element(args.y) if args.y is not None else group.identity
    params.update({"y": list(y.word), "w": list(w.word)})
    result = {
        "y": list(y.word),
        "w": list(w.word),
        "coeffs": algebra.kl_polynomial(y, w),
        "mu": algebra.mu(y, w),
    }
    _emit(args, "kl", params, result)


def _cmd_cells(args) -> None:
    spec = _coxeter_spec(args)
    group = weyl_group(spec)
    group.enumerate(args.max_size)
    algebra = hecke_algebra(group)
    blocks = algebra.cells_json(args.kind)
    params = {"type": str(spec), "kind": args.kind}
    result = {"cells": blocks, "sizes": [len(b) for b in blocks]}
    table = (
        ["cell", "element"],
        [[i, _word_text(word)] for i, block in enumerate(blocks) for word in block],
    )
    _emit(args, "cells", params, result, table)


def _cmd_palindrome(args) -> None:
    spec = _coxeter_spec(args)
    group = weyl_group(spec)
    algebra = hecke_algebra(group)
    failures = []
    for w in group.enumerate(args.max_size):
        ok, _ = algebra.palindrome_check(w)
        if not ok:
            failures.append(_word_text(w.word))
    params = {"type": str(spec)}
    result = {
        "checked": group.order,
        "all_palindromic": not failures,
        "failures": failures,
    }
    _emit(args, "palindrome", params, result)


def _cmd_fourier(args) -> None:
    group, label = _resolve_group(args)
    params = {"group": label}
    pairs = m_set(group)
    result = {
        "size": len(pairs),
        "pairs": [
            {
                "class": p.class_idx,
                "rep": cycle_string(group.perms[p.rep]),
                "char": p.char_idx,
            }
            for p in pairs
        ],
    }
    if args.check:
        checks = fourier_checks(group)
        result["checks"] = {
            "involutive": "pass" if checks["involutive"] else "fail",
            "unitary": "pass" if checks["unitary"] else "fail",
            "hermitian": "pass" if checks["hermitian"] else "fail",
        }
    if args.matrix:
        matrix = pairing_matrix(group)
        result["matrix"] = [[_cyclotomic_json(e) for e in row] for row in matrix]
    _emit(args, "fourier", params, result)


def _cmd_triples(args) -> None:
    group, label = _resolve_group(args)
    classes = group.conjugacy_classes()
    reps = [cls[0] for cls in classes]
    params = {"group": label}

    chosen: list[tuple[int, int, int]]
    if args.all:
        k = len(classes)
        chosen = [(a, b, c) for a in range(k) for b in range(k) for c in range(k)]
    elif args.classes is not None:
        a, b, c = args.classes
        for idx in (a, b, c):
            if not 0 <= idx < len(classes):
                raise UsageError(f"class index {idx} out of range 0..{len(classes) - 1}")
        chosen = [(a, b, c)]
        params["classes"] = [a, b, c]
    elif args.orders is not None:
        picked = []
        for order in args.orders:
            match = next(
                (i for i, rep in enumerate(reps) if group.order_of(rep) == order),
                None,
            )
            if match is None:
                raise UsageError(f"no class of element order {order}")
            picked.append(match)
        chosen = [tuple(picked)]
        params["orders"] = list(args.orders)
    else:
        raise UsageError("triples needs --all, --classes A B C, or --orders A B C")

    rows = []
    for a, b, c in chosen:
        count = burnside_triple_count(group, a, b, c)
        row = {"classes": [a, b, c], "count": count}
        if args.brute_check:
            row["brute_force"] = brute_force_triple_count(group, a, b, c)
            row["agrees"] = row["brute_force"] == count
        rows.append(row)
    result = {
        "class_reps": [cycle_string(group.perms[r]) for r in reps],
        "triples": rows,
    }
    table = (
        ["ca", "cb", "cc", "count"],
        [[*row["classes"], row["count"]] for row in rows],
    )
    _emit(args, "triples", params, result, table)


def _cmd_dl(args) -> None:
    report = dl_piece_counts(
        args.group_type, args.n, args.q, args.m, max_flags=args.max_size or MAX_FLAGS
    )
    params = {"group_type": args.group_type, "n": args.n, "q": args.q, "m": args.m}
    payload = report.to_json()
    payload["total"] = report.total
    if args.coxeter_check:
        if args.group_type != "GL":
            raise UsageError("--coxeter-check applies to GL only")
        payload["coxeter_chain_equivalence"] = coxeter_condition_check(
            args.n, args.q, args.m
        )
    table = (
        ["w", "count"],
        [
            [" ".join(map(str, entry["images"])), entry["count"]]
            for entry in payload["counts"]
        ],
    )
    _emit(args, "dl", params, payload, table)


def _cmd_drinfeld(args) -> None:
    count = drinfeld_count(args.q, args.m)
    params = {"q": args.q, "m": args.m}
    result = {
        "count": count,
        "divisible_by_q_plus_1": count % (args.q + 1) == 0,
    }
    if args.check:
        params["seed"] = args.seed
        size = args.q ** args.m
        if (size - 1) % (args.q + 1) == 0:
            result["mu_orbits_free"] = mu_orbit_check(args.q, args.m)
        else:
            result["mu_orbits_free"] = "skipped: mu_(q+1) not inside GF(q^m)"
        result["sl2_invariant"] = sl2_invariance_check(
            args.q, args.m, samples=10, seed=args.seed
        )
    _emit(args, "drinfeld", params, result)


def _cmd_brauer_dim(args) -> None:
    params = {"n": args.n, "p": args.p, "mode": args.mode}
    modes = ("modular", "rational") if args.mode == "both" else (args.mode,)
    result = {mode: brauer_space_dim(args.n, args.p, mode) for mode in modes}
    if args.stability:
        params["seed"] = args.seed
        result["stability"] = {
            mode: brauer_stability_check(args.n, args.p, mode, seed=args.seed)
            for mode in modes
        }
    _emit(args, "brauer-dim", params, result)


def _parse_matrix(text: str) -> list[list[int]]:
    try:
        rows = [
            [int(tok) for tok in chunk.split(",")]
            for chunk in text.split(";")
        ]
    except ValueError:
        raise UsageError(f"cannot parse matrix {text!r}; use 'a,b;c,d'")
    if any(len(row) != len(rows) for row in rows):
        raise UsageError("matrix must be square")
    return rows


def _cmd_brauer_char(args) -> None:
    matrix = _parse_matrix(args.matrix)
    field = make_field(args.p, args.s)
    if any(not 0 <= entry < field.size for row in matrix for entry in row):
        raise UsageError(f"matrix entries must be field encodings in 0..{field.size - 1}")
    value = brauer_character(field, [matrix], 0)
    params = {"p": args.p, "s": args.s, "matrix": args.matrix}
    result = {
        "dimension": len(matrix),
        "value": _cyclotomic_json(value),
        "text": str(value),
    }
    _emit(args, "brauer-char", params, result)


def _cmd_cuspidal(args) -> None:
    spec = CoxeterSpec.parse(args.type)
    params = {"type": str(spec)}
    if args.check:
        report = validate(spec)
        result = {"report": [line.to_json() for line in report]}
        table = (
            ["check", "status", "details"],
            [[line.name, line.status, line.details] for line in report],
        )
        _emit(args, "cuspidal", params, result, table)
        return
    data = cuspidal_data(spec)
    if args.q1:
        rows = specialize_q1(data)
        result = {"count": len(rows), "rows": [r.to_json() for r in rows]}
        table = (
            ["class", "turn", "sqrt_q_dependent"],
            [
                [str(r.class_spec), f"{r.turn.numerator}/{r.turn.denominator}",
                 int(r.sqrt_q_dependent)]
                for r in rows
            ],
        )
    else:
        result = {"count": len(data), "rows": [d.to_json() for d in data]}
        table = (
            ["class", "eigenvalue"],
            [[str(d.class_spec), str(d.eigenvalue)] for d in data],
        )
    _emit(args, "cuspidal", params, result, table)


def _cmd_charpoly(args) -> None:
    spec = _coxeter_spec(args)
    group = weyl_group(spec)
    w = group.parse_element(args.word)
    params = {"type": str(spec), "word": list(w.word)}
    result = {
        "word": list(w.word),
        "length": w.length,
        "char_poly": w.char_poly(),
        "factors": sorted([d, m] for d, m in w.char_poly_factored().items()),
        "elliptic": w.is_elliptic(),
    }
    if spec.family in ("A", "B", "C", "D"):
        result["cycle_type"] = list(w.to_big_permutation().cycle_type())
    _emit(args, "charpoly", params, result)


def _cmd_relpos(args) -> None:
    q = args.q
    n = args.n
    if args.group_type == "GL":
        weyl = weyl_group(f"A{n - 1}") if n >= 2 else None
        if weyl is None:
            raise UsageError("GL needs n >= 2")
        form = None
    else:
        if n < 4 or n % 2:
            raise UsageError("Sp needs even n >= 4")
        weyl = weyl_group(f"C{n // 2}")
        form = SymplecticForm(n)
    p, s = split_prime_power(q)
    field = make_field(p, s * args.m)
    identity_rows = [
        tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
    ]
    base = make_flag(field, [identity_rows[: i + 1] for i in range(n - 1)])
    lengths = {w.to_big_permutation(): w.length for w in weyl.enumerate()}
    counts = {big: 0 for big in lengths}
    size = q ** args.m
    for other in enumerate_flags(n, field, form=form, max_count=args.max_size or MAX_FLAGS):
        counts[relative_position(base, other, form)] += 1
    entries = []
    all_match = True
    for big in sorted(counts, key=lambda b: b.images):
        expected = size ** lengths[big]
        match = counts[big] == expected
        all_match = all_match and match
        entries.append(
            {
                "images": list(big.images),
                "count": counts[big],
                "q_power_length": expected,
                "matches": match,
            }
        )
    params = {"group_type": args.group_type, "n": n, "q": q, "m": args.m}
    result = {"base_flag": "standard coordinate flag", "counts": entries,
              "all_match_q_power_length": all_match}
    table = (
        ["w", "count", "q_power_length"],
        [
            [" ".join(map(str, e["images"])), e["count"], e["q_power_length"]]
            for e in entries
        ],
    )
    _emit(args, "relpos", params, result, table)


# ---------------------------------------------------------------------------
# parser


def _add_common(sub) -> None:
    sub.add_argument("--json", action="store_true", help="emit JSON (the default)")
    sub.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub.add_argument(
        "--max-size",
        type=int,
        default=None,
        help="enumeration bound override (flags or group elements)",
    )


def _add_coxeter(sub) -> None:
    sub.add_argument("--type", required=True, help="family letter: A, B, C, D, E, F, G")
    sub.add_argument("--rank", required=True, type=int)


def build_parser() -> _Parser:
    parser = _Parser(prog="lietype", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kl = subs.add_parser("kl", help="Kazhdan-Lusztig polynomials")
    _add_coxeter(kl)
    kl.add_argument("--all", action="store_true", help="full table")
    kl.add_argument("--y", help="element word like 's1 s2' (default: identity)")
    kl.add_argument("--w", help="element word like 's2 s1 s3 s2'")
    kl.add_argument("--csv", action="store_true")
    kl.set_defaults(handler=_cmd_kl)

    cells = subs.add_parser("cells", help="cell partition of a Weyl group")
    _add_coxeter(cells)
    cells.add_argument(
        "--kind", choices=("left", "right", "two-sided"), default="two-sided"
    )
    cells.add_argument("--csv", action="store_true")
    cells.set_defaults(handler=_cmd_cells)

    pal = subs.add_parser("palindrome", help="palindromicity of Pi(X) for all w")
    _add_coxeter(pal)
    pal.set_defaults(handler=_cmd_palindrome)

    fourier = subs.add_parser("fourier", help="pairing matrix on M(Gamma)")
    fourier.add_argument("--group", help="builtin:Z2|S3|S4|S5|A4|A5|F2^n")
    fourier.add_argument("--perm-file", help="file with one generator per line")
    fourier.add_argument("--matrix", action="store_true", help="emit the matrix")
    fourier.add_argument("--check", action="store_true", help="run matrix checks")
    fourier.set_defaults(handler=_cmd_fourier)

    triples = subs.add_parser("triples", help="class-triple counts via characters")
    triples.add_argument("--group", help="builtin:Z2|S3|S4|S5|A4|A5|F2^n")
    triples.add_argument("--perm-file", help="file with one generator per line")
    triples.add_argument("--all", action="store_true", help="every class triple")
    triples.add_argument("--classes", nargs=3, type=int, metavar=("CA", "CB", "CC"))
    triples.add_argument(
        "--orders",
        nargs=3,
        type=int,
        metavar=("OA", "OB", "OC"),
        help="pick the first class of each element order",
    )
    triples.add_argument("--brute-check", action="store_true")
    triples.add_argument("--csv", action="store_true")
    triples.set_defaults(handler=_cmd_triples)

    dl = subs.add_parser("dl", help="flag partition by relative position with F")
    dl.add_argument("--group-type", choices=("GL", "Sp"), required=True)
    dl.add_argument("--n", type=int, required=True, help="ambient dimension")
    dl.add_argument("--q", type=int, required=True)
    dl.add_argument("--m", type=int, required=True)
    dl.add_argument(
        "--coxeter-check",
        action="store_true",
        help="also verify the chain description of the Coxeter piece (GL)",
    )
    dl.add_argument("--csv", action="store_true")
    dl.set_defaults(handler=_cmd_dl)

    drin = subs.add_parser("drinfeld", help="points of x^q y - x y^q = 1")
    drin.add_argument("--q", type=int, required=True)
    drin.add_argument("--m", type=int, required=True)
    drin.add_argument("--check", action="store_true", help="orbit and invariance checks")
    drin.set_defaults(handler=_cmd_drinfeld)

    bdim = subs.add_parser("brauer-dim", help="dimensions of flag-function kernels")
    bdim.add_argument("--n", type=int, required=True)
    bdim.add_argument("--p", type=int, required=True)
    bdim.add_argument("--mode", choices=("modular", "rational", "both"), default="both")
    bdim.add_argument("--stability", action="store_true")
    bdim.set_defaults(handler=_cmd_brauer_dim)

    bchar = subs.add_parser("brauer-char", help="Brauer character of one matrix")
    bchar.add_argument("--p", type=int, required=True)
    bchar.add_argument("--s", type=int, default=1, help="field degree over the prime")
    bchar.add_argument(
        "--matrix", required=True, help="semicolon-separated rows, e.g. '0,1;1,1'"
    )
    bchar.set_defaults(handler=_cmd_brauer_char)

    cusp = subs.add_parser("cuspidal", help="cuspidal class/eigenvalue tables")
    cusp.add_argument("--type", required=True, help="full name like B2 or E8")
    cusp.add_argument("--q1", action="store_true", help="drop the q-power")
    cusp.add_argument("--check", action="store_true", help="diagnostic report")
    cusp.add_argument("--csv", action="store_true")
    cusp.set_defaults(handler=_cmd_cuspidal)

    cpoly = subs.add_parser("charpoly", help="characteristic polynomial of an element")
    _add_coxeter(cpoly)
    cpoly.add_argument("--word", required=True, help="element word like 's1 s2'")
    cpoly.set_defaults(handler=_cmd_charpoly)

    relpos = subs.add_parser("relpos", help="Schubert counts from the standard flag")
    relpos.add_argument("--group-type", choices=("GL", "Sp"), required=True)
    relpos.add_argument("--n", type=int, required=True, help="ambient dimension")
    relpos.add_argument("--q", type=int, required=True)
    relpos.add_argument("--m", type=int, default=1)
    relpos.add_argument("--csv", action="store_true")
    relpos.set_defaults(handler=_cmd_relpos)

    for sub in subs.choices.values():
        _add_common(sub)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("LIETYPE_LOG", "WARNING"))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "csv", False) and args.json:
            raise UsageError("--csv and --json are mutually exclusive")
        args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except LieTypeError as exc:
        report = {
            "schema": SCHEMA,
            "command": getattr(args, "command", None),
            "params": {},
            "status": "error",
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(report, sort_keys=True, indent=2))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
