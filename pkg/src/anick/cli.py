"""Command-line front end.

Subcommands: gb, nf, chains, hilbert, anick, tor.  Input is a presentation
file (or ``-`` for stdin), or ``--bn N`` for the built-in family.  Output is
text by default, or JSON with ``--format json``; JSON output is byte-stable
across runs and thread hints.

Exit codes: 0 success, 2 input error (parse errors carry line and column),
3 degree or level bound violation, 1 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import COMMUTATIVE, AlgebraError, BoundError
from .chains import chain_counts, enumerate_chains
from .commutative import comm_buchberger, comm_normal_form, comm_reduce_basis
from .hilbert import (
    hilbert_from_chains,
    hilbert_from_normal_words,
    rational_form,
)
from .noncommutative import nc_buchberger, nc_normal_form, nc_reduce_basis
from .presentation import ParseError, make_bn, parse_poly, parse_presentation
from .resolution import (
    AnickResolution,
    is_minimal,
    tor_dimensions,
    verify_resolution,
)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anick",
        description="Groebner bases, chains, Hilbert series, and the "
                    "resolution of the base field for presented algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, poly_arg=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default=None,
                       help="presentation file, or - for stdin")
        if poly_arg:
            p.add_argument("poly", help="polynomial to reduce")
        p.add_argument("--bn", type=int, default=None, metavar="N",
                       help="use the built-in monomial-plus-one-relation "
                            "family instead of a file")
        p.add_argument("--max-degree", type=int, default=8)
        p.add_argument("--max-level", type=int, default=3)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=1,
                       help="parallelism hint; results never depend on it")
        return p

    add("gb", "compute a (reduced) Groebner basis")
    add("nf", "normal form and ideal membership of one polynomial",
        poly_arg=True)
    add("chains", "enumerate chains on the leading-word set")
    add("hilbert", "Hilbert series by normal-word counting and by chains")
    add("anick", "build and verify the resolution of the base field")
    add("tor", "Tor dimensions and minimality of the resolution")
    return parser


def load_presentation(args):
    if args.bn is not None:
        if args.input is not None:
            raise ParseError("give a file or --bn, not both")
        if args.bn < 1:
            raise ParseError("--bn takes a positive index")
        return make_bn(args.bn)
    if args.input is None:
        raise ParseError("no input: give a presentation file, -, or --bn N")
    if args.input == "-":
        return parse_presentation(sys.stdin.read())
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc.strerror}")
    return parse_presentation(text)


def check_args(args):
    if args.max_degree < 1:
        raise ParseError("--max-degree must be at least 1")
    if args.max_level < 1:
        raise ParseError("--max-level must be at least 1")
    if args.threads < 1:
        raise ParseError("--threads must be at least 1")


def require_noncommutative(pres, command):
    if pres.kind == COMMUTATIVE:
        raise ParseError(f"{command} needs a noncommutative presentation; "
                         f"{pres.name} is commutative")


def _coeff_str(value):
    return str(value)


def _series_json(coeffs):
    out = []
    for c in coeffs:
        frac = Fraction(c)
        out.append(int(frac) if frac.denominator == 1 else str(frac))
    return out


# -- subcommands -------------------------------------------------------------


def cmd_gb(pres, args):
    if pres.kind == COMMUTATIVE:
        basis = comm_reduce_basis(comm_buchberger(pres)).basis
        degree = None
    else:
        gb = nc_buchberger(pres, max_degree=args.max_degree)
        basis = nc_reduce_basis(gb).basis
        degree = gb.complete_to_degree
    data = {
        "algebra": pres.name,
        "kind": pres.kind,
        "basis": [pres.format_poly(g) for g in basis],
        "complete_to_degree": degree,
    }
    if args.format == "json":
        return data
    lines = [f"algebra {pres.name} ({pres.kind})"]
    if degree is not None:
        lines.append(f"basis certified complete to degree {degree}:")
    else:
        lines.append("reduced basis:")
    lines += [f"  {s}" for s in data["basis"]]
    return "\n".join(lines)


def cmd_nf(pres, args):
    f = parse_poly(pres, args.poly)
    if pres.kind == COMMUTATIVE:
        basis = comm_reduce_basis(comm_buchberger(pres)).basis
        nf = comm_normal_form(pres, f, basis)
        certified = True
    else:
        gb = nc_buchberger(pres, max_degree=args.max_degree)
        degree = pres.poly_degree(f)
        if degree > gb.complete_to_degree:
            raise BoundError(
                f"input has degree {degree}; the basis is only certified to "
                f"degree {gb.complete_to_degree} (raise --max-degree)")
        nf = nc_normal_form(pres, f, gb.basis)
        certified = True
    data = {
        "algebra": pres.name,
        "input": pres.format_poly(f),
        "normal_form": pres.format_poly(nf),
        "member": not nf,
        "certified": certified,
    }
    if args.format == "json":
        return data
    verdict = "member" if data["member"] else "not a member"
    return (f"normal form: {data['normal_form']}\n"
            f"ideal membership: {verdict}")


def _chain_layout(pres, args):
    gb = nc_buchberger(pres, max_degree=args.max_degree)
    obstructions = [g.leading[0] for g in nc_reduce_basis(gb).basis]
    cs = enumerate_chains(pres, obstructions, args.max_level, args.max_degree)
    return gb, cs


def cmd_chains(pres, args):
    require_noncommutative(pres, "chains")
    gb, cs = _chain_layout(pres, args)
    counts = chain_counts(cs)
    levels = {}
    for n in range(-1, cs.max_level + 1):
        levels[str(n)] = {
            "words": ["1"] if n == -1 else
                     [pres.format_monomial(w) for w in cs.words(n)],
            "by_degree": {str(d): c for d, c in sorted(counts[n].items())},
        }
    data = {
        "algebra": pres.name,
        "max_level": cs.max_level,
        "max_degree": cs.max_degree,
        "levels": levels,
        "totals": {str(n): len(cs.levels[n])
                   for n in range(0, cs.max_level + 1)},
    }
    if args.format == "json":
        return data
    lines = [f"chains of {pres.name} to level {cs.max_level}, "
             f"degree {cs.max_degree}"]
    for n in range(1, cs.max_level + 1):
        words = levels[str(n)]["words"]
        lines.append(f"level {n} ({len(words)}):")
        lines += [f"  {w}" for w in words]
    return "\n".join(lines)


def cmd_hilbert(pres, args):
    if pres.kind == COMMUTATIVE:
        series = hilbert_from_normal_words(
            comm_reduce_basis(comm_buchberger(pres)), args.max_degree)
        chain_series = None
    else:
        gb = nc_buchberger(pres, max_degree=args.max_degree)
        series = hilbert_from_normal_words(gb, args.max_degree)
        obstructions = [g.leading[0] for g in nc_reduce_basis(gb).basis]
        cs = enumerate_chains(pres, obstructions,
                              max(args.max_level, args.max_degree),
                              args.max_degree)
        chain_series = hilbert_from_chains(cs, args.max_degree)
    agree = None if chain_series is None else list(series) == list(chain_series)
    candidate = rational_form(series)
    data = {
        "algebra": pres.name,
        "max_degree": args.max_degree,
        "normal_words": _series_json(series),
        "chain_inverse": None if chain_series is None
                         else _series_json(chain_series),
        "agree": agree,
        "rational_candidate": None if candidate is None else {
            "numerator": _series_json(candidate[0]),
            "denominator": _series_json(candidate[1]),
            "note": "fits the truncation only; not certified",
        },
    }
    if args.format == "json":
        return data
    lines = [f"Hilbert series of {pres.name} to degree {args.max_degree}",
             f"  normal words:  {data['normal_words']}"]
    if chain_series is not None:
        lines.append(f"  chain inverse: {data['chain_inverse']}")
        lines.append(f"  agreement: {agree}")
    if candidate is not None:
        lines.append(f"  rational fit: {data['rational_candidate']['numerator']}"
                     f" / {data['rational_candidate']['denominator']}"
                     " (truncation fit only)")
    return "\n".join(lines)


def _build_resolution(pres, args, max_level):
    gb = nc_buchberger(pres, max_degree=args.max_degree)
    obstructions = [g.leading[0] for g in nc_reduce_basis(gb).basis]
    cs = enumerate_chains(pres, obstructions, max_level, args.max_degree)
    return AnickResolution(pres, gb, cs, max_level, args.max_degree)


def _report_json(report):
    dd = report["dd_zero"]
    split = report["splitting"]
    euler = report["euler"]
    exact = report["exactness"]
    return {
        "ok": report["ok"],
        "dd_zero": {"checked": dd["checked"],
                    "failures": [list(f) for f in dd["failures"]],
                    "ok": dd["ok"]},
        "splitting": {"checked": split["checked"],
                      "failure_count": len(split["failures"]),
                      "ok": split["ok"]},
        "euler": dict(euler),
        "exactness": {
            "degree": exact["degree"],
            "ok": exact["ok"],
            "blocks": [dict(b) for b in exact["blocks"]],
        },
    }


def cmd_anick(pres, args):
    require_noncommutative(pres, "anick")
    res = _build_resolution(pres, args, args.max_level)
    report = verify_resolution(res)
    matrices = {}
    for n in range(1, res.max_level + 1):
        rows = [pres.format_monomial(c.word) for c in res.levels[n - 1]]
        cols = [pres.format_monomial(c.word) for c in res.levels[n]]
        entries = []
        for ci, value in enumerate(res.diff[n]):
            by_row = {}
            for (cj, w), coeff in value.items():
                by_row.setdefault(cj, {})[w] = coeff
            for cj in sorted(by_row):
                poly = pres.poly(by_row[cj])
                entries.append([cj, ci, pres.format_poly(poly)])
        matrices[str(n)] = {"rows": rows, "cols": cols, "entries": entries}
    data = {
        "algebra": pres.name,
        "max_level": res.max_level,
        "max_degree": res.max_degree,
        "chains": {str(n): [pres.format_monomial(c.word)
                            for c in res.levels[n]]
                   for n in range(0, res.max_level + 1)},
        "differentials": matrices,
        "verification": _report_json(report),
    }
    if args.format == "json":
        return data
    lines = [f"resolution of {pres.name}: levels 0..{res.max_level}, "
             f"degree {res.max_degree}"]
    for n in range(1, res.max_level + 1):
        lines.append(f"d_{n}:")
        block = matrices[str(n)]
        for cj, ci, poly in block["entries"]:
            lines.append(f"  {block['cols'][ci]} (x) 1  ->  "
                         f"[{block['rows'][cj]}] (x) ({poly})")
    v = data["verification"]
    lines.append(f"d.d = 0: {v['dd_zero']['ok']}   "
                 f"splitting: {v['splitting']['ok']}   "
                 f"Euler to degree {v['euler']['degree']}: {v['euler']['ok']}   "
                 f"exactness to degree {v['exactness']['degree']}: "
                 f"{v['exactness']['ok']}")
    return "\n".join(lines)


def cmd_tor(pres, args):
    require_noncommutative(pres, "tor")
    res = _build_resolution(pres, args, args.max_level + 1)
    table = tor_dimensions(res)
    minimal, witness = is_minimal(res)
    data = {
        "algebra": pres.name,
        "max_level": args.max_level,
        "max_degree": res.max_degree,
        "minimal": minimal,
        "witness": None if witness is None else {
            "level": witness[0],
            "row": pres.format_monomial(witness[1]),
            "col": pres.format_monomial(witness[2]),
        },
        "tor": {str(n): {str(d): v for d, v in sorted(table[n].items())}
                for n in sorted(table)},
        "totals": {str(n): sum(table[n].values()) for n in sorted(table)},
    }
    if args.format == "json":
        return data
    lines = [f"Tor of {pres.name} through level {args.max_level}"]
    for n in sorted(table):
        row = ", ".join(f"degree {d}: {v}"
                        for d, v in sorted(table[n].items())) or "0"
        lines.append(f"  level {n}: total {sum(table[n].values())}  ({row})")
    if minimal:
        lines.append("resolution is minimal across the built levels")
    else:
        w = data["witness"]
        lines.append(f"not minimal: d_{w['level']} sends {w['col']} (x) 1 to "
                     f"a scalar multiple of {w['row']} (x) 1")
    return "\n".join(lines)


COMMANDS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "chains": cmd_chains,
    "hilbert": cmd_hilbert,
    "anick": cmd_anick,
    "tor": cmd_tor,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        check_args(args)
        pres = load_presentation(args)
        result = COMMANDS[args.command](pres, args)
    except ParseError as exc:
        print(f"anick: {exc}", file=sys.stderr)
        return 2
    except BoundError as exc:
        print(f"anick: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - uniform exit-code contract
        print(f"anick: internal error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        print(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
