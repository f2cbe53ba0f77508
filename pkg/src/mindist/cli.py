"""Command-line front end: gb, vanish, table and cartesian pipelines.

Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 search
budget exceeded.  Output is deterministic: identical configuration yields
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cartesian as cart
from .codes import DEFAULT_BUDGET, fp_bound, params_table
from .gf import field_make
from .hilbert import (dim_degree, footprint_slice, hilbert_numerator,
                      regularity_dim0, regularity_points)
from .mpoly import (BudgetExceededError, GrevLex, Ideal, Lex, ParseError,
                    max_variable_index, parse_polynomial)
from .points import (enumerate_space, parse_parameterized_text,
                     parse_points_text, vanishing_ideal_parameterized)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


def _parse_field(text):
    parts = text.split("^")
    try:
        if len(parts) == 1:
            return field_make(int(parts[0]))
        if len(parts) == 2:
            return field_make(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise ValueError(str(exc)) from None
    raise ParseError("--field expects p or p^e, got %r" % text)


def _parse_priority(text, arity):
    try:
        idxs = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError("--priority expects comma-separated indices") from None
    if sorted(idxs) != list(range(1, arity + 1)):
        raise ParseError("--priority must be a permutation of 1..%d" % arity)
    return tuple(i - 1 for i in idxs)


def _make_order(name, priority_text, arity):
    priority = _parse_priority(priority_text, arity) if priority_text else None
    if name == "lex":
        return Lex(arity, priority)
    if name == "grevlex":
        return GrevLex(arity, priority)
    raise ParseError("unknown order %r" % name)


def _read_ideal_file(path, field):
    lines = []
    with open(path) as fh:
        text = fh.read()
    arity = 0
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
        arity = max(arity, max_variable_index(line))
    if not lines:
        raise ParseError("no generators in %s" % path)
    if arity == 0:
        raise ParseError("no variables found in %s" % path)
    gens = [parse_polynomial(line, field, arity) for line in lines]
    return Ideal(field, arity, gens)


def _load_point_set(args, field):
    if getattr(args, "points", None):
        with open(args.points) as fh:
            return parse_points_text(field, fh.read())
    if getattr(args, "param", None):
        with open(args.param) as fh:
            spec = parse_parameterized_text(field, fh.read())
        X, ideal = vanishing_ideal_parameterized(spec)
        X._ideal_cache[GrevLex(X.arity).cache_token()] = ideal
        return X
    if getattr(args, "space", None):
        if not args.arity:
            raise ParseError("--space needs --arity")
        return enumerate_space(args.space, s=args.arity, field=field)
    raise ParseError("no point source given (--points/--param/--space)")


# ---------------------------------------------------------------------------
# commands


def _hilbert_block(gb):
    M = gb.initial_ideal()
    data = dim_degree(M)
    block = {
        "initial_ideal": [str(m) for m in M.gens],
        "hilbert_numerator": list(data.numerator),
        "dim": data.dim,
        "deg": data.degree,
    }
    if data.dim == 0:
        block["reg"] = regularity_dim0(M)
    elif data.dim == 1:
        try:
            block["reg"] = regularity_points(M)
        except ValueError:
            pass
    return block


def cmd_gb(args):
    field = _parse_field(args.field)
    ideal = _read_ideal_file(args.ideal, field)
    order = _make_order(args.order, args.priority, ideal.arity)
    if not ideal.is_homogeneous():
        raise ValueError("generators must be homogeneous for Hilbert data")
    gb = ideal.groebner(order)
    block = _hilbert_block(gb)
    basis = [g.to_str(order) for g in gb.basis]
    if args.json:
        out = {"field": repr(field), "arity": ideal.arity, "order": args.order,
               "basis": basis}
        out.update(block)
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print("# gb over %r, arity %d, order %s" % (field, ideal.arity, args.order))
    print("basis (%d elements):" % len(basis))
    for g in basis:
        print("  %s" % g)
    print("initial ideal: %s" % ", ".join(block["initial_ideal"]))
    print("hilbert numerator: %s" %
          " ".join(str(c) for c in block["hilbert_numerator"]))
    print("dim: %d" % block["dim"])
    print("deg: %d" % block["deg"])
    if "reg" in block:
        print("reg: %d" % block["reg"])
    return EXIT_OK


def cmd_vanish(args):
    field = _parse_field(args.field)
    X = _load_point_set(args, field)
    order = _make_order(args.order, args.priority, X.arity)
    ideal = X.vanishing_ideal(order)
    gb = ideal.groebner(order)
    reg = regularity_points(gb)
    lines = ["# vanishing ideal over %r, arity %d, order %s"
             % (field, X.arity, args.order),
             "# points: %d" % len(X),
             "# deg: %d" % len(X),
             "# reg: %d" % reg]
    lines += [g.to_str(order) for g in gb.basis]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print("wrote %d generators to %s" % (len(gb.basis), args.out))
    else:
        sys.stdout.write(text)
    return EXIT_OK


_TSV_HEADER = "d\tdeg\tH\tdelta\tfp\tsingleton\tmethod\twitness"


def _row_cells(rep, order):
    witness = rep.witness.to_str(order) if rep.witness is not None else "-"
    delta = str(rep.delta) if rep.delta is not None else "-"
    method = rep.method + ("!fd-empty" if rep.fd_empty else "")
    return [str(rep.d), str(rep.length), str(rep.dimension), delta,
            str(rep.fp), str(rep.singleton_upper), method, witness]


def cmd_table(args):
    field = _parse_field(args.field)
    X = _load_point_set(args, field)
    order = _make_order(args.order, args.priority, X.arity)
    gb = X.vanishing_ideal(order).groebner(order)
    dmax = args.dmax if args.dmax else regularity_points(gb)
    rows = params_table(X, dmax, order=order, method=args.method,
                        budget=args.budget, jobs=args.jobs)
    if args.json:
        out = [{"d": r.d, "deg": r.length, "H": r.dimension, "delta": r.delta,
                "fp": r.fp, "singleton": r.singleton_upper, "method": r.method,
                "fd_empty": r.fd_empty,
                "witness": r.witness.to_str(order) if r.witness else None}
               for r in rows]
        print(json.dumps({"rows": out}, indent=2))
        return EXIT_OK
    print(_TSV_HEADER)
    for rep in rows:
        print("\t".join(_row_cells(rep, order)))
    return EXIT_OK


def cmd_cartesian(args):
    field = _parse_field(args.field)
    with open(args.sets) as fh:
        spec = cart.parse_sets_text(field, fh.read())
    report = cart.validate_nested(spec)
    header = ["# cartesian over %r, sizes %s"
              % (field, ",".join(str(d) for d in spec.sizes))]
    if not report.ok:
        for v in report.violations:
            header.append("# violated %s at %r" % (v.condition, list(v.detail)))
        print("\n".join(header))
        raise ValueError("nested-cartesian conditions violated; "
                         "closed forms unavailable")
    ds = spec.sizes
    proven = cart.is_subfield_chain(spec)
    X = spec.points()
    deg = cart.closed_degree(ds)
    reg = cart.closed_reg(ds)
    header.append("# nested: valid; subfield chain: %s" % ("yes" if proven else "no"))
    header.append("# |X|: %d  deg: %d  reg: %d" % (len(X), deg, reg))
    dmax = args.dmax if args.dmax else reg
    rows = []
    for d in range(1, dmax + 1):
        _, value = cart.conjecture_delta(ds, d)
        status = "proven" if proven else "conjectured"
        brute = "-"
        verdict = "skipped"
        if args.check_conjecture:
            try:
                table = params_table(X, d, method="auto", budget=args.budget,
                                     jobs=args.jobs)
                got = table[-1].delta
                brute = str(got)
                verdict = "agree" if got == value else "DISAGREE"
                if got == value and not proven:
                    status = "confirmed"
            except BudgetExceededError:
                pass
        rows.append((d, value, status, brute, verdict))
    if args.json:
        out = {"sizes": list(ds), "points": len(X), "deg": deg, "reg": reg,
               "subfield_chain": proven,
               "rows": [{"d": d, "conjecture": v, "status": st, "brute": br,
                         "verdict": ve} for d, v, st, br, ve in rows]}
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print("\n".join(header))
    print("d\tconjecture\tstatus\tbrute\tverdict")
    for d, value, status, brute, verdict in rows:
        print("%d\t%d\t%s\t%s\t%s" % (d, value, status, brute, verdict))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mindist",
        description="Minimum distance functions of graded ideals and "
                    "Reed-Muller-type evaluation codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, jobs=False):
        p.add_argument("--field", required=True, help="p or p^e")
        p.add_argument("--order", default="grevlex", choices=["lex", "grevlex"])
        p.add_argument("--priority", default=None,
                       help="comma-separated variable indices, least first")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--json", action="store_true")
        if jobs:
            p.add_argument("--jobs", type=int, default=1)

    p_gb = sub.add_parser("gb", help="reduced Groebner basis and Hilbert data")
    common(p_gb)
    p_gb.add_argument("--ideal", required=True, help="ideal file, one polynomial per line")
    p_gb.set_defaults(func=cmd_gb)

    p_van = sub.add_parser("vanish", help="vanishing ideal of a point set")
    common(p_van)
    p_van.add_argument("--points", help="points file")
    p_van.add_argument("--param", help="parameterized spec file (y-monomials)")
    p_van.add_argument("--space", choices=["full", "torus"])
    p_van.add_argument("--arity", type=int)
    p_van.add_argument("--out", help="write the ideal file here")
    p_van.set_defaults(func=cmd_vanish)

    p_tab = sub.add_parser("table", help="basic parameters per degree")
    common(p_tab, jobs=True)
    p_tab.add_argument("--points")
    p_tab.add_argument("--param")
    p_tab.add_argument("--space", choices=["full", "torus"])
    p_tab.add_argument("--arity", type=int)
    p_tab.add_argument("--dmax", type=int, default=0,
                       help="last degree (default: the regularity)")
    p_tab.add_argument("--method", default="auto",
                       choices=["auto", "brute", "degree", "fp", "all"])
    p_tab.set_defaults(func=cmd_table)

    p_cart = sub.add_parser("cartesian", help="nested cartesian closed forms")
    common(p_cart, jobs=True)
    p_cart.add_argument("--sets", required=True, help="one component per line")
    p_cart.add_argument("--dmax", type=int, default=0)
    p_cart.add_argument("--check-conjecture", action="store_true")
    p_cart.set_defaults(func=cmd_cartesian)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print("precondition violated: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
