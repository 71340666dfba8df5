"""Command-line front end.

    paleyclique field --q 29
    paleyclique construct --q 31 --which aq0
    paleyclique map --q 29 --map phi --source q0
    paleyclique verify --q-range 3..31
    paleyclique census --q 25

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import product

from . import census as cz
from . import moebius as mb
from .checks import run_checks
from .constructions import SELECTORS, all_constructions, r, target_size
from .errors import BudgetExhausted, NotAnOddPrimePower, PaleyError
from .gf_base import odd_prime_power
from .gf_ext import ExtElement, ExtField
from .paley import paley_graph
from .records import OutputRecord, display_key, encode_set
from .textio import format_element, parse_element

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 600.0
UNGATED_MAX_Q = 31


class UsageError(Exception):
    pass


# -- display helpers ----------------------------------------------------------

def _pm_groups(E: ExtField, elements) -> list[str]:
    """Group a set into table-style ``±`` terms; prime fields only."""
    F = E.base
    left = sorted(set(elements), key=display_key)
    pool = set(left)
    out = []

    def fmt(x, y, sx="", sy=""):
        xs = F.symmetric(x)
        ys = F.symmetric(y)
        xpart = ""
        if x:
            xpart = f"±{abs(xs)}" if sx else str(xs)
        if not y:
            return xpart or "0"
        if sy:
            coef = "" if abs(ys) == 1 else f"{abs(ys)}*"
            return f"{xpart}±{coef}a"
        coef = {1: "", -1: "-"}.get(ys, f"{ys}*")
        ypart = f"{coef}a"
        if xpart and not ypart.startswith("-"):
            ypart = "+" + ypart
        return xpart + ypart

    for g in left:
        if g not in pool:
            continue
        x, y = g.x, g.y
        nx, ny = F.neg(x), F.neg(y)
        quad = {E.element(a, b) for a in (x, nx) for b in (y, ny)}
        if x and y and quad <= pool:
            pool -= quad
            out.append(fmt(x if F.symmetric(x) > 0 else nx, y if F.symmetric(y) > 0 else ny, "±", "±"))
            continue
        yflip = E.element(x, ny)
        xflip = E.element(nx, y)
        if y and yflip in pool:
            pool -= {g, yflip}
            out.append(fmt(x, y if F.symmetric(y) > 0 else ny, "", "±"))
        elif x and xflip in pool:
            pool -= {g, xflip}
            out.append(fmt(x if F.symmetric(x) > 0 else nx, y, "±", ""))
        else:
            pool.discard(g)
            out.append(format_element(g))
    return out


def format_set(E: ExtField, elements) -> str:
    if E.e == 1:
        items = _pm_groups(E, elements)
    else:
        items = [format_element(g) for g in sorted(elements, key=display_key)]
    return "{" + ", ".join(items) + "}"


def parse_table_set(E: ExtField, text: str) -> set[ExtElement]:
    """Inverse of :func:`format_set`: ``±`` terms expand to every sign choice."""
    out = set()
    for term in text.strip().strip("{}").split(","):
        term = term.strip()
        if not term:
            continue
        n = term.count("±")
        for signs in product("+-", repeat=n):
            t = term
            for sgn in signs:
                t = t.replace("±", sgn, 1)
            out.add(parse_element(E, t))
    return out


def _emit(args, record: OutputRecord, table: str):
    if args.format == "structured":
        sys.stdout.write(record.to_json())
    else:
        sys.stdout.write(table if table.endswith("\n") else table + "\n")


def _field_from_args(args) -> ExtField:
    G = paley_graph(args.q, args.d)
    return G.field


def _header(E: ExtField) -> str:
    return f"# q={E.q} p={E.p} e={E.e} d={E.d} r(q)={r(E.q)} target_size={target_size(E.q)}"


# -- commands -----------------------------------------------------------------

def cmd_field(args) -> int:
    E = _field_from_args(args)
    F = E.base
    n_sq_base = sum(1 for a in F.units() if F.is_square(a))
    n_sq_ext = sum(E.square_bitmap)
    C = E.circle_subgroups()
    payload = {
        "generator": F.generator,
        "generator_digits": list(F.digits(F.generator)),
        "omega": [E.omega.x, E.omega.y],
        "r": r(E.q),
        "target_size": target_size(E.q),
        "base_squares": n_sq_base,
        "ext_squares": n_sq_ext,
        "circle_size": len(C.Q),
        "q0_size": len(C.Q0),
        "alpha_is_square": E.is_square(E.alpha),
        "minus_one_square_in_base": F.is_square(F.neg(1)),
    }
    lines = [
        f"q = {E.q} = {E.p}^{E.e}",
        f"irreducible (low degree first) = {list(F.modulus)}",
        f"generator of GF(q)* = {F.generator} (digits {list(F.digits(F.generator))})",
        f"d = {E.d}",
        f"beta = {format_element(E.beta)}",
        f"omega = beta^(q-1) = {format_element(E.omega)}",
        f"r(q) = {r(E.q)}, target size (q+r(q))/2 = {target_size(E.q)}",
        f"squares in GF(q)*: {n_sq_base}; in GF(q^2)*: {n_sq_ext}",
        f"|Q| = {len(C.Q)}, |Q0| = {len(C.Q0)}; alpha is a square: {payload['alpha_is_square']}",
    ]
    _emit(args, OutputRecord.for_field(E, "field", payload), "\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    G = paley_graph(args.q, args.d)
    E = G.field
    res = all_constructions(G)[SELECTORS[args.which]]
    vs = res.set
    cert = None if vs.certificate is None else format_element(vs.certificate)
    payload = {
        "which": args.which,
        "id": res.id,
        "kind": vs.kind.value,
        "size": len(vs),
        "expected_size": res.expected_size,
        "maximal": vs.maximal,
        "certificate": cert,
        "set": encode_set(vs.elements),
    }
    table = "\n".join([
        _header(E),
        f"# {res.id}: {vs.kind.value}, size {len(vs)}, maximal {'yes' if vs.maximal else 'no (extends by ' + str(cert) + ')'}",
        format_set(E, vs.elements),
    ])
    _emit(args, OutputRecord.for_field(E, "construct", payload), table)
    return EXIT_OK


def _map_source(E: ExtField, G, selector: str):
    base, _, extra = selector.partition("+")
    if base not in SELECTORS and base not in ("q0", "q1", "aq0", "aq1"):
        raise UsageError(f"unknown --source {selector!r}")
    C = E.circle_subgroups()
    raw = {
        "q0": C.Q0,
        "q1": C.Q1,
        "aq0": frozenset(E.alpha * g for g in C.Q0),
        "aq1": frozenset(E.alpha * g for g in C.Q1),
    }
    if base in raw:
        S = set(raw[base])
    else:
        S = set(all_constructions(G)[SELECTORS[base]].elements)
    if extra:
        S |= {parse_element(E, t) for t in extra.split("+") if t}
    return S


def map_rows(E: ExtField, which: str, source) -> list[tuple[ExtElement, ExtElement]]:
    """(preimage, image) rows in display order: along the image line, descending."""
    f = mb.phi if which == "phi" else mb.psi
    F = E.base
    rows = [(g, f(g)) for g in source]

    def key(row):
        h = row[1]
        if F.e == 1:
            x, y = F.symmetric(h.x), F.symmetric(h.y)
        else:
            x, y = h.x, h.y
        return (-y, -x) if which == "phi" else (-x, -y)

    return sorted(rows, key=key)


def cmd_map(args) -> int:
    G = paley_graph(args.q, args.d)
    E = G.field
    rows = map_rows(E, args.map, _map_source(E, G, args.source))
    payload = {
        "map": args.map,
        "source": args.source,
        "rows": [
            {"preimage": [g.x, g.y], "image": [h.x, h.y], "display": [format_element(g), format_element(h)]}
            for g, h in rows
        ],
    }
    name = "phi" if args.map == "phi" else "psi"
    width = max([len(format_element(g)) for g, _ in rows] + [len(args.source)])
    lines = [_header(E), f"{args.source:<{width}} | {name}({args.source})"]
    lines += [f"{format_element(g):<{width}} | {format_element(h)}" for g, h in rows]
    _emit(args, OutputRecord.for_field(E, "map", payload), "\n".join(lines))
    return EXIT_OK


def _parse_q_list(args) -> list[int]:
    if args.q is not None:
        odd_prime_power(args.q)
        return [args.q]
    try:
        lo, hi = (int(x) for x in args.q_range.split(".."))
    except ValueError:
        raise UsageError(f"--q-range must look like A..B, got {args.q_range!r}")
    out = []
    for q in range(lo, hi + 1):
        try:
            odd_prime_power(q)
        except NotAnOddPrimePower:
            continue
        out.append(q)
    if not out:
        raise UsageError(f"no odd prime power in {args.q_range}")
    return out


def cmd_verify(args) -> int:
    qs = _parse_q_list(args)
    if args.d is not None and len(qs) > 1:
        raise UsageError("--d only makes sense with a single --q")
    ok = True
    per_q = []
    lines = []
    for q in qs:
        t0 = time.perf_counter()
        results = run_checks(q, args.d, seed=args.seed)
        passed = all(c.passed for c in results)
        ok &= passed
        lines.append(f"== q={q}: {'PASS' if passed else 'FAIL'} ({len(results)} checks, {time.perf_counter() - t0:.2f}s)")
        lines += ["  " + c.line() for c in results]
        per_q.append({"q": q, "passed": passed, "checks": [
            {"name": c.name, "passed": c.passed, "witness": c.witness} for c in results]})
    E = paley_graph(qs[0], args.d).field
    rec = OutputRecord.for_field(E, "verify", {"all_passed": ok, "results": per_q})
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_census(args) -> int:
    G = paley_graph(args.q, args.d)
    E = G.field
    budget = args.budget
    if budget is None:
        if E.q > UNGATED_MAX_Q:
            raise UsageError(f"census for q > {UNGATED_MAX_Q} needs an explicit --budget")
        budget = DEFAULT_BUDGET
    cache_dir = args.cache_dir or cz.default_cache_dir()
    path = cz.cache_path(cache_dir, E.q, E.d)
    res = None
    if not args.refresh:
        try:
            res = cz.read_cache(path)
        except (ValueError, KeyError, TypeError) as exc:
            print(f"census q={E.q}: ignoring unreadable cache {path.name} ({exc})", file=sys.stderr)
    source = "cache"
    if res is None:
        source = "computed"
        try:
            res = cz.classify(G, budget=budget, jobs=args.jobs)
        except BudgetExhausted as exc:
            print(f"census q={E.q}: {exc} after {budget:g}s; nothing cached", file=sys.stderr)
            return EXIT_BUDGET
        cz.write_cache(path, res, E)
    doc = cz.result_to_dict(res, E)
    doc["cache_file"] = path.name
    lines = [
        f"# q={res.q} d={res.d} target_size={res.target_size} cliques_through_arc={res.clique_count} "
        f"orbits={res.orbit_count} ({source})"
    ]
    for k, o in enumerate(res.orbits):
        rep = [E.from_index(i) for i in o.representative]
        lines.append(f"orbit {k}: tags={','.join(o.tags)} cliques_through_arc={o.cliques_through_arc}")
        lines.append("  " + format_set(E, rep))
    _emit(args, OutputRecord.for_field(E, "census", doc), "\n".join(lines))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, default=None, help="non-square d with alpha^2 = d (default: smallest)")
    common.add_argument("--format", choices=("table", "structured"), default="table")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = argparse.ArgumentParser(prog="paleyclique", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field", parents=[common], help="field parameters and canonical choices")
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_field)

    s = sub.add_parser("construct", parents=[common], help="emit one of the four constructions")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--which", choices=sorted(SELECTORS), required=True)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("map", parents=[common], help="tabulate phi or psi on a source set")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--map", choices=("phi", "psi"), required=True)
    s.add_argument("--source", required=True, help="q0, q1, aq0, aq1, c1, c2, optionally '+0' etc.")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--q", type=int)
    g.add_argument("--q-range", dest="q_range")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", parents=[common], help="classify maximal cliques of the target size")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--budget", type=float, default=None, help="seconds (required for q > 31)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--refresh", action="store_true", help="ignore any cached result")
    s.add_argument("--cache-dir", dest="cache_dir", default=None, help="default: $CACHE_DIR")
    s.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PaleyError) as exc:
        print(f"paleyclique {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
