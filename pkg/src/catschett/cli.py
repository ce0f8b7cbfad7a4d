"""Command-line front end: enumeration, statistics, maps, polynomials, series, checks."""

from __future__ import annotations

import argparse
import json
import sys

from catschett import config
from catschett.bijections import (
    eta,
    eta_inv,
    fz_history,
    fz_history_inv,
    gamma,
    gamma_inv,
    lin_fu_phi,
    lin_fu_phi_inv,
    phi_cap,
    phi_cap_inv,
    psi_cap,
    psi_cap_inv,
    psi_fz,
    psi_fz_inv,
    psi_kratt,
    psi_kratt_inv,
    tau,
    tau_inv,
    theta,
    theta_inv,
    upsilon,
    upsilon_inv,
    varsigma,
    varsigma_inv,
    vartheta,
    vartheta_inv,
)
from catschett.checks import CHECK_NAMES, run_check
from catschett.objects.paths import (
    dyck_paths,
    is_dyck_path,
    laguerre_histories,
    motzkin2_paths,
    parse_laguerre_history,
    parse_walk_pair,
    parse_walk_triple,
    serialize_laguerre_history,
    serialize_walk_pair,
    serialize_walk_triple,
    walk_pairs,
)
from catschett.objects.permutations import (
    avoiders,
    parse_permutation,
    serialize_permutation,
)
from catschett.objects.trees import (
    binary_trees,
    parse_binary_tree,
    parse_plane_tree,
    plane_node_count,
    plane_trees,
    serialize_binary_tree,
    serialize_plane_tree,
)
from catschett.schett import catalan_schett
from catschett.serieslab import families
from catschett.statistics import (
    dyck_profile,
    mark_count,
    permutation_profile,
    tree_chain_profile,
)

_PATTERNS = ("123", "132", "213", "231", "312", "321")

_FAMILIES = ("avoiders", "btree", "ptree", "dyck", "motzkin2", "walkpair", "laguerre")

_SERIES = ("G", "EE", "EO", "OE", "OO", "M", "LE", "LO", "E", "O", "A", "B")


def _bounded_size(n: int) -> int:
    bound = config.enumeration_bound()
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    if n > bound:
        raise ValueError(f"size {n} exceeds the configured enumeration bound {bound}")
    return n


def _enumerate_lines(family: str, n: int, pattern: tuple[int, ...]) -> list[str]:
    if family == "avoiders":
        return [serialize_permutation(p) for p in sorted(avoiders(n, pattern))]
    if family == "btree":
        return sorted(serialize_binary_tree(t) for t in binary_trees(n))
    if family == "ptree":
        return sorted(serialize_plane_tree(t) for t in plane_trees(n))
    if family == "dyck":
        return sorted(dyck_paths(n))
    if family == "motzkin2":
        return sorted(motzkin2_paths(n))
    if family == "walkpair":
        return sorted(serialize_walk_pair(pair) for pair in walk_pairs(n))
    return sorted(serialize_laguerre_history(h) for h in laguerre_histories(n))


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = _bounded_size(args.n)
    pattern = None
    if args.family == "avoiders":
        pattern = tuple(int(ch) for ch in args.pattern)
    elif args.pattern != "231":
        raise ValueError("--pattern applies only to the avoiders family")
    for line in _enumerate_lines(args.family, n, pattern):
        print(line)
    return 0


def _stats_record(line: str) -> dict:
    s = line.strip()
    if s == "" or s[0].isdigit():
        return permutation_profile(parse_permutation(s))
    if set(s) <= {"E", "N"}:
        if not is_dyck_path(s):
            raise ValueError(f"not a balanced east-north word: {s!r}")
        return dyck_profile(s)
    if s == "." or (s.startswith("(") and "." in s):
        return tree_chain_profile(parse_binary_tree(s))
    if s.startswith("("):
        t = parse_plane_tree(s)
        return {"nodes": plane_node_count(t), "edges": plane_node_count(t) - 1,
                "marks": mark_count(t)}
    raise ValueError(f"unrecognized object at column 0: {line!r}")


def cmd_stats(args: argparse.Namespace) -> int:
    for raw in sys.stdin:
        print(json.dumps(_stats_record(raw.rstrip("\n"))))
    return 0


def _as_str(x: str) -> str:
    return x


_MAP_TABLE = {
    # name: (parse domain, forward, render image, parse image, inverse, render domain)
    "upsilon": (parse_permutation, upsilon, serialize_binary_tree,
                parse_binary_tree, upsilon_inv, serialize_permutation),
    "theta": (parse_permutation, theta, serialize_walk_pair,
              parse_walk_pair, theta_inv, serialize_permutation),
    "tau": (parse_binary_tree, tau, _as_str,
            _as_str, tau_inv, serialize_binary_tree),
    "psi": (parse_permutation, psi_kratt, _as_str,
            _as_str, psi_kratt_inv, serialize_permutation),
    "phi": (parse_permutation, lin_fu_phi, _as_str,
            _as_str, lin_fu_phi_inv, serialize_permutation),
    "varsigma": (_as_str, varsigma, serialize_walk_pair,
                 parse_walk_pair, varsigma_inv, _as_str),
    "Phi": (parse_permutation, phi_cap, serialize_walk_pair,
            parse_walk_pair, phi_cap_inv, serialize_permutation),
    "eta": (parse_permutation, eta, serialize_permutation,
            parse_permutation, eta_inv, serialize_permutation),
    "psifz": (parse_permutation, psi_fz, serialize_permutation,
              parse_permutation, psi_fz_inv, serialize_permutation),
    "Psi": (parse_permutation, psi_cap, serialize_permutation,
            parse_permutation, psi_cap_inv, serialize_permutation),
    "vartheta": (parse_plane_tree, vartheta, serialize_permutation,
                 parse_permutation, vartheta_inv, serialize_plane_tree),
    "gamma": (parse_permutation, gamma, serialize_walk_triple,
              parse_walk_triple, gamma_inv, serialize_permutation),
    "fz": (parse_permutation, fz_history, serialize_laguerre_history,
           parse_laguerre_history, lambda h: fz_history_inv(h[0], h[1]),
           serialize_permutation),
}

_MAP_ALIASES = {
    "υ": "upsilon", "θ": "theta", "τ": "tau", "ψ": "psi", "φ": "phi",
    "ς": "varsigma", "Φ": "Phi", "η": "eta", "ψfz": "psifz", "Ψ": "Psi",
    "ϑ": "vartheta", "γ": "gamma",
}

MAP_NAMES = tuple(_MAP_TABLE) + tuple(_MAP_ALIASES)


def cmd_map(args: argparse.Namespace) -> int:
    name = _MAP_ALIASES.get(args.name, args.name)
    parse_in, forward, render_out, parse_out, backward, render_in = _MAP_TABLE[name]
    if args.dir == "fwd":
        parse, apply_fn, render = parse_in, forward, render_out
    else:
        parse, apply_fn, render = parse_out, backward, render_in
    for raw in sys.stdin:
        print(render(apply_fn(parse(raw.rstrip("\n")))))
    return 0


def _poly_text(poly) -> str:
    terms = sorted(poly.sorted_terms(), key=lambda t: (-(t[0] + t[1]), -t[0]))
    if not terms:
        return "0"
    parts: list[str] = []
    for a, b, c in terms:
        factors: list[str] = []
        if a == 1:
            factors.append("x")
        elif a != 0:
            factors.append(f"x^{a}")
        if b == 1:
            factors.append("y")
        elif b != 0:
            factors.append(f"y^{b}")
        if abs(c) != 1 or not factors:
            factors.insert(0, str(abs(c)))
        mono = "*".join(factors)
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
    return " ".join(parts)


def cmd_schett(args: argparse.Namespace) -> int:
    n = _bounded_size(args.n)
    routes = ("trees", "perm231", "perm321") if args.route == "all" else (args.route,)
    polys = {route: catalan_schett(n, route) for route in routes}
    if args.format == "json":
        body = {"n": n,
                "routes": {route: [list(t) for t in poly.sorted_terms()]
                           for route, poly in polys.items()}}
        print(json.dumps(body, indent=2))
    else:
        for route, poly in polys.items():
            print(f"{route}: {_poly_text(poly)}")
    return 0


def _compute_series(name: str, order: int):
    if name == "G":
        return families.compute_G(order)
    if name in ("EE", "EO", "OE", "OO"):
        block = families.compute_EE_EO_OE_OO(order)
        return block[("EE", "EO", "OE", "OO").index(name)]
    if name == "M":
        return families.compute_M(order)
    if name in ("LE", "LO", "E", "O"):
        block = families.compute_LE_LO_E_O(order)
        return block[("LE", "LO", "E", "O").index(name)]
    if name == "A":
        return families.compute_A(order)
    return families.compute_B(order)


def _emit_mna_table(nmax: int, fmt: str) -> None:
    rows = families.mna_distribution(nmax)
    kmax = max((k for row in rows.values() for k in row), default=0)
    if fmt == "json":
        body = {"table": "mna", "nmax": nmax,
                "rows": {str(n): {str(k): rows[n].get(k, 0) for k in range(kmax + 1)}
                         for n in sorted(rows)}}
        print(json.dumps(body, indent=2))
        return
    if fmt == "csv":
        print("n," + ",".join(str(k) for k in range(kmax + 1)))
        for n in sorted(rows):
            print(f"{n}," + ",".join(str(rows[n].get(k, 0)) for k in range(kmax + 1)))
        return
    header = "n " + " ".join(f"{k:>8d}" for k in range(kmax + 1))
    print(header)
    for n in sorted(rows):
        print(f"{n} " + " ".join(f"{rows[n].get(k, 0):>8d}" for k in range(kmax + 1)))


def cmd_series(args: argparse.Namespace) -> int:
    if args.table is not None:
        _emit_mna_table(_bounded_size(args.n), args.format)
        return 0
    if args.name is None:
        raise ValueError("choose a series name or --table mna")
    if args.order < 0:
        raise ValueError(f"order must be nonnegative, got {args.order}")
    series = _compute_series(args.name, args.order)
    if args.format == "json":
        body = {"series": args.name, "order": series.order,
                "coefficients": {f"t^{k}": [list(t) for t in series.coefficient(k).sorted_terms()]
                                 for k in range(1, series.order + 1)}}
        print(json.dumps(body, indent=2))
    elif args.format == "csv":
        print("t,x,y,coeff")
        for k in range(1, series.order + 1):
            for a, b, c in series.coefficient(k).sorted_terms():
                print(f"{k},{a},{b},{c}")
    else:
        for k in range(1, series.order + 1):
            print(f"[t^{k}] {_poly_text(series.coefficient(k))}")
    return 0


def _print_report(result, prefix: str = "") -> None:
    status = "PASS" if result.passed else "FAIL"
    ptxt = " ".join(f"{k}={v}" for k, v in sorted(result.params.items()))
    suffix = f" ({ptxt})" if ptxt else ""
    print(f"{prefix}{status} {result.check}{suffix}: {result.detail} "
          f"[{result.wall_time_ms:.1f} ms]")
    if result.readings:
        for row in result.readings:
            if row["pass"]:
                print(f"{prefix}  reading {row['reading']}: pass")
            else:
                ff = row["first_failure"]
                print(f"{prefix}  reading {row['reading']}: fails {ff['equation']} at "
                      f"t^{ff['t_order']} {ff['monomial']} (lhs {ff['lhs']}, rhs {ff['rhs']})")
    if result.counterexample is not None:
        print(f"{prefix}  counterexample: {result.counterexample}")
    if result.subresults is not None:
        for sub in result.subresults:
            _print_report(sub, prefix + "  ")


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(args.checks) + list(args.check or [])
    if not names:
        raise ValueError("choose at least one check (or 'all')")
    for name in names:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check: {name!r} (see 'catschett verify --list')")
    results = [run_check(name, n=args.n, order=args.order, jobs=args.jobs)
               for name in names]
    if args.format == "json":
        body = [r.to_json() for r in results]
        print(json.dumps(body[0] if len(body) == 1 else body, indent=2))
    else:
        for r in results:
            _print_report(r)
    return 0 if all(r.passed for r in results) else 1


def cmd_verify_list(args: argparse.Namespace) -> int:
    for name in CHECK_NAMES:
        print(name)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catschett",
        description="Exact enumeration, statistics, and verification for "
                    "pattern-restricted permutations and Catalan-Schett polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list a combinatorial family, one object per line")
    p_enum.add_argument("family", choices=_FAMILIES)
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--pattern", choices=_PATTERNS, default="231",
                        help="pattern for the avoiders family (default 231)")
    p_enum.set_defaults(func=cmd_enumerate)

    p_stats = sub.add_parser("stats", help="read objects on stdin, emit JSON statistics records")
    p_stats.set_defaults(func=cmd_stats)

    p_map = sub.add_parser("map", help="apply a named bijection to objects on stdin")
    p_map.add_argument("name", choices=MAP_NAMES, metavar="name",
                       help="one of: " + ", ".join(_MAP_TABLE))
    p_map.add_argument("--dir", choices=("fwd", "inv"), default="fwd")
    p_map.set_defaults(func=cmd_map)

    p_schett = sub.add_parser("schett", help="print a Catalan-Schett polynomial")
    p_schett.add_argument("n", type=int)
    p_schett.add_argument("--route", choices=("trees", "perm231", "perm321", "all"),
                          default="trees")
    p_schett.add_argument("--format", choices=("text", "json"), default="text")
    p_schett.set_defaults(func=cmd_schett)

    p_series = sub.add_parser("series", help="print a truncated generating series or table")
    p_series.add_argument("name", nargs="?", choices=_SERIES)
    p_series.add_argument("--order", type=int, default=8)
    p_series.add_argument("--table", choices=("mna",),
                          help="print a distribution table instead of a series")
    p_series.add_argument("--n", type=int, default=12,
                          help="largest size for --table output")
    p_series.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="run named checks and report")
    p_verify.add_argument("checks", nargs="*", metavar="check",
                          help="check names; see 'catschett verify --list'")
    p_verify.add_argument("--check", action="append", metavar="name",
                          help="additional check name (repeatable)")
    p_verify.add_argument("--list", action="store_true", dest="list_checks",
                          help="list the known check names and exit")
    p_verify.add_argument("--n", type=int, help="override the size bound")
    p_verify.add_argument("--order", type=int, help="override the series truncation order")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--jobs", type=int, help="worker processes for 'all'")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list_checks:
        return cmd_verify_list(args)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
