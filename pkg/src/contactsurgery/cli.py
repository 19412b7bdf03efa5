"""Command line driver tying the pipeline together.

Subcommands: convert, report, sweep, obstruction, witness, normalize, cf.
Every numeric value is exact; --json emits a canonical machine-readable
document (rationals as "p/q" strings, stable key order, byte-identical
for identical inputs), the default is a short human listing.

Exit codes: 0 success, 2 invalid input, 3 internal cross-check failure.
A 3 means two routes to the same quantity disagreed, which is a bug
detector, never a mathematical outcome.

Note on negative arguments: values starting with a dash must be passed
in --flag=value form (e.g. --r=-4/3), since "-4/3" alone parses as an
option string.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .contfrac import NegContinuedFraction, neg_cf_expand, neg_cf_value, stabilization_counts
from .errors import SearchExhausted
from .gauge import (
    d3_canonical,
    d3_contact,
    degree_representative,
    fillability_verdict,
    moy_check,
    omega_red_closed,
    omega_red_long,
)
from .homology import (
    check_admissible,
    distinct_witness,
    homology,
    mu_order,
    presentation,
    spinc_offset,
)
from .lattice import nonfillability_obstruction
from .legendrian import ROOT, convert
from .seifert import SeifertInvariants, coefficients_from_seifert, normalize

__all__ = ["build_report", "render_json", "main"]


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_json(document: dict) -> str:
    """Canonical JSON: insertion-ordered keys, rationals as strings."""
    return json.dumps(_jsonable(document), indent=2) + "\n"


def _diagram_summary(coefficient: Fraction, tb: int = -1, rot: int = 0) -> dict:
    diagram = convert(coefficient, tb, rot)
    return {
        "coefficient": coefficient,
        "components": [
            {
                "contact_coefficient": c.contact_coefficient,
                "stabilizations": c.stab_count,
                "parent": "root" if c.parent == ROOT else c.parent,
                "tb": c.tb,
                "rot": c.rot,
            }
            for c in diagram.components
        ],
        "stabilization_counts": list(diagram.stab_counts),
        "choice_count": diagram.choice_count,
    }


def build_report(g: int, n: int, alpha: int, sign: int, r: int) -> dict:
    """Full structure report; raises ConditionViolation on bad input.

    The verdicts section carries the internal cross-checks: the two
    omega_red routes, the gap law, the Smith-normal-form mu order against
    its closed form, and offset/c1 consistency.
    """
    check_admissible(g, n, alpha, sign, r)
    inv = SeifertInvariants(g, n, ((alpha, 1),))
    coefficient = coefficients_from_seifert(inv)[0]
    h = homology(presentation(inv))
    mu = mu_order(inv)
    spinc = spinc_offset(g, n, alpha, sign, r)
    long_form = omega_red_long(g, n, alpha, sign, r)
    closed_form = omega_red_closed(g, n, alpha, sign, r)
    contact = d3_contact(g, n, alpha, sign, r)
    canonical = d3_canonical(g, n, alpha, sign, r)
    verdict = fillability_verdict(g, n, alpha, sign, r)
    moy = moy_check(g, n, alpha, spinc.offset)
    checks = {
        "omega_red_forms_agree": long_form == closed_form,
        "gap_is_2g_plus_1": verdict["gap"] == 2 * g + 1,
        "mu_order_matches_closed_form": mu == n * alpha + 1,
        "c1_consistent_with_offset": (
            spinc.c1_coefficient is None
            or (alpha + 2 + 2 * spinc.offset - spinc.c1_coefficient) % spinc.modulus == 0
        ),
    }
    return {
        "input": {
            "g": g,
            "n": n,
            "alpha": alpha,
            "sign": "+" if sign == 1 else "-",
            "r": r,
        },
        "diagram": _diagram_summary(coefficient),
        "homology": {
            "free_rank": h.free_rank,
            "torsion": list(h.torsion),
            "mu_order": mu,
        },
        "spin_c": {
            "offset": spinc.offset,
            "modulus": spinc.modulus,
            "c1_coefficient": spinc.c1_coefficient,
            "c1_order": None if spinc.c1_coefficient is None else spinc.c1_order,
        },
        "invariants": {
            "omega_red_long": long_form,
            "omega_red_closed": closed_form,
            "d3_contact": contact.value,
            "d3_canonical": canonical.value,
            "gap": verdict["gap"],
            "degree_representative": degree_representative(g, n, alpha, spinc.offset),
            "moy": {
                "reducibles_only": moy.reducibles_only,
                "dirac_kernels_trivial": moy.dirac_kernels_trivial,
                "witness_degrees": list(moy.witness_degrees),
            },
        },
        "verdicts": {
            "tight": verdict["tight"],
            "fillable": verdict["fillable"],
            "checks": checks,
            "all_checks_pass": all(checks.values()),
        },
    }


def run_sweep(
    g_range: tuple[int, int],
    n_span: tuple[int, int],
    alpha_range: tuple[int, int],
    mu_only: bool = False,
) -> dict:
    """Identity-suite sweep; n_span holds offsets added to 2g.

    Checks (per admissible point): the omega_red closed-form identity,
    the gap law, the n = 2g MOY verdict with its sandwich inequality,
    and the mu-order closed form.  Counts are exact; any failure is
    recorded with its coordinates.
    """
    counts = {"omega_identity": 0, "gap_law": 0, "moy": 0, "mu_order": 0}
    failures: list[dict] = []

    def check(kind: str, ok: bool, where: dict) -> None:
        counts[kind] += 1
        if not ok:
            failures.append({"check": kind, **where})

    for g in range(g_range[0], g_range[1] + 1):
        for alpha in range(alpha_range[0], alpha_range[1] + 1):
            inv = SeifertInvariants(g, 2 * g, ((alpha, 1),))
            check(
                "mu_order",
                mu_order(inv) == 2 * g * alpha + 1,
                {"g": g, "alpha": alpha},
            )
            if mu_only:
                continue
            for offset in range(n_span[0], n_span[1] + 1):
                n = 2 * g + offset
                for sign in (1, -1):
                    low = -alpha + 1 if sign == 1 else -alpha
                    high = alpha if sign == 1 else alpha - 1
                    for r in range(low, high + 1):
                        if (r - alpha) % 2 != 0:
                            continue
                        where = {"g": g, "n": n, "alpha": alpha, "sign": sign, "r": r}
                        long_form = omega_red_long(g, n, alpha, sign, r)
                        closed_form = omega_red_closed(g, n, alpha, sign, r)
                        check("omega_identity", long_form == closed_form, where)
                        gap = (
                            d3_contact(g, n, alpha, sign, r).value
                            - d3_canonical(g, n, alpha, sign, r).value
                        )
                        check("gap_law", gap == 2 * g + 1, where)
                        if n == 2 * g:
                            k = spinc_offset(g, n, alpha, sign, r).offset
                            moy = moy_check(g, n, alpha, k)
                            rep = degree_representative(g, n, alpha, k)
                            deg_k = Fraction((2 * g - 1) * alpha - 1, alpha)
                            sandwich = deg_k < rep < 2 * g + Fraction(1, alpha)
                            check(
                                "moy",
                                moy.reducibles_only
                                and moy.dirac_kernels_trivial
                                and sandwich,
                                where,
                            )
    return {
        "grid": {
            "g": list(g_range),
            "n_span": list(n_span),
            "alpha": list(alpha_range),
            "mu_only": mu_only,
        },
        "checks": counts,
        "failures": failures,
        "all_pass": not failures,
    }


def _parse_range(text: str, g_relative: bool = False) -> tuple:
    """Parse 'a..b' with optional '2g' / '2g+k' terms when g_relative."""

    def term(t: str) -> int:
        t = t.strip()
        if g_relative:
            if t == "2g":
                return 0
            if t.startswith("2g+"):
                return int(t[3:])
        return int(t)

    lo, _, hi = text.partition("..")
    if not _:
        raise ValueError(f"range must look like 'a..b', got {text!r}")
    return term(lo), term(hi)


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.split(","):
        alpha, _, beta = chunk.partition("/")
        if not _:
            raise ValueError(f"pair must look like 'alpha/beta', got {chunk!r}")
        pairs.append((int(alpha), int(beta)))
    return tuple(pairs)


def _print_kv(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _cmd_convert(args) -> int:
    summary = _diagram_summary(Fraction(args.r), args.tb, args.rot)
    if args.json:
        sys.stdout.write(render_json(summary))
        return 0
    lines = [f"contact {summary['coefficient']}-surgery as a (+1)/(-1) chain:"]
    for i, c in enumerate(summary["components"]):
        lines.append(
            f"  #{i} ({'+1' if c['contact_coefficient'] == 1 else '-1'})"
            f" stabilizations={c['stabilizations']} parent={c['parent']}"
            f" tb={c['tb']} rot={c['rot']}"
        )
    lines.append(f"stabilization counts: {summary['stabilization_counts']}")
    lines.append(f"stabilization choices: {summary['choice_count']}")
    _print_kv(lines)
    return 0


def _cmd_report(args) -> int:
    sign = 1 if args.sign == "+" else -1
    report = build_report(args.g, args.n, args.alpha, sign, args.r)
    if args.json:
        sys.stdout.write(render_json(report))
    else:
        inp = report["input"]
        hom = report["homology"]
        spc = report["spin_c"]
        inv = report["invariants"]
        ver = report["verdicts"]
        _print_kv(
            [
                f"input: g={inp['g']} n={inp['n']} alpha={inp['alpha']}"
                f" sign={inp['sign']} r={inp['r']}",
                f"surgery coefficient: {report['diagram']['coefficient']}"
                f" ({len(report['diagram']['components'])} components,"
                f" {report['diagram']['choice_count']} choices)",
                f"homology: free rank {hom['free_rank']},"
                f" torsion {hom['torsion']}, mu order {hom['mu_order']}",
                f"spin_c: offset {spc['offset']} (mod {spc['modulus']}),"
                f" c1 coefficient {spc['c1_coefficient']}, c1 order {spc['c1_order']}",
                f"omega_red: long {inv['omega_red_long']},"
                f" closed {inv['omega_red_closed']}",
                f"d3: contact {inv['d3_contact']}, canonical {inv['d3_canonical']},"
                f" gap {inv['gap']}",
                f"moy: reducibles_only={inv['moy']['reducibles_only']}"
                f" dirac_kernels_trivial={inv['moy']['dirac_kernels_trivial']}",
                f"verdicts: tight={ver['tight']} fillable={ver['fillable']}"
                f" checks={'PASS' if ver['all_checks_pass'] else 'FAIL'}",
            ]
        )
    return 0 if report["verdicts"]["all_checks_pass"] else 3


def _cmd_sweep(args) -> int:
    g_range = _parse_range(args.g_range)
    alpha_range = _parse_range(args.alpha_range)
    n_span = _parse_range(args.n_range, g_relative=True)
    result = run_sweep(g_range, n_span, alpha_range, mu_only=args.mu_only)
    if args.json:
        sys.stdout.write(render_json(result))
    else:
        lines = [
            f"{kind}: {count} checks" for kind, count in result["checks"].items()
        ]
        lines.append(
            "all pass" if result["all_pass"] else f"FAILURES: {result['failures']}"
        )
        _print_kv(lines)
    return 0 if result["all_pass"] else 3


def _cmd_obstruction(args) -> int:
    report = nonfillability_obstruction(args.g)
    if args.json:
        sys.stdout.write(render_json(report))
    else:
        _print_kv(
            [
                f"g={report['g']}: d={report['d']}, lattice rank {report['rank']}"
                f" (q={report['q']})",
                f"embeddable in a diagonal lattice: {report['embeddable']}",
                f"obstruction holds: {report['obstruction_holds']}",
                report["narrative"],
            ]
        )
    return 0


def _cmd_witness(args) -> int:
    witness = distinct_witness(args.g, args.count, max_base=args.max_base)
    document = {
        "g": args.g,
        "count": args.count,
        "alpha": witness.alpha,
        "rotations": list(witness.rotations),
        "orders": list(witness.orders),
    }
    if args.json:
        sys.stdout.write(render_json(document))
    else:
        _print_kv(
            [
                f"alpha = {witness.alpha}",
                f"rotations = {list(witness.rotations)}",
                f"c1 orders = {list(witness.orders)} (pairwise distinct)",
            ]
        )
    return 0


def _cmd_normalize(args) -> int:
    inv = SeifertInvariants(args.g, args.n, _parse_pairs(args.pairs) if args.pairs else ())
    normal = normalize(inv)
    document = {
        "input": {"g": inv.g, "n": inv.n, "pairs": [list(p) for p in inv.pairs]},
        "normal_form": {
            "g": normal.g,
            "n": normal.n,
            "pairs": [list(p) for p in normal.pairs],
        },
        "e_invariant": inv.e_invariant,
    }
    if args.json:
        sys.stdout.write(render_json(document))
    else:
        _print_kv(
            [
                f"normal form: g={normal.g} n={normal.n}"
                f" pairs={[tuple(p) for p in normal.pairs]}",
                f"e invariant: {inv.e_invariant}",
            ]
        )
    return 0


def _cmd_cf(args) -> int:
    if (args.r is None) == (args.entries is None):
        raise ValueError("pass exactly one of --r or --entries")
    if args.r is not None:
        cf = neg_cf_expand(Fraction(args.r))
        document = {
            "coefficient": Fraction(args.r),
            "entries": list(cf.entries),
            "stabilization_counts": stabilization_counts(cf),
        }
        human = [
            f"entries: {list(cf.entries)}",
            f"stabilization counts: {stabilization_counts(cf)}",
        ]
    else:
        tokens = [t.strip() for t in args.entries.split(",")]
        if not all(t.removeprefix("-").isdigit() for t in tokens):
            raise ValueError(
                f"entries must be a comma list of integers, got {args.entries!r}"
            )
        cf = NegContinuedFraction(tuple(int(t) for t in tokens))
        value = neg_cf_value(cf)
        document = {"entries": list(cf.entries), "value": value}
        human = [f"value: {value}"]
    if args.json:
        sys.stdout.write(render_json(document))
    else:
        _print_kv(human)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contactsurgery",
        description=(
            "Exact invariants of contact surgeries on Seifert fibered spaces. "
            "Negative values must use --flag=value form, e.g. --r=-4/3."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="rational contact surgery to a (+1)/(-1) chain")
    p.add_argument("--r", required=True, help="surgery coefficient, e.g. 4/7 or -4/3")
    p.add_argument("--tb", type=int, default=-1, help="root Thurston-Bennequin number")
    p.add_argument("--rot", type=int, default=0, help="root rotation number")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_convert)

    p = sub.add_parser("report", help="full invariant report for one structure")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_report)

    p = sub.add_parser("sweep", help="identity suite over a parameter grid")
    p.add_argument("--g-range", default="1..3")
    p.add_argument(
        "--n-range",
        default="2g..2g+4",
        help="n relative to 2g: terms are 2g, 2g+k, or a bare offset k",
    )
    p.add_argument("--alpha-range", default="1..15")
    p.add_argument("--mu-only", action="store_true", help="check only mu orders")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_sweep)

    p = sub.add_parser("obstruction", help="diagonal lattice non-embedding certificate")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_obstruction)

    p = sub.add_parser("witness", help="alpha certifying pairwise distinct structures")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-base", type=int, default=10000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_witness)

    p = sub.add_parser("normalize", help="Seifert invariants to normal form")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pairs", default="", help="comma list alpha/beta, e.g. 5/12,3/1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_normalize)

    p = sub.add_parser("cf", help="negative continued fraction expand/evaluate")
    p.add_argument("--r", help="rational to expand, e.g. -7/5")
    p.add_argument("--entries", help="comma list to evaluate, e.g. -2,-2,-3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_cf)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, ZeroDivisionError) as error:
        sys.stderr.write(f"error: {error}\n")
        return 2
    except SearchExhausted as error:
        sys.stderr.write(f"error: {error}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
