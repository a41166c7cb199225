"""Command-line driver: gin, strata, revlex-lemma, degeneracy, hilb-info.

Every command prints one JSON report (schema 1) to standard output and, with
--out, writes the identical bytes to a file.  Exit codes: 0 success, 2 for
parse or validation problems, 3 when an internal property check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .families import (
    derive_seed,
    points_hilbert_point,
    random_form,
    random_ideal,
    random_points,
)
from .gin import generic_initial_ideal, index_at_degree, is_borel_fixed
from .grassmann import SchubertIndex, hilbert_point, max_index, pluecker_coordinate
from .groebner import Ideal, initial_ideal
from .hilbert import (
    HilbertPolynomial,
    NotAdmissible,
    binomial_poly,
    gotzmann_number,
    hilbert_polynomial,
    hilbert_polynomial_of_monomial_ideal,
    is_admissible,
    lex_segment_ideal,
    macaulay_rep,
    parse_hilbert_polynomial,
    revlex_lemma_check,
)
from .monideal import MonomialIdeal
from .orders import GrevLex, Lex, MonomialOrder, RingContext, WeightOrder
from .parsing import ParseError, monomial_str, parse_generators, polynomial_str
import random

SCHEMA = 1

PARSE_ERROR = 2
PROPERTY_FAILURE = 3


class CliError(Exception):
    """Validation problem reported to the user with exit code 2."""


def parse_order(text: str, nvars: int) -> MonomialOrder:
    if text == "lex":
        return Lex()
    if text == "grevlex":
        return GrevLex()
    if text.startswith("weight:"):
        try:
            weights = tuple(int(w) for w in text[len("weight:"):].split(","))
        except ValueError:
            raise CliError(f"cannot parse weight vector in {text!r}")
        if len(weights) != nvars:
            raise CliError(f"weight vector needs {nvars} entries, got {len(weights)}")
        return WeightOrder(weights)
    raise CliError(f"unknown order {text!r}; use lex, grevlex or weight:<w0,..,wn>")


def _ideal_from_args(args, nvars: int) -> Ideal:
    if args.ideal and args.file:
        raise CliError("give either --ideal or --file, not both")
    if args.ideal:
        gens = parse_generators(args.ideal, nvars)
    elif args.file:
        gens = []
        text = Path(args.file).read_text()
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                gens.extend(parse_generators(line, nvars))
    else:
        raise CliError("an ideal is required: use --ideal or --file")
    if not gens:
        raise CliError("the ideal has no nonzero generators")
    I = Ideal(gens)
    if not I.homogeneous:
        raise CliError("generators must be homogeneous")
    return I


def _ideal_strings(ctx: RingContext, gens) -> list[str]:
    return [polynomial_str(g, ctx.order) for g in gens]


def _monomial_ideal_strings(ctx: RingContext, M: MonomialIdeal) -> list[str]:
    return [monomial_str(u) for u in M.gens_sorted(ctx.order)]


def _fraction_str(x: Fraction) -> str:
    return str(x)


def run_gin(ctx: RingContext, I: Ideal, trials: int, seed: int, bound: int):
    result = generic_initial_ideal(ctx, I, trials=trials, seed=seed, bound=bound)
    P = hilbert_polynomial(ctx, I)
    borel = is_borel_fixed(ctx, result.gin)
    report = {
        "schema": SCHEMA,
        "command": "gin",
        "n": ctx.n,
        "order": str(ctx.order),
        "seed": seed,
        "trials": trials,
        "ideal": _ideal_strings(ctx, I.generators),
        "gin": _monomial_ideal_strings(ctx, result.gin),
        "index": result.index.as_strings(),
        "certification_degree": result.certification_degree,
        "stable": result.stable,
        "borel_fixed": borel,
        "hilbert_polynomial": str(P),
        "gotzmann": gotzmann_number(P),
        "witness": [[_fraction_str(x) for x in row] for row in result.witness.matrix],
    }
    return report, (0 if borel else PROPERTY_FAILURE)


def run_strata(ctx: RingContext, members, mode: str, seed: int, description: str,
               trials: int = 5, bound: int = 100):
    if not members:
        raise CliError("the family is empty")
    if mode not in ("byGin", "byInitialIdeal"):
        raise CliError(f"unknown stratification mode {mode!r}")
    key = ctx.order.key
    strata: dict = {}
    for member_id, I in enumerate(members):
        if mode == "byGin":
            result = generic_initial_ideal(
                ctx, I, trials=trials, seed=derive_seed(seed, member_id), bound=bound
            )
            ideal, index, m = result.gin, result.index, result.certification_degree
        else:
            ideal = initial_ideal(ctx, I)
            P = hilbert_polynomial(ctx, I)
            m = max(gotzmann_number(P), I.max_degree())
            index = index_at_degree(ctx, ideal, m)
        bucket = strata.setdefault(
            ideal.min_gens,
            {"index": index, "degree": m, "ideal": ideal, "members": []},
        )
        bucket["members"].append(member_id)

    def stratum_rank(entry):
        return (entry["degree"], tuple(key(u) for u in entry["index"].monomials))

    ordered = sorted(strata.values(), key=stratum_rank, reverse=True)
    total = len(members)
    borel_ok = True
    strata_json = []
    for entry in ordered:
        gens = _monomial_ideal_strings(ctx, entry["ideal"])
        if mode == "byGin" and not is_borel_fixed(ctx, entry["ideal"]):
            borel_ok = False
        strata_json.append(
            {
                "index": entry["index"].as_strings(),
                "gin_generators": gens,
                "member_ids": sorted(entry["members"]),
                "count": len(entry["members"]),
            }
        )
    dominant = ordered[0]
    report = {
        "schema": SCHEMA,
        "command": "strata",
        "n": ctx.n,
        "order": str(ctx.order),
        "seed": seed,
        "mode": mode,
        "family": description,
        "family_size": total,
        "strata": strata_json,
        "dominant_index": dominant["index"].as_strings(),
        "dominant_share": _fraction_str(Fraction(len(dominant["members"]), total)),
    }
    covered = sum(s["count"] for s in strata_json)
    ok = borel_ok and covered == total
    return report, (0 if ok else PROPERTY_FAILURE)


def run_revlex_lemma(n: int, m_max: int, l_max: int):
    if n > 4 or m_max > 6:
        raise CliError("enumeration guard: require n <= 4 and m_max <= 6")
    if n < 1 or m_max < 0 or l_max < 0:
        raise CliError("n must be >= 1 and the bounds nonnegative")
    ctx = RingContext(n, GrevLex())
    cases = 0
    counterexamples = []
    for m in range(1, m_max + 1):
        top = ctx.dim(m)
        for count in range(top + 1):
            for l in range(1, l_max + 1):
                report = revlex_lemma_check(ctx, m, count, l)
                cases += 1
                if not report.lemma_consistent:
                    counterexamples.append({"m": m, "count": count, "l": l})
    report = {
        "schema": SCHEMA,
        "command": "revlex-lemma",
        "n": n,
        "m_max": m_max,
        "l_max": l_max,
        "cases": cases,
        "counterexamples": counterexamples,
        "counterexample_count": len(counterexamples),
    }
    return report, (0 if not counterexamples else PROPERTY_FAILURE)


def run_degeneracy(kind: str, n: int, m: int, samples: int, seed: int,
                   d: int | None = None, count: int | None = None, bound: int = 100):
    ctx = RingContext(n, GrevLex())
    if samples < 1:
        raise CliError("need at least one sample")
    if kind == "hypersurface":
        if d is None or d < 1:
            raise CliError("hypersurface kind needs a degree --d >= 1")
        P = binomial_poly(n, n) - binomial_poly(n - d, n)
    elif kind == "points":
        if count is None or count < 1:
            raise CliError("points kind needs --count >= 1")
        P = HilbertPolynomial.constant(count)
    else:
        raise CliError(f"unknown degeneracy kind {kind!r}")
    m0 = gotzmann_number(P)
    value = P(m)
    if value.denominator != 1:
        raise CliError(f"Hilbert polynomial is not integral at m={m}")
    dim_expected = ctx.dim(m) - int(value)
    if dim_expected < 0 or dim_expected > ctx.dim(m):
        raise CliError(f"no subspace of codimension P({m}) in degree {m}")
    alpha_star = max_index(ctx, m, dim_expected)
    nonconstant = not P.is_zero() and P.degree >= 1
    applicable = nonconstant and m > m0

    explicit = None
    if kind == "hypersurface" and m == d + 1:
        free = [u for u in ctx.monomials(m) if u[ctx.n] == 0]
        if len(free) >= dim_expected:
            explicit = SchubertIndex(tuple(free[:dim_expected]))

    vanished = 0
    witness = None
    explicit_vanished = 0
    for s in range(samples):
        rng = random.Random(derive_seed(seed, s))
        if kind == "hypersurface":
            f = random_form(ctx, d, rng, bound)
            F = hilbert_point(ctx, Ideal([f]), m)
        else:
            pts = random_points(ctx, count, rng, bound)
            F = points_hilbert_point(ctx, pts, m)
        if F.d != dim_expected:
            raise CliError(f"sample {s} has unexpected dimension {F.d} != {dim_expected}")
        p_star = pluecker_coordinate(F, alpha_star)
        if p_star == 0:
            vanished += 1
        elif witness is None:
            witness = s
        if explicit is not None and pluecker_coordinate(F, explicit) == 0:
            explicit_vanished += 1
    all_vanished = vanished == samples
    report = {
        "schema": SCHEMA,
        "command": "degeneracy",
        "kind": kind,
        "n": n,
        "m": m,
        "seed": seed,
        "samples": samples,
        "hilbert_polynomial": str(P),
        "gotzmann": m0,
        "theorem_applicable": applicable,
        "subspace_dimension": dim_expected,
        "alpha_star": [monomial_str(u) for u in alpha_star.monomials],
        "vanished_count": vanished,
        "all_vanished": all_vanished,
        "witness": witness,
    }
    if kind == "hypersurface":
        report["d"] = d
        if explicit is not None:
            report["explicit_index"] = explicit.as_strings()
            report["explicit_all_vanished"] = explicit_vanished == samples
    if kind == "points":
        report["count"] = count
    if not applicable:
        report["note"] = (
            "theorem hypothesis excluded (constant Hilbert polynomial or m <= Gotzmann); "
            "observed vanishing pattern recorded without a verdict"
        )
    return report, 0


def run_hilb_info(ctx: RingContext, P: HilbertPolynomial, text: str):
    admissible = is_admissible(P)
    report = {
        "schema": SCHEMA,
        "command": "hilb-info",
        "n": ctx.n,
        "input": text,
        "polynomial": str(P),
        "admissible": admissible,
    }
    if not admissible:
        return report, 0
    rep = macaulay_rep(P)
    report["gotzmann"] = rep.gotzmann
    report["macaulay_rep"] = str(rep)
    report["macaulay_exponents"] = list(rep.a)
    try:
        L = lex_segment_ideal(ctx, P)
    except ValueError as exc:
        raise CliError(str(exc))
    M = MonomialIdeal.make(
        ctx.nvars, [g.leading(ctx.order)[0] for g in L.generators]
    )
    round_trip = hilbert_polynomial_of_monomial_ideal(ctx, M) == P
    report["lex_ideal"] = _monomial_ideal_strings(ctx, M)
    report["round_trip_verified"] = round_trip
    return report, (0 if round_trip else PROPERTY_FAILURE)


def _parse_members(ctx: RingContext, args) -> tuple[list[Ideal], str]:
    sources = [bool(args.members), bool(args.members_file), bool(args.family)]
    if sum(sources) != 1:
        raise CliError("give exactly one of --members, --members-file or --family")
    if args.members:
        blocks = [b for b in args.members.split("|") if b.strip()]
        members = [Ideal(parse_generators(b, ctx.nvars)) for b in blocks]
        description = f"inline:{len(members)}"
    elif args.members_file:
        text = Path(args.members_file).read_text()
        blocks, current = [], []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                if current:
                    blocks.append(current)
                    current = []
                continue
            current.append(line)
        if current:
            blocks.append(current)
        members = [
            Ideal([g for chunk in block for g in parse_generators(chunk, ctx.nvars)])
            for block in blocks
        ]
        description = f"file:{args.members_file}"
    else:
        family = args.family
        if not family.startswith("random:"):
            raise CliError("family must look like random:<d1,d2,...>")
        try:
            degrees = [int(x) for x in family[len("random:"):].split(",")]
        except ValueError:
            raise CliError(f"cannot parse degrees in {family!r}")
        if not degrees or any(d < 1 for d in degrees):
            raise CliError("family degrees must be positive")
        if args.samples < 1:
            raise CliError("need at least one family member")
        members = [
            random_ideal(ctx, degrees, random.Random(derive_seed(args.seed, 1, i)), args.bound)
            for i in range(args.samples)
        ]
        description = f"{family}:samples={args.samples}:bound={args.bound}"
    for I in members:
        if I.is_zero():
            raise CliError("a family member has no nonzero generators")
        if not I.homogeneous:
            raise CliError("family members must be homogeneous")
    return members, description


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginlab",
        description="Exact computations with generic initial ideals, Hilbert points and Schubert cells.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_order=True):
        p.add_argument("--n", type=int, required=True, help="ambient projective dimension")
        if needs_order:
            p.add_argument("--order", default="grevlex",
                           help="lex | grevlex | weight:<w0,..,wn>")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="also write the JSON report to this path")

    p = sub.add_parser("gin", help="generic initial ideal of one ideal")
    common(p)
    p.add_argument("--ideal", help="';'-separated generators, e.g. 'x0*x2 - x1^2'")
    p.add_argument("--file", help="file with one polynomial per line, # comments")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--bound", type=int, default=100)

    p = sub.add_parser("strata", help="group a family of ideals by gin or by initial ideal")
    common(p)
    p.add_argument("--mode", default="gin", choices=["gin", "initial"])
    p.add_argument("--members", help="family members separated by '|', generators by ';'")
    p.add_argument("--members-file", help="file with blank-line separated member blocks")
    p.add_argument("--family", help="random family such as random:2,3")
    p.add_argument("--samples", type=int, default=20, help="size of a random family")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--bound", type=int, default=100)

    p = sub.add_parser("revlex-lemma", help="exhaustive segment/codimension check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("degeneracy", help="top Plücker coordinate on sampled families")
    common(p, needs_order=False)
    p.add_argument("--kind", required=True, choices=["hypersurface", "points"])
    p.add_argument("--d", type=int, help="hypersurface degree")
    p.add_argument("--count", type=int, help="number of points")
    p.add_argument("--m", type=int, required=True, help="embedding degree")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--bound", type=int, default=100)

    p = sub.add_parser("hilb-info", help="admissibility and lex ideal of a Hilbert polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True, help="e.g. '2*m + 1' or 'C(m+2,2) - C(m,2)'")
    p.add_argument("--order", default="grevlex")
    p.add_argument("--out")

    return parser


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    print(text)
    if out:
        Path(out).write_text(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gin":
            ctx = RingContext(args.n, parse_order(args.order, args.n + 1))
            I = _ideal_from_args(args, ctx.nvars)
            report, code = run_gin(ctx, I, args.trials, args.seed, args.bound)
        elif args.command == "strata":
            ctx = RingContext(args.n, parse_order(args.order, args.n + 1))
            members, description = _parse_members(ctx, args)
            mode = "byGin" if args.mode == "gin" else "byInitialIdeal"
            report, code = run_strata(
                ctx, members, mode, args.seed, description,
                trials=args.trials, bound=args.bound,
            )
        elif args.command == "revlex-lemma":
            report, code = run_revlex_lemma(args.n, args.m_max, args.l_max)
        elif args.command == "degeneracy":
            report, code = run_degeneracy(
                args.kind, args.n, args.m, args.samples, args.seed,
                d=args.d, count=args.count, bound=args.bound,
            )
        elif args.command == "hilb-info":
            ctx = RingContext(args.n, parse_order(args.order, args.n + 1))
            P = parse_hilbert_polynomial(args.p)
            report, code = run_hilb_info(ctx, P, args.p)
        else:  # pragma: no cover - argparse enforces the choices
            raise CliError(f"unknown command {args.command!r}")
    except (CliError, ParseError, NotAdmissible, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    _emit(report, args.out)
    return code


def entry() -> None:  # console script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
