"""``ranklab`` command line."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Dict, List, Optional

from . import finite as fin_mod
from .errors import (
    FamilySyntaxError,
    OrdinalSyntaxError,
    RanklabError,
    SentenceSyntaxError,
)
from .logic import format_sentence, parse_sentence
from .ordinals import parse_ordinal
from .symbolic import (
    ContinuumKernel,
    accumulation_points,
    build_tower,
    cardinality,
    closure,
    count_generic,
    count_nongeneric,
    format_family,
    format_point,
    generic_theories,
    is_e_closed,
    is_generic_sentence,
    is_p_complete,
    isolating_sentence,
    least_generating_set,
    parse_family,
    pt_spectrum,
    rank_by_definition_oracle,
    rank_degree,
    restrict,
    rhd_pt,
    rhd_tt,
    separating_sentence,
    spectrum_rd,
)
from .verify import SUITES, run_suite

SYMBOLIC = "family-symbolic"
FINITE = "family-finite"
SYNTAX_ERRORS = (SentenceSyntaxError, FamilySyntaxError, OrdinalSyntaxError)
DEFAULTS = {"json": False, "seed": 0, "budget": None, "atom_bound": 2, "timing": False}


class UsageError(Exception):
    pass


class Outcome:
    """What a verb produced: a JSON payload, the text to print, and whether it passed."""

    def __init__(self, result, text: str, provenance: str, ok: bool = True):
        self.result = result
        self.text = text
        self.provenance = provenance
        self.ok = ok


# ------------------------------------------------------------- parsing


def _is_finite_literal(text: str) -> bool:
    try:
        fin_mod.parse_finite_family(text)
    except FamilySyntaxError:
        return False
    return True


def _rd_json(rd):
    return {"rank": str(rd.rank), "degree": rd.degree, "text": str(rd)}


# --------------------------------------------------------------- verbs


def cmd_rank(args) -> Outcome:
    if _is_finite_literal(args.family) and not args.oracle:
        rd = fin_mod.rank_degree(fin_mod.parse_finite_family(args.family))
        return Outcome(_rd_json(rd), str(rd), FINITE)
    node = parse_family(args.family)
    rd = rank_degree(node)
    result = _rd_json(rd)
    text = str(rd)
    if args.oracle:
        oracle = rank_by_definition_oracle(node, args.atom_bound)
        result["oracle"] = _rd_json(oracle)
        result["agree"] = oracle == rd
        text += f"\noracle (atom bound {args.atom_bound}): {oracle}"
        return Outcome(result, text, SYMBOLIC + "/oracle", oracle == rd)
    return Outcome(result, text, SYMBOLIC)


def cmd_restrict(args) -> Outcome:
    phi = parse_sentence(args.sentence)
    if _is_finite_literal(args.family):
        fam = fin_mod.parse_finite_family(args.family)
        sub = fin_mod.neighborhood(fam, phi)
        rd = fin_mod.rank_degree(sub)
        out = fin_mod.format_finite_family(sub)
        result = {"family": out, "rank_degree": _rd_json(rd), "cardinality": str(len(sub))}
        return Outcome(result, f"{out}\n{rd}, {len(sub)} member(s)", FINITE)
    sub = restrict(parse_family(args.family), phi)
    rd, card = rank_degree(sub), cardinality(sub)
    out = format_family(sub)
    result = {"family": out, "rank_degree": _rd_json(rd), "cardinality": str(card)}
    return Outcome(result, f"{out}\n{rd}, {card} member(s)", SYMBOLIC)


def cmd_closure(args) -> Outcome:
    node = parse_family(args.family)
    closed = closure(node)
    acc = accumulation_points(node)
    result = {
        "family": format_family(closed),
        "input_e_closed": is_e_closed(node),
        "accumulation": {
            "count": str(acc.count),
            "points": [format_point(p) for p in acc.points],
            "complete": acc.complete,
            "kernel": acc.kernel,
        },
    }
    text = f"{format_family(closed)}\n{acc.describe()}"
    return Outcome(result, text, SYMBOLIC)


def cmd_spectrum_rd(args) -> Outcome:
    spec = spectrum_rd(parse_family(args.family))
    return Outcome(spec.as_json(), str(spec), SYMBOLIC)


def cmd_spectrum_pt(args) -> Outcome:
    if _is_finite_literal(args.family):
        sizes = sorted(fin_mod.pt_spectrum(fin_mod.parse_finite_family(args.family)))
        text = "{" + ", ".join(map(str, sizes)) + "}"
        result = {"finite": len(sizes), "infinite": [], "text": text}
        return Outcome(result, text, FINITE)
    spec = pt_spectrum(parse_family(args.family))
    return Outcome(spec.as_json(), str(spec), SYMBOLIC)


_FINITE_CHECKS = {
    "pt": fin_mod.rhd_pt,
    "tt": fin_mod.rhd_tt,
    "generic": fin_mod.is_generic,
    "complete": fin_mod.is_p_complete,
}
_SYMBOLIC_CHECKS = {
    "pt": rhd_pt,
    "tt": rhd_tt,
    "generic": is_generic_sentence,
    "complete": is_p_complete,
}


def cmd_check(args) -> Outcome:
    phi = parse_sentence(args.sentence)
    if _is_finite_literal(args.family):
        value = _FINITE_CHECKS[args.relation](phi, fin_mod.parse_finite_family(args.family))
        provenance = FINITE
    else:
        value = _SYMBOLIC_CHECKS[args.relation](phi, parse_family(args.family))
        provenance = SYMBOLIC
    return Outcome({"relation": args.relation, "holds": value}, "true" if value else "false", provenance)


def cmd_separate(args) -> Outcome:
    if _is_finite_literal(args.first) and _is_finite_literal(args.second):
        phi = fin_mod.separating_sentence(
            fin_mod.parse_finite_family(args.first), fin_mod.parse_finite_family(args.second)
        )
        provenance = FINITE
    else:
        phi = separating_sentence(parse_family(args.first), parse_family(args.second))
        provenance = SYMBOLIC
    if phi is None:
        return Outcome({"separable": False, "sentence": None}, "non-separable: the closures meet", provenance)
    text = format_sentence(phi)
    return Outcome({"separable": True, "sentence": text}, text, provenance)


def cmd_delta_nabla(args) -> Outcome:
    fam = fin_mod.parse_finite_family(args.family)
    dn = fin_mod.delta_nabla(fam)
    delta = format_sentence(dn.delta_formula)
    models = [fam.bits(m) for m in sorted(dn.nabla_models)]
    result = {"delta": delta, "nabla_models": models}
    lines = [f"delta generated by: {delta}", f"nabla: sentences true in one of {', '.join(models) or 'no members'}"]
    if args.query is not None:
        psi = parse_sentence(args.query)
        result["query"] = {"sentence": format_sentence(psi), "in_delta": dn.in_delta(psi), "in_nabla": dn.in_nabla(psi)}
        lines.append(f"in delta: {str(dn.in_delta(psi)).lower()}, in nabla: {str(dn.in_nabla(psi)).lower()}")
    return Outcome(result, "\n".join(lines), FINITE)


def cmd_generic_theories(args) -> Outcome:
    node = parse_family(args.family)
    gens = generic_theories(node)
    count, non = count_generic(node), count_nongeneric(node)
    if isinstance(gens, ContinuumKernel):
        listed, shown = None, str(gens)
    else:
        listed = [format_point(p) for p in gens]
        shown = ", ".join(listed) or "none"
    result = {"theories": listed, "count": str(count), "nongeneric_members": str(non)}
    text = f"generic theories: {shown}\ncount: {count}; nongeneric members: {non}"
    return Outcome(result, text, SYMBOLIC)


def cmd_least_gen(args) -> Outcome:
    node = parse_family(args.family)
    gen = least_generating_set(node)
    if gen is None:
        return Outcome({"exists": False, "points": []}, "none: the family has continuum many members", SYMBOLIC)
    rows, ok = [], True
    for p in gen.listed:
        phi = isolating_sentence(node, p)
        verified = phi is not None and is_p_complete(phi, node)
        ok &= verified
        rows.append({"point": format_point(p), "sentence": None if phi is None else format_sentence(phi),
                     "verified": verified})
    result = {
        "exists": True,
        "family": format_family(gen.family),
        "cardinality": str(gen.cardinality),
        "points": rows,
        "complete": gen.cardinality.is_finite,
    }
    lines = [f"least generating set: {format_family(gen.family)} ({gen.cardinality} point(s))"]
    lines += [f"  {r['point']}  isolated by  {r['sentence']}  [{'verified' if r['verified'] else 'FAILED'}]"
              for r in rows]
    if not gen.cardinality.is_finite:
        lines.append("  ...")
    return Outcome(result, "\n".join(lines), SYMBOLIC, ok)


def cmd_tower(args) -> Outcome:
    alpha = parse_ordinal(args.ordinal)
    if args.n < 1:
        raise UsageError("tower degree must be at least 1")
    node = build_tower(alpha, args.n)
    rd, spec = rank_degree(node), spectrum_rd(node)
    result = {"family": format_family(node), "rank_degree": _rd_json(rd), "spectrum_rd": spec.as_json()}
    text = f"{format_family(node)}\n{rd}\nspectrum: {spec}"
    return Outcome(result, text, SYMBOLIC)


def cmd_verify(args) -> Outcome:
    bound = args.atom_bound if args.atom_bound_given else None
    report = run_suite(args.suite, seed=args.seed, budget=args.budget, atom_bound=bound)
    return Outcome(report.as_json(), "\n".join(report.lines()), "verify", report.ok)


VERBS: Dict[str, Callable] = {
    "rank": cmd_rank,
    "restrict": cmd_restrict,
    "closure": cmd_closure,
    "spectrum-rd": cmd_spectrum_rd,
    "spectrum-pt": cmd_spectrum_pt,
    "check": cmd_check,
    "separate": cmd_separate,
    "delta-nabla": cmd_delta_nabla,
    "generic-theories": cmd_generic_theories,
    "least-gen": cmd_least_gen,
    "tower": cmd_tower,
    "verify": cmd_verify,
}


# -------------------------------------------------------- argument parser


def _global_options(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a flag given before the verb from being reset by the
    # subparser's default; real defaults are filled in after parsing
    s = argparse.SUPPRESS
    parser.add_argument("--json", action="store_true", default=s, help="emit a JSON report")
    parser.add_argument("--seed", type=int, default=s, help="random seed (default 0)")
    parser.add_argument("--budget", type=int, default=s, help="random cases per verify check")
    parser.add_argument("--atom-bound", type=int, default=s, help="atoms per oracle step or sentence bound, 1..3")
    parser.add_argument("--timing", action="store_true", default=s, help="add wall-clock time to the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ranklab",
        description="Rank, degree, spectra and genericity of families of complete theories.",
    )
    _global_options(parser)
    sub = parser.add_subparsers(dest="verb", metavar="VERB", required=True)

    def verb(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_options(p)
        return p

    p = verb("rank", "rank and degree of a family")
    p.add_argument("family")
    p.add_argument("--oracle", action="store_true", help="also evaluate the definition oracle")
    p = verb("restrict", "the subfamily satisfying a sentence")
    p.add_argument("family")
    p.add_argument("sentence")
    verb("closure", "topological closure and accumulation points").add_argument("family")
    verb("spectrum-rd", "rank/degree spectrum").add_argument("family")
    verb("spectrum-pt", "cardinality spectrum").add_argument("family")
    p = verb("check", "satisfaction, genericity or completeness of a sentence")
    p.add_argument("relation", choices=sorted(_SYMBOLIC_CHECKS))
    p.add_argument("family")
    p.add_argument("sentence")
    p = verb("separate", "a sentence true on the first family and false on the second")
    p.add_argument("first")
    p.add_argument("second")
    p = verb("delta-nabla", "sentence sets true in all / some members of a finite family")
    p.add_argument("family")
    p.add_argument("--query", help="sentence to test for membership")
    verb("generic-theories", "generic theories of a family").add_argument("family")
    verb("least-gen", "least generating set of an e-closed family").add_argument("family")
    p = verb("tower", "a family of given rank and degree")
    p.add_argument("ordinal")
    p.add_argument("n", type=int)
    verb("verify", "run a property suite").add_argument("suite", choices=list(SUITES))
    return parser


def _resolve(args: argparse.Namespace) -> argparse.Namespace:
    args.atom_bound_given = hasattr(args, "atom_bound")
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if not 1 <= args.atom_bound <= 3:
        raise UsageError(f"--atom-bound must be between 1 and 3, got {args.atom_bound}")
    if args.seed < 0 or args.seed >= 1 << 64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    if args.budget is not None and args.budget < 0:
        raise UsageError("--budget must be non-negative")
    return args


def _emit(args, argv: List[str], outcome: Optional[Outcome], error: Optional[str], seconds: float) -> None:
    if args is not None and args.json:
        report = {
            "command": ["ranklab", *argv],
            "verb": args.verb,
            "ok": outcome.ok if outcome else False,
            "provenance": outcome.provenance if outcome else None,
            "result": outcome.result if outcome else None,
        }
        if error is not None:
            report["error"] = error
        if args.timing:
            report["timing"] = {"seconds": round(seconds, 6)}
        print(json.dumps(report, ensure_ascii=False, indent=2))
        return
    if outcome is not None:
        print(outcome.text)
    if error is not None:
        print(f"ranklab: error: {error}", file=sys.stderr)
    if args is not None and args.timing:
        print(f"time: {seconds:.3f}s", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args = _resolve(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ranklab: error: {exc}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        outcome = VERBS[args.verb](args)
    except (UsageError, *SYNTAX_ERRORS) as exc:
        _emit(args, argv, None, str(exc), time.perf_counter() - start)
        return 2
    except (RanklabError, RecursionError) as exc:
        _emit(args, argv, None, str(exc) or type(exc).__name__, time.perf_counter() - start)
        return 1
    _emit(args, argv, outcome, None, time.perf_counter() - start)
    return 0 if outcome.ok else 1


if __name__ == "__main__":
    sys.exit(main())
