"""Command-line interface: ``fo2alt <command> [options]``.

Exit status is 0 for a definite answer, 2 when a budget was exhausted
before an answer was reached, and 1 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from .automata import Dfa, compile_regex, syntactic_presentation
from .hierarchy import classify
from .logic import approx_equiv, eval_fo2, eval_tl, fo2_metrics, parse_fo2, parse_tl, tl_metrics, translate
from .logic import fo2 as fo2_mod
from .logic import tl as tl_mod
from .omega import DEFAULT_BUDGET, level_identity, parse_term, satisfies
from .semigroup import Semigroup, green, is_lda

OK, ERROR, INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _language_source(p, semigroup_allowed: bool) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--regex", metavar="STR", help="regular expression over the alphabet")
    src.add_argument("--dfa", metavar="FILE", help="DFA in JSON ('-' reads stdin)")
    if semigroup_allowed:
        src.add_argument("--semigroup", metavar="FILE", help="semigroup table in JSON")
    p.add_argument("--alphabet", metavar="LETTERS",
                   help="alphabet for --regex (default: the letters occurring in it)")


def _format(p) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fo2alt", description="Decide levels of the FO2[<,suc] "
                     "quantifier alternation hierarchy for regular languages.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify a regular language")
    _language_source(p, semigroup_allowed=False)
    p.add_argument("--max-m", type=_positive, default=3, metavar="M")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, metavar="N")
    _format(p)

    p = sub.add_parser("semigroup", help="syntactic semigroup, idempotents, Green classes, LDA")
    _language_source(p, semigroup_allowed=True)
    _format(p)

    p = sub.add_parser("identity", help="check an omega-term identity in a semigroup")
    _language_source(p, semigroup_allowed=True)
    p.add_argument("terms", nargs="*", metavar="TERM", help="left and right hand side")
    p.add_argument("--level", type=_positive, metavar="M", help="check U_M = V_M")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, metavar="N")
    _format(p)

    p = sub.add_parser("eval", help="evaluate a formula on a word")
    f = p.add_mutually_exclusive_group(required=True)
    f.add_argument("--fo2", metavar="STR")
    f.add_argument("--tl", metavar="STR")
    p.add_argument("--word", required=True, metavar="STR")
    _format(p)

    p = sub.add_parser("translate", help="translate an FO2[<,suc] sentence into TL")
    p.add_argument("--fo2", required=True, metavar="STR")
    p.add_argument("--alphabet", metavar="LETTERS")
    _format(p)

    p = sub.add_parser("equiv", help="decide u ~(m,n) v")
    p.add_argument("--u", required=True, metavar="STR")
    p.add_argument("--v", required=True, metavar="STR")
    p.add_argument("--m", required=True, type=_positive, metavar="M")
    p.add_argument("--n", required=True, type=_natural, metavar="N")
    _format(p)
    return parser


def _alphabet(args):
    return list(args.alphabet) if getattr(args, "alphabet", None) else None


def _dfa(args) -> tuple[Dfa, str]:
    if args.regex is not None:
        return compile_regex(args.regex, _alphabet(args)), args.regex
    return Dfa.from_json(_read(args.dfa)), args.dfa


def _semigroup(args):
    """Semigroup with element names, plus the image when it comes from a language."""
    if getattr(args, "semigroup", None):
        return Semigroup.from_json(_read(args.semigroup)), None
    pres = syntactic_presentation(_dfa(args)[0])
    return pres.semigroup, pres.image


def _names(S, xs) -> str:
    return "{" + ", ".join(S.names[x] for x in sorted(xs)) + "}"


def cmd_classify(args, out):
    d, source = _dfa(args)
    report = classify(d, args.max_m, args.budget, source=source)
    out(report.to_json() if args.format == "json" else report.to_text())
    return OK if report.conclusive else INCONCLUSIVE


def cmd_semigroup(args, out):
    S, image = _semigroup(args)
    g = green(S)
    lda = is_lda(S)
    classes = {k: [sorted(c) for c in getattr(g, f"{k}_classes")] for k in ("r", "l", "j", "h")}
    if args.format == "json":
        data = {**S.to_dict(), "idempotents": sorted(S.idempotents),
                "green": classes, "lda": lda}
        if image is not None:
            data["image"] = sorted(image)
        out(json.dumps(data, indent=2))
        return OK
    w = max(len(s) for s in S.names)
    lines = [f"order: {S.order}",
             " " * (w + 1) + "| " + " ".join(s.rjust(w) for s in S.names)]
    lines.append("-" * (w + 1) + "+" + "-" * ((w + 1) * S.order))
    for x, row in enumerate(S.table):
        lines.append(S.names[x].rjust(w) + " | " + " ".join(S.names[y].rjust(w) for y in row))
    lines.append(f"idempotents: {_names(S, S.idempotents)}")
    for k in ("r", "l", "j", "h"):
        lines.append(f"{k.upper()}-classes: " + " ".join(_names(S, c) for c in getattr(g, f"{k}_classes")))
    if image is not None:
        lines.append(f"image: {_names(S, image)}")
    lines.append(f"LDA: {'yes' if lda else 'no'}")
    out("\n".join(lines))
    return OK


def cmd_identity(args, out):
    if args.level is not None:
        if args.terms:
            raise UsageError("give either two terms or --level, not both")
        lhs, rhs = level_identity(args.level)
        title = f"U_{args.level} = V_{args.level}"
    elif len(args.terms) == 2:
        lhs, rhs = (parse_term(t) for t in args.terms)
        title = f"{lhs} = {rhs}"
    else:
        raise UsageError("expected two terms or --level M")
    S, _ = _semigroup(args)
    verdict = satisfies(S, lhs, rhs, budget=args.budget)
    if args.format == "json":
        out(json.dumps({"lhs": str(lhs), "rhs": str(rhs), **verdict.to_dict(S)}, indent=2))
    else:
        lines = [title, f"verdict: {verdict.status}"]
        if verdict.counterexample:
            lines.append("counterexample: " + ", ".join(
                f"{k}={S.names[x]}" for k, x in verdict.counterexample.items()))
            lines.append(f"values: {S.names[verdict.lhs_value]} != {S.names[verdict.rhs_value]}")
        if verdict.reason:
            lines.append(verdict.reason)
        out("\n".join(lines))
    return OK if verdict.conclusive else INCONCLUSIVE


def cmd_eval(args, out):
    if args.fo2 is not None:
        phi = parse_fo2(args.fo2)
        value, metrics, text = eval_fo2(phi, args.word), fo2_metrics(phi), fo2_mod.show(phi)
    else:
        phi = parse_tl(args.tl)
        value, metrics, text = eval_tl(phi, args.word), tl_metrics(phi), tl_mod.show(phi)
    if args.format == "json":
        out(json.dumps({"formula": text, "word": args.word, "value": value,
                        "metrics": metrics.to_dict()}, indent=2))
    else:
        out(f"{str(value).lower()}\nformula: {text}\nm={metrics.m} n={metrics.n}")
    return OK


def cmd_translate(args, out):
    phi = parse_fo2(args.fo2)
    psi = translate(phi, _alphabet(args))
    src, dst = fo2_metrics(phi), tl_metrics(psi)
    if args.format == "json":
        out(json.dumps({"fo2": fo2_mod.show(phi), "fo2_metrics": src.to_dict(),
                        "tl": tl_mod.show(psi), "tl_metrics": dst.to_dict()}, indent=2))
    else:
        out(f"{tl_mod.show(psi)}\nFO2 m={src.m} n={src.n}; TL m={dst.m} n={dst.n}")
    return OK


def cmd_equiv(args, out):
    value = approx_equiv(args.u, args.v, args.m, args.n)
    if args.format == "json":
        out(json.dumps({"u": args.u, "v": args.v, "m": args.m, "n": args.n, "value": value}, indent=2))
    else:
        out(str(value).lower())
    return OK


COMMANDS = {
    "classify": cmd_classify, "semigroup": cmd_semigroup, "identity": cmd_identity,
    "eval": cmd_eval, "translate": cmd_translate, "equiv": cmd_equiv,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:          # --help
            return e.code or OK
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            status = COMMANDS[args.command](args, lambda s: print(s, file=stdout))
        for w in caught:
            print(f"warning: {w.message}", file=stderr)
        return status
    except UsageError as e:
        print(f"fo2alt: usage error: {e}", file=stderr)
        return ERROR
    except (ValueError, KeyError, TypeError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"fo2alt: error: {msg}", file=stderr)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
