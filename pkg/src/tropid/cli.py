"""Command-line front end: ``tropid <command> [options]``.

Exit status is 0 whenever a verdict or report was computed (a failing
identity is a successful computation), 1 for malformed input or usage, and
2 for internal errors, enumeration caps and unreproduced manifest claims.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from typing import Callable, Optional

from . import decide as D
from . import words as W
from .bicyclic import b_eval, format_element, parse_element, random_falsify
from .cache import ResultCache
from .tropical import eval_word_matrix, format_matrix, parse_matrix

MONOIDS = ("bicyclic", "u2t", "u2z")


class UsageError(Exception):
    """Bad command line or malformed input; exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _parsed(fn: Callable, text: str):
    try:
        return fn(text)
    except W.WordSyntaxError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_diag_classes(text: Optional[str]):
    """``"A,B;C,D"`` -> ``[["A", "B"], ["C", "D"]]``."""
    if not text:
        return None
    classes = []
    for chunk in text.split(";"):
        names = [n.strip() for n in chunk.split(",") if n.strip()]
        if not names:
            raise ValueError(f"empty diagonal class in {text!r}")
        for n in names:
            if not W._IDENT_RE.match(n):
                raise ValueError(f"bad variable name {n!r} in diagonal classes")
        classes.append(names)
    return classes


def _table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*cells[0]), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in cells[1:]]
    return "\n".join(line.rstrip() for line in lines)


def _kv(pairs) -> str:
    return _table(("field", "value"), pairs)


# -- command handlers --------------------------------------------------------
# Each handler returns (json payload, human-readable text).

def _verdict_text(identity, payload) -> str:
    rows = [("identity", W.format_identity(identity)), ("status", payload["status"]),
            ("method", payload["method"])]
    for x, v in (payload["witness"] or {}).items():
        rows.append((f"witness {x}", v))
    return _kv(rows)


def cmd_check(args, ctx):
    identity = _parsed(W.parse_identity, args.identity)
    classes = _parsed(parse_diag_classes, args.diag_classes)
    if args.monoid == "bicyclic":
        if classes:
            raise UsageError("--diag-classes only applies to u2t and u2z")
        if args.method == "falsifier":
            phi = random_falsify(identity, exponent_bound=args.bound, trials=args.trials, seed=ctx.seed)
            v = D.Verdict(D.FAILS if phi else D.HOLDS, D.FALSIFIER, phi)
        else:
            v = D.holds_bicyclic(identity)
    else:
        integer = args.monoid == "u2z"
        if args.method == "falsifier":
            phi = D.random_falsify_u2(identity, classes, trials=args.trials, seed=ctx.seed, bound=args.bound)
            v = D.Verdict(D.FAILS if phi else D.HOLDS, D.FALSIFIER, phi, args.monoid)
        else:
            v = D.holds_u2t(identity, classes, integer=integer, trials=args.trials, seed=ctx.seed)
    payload = v.to_json()
    return payload, _verdict_text(identity, payload)


def cmd_eval(args, ctx):
    w = _parsed(W.parse_word, args.word)
    parse = parse_element if args.monoid == "bicyclic" else parse_matrix
    assignment = {}
    for item in args.assign:
        if "=" not in item:
            raise UsageError(f"assignment {item!r} must look like name=value")
        name, text = item.split("=", 1)
        assignment[name.strip()] = _parsed(parse, text)
    missing = [x for x in W.ordered_content(w) if x not in assignment]
    if missing:
        raise UsageError(f"no value given for {', '.join(missing)}")
    if args.monoid == "bicyclic":
        e = b_eval(w, assignment)
        payload = {"word": W.format_word(w), "value": format_element(e), "normal_form": [e.a, e.b]}
    else:
        try:
            M = eval_word_matrix(w, assignment)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload = {"word": W.format_word(w), "value": format_matrix(M)}
    return payload, _kv([("word", payload["word"]), ("value", payload["value"])])


def _partners_payload(u, max_len, strategy):
    s = D.partner_search(u, max_len, strategy)
    return {
        "word": W.format_word(u),
        "partners": [W.format_word(v) for v in s.partners],
        "isoterm": s.is_isoterm,
        "strategy": s.strategy,
        "rearrangements": s.space,
        "candidates": s.candidates,
        "exact_checks": s.exact_checks,
    }


def cmd_partners(args, ctx):
    u = _parsed(W.parse_word, args.word)
    inputs = {"word": W.format_word(u), "max_len": args.max_len, "strategy": args.strategy}
    payload = ctx.cached("partners", inputs, lambda: _partners_payload(u, args.max_len, args.strategy))
    text = _kv([
        ("word", payload["word"]), ("isoterm", payload["isoterm"]),
        ("strategy", payload["strategy"]), ("rearrangements", payload["rearrangements"]),
        ("candidates", payload["candidates"]), ("exact checks", payload["exact_checks"]),
    ]) + "\n\n" + _table(("partner",), [(p,) for p in payload["partners"]])
    return payload, text


def _shleifer_payload():
    r = D.shleifer_scan()
    return {
        "words": r.words,
        "pairs_checked": r.pairs_checked,
        "exact_checks": r.exact_checks,
        "holding": [W.format_identity(i) for i in r.holding],
        "representatives": [W.format_identity(i) for i in r.representatives],
    }


def cmd_shleifer(args, ctx):
    payload = ctx.cached("shleifer", {}, _shleifer_payload)
    text = _kv([("words", payload["words"]), ("pairs", payload["pairs_checked"]),
                ("exact checks", payload["exact_checks"]),
                ("holding pairs", len(payload["holding"]))])
    text += "\n\n" + _table(("identity up to symmetry",), [(r,) for r in payload["representatives"]])
    return payload, text


def cmd_adjan(args, ctx):
    if args.n < 1:
        raise UsageError("--n must be positive")
    identity = W.adjan_family(args.n)
    payload = {"n": args.n, "identity": W.format_identity(identity)}
    text = _kv([("n", args.n), ("identity", payload["identity"])])
    if args.check:
        inputs = {"n": args.n, "monoid": args.check, "seed": ctx.seed}
        if args.check == "bicyclic":
            compute = lambda: D.holds_bicyclic(identity).to_json()  # noqa: E731
        else:
            compute = lambda: D.holds_u2t(identity, integer=args.check == "u2z",  # noqa: E731
                                          seed=ctx.seed).to_json()
        payload["monoid"] = args.check
        payload["verdict"] = ctx.cached("adjan", inputs, compute)
        text = _verdict_text(identity, payload["verdict"])
    return payload, text


def _report_text(payload) -> str:
    rows = [("check", payload["tag"]), ("cases", payload["cases"]),
            ("failures", len(payload["failures"])), ("passed", payload["passed"])]
    rows += [(k, v) for k, v in payload["bounds"].items()]
    for k, v in payload["details"].items():
        if isinstance(v, dict):
            rows += [(f"{k}: {a}", b) for a, b in v.items()]
        else:
            rows.append((k, v))
    text = _kv(rows)
    if payload["failures"]:
        text += "\n\n" + "\n".join(f"FAIL {f}" for f in payload["failures"])
    return text


def cmd_conditions(args, ctx):
    inputs = {"tag": args.tag, "max_len": args.max_len}
    payload = ctx.cached("conditions", inputs,
                         lambda: D.check_condition(args.tag, args.max_len, ctx.jobs).to_json())
    return payload, _report_text(payload)


def cmd_replay(args, ctx):
    inputs = {"n": args.n, "max_vars": args.max_vars, "cap": args.cap}
    payload = ctx.cached("replay", inputs,
                         lambda: D.theorem_replay(args.n, args.max_vars, args.cap).to_json())
    return payload, _report_text(payload)


def cmd_embed(args, ctx):
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    payload = D.verify_embedding(args.bound).to_json()
    rows = [("bound", payload["bound"]), ("unit", payload["unit"]),
            ("distinct images", payload["distinct"])]
    rows += [(k, v) for k, v in payload["checks"].items()]
    rows.append(("passed", payload["passed"]))
    return payload, _kv(rows)


def _isoterm_payload(max_len, jobs):
    r = D.short_isoterm_scan(max_len, jobs)
    return {
        "max_len": r.max_len, "classes": r.classes, "words": r.words, "pairs": r.pairs,
        "exact_checks": r.exact_checks,
        "identities": [W.format_identity(i) for i in r.identities],
        "passed": r.passed,
    }


def cmd_isoterms(args, ctx):
    if args.max_len < 1:
        raise UsageError("--max-len must be positive")
    payload = ctx.cached("isoterms", {"max_len": args.max_len},
                         lambda: _isoterm_payload(args.max_len, ctx.jobs))
    text = _kv([("max length", payload["max_len"]), ("count classes", payload["classes"]),
                ("words", payload["words"]), ("pairs", payload["pairs"]),
                ("exact checks", payload["exact_checks"]),
                ("identities found", len(payload["identities"])), ("passed", payload["passed"])])
    return payload, text


# -- manifest reproduction ------------------------------------------------------

REPRODUCED = "reproduced"
FAILED = "failed"
SKIPPED = "skipped(bound)"


def load_manifest() -> list:
    text = resources.files("tropid").joinpath("manifest.json").read_text(encoding="utf-8")
    claims = json.loads(text)["claims"]
    ids = [c["id"] for c in claims]
    if len(ids) != len(set(ids)):
        raise ValueError("manifest claim ids must be unique")
    return claims


def lookup(payload, path: str):
    cur = payload
    for part in path.split("."):
        if isinstance(cur, list):
            cur = cur[int(part)]
        else:
            cur = cur[part]
    return cur


def run_claim(claim: dict, fast: bool, ctx) -> dict:
    argv = claim.get("fast_command", claim["command"]) if fast else claim["command"]
    start = time.perf_counter()
    status, detail = REPRODUCED, ""
    try:
        payload = run_payload(argv, ctx)
        for path, want in claim["expect"].items():
            got = lookup(payload, path)
            if got != want:
                status = FAILED
                detail = f"{path}: expected {want!r}, got {got!r}"
                break
    except D.CapExceeded as exc:
        status, detail = SKIPPED, str(exc)
    except Exception as exc:  # a claim that crashes is a failed reproduction
        status, detail = FAILED, f"{type(exc).__name__}: {exc}"
    return {
        "id": claim["id"],
        "command": " ".join(argv),
        "status": status,
        "runtime": round(time.perf_counter() - start, 3),
        "detail": detail,
    }


def cmd_verify_paper(args, ctx):
    # reproduction always recomputes; the cache is bypassed
    inner = Context(seed=ctx.seed, jobs=ctx.jobs, cache=None)
    results = [run_claim(c, args.fast, inner) for c in load_manifest()]
    payload = {
        "fast": args.fast,
        "claims": results,
        "reproduced": sum(r["status"] == REPRODUCED for r in results),
        "failed": sum(r["status"] == FAILED for r in results),
        "skipped": sum(r["status"] == SKIPPED for r in results),
    }
    payload["all_reproduced"] = payload["reproduced"] == len(results)
    text = _table(("claim", "status", "seconds"),
                  [(r["id"], r["status"], f"{r['runtime']:.2f}") for r in results])
    text += f"\n\n{payload['reproduced']}/{len(results)} reproduced"
    for r in results:
        if r["detail"] and r["status"] != REPRODUCED:
            text += f"\n{r['id']}: {r['detail']}"
    return payload, text


# -- plumbing ---------------------------------------------------------------------

class Context:
    def __init__(self, seed: int = 0, jobs: int = 1, cache: Optional[ResultCache] = None):
        self.seed = seed
        self.jobs = jobs
        self.cache = cache

    def cached(self, operation, inputs, compute):
        if self.cache is None:
            return compute()
        return self.cache.fetch(operation, inputs, compute)


def _global_options(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="print machine-readable JSON")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for randomized steps")
    parser.add_argument("--jobs", type=int, default=default(1), help="worker processes for scans")
    parser.add_argument("--no-cache", action="store_true", default=default(False),
                        help="neither read nor write the result cache")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropid", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="decide one identity")
    p.add_argument("--monoid", choices=MONOIDS, required=True)
    p.add_argument("--identity", required=True, help='"<u> == <v>"')
    p.add_argument("--diag-classes", help='variables sharing diagonals, e.g. "A,B;C,D"')
    p.add_argument("--method", choices=("exact", "falsifier"), default="exact")
    p.add_argument("--trials", type=int, default=10_000, help="falsifier trials")
    p.add_argument("--bound", type=int, default=5, help="falsifier entry/exponent bound")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("eval", parents=[common], help="evaluate a word at an assignment")
    p.add_argument("--monoid", choices=("bicyclic", "matrix"), default="bicyclic")
    p.add_argument("--word", required=True)
    p.add_argument("--assign", action="append", default=[], metavar="NAME=VALUE",
                   help='e.g. "x=B^0 A^2" or "x=[1,0;-inf,0]"')
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("partners", parents=[common], help="all bicyclic partners of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--max-len", type=int, default=D.DEFAULT_PARTNER_CAP)
    p.add_argument("--strategy", choices=("auto", "exhaustive", "pruned"), default="auto")
    p.set_defaults(handler=cmd_partners)

    p = sub.add_parser("shleifer", parents=[common], help="scan balanced length-10 words over x, y")
    p.set_defaults(handler=cmd_shleifer)

    p = sub.add_parser("adjan", parents=[common], help="the identity family u_n = v_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=MONOIDS)
    p.set_defaults(handler=cmd_adjan)

    p = sub.add_parser("conditions", parents=[common], help="isoterm conditions (i)-(iii)")
    p.add_argument("--tag", choices=("i", "ii", "iii"), required=True)
    p.add_argument("--max-len", type=int, default=D.DEFAULT_PARTNER_CAP)
    p.set_defaults(handler=cmd_conditions)

    p = sub.add_parser("replay", parents=[common], help="classify words applicable to u_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-vars", type=int)
    p.add_argument("--cap", type=int, default=D.DEFAULT_REPLAY_CAP)
    p.set_defaults(handler=cmd_replay)

    p = sub.add_parser("embed", parents=[common], help="check the matrix embedding")
    p.add_argument("--bound", type=int, default=20)
    p.set_defaults(handler=cmd_embed)

    p = sub.add_parser("isoterms", parents=[common], help="no short identities hold")
    p.add_argument("--max-len", type=int, default=8)
    p.set_defaults(handler=cmd_isoterms)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce every manifest claim")
    p.add_argument("--fast", action="store_true", help="use the reduced bounds")
    p.set_defaults(handler=cmd_verify_paper)
    return parser


def run_payload(argv, ctx: Context) -> dict:
    """Run a command in-process and return its JSON payload."""
    args = build_parser().parse_args(list(argv))
    payload, _ = args.handler(args, ctx)
    return payload


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        ctx = Context(args.seed, args.jobs, None if args.no_cache else ResultCache())
        payload, text = args.handler(args, ctx)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except D.CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    if args.command == "verify-paper" and payload["failed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
