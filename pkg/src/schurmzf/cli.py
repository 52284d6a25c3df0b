"""Command-line front end.

Reports go to stdout (or ``--out``) as one JSON object; a one-line summary
goes to stderr.  Exit status: 0 pass, 1 fail, 2 usage, input or budget error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .combinatorics import Partition, count_ssyt_oracle, enumerate_ssyt
from .jacobitrudi import (FAMILIES, diagonal_constant_tableau, family_of, jt_matrix, jts_matrix,
                          verify_extended_jt, verify_lemma_diag, verify_star_nonstar,
                          verify_truncated_jt)
from .pieri import KINDS, default_assignment, push_e, push_h, verify_pieri
from .report import DEFAULT_TOLERANCE, BudgetExceeded
from .rims import DEFAULT_PATTERN_BUDGET, enumerate_rims, rim_terms, verify_path_identity
from .series import AssignmentError, MixedModeError, VarTableau, exponent_mode

IDENTITIES = ("extended-jt", "lemma-diag", "truncated-jt", "path", "star-nonstar", "pieri")


class InputError(ValueError):
    pass


def parse_exponent(v):
    if isinstance(v, bool):
        raise InputError("booleans are not exponents")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return complex(v)
    if isinstance(v, dict) and set(v) <= {"re", "im"} and "re" in v:
        return complex(float(v["re"]), float(v.get("im", 0.0)))
    raise InputError(f"cannot read exponent {v!r}; use an integer or {{\"re\": .., \"im\": ..}}")


def load_assignment(path: str) -> dict:
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise InputError("assignment file must hold a JSON object of symbol -> exponent")
    a = {str(k): parse_exponent(v) for k, v in raw.items()}
    exponent_mode(a.values())
    return a


def load_tableau(path: str) -> VarTableau:
    with open(path) as fh:
        return VarTableau.from_json(json.load(fh))


def _coerce(a: dict, mode: str) -> dict:
    # A requested mode must agree with the file; defaults follow the requested mode.
    actual = exponent_mode(a.values())
    if actual != mode:
        raise MixedModeError(f"--mode {mode} but the assignment holds {actual} exponents")
    return a


def _tableau(args) -> VarTableau:
    if args.vars:
        t = load_tableau(args.vars)
        if args.shape and tuple(Partition.parse(args.shape)) != tuple(t.shape):
            raise InputError("--shape disagrees with the tableau file")
        return t
    if not args.shape:
        raise InputError("--shape or --vars is required")
    return VarTableau.standard(Partition.parse(args.shape))


def _assignment(args, symbols) -> dict:
    if args.assign:
        return _coerce(load_assignment(args.assign), args.mode)
    return default_assignment(symbols, args.mode)


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else DEFAULT_TOLERANCE
    if args.mode == "float" and tol <= 0:
        raise InputError("float mode needs --tol > 0")
    ident = args.identity
    if ident == "pieri":
        params = {"ell": args.ell, "k": args.k, "m": args.m, "X": args.X, "s": args.s,
                  "flavor": args.flavor}
        if args.kind == "constant_s":
            if not args.shape:
                raise InputError("constant_s needs --shape")
            params["shape"] = tuple(Partition.parse(args.shape))
        params = {k: v for k, v in params.items() if v is not None}
        a = load_assignment(args.assign) if args.assign else None
        if a is not None:
            _coerce(a, args.mode)
        rep = verify_pieri(args.kind, params, args.N, a=a, mode=args.mode, tol=tol,
                           max_terms=args.max_terms, symmetrize=not args.no_sym)
    else:
        if ident == "truncated-jt" and not args.vars:
            t = diagonal_constant_tableau(Partition.parse(args.shape or ""))
        else:
            t = _tableau(args)
        a = _assignment(args, t.symbols())
        if ident == "extended-jt":
            fams = family_of(t.shape)
            family = args.family or (fams[0] if fams else None)
            if family is None:
                raise InputError(f"shape {tuple(t.shape)} belongs to no extended family")
            rep = verify_extended_jt(family, t, a, args.N, tol)
        elif ident == "lemma-diag":
            rep = verify_lemma_diag(t, a, args.N, args.flavor or "H")
        elif ident == "truncated-jt":
            rep = verify_truncated_jt(t, a, args.N, args.flavor or "H")
        elif ident == "path":
            budget = args.max_terms if args.max_terms is not None else DEFAULT_PATTERN_BUDGET
            rep = verify_path_identity(t, a, args.N, budget)
        else:
            rep = verify_star_nonstar(t, a, args.N, tol)
    _emit(args, rep.to_dict())
    print(rep.summary(), file=sys.stderr)
    return 0 if rep.passed else 1


def cmd_ssyt(args) -> int:
    lam = Partition.parse(args.shape)
    if args.count:
        n = sum(1 for _ in enumerate_ssyt(lam, args.N))
        _emit(args, {"shape": list(lam), "N": args.N, "count": n,
                     "hook_content": count_ssyt_oracle(lam, args.N)})
    else:
        rows = [[list(r) for r in M] for M in enumerate_ssyt(lam, args.N)]
        _emit(args, {"shape": list(lam), "N": args.N, "count": len(rows), "tableaux": rows})
        n = len(rows)
    print(f"{n} tableaux", file=sys.stderr)
    return 0


def cmd_rims(args) -> int:
    t = _tableau(args)
    flavor = args.flavor or "H"
    decs = enumerate_rims(t.shape, flavor)
    terms = rim_terms(t, flavor)
    entries = [{"labels": d.dump(), "sigma": list(d.sigma), "sign": d.sign,
                "words": [list(w) for w in words]} for d, (_, words) in zip(decs, terms)]
    _emit(args, {"shape": list(t.shape), "flavor": flavor, "count": len(entries), "decompositions": entries})
    print(f"{len(entries)} {flavor}-rim decompositions", file=sys.stderr)
    return 0


def cmd_push(args) -> int:
    t = _tableau(args)
    if args.r is None or args.r < 1:
        raise InputError("--r must be a positive integer")
    boxes = [f"t{i}" for i in range(1, args.r + 1)]
    flavor = args.flavor or "H"
    outs = push_h(t, boxes) if flavor == "H" else push_e(t, boxes)
    _emit(args, {"shape": list(t.shape), "flavor": flavor, "count": len(outs),
                 "outcomes": [o.to_json() for o in outs]})
    print(f"{len(outs)} entries", file=sys.stderr)
    return 0


def cmd_matrix(args) -> int:
    t = _tableau(args)
    flavor = args.flavor or "H"
    d = jts_matrix(t) if flavor == "H" else jt_matrix(t)
    entries = [[e if isinstance(e, int) else list(e) for e in row] for row in d.entries]
    _emit(args, {"shape": list(t.shape), "flavor": d.flavor, "size": d.size, "entries": entries})
    print(d.dump(), file=sys.stderr)
    return 0


def cmd_suite(args) -> int:
    from .suite import run_suite

    numbers = set(args.only) if args.only else None
    results = run_suite(numbers)
    for r in results:
        print(r.line(), file=sys.stderr)
    passed = sum(r.passed for r in results)
    _emit(args, {"passed": passed, "total": len(results), "criteria": [r.to_dict() for r in results]})
    print(f"{passed}/{len(results)} criteria passed", file=sys.stderr)
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", help="partition, e.g. 3,2,1")
    common.add_argument("--vars", metavar="FILE", help="tableau JSON {shape, rows}")
    common.add_argument("--assign", metavar="FILE", help="assignment JSON {symbol: exponent}")
    common.add_argument("--N", type=int, default=4, help="truncation depth (default 4)")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=float, help="relative tolerance in float mode")
    common.add_argument("--max-terms", type=int, dest="max_terms",
                        help="work ceiling (default: $SCHURMZF_MAX_TERMS or built-in)")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; evaluation is single-threaded")
    common.add_argument("--out", metavar="FILE", help="write JSON here instead of stdout")
    common.add_argument("--flavor", choices=("H", "E"))

    p = argparse.ArgumentParser(prog="schurmzf", description="Truncated Schur multiple zeta identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check one identity")
    v.add_argument("identity", choices=IDENTITIES)
    v.add_argument("--family", choices=FAMILIES)
    v.add_argument("--kind", choices=KINDS, default="hook_h")
    v.add_argument("--ell", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--X", type=int)
    v.add_argument("--s", type=int)
    v.add_argument("--no-sym", "--shuffled", dest="no_sym", action="store_true",
                   help="compare one permutation term instead of the symmetrized sums")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("ssyt", parents=[common], help="list semistandard tableaux")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_ssyt)

    sub.add_parser("rims", parents=[common], help="list rim decompositions").set_defaults(func=cmd_rims)

    pu = sub.add_parser("push", parents=[common], help="list pushing-rule outcomes")
    pu.add_argument("--r", type=int)
    pu.set_defaults(func=cmd_push)

    sub.add_parser("matrix", parents=[common], help="show the determinant matrix").set_defaults(func=cmd_matrix)

    su = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    su.add_argument("--only", type=int, nargs="*")
    su.set_defaults(func=cmd_suite)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(json.dumps({"error": "budget", "reason": "budget", "message": str(exc)}, sort_keys=True))
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (InputError, MixedModeError, AssignmentError, ValueError, KeyError, TypeError,
            OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "input", "message": str(exc)}, sort_keys=True))
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
