"""``recip`` command-line front end.

Every verb prints one JSON document on stdout and exits 0.  Mathematical
failures print ``{"error": ..., "kind": "math"}`` on stderr and exit 1;
malformed arguments or encodings do the same with ``"kind": "usage"`` and
exit 2.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import complement, decompose, extension, search
from .domain import RecipError
from .encoding import (EncodingError, decode_decomposition, decode_extension,
                       encode_classification, encode_decomposition, encode_element,
                       encode_extension, encode_fraction, parse_element, parse_fraction)
from .instances import make_domain

DEFAULT_MAX_STATES = 10**7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _max_states() -> int:
    raw = os.environ.get("RECIP_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RECIP_MAX_STATES must be an integer, got {raw!r}") from None


def _domain(args):
    try:
        return make_domain(args.domain)
    except RecipError as exc:
        raise UsageError(str(exc)) from None


def _fraction(D, args):
    if args.value is not None:
        return parse_fraction(D, args.value)
    if args.num is None:
        raise UsageError("give --value or --num [--den]")
    n = parse_element(D, args.num)
    d = parse_element(D, args.den) if args.den is not None else D.one
    if d == D.zero:
        raise EncodingError("zero denominator")
    return D.reduce(n, d)


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


# ---------------------------------------------------------------------------
# verbs


def cmd_decompose(args):
    D = _domain(args)
    alpha = _fraction(D, args)
    method = args.method
    if method in ("greedy", "integer", "distinctify") and D.selector != "z":
        raise RecipError(f"method {method!r} is only available over Z")
    if method == "euclid":
        dec = decompose.euclid_decompose(alpha)
    elif method == "greedy":
        dec = decompose.greedy_decompose_z(alpha)
    elif method == "integer":
        dec = decompose.integer_expand(alpha)
    elif method == "distinctify":
        dec = decompose.distinctify_z(decompose.euclid_decompose(alpha))
    else:
        dec = complement.is_in_R(alpha).certificate
        if dec is None:
            raise RecipError(f"{alpha} is not in R({D.selector}); try 'split'")
    return encode_decomposition(dec)


def cmd_split(args):
    D = _domain(args)
    res = complement.bonaccian_split(_fraction(D, args))
    return {"side": res.side, "certificate": encode_decomposition(res.certificate)}


def cmd_member(args):
    D = _domain(args)
    m = complement.is_in_R(_fraction(D, args))
    return {
        "member": m.member,
        "certificate": None if m.certificate is None else encode_decomposition(m.certificate),
        "reason": m.reason,
    }


def cmd_val(args):
    D = _domain(args)
    res = complement.valuation(_fraction(D, args), certify=args.certify)
    out = {"value": res.value, "member": res.member}
    if res.unit_part_certificate is not None:
        out["unit_part_certificate"] = [encode_decomposition(c)
                                        for c in res.unit_part_certificate]
    return out


def cmd_classify(args):
    return encode_classification(complement.classify(_domain(args)))


def cmd_verify(args):
    obj = _load_json(args.cert)
    if isinstance(obj, dict) and "final_denominators" in obj:
        return {"valid": extension.verify_extension(decode_extension(obj))}
    if isinstance(obj, dict) and "certificate" in obj:
        obj = obj["certificate"]
    res = decompose.verify(decode_decomposition(obj))
    return {
        "valid": res.valid,
        "distinct": res.distinct,
        "sum": None if res.sum is None else encode_fraction(res.sum),
        "reason": res.reason,
    }


def cmd_extend(args):
    Q = make_domain("qx")
    cert = extension.reciprocal_in_DX(parse_element(Q, args.poly))
    out = encode_extension(cert)
    out["verified"] = extension.verify_extension(cert)
    return out


def cmd_search(args):
    D = _domain(args)
    target = parse_fraction(D, args.target)
    spec = search.SearchSpec(target, args.max_value, args.max_terms, not args.sets)
    res = search.exhaustive_search(spec, _max_states())
    return {
        "found": None if res.found is None else encode_decomposition(res.found),
        "states": res.states_explored,
        "bounds": {"max_value": args.max_value, "max_terms": args.max_terms,
                   "multisets": not args.sets},
        "verdict": res.verdict,
    }


def cmd_check(args):
    D = _domain(args)
    if args.units:
        rep = complement.d_intersect_R_check(D, args.bound)
        return {
            "domain": D.selector,
            "passed": rep.passed,
            "checked": rep.checked,
            "members": [encode_element(D, d) for d in rep.members],
            "counterexample": (None if rep.counterexample is None
                               else encode_element(D, rep.counterexample)),
        }
    rep = search.cross_check(D, args.bound, args.max_terms, _max_states())
    return {
        "domain": rep.domain,
        "bound": rep.bound,
        "max_terms": rep.max_terms,
        "fractions": rep.fractions,
        "certified": rep.certified,
        "bounded_consistent": rep.bounded_consistent,
        "hard_failures": [list(f) for f in rep.hard_failures],
        "ok": rep.ok,
    }


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="recip", description=__doc__.splitlines()[0])
    parser.add_argument("--json-in", metavar="FILE",
                        help="batch mode: JSON array of command objects")
    parser.add_argument("--output", "-o", metavar="PATH", help="write JSON here instead of stdout")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def value_args(p):
        p.add_argument("--domain", "-d", required=True, help="z, zi, fp:<p> or qx")
        p.add_argument("--value", help="fraction num/den")
        p.add_argument("--num")
        p.add_argument("--den")

    p = sub.add_parser("decompose", help="unit-fraction certificate for a fraction")
    value_args(p)
    p.add_argument("--method", default="euclid",
                   choices=["euclid", "greedy", "integer", "distinctify", "auto"])
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("split", help="certify alpha or its inverse")
    value_args(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("member", help="membership in R(D)")
    value_args(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("val", help="valuation in R(k[x])")
    value_args(p)
    p.add_argument("--certify", action="store_true", help="attach unit-part certificates")
    p.set_defaults(func=cmd_val)

    p = sub.add_parser("classify", help="Egyptian or DVR")
    p.add_argument("--domain", "-d", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="re-check a certificate JSON file ('-' for stdin)")
    p.add_argument("--cert", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="certificate for 1/g in R(Z[x]), g in Q[x]")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("search", help="bounded exhaustive search")
    p.add_argument("--domain", "-d", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--max-terms", type=int, required=True)
    p.add_argument("--sets", action="store_true", help="distinct denominators only")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", help="oracle cross-check, or D-intersect-R with --units")
    p.add_argument("--domain", "-d", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--max-terms", type=int, default=3)
    p.add_argument("--units", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def _argv_from_object(obj: dict) -> list[str]:
    if not isinstance(obj, dict) or "verb" not in obj:
        raise UsageError("batch entries must be objects with a 'verb' key")
    argv = [str(obj["verb"])]
    for key, val in obj.items():
        if key == "verb" or val is None or val is False:
            continue
        flag = "--" + key.replace("_", "-")
        argv.append(flag)
        if val is not True:
            argv.append(str(val))
    return argv


def _dispatch(parser, argv):
    args = parser.parse_args(argv)
    if args.verb is None:
        raise UsageError("missing command")
    return args.func(args)


def _emit_error(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": message, "kind": kind}), file=sys.stderr)
    return code


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.json_in:
            batch = _load_json(args.json_in)
            if not isinstance(batch, list):
                raise UsageError("--json-in expects a JSON array")
            result = [_dispatch(parser, _argv_from_object(obj)) for obj in batch]
        elif args.verb is None:
            raise UsageError("missing command")
        else:
            result = args.func(args)
    except (UsageError, EncodingError) as exc:
        return _emit_error("usage", str(exc), 2)
    except RecipError as exc:
        return _emit_error("math", str(exc), 1)
    text = json.dumps(result)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
