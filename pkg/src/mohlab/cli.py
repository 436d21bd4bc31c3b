"""The ``mohlab`` command.

Every subcommand maps onto one library operation and prints either
plain text or a JSON envelope ``{"command": ..., ...}``.  Exit codes:
0 success, 1 verification failure or nothing found, 2 usage error.
"""

import argparse
import json
import sys

from mohlab.errors import (
    EmptyGeneratorList,
    IdentityFailed,
    MohlabError,
    NoSolutionWithinBound,
    NotFoundWithinBound,
)
from mohlab.field import field_for, is_prime
from mohlab.lab import (
    CHAR0_TEXT,
    CHAR2_TEXT,
    CHAR3_TEXT,
    lower_bound,
    moh_generators,
    sally_reduction_check,
    verify_minimal_generation,
)
from mohlab.mora import artinian_length, is_standard_basis, minimalize_monomials
from mohlab.mora import mora_normal_form, standard_basis
from mohlab.param import (
    MohParams,
    certified_vr,
    complete_tail,
    default_tail_bound,
    evaluate,
    vector_to_poly,
)
from mohlab.poly import Ring, format_monomial, parse_poly, spoly
from mohlab.semigroup import NumericalSemigroup, factorizations
from mohlab.sigma import SigmaContext, sigma_order_and_split, w_basis

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
VERIFY_ALL_CHARS = (0, 2, 3, 5, 7)
FIXTURE_TEXT = {**CHAR0_TEXT, **CHAR2_TEXT, **CHAR3_TEXT}


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _characteristic(text):
    try:
        c = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"characteristic must be 0 or a prime, got {text!r}")
    if c != 0 and not is_prime(c):
        raise argparse.ArgumentTypeError(f"characteristic must be 0 or a prime, got {c}")
    return c


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mohlab",
        description="Exact computations for Moh's prime ideals (n=3, lambda=25 by default).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=_characteristic, default=0, help="0 or a prime p")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--n", type=int, default=3)
    common.add_argument("--lambda", dest="lam", type=int, default=25)

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("factor", parents=[common], help="factorizations of r in a semigroup")
    p.add_argument("--gens", type=_int_list, required=True)
    p.add_argument("--value", type=int, required=True)

    p = sub.add_parser("wbasis", parents=[common], help="monomial basis of W_r, descending in ds")
    p.add_argument("--gens", type=_int_list)
    p.add_argument("--value", type=int, required=True)

    p = sub.add_parser("vr", parents=[common], help="upper bound and certified part of V_r")
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--max-sord", type=int)

    p = sub.add_parser("tail", parents=[common], help="complete a sigma-form to a kernel element")
    p.add_argument("--poly", required=True)
    p.add_argument("--max-sord", type=int)

    p = sub.add_parser("eval", parents=[common], help="image of a polynomial under rho")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("nf", parents=[common], help="Mora normal form with standard representation")
    p.add_argument("--poly", required=True)
    p.add_argument("--against", required=True)

    p = sub.add_parser("spoly", parents=[common], help="S-polynomial of two polynomials")
    p.add_argument("--poly")
    p.add_argument("--against", required=True)

    p = sub.add_parser("std", parents=[common], help="standard basis by Mora-Buchberger completion")
    p.add_argument("--against")

    p = sub.add_parser("stdcheck", parents=[common], help="Buchberger criterion with Mora remainders")
    p.add_argument("--against")

    p = sub.add_parser("length", parents=[common], help="length of R/(monomial ideal)")
    p.add_argument("--against", required=True, help="comma-separated monomials")
    p.add_argument("--vars", help="variables of the quotient ring (default: those that occur)")

    p = sub.add_parser("lowerbound", parents=[common], help="sigma-order lower bound for mu")
    p.add_argument("--max-sord", type=int)

    p = sub.add_parser("verify", parents=[common], help="certify minimal generation of a fixture")
    p.add_argument("--all", action="store_true", help=f"characteristics {VERIFY_ALL_CHARS}")

    sub.add_parser("sally", parents=[common], help="mod-p identities between fixtures (p = 2, 3)")
    return parser


# -- helpers ---------------------------------------------------------------


def _params(args):
    try:
        return MohParams(args.n, args.lam, field_for(args.char))
    except MohlabError as exc:
        raise UsageError(str(exc))


def _ring(args):
    return Ring(3, field_for(args.char))


def _poly(ring, text):
    text = text.strip()
    if text in FIXTURE_TEXT:
        text = FIXTURE_TEXT[text]
    return parse_poly(text, ring.nvars, ring.field, ring.names)


def _poly_list(ring, text):
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError("empty polynomial list")
    return [_poly(ring, t) for t in items]


def _default_gens(args, ring):
    if args.against:
        return _poly_list(ring, args.against)
    return moh_generators(args.char).generators


def _emit(args, payload, lines):
    if args.format == "json":
        print(json.dumps({"command": args.command, **payload}, indent=2))
    else:
        for line in lines:
            print(line)


def _mono(alpha, names=("x", "y", "z")):
    return format_monomial(alpha, list(names))


# -- commands --------------------------------------------------------------


def cmd_factor(args):
    S = NumericalSemigroup(args.gens)
    facs = factorizations(S, args.value)
    _emit(
        args,
        {"gens": list(S.generators), "value": args.value, "factorizations": [list(a) for a in facs]},
        [f"{len(facs)} factorization(s) of {args.value} in <{','.join(map(str, S.generators))}>"]
        + [" ".join(map(str, a)) for a in facs],
    )
    return EXIT_OK


def cmd_wbasis(args):
    gens = args.gens or [args.n, args.n + 1, args.n + 2]
    ctx = SigmaContext(gens)
    names = [f"x{i + 1}" for i in range(len(gens))] if len(gens) != 3 else ["x", "y", "z"]
    monos = w_basis(ctx, args.value)
    texts = [_mono(a, names) for a in monos]
    _emit(args, {"weights": list(gens), "value": args.value, "monomials": texts},
          [f"W_{args.value}: " + (", ".join(texts) if texts else "0")])
    return EXIT_OK


def cmd_vr(args):
    mp = _params(args)
    rep = certified_vr(mp, args.value, args.max_sord)
    upper = [str(vector_to_poly(mp.ring, rep.monomials, v)) for v in rep.upper]
    certs = [str(c.f) for c in rep.certificates]
    payload = {
        "value": args.value,
        "monomials": [_mono(a) for a in rep.monomials],
        "upper": [[str(c) for c in v] for v in rep.upper],
        "upper_polys": upper,
        "dim_upper": rep.dim_upper,
        "dim_certified": rep.dim_certified,
        "certificates": certs,
    }
    lines = [
        f"W_{args.value} basis: " + ", ".join(payload["monomials"]),
        f"dim V_{args.value} in [{rep.dim_certified}, {rep.dim_upper}]",
    ]
    lines += [f"upper: {p}" for p in upper]
    lines += [f"certificate: {c}" for c in certs]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_tail(args):
    mp = _params(args)
    g = _poly(mp.ring, args.poly)
    r = mp.ctx.sord(g)
    bound = args.max_sord if args.max_sord is not None else default_tail_bound(r)
    try:
        h = complete_tail(mp, g, bound)
    except NoSolutionWithinBound as exc:
        _emit(args, {"sigma_form": str(g), "max_sord": bound, "tail": None, "reason": str(exc)},
              [f"no tail up to sigma-order {bound}: {exc}"])
        return EXIT_FAIL
    f = g + h
    _emit(
        args,
        {"sigma_form": str(g), "sord": r, "max_sord": bound, "tail": str(h), "kernel_element": str(f)},
        [f"tail: {h}", f"kernel element: {f}"],
    )
    return EXIT_OK


def cmd_eval(args):
    mp = _params(args)
    f = _poly(mp.ring, args.poly)
    img = evaluate(mp.parametrization(), f)
    split = sigma_order_and_split(mp.ctx, f) if f else None
    payload = {"poly": str(f), "image": str(img), "ord_t": img.order() if img else None,
               "sord": split.sord if split else None}
    _emit(args, payload, [f"rho({f}) = {img}"])
    return EXIT_OK


def cmd_nf(args):
    ring = _ring(args)
    f = _poly(ring, args.poly)
    G = _poly_list(ring, args.against)
    tr = mora_normal_form(f, G)
    labels = [t.strip() for t in args.against.split(",") if t.strip()]
    quotients = [{"index": i, "generator": labels[i], "quotient": str(a)} for i, a in tr.quotients]
    steps = [
        {"divisor": s.divisor, "monomial": _mono(s.quotient[0]), "coefficient": str(s.quotient[1]),
         "added": s.added}
        for s in tr.steps
    ]
    payload = {
        "poly": str(f),
        "remainder": str(tr.remainder),
        "u": str(tr.u),
        "quotients": quotients,
        "steps": steps,
        "extended_set": [str(e) for e in tr.extended_set],
        "identity_ok": tr.is_valid(),
    }
    rhs = " + ".join(f"({q['quotient']})*{q['generator']}" for q in quotients) or "0"
    lines = [
        f"remainder: {tr.remainder}",
        f"u: {tr.u}",
        f"u*f = {rhs} + remainder",
        f"steps: {len(steps)}, appended: {len(tr.extended_set)}, identity verified: {tr.is_valid()}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if tr.is_valid() else EXIT_FAIL


def cmd_spoly(args):
    ring = _ring(args)
    polys = ([_poly(ring, args.poly)] if args.poly else []) + _poly_list(ring, args.against)
    if len(polys) != 2:
        raise UsageError("spoly needs exactly two polynomials")
    s = spoly(*polys)
    _emit(args, {"spoly": str(s)}, [str(s)])
    return EXIT_OK


def cmd_std(args):
    ring = _ring(args)
    sb = standard_basis(_default_gens(args, ring))
    lead = [_mono(m) for m in sb.leading_ideal()]
    _emit(
        args,
        {"elements": [str(g) for g in sb.elements], "added": len(sb.elements) - len(sb.source_ideal_generators),
         "leading_ideal": lead},
        [str(g) for g in sb.elements] + ["leading ideal: (" + ", ".join(lead) + ")"],
    )
    return EXIT_OK


def cmd_stdcheck(args):
    ring = _ring(args)
    check = is_standard_basis(_default_gens(args, ring))
    pairs = [{"i": p.i, "j": p.j, "remainder": str(p.remainder)} for p in check.pairs]
    _emit(
        args,
        {"standard_basis": check.ok, "pairs": pairs},
        [f"S({p['i']},{p['j']}) -> {p['remainder']}" for p in pairs]
        + [f"standard basis: {'yes' if check.ok else 'no'}"],
    )
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_length(args):
    ring = _ring(args)
    monos = _poly_list(ring, args.against)
    if any(not m.is_monomial() for m in monos):
        raise UsageError("length expects monomials")
    exps = [m.lm() for m in monos]
    if args.vars:
        keep = [ring.names.index(v.strip()) for v in args.vars.split(",") if v.strip() in ring.names]
        if len(keep) != len([v for v in args.vars.split(",") if v.strip()]):
            raise UsageError(f"unknown variable in --vars {args.vars!r}")
    else:
        keep = [i for i in range(ring.nvars) if any(e[i] for e in exps)]
    if any(e[i] for e in exps for i in range(ring.nvars) if i not in keep):
        raise UsageError("monomials use variables outside --vars")
    restricted = minimalize_monomials([tuple(e[i] for i in keep) for e in exps])
    value = artinian_length(restricted, len(keep))
    _emit(args, {"variables": [ring.names[i] for i in keep], "length": value}, [str(value)])
    return EXIT_OK


def cmd_lowerbound(args):
    mp = _params(args)
    lb = lower_bound(mp)
    per_r = {str(r): {"dim_upper": rep.dim_upper, "dim_certified": rep.dim_certified}
             for r, rep in lb.per_r.items()}
    lines = [f"s = {lb.s} ({'exact' if lb.s_exact else 'not certified'}), xi = {lb.xi}"]
    lines += [f"V_{r}: dim in [{d['dim_certified']}, {d['dim_upper']}]" for r, d in per_r.items()]
    lines.append(f"mu >= {lb.bound}")
    _emit(args, {"s": lb.s, "xi": lb.xi, "s_exact": lb.s_exact, "bound": lb.bound, "per_r": per_r,
                 "witness": str(lb.witness.f)}, lines)
    return EXIT_OK


def _certificate_lines(data):
    lines = [f"characteristic {data['characteristic']}: {data['verdict']}"]
    for g in data["generators"]:
        lines.append(f"  generator {g}")
    lines.append(f"  kernel membership: {data['kernel_ok']}")
    lines.append(
        f"  lengths: ideal side {data['lengths']['ideal_side']}, valuation side {data['lengths']['valuation_side']}"
    )
    dims = ", ".join(f"V_{r}={d['dim_certified']}" for r, d in data["per_r"].items())
    lines.append(f"  lower bound {data['lower_bound']} from s={data['s']} ({dims})")
    for ob in data["obstructions"]:
        lines.append(f"  {ob['generator']} not in the others: they lie in {ob['prime']}, {ob['witness']} does not")
    lines.append(f"  mu = {data['mu']}")
    for reason in data["reasons"]:
        lines.append(f"  reason: {reason}")
    return lines


def cmd_verify(args):
    if (args.n, args.lam) != (3, 25):
        raise UsageError("fixtures exist only for n=3, lambda=25")
    chars = VERIFY_ALL_CHARS if args.all else (args.char,)
    results = [verify_minimal_generation(moh_generators(c)).to_json() for c in chars]
    ok = all(r["verdict"] == "pass" for r in results)
    payload = {"results": results} if args.all else {"result": results[0]}
    lines = []
    for r in results:
        lines += _certificate_lines(r)
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sally(args):
    if args.char not in (2, 3):
        raise UsageError("sally needs --char 2 or --char 3")
    try:
        verified = sally_reduction_check(args.char)
    except IdentityFailed as exc:
        _emit(args, {"characteristic": args.char, "verified": [], "failed": str(exc)}, [f"FAILED: {exc}"])
        return EXIT_FAIL
    _emit(args, {"characteristic": args.char, "verified": verified},
          [f"verified mod {args.char}: {v}" for v in verified])
    return EXIT_OK


COMMANDS = {
    "factor": cmd_factor,
    "wbasis": cmd_wbasis,
    "vr": cmd_vr,
    "tail": cmd_tail,
    "eval": cmd_eval,
    "nf": cmd_nf,
    "spoly": cmd_spoly,
    "std": cmd_std,
    "stdcheck": cmd_stdcheck,
    "length": cmd_length,
    "lowerbound": cmd_lowerbound,
    "verify": cmd_verify,
    "sally": cmd_sally,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, EmptyGeneratorList, ValueError) as exc:
        print(f"mohlab {args.command}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except NotFoundWithinBound as exc:
        print(f"mohlab {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except MohlabError as exc:
        print(f"mohlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
