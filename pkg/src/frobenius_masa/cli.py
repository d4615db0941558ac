"""Command-line front end.

Exit codes: 0 success, 1 failed verification checks, 2 malformed input,
3 mathematical precondition failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import CatalogError, build, list_entries
from .jsonio import InputError, dump, read_algebra, read_generators, read_matrix, write_json
from .lie import (
    LieError,
    derivation_algebra,
    frobenius_decide,
    semidirect_sum,
)
from .linalg import LinAlgError, Matrix, normalizer_of_span
from .masa import MasaError, is_masa, is_nilpotent_matrix, kravchuk_signature, nilpotency_class
from .nonderog import NonderogError, classify_G_phi, eigen_signature, jordanize
from .poly import PolyError
from .scalars import ScalarError, encode_scalar
from .verify import SUITES, emit_report, run_suite

MATH_ERRORS = (NonderogError, LieError, MasaError, LinAlgError, CatalogError, ScalarError,
               PolyError, ArithmeticError)


def _out(text):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _jordan_json(res):
    return {
        "J": res.J.to_json(),
        "P": res.P.to_json(),
        "detP": encode_scalar(res.detP()),
        "convention": res.convention,
        "blocks": [
            {"case": b.tag, "size": b.size, "start": b.start + 1,
             "eigenvalue": ([encode_scalar(x) for x in b.eigenvalue]
                            if isinstance(b.eigenvalue, tuple) else encode_scalar(b.eigenvalue))}
            for b in res.blocks
        ],
    }


def cmd_classify(args):
    M = read_matrix(args.matrix)
    label = classify_G_phi(M)
    if not args.json:
        _out(str(label))
        return 0
    out = label.to_json()
    sig = eigen_signature(M)
    out["signature"] = sig.to_json()
    try:
        jr = jordanize(M)
    except NonderogError as exc:
        out.update({"J": None, "P": None, "detP": None, "jordan_error": str(exc)})
    else:
        j = _jordan_json(jr)
        out.update({"J": j["J"], "P": j["P"], "detP": j["detP"], "convention": j["convention"],
                    "jordan_blocks": j["blocks"]})
    _out(dump(out))
    return 0


def cmd_jordanize(args):
    M = read_matrix(args.matrix)
    res = jordanize(M)
    rep = _jordan_json(res)
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        write_json(d / "J.json", rep["J"])
        write_json(d / "P.json", rep["P"])
    report = {"detP": rep["detP"], "convention": rep["convention"], "blocks": rep["blocks"],
              "label": str(classify_G_phi(M))}
    if not args.out:
        report.update({"J": rep["J"], "P": rep["P"]})
    _out(dump(report))
    return 0


def cmd_frobenius(args):
    g, _ = read_algebra(args.algebra)
    v = frobenius_decide(g)
    out = {"verdict": v.describe(), "dim": g.dim}
    if v.frobenius:
        out["certificate"] = [encode_scalar(x) for x in v.certificate]
        out["pfaffian_at_certificate"] = encode_scalar(v.pfaffian_at_certificate)
    elif g.dim % 2:
        out["reason"] = "odd dimension"
    else:
        out["reason"] = "Pfaffian identically zero"
    if args.json:
        _out(dump(out))
    else:
        line = out["verdict"]
        if v.frobenius:
            line += "; certificate alpha = (" + ", ".join(out["certificate"]) + ")"
        else:
            line += f", {out['reason']}"
        _out(line)
    return 0


def cmd_masa(args):
    mats, n = read_generators(args.generators)
    out = {"n": n, "ambient": args.ambient, "is_masa": is_masa(mats, args.ambient)}
    if all(is_nilpotent_matrix(m) for m in mats):
        try:
            k = kravchuk_signature(mats)
            out["kravchuk"] = list(k.as_tuple())
            out["class"] = nilpotency_class(mats)
        except MasaError as exc:
            out["kravchuk"] = None
            out["note"] = str(exc)
    _out(dump(out))
    return 0


def cmd_derivations(args):
    g, gens = read_algebra(args.algebra)
    if args.generators:
        gens, _ = read_generators(args.generators)
    D = derivation_algebra(g)
    out = {"dim": g.dim, "der_dim": D.dim}
    if gens:
        n = gens[0].rows
        if not semidirect_sum(gens, n).structure_equal(g):
            raise LieError("generators do not reproduce the given bracket table")
        N = normalizer_of_span(gens)
        out["normalizer_dim"] = N.dim
        out["normalizer_basis"] = [Matrix.from_flat(v, n).to_json() for v in N.basis]
    else:
        out["normalizer_dim"] = None
        out["note"] = "no generators given; normalizer component needs the split form"
    _out(dump(out))
    return 0


def _parse_params(pairs):
    params = {}
    for p in pairs or []:
        if "=" not in p:
            raise InputError(f"--param expects key=value, got {p!r}")
        k, v = p.split("=", 1)
        v = v.strip()
        if v.lower() in ("true", "false"):
            params[k.strip()] = v.lower() == "true"
            continue
        try:
            params[k.strip()] = int(v)
        except ValueError:
            params[k.strip()] = v
    return params


def cmd_catalog(args):
    if args.action == "list":
        if args.json:
            _out(dump([{"name": n, "parameters": p, "summary": s} for n, p, s in list_entries()]))
        else:
            for n, p, s in list_entries():
                _out(f"{n:<10} {p:<45} {s}")
        return 0
    if not args.name:
        raise InputError("catalog show needs a name")
    e = build(args.name, _parse_params(args.param))
    _out(dump(e.to_json()))
    return 0


def cmd_verify(args):
    rep = run_suite(args.suite)
    sys.stdout.write(emit_report(rep, args.format).decode())
    return rep.exit_code


def make_parser():
    ap = argparse.ArgumentParser(prog="frobenius-masa",
                                 description="2-solvable Frobenius Lie algebras and MASAs, exactly")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="label of K[M] ⋉ K^n for nonderogatory M")
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("jordanize", help="exact real Jordan form P^-1 M P = J")
    p.add_argument("--matrix", required=True)
    p.add_argument("--out", help="directory for J.json and P.json")
    p.set_defaults(func=cmd_jordanize)

    p = sub.add_parser("frobenius", help="decide whether a Lie algebra is Frobenius")
    p.add_argument("--algebra", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("masa", help="maximality, Kravchuk signature and class")
    p.add_argument("--generators", required=True)
    p.add_argument("--ambient", choices=("gl", "sl"), default="gl")
    p.set_defaults(func=cmd_masa)

    p = sub.add_parser("derivations", help="dimension of Der and the normalizer of B")
    p.add_argument("--algebra", required=True)
    p.add_argument("--generators", help="matrix-set JSON of B, if not inside the algebra file")
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("catalog", help="browse named algebras")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-paper", help="run the verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except MATH_ERRORS as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
