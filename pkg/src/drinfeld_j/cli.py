"""Command-line driver.

    drinfeld-j classgroup --curve elliptic
    drinfeld-j jtable --curve elliptic --prec 30 --out json
    drinfeld-j drinfeld --curve rational --ideal "(1)"
    drinfeld-j torsion --curve rational --modulus "(x)"
    drinfeld-j star --curve elliptic --ideal "(x, y + 2)"
    drinfeld-j verify --curve elliptic --suite all

Exit codes: 0 pass, 1 a check failed, 2 bad input, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

import sympy

from .errors import DrinfeldError, InputError, NumericError
from .fields import PolyFq
from .function_field import alternative_sign_representatives, load_curve
from .ideals import class_group, ideal_from_generators, unit_ideal
from .laurent import LaurentSeries

COMMANDS = ("classgroup", "jtable", "drinfeld", "torsion", "star", "verify")
SUITE_NAMES = ("all", "zeta", "ideal", "ore", "drinfeld")


# -- literals -------------------------------------------------------------------------

def parse_element(model, text):
    """An element of K from an expression in x and y (T is accepted for x)."""
    x, y = sympy.symbols("x y")
    try:
        expr = sympy.sympify(text, locals={"x": x, "y": y, "T": x})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise InputError(f"cannot parse {text!r}: {exc}") from exc
    num, den = sympy.fraction(sympy.together(expr))
    d = _poly_to_elem(model, den, x, y)
    if d.is_zero():
        raise InputError(f"denominator of {text!r} vanishes mod {model.p}")
    return _poly_to_elem(model, num, x, y) / d


def _poly_to_elem(model, expr, x, y):
    try:
        P = sympy.Poly(sympy.expand(expr), x, y)
    except sympy.PolynomialError as exc:
        raise InputError(f"{expr} is not a polynomial in x, y") from exc
    if model.kind == "rational" and P.degree(y) > 0:
        raise InputError("the rational model has no y")
    F = model.F
    p = model.p
    acc = model.zero()
    for (i, j), c in P.terms():
        c = sympy.Rational(c)
        if c.q % p == 0:
            raise InputError(f"coefficient {c} has p in its denominator")
        code = F.scalar(int(c.p) * pow(int(c.q), -1, p))
        if code == 0:
            continue
        term = model.elem(PolyFq(F, [0] * i + [code]), PolyFq(F))
        if j:
            term = term * model.y() ** j
        acc = acc + term
    return acc


def parse_ideal(model, text):
    """A fractional ideal from "(g1, g2, ...)"."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = _split_top(body)
    if not parts or not all(p.strip() for p in parts):
        raise InputError(f"malformed ideal literal {text!r}")
    gens = [parse_element(model, p) for p in parts]
    return ideal_from_generators(gens)


def _split_top(s):
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    out.append(cur)
    return out


# -- rendering --------------------------------------------------------------------------

def to_plain(obj):
    """JSON-ready structure; every series keeps its start exponent and precision."""
    if isinstance(obj, LaurentSeries):
        return obj.to_dict()
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return repr(obj)


def render_text(report):
    lines = [f"command: {report['command']}  curve: {report['config']['curve']}  prec: {report['config']['prec']}"]
    for s in report["summary"]:
        lines.append(s)
    for c in report["checks"]:
        lines.append(f"{'PASS' if c['pass'] else 'FAIL'}  {c['name']}")
    lines.append(f"time: {report['timing']:.2f}s")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------------------

def _check(name, passed, detail=None):
    return {"name": name, "pass": bool(passed), "detail": to_plain(detail)}


def cmd_classgroup(model, args, rng):
    G = class_group(model)
    if G.h == 1:
        line = f"Cl(A) trivial, h=1, h\u00b9={G.h_narrow}"
    else:
        line = "Cl(A) \u2245 " + " \u00d7 ".join(f"Z/{n}" for n in G.structure) + f", h={G.h}, h\u00b9={G.h_narrow}"
    checks = [_check("class number matches the L-polynomial count", G.h == G.expected)]
    return G.describe(), [line], checks


def cmd_jtable(model, args, rng):
    from .zeta import j_invariant, j_table
    T = j_table(model, args.prec)
    S2 = alternative_sign_representatives(model, rng)
    same = []
    for e in T.entries:
        other = j_invariant(e.ideal, args.prec, signs=S2)
        same.append((e.J - other.J).is_zero() and (e.jinv - other.jinv).truncate_rel(args.prec).is_zero())
    summary = [f"h={T.classes.h}, j-values pairwise distinct: {T.distinct()}"]
    for e in T.entries:
        tag = "infinity" if e.infinite else f"v(j)={int(e.j.val)}"
        summary.append(f"class {e.class_index}: {e.ideal}  {tag}")
    checks = [_check("pairwise distinct j-values", T.distinct()),
              _check(f"S-independence with S' = {list(S2.reps)}", all(same))]
    res = T.to_json()
    res["s_independence"] = {"S": list(S2.reps), "agree": same}
    return res, summary, checks


def _ideal_arg(model, args, default="(1)"):
    return parse_ideal(model, args.ideal or default)


def cmd_drinfeld(model, args, rng):
    from .drinfeld import (DrinfeldModule, carlitz_reference, j_from_module, sign_normalization_analysis,
                           verify_functional_equation)
    from .errors import UnsupportedInfinitePlace
    I = _ideal_arg(model, args)
    mod = DrinfeldModule.from_lattice(I, 3, args.prec)
    checks, summary = [], [f"lattice {I}, route {mod.route}, working precision {mod.work}"]
    fe = []
    for a in model.ring_generators():
        rep = verify_functional_equation(mod, a, 3)
        fe.append(rep)
        checks.append(_check(f"functional equation e(az) = rho_a(e(z)) for a = {a} through z^(q^3)", rep["pass"]))
    J, jinv, j = j_from_module(mod)
    res = {"module": mod.to_json(), "functional_equation": fe,
           "J": J, "j_inverse": jinv, "j": j}
    try:
        an = sign_normalization_analysis(mod)
        res["normalization"] = {"w": an["w"], "consistent": an["consistent"], "constraints": an["constraints"],
                                "normalized_rho": an["normalized_rho"]}
        checks.append(_check("sign normalization solvable", an["consistent"]))
        if model.kind == "rational" and I == unit_ideal(model):
            ref = carlitz_reference(model, args.prec)
            nm = an["module"]
            ok = nm.rho(model.x()) == ref.rho(model.x()) and all((a - b).is_zero() for a, b in zip(nm.c[:4], ref.c[:4]))
            checks.append(_check("normalized module equals the Carlitz module", ok))
    except UnsupportedInfinitePlace as exc:
        res["normalization"] = {"unsupported": str(exc)}
    if args.modulus:
        rows, ok = _torsion_rows(mod, model, args)
        res["torsion"] = rows
        checks.append(_check(f"rho_m kills e(m^-1 a / a) for m = {args.modulus}", ok))
    return res, summary, checks


def _torsion_rows(mod, model, args):
    from .drinfeld import torsion_check
    Mod = parse_ideal(model, args.modulus)
    rows = torsion_check(mod, Mod, args.prec)
    return rows, all(r["vanishes"] for r in rows)


def cmd_torsion(model, args, rng):
    from .drinfeld import DrinfeldModule, carlitz_reduction_checks
    I = _ideal_arg(model, args)
    if not args.modulus:
        args.modulus = "(x)"
    mod = DrinfeldModule.from_lattice(I, 3, args.prec)
    rows, ok = _torsion_rows(mod, model, args)
    checks = [_check(f"rho_m kills e(m^-1 a / a) for m = {args.modulus}", ok)]
    res = {"lattice": repr(I), "modulus": args.modulus, "rows": rows}
    if model.kind == "rational":
        F = model.F
        m = parse_ideal(model, args.modulus).is_principal()
        P = PolyFq(F, (1, 0, 1))
        red = carlitz_reduction_checks(model, P, m.u)
        res["reduction"] = red
        checks.append(_check("Carlitz reduction: rho_P = tau^deg P mod P, reduced rho_m separable", red["pass"]))
    return res, [f"{len(rows)} torsion representatives of m^-1 a / a"], checks


def cmd_star(model, args, rng):
    from .checks import first_nonprincipal_prime
    from .drinfeld import DrinfeldModule, intertwining_residual, star_action
    from .zeta import j_table
    G = class_group(model)
    if args.ideal:
        b = parse_ideal(model, args.ideal)
    else:
        b = first_nonprincipal_prime(model, G) or ideal_from_generators([model.x()])
    T = j_table(model, args.prec, table=G)
    perm, rows, ok_all, inter = [], [], True, True
    for k, R in enumerate(G.reps):
        mod = DrinfeldModule.from_lattice(R, 3, args.prec)
        iso, image = star_action(mod, b)
        inter = inter and all(intertwining_residual(iso, image, a).is_zero() for a in model.ring_generators())
        J = image.J()
        hits = [e.class_index for e in T.entries if (J - e.J).truncate(args.prec).is_zero()]
        target = G.index(b.inverse() * R)
        ok = hits == [target]
        ok_all = ok_all and ok
        perm.append(hits[0] if len(hits) == 1 else None)
        rows.append({"class": k, "image_class_by_j": hits, "class_of_b_inv_a": target, "iso_degree": iso.degree()})
    checks = [_check("intertwining rho_b rho_a = psi_a rho_b", inter),
              _check("star action permutes the j-table as multiplication by [b]^-1", ok_all)]
    return {"b": repr(b), "rows": rows, "permutation": perm}, [f"b = {b}, permutation {perm}"], checks


def cmd_verify(model, args, rng):
    from .checks import run_suite
    res = run_suite(args.suite, model, args.prec, args.seed)
    checks = [_check(f"[{s}] {c.name}", c.passed, c.detail) for s, c in res]
    n_bad = sum(not c["pass"] for c in checks)
    return {"suite": args.suite, "failures": n_bad}, [f"suite {args.suite}: {len(checks) - n_bad}/{len(checks)} passed"], checks


HANDLERS = {"classgroup": cmd_classgroup, "jtable": cmd_jtable, "drinfeld": cmd_drinfeld,
            "torsion": cmd_torsion, "star": cmd_star, "verify": cmd_verify}


# -- entry point ------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="drinfeld-j", description="Rank-one Drinfeld j-invariants over function fields")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--curve", default="elliptic", help="fixture name (rational, elliptic, inert) or JSON file")
    ap.add_argument("--prec", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", choices=("text", "json"), default="text")
    ap.add_argument("--ideal")
    ap.add_argument("--modulus")
    ap.add_argument("--suite", choices=SUITE_NAMES, default="all")
    return ap


def run(argv):
    """(report, exit code); the report is None when the input was rejected."""
    args = build_parser().parse_args(argv)
    if args.prec < 8:
        raise InputError("--prec must be >= 8")
    model = load_curve(args.curve)
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    results, summary, checks = HANDLERS[args.command](model, args, rng)
    report = {
        "command": args.command,
        "config": {"curve": args.curve, "prec": args.prec, "seed": args.seed, "out": args.out,
                   "ideal": args.ideal, "modulus": args.modulus, "suite": args.suite,
                   "model": model.describe(), "T": "x"},
        "summary": summary,
        "checks": checks,
        "results": to_plain(results),
        "timing": time.perf_counter() - t0,
    }
    return report, (0 if all(c["pass"] for c in checks) else 1)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, code = run(argv)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except DrinfeldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if report["config"]["out"] == "json":
        print(json.dumps(report, indent=1, sort_keys=True))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
