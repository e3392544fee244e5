"""Command-line front end.

Exit status: 0 success, 1 verification or classification failure, 2 usage
error (malformed input or a violated precondition).
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalan import brute_force_search, catalan_lift
from .commutant import I2, make_basis, normalize, parse_matrix
from .errors import ContractViolation
from .fermat import (
    EquationSpec,
    equation_holds,
    family_aigner,
    family_burnside,
    family_chien_meng,
    family_kaddoura,
    fermat_feasibility,
    lift_general,
    lift_uniform,
)
from .matpow import mat_pow_closed
from .quadratic import INFINITE, QuadInt, exponent, parse_quadint


class UsageError(Exception):
    pass


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        vals = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    if len(vals) != count:
        raise UsageError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    return vals


def _keyvals(text: str, keys: str, what: str) -> dict[str, int]:
    """Parse ``"n=3"`` / ``"m=7,n=5"`` / plain ``"3"`` / ``"7,5"``."""
    out = {}
    parts = text.split(",")
    if len(parts) != len(keys):
        raise UsageError(f"{what}: expected values for {', '.join(keys)}, got {text!r}")
    for key, part in zip(keys, parts):
        name, _, val = part.rpartition("=")
        if name and name.strip() != key:
            raise UsageError(f"{what}: expected {key}=..., got {part!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"{what}: {part!r} is not an integer")
    return out


def _basis(text: str):
    return make_basis(*_ints(text, 3, "--basis"))


class Emitter:
    def __init__(self, fmt: str, stream, err):
        self.fmt = fmt
        self.stream = stream
        self.err = err

    def emit(self, record: dict, text: str):
        if self.fmt == "json-lines":
            print(json.dumps(record), file=self.stream)
        else:
            print(text, file=self.stream)


# -- subcommands -------------------------------------------------------------------


def cmd_analyze(args, out: Emitter) -> int:
    basis = normalize(parse_matrix(args.matrix))
    rec = basis.to_record()
    rec["domain"] = basis.is_integral_domain
    rec["nilpotents"] = basis.has_nilpotents
    if basis.square:
        field = f"delta={basis.delta} is a square (k={basis.root}); C(A) has zero divisors"
    else:
        field = f"delta={basis.delta} = {basis.m}^2 * {basis.D}; C(A) is an integral domain in Q(sqrt({basis.D}))"
    out.emit(rec, f"basis {basis}\n{field}\ndomain={str(basis.is_integral_domain).lower()}")
    return 0


def cmd_exponent(args, out: Emitter) -> int:
    x = QuadInt(args.s, args.t, args.D)
    e = exponent(x)
    shown = "inf" if e == INFINITE else str(e)
    out.emit({"x": x.to_record(), "exponent": shown}, f"E({x}) = {shown}")
    return 0


def cmd_verify(args, out: Emitter) -> int:
    mats = {}
    for item in args.matrices:
        name, sep, lit = item.partition("=")
        if not sep or name not in ("X", "Y", "Z"):
            raise UsageError(f"expected X=[[..]], Y=[[..]] or Z=[[..]], got {item!r}")
        mats[name] = parse_matrix(lit)
    chosen = [o for o in (args.fermat, args.catalan, args.equation) if o is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --fermat, --catalan, --equation")
    if args.catalan is not None:
        e = _keyvals(args.catalan, "mn", "--catalan")
        spec = EquationSpec(1, -1, 1, e["m"], e["n"], 1)
        mats.setdefault("Z", I2)
    elif args.fermat is not None:
        spec = EquationSpec.fermat(_keyvals(args.fermat, "n", "--fermat")["n"])
    else:
        e = _keyvals(args.equation, "uvwijk", "--equation")
        spec = EquationSpec(**e)
    missing = {"X", "Y", "Z"} - set(mats)
    if missing:
        raise UsageError(f"missing matrices: {', '.join(sorted(missing))}")
    ok = equation_holds(spec, mats["X"], mats["Y"], mats["Z"])
    lhs = spec.u * mat_pow_closed(mats["X"], spec.i) + spec.v * mat_pow_closed(mats["Y"], spec.j)
    rec = {"ok": ok, **spec.to_record(), "lhs": str(lhs)}
    out.emit(rec, "OK" if ok else f"FAIL: u X^i + v Y^j = {lhs}")
    return 0 if ok else 1


def cmd_lift(args, out: Emitter) -> int:
    basis = _basis(args.basis)
    D = basis.D
    x = parse_quadint(args.x, D)
    y = parse_quadint(args.y, D)
    if args.kind == "catalan":
        if args.m is None or args.n is None:
            raise UsageError("lift catalan needs --m and --n")
        sol = catalan_lift(basis, x, y, args.m, args.n)
        out.emit(sol.to_record(), f"X={sol.X} Y={sol.Y} (X^{sol.m} - Y^{sol.n} = I)")
        return 0
    if args.z is None:
        raise UsageError(f"lift {args.kind} needs --z")
    z = parse_quadint(args.z, D)
    if args.kind == "general":
        if args.spec is None:
            raise UsageError("lift general needs --spec u,v,w,i,j,k")
        spec = EquationSpec(*_ints(args.spec, 6, "--spec"))
        triple = lift_general(basis, x, y, z, spec)
    else:
        if args.n is None:
            raise UsageError("lift uniform needs --n")
        u, v, w = _ints(args.coeffs, 3, "--coeffs")
        triple = lift_uniform(basis, x, y, z, args.n, u, v, w)
    out.emit(triple.to_record(), f"X={triple.X} Y={triple.Y} Z={triple.Z}")
    return 0


def cmd_families(args, out: Emitter) -> int:
    basis = _basis(args.basis) if args.basis else None
    name = args.name
    if name == "chien-meng":
        triple = family_chien_meng(basis or make_basis(1, 1, 1))
    elif name == "aigner":
        triple = family_aigner(basis or make_basis(1, 1, -2))
    elif name == "burnside":
        if args.k is None:
            raise UsageError("families burnside needs --k")
        triple = family_burnside(args.k, basis)
    else:
        if args.n is None:
            raise UsageError("families kaddoura needs --n")
        triple = family_kaddoura(args.r, args.s, basis or make_basis(1, -1, 1), args.n)
    out.emit(
        triple.to_record(),
        f"X={triple.X} Y={triple.Y} Z={triple.Z} (n={triple.spec.i}, basis {triple.basis})",
    )
    return 0


def cmd_feasibility(args, out: Emitter) -> int:
    verdict = fermat_feasibility(_basis(args.basis), args.n)
    text = f"{verdict.status.value} [{verdict.reason}]"
    if verdict.witness is not None:
        w = verdict.witness
        text += f"\nwitness X={w.X} Y={w.Y} Z={w.Z}"
    out.emit(verdict.to_record(), text)
    return 0


def cmd_search(args, out: Emitter) -> int:
    result = brute_force_search(args.entry_bound, args.max_exp, workers=args.workers)
    ordered = sorted(result.solutions, key=lambda s: (s.m, s.n, s.X, s.Y))
    for sol in ordered + result.violations:
        out.emit(sol.to_record(), f"{sol.tag.value}: X={sol.X} Y={sol.Y} m={sol.m} n={sol.n}"
                 + (" [mixed]" if sol.mixed else ""))
    n_bad = len(result.violations)
    print(f"{len(ordered)} solutions, {n_bad} classification violations", file=out.err)
    return 1 if n_bad else 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="m2zeq", description="Fermat and Catalan equations over 2x2 integer matrices"
    )
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="normalize A and classify C(A)")
    s.add_argument("matrix", help="[[a,b],[c,d]]")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("exponent", help="exponent of (s + t sqrt(D))/2")
    s.add_argument("s", type=int)
    s.add_argument("t", type=int)
    s.add_argument("D", type=int)
    s.set_defaults(func=cmd_exponent)

    s = sub.add_parser("verify", help="check an identity exactly")
    s.add_argument("--fermat", metavar="n=N")
    s.add_argument("--catalan", metavar="m=M,n=N")
    s.add_argument("--equation", metavar="u=..,v=..,w=..,i=..,j=..,k=..")
    s.add_argument("matrices", nargs="+", metavar="X=[[a,b],[c,d]]")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("lift", help="lift a scalar solution into C(A)")
    s.add_argument("kind", choices=("general", "uniform", "catalan"))
    s.add_argument("--basis", required=True, metavar="a,b,c")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--z")
    s.add_argument("--spec", metavar="u,v,w,i,j,k")
    s.add_argument("--coeffs", default="1,1,1", metavar="u,v,w")
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("families", help="emit a verified triple from a known family")
    s.add_argument("name", choices=("chien-meng", "burnside", "aigner", "kaddoura"))
    s.add_argument("--basis", metavar="a,b,c")
    s.add_argument("--k", type=int)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--s", type=int, default=0)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_families)

    s = sub.add_parser("feasibility", help="known solvability of X^n + Y^n = Z^n in C(A)")
    s.add_argument("--basis", required=True, metavar="a,b,c")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_feasibility)

    s = sub.add_parser("search", help="exhaustive Catalan search")
    s.add_argument("--entry-bound", type=int, required=True)
    s.add_argument("--max-exp", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Emitter(args.format, stdout, stderr)
    try:
        return args.func(args, out)
    except ContractViolation as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
