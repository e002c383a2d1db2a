"""Command-line entry point: ``coalqt {check,homology,verify,lqt}``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage
or parse errors, 3 when the resource guard refuses a run.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time

from . import lqt as lqt_mod
from . import verify as V
from .coalgebra import AxiomError, Coalgebra
from .complexes import COMPLEX_KINDS, build_complex, homology
from .io import CoalgebraFormatError, UnknownCoalgebraError, resolve
from .linalg import DifferentialError, RestrictionError

DEFAULT_CAP = 5_000_000
SUITES = ("homotopy", "exactness", "chainmaps", "hopf", "weyl", "complexes", "all")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class ResourceGuard(RuntimeError):
    pass


class UsageError(ValueError):
    pass


def _guard(words: int, cap: int, what: str):
    if words > cap:
        raise ResourceGuard(f"{what} needs about {words} basis words, above the cap of {cap} (raise --cap)")


def _stage(timings: dict, name: str, fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    timings[name] = round(time.perf_counter() - t0, 4)
    return out


def _descriptor(C: Coalgebra) -> dict:
    return {"name": C.name, "dim": C.dim, "basis": list(C.basis_names), "counital": C.counital}


# ---------------------------------------------------------------- commands


def cmd_check(args, run: dict) -> int:
    C = resolve(args.coalgebra)
    run["coalgebra"] = _descriptor(C)
    rep = _stage(run["timings"], "axioms", V.axioms_check, C)
    run["reports"].append(rep.to_dict())
    _emit_lines(args, rep.lines())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_homology(args, run: dict) -> int:
    if args.degree < 1:
        raise UsageError("the degree bound must be at least 1")
    C = resolve(args.coalgebra)
    run["coalgebra"] = _descriptor(C)
    _guard(C.dim ** (args.degree + 1), args.cap, f"{args.kind} up to degree {args.degree}")
    X = _stage(run["timings"], "build", build_complex, C, args.kind, args.degree + 1)
    H = _stage(run["timings"], "homology", homology, X)
    table = [{"degree": m, "dim": X.dim(m), "homology": H[m]} for m in H.degrees]
    run["complex"] = {"kind": args.kind, "name": X.name, "first_degree": X.lo}
    run["betti"] = table
    lines = [f"{X.name}", "degree  dim  H"]
    lines += [f"{r['degree']:>6}  {r['dim']:>3}  {r['homology']}" for r in table]
    lines.append("H = (" + ",".join(str(r["homology"]) for r in table) + ")")
    _emit_lines(args, lines)
    return EXIT_OK


def _matrix_size(C: Coalgebra) -> int | None:
    m = re.match(r"^matrix:(\d+)$", C.name)
    return int(m.group(1)) if m else None


def _suite_reports(suite: str, C: Coalgebra, args, timings: dict) -> list:
    D = args.max_degree
    reps = []

    def run(name, fn, *a):
        reps.append(_stage(timings, name, fn, *a))

    if suite in ("homotopy", "all"):
        run("bar homotopy", V.bar_homotopy_check, C, D)
        run("CE homotopy", V.ce_homotopy_check, C, D)
        run("comodule differentials", V.differential_comodule_check, C, D)
        run("comodules", V.comodule_check, C, min(D, 3))
    if suite in ("exactness", "all"):
        run("(t, N) exactness", V.tn_exactness_check, C, D)
        run("commutators", V.commutator_check, C, D)
    if suite in ("chainmaps", "all"):
        run("group algebra", V.perm_identities_check, min(D + 1, 5))
        run("eps chain maps", V.epsilon_chain_map_check, C, D)
        run("permutation equivariance", V.representation_commute_check, C, min(D, 4))
        run("bar DGA", V.bar_dga_check, C, D)
        run("CE splitting", V.ce_identity_check, C, D)
    if suite in ("hopf", "all"):
        run("shuffle product", V.shuffle_product_check, C, D)
        run("deconcatenation", V.deconcat_coproduct_check, C, D)
        run("words x permutations", lqt_mod.sigma_ad_check, min(C.dim, 2), min(D, 4), args.seed)
        run("primitives", lqt_mod.primitives_check, C, D)
    if suite in ("complexes", "all"):
        run("d^2", V.differential_squares_check, C, D)
        run("CE^sym cross-check", V.sym_ce_cross_check, C, D)
        run("CE^red", V.reduced_ce_check, C, D)
        run("basis change", V.basis_change_check, C, D, args.seed)
    if suite in ("weyl", "all"):
        n = args.n if args.n is not None else _matrix_size(C)
        if n is None:
            if suite == "weyl":
                raise UsageError("the weyl suite needs --n or a matrix:<n> coalgebra")
        else:
            max_m = args.max_m if args.max_m is not None else n
            _guard(n ** (2 * max_m) * n * n, args.cap, f"Weyl dimensions up to m = {max_m}")
            run("Weyl", lqt_mod.weyl_check, n, max_m)
    return reps


def cmd_verify(args, run: dict) -> int:
    if args.max_degree < 1:
        raise UsageError("--max-degree must be at least 1")
    C = resolve(args.coalgebra)
    run["coalgebra"] = _descriptor(C)
    if args.suite != "weyl":
        _guard(C.dim ** (args.max_degree + 1), args.cap, f"suite {args.suite} at degree {args.max_degree}")
    reps = _suite_reports(args.suite, C, args, run["timings"])
    lines = []
    for rep in reps:
        run["reports"].append(rep.to_dict())
        lines.append(f"== {rep.title}")
        lines.extend(rep.lines())
    ok = all(r.passed for r in reps)
    total = sum(len(r.results) for r in reps)
    bad = sum(len(r.failures) for r in reps)
    lines.append(f"{total - bad}/{total} identities hold")
    _emit_lines(args, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lqt(args, run: dict) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("lqt needs --n >= 1")
    if args.max_degree < 1:
        raise UsageError("--max-degree must be at least 1")
    C = resolve(args.coalgebra)
    run["coalgebra"] = _descriptor(C)
    D, n = args.max_degree, args.n
    _guard(max(C.dim ** (D + 1), math.comb(n * n * C.dim, D + 1)), args.cap,
           f"lqt at n = {n}, degree {D}")
    res = _stage(run["timings"], "lqt", lqt_mod.lqt_check, C, n, D)
    run["lqt"] = res.to_dict()
    lines = [f"gl_{n}^c({C.name}): H^Lie vs Lambda* HC[+1]",
             "degree  H^Lie  Lambda*HC[+1]  stable  agree"]
    for m, a, b, stable, agree in res.rows:
        lines.append(f"{m:>6}  {a:>5}  {b:>13}  {'yes' if stable else 'no':>6}  {'yes' if agree else 'no':>5}")
    lines.append("agreement in the stable range: " + ("yes" if res.passed else "NO"))
    _emit_lines(args, lines)
    return EXIT_OK if res.passed else EXIT_FAIL


# ---------------------------------------------------------------- plumbing


def _emit_lines(args, lines):
    if not args.json:
        for line in lines:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help=f"resource guard on ambient basis words (default {DEFAULT_CAP})")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized samples")

    p = argparse.ArgumentParser(prog="coalqt", description="Exact homology of coalgebra chain complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="check the coalgebra axioms")
    c.add_argument("coalgebra")

    h = sub.add_parser("homology", parents=[common], help="homology of one complex")
    h.add_argument("coalgebra")
    h.add_argument("kind", choices=COMPLEX_KINDS)
    h.add_argument("degree", type=int)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("coalgebra")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--max-degree", type=int, default=3)
    v.add_argument("--max-m", type=int, default=None)
    v.add_argument("--n", type=int, default=None)

    q = sub.add_parser("lqt", parents=[common], help="compare Lie homology with Lambda* HC[+1]")
    q.add_argument("coalgebra")
    q.add_argument("--n", type=int, default=None)
    q.add_argument("--max-degree", type=int, default=3)
    return p


COMMANDS = {"check": cmd_check, "homology": cmd_homology, "verify": cmd_verify, "lqt": cmd_lqt}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    run = {"command": argv, "reports": [], "timings": {}}
    try:
        code = COMMANDS[args.command](args, run)
    except (CoalgebraFormatError, UnknownCoalgebraError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
        run["error"] = str(exc)
    except ResourceGuard as exc:
        print(f"refused: {exc}", file=sys.stderr)
        code = EXIT_GUARD
        run["error"] = str(exc)
    except (AxiomError, DifferentialError, RestrictionError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        code = EXIT_FAIL
        run["error"] = str(exc)
    run["exit_code"] = code
    run["passed"] = code == EXIT_OK
    if args.json:
        print(json.dumps(run, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
