"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check fails or a
requested condition cannot be met, 2 for usage and input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import ConditionUnsolvable, InvalidPhi, NotAUnit, OddUnitaryError, ParseError
from .matrix import Matrix, inverse, word_product
from .report import Report
from .rings import make_ring, ring_from_spec
from .space import SpaceConfig, anti_hermitian_check, standard_phi
from .transvections import congruent_mod_Lmax, isometry_check
from .vaserstein import (
    VVector,
    build_L,
    build_L_star,
    condition_D,
    condition_E,
    conj_L_to_transvection,
    conj_Lstar_to_transvection,
    factor_L,
    factor_L_star,
    solve_condition_D,
    transvection_to_vaserstein,
    zero_products,
)

CHECKS = ("all", "isometry", "congruence", "conditions", "factorization", "conjugation")


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- instances -----------------------------------------------------------------------


def _phi_from_flag(ring, n: int, flag: str):
    if flag in ("skew", "skew-standard"):
        return standard_phi(ring, n, "skew")
    if flag == "identity":
        return standard_phi(ring, n, "identity")
    if flag.startswith("file:"):
        try:
            data = json.loads(Path(flag[5:]).read_text())
            phi = Matrix(ring, [[ring.from_json(x) for x in row] for row in data["phi"]])
            if data.get("phi_inv") is not None:
                phi_inv = Matrix(ring, [[ring.from_json(x) for x in row] for row in data["phi_inv"]])
            else:
                phi_inv = inverse(phi)
        except (OSError, KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, OddUnitaryError):
                raise
            raise ParseError(f"cannot read phi from {flag[5:]}: {exc}") from None
        except NotAUnit:
            raise InvalidPhi("phi is not invertible") from None
        return phi, phi_inv
    raise UsageError(f"unknown --phi value {flag!r}")


def _validated(cfg: SpaceConfig) -> SpaceConfig:
    report = anti_hermitian_check(cfg)
    if not report.ok:
        raise InvalidPhi("; ".join(c.line() for c in report.failures()))
    return cfg


def load_instance(path: str) -> tuple[SpaceConfig, VVector | None, int | None]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "cfg" not in data:
        raise ParseError(f"{path} has no 'cfg' entry")
    cfg = _validated(SpaceConfig.from_json(data["cfg"]))
    v = VVector.from_json(cfg, data["v"]) if data.get("v") is not None else None
    if v is not None and len(v) != cfg.dim - 1:
        raise ParseError(f"v has {len(v)} entries, expected {cfg.dim - 1}")
    return cfg, v, data.get("seed")


def instance_json(cfg: SpaceConfig, v, seed) -> dict:
    out = {"cfg": cfg.to_json()}
    if v is not None:
        out["v"] = [x.to_json() for x in v]
    if seed is not None:
        out["seed"] = seed
    return out


# -- checks --------------------------------------------------------------------------


def _fmt(M: Matrix) -> str:
    return json.dumps(M.tolist())


def verify(cfg: SpaceConfig, v, check: str = "all") -> Report:
    """Run the requested identity checks on one instance."""
    if check not in CHECKS:
        raise UsageError(f"unknown check {check!r}")
    want = set(CHECKS[1:]) if check == "all" else {check}
    v = tuple(v)
    report = Report(f"instance m={cfg.m}, n={cfg.n} over {cfg.ring}, v={[str(x) for x in v]}")
    L, Ls = build_L(cfg, v), build_L_star(cfg, v)
    if "conditions" in want:
        report.add("condition D", condition_D(cfg, v))
        report.add("condition E", condition_E(cfg, v))
    if "isometry" in want:
        report.add("L(v) is an isometry", isometry_check(cfg, L), _fmt(L))
        report.add("L(v)* is an isometry", isometry_check(cfg, Ls), _fmt(Ls))
    if "congruence" in want:
        report.add("L(v) congruent to I mod L_max", congruent_mod_Lmax(cfg, L), _fmt(L))
        report.add("L(v)* congruent to I mod L_max", congruent_mod_Lmax(cfg, Ls), _fmt(Ls))
    if "factorization" in want:
        s, crho = zero_products(cfg, v)
        report.add("bar(v) mu d^t = 0 and c rho = 0",
                   s.is_zero() and all(x.is_zero() for x in crho), f"{s}, {[str(x) for x in crho]}")
        for name, word, M in (("L(v)", factor_L(cfg, v), L), ("L(v)*", factor_L_star(cfg, v), Ls)):
            prod = word_product(word)
            report.add(f"word product equals {name}", prod == M, _fmt(prod))
            report.add(f"word for {name} has length <= {5 * (cfg.dim - 1)}",
                       len(word) <= 5 * (cfg.dim - 1), len(word))
    if "conjugation" in want:
        P = cfg.P
        report.add("P P^t = I", P @ P.T == Matrix.identity(cfg.ring, cfg.dim))
        for name, M, res in (("L(v)", L, conj_L_to_transvection(cfg, v)),
                             ("L(v)*", Ls, conj_Lstar_to_transvection(cfg, v))):
            lhs = P.T @ M @ P
            report.add(f"P^t {name} P = {res.kind}(u, a)", lhs == res.matrix(cfg), _fmt(lhs))
            back = transvection_to_vaserstein(cfg, res.kind, res.u, res.a, require_unitary=False)
            report.add(f"{res.kind} decomposes back to v", tuple(back) == v,
                       [str(x) for x in back])
    return report


# -- commands ------------------------------------------------------------------------


def cmd_gen(args) -> int:
    ring = ring_from_spec(args.ring, args.involution)
    cfg = _validated(SpaceConfig(ring, args.m, args.n, *_phi_from_flag(ring, args.n, args.phi)))
    rng = random.Random(args.seed)
    v = tuple(ring.random(rng, 5) for _ in range(cfg.dim - 1))
    if args.force_D:
        v = tuple(solve_condition_D(cfg, v))
    _emit(_dump(instance_json(cfg, v, args.seed)), args.out)
    return 0


def _need_v(cfg, v):
    if v is None:
        raise ParseError("the instance has no vector 'v'")
    return tuple(v)


def cmd_verify(args) -> int:
    cfg, v, _ = load_instance(args.input)
    report = verify(cfg, _need_v(cfg, v), args.check)
    _emit(report.render() + "\n", None)
    if args.out:
        Path(args.out).write_text(_dump(report.to_json()))
    return 0 if report.ok else 1


def cmd_factor(args) -> int:
    cfg, v, _ = load_instance(args.input)
    v = _need_v(cfg, v)
    words = {"L": factor_L(cfg, v), "L_star": factor_L_star(cfg, v)}
    ok = (word_product(words["L"]) == build_L(cfg, v)
          and word_product(words["L_star"]) == build_L_star(cfg, v))
    _emit(_dump({name: w.to_json() for name, w in words.items()} | {"verified": ok}), args.out)
    return 0 if ok else 1


def cmd_conjugate(args) -> int:
    cfg, v, _ = load_instance(args.input)
    v = _need_v(cfg, v)
    out = {}
    ok = True
    for name, M, res in (("L", build_L(cfg, v), conj_L_to_transvection(cfg, v)),
                         ("L_star", build_L_star(cfg, v), conj_Lstar_to_transvection(cfg, v))):
        lhs = cfg.P.T @ M @ cfg.P
        good = lhs == res.matrix(cfg)
        ok = ok and good
        out[name] = res.to_json() | {"conjugated": lhs.tolist(), "verified": good}
    _emit(_dump(out), args.out)
    return 0 if ok else 1


def demo_lines() -> tuple[list[str], bool]:
    """The worked example: Z/5 with negation, m = 1, n = 2, phi = I, v = (0, 1, 2)."""
    ring = make_ring("mod", "negation", 5)
    cfg = _validated(SpaceConfig.standard(ring, 1, 2, "identity"))
    v = tuple(ring(x) for x in (0, 1, 2))
    L = build_L(cfg, v)
    word = factor_L(cfg, v)
    conj = conj_L_to_transvection(cfg, v)
    PLP = cfg.P.T @ L @ cfg.P
    back = transvection_to_vaserstein(cfg, conj.kind, conj.u, conj.a)
    verdicts = [
        ("word product equals L(v)", word_product(word) == L),
        ("L(v) is an isometry", isometry_check(cfg, L)),
        ("L(v) congruent to I mod L_max", congruent_mod_Lmax(cfg, L)),
        ("P^t L(v) P = T_-1(u_1, a_1)", PLP == conj.matrix(cfg)),
        ("decomposition returns v", tuple(back) == v),
    ]
    lines = [
        f"ring: {ring}, m=1, n=2, phi=I",
        f"v = {[str(x) for x in v]}",
        f"L(v) = {_fmt(L)}",
        f"factor_L(v) = {json.dumps([[i, j, r.to_json()] for i, j, r in word.factors])}",
        f"P^t L(v) P = {_fmt(PLP)}",
        f"T_-1(u_1, a_1): u_1 = {[str(x) for x in conj.u]} (module-first), a_1 = {conj.a}",
        f"T_-1(u_1, a_1) = {_fmt(conj.matrix(cfg))}",
        f"decomposition of T_-1(u_1, a_1): {[str(x) for x in back]}",
    ]
    lines += [("PASS " if ok else "FAIL ") + name for name, ok in verdicts]
    return lines, all(ok for _, ok in verdicts)


def cmd_demo(args) -> int:
    lines, ok = demo_lines()
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddunitary", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a random instance file")
    gen.add_argument("--ring", default="mod:5", help="int, mod:K, gauss or gaussmod:K")
    gen.add_argument("--involution", default="negation", help="identity, negation or twist_i")
    gen.add_argument("--m", type=int, default=1)
    gen.add_argument("--n", type=int, default=2)
    gen.add_argument("--phi", default="skew-standard", help="identity, skew-standard or file:<path>")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--force-D", dest="force_D", action="store_true",
                     help="solve for a_1 so that condition D holds")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check the identities on an instance")
    ver.add_argument("--in", dest="input", required=True)
    ver.add_argument("--check", choices=CHECKS, default="all")
    ver.add_argument("--out", help="also write the report as JSON")
    ver.set_defaults(func=cmd_verify)

    fac = sub.add_parser("factor", help="elementary words for L(v) and L(v)*")
    fac.add_argument("--in", dest="input", required=True)
    fac.add_argument("--out")
    fac.set_defaults(func=cmd_factor)

    con = sub.add_parser("conjugate", help="conjugate L(v), L(v)* by P into T_-1, T_1")
    con.add_argument("--in", dest="input", required=True)
    con.add_argument("--out")
    con.set_defaults(func=cmd_conjugate)

    demo = sub.add_parser("demo", help="run the worked Z/5 example")
    demo.add_argument("--out")
    demo.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ConditionUnsolvable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, OddUnitaryError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
