"""
Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.

Diagrams and elements are read from JSON files, inline JSON, or shorthands:
``id:N``, ``twist:N[:power]``, ``cupcap:N:i``, ``std:k:N:index`` (1-based index into the standard basis).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import diagrams as dg
from .algebra import AlgebraElement, multiply
from .cellrep import action_matrix, gram_matrix, pure_component_element, verify_det_identity
from .center import gluing_report
from .laurent import LAURENT_IN_Q, RATIONAL, CoeffDomain, LaurentPoly, complex_domain, delta
from .linalg import LaurentMatrix
from .polys import d_k, g_polynomial, h_polynomial, p_polynomial, tau_set
from .render import to_svg, to_text

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    mode: str = "symbolic"  # symbolic | rational | numeric
    q: complex | Fraction | None = None
    tol: float = 1e-9
    output: str = "text"  # text | json | svg
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("symbolic", "rational", "numeric"):
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.mode != "symbolic" and (self.q is None or self.q == 0):
            raise UsageError("numeric modes need a nonzero --q")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.output not in ("text", "json", "svg"):
            raise UsageError(f"unknown output format {self.output!r}")

    @property
    def domain(self) -> CoeffDomain:
        return {"symbolic": LAURENT_IN_Q, "rational": RATIONAL}.get(self.mode) or complex_domain(self.tol)

    @property
    def q_arg(self):
        return None if self.mode == "symbolic" else self.q


def parse_q(text: str, mode: str):
    """'re,im' or a single number; rationals like '1/2' stay exact in rational mode."""
    text = text.strip()
    try:
        if "," in text:
            re_, im = (float(t) for t in text.split(","))
            if mode == "rational":
                if im:
                    raise UsageError("rational mode needs a real q")
                return Fraction(text.split(",")[0].strip())
            return complex(re_, im)
        if mode == "rational":
            return Fraction(text)
        return complex(text.replace("i", "j"))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse q from {text!r}") from exc


# ----------------------------------------------------------------------------- input helpers


def _read_json(spec: str):
    path = Path(spec)
    if path.exists():
        return json.loads(path.read_text())
    return json.loads(spec)


def load_diagram(spec: str) -> dg.AffineDiagram:
    parts = spec.split(":")
    try:
        if parts[0] == "id" and len(parts) == 2:
            return dg.identity(int(parts[1]))
        if parts[0] == "twist" and len(parts) in (2, 3):
            return dg.twist(int(parts[1]), int(parts[2]) if len(parts) == 3 else 1)
        if parts[0] == "cupcap" and len(parts) == 3:
            return dg.cup_cap(int(parts[1]), int(parts[2]))
        if parts[0] == "std" and len(parts) == 4:
            k, N, i = (int(p) for p in parts[1:])
            basis = dg.enumerate_standard(k, N)
            if not 1 <= i <= len(basis):
                raise UsageError(f"standard basis index {i} out of range 1..{len(basis)}")
            return basis[i - 1]
        return dg.AffineDiagram.from_json(_read_json(spec))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read a diagram from {spec!r}: {exc}") from exc


def load_element(spec: str, cfg: CliConfig) -> AlgebraElement:
    try:
        obj = None if ":" in spec and not spec.lstrip().startswith("{") else _read_json(spec)
    except (ValueError, OSError):
        obj = None
    if isinstance(obj, dict) and "terms" in obj:
        try:
            return AlgebraElement.from_json(obj, cfg.domain, cfg.q_arg)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read an element from {spec!r}: {exc}") from exc
    d = load_diagram(spec)
    if d.top != d.bottom:
        raise UsageError("an algebra element needs a diagram with equal top and bottom counts")
    return AlgebraElement.from_diagram(d, 1, cfg.domain, cfg.q_arg)


def _check_level(k: int, N: int):
    if N < 1:
        raise UsageError("--N must be positive")
    if k not in tau_set(N):
        raise UsageError(f"k={k} is not in T_{N} = {tau_set(N)}")


# ----------------------------------------------------------------------------- commands


def _emit(cfg: CliConfig, obj_json, text: str):
    print(json.dumps(obj_json, indent=2) if cfg.output == "json" else text)


def cmd_compose(args, cfg: CliConfig) -> int:
    a, b = load_diagram(args.alpha), load_diagram(args.beta)
    try:
        res = dg.compose(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = f"{res.diagram}\nloops: {res.loops}\nfactor: delta^{res.loops}"
    _emit(cfg, {"diagram": res.diagram.to_json(), "loops": res.loops, "delta_power": res.loops}, text)
    return 0


def cmd_multiply(args, cfg: CliConfig) -> int:
    a, b = load_element(args.a, cfg), load_element(args.b, cfg)
    if a.N != b.N:
        raise UsageError("elements of different algebras")
    prod = multiply(a, b)
    text = "\n".join(f"({c}) * {d}" for d, c in prod.terms.items()) or "0"
    _emit(cfg, prod.to_json(), text)
    return 0


def cmd_gram(args, cfg: CliConfig) -> int:
    _check_level(args.k, args.N)
    R = gram_matrix(args.k, args.N, cfg.domain, cfg.q_arg)
    _emit(cfg, R.to_json(), R.to_text())
    return 0


def cmd_verify_det(args, cfg: CliConfig) -> int:
    if args.N < 1:
        raise UsageError("--N must be positive")
    if cfg.mode == "numeric":
        raise UsageError("verify-det runs in exact arithmetic (symbolic or rational mode)")
    levels = [args.k] if args.k is not None else tau_set(args.N)
    rows, failed = [], False
    for k in levels:
        _check_level(k, args.N)
        try:
            sign = verify_det_identity(k, args.N, cfg.domain, cfg.q_arg)
        except AssertionError:
            sign, failed = None, True
        rows.append({"k": k, "d_k": d_k(k, args.N), "sign": sign})
    text = "\n".join(f"k={r['k']:>2}  d_k={r['d_k']:>3}  det R_k = " +
                     ("MISMATCH" if r["sign"] is None else ("+G_k" if r["sign"] > 0 else "-G_k")) for r in rows)
    _emit(cfg, {"N": args.N, "signs": rows}, text)
    return 1 if failed else 0


def cmd_action(args, cfg: CliConfig) -> int:
    a = load_element(args.element, cfg)
    _check_level(args.k, a.N)
    M = action_matrix(a, args.k)
    _emit(cfg, M.to_json(), M.to_text())
    return 0


def _random_matrix(n: int, rng: random.Random, domain: CoeffDomain, symmetric: bool) -> LaurentMatrix:
    def entry():
        c = {e: rng.randint(-3, 3) for e in range(-1, 2)}
        if symmetric:
            c = {e: c[abs(e)] for e in c}
        return LaurentPoly(c, domain)

    return LaurentMatrix([[entry() for _ in range(n)] for _ in range(n)], domain)


def cmd_ideal_element(args, cfg: CliConfig) -> int:
    _check_level(args.r, args.N)
    if cfg.mode == "numeric":
        raise UsageError("ideal-element needs exact arithmetic")
    dom = cfg.domain
    if args.B:
        try:
            B = LaurentMatrix.from_json(_read_json(args.B), dom)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read matrix B: {exc}") from exc
    else:
        B = _random_matrix(d_k(args.r, args.N), random.Random(cfg.seed), dom, args.r == 0)
    try:
        a = pure_component_element(args.r, B, args.N, cfg.q_arg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    P = p_polynomial(args.r, args.N, dom, cfg.q_arg).substitute_power(max(args.r, 1))
    report = {"N": args.N, "r": args.r, "terms": len(a), "levels": {}}
    ok = True
    for s in tau_set(args.N):
        M = action_matrix(a, s)
        good = M == B * P if s == args.r else M.is_zero()
        ok &= good
        report["levels"][str(s)] = "ok" if good else "FAILED"
    text = f"element with {len(a)} terms\n" + "\n".join(
        f"pi_{s}: {'P_r(x^r) B' if s == str(args.r) else '0'} ... {v}" for s, v in report["levels"].items())
    if args.show:
        report["element"] = a.to_json()
    _emit(cfg, report, text)
    return 0 if ok else 1


def cmd_poly(args, cfg: CliConfig) -> int:
    _check_level(args.k, args.N)
    fn = {"g": g_polynomial, "h": h_polynomial, "p": p_polynomial}[args.which]
    p = fn(args.k, args.N, cfg.domain, cfg.q_arg)
    _emit(cfg, p.to_json(), str(p))
    return 0


def cmd_gluing(args, cfg: CliConfig) -> int:
    if args.N < 1:
        raise UsageError("--N must be positive")
    if cfg.q is None or cfg.q == 0:
        raise UsageError("gluing needs a nonzero --q")
    rep = gluing_report(args.N, complex(cfg.q), cfg.tol)

    def fmt(p):
        return f"(sheet {p.k}, z={p.z.real:+.6g}{p.z.imag:+.6g}i)"

    lines = [f"N={rep.N} q={rep.q_value} components={rep.component_count}",
             f"candidates: {len(rep.candidates)}"]
    if isinstance(rep.confirmed, str):
        lines.append(rep.confirmed)
    else:
        lines.append(f"confirmed: {len(rep.confirmed)}")
        lines += [f"  {fmt(a)} <-> {fmt(b)}" for a, b in rep.confirmed]
    _emit(cfg, rep.to_json(), "\n".join(lines))
    return 0


def cmd_render(args, cfg: CliConfig) -> int:
    d = load_diagram(args.diagram)
    wants_svg = cfg.output == "svg" or (args.out or "").endswith(".svg")
    fmt = args.format or ("svg" if wants_svg else "text")
    out = to_svg(d, title=str(d)) if fmt == "svg" else to_text(d)
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_selftest(args, cfg: CliConfig) -> int:
    """Quick golden checks; exits 1 on the first failure."""
    checks = []
    x = LaurentPoly.monomial(1, 1, LAURENT_IN_Q)
    xi = LaurentPoly.monomial(-1, 1, LAURENT_IN_Q)
    one = LaurentPoly.constant(1, LAURENT_IN_Q)
    dl = LaurentPoly.constant(delta(), LAURENT_IN_Q)
    R1 = LaurentMatrix([[dl, one, xi], [one, dl, x], [x, xi, dl]])
    checks.append(("gram R_1 (N=3)", gram_matrix(1, 3) == R1))
    z = LaurentPoly.zero(LAURENT_IN_Q)
    t3 = AlgebraElement.from_diagram(dg.twist(3))
    checks.append(("tau_3 on M_1", action_matrix(t3, 1) == LaurentMatrix([[z, z, one], [x, z, z], [z, one, z]])))
    for N in range(1, 5):
        for k in tau_set(N):
            checks.append((f"det R_{k} = +-G_{k} (N={N})", verify_det_identity(k, N) in (1, -1)))
    rep = gluing_report(3, -1)
    checks.append(("T_3 gluing at q=-1", len(rep.confirmed) == 2))
    failed = [name for name, ok in checks if not ok]
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return 1 if failed else 0


# ----------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML file with mode/q/tol/output/seed defaults")
    common.add_argument("--mode", choices=["symbolic", "rational", "numeric"])
    common.add_argument("--q", help="value of q: 're,im' or a number (rational mode accepts p/q)")
    common.add_argument("--tol", type=float)
    common.add_argument("--output", choices=["text", "json", "svg"])
    common.add_argument("--seed", type=int)

    p = argparse.ArgumentParser(prog="affinetl", description=__doc__.splitlines()[1])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compose", parents=[common], help="stack two diagrams")
    s.add_argument("alpha")
    s.add_argument("beta")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("multiply", parents=[common], help="multiply two algebra elements")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_multiply)

    s = sub.add_parser("gram", parents=[common], help="print the Gram matrix R_k")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_gram)

    s = sub.add_parser("verify-det", parents=[common], help="check det R_k = +-G_k")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_verify_det)

    s = sub.add_parser("action", parents=[common], help="matrix of an element on M_k")
    s.add_argument("element")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_action)

    s = sub.add_parser("ideal-element", parents=[common], help="element acting as P_r(x^r) B on M_r only")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--B", help="JSON matrix; random (from --seed) when omitted")
    s.add_argument("--show", action="store_true", help="include the element in JSON output")
    s.set_defaults(func=cmd_ideal_element)

    s = sub.add_parser("poly", parents=[common], help="print G_k, H_k or P_k")
    s.add_argument("which", choices=["g", "h", "p"])
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("gluing", parents=[common], help="gluing points of the center variety")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_gluing)

    s = sub.add_parser("render", parents=[common], help="draw a diagram")
    s.add_argument("diagram")
    s.add_argument("--format", choices=["svg", "text"])
    s.add_argument("--out", help="write to this file instead of stdout")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("selftest", parents=[common], help="run quick golden checks")
    s.set_defaults(func=cmd_selftest)
    return p


def make_config(args) -> CliConfig:
    base: dict = {}
    if args.config:
        try:
            base = tomllib.loads(Path(args.config).read_text())
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc}") from exc
    mode = args.mode or base.get("mode", "symbolic")
    q_text = args.q if args.q is not None else base.get("q")
    if q_text is not None and not isinstance(q_text, str):
        q_text = ",".join(str(v) for v in q_text) if isinstance(q_text, list) else str(q_text)
    if q_text is not None and args.mode is None and "mode" not in base:
        mode = "numeric"
    q = parse_q(q_text, mode) if q_text is not None else None
    return CliConfig(mode=mode, q=q, tol=args.tol if args.tol is not None else float(base.get("tol", 1e-9)),
                     output=args.output or base.get("output", "text"),
                     seed=args.seed if args.seed is not None else int(base.get("seed", 0)))


def _glue_negative_values(argv: list[str]) -> list[str]:
    # let "--q -1,0" through: argparse would take "-1,0" for an option
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in ("--q", "--tol"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, make_config(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
