"""Command-line frontend: ``svoa product | check | theta | axioms | example export``.

Exit codes: 0 pass, 1 mathematical failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .axioms import AxiomSuite, run_axiom_suite
from .cocycle import build_epsilon
from .examples import build_example
from .fock import LatticeVOA, SpaceMismatch
from .lattice import LatticeError, builtin_lattice, load_lattice, theta_coefficients
from .modes import apply_mode
from .parsing import ParseError, format_scalar, parse_scalar, parse_state
from .recognition import (
    GeneratorQuad,
    check_n2,
    check_n4_axioms,
    check_n4_relations,
    lattice_side_sums,
)

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
N4_NAMES = ("tau_p", "tau_m", "taubar_p", "taubar_m")
N2_NAMES = ("tau_p", "tau_m")


class UsageError(Exception):
    pass


# -- session -------------------------------------------------------------------

def _parse_eps(texts):
    out = []
    for text in texts or ():
        parts = text.split(",")
        try:
            i, j, s = (int(p) for p in parts)
        except ValueError:
            raise UsageError(f"--eps expects i,j,+-1 (1-based), got {text!r}") from None
        if not (1 <= i < j) or s not in (1, -1):
            raise UsageError(f"--eps expects i < j and a sign +-1, got {text!r}")
        out.append((i - 1, j - 1, s))
    return out


def load_session(lattice: str | None, eps_texts=None) -> LatticeVOA:
    """Build V_L from a builtin name or a lattice-spec path plus epsilon overrides."""
    if lattice is None:
        raise UsageError("a lattice is required (--lattice NAME|PATH)")
    try:
        if Path(lattice).is_file():
            lat, overrides = load_lattice(lattice)
        else:
            lat, overrides = builtin_lattice(lattice), []
        overrides = overrides + _parse_eps(eps_texts)
        for i, j, _ in overrides:
            if j >= lat.rank:
                raise UsageError(f"epsilon index {j + 1} exceeds rank {lat.rank}")
        return LatticeVOA(lat, build_epsilon(lat, overrides))
    except (LatticeError, ValueError, TypeError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad lattice: {exc}") from exc


def _state(text, V, what):
    try:
        return parse_state(text, V)
    except ParseError as exc:
        raise UsageError(f"cannot parse {what}: {exc}") from exc
    except (SpaceMismatch, ValueError) as exc:
        raise UsageError(f"{what}: {exc}") from exc


# -- output ------------------------------------------------------------------

def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


# -- commands ----------------------------------------------------------------

def cmd_product(args) -> int:
    V = load_session(args.lattice, args.eps)
    u = _state(args.u, V, "u")
    v = _state(args.v, V, "v")
    res = apply_mode(u, args.n, v)
    _emit(args, {"u": str(u), "n": args.n, "v": str(v), "result": str(res)}, str(res))
    return EXIT_OK


def _generators_from_file(path, names):
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    gens = data.get("generators", data)
    if isinstance(gens, dict):
        missing = [n for n in names if n not in gens]
        if missing:
            raise UsageError(f"{path}: missing generators {', '.join(missing)}")
        texts = [gens[n] for n in names]
    elif isinstance(gens, list) and len(gens) == len(names):
        texts = list(gens)
    else:
        raise UsageError(f"{path}: expected {len(names)} generator expressions")
    return texts, data.get("expected", {})


def _resolve_check_inputs(args):
    names = N2_NAMES if args.kind == "n2" else N4_NAMES
    if args.example is not None:
        if args.gen or args.generators:
            raise UsageError("--example cannot be combined with explicit generators")
        try:
            bundle = build_example(args.example)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if (bundle.kind == "N2") != (args.kind == "n2"):
            raise UsageError(f"example {args.example} is an {bundle.kind} example; "
                             f"use --kind {'n2' if bundle.kind == 'N2' else 'n4'}")
        states = list(bundle.generator_states().values())
        return bundle.voa, states, bundle.expected_c, bundle.expected_virasoro, bundle
    V = load_session(args.lattice, args.eps)
    expected = {}
    if args.generators:
        texts, expected = _generators_from_file(args.generators, names)
    elif args.gen:
        texts = args.gen
    else:
        raise UsageError("give --example N, --generators FILE or --gen EXPR per generator")
    if len(texts) != len(names):
        raise UsageError(f"--kind {args.kind} needs {len(names)} generators ({', '.join(names)})")
    states = [_state(t, V, n) for t, n in zip(texts, names)]
    exp_c = exp_sigma = None
    if "c" in expected:
        try:
            exp_c = parse_scalar(str(expected["c"]))
        except ParseError as exc:
            raise UsageError(f"expected c: {exc}") from exc
    if "virasoro" in expected:
        exp_sigma = _state(expected["virasoro"], V, "expected virasoro")
    return V, states, exp_c, exp_sigma, None


def cmd_check(args) -> int:
    V, states, exp_c, exp_sigma, bundle = _resolve_check_inputs(args)
    if args.kind == "n2":
        rep = check_n2(*states)
        sigma = rep.notes.get("sigma")
    else:
        q = GeneratorQuad(*states)
        mode = "lattice" if args.kind == "n4-lattice" else "abstract"
        rep = check_n4_axioms(q, mode=mode)
        rel = check_n4_relations(q)
        rep.extend(rel, prefix="relations: ")
        rep.k, rep.c = rel.k, rel.c
        rep.notes.update(rel.notes)
        sigma = rel.notes.get("sigma")
        if mode == "lattice" and bundle is not None and bundle.sum_data is not None:
            rep.extend(lattice_side_sums(bundle.sum_data, V), prefix="sums: ")
        rep.title = f"N=4 ({mode})"
    if exp_c is not None:
        rep.add("c matches expected", f"c = {exp_c}", rep.c == exp_c,
                witness=None, context={"derived c": rep.c})
    if exp_sigma is not None and sigma is not None:
        rep.check_zero("sigma matches expected", "sigma = expected Virasoro vector", sigma - exp_sigma)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.render(verbose=args.verbose))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _half(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_theta(args) -> int:
    if args.example is not None:
        if args.lattice is not None:
            raise UsageError("--example and --lattice are exclusive")
        try:
            lat = build_example(args.example).lattice
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        lat = load_session(args.lattice).lattice
    if args.max < 0:
        raise UsageError("--max must be non-negative")
    table = theta_coefficients(lat, args.max)
    payload = {"lattice": lat.name, "coefficients": [[_half(q), n] for q, n in table]}
    human = "\n".join(f"q^{_half(q)}\t{n}" for q, n in table)
    _emit(args, payload, human)
    return EXIT_OK


def cmd_axioms(args) -> int:
    V = load_session(args.lattice, args.eps)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    try:
        wb = Fraction(args.weight_bound)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad --weight-bound {args.weight_bound!r}") from None
    if wb < 0 or wb > 3 or (2 * wb).denominator != 1:
        raise UsageError("--weight-bound must be a half-integer in [0, 3]")
    if args.corrupt_epsilon:
        try:
            i, j = (int(x) for x in args.corrupt_epsilon.split(","))
        except ValueError:
            raise UsageError("--corrupt-epsilon expects i,j (1-based)") from None
        if not (1 <= i <= V.rank and 1 <= j <= V.rank):
            raise UsageError("--corrupt-epsilon index out of range")
        eps = V.epsilon
        V = LatticeVOA(V.lattice, eps.with_value(i - 1, j - 1, -eps.basis_values[i - 1][j - 1]))
    suite = AxiomSuite(V, trials=args.trials, seed=args.seed, max_weight=wb)
    rep = run_axiom_suite(suite)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.render(verbose=True))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_example_export(args) -> int:
    try:
        bundle = build_example(args.number)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    lat = bundle.lattice
    eps = bundle.epsilon
    spec = lat.to_json()
    spec["epsilon_upper"] = [[i + 1, j + 1, eps.basis_values[i][j]]
                             for i in range(lat.rank) for j in range(i + 1, lat.rank)
                             if eps.basis_values[i][j] != 1]
    lat_path = out / f"example{args.number}_lattice.json"
    gen_path = out / f"example{args.number}_generators.json"
    lat_path.write_text(json.dumps(spec, indent=2) + "\n")
    gens = {"kind": "n2" if bundle.kind == "N2" else "n4",
            "generators": {k: str(v) for k, v in bundle.generator_states().items()},
            "expected": {"c": format_scalar(bundle.expected_c),
                         "virasoro": str(bundle.expected_virasoro)}}
    gen_path.write_text(json.dumps(gens, indent=2) + "\n")
    _emit(args, {"lattice": str(lat_path), "generators": str(gen_path)},
          f"wrote {lat_path}\nwrote {gen_path}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print one JSON document instead of text")
    common.add_argument("--lattice", default=argparse.SUPPRESS,
                        help="builtin lattice (Z1..Z8, ex2) or path to a lattice-spec JSON file")
    common.add_argument("--eps", action="append", default=argparse.SUPPRESS, metavar="I,J,S",
                        help="override eps(b_I, b_J) = S for I < J (1-based); repeatable")

    p = _Parser(prog="svoa", description="Exact computations in lattice super vertex operator algebras.",
                parents=[common])
    p.add_argument("--version", action="version", version="svoa 0.1.0")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    sp = sub.add_parser("product", parents=[common], help="compute u(n)v")
    sp.add_argument("u")
    sp.add_argument("n", type=int)
    sp.add_argument("v")
    sp.set_defaults(func=cmd_product)

    sc = sub.add_parser("check", parents=[common], help="run a recognition checker")
    sc.add_argument("--kind", choices=("n2", "n4", "n4-lattice"), required=True)
    sc.add_argument("--example", type=int)
    sc.add_argument("--gen", action="append", metavar="EXPR",
                    help="generator expression, in the order tau+, tau- [, taubar+, taubar-]")
    sc.add_argument("--generators", metavar="FILE", help="JSON file with generator expressions")
    sc.add_argument("-v", "--verbose", action="store_true", help="list passing items too")
    sc.set_defaults(func=cmd_check)

    st = sub.add_parser("theta", parents=[common], help="theta series coefficients")
    st.add_argument("--example", type=int)
    st.add_argument("--max", type=int, default=3, help="largest norm to count")
    st.set_defaults(func=cmd_theta)

    sa = sub.add_parser("axioms", parents=[common], help="randomised SVOA axiom suite")
    sa.add_argument("--weight-bound", default="5/2")
    sa.add_argument("--trials", type=int, default=100)
    sa.add_argument("--seed", type=int, default=0)
    sa.add_argument("--corrupt-epsilon", metavar="I,J",
                    help="flip eps(b_I, b_J) without fixing eps(b_J, b_I)")
    sa.set_defaults(func=cmd_axioms)

    se = sub.add_parser("example", parents=[common], help="shipped examples")
    esub = se.add_subparsers(dest="action", parser_class=_Parser, required=True)
    ex = esub.add_parser("export", parents=[common], help="write lattice spec and generators")
    ex.add_argument("number", type=int)
    ex.add_argument("--out", required=True)
    ex.set_defaults(func=cmd_example_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name, default in (("json", False), ("lattice", None), ("eps", None)):
            if not hasattr(args, name):
                setattr(args, name, default)
        return args.func(args)
    except UsageError as exc:
        print(f"svoa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
