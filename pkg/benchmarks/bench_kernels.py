"""Compare the compiled kernels with the pure-Python fallback.

Each backend runs in a fresh interpreter (the backend is chosen at import).

    python benchmarks/bench_kernels.py [--trials 20] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, sys, time
from svoa import BACKEND
from svoa.axioms import AxiomSuite, run_axiom_suite
from svoa.examples import build_example
from svoa.fock import LatticeVOA
from svoa.lattice import standard_lattice
from svoa.recognition import check_n4_axioms, check_n4_relations
from svoa.scalars import I, INV_SQRT2, INV_SQRT3, Scalar

trials, repeat = int(sys.argv[1]), int(sys.argv[2])
out = {"backend": BACKEND}

def best(fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)

def scalars():
    rng = random.Random(0)
    xs = [Scalar.from_rational(rng.randint(-9, 9)) + I * rng.randint(-3, 3) * INV_SQRT2
          + INV_SQRT3 * rng.randint(-3, 3) for _ in range(200)]
    acc = Scalar.from_rational(0)
    for a in xs:
        for b in xs[:50]:
            acc = acc + a * b
    return acc

def axioms():
    # fresh lattice SVOA each time so the structure-constant cache starts cold
    V = LatticeVOA(standard_lattice(2))
    assert run_axiom_suite(AxiomSuite(V, trials=trials, seed=0)).passed

def example1():
    q = build_example(1).generators
    assert check_n4_axioms(q).passed and check_n4_relations(q).passed

out["scalar arithmetic (10k mul+add)"] = best(scalars)
out[f"axiom suite on Z2 ({trials} trials)"] = best(axioms)
out["example 1 recognition checks"] = best(example1)
print(json.dumps(out))
"""


def run(pure: bool, trials: int, repeat: int) -> dict:
    env = dict(os.environ, SVOA_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(trials), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    fast = run(False, args.trials, args.repeat)
    slow = run(True, args.trials, args.repeat)
    if fast["backend"] != "compiled":
        print("note: compiled kernels are not built; both columns use pure Python")
    print(f"{'workload':40s} {'compiled':>10s} {'pure':>10s} {'speedup':>8s}")
    for key in fast:
        if key == "backend":
            continue
        a, b = fast[key], slow[key]
        print(f"{key:40s} {a:10.3f} {b:10.3f} {b / a:7.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
