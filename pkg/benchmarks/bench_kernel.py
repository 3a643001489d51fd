"""Compiled kernel vs pure-Python fallback on the checker workloads.

Each backend runs in its own interpreter (``HOPFPI_KERNEL`` picks the
kernel at import). Usage: ``python3 benchmarks/bench_kernel.py [--repeat N]``.
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from hopfpi import kernel
from hopfpi.brace import check_brace, opposite_brace, braiding_c, check_braid_equation, trivial_brace
from hopfpi.gallery import load
from hopfpi.hopf import check_hopf_pi_algebra
from hopfpi.post_hopf import post_hopf, conjugation_triangle
from hopfpi.groups import catalog_gradings
from hopfpi.linalg import QQ

def hopf():
    for n in ("hopf_d4_trivial.json", "hopf_q8_ab.json", "hopf_s3_sign.json"):
        check_hopf_pi_algebra(load(n))

def brace():
    for n in ("brace_opposite_d4_trivial.json", "brace_opposite_q8_trivial.json"):
        check_brace(load(n))

def braid():
    B = load("brace_trivial_s3_sign.json")
    check_braid_equation(braiding_c(B), B.dot)

def posthopf():
    gr = catalog_gradings("D4")["ab"]
    from hopfpi.hopf import group_algebra
    post_hopf(group_algebra(gr), conjugation_triangle(gr, QQ))

WORK = [("hopf", hopf), ("brace", brace), ("braid", braid), ("post_hopf", posthopf)]

def sweep():
    # every single-entry mutation of o on one brace, as in the acceptance suite
    B = load("brace_opposite_d4_ab.json")
    C = B.circ
    for key, T in sorted(C.mult.items()):
        for idx in [(i, j, k) for i in range(T.shape[0]) for j in range(T.shape[1]) for k in range(T.shape[2])]:
            mult = dict(C.mult)
            mult[key] = T.with_entry(idx, T.data.get(idx, 0) + 1)
            check_brace(B.replace(circ=C.replace(mult=mult)))

out = {"backend": kernel.BACKEND}
for name, fn in WORK + [("sweep", sweep)]:
    best = None
    for _ in range(int(sys.argv[1])):
        t = time.perf_counter(); fn(); dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    out[name] = best
print(json.dumps(out))
"""


def run(backend, repeat):
    env = dict(os.environ, HOPFPI_KERNEL=backend)
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py, cy = run("python", args.repeat), run("cython", args.repeat)
    if cy["backend"] != "cython":
        print("compiled kernel not available; only the fallback was timed")
    print(f"{'workload':<12}{'python (s)':>12}{cy['backend'] + ' (s)':>14}{'speedup':>10}")
    for k in ("hopf", "brace", "braid", "post_hopf", "sweep"):
        print(f"{k:<12}{py[k]:>12.4f}{cy[k]:>14.4f}{py[k] / cy[k]:>9.1f}x")


if __name__ == "__main__":
    main()
