"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Inputs are root vectors of type (2,3,8), so the operands are the ones the
library actually feeds to the kernels.
"""

import argparse
import timeit

from nestedroots import _kernels_py as pure
from nestedroots.coxeter import CoxeterType
from nestedroots.roots import enumerate_roots

try:
    from nestedroots import _kernels as compiled
except ImportError:
    compiled = None


def workload(depth=6):
    ct = CoxeterType((2, 3, 8))
    F = ct.field
    vecs = [r.vec for r in enumerate_roots(ct, depth)]
    return F, ct, vecs


def run(mod, F, ct, vecs):
    red = F.reduction
    A = ct.A
    acc = 0
    for i in range(len(vecs) - 2):
        u, v, w = vecs[i], vecs[i + 1], vecs[i + 2]
        mod.matvec(A, u, red)
        mod.cross3(u, v, red)
        acc += mod.det3(u, v, w, red)[0]
    return acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--depth", type=int, default=6)
    args = ap.parse_args()
    F, ct, vecs = workload(args.depth)
    print(f"{len(vecs)} root vectors, degree {len(vecs[0][0])} coefficients")
    backends = [("python", pure)] + ([("compiled", compiled)] if compiled else [])
    results = {}
    for name, mod in backends:
        t = min(timeit.repeat(lambda: run(mod, F, ct, vecs), number=1, repeat=args.repeat))
        results[name] = (t, run(mod, F, ct, vecs))
        print(f"{name:9s} {t * 1e3:8.2f} ms")
    if compiled:
        assert results["python"][1] == results["compiled"][1], "backends disagree"
        print(f"speedup   {results['python'][0] / results['compiled'][0]:.2f}x")
    else:
        print("compiled kernels not built")


if __name__ == "__main__":
    main()
