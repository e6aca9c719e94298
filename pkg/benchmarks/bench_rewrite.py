"""Compare the compiled and pure-Python normal-ordering kernels.

Each kernel gets a fresh algebra (empty memo tables) and normal orders the
same batch of random words; the timing therefore includes filling the
commutator and insertion caches.

    python3 benchmarks/bench_rewrite.py --type B --n 2 --words 40 --length 4
"""

import argparse
import random
import time

from xyangian import RTTAlgebra
from xyangian._rewrite_py import Rewriter as PyRewriter
from xyangian.tensor import AlgebraContext

try:
    from xyangian._rewrite import Rewriter as CRewriter
except ImportError:
    CRewriter = None


def workload(alg, words):
    out = []
    for w in words:
        out.append(alg.normal_order({w: 1}))
    return out


def run(kernel, ctx, words, repeat):
    best = None
    result = None
    for _ in range(repeat):
        alg = RTTAlgebra(ctx)
        alg.rw = kernel(alg)
        t0 = time.perf_counter()
        result = workload(alg, words)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", default="B", choices="ABCD")
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--words", type=int, default=40)
    ap.add_argument("--length", type=int, default=4)
    ap.add_argument("--rmax", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ctx = AlgebraContext.of(args.type, args.n)
    probe = RTTAlgebra(ctx)
    N = ctx.N
    letters = [probe.encode(i, j, r) for r in range(1, args.rmax + 1)
               for i in range(1, N + 1) for j in range(1, N + 1)]
    rng = random.Random(args.seed)
    words = [tuple(rng.choice(letters) for _ in range(args.length)) for _ in range(args.words)]

    print("algebra %s, %d words of length %d, r <= %d" % (ctx.label, args.words, args.length, args.rmax))
    t_py, res_py = run(PyRewriter, ctx, words, args.repeat)
    print("python    %8.3f s" % t_py)
    if CRewriter is None:
        print("compiled  not built")
        return
    t_c, res_c = run(CRewriter, ctx, words, args.repeat)
    same = all(a.terms == b.terms for a, b in zip(res_py, res_c))
    print("compiled  %8.3f s   speedup %.2fx   identical results: %s" % (t_c, t_py / t_c, same))


if __name__ == "__main__":
    main()
