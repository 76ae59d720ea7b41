"""Time the compiled and NumPy kernel backends on sampler-sized inputs.

    python benchmarks/bench_kernels.py [--n 280] [--K 3] [--repeat 20]
"""
import argparse
import timeit

import numpy as np

from msviews.kernels import available_backends
from msviews.sampler import stationary_distribution


def make_inputs(n, K, N, seed=0):
    rng = np.random.default_rng(seed)
    beta = np.sort(rng.normal(0, 1.5, K))
    sigma2 = rng.uniform(0.2, 2.0, K)
    xi = rng.dirichlet(np.full(K, 2.0) + 8 * np.eye(K)[0], size=K)
    init = stationary_distribution(xi)
    resid = rng.normal(0, 1.5, n)
    return {
        "resid": resid,
        "beta": beta,
        "sigma2": sigma2,
        "xi": xi,
        "init": init,
        "u": rng.uniform(size=n),
        "batch": (rng.normal(0, 1.5, (N, n)), np.tile(beta, (N, 1)), np.tile(sigma2, (N, 1)),
                  np.tile(xi, (N, 1, 1)), np.tile(init, (N, 1))),
    }


def cases(mod, d):
    filtered, _, _ = mod.hamilton_filter(d["resid"], d["beta"], d["sigma2"], d["xi"], d["init"])
    return {
        "hamilton_filter": lambda: mod.hamilton_filter(d["resid"], d["beta"], d["sigma2"], d["xi"], d["init"]),
        "backward_sample": lambda: mod.backward_sample(filtered, d["xi"], d["u"]),
        "loglik_batch": lambda: mod.loglik_batch(*d["batch"]),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=280, help="series length (quarters)")
    ap.add_argument("--K", type=int, default=3, help="number of regimes")
    ap.add_argument("--batch", type=int, default=100, help="parameter points for loglik_batch")
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)

    d = make_inputs(args.n, args.K, args.batch)
    backends = available_backends()
    timings = {}
    for name, mod in backends.items():
        for case, fn in cases(mod, d).items():
            fn()
            best = min(timeit.repeat(fn, number=5, repeat=args.repeat)) / 5
            timings[name, case] = best

    print(f"n={args.n} K={args.K} batch={args.batch}")
    print(f"{'kernel':<18}" + "".join(f"{b:>14}" for b in backends) + ("    speedup" if "cython" in backends else ""))
    for case in ("hamilton_filter", "backward_sample", "loglik_batch"):
        row = f"{case:<18}" + "".join(f"{timings[b, case] * 1e6:>12.1f}us" for b in backends)
        if "cython" in backends:
            row += f"{timings['python', case] / timings['cython', case]:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
