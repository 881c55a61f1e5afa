"""Timing comparison of the numba kernels against their pure-numpy twins.

Runs each hot kernel on a realistic workload (the dim-32 dihedral
strictification over GF(7), a dense mod-p elimination, the trivial-cocycle
unit search), checks that both backends return identical results, and prints
mean wall time per call plus the speedup.

    python3 benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from hopfstrict.actions import WeakGAction, counterexample_action
from hopfstrict.fields import Field
from hopfstrict.kernels import get_backend
from hopfstrict.obstruction import ObstructionProblem, enumerate_units
from hopfstrict.strictify import strictify

F7 = Field.GF(7)


def workload_mu():
    s = strictify(counterexample_action(F7), verify=False)
    return s.algebra.mu.astype(np.int64)


def workload_rref(rows=160, cols=200, seed=3):
    rng = np.random.default_rng(seed)
    return rng.integers(0, 7, size=(rows, cols)).astype(np.int64)


def workload_search():
    act = counterexample_action(F7)
    comp = np.empty_like(act.comp)
    for g in act.group.elements():
        for h in act.group.elements():
            comp[g, h] = act.algebra.unit.copy()
    action = WeakGAction(act.group, act.algebra, act.phi, comp)
    alg = action.algebra
    units = enumerate_units(alg)
    index = {tuple(int(x) for x in u): i for i, u in enumerate(units)}
    nu = len(units)
    umul = np.empty((nu, nu), dtype=np.int64)
    for i in range(nu):
        for j in range(nu):
            umul[i, j] = index[tuple(int(x) for x in alg.multiply(units[i],
                                                                  units[j]))]
    cidx = np.zeros((4, 4), dtype=np.int64)
    cidx[:, :] = index[tuple(int(x) for x in alg.unit)]
    ObstructionProblem(action)       # shape sanity only
    return umul, cidx, action.group.table.astype(np.int64), \
        index[tuple(int(x) for x in alg.unit)]


def bench(fn, args, repeats):
    fn(*args)                        # warm up (JIT compile on the numba side)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return sum(times) / len(times)


def same_result(a, b):
    if isinstance(a, tuple):
        return len(a) == len(b) and all(same_result(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    nb = get_backend("numba")
    npy = get_backend("numpy")

    mu = workload_mu()
    rref_mat = workload_rref()
    umul, cidx, gtab, one_idx = workload_search()

    cases = [
        ("assoc_violation dim 32 mod 7", "assoc_violation", (mu, 7)),
        ("rref_modp 160x200 mod 7", "rref_modp", (rref_mat, 7)),
        ("unit_tuple_search 36 units", "unit_tuple_search",
         (umul, cidx, gtab, one_idx, 10_000)),
    ]

    print(f"{'kernel':34} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for label, name, call_args in cases:
        fn_nb = getattr(nb, name)
        fn_np = getattr(npy, name)
        # rref mutates its input, so every call gets a fresh copy
        def run(fn, a=call_args):
            fresh = tuple(x.copy() if isinstance(x, np.ndarray) else x
                          for x in a)
            return fn(*fresh)
        assert same_result(run(fn_nb), run(fn_np)), f"{name}: backends disagree"
        t_nb = bench(lambda: run(fn_nb), (), args.repeats)
        t_np = bench(lambda: run(fn_np), (), args.repeats)
        print(f"{label:34} {t_nb * 1e3:10.3f} {t_np * 1e3:10.3f} "
              f"{t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
