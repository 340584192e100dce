"""Timing comparison of the canonical-form backends.

Runs the same canonical_key workload through the compiled kernel and
the pure Python fallback on closures of random words and stacked-pair
doodles, printing per-call medians and the speedup.

    python3 benchmarks/bench_canonical.py [--repeat N] [--cases N]
"""

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from diagen import random_doodle, random_word, scramble  # noqa: E402

from cactusdoodle import _canon_py, _kernel  # noqa: E402
from cactusdoodle.closure import close  # noqa: E402

try:
    from cactusdoodle import _canon
except ImportError:
    _canon = None


def corpus(seed, cases):
    rng = random.Random(seed)
    out = []
    for _ in range(cases):
        d = close(random_word(rng, n_max=6, len_max=5))
        out.append(scramble(rng, d) if rng.random() < 0.5 else d)
    for _ in range(cases // 3):
        out.append(random_doodle(rng, max_points=12))
    return out


def run(backend, diagrams, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for d in diagrams:
            _kernel.canonical_key(d.circles, d.labels, d.orders,
                                  backend=backend)
            _kernel.canonical_key(d.circles, d.labels, d.orders, True,
                                  backend=backend)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--cases", type=int, default=300)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()

    diagrams = corpus(args.seed, args.cases)
    calls = 2 * len(diagrams)
    print("diagrams: %d  keys per pass: %d  repeats: %d"
          % (len(diagrams), calls, args.repeat))

    t_py = run(_canon_py, diagrams, args.repeat)
    print("pure python: %8.1f us/key  (%.3f s/pass)"
          % (1e6 * t_py / calls, t_py))

    if _canon is None:
        print("compiled kernel not built; install without CACTUSDOODLE_PURE")
        return

    t_c = run(_canon, diagrams, args.repeat)
    print("compiled:    %8.1f us/key  (%.3f s/pass)"
          % (1e6 * t_c / calls, t_c))
    print("speedup: %.1fx" % (t_py / t_c))


if __name__ == "__main__":
    main()
