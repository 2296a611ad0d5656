"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-length 9]

Each workload is run on every available backend; results must agree and the
best wall time of ``--repeat`` runs is reported.
"""
import argparse
import time

from uudd.kernels import available_backends


def workloads(max_length):
    yield f"uudd_by_last({max_length})", lambda k: k.uudd_by_last(max_length)
    yield "whirlpool_count(2, 4)", lambda k: k.whirlpool_count(2, 4)
    yield "alternating_last(9, 4)", lambda k: k.alternating_last(9, 4)
    yield "descents_last(9, 4)", lambda k: k.descents_last(9, 4)


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-length", type=int, default=9)
    args = ap.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"{'workload':<26}" + "".join(f"{n:>12}" for n in names) + "     speedup")
    for label, fn in workloads(args.max_length):
        times, outs = [], []
        for n in names:
            dt, out = best_of(lambda: fn(backends[n]), args.repeat)
            times.append(dt)
            outs.append(out)
        if any(o != outs[0] for o in outs):
            raise SystemExit(f"backends disagree on {label}: {outs}")
        speedup = ""
        if "cython" in names:
            speedup = f"{times[names.index('python')] / times[names.index('cython')]:10.1f}x"
        print(f"{label:<26}" + "".join(f"{t:11.4f}s" for t in times) + speedup)


if __name__ == "__main__":
    main()
