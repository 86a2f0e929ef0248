"""Time bounded point enumeration with the numba and numpy scan backends.

    python benchmarks/bench_enumerate.py [--repeat 3] [--height 80]

Set WILLEMS_NO_NUMBA=1 to check the fallback path alone.
"""
import argparse
import time

from willems.cli.parse import parse_poly
from willems.groebner import Ideal
from willems.points import BACKEND, SearchBounds, enumerate_points

CASES = [
    ("cone over Z", ["D1^2 + D2^2 - D3^2"], "Z", {}),
    ("circle over Q", ["D1^2 + D2^2 - 1"], "Q", {"denominator": 24}),
    ("twisted cubic over Z", ["D2 - D1^2", "D3 - D1^3"], "Z", {}),
    ("quartic surface over Z", ["D1^4 + D2^4 - D3^2 - D4^2"], "Z", {"height": 14}),
]


def run(ideal, ring, bounds, backend, repeat):
    best, pts = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = enumerate_points(ideal, bounds, ring, backend=backend)
        best = min(best, time.perf_counter() - t0)
        pts = res.points
    return best, pts


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--height", type=int, default=80)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if BACKEND == "numba" else [])
    print(f"default backend: {BACKEND}")
    print(f"{'case':<24}{'points':>8}" + "".join(f"{b + ' s':>12}" for b in backends) + f"{'speedup':>10}")
    for name, gens, ring, extra in CASES:
        polys = [parse_poly(g, 4 if "D4" in " ".join(gens) else 3 if "D3" in " ".join(gens) else 2)
                 for g in gens]
        ideal = Ideal(polys, polys[0].n)
        bounds = SearchBounds(height=extra.get("height", args.height), denominator=extra.get("denominator", 1))
        times, results = [], []
        for b in backends:
            if b == "numba":
                run(ideal, ring, SearchBounds(height=2), b, 1)  # compile outside the timing
            t, pts = run(ideal, ring, bounds, b, args.repeat)
            times.append(t)
            results.append(pts)
        if any(r != results[0] for r in results):
            raise SystemExit(f"{name}: backends disagree")
        speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else f"{'-':>10}"
        print(f"{name:<24}{len(results[0]):>8}" + "".join(f"{t:>12.3f}" for t in times) + speed)


if __name__ == "__main__":
    main()
