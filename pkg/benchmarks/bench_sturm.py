"""Compare the compiled and pure-Python Sturm kernels on the FD oracle matrices.

    python benchmarks/bench_sturm.py [--points 8000] [--repeat 3]
"""
import argparse
import timeit

from gencarinena import _sturm_py
from gencarinena.carinena import domain_for
from gencarinena.verify.fd import FdGrid, tridiagonal

try:
    from gencarinena import _sturm
except ImportError:
    _sturm = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=8000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--count", type=int, default=5)
    args = ap.parse_args()

    backends = [("python", _sturm_py)]
    if _sturm is not None:
        backends.insert(0, ("cython", _sturm))
    else:
        print("compiled kernel not built; timing the fallback only")

    print(f"{'p':>2} {'backend':>8} {'count (ms)':>11} {'lowest-{} (ms)'.format(args.count):>15}")
    for p in (1, 2, 3, 4):
        grid = FdGrid.for_domain(domain_for(p), 12.0, args.points)
        diag, off_sq = tridiagonal(p, grid)
        results = {}
        for name, mod in backends:
            t_count = min(timeit.repeat(lambda: mod.sturm_count(diag, off_sq, 3.0),
                                        number=10, repeat=args.repeat)) / 10
            t_eig = min(timeit.repeat(
                lambda: mod.lowest_eigenvalues(diag, off_sq, args.count, 1e-11),
                number=1, repeat=args.repeat))
            results[name] = mod.lowest_eigenvalues(diag, off_sq, args.count, 1e-11)
            print(f"{p:>2} {name:>8} {1e3 * t_count:>11.3f} {1e3 * t_eig:>15.1f}")
        if len(results) == 2:
            same = results["cython"] == results["python"]
            print(f"   identical eigenvalues: {same}")


if __name__ == "__main__":
    main()
