"""Time each kernel on the compiled and pure-Python backends.

    python benchmarks/bench_kernels.py [--repeat N] [--scale small|large]
"""

import argparse
import timeit
from array import array

from galois_closure import PointMap, _pykernels
from galois_closure._backend import available_backends
from galois_closure.enumeration import random_closure_space

SIZES = {
    # n for tables, n for the 3**n compact scan, n' for the direct sweep
    "small": dict(table=10, scan=8, direct=10, family=10, members=14),
    "large": dict(table=14, scan=11, direct=14, family=14, members=20),
}


def workloads(sz):
    # inputs that pass every check, so each scan runs to completion
    big = random_closure_space(sz["table"], 1, k=3 * sz["table"])
    table_space = random_closure_space(sz["scan"], 2, k=2 * sz["scan"])
    table = array("Q", _pykernels.closure_table(table_space.family.array, sz["scan"]))
    e = random_closure_space(sz["direct"], 4, k=2 * sz["direct"])
    ident = PointMap.identity(e.n)
    fam = random_closure_space(sz["family"], 5, k=sz["members"])
    return {
        f"closure_table n={big.n} |F|={len(big.closed)}":
            ("closure_table", (big.family.array, big.n)),
        f"table_scan n={sz['scan']} (3**n pairs)":
            ("table_scan", (table, sz["scan"])),
        f"direct_scan n'={e.n} |F|={len(e.closed)}":
            ("direct_scan", (ident.array, ident.array, e.family.array, e.family.array, e.n)),
        f"continuity_image_scan n={e.n}":
            ("continuity_image_scan", (ident.array, e.family.array, e.family.array, e.n)),
        f"induced_scan |F|={len(e.closed)}":
            ("induced_scan", (ident.array, ident.array, e.family.array, e.family.array)),
        f"intersection_scan m={len(fam.closed)}":
            ("intersection_scan", (fam.family.array,)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scale", choices=sorted(SIZES), default="small")
    args = ap.parse_args()

    backends = available_backends()
    names = [m.NAME for m in backends]
    print(f"{'workload':<44}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, (fn, fargs) in workloads(SIZES[args.scale]).items():
        times, results = [], []
        for mod in backends:
            f = getattr(mod, fn)
            results.append(f(*fargs))
            times.append(min(timeit.repeat(lambda: f(*fargs), number=1, repeat=args.repeat)))
        norm = [tuple(r) if not isinstance(r, (int, tuple)) else r for r in results]
        if any(r != norm[0] for r in norm):
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<44}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[-1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
