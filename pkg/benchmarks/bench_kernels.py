"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

import argparse
import json
import random
import timeit

from gn3kit import kernels, parse
from gn3kit.invariants import TripleSelector, _plan
from gn3kit.presentations import gn3_alphabet

def workloads(seed=0):
    rng = random.Random(seed)
    alpha6 = tuple(x.mask for x in gn3_alphabet(6))

    sel = TripleSelector(1, 2, 3, 7)
    codes, watch = _plan(sel, "example")
    letters = list(gn3_alphabet(7))
    scan_seq = [codes.get(rng.choice(letters).mask, -1) for _ in range(20000)]

    red_seq = [rng.randint(0, 3) for _ in range(200000)]
    words = [tuple(rng.choice(alpha6) for _ in range(12)) for _ in range(300)]
    alpha5 = tuple(x.mask for x in gn3_alphabet(5))
    w1 = parse("a[1,2,3] a[2,4,5] a[1,3,4] a[3,4,5] a[1,2,5] a[2,3,4]", "gn3", 5).masks
    # odd a_123 count: unreachable, so the search runs to its state cap
    w2 = parse("a[1,2,3]", "gn3", 5).masks

    return {
        "occurrence_indices (20k letters, m=7)":
            lambda m: m.occurrence_indices(scan_seq, watch),
        "reduce_involutions (200k letters)":
            lambda m: m.reduce_involutions(red_seq),
        "gn3_successors (300 words, n=6, insertions)":
            lambda m: [m.gn3_successors(w, alpha6, True) for w in words],
        "gn3_bfs (n=5, 200k states, insertions)":
            lambda m: m.gn3_bfs(w1, w2, alpha5, True, 12, 200000, 64),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    mods = kernels.backends()
    rows = []
    for name, fn in workloads().items():
        row = {"workload": name}
        for m in mods:
            row[m.BACKEND] = min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat))
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    names = [m.BACKEND for m in mods]
    print(f"{'workload':46}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for r in rows:
        cells = "".join(f"{r[n] * 1e3:10.2f}ms" for n in names)
        sp = f"{r['speedup']:9.1f}x" if "speedup" in r else f"{'n/a':>10}"
        print(f"{r['workload']:46}{cells}{sp}")


if __name__ == "__main__":
    main()
