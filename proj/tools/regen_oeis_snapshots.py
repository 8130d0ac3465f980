#!/usr/bin/env python3
"""Regenerate the bundled b-file snapshots in data/ without network access.

The values are produced by implementations that share no code with the C++
library: a take-and-break evaluator for the octal game .11337 and a plain
exhaustive Toggle search on P(m,1) with inner weights 0 and outer weights 1.
Replace the files with the published b-files when a network fetch is possible
(`toggle oeis-check --fetch`).
"""
import argparse
import functools
import pathlib


def octal_values(code, count):
    digits = [int(c) for c in code]
    g = []
    for h in range(count):
        opts = set()
        for k, d in enumerate(digits, start=1):
            if d & 1 and h == k:
                opts.add(0)
            if d & 2 and h > k:
                opts.add(g[h - k])
            if d & 4 and h - k >= 2:
                for a in range(1, h - k):
                    opts.add(g[a] ^ g[h - k - a])
        v = 0
        while v in opts:
            v += 1
        g.append(v)
    return g


def toggle_p01_m1(m):
    # vertex 2*j is outer v_{1,j}, 2*j+1 is inner v_{0,j}
    n = 2 * m
    nbrs = [set() for _ in range(n)]

    def edge(a, b):
        nbrs[a].add(b)
        nbrs[b].add(a)

    for j in range(m):
        edge(2 * j, 2 * ((j + 1) % m))
        edge(2 * j + 1, 2 * ((j + 1) % m) + 1)
        edge(2 * j, 2 * j + 1)
    closed = [nbrs[v] | {v} for v in range(n)]

    @functools.lru_cache(maxsize=None)
    def grundy(state):
        opts = set()
        for v in range(n):
            if not (state >> v) & 1:
                continue
            before = sum((state >> u) & 1 for u in closed[v])
            if len(closed[v]) - before < before:
                nxt = state
                for u in closed[v]:
                    nxt ^= 1 << u
                opts.add(grundy(nxt))
        v = 0
        while v in opts:
            v += 1
        return v

    start = sum(1 << (2 * j) for j in range(m))
    return grundy(start)


def write_bfile(path, name, first, values):
    with open(path, "w", newline="\n") as f:
        f.write(f"# {name} local snapshot, regenerated by tools/regen_oeis_snapshots.py\n")
        for i, v in enumerate(values):
            f.write(f"{first + i} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    ap.add_argument("--octal-count", type=int, default=1001)
    ap.add_argument("--petersen-max", type=int, default=24)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_bfile(out / "b071426.txt", "A071426", 0, octal_values("11337", args.octal_count))
    write_bfile(out / "b361517.txt", "A361517", 3,
                [toggle_p01_m1(m) for m in range(3, args.petersen_max + 1)])


if __name__ == "__main__":
    main()
