#!/usr/bin/env python3
"""Enumerate triangulated 2-disks on 3..6 vertices up to relabeling.

Writes one .sc file per isomorphism class into data/disks/. Run from the
repository root; the output is committed, so this only needs rerunning if
the vertex bound changes.
"""
import itertools
import pathlib
import sys


def is_disk(n, tris):
    edges = {}
    for t in tris:
        for e in itertools.combinations(t, 2):
            edges[e] = edges.get(e, 0) + 1
    if any(c > 2 for c in edges.values()):
        return False
    verts = set(v for t in tris for v in t)
    if verts != set(range(n)):
        return False
    boundary = [e for e, c in edges.items() if c == 1]
    if not boundary:
        return False
    # vertex links must be a single path (boundary vertex) or cycle (interior)
    for v in range(n):
        link = [tuple(x for x in t if x != v) for t in tris if v in t]
        deg = {}
        for a, b in link:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(d > 2 for d in deg.values()):
            return False
        adj = {x: set() for x in deg}
        for a, b in link:
            adj[a].add(b)
            adj[b].add(a)
        start = next(iter(adj))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        if len(seen) != len(adj):
            return False
    chi = n - len(edges) + len(tris)
    if chi != 1:
        return False
    # connectivity through triangles
    adj = {v: set() for v in range(n)}
    for (a, b) in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == n


def canonical(n, tris):
    best = None
    for p in itertools.permutations(range(n)):
        form = tuple(sorted(tuple(sorted(p[v] for v in t)) for t in tris))
        if best is None or form < best:
            best = form
    return best


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/disks")
    out.mkdir(parents=True, exist_ok=True)
    for n in range(3, 7):
        all_tris = list(itertools.combinations(range(n), 3))
        classes = set()
        for f in range(1, 2 * n - 4 + 1):
            for tris in itertools.combinations(all_tris, f):
                if is_disk(n, tris):
                    classes.add(canonical(n, tris))
        for i, form in enumerate(sorted(classes)):
            path = out / f"disk_v{n}_{i:02d}.sc"
            with path.open("w") as fh:
                fh.write(f"# triangulated disk, {n} vertices, {len(form)} triangles\n")
                fh.write(f"vertices {n}\n")
                for t in form:
                    fh.write("simplex " + " ".join(map(str, t)) + "\n")
        print(f"{n} vertices: {len(classes)} disks")


if __name__ == "__main__":
    main()
