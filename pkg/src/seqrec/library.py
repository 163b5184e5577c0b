"""Small library of concrete graphs: named classics, circulants, projective
incidence graphs, and seeded random (bi)regular generators.

These serve as base graphs for the layered construction and as high-girth
companions for the matching lift.
"""

from __future__ import annotations

import random

from .errors import InfeasibleParams
from .graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InfeasibleParams("cycle needs >= 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: left block 0..a-1, right block a..a+b-1."""
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer 5-cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))                # spokes
    return Graph(10, edges)


def circulant(n: int, offsets: list[int]) -> Graph:
    """Vertices Z_n, i joined to i +- k for each offset k."""
    edges = set()
    for i in range(n):
        for k in offsets:
            j = (i + k) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def regular_circulant(n: int, d: int) -> Graph:
    """d-regular circulant on n vertices (uses n/2 as an offset when d is odd)."""
    if d >= n or n < 3:
        raise InfeasibleParams(f"no {d}-regular circulant on {n} vertices")
    if d % 2 == 0:
        offsets = list(range(1, d // 2 + 1))
    else:
        if n % 2 != 0:
            raise InfeasibleParams(f"odd degree {d} needs an even vertex count, got {n}")
        offsets = list(range(1, (d - 1) // 2 + 1)) + [n // 2]
    g = circulant(n, offsets)
    if any(len(a) != d for a in g.adj):
        raise InfeasibleParams(f"offsets collide; no {d}-regular circulant on {n} vertices")
    return g


def projective_incidence(q: int) -> Graph:
    """Point-line incidence graph of the projective plane over Z_q (q prime):
    (q+1)-regular, bipartite, girth 6, 2(q^2+q+1) vertices. q=2 gives the
    Heawood graph."""
    if q < 2 or any(q % p == 0 for p in range(2, q)):
        raise InfeasibleParams("projective incidence needs a prime order")

    def normalize(vec):
        for coord in vec:
            if coord % q != 0:
                inv = pow(coord, -1, q)
                return tuple((x * inv) % q for x in vec)
        return None

    points = sorted(
        {
            norm
            for a in range(q)
            for b in range(q)
            for c in range(q)
            if (norm := normalize((a, b, c))) is not None
        }
    )
    index = {p: i for i, p in enumerate(points)}
    npts = len(points)
    edges = []
    for li, line in enumerate(points):  # lines are the same normalized triples
        for p in points:
            if sum(x * y for x, y in zip(line, p)) % q == 0:
                edges.append((index[p], npts + li))
    return Graph(2 * npts, edges)


def heawood() -> Graph:
    return projective_incidence(2)


def random_regular(n: int, d: int, rng: random.Random) -> Graph:
    """Random d-regular simple graph via the pairing model with rejection."""
    if n * d % 2 != 0:
        raise InfeasibleParams(f"n*d must be even, got n={n} d={d}")
    if not 0 <= d < n:
        raise InfeasibleParams(f"need 0 <= d < n, got d={d} n={n}")
    while True:
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[::2], stubs[1::2]):
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, sorted(edges))


def random_biregular_bipartite(u_count: int, r: int, rng: random.Random) -> Graph:
    """Random bipartite graph with u_count left vertices of degree r and
    u_count*r/(r+1) right vertices of degree r+1 (pairing with rejection)."""
    if (u_count * r) % (r + 1) != 0:
        raise InfeasibleParams(f"u_count*r must be divisible by r+1, got u_count={u_count} r={r}")
    l_count = u_count * r // (r + 1)
    while True:
        left_stubs = [v for v in range(u_count) for _ in range(r)]
        right_stubs = [u_count + v for v in range(l_count) for _ in range(r + 1)]
        rng.shuffle(right_stubs)
        edges = set()
        ok = True
        for u, v in zip(left_stubs, right_stubs):
            if (u, v) in edges:
                ok = False
                break
            edges.add((u, v))
        if ok:
            return Graph(u_count + l_count, sorted(edges))


def random_regular_bipartite(side: int, d: int, rng: random.Random) -> Graph:
    """Random d-regular bipartite graph with `side` vertices per side."""
    if d > side:
        raise InfeasibleParams(f"degree {d} exceeds side size {side}")
    while True:
        left_stubs = [v for v in range(side) for _ in range(d)]
        right_stubs = [side + v for v in range(side) for _ in range(d)]
        rng.shuffle(right_stubs)
        edges = set()
        ok = True
        for u, v in zip(left_stubs, right_stubs):
            if (u, v) in edges:
                ok = False
                break
            edges.add((u, v))
        if ok:
            return Graph(2 * side, sorted(edges))
