"""Undirected simple graphs with layer metadata.

Vertices are dense integers ``0..n-1``. Edges are unordered pairs stored as
``(u, v)`` with ``u < v``; self-loops and parallel edges are rejected at
construction time. A vertex may carry a :class:`LayerTag` recording which
layer of a layered construction it belongs to and which base vertex it is a
copy of (lifts multiply vertices; the tag is the provenance trail).

Graphs are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from math import inf
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotBipartite, NotRegular, ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class LayerTag:
    """Layer membership plus copy provenance for one vertex.

    ``layer`` is ``"L0"``, ``"U0"``, ``"U1"``, ..., ``"Dummy"``, or ``None``
    for vertices outside any layered construction. ``base_index`` names the
    vertex this one is a copy of (itself for unlifted graphs); ``copy_label``
    distinguishes the copies within one fiber (a group element index, a
    companion-graph vertex, or a composite ``"a/b"`` path through stages).
    """

    layer: str | None
    base_index: int
    copy_label: int | str | None = None


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "tags", "_edge_set")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge],
        tags: Mapping[int, LayerTag] | None = None,
    ):
        canon: list[Edge] = []
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            e = edge_key(u, v)
            if e in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(canon)
        self._edge_set = frozenset(canon)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.tags: dict[int, LayerTag] = dict(tags) if tags else {}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    def num_edges(self) -> int:
        return len(self.edges)

    def tag(self, v: int) -> LayerTag | None:
        return self.tags.get(v)

    def vertices_in_layer(self, layer: str) -> list[int]:
        return [v for v in range(self.n) if self.tags.get(v) and self.tags[v].layer == layer]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def with_tags(self, tags: Mapping[int, LayerTag]) -> "Graph":
        return Graph(self.n, self.edges, tags)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def girth(g: Graph) -> int | float:
    """Exact girth; ``math.inf`` for forests.

    BFS from every vertex; every non-tree edge (u, v) seen from a root
    yields a closed walk of length dist(u) + dist(v) + 1 through the root,
    which contains a cycle no longer than that. Minimising the candidate
    over all roots and all non-tree edges is exact for unweighted graphs.
    """
    best: int | float = inf
    dist = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        for v in range(g.n):
            dist[v] = -1
        dist[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # any candidate still discoverable from u has length >= 2*dist[u]
            if 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def degree_profile(g: Graph) -> Counter:
    """Multiset of vertex degrees as a Counter {degree: count}."""
    return Counter(len(a) for a in g.adj)


def is_regular(g: Graph, d: int) -> bool:
    return all(len(a) == d for a in g.adj)


def bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    """2-coloring (side0, side1) covering all vertices, or None if an odd
    cycle exists. Isolated vertices land on side0."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return ({v for v in range(g.n) if side[v] == 0}, {v for v in range(g.n) if side[v] == 1})


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartite_double_cover(g: Graph) -> Graph:
    """Replace each vertex i with copies (i,0), (i,1); each edge (i,j)
    becomes the crossing pair (i0,j1), (i1,j0).

    Copy (i, side) gets id 2*i + side. The cover is bipartite, preserves
    degrees, and kills every odd cycle, so an odd-girth input gains at
    least one unit of girth.
    """
    edges = []
    for u, v in g.edges:
        edges.append((2 * u, 2 * v + 1))
        edges.append((2 * u + 1, 2 * v))
    tags = {}
    for v in range(g.n):
        base = g.tags.get(v)
        layer = base.layer if base else None
        for side in (0, 1):
            tags[2 * v + side] = LayerTag(layer, v, side)
    return Graph(2 * g.n, edges, tags)


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring with colors 1..num_colors, num_colors <= maxdeg+1."""

    colors: dict[Edge, int]
    num_colors: int


def edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most maxdeg(G)+1 colors.

    Fan-recoloring in the Misra-Gries style: for each uncolored edge (u, v),
    grow a maximal fan at u, invert a two-color alternating path when the
    free colors at the two ends disagree, then rotate a fan prefix. The
    color count never exceeds maxdeg+1.
    """
    ncolors = g.max_degree() + 1
    colors: dict[Edge, int] = {}
    # used[v] = set of colors present at v
    used: list[set[int]] = [set() for _ in range(g.n)]
    # incident[v][c] = the neighbor joined to v by the edge colored c
    incident: list[dict[int, int]] = [{} for _ in range(g.n)]

    def free(v: int, c: int) -> bool:
        return c not in used[v]

    def min_free(v: int) -> int:
        for c in range(1, ncolors + 1):
            if c not in used[v]:
                return c
        raise AssertionError("no free color within maxdeg+1")

    def set_color(u: int, v: int, c: int | None) -> None:
        e = edge_key(u, v)
        old = colors.get(e)
        if old is not None:
            used[u].discard(old)
            used[v].discard(old)
            del incident[u][old]
            del incident[v][old]
            del colors[e]
        if c is not None:
            colors[e] = c
            used[u].add(c)
            used[v].add(c)
            incident[u][c] = v
            incident[v][c] = u

    def invert_path(start: int, c: int, d: int) -> None:
        # maximal path from `start` alternating d, c, d, ...; swap the colors
        chain: list[Edge] = []
        cur, want = start, d
        while want in used[cur]:
            nxt = incident[cur][want]
            chain.append(edge_key(cur, nxt))
            cur, want = nxt, c if want == d else d
        for e in chain:
            set_color(e[0], e[1], None)
        want = d
        prev = start
        for e in chain:
            other = e[1] if e[0] == prev else e[0]
            new = c if want == d else d
            set_color(prev, other, new)
            prev, want = other, c if want == d else d

    for u, v in g.edges:
        if edge_key(u, v) in colors:
            continue
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        extended = True
        while extended:
            extended = False
            for w in g.adj[u]:
                if w in in_fan:
                    continue
                cw = colors.get(edge_key(u, w))
                if cw is not None and free(fan[-1], cw):
                    fan.append(w)
                    in_fan.add(w)
                    extended = True
                    break
        c = min_free(u)
        d = min_free(fan[-1])
        if not free(u, d):
            invert_path(u, c, d)
        # first fan vertex with d free whose prefix is still a fan
        j = None
        for idx, w in enumerate(fan):
            if idx > 0:
                cw = colors.get(edge_key(u, fan[idx]))
                if cw is None or not free(fan[idx - 1], cw):
                    break
            if free(w, d):
                j = idx
                break
        if j is None:
            raise AssertionError("fan rotation target not found")
        # uncolor the prefix before re-assigning so no color transiently
        # sits on two edges at u (would corrupt the incident bookkeeping)
        shifted = [colors[edge_key(u, fan[i + 1])] for i in range(j)]
        for i in range(1, j + 1):
            set_color(u, fan[i], None)
        for i in range(j):
            set_color(u, fan[i], shifted[i])
        set_color(u, fan[j], d)

    nused = len(set(colors.values())) if colors else 0
    # remap to a contiguous 1..k range for stable downstream indexing
    remap = {c: i + 1 for i, c in enumerate(sorted(set(colors.values())))}
    return EdgeColoring({e: remap[c] for e, c in colors.items()}, nused)


@dataclass(frozen=True)
class MatchingDecomposition:
    """d pairwise-disjoint perfect matchings partitioning the edge set."""

    matchings: tuple[frozenset[Edge], ...]


def _hopcroft_karp(left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph given left vertices and their
    (sorted) right neighbor lists. Returns left -> right."""
    INF = float("inf")
    pair_l: dict[int, int] = {}
    pair_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for ll in left:
            if ll not in pair_l:
                dist[ll] = 0
                queue.append(ll)
            else:
                dist[ll] = INF
        reachable = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                mate = pair_r.get(w)
                if mate is None:
                    reachable = True
                elif dist[mate] == INF:
                    dist[mate] = dist[u] + 1
                    queue.append(mate)
        return reachable

    def dfs(u: int) -> bool:
        for w in adj[u]:
            mate = pair_r.get(w)
            if mate is None or (dist[mate] == dist[u] + 1 and dfs(mate)):
                pair_l[u] = w
                pair_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for ll in left:
            if ll not in pair_l:
                dfs(ll)
    return pair_l


def matching_decomposition(g: Graph) -> MatchingDecomposition:
    """Split a d-regular bipartite graph into exactly d perfect matchings.

    Repeatedly extracts a perfect matching by augmenting paths; after each
    extraction the remainder is (d-i)-regular bipartite, so a perfect
    matching always exists. Ties break toward smaller vertex indices.
    """
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("matching decomposition needs a bipartite graph")
    degs = {len(a) for a in g.adj}
    if len(degs) > 1:
        raise NotRegular(f"graph is not regular: degrees {sorted(degs)}")
    d = degs.pop() if degs else 0
    if d == 0:
        return MatchingDecomposition(())
    left = sorted(parts[0])
    remaining: dict[int, list[int]] = {v: list(g.adj[v]) for v in left}
    matchings: list[frozenset[Edge]] = []
    for _ in range(d):
        pair = _hopcroft_karp(left, remaining)
        if len(pair) != len(left):
            raise NotRegular("perfect matching extraction failed; graph not biregular")
        matching = frozenset(edge_key(u, w) for u, w in pair.items())
        matchings.append(matching)
        for u, w in pair.items():
            remaining[u].remove(w)
    return MatchingDecomposition(tuple(matchings))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Vertex- and edge-disjoint union; copy k occupies one contiguous id
    block and keeps its layer tags (base indices shifted into the block)."""
    total = sum(g.n for g in gs)
    edges: list[Edge] = []
    tags: dict[int, LayerTag] = {}
    offset = 0
    for g in gs:
        for u, v in g.edges:
            edges.append((u + offset, v + offset))
        for v, t in g.tags.items():
            tags[v + offset] = LayerTag(t.layer, t.base_index + offset, t.copy_label)
        offset += g.n
    return Graph(total, edges, tags)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]; tags follow their vertices."""
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    tags = {
        perm[v]: LayerTag(t.layer, perm[t.base_index], t.copy_label) for v, t in g.tags.items()
    }
    return Graph(g.n, edges, tags)


# --- edge-list text format ---------------------------------------------------
#
#   v <count>
#   # layer <vertex> <layer> <base_index> <copy_label-json>
#   <u> <v>          (0-based, u < v, one edge per line)


def write_edge_list(g: Graph) -> str:
    lines = [f"v {g.n}"]
    for v in sorted(g.tags):
        t = g.tags[v]
        layer = t.layer if t.layer is not None else "-"
        lines.append(f"# layer {v} {layer} {t.base_index} {json.dumps(t.copy_label)}")
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    n = None
    edges: list[Edge] = []
    tags: dict[int, LayerTag] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if fields[:1] == ["layer"]:
                if len(fields) != 5:
                    raise ParseError(f"line {lineno}: malformed layer comment")
                v = int(fields[1])
                layer = None if fields[2] == "-" else fields[2]
                try:
                    label = json.loads(fields[4])
                except json.JSONDecodeError as exc:
                    raise ParseError(f"line {lineno}: bad copy label") from exc
                tags[v] = LayerTag(layer, int(fields[3]), label)
            continue
        fields = line.split()
        if fields[0] == "v":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate vertex-count line")
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex") from exc
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'v <count>' header line")
    try:
        return Graph(n, edges, tags)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
