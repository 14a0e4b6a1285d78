"""Simple graphs on vertices 1..n: cliques, chordality, clique sums,
automorphisms, and the bipartite incidence graph of edges versus cliques.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import CapabilityError, GraphParseError

DEFAULT_AUT_BOUND = 10


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    # new vertex k corresponds to labels[k-1] in the parent graph
    labels: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            i, j = sorted(e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i and j <= self.n):
                raise ValueError(f"edge {{{i},{j}}} has an endpoint outside 1..{self.n}")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def non_edges(self) -> list:
        return [e for e in itertools.combinations(self.vertices, 2) if e not in self.edges]

    def neighbors(self) -> dict:
        nb = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return nb

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_clique(self, vs) -> bool:
        return all(self.has_edge(i, j) for i, j in itertools.combinations(sorted(vs), 2))

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v - 1]

    def components(self) -> list[tuple]:
        nb = self.neighbors()
        seen, out = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in nb[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def relabel(self, perm: Permutation) -> Graph:
        """Graph with edge ``{perm(i), perm(j)}`` for each edge ``{i, j}``."""
        return Graph(self.n, frozenset(tuple(sorted((perm(i), perm(j)))) for i, j in self.edges))

    def to_edge_list(self) -> str:
        return "\n".join([f"n={self.n}"] + [f"{i} {j}" for i, j in self.sorted_edges()]) + "\n"


@dataclass(frozen=True)
class Permutation:
    """Bijection of 1..n; ``images[k-1]`` is the image of ``k``."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for k, v in enumerate(cyc):
                images[v - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen, out = set(), []
        for k in range(1, self.n + 1):
            if k in seen or self(k) == k:
                continue
            cyc, v = [], k
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = self(v)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "id"


@dataclass(frozen=True)
class CliqueFamily:
    """Vertex subsets of size >= 2, each a sorted tuple, kept in lexicographic order."""

    members: tuple = ()

    def __post_init__(self):
        ms = sorted(tuple(sorted(m)) for m in self.members)
        object.__setattr__(self, "members", tuple(ms))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return tuple(sorted(item)) in self.members


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite graph: edges of a graph (left) versus family members (right).

    ``adjacency`` holds index pairs ``(left_index, right_index)``.
    """

    left: tuple
    right: tuple
    adjacency: tuple

    @property
    def n_vertices(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def n_edges(self) -> int:
        return len(self.adjacency)

    def _nodes_and_adj(self):
        nodes = [("L", k) for k in range(len(self.left))] + [("R", k) for k in range(len(self.right))]
        adj = {v: [] for v in nodes}
        for idx, (l, r) in enumerate(self.adjacency):
            adj[("L", l)].append((("R", r), idx))
            adj[("R", r)].append((("L", l), idx))
        return nodes, adj

    @property
    def n_components(self) -> int:
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        nodes, _ = self._nodes_and_adj()
        for v in nodes:
            find(v)
        for l, r in self.adjacency:
            parent[find(("L", l))] = find(("R", r))
        return len({find(v) for v in nodes})

    def bridges(self) -> list[tuple]:
        """Adjacency pairs whose removal disconnects their component."""
        nodes, adj = self._nodes_and_adj()
        disc, low, out = {}, {}, []
        counter = itertools.count()
        for root in nodes:
            if root in disc:
                continue
            disc[root] = low[root] = next(counter)
            stack = [(root, None, iter(adj[root]))]
            while stack:
                v, via, it = stack[-1]
                advanced = False
                for w, idx in it:
                    if idx == via:
                        continue
                    if w in disc:
                        low[v] = min(low[v], disc[w])
                    else:
                        disc[w] = low[w] = next(counter)
                        stack.append((w, idx, iter(adj[w])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            out.append(self.adjacency[via])
        return sorted(out)


# -- parsing -----------------------------------------------------------------

_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*$")


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Read an edge list, a DOT subset, or an inline ``n=3;1-2;1-3`` string."""
    if fmt == "auto":
        stripped = text.strip()
        if re.match(r"^(strict\s+)?graph\b", stripped):
            fmt = "dot"
        elif "\n" not in stripped and ";" in stripped:
            fmt = "inline"
        else:
            fmt = "edge-list"
    if fmt == "dot":
        return _parse_dot(text)
    if fmt == "inline":
        return _parse_inline(text)
    if fmt == "edge-list":
        return _parse_edge_list(text)
    raise GraphParseError(f"unknown graph format {fmt!r}")


def _build(n, pairs) -> Graph:
    seen = set()
    for (i, j), lineno in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphParseError(f"vertex index out of range 1..{n} in edge {i} {j}", lineno)
        if i == j:
            raise GraphParseError(f"loop at vertex {i}", lineno)
        e = (min(i, j), max(i, j))
        if e in seen:
            raise GraphParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
    return Graph(n, frozenset(seen))


def _parse_n(token: str, lineno) -> int:
    m = re.match(r"^\s*n\s*=\s*(\d+)\s*$", token)
    if not m or int(m.group(1)) < 1:
        raise GraphParseError("expected 'n=<positive integer>'", lineno)
    return int(m.group(1))


def _parse_edge_list(text: str) -> Graph:
    n, pairs = None, []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            n = _parse_n(line, lineno)
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"expected '<i> <j>', got {line!r}", lineno)
        i, j = int(parts[0]), int(parts[1])
        if i >= j:
            raise GraphParseError(f"edge must satisfy i < j, got {i} {j}", lineno)
        pairs.append(((i, j), lineno))
    if n is None:
        raise GraphParseError("missing 'n=<integer>' header", 1)
    return _build(n, pairs)


def _parse_inline(text: str) -> Graph:
    parts = [p.strip() for p in text.strip().split(";") if p.strip()]
    if not parts:
        raise GraphParseError("empty inline graph", 1)
    n = _parse_n(parts[0], 1)
    pairs = []
    for k, p in enumerate(parts[1:], start=2):
        m = re.match(r"^(\d+)\s*-\s*(\d+)$", p)
        if not m:
            raise GraphParseError(f"expected 'i-j', got {p!r} (item {k})", 1)
        pairs.append(((int(m.group(1)), int(m.group(2))), 1))
    return _build(n, pairs)


def _parse_dot(text: str) -> Graph:
    """Undirected DOT subset with integer node names; n is the largest node seen."""
    body_start = text.find("{")
    body_end = text.rfind("}")
    if body_start < 0 or body_end < body_start:
        raise GraphParseError("DOT input needs 'graph { ... }'", 1)
    offset = text.count("\n", 0, body_start)
    nodes, pairs = set(), []
    body = text[body_start + 1:body_end]
    for lineno, line in enumerate(body.split("\n"), start=offset + 1):
        line = line.split("//")[0]
        for stmt in line.split(";"):
            if not stmt.strip():
                continue
            chain = [s.strip() for s in stmt.split("--")]
            if len(chain) >= 2:
                if not all(c.isdigit() for c in chain):
                    raise GraphParseError(f"unsupported DOT statement {stmt.strip()!r}", lineno)
                vs = [int(c) for c in chain]
                nodes.update(vs)
                pairs.extend(((u, v), lineno) for u, v in zip(vs, vs[1:]))
            elif _DOT_NODE.match(stmt):
                nodes.add(int(stmt))
            else:
                raise GraphParseError(f"unsupported DOT statement {stmt.strip()!r}", lineno)
    if not nodes:
        raise GraphParseError("DOT graph has no nodes", offset + 1)
    if min(nodes) < 1:
        raise GraphParseError("DOT node names must be positive integers", offset + 1)
    return _build(max(nodes), pairs)


# -- cliques -------------------------------------------------------------------


def maximal_cliques(g: Graph) -> CliqueFamily:
    """Inclusion-maximal cliques of size >= 2 (Bron-Kerbosch with pivoting)."""
    nb = g.neighbors()
    found = []

    def expand(r, p, x):
        if not p and not x:
            if len(r) >= 2:
                found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(nb[u] & p), -u))
        for v in sorted(p - nb[pivot]):
            expand(r | {v}, p & nb[v], x & nb[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return CliqueFamily(tuple(found))


def cliques_of_size(g: Graph, k: int) -> list[tuple]:
    nb = g.neighbors()
    out = []

    def grow(clique, cands):
        if len(clique) == k:
            out.append(tuple(clique))
            return
        for v in sorted(cands):
            if v > (clique[-1] if clique else 0):
                grow(clique + [v], cands & nb[v])

    grow([], set(g.vertices))
    return out


def all_cliques(g: Graph) -> list[tuple]:
    """Every nonempty clique, ordered by size then lexicographically."""
    out = []
    k = 1
    while True:
        layer = cliques_of_size(g, k)
        if not layer:
            return out
        out.extend(layer)
        k += 1


def is_k4_free(g: Graph) -> bool:
    return not cliques_of_size(g, 4)


def four_cliques_almost_disjoint(g: Graph) -> bool:
    """No two 4-cliques share three vertices."""
    seen = set()
    for q in cliques_of_size(g, 4):
        for tri in itertools.combinations(q, 3):
            if tri in seen:
                return False
            seen.add(tri)
    return True


# -- chordality and clique sums ------------------------------------------------


def is_chordal(g: Graph) -> tuple[bool, tuple | None]:
    """Chordality test with a perfect elimination ordering as witness.

    Maximum cardinality search numbers the vertices; its reverse is a perfect
    elimination ordering exactly when the graph is chordal, which is checked
    directly.
    """
    nb = g.neighbors()
    weight = {v: 0 for v in g.vertices}
    visit = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        visit.append(v)
        for w in nb[v]:
            if w in weight:
                weight[w] += 1
    order = tuple(reversed(visit))
    return (True, order) if is_perfect_elimination(g, order) else (False, None)


def is_perfect_elimination(g: Graph, order) -> bool:
    pos = {v: k for k, v in enumerate(order)}
    nb = g.neighbors()
    return all(g.is_clique([w for w in nb[v] if pos[w] > pos[v]]) for v in order)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph relabelled 1..|X| in increasing order; ``labels`` maps back."""
    xs = sorted(set(vertices))
    if not xs:
        raise ValueError("induced subgraph of the empty vertex set")
    if xs[0] < 1 or xs[-1] > g.n:
        raise ValueError(f"vertices {xs} not all in 1..{g.n}")
    index = {v: k for k, v in enumerate(xs, start=1)}
    edges = frozenset((index[i], index[j]) for i, j in g.edges if i in index and j in index)
    labels = tuple(g.label(v) for v in xs)
    return Graph(len(xs), edges, labels)


@dataclass(frozen=True)
class CliqueSum:
    part1: Graph
    part2: Graph
    separator: tuple  # vertices of the parent graph


def clique_sum_split(g: Graph) -> CliqueSum | None:
    """Split along the smallest separating clique (ties lexicographic).

    ``part1`` is induced on the separator plus the component containing the
    smallest remaining vertex; ``part2`` on the separator plus the rest.
    """
    nb = g.neighbors()
    for sep in all_cliques(g):
        rest = [v for v in g.vertices if v not in sep]
        if not rest:
            continue
        remaining = set(rest)
        start = rest[0]
        comp, stack = {start}, [start]
        while stack:
            u = stack.pop()
            for w in nb[u] & remaining:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        if len(comp) == len(rest):
            continue
        v1 = set(sep) | comp
        v2 = set(sep) | (remaining - comp)
        return CliqueSum(induced_subgraph(g, v1), induced_subgraph(g, v2), tuple(sep))
    return None


# -- incidence graphs ---------------------------------------------------------


def incidence_graph(g: Graph, fam) -> IncidenceGraph:
    """Edges of ``g`` versus members of ``fam``; ``{i,j}`` meets ``S`` when both lie in ``S``."""
    left = tuple(g.sorted_edges())
    right = tuple(tuple(sorted(m)) for m in fam)
    for m in right:
        if not g.is_clique(m):
            raise ValueError(f"{m} is not a clique of the graph")
    adjacency = tuple(
        (li, ri)
        for li, (i, j) in enumerate(left)
        for ri, m in enumerate(right)
        if i in m and j in m
    )
    return IncidenceGraph(left, right, adjacency)


def betti1(lam: IncidenceGraph) -> int:
    return lam.n_edges - lam.n_vertices + lam.n_components


def has_isthmus(lam: IncidenceGraph) -> bool:
    return bool(lam.bridges())


def triangle_incidence_graph(g: Graph) -> IncidenceGraph:
    """Incidence graph of all edges with all 3-cliques."""
    return incidence_graph(g, CliqueFamily(tuple(cliques_of_size(g, 3))))


# -- automorphisms -------------------------------------------------------------


def automorphisms(g: Graph, bound: int = DEFAULT_AUT_BOUND) -> list[Permutation]:
    """All automorphisms, in lexicographic order of their image tuples.

    Exhaustive backtracking over S_n, pruned by degree and by adjacency with
    the vertices already placed.
    """
    if g.n > bound:
        raise CapabilityError(
            f"automorphism search is limited to n <= {bound} (graph has n = {g.n}); "
            "raise the bound with --aut-bound"
        )
    nb = g.neighbors()
    deg = {v: len(nb[v]) for v in g.vertices}
    out = []
    images: list = []
    used: set = set()

    def place(v):
        if v > g.n:
            out.append(Permutation(tuple(images)))
            return
        for w in g.vertices:
            if w in used or deg[w] != deg[v]:
                continue
            if any((u in nb[v]) != (images[u - 1] in nb[w]) for u in range(1, v)):
                continue
            images.append(w)
            used.add(w)
            place(v + 1)
            images.pop()
            used.discard(w)

    place(1)
    return out


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test for small graphs."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    return any(g.relabel(Permutation(p)) == h for p in itertools.permutations(g.vertices))
