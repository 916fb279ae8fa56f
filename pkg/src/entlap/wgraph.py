"""Simple weighted graphs read off Laplacians, and the edge functional W[i,j].

Vertices are 0-based everywhere in the API; rendering (DOT, CLI) is 1-based.
Edge weights are carried as Exact scalars so the W arithmetic and the DOT
labels stay exact whenever the source matrix was exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import Exact
from .errors import NoEdges, NotAnEdge, VertexOutOfRange
from .laplacian import Laplacian


class WConvention(str, Enum):
    """Neighbour range in the two cross sums of W[i,j].

    EXCLUDED: k runs over vertices other than i and j themselves.
    INCLUSIVE: k runs over all other vertices, so k=j qualifies for the first
    sum (a simple graph has no self-loops, hence j is not adjacent to j) and
    contributes w_ij, likewise k=i contributes w_ji to the second sum.

    Only the INCLUSIVE reading makes the spectral bound
    lambda_max(L) <= max_{i~j} W[i,j]/2 a theorem: on a single weighted edge
    lambda_max = 2w while the EXCLUDED reading gives W/2 = w.
    """

    EXCLUDED = "excluded"
    INCLUSIVE = "inclusive"


DEFAULT_EDGE_THRESHOLD = 1e-12


@dataclass(frozen=True)
class WeightedGraph:
    """Simple weighted graph: no loops, no duplicate edges, positive weights."""

    vertex_count: int
    edges: tuple[tuple[int, int, Exact], ...]  # i < j, weight > 0
    exact_weights: bool = False

    def neighbors(self) -> dict[int, dict[int, Exact]]:
        adj: dict[int, dict[int, Exact]] = {i: {} for i in range(self.vertex_count)}
        for i, j, w in self.edges:
            adj[i][j] = w
            adj[j][i] = w
        return adj

    def _neighbors_numeric(self):
        """Adjacency with Exact weights for exact graphs, floats otherwise
        (the float path keeps the big property ensembles cheap)."""
        adj: dict[int, dict] = {i: {} for i in range(self.vertex_count)}
        for i, j, w in self.edges:
            val = w if self.exact_weights else float(w)
            adj[i][j] = val
            adj[j][i] = val
        return adj

    def edge_count(self) -> int:
        return len(self.edges)


def graph_from_laplacian(lap: Laplacian, edge_threshold: float = DEFAULT_EDGE_THRESHOLD) -> WeightedGraph:
    """Edge (i,j, -l_ij) for every off-diagonal |l_ij| above the threshold."""
    n = lap.n
    edges = []
    exact = lap.exact
    thr = Fraction(edge_threshold)
    for i in range(n):
        for j in range(i + 1, n):
            if exact is not None:
                w = -exact[i][j]
                if abs(w) > Exact.of(thr):
                    edges.append((i, j, w))
            else:
                w = -float(lap.array[i, j])
                if abs(w) > edge_threshold:
                    edges.append((i, j, Exact.of(Fraction(w))))
    return WeightedGraph(vertex_count=n, edges=tuple(edges), exact_weights=exact is not None)


def is_connected(g: WeightedGraph) -> bool:
    """True iff all vertices lie in one component (breadth-first traversal)."""
    if g.vertex_count <= 1:
        return True
    adj = g.neighbors()
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.vertex_count


def vertex_weight(g: WeightedGraph, i: int) -> Exact:
    """Sum of incident edge weights (the Laplacian diagonal entry)."""
    if not 0 <= i < g.vertex_count:
        raise VertexOutOfRange(f"vertex {i} outside [0, {g.vertex_count})")
    total = Exact()
    for a, b, w in g.edges:
        if a == i or b == i:
            total = total + w
    return total


def _edge_value(adj, n: int, i: int, j: int, convention: WConvention):
    """W[i,j] over a prebuilt adjacency (weights all Exact or all float)."""
    nbrs_i, nbrs_j = adj[i], adj[j]
    total = sum(nbrs_i.values()) + sum(nbrs_j.values())
    if convention == WConvention.INCLUSIVE:
        total = total + nbrs_i[j] + nbrs_j[i]
    for k in range(n):
        if k == i or k == j:
            continue
        ki, kj = k in nbrs_i, k in nbrs_j
        if ki and not kj:
            total = total + nbrs_i[k]
        elif kj and not ki:
            total = total + nbrs_j[k]
        elif ki and kj:
            total = total + abs(nbrs_i[k] - nbrs_j[k])
    return total


def _as_exact(value) -> Exact:
    return value if isinstance(value, Exact) else Exact.of(Fraction(value))


def edge_w(g: WeightedGraph, i: int, j: int,
           convention: WConvention = WConvention.EXCLUDED) -> Exact:
    """The edge functional

        W[i,j] = w_i + w_j + sum_{k~i, k!~j} w_ik + sum_{k~j, k!~i} w_jk
                 + sum_{k~i, k~j} |w_ik - w_jk|

    over an existing edge (i,j); see WConvention for the k range.
    """
    for v in (i, j):
        if not 0 <= v < g.vertex_count:
            raise VertexOutOfRange(f"vertex {v} outside [0, {g.vertex_count})")
    adj = g._neighbors_numeric()
    if j not in adj[i]:
        raise NotAnEdge(f"({i}, {j}) is not an edge")
    return _as_exact(_edge_value(adj, g.vertex_count, i, j, convention))


def max_w(g: WeightedGraph, convention: WConvention = WConvention.EXCLUDED) -> Exact:
    """Maximum of edge_w over all edges."""
    if not g.edges:
        raise NoEdges("graph has no edges")
    adj = g._neighbors_numeric()
    best = None
    for i, j, _ in g.edges:
        val = _edge_value(adj, g.vertex_count, i, j, convention)
        if best is None or val > best:
            best = val
    return _as_exact(best)


def _weight_label(w: Exact, exact_weights: bool) -> str:
    if exact_weights:
        lit = w.format_literal()
        if lit is not None:
            return lit
    return f"{float(w):.12g}"


def export_dot(g: WeightedGraph) -> str:
    """Deterministic DOT text: undirected, vertices labelled 1..n, edge labels
    exact rationals when available else 12-significant-digit decimals."""
    lines = ["graph G {"]
    for i in range(g.vertex_count):
        lines.append(f"  {i + 1};")
    for i, j, w in sorted(g.edges):
        lines.append(f'  {i + 1} -- {j + 1} [label="{_weight_label(w, g.exact_weights)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
