"""Finite simple graphs on vertices 0..n-1 with bitset adjacency.

Vertex sets and neighbourhoods are plain Python ints used as bitmasks,
which keeps subgraph and independence-set operations fast at desk scale.
All operations are pure; Graph values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

__all__ = [
    "Graph",
    "Graph6Error",
    "parse_graph6",
    "encode_graph6",
    "empty_graph",
    "complete",
    "cycle",
    "crown",
    "disjoint_union",
    "join_sum",
    "copies",
    "induced",
    "complement",
    "delete_vertices",
    "delete_closed_neighborhood",
    "graph_predicates",
    "canonical_form",
    "canonical_graph",
    "bits",
    "popcount",
]

CANONICAL_CAP = 10


def bits(mask: int):
    """Yield the indices of set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adj[v] is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"neighbour of {v} out of range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 encoding (format of McKay's gtools; n <= 62, single length byte)

class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word (without trailing newline)."""
    if not text:
        raise Graph6Error("empty graph6 word", 0)
    if text.startswith(">>graph6<<"):
        text = text[10:]
    first = ord(text[0])
    if first == 126:
        raise Graph6Error("graphs with more than 62 vertices are unsupported", 0)
    if not 63 <= first <= 126:
        raise Graph6Error("invalid length character", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) != 1 + nbytes:
        if len(text) < 1 + nbytes:
            raise Graph6Error("truncated graph6 word", len(text))
        raise Graph6Error("trailing garbage after graph6 word", 1 + nbytes)
    bitstream = []
    for i, ch in enumerate(text[1:], start=1):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error("character out of graph6 range", i)
        val = code - 63
        bitstream.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 word (n <= 62)."""
    if g.n > 62:
        raise Graph6Error(f"graph6 supports at most 62 vertices, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# generators

def empty_graph(n: int = 0) -> Graph:
    return Graph(n, (0,) * n)


def complete(s: int) -> Graph:
    if s < 1:
        raise ValueError("complete graph needs s >= 1; use empty_graph for 0")
    full = (1 << s) - 1
    return Graph(s, tuple(full ^ (1 << v) for v in range(s)))


def cycle(s: int) -> Graph:
    if s < 3:
        raise ValueError("cycle needs s >= 3")
    return from_edges(s, [(v, (v + 1) % s) for v in range(s)])


def crown(s: int) -> Graph:
    """K_{s,s} minus a perfect matching: i ~ s+j iff i != j."""
    if s < 1:
        raise ValueError("crown needs s >= 1")
    adj = [0] * (2 * s)
    for i in range(s):
        for j in range(s):
            if i != j:
                adj[i] |= 1 << (s + j)
                adj[s + j] |= 1 << i
    return Graph(2 * s, tuple(adj))


# ---------------------------------------------------------------------------
# combinations of graphs

def _shift_mask(mask: int, k: int) -> int:
    return mask << k


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [_shift_mask(nb, g.n) for nb in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def join_sum(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [nb | hmask for nb in g.adj]
    adj += [_shift_mask(nb, g.n) | gmask for nb in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def copies(s: int, g: Graph) -> Graph:
    if s < 1:
        raise ValueError("copies needs s >= 1")
    out = g
    for _ in range(s - 1):
        out = disjoint_union(out, g)
    return out


def induced(g: Graph, w) -> Graph:
    """Induced subgraph on vertex set w (iterable or bitmask), relabelled
    order-preservingly to 0..|w|-1."""
    mask = w if isinstance(w, int) else sum(1 << v for v in set(w))
    if mask & ~g.vertex_mask:
        raise ValueError("vertex out of range")
    verts = list(bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & mask):
            adj[pos[v]] |= 1 << pos[u]
    return Graph(len(verts), tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full ^ nb ^ (1 << v)) for v, nb in enumerate(g.adj)))


def delete_vertices(g: Graph, w) -> Graph:
    mask = w if isinstance(w, int) else sum(1 << v for v in set(w))
    return induced(g, g.vertex_mask & ~mask)


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    return induced(g, g.vertex_mask & ~(g.adj[v] | 1 << v))


# ---------------------------------------------------------------------------
# predicates

def _is_bipartite(g: Graph) -> bool:
    color = [None] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if color[u] is None:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        new = g.adj[v] & ~seen
        seen |= new
        stack.extend(bits(new))
    return seen == g.vertex_mask


def _is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if v > u and g.adj[u] & g.adj[v]:
                return False
    return True


def graph_predicates(g: Graph) -> dict:
    """Structural facts used by the bound checks."""
    return {
        "mindeg": min((g.degree(v) for v in range(g.n)), default=None),
        "is_triangle_free": _is_triangle_free(g),
        "is_bipartite": _is_bipartite(g),
        "is_connected": _is_connected(g),
        "isolated_vertex_exists": any(nb == 0 for nb in g.adj) if g.n else False,
    }


# ---------------------------------------------------------------------------
# canonical labelling (brute force with colour refinement pruning, n <= 10)

def _refine_colors(g: Graph) -> list[int]:
    """Iterated degree refinement; returns invariant colour ranks."""
    sig = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        new = [
            (sig[v], tuple(sorted(sig[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(new)))}
        new_sig = [ranks[s] for s in new]
        if new_sig == sig:
            break
        sig = new_sig
    return sig


def _min_code(g: Graph, colors: list[int]) -> list[int]:
    """Vertex order realizing the lexicographically minimal column-code
    sequence over all colour-respecting orderings.  Code entry k is the
    adjacency of the vertex placed at position k to the already-placed
    vertices, as a bitmask."""
    n = g.n
    slot_color = sorted(colors)
    placed = [0] * n
    order: list[int] = []
    best_codes: list[int] = []
    best_order: list[int] = []

    def dfs(k: int, used: int):
        nonlocal best_codes, best_order
        if k == n:
            # pruning guarantees we only reach leaves that are <= best
            if not best_codes or placed[:n] < best_codes:
                best_codes = placed[:n]
                best_order = order[:]
            return
        cands = []
        for v in range(n):
            if used >> v & 1 or colors[v] != slot_color[k]:
                continue
            code = 0
            for i in range(k):
                if g.adj[v] >> order[i] & 1:
                    code |= 1 << i
            cands.append((code, v))
        cands.sort()
        tried = []
        for code, v in cands:
            # best may have improved inside an earlier sibling subtree,
            # so recompute the comparison state on every iteration
            if best_codes and placed[:k] == best_codes[:k] and code > best_codes[k]:
                break
            # skip interchangeable twins of an already-explored candidate
            skip = False
            for cw, w in tried:
                if cw == code and not (g.adj[v] ^ g.adj[w]) & ~(1 << v | 1 << w):
                    skip = True
                    break
            if skip:
                continue
            tried.append((code, v))
            placed[k] = code
            order.append(v)
            dfs(k + 1, used | 1 << v)
            order.pop()

    dfs(0, 0)
    return best_order


def canonical_graph(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """Canonically relabelled copy of g; equal for isomorphic inputs."""
    if g.n > cap:
        raise ValueError(f"canonical labelling refused for n={g.n} > cap={cap}")
    if g.n <= 1:
        return g
    colors = _refine_colors(g)
    order = _min_code(g, colors)
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for v in order:
        for u in bits(g.adj[v]):
            adj[pos[v]] |= 1 << pos[u]
    return Graph(g.n, tuple(adj))


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= cap)."""
    return encode_graph6(canonical_graph(g, cap)).encode("ascii")


@lru_cache(maxsize=None)
def _all_labelled_graphs(n: int):
    """All 2^(n(n-1)/2) labelled graphs on n vertices (test oracle helper)."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        out.append(from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    return out
