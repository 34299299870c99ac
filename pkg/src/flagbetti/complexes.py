"""Simplicial complexes in facet (maximal face) representation.

Faces are bitmasks over an ambient vertex set 0..n-1.  The void complex
(no faces at all) is distinguished from the empty complex {emptyset}:
void has an empty facet list, the empty complex has the single facet 0.
The empty complex carries reduced homology in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, bits, complement, popcount

__all__ = [
    "Complex",
    "FaceCapExceeded",
    "VOID",
    "EMPTY",
    "from_facets",
    "simplex",
    "sphere0",
    "skeleton_simplex",
    "independence_complex",
    "neighbourhood_complex",
    "dominance_complex",
    "minimal_nonfaces",
    "alexander_dual",
    "bip_graph",
    "join",
    "suspension",
    "link",
    "delete_vertex",
    "face_census",
    "all_faces",
    "class_membership",
    "max_face_count",
    "squash",
    "read_facet_file",
    "write_facet_file",
]

DEFAULT_FACE_CAP = 1 << 22
DOMINANCE_CAP = 24


class FaceCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"face enumeration exceeded cap of {cap} faces")
        self.cap = cap


def _prune_to_maximal(masks) -> tuple[int, ...]:
    """Inclusion-maximal members, sorted for a deterministic representation."""
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m), reverse=True)
    out: list[int] = []
    for m in uniq:
        if not any(m & f == m for f in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Complex:
    """Simplicial complex given by its facet antichain over n vertices."""

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        seen = set()
        for f in self.facets:
            if f & ~full:
                raise ValueError("facet vertex out of range")
            if f in seen:
                raise ValueError("duplicate facet")
            seen.add(f)
        for f in self.facets:
            for g in self.facets:
                if f != g and f & g == f:
                    raise ValueError("facets must form an antichain")
        if list(self.facets) != sorted(self.facets):
            raise ValueError("facets must be sorted")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == (0,)

    @property
    def used_vertices(self) -> int:
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    def dim(self) -> int:
        """Dimension; -1 for the empty complex. Undefined (error) for void."""
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def __repr__(self):
        if self.is_void:
            return f"Complex(n={self.n}, void)"
        return f"Complex(n={self.n}, facets={[sorted(bits(f)) for f in self.facets]})"


VOID = Complex(0, ())
EMPTY = Complex(0, (0,))


def from_facets(n: int, face_sets) -> Complex:
    """Complex generated by the given vertex sets (iterables or bitmasks)."""
    masks = [f if isinstance(f, int) else sum(1 << v for v in set(f)) for f in face_sets]
    return Complex(n, _prune_to_maximal(masks))


def simplex(n: int) -> Complex:
    return Complex(n, ((1 << n) - 1,))


def sphere0() -> Complex:
    return Complex(2, (1, 2))


def skeleton_simplex(k: int, s: int) -> Complex:
    """s-dimensional skeleton of the k-dimensional simplex (k+1 vertices)."""
    if k < 0 or s < -1 or s > k:
        raise ValueError("need -1 <= s <= k and k >= 0")
    if s == -1:
        return Complex(k + 1, (0,))
    facets = [sum(1 << v for v in c) for c in combinations(range(k + 1), s + 1)]
    return Complex(k + 1, tuple(sorted(facets)))


# ---------------------------------------------------------------------------
# complexes from graphs

def independence_complex(g: Graph) -> Complex:
    """Faces are the independent sets of g; facets computed by pivoting
    Bron-Kerbosch on the complement's cliques."""
    if g.n == 0:
        return Complex(0, (0,))
    h = complement(g)
    facets: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            facets.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: popcount(p & h.adj[u]))
        for v in bits(p & ~h.adj[pivot]):
            expand(r | 1 << v, p & h.adj[v], x & h.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, g.vertex_mask, 0)
    return Complex(g.n, tuple(sorted(facets)))


def neighbourhood_complex(g: Graph) -> Complex:
    """Complex on the non-isolated vertices generated by the open
    neighbourhoods N(v).  Edgeless graphs yield the void complex."""
    nonisolated = [v for v in range(g.n) if g.adj[v]]
    if not nonisolated:
        return VOID
    pos = {v: i for i, v in enumerate(nonisolated)}
    gen = []
    for v in nonisolated:
        gen.append(sum(1 << pos[u] for u in bits(g.adj[v])))
    return Complex(len(nonisolated), _prune_to_maximal(gen))


def dominance_complex(g: Graph, cap: int = DOMINANCE_CAP) -> Complex:
    """Faces are complements of dominating sets of g (brute force)."""
    if g.n > cap:
        raise ValueError(f"dominance complex refused for n={g.n} > cap={cap}")
    if g.n == 0:
        return Complex(0, (0,))
    full = g.vertex_mask
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    minimal: list[int] = []
    # subsets in increasing popcount so minimality filtering is one pass
    subsets = sorted(range(1 << g.n), key=popcount)
    for s in subsets:
        dominated = 0
        for v in bits(s):
            dominated |= closed[v]
        if dominated != full:
            continue
        if any(m & s == m for m in minimal):
            continue
        minimal.append(s)
    return Complex(g.n, _prune_to_maximal([full ^ m for m in minimal]))


# ---------------------------------------------------------------------------
# non-faces and Alexander duality

def minimal_nonfaces(k: Complex) -> tuple[int, ...]:
    """Inclusion-minimal vertex sets of the ambient set contained in no
    facet, i.e. minimal transversals of the facet complements."""
    if k.is_void:
        raise ValueError("void complex has no non-faces")
    full = (1 << k.n) - 1
    holes = sorted({full ^ f for f in k.facets}, key=popcount)
    if not holes or holes[0] == 0:
        # some facet is the full vertex set: no non-faces
        return ()
    found: list[int] = []

    def branch(chosen: int, allowed: int, remaining: list[int]):
        rem = [h for h in remaining if not h & chosen]
        if not rem:
            if not any(t & chosen == t for t in found if t != chosen):
                found.append(chosen)
            return
        hole = rem[0]
        for v in bits(hole & allowed):
            branch(chosen | 1 << v, allowed, rem)
            allowed &= ~(1 << v)

    branch(0, full, holes)
    # branching can emit non-minimal transversals; keep the minimal ones
    found.sort(key=popcount)
    minimal: list[int] = []
    for t in found:
        if not any(m & t == m for m in minimal):
            minimal.append(t)
    return tuple(sorted(minimal))


def alexander_dual(k: Complex) -> Complex:
    """Dual on the same ambient vertices: faces are complements of
    non-faces.  Facets of the dual are complements of minimal non-faces."""
    if k.is_void:
        raise ValueError("void complex has no Alexander dual")
    full = (1 << k.n) - 1
    nonfaces = minimal_nonfaces(k)
    if not nonfaces:
        return Complex(k.n, ())
    return Complex(k.n, tuple(sorted(full ^ t for t in nonfaces)))


def bip_graph(k: Complex) -> Graph:
    """Bipartite graph on vertices + facets with edges for non-incidence."""
    if k.is_void or k.n == 0:
        raise ValueError("bip graph needs a complex with at least one vertex")
    m = len(k.facets)
    adj = [0] * (k.n + m)
    for j, f in enumerate(k.facets):
        for v in range(k.n):
            if not f >> v & 1:
                adj[v] |= 1 << (k.n + j)
                adj[k.n + j] |= 1 << v
    return Graph(k.n + m, tuple(adj))


# ---------------------------------------------------------------------------
# joins, links, deletions

def join(k: Complex, l: Complex) -> Complex:
    """Join; faces are unions of a face of each, l relabelled above k."""
    if k.is_void or l.is_void:
        raise ValueError("join of a void complex is undefined here")
    facets = [f | (g << k.n) for f in k.facets for g in l.facets]
    return Complex(k.n + l.n, tuple(sorted(facets)))


def suspension(k: Complex) -> Complex:
    if k.is_void:
        raise ValueError("suspension of the void complex is undefined")
    return join(Complex(2, (1, 2)), k)


def link(k: Complex, v: int) -> Complex:
    """Link of v, on the ambient vertex set minus v (order-preserving)."""
    if k.is_void or not 0 <= v < k.n:
        raise ValueError("invalid vertex for link")
    if not any(f >> v & 1 for f in k.facets):
        raise ValueError(f"{v} is not a vertex of any face")
    members = [_drop_vertex(f, v) for f in k.facets if f >> v & 1]
    return Complex(k.n - 1, _prune_to_maximal(members))


def delete_vertex(k: Complex, v: int) -> Complex:
    """Subcomplex of faces avoiding v, on the ambient set minus v."""
    if k.is_void or not 0 <= v < k.n:
        raise ValueError("invalid vertex for deletion")
    members = [_drop_vertex(f & ~(1 << v), v) for f in k.facets]
    return Complex(k.n - 1, _prune_to_maximal(members))


def _drop_vertex(mask: int, v: int) -> int:
    low = mask & ((1 << v) - 1)
    return low | (mask >> (v + 1)) << v


def squash(k: Complex) -> Complex:
    """Same complex on the used vertices only (order-preserving relabel).
    Betti numbers are unchanged; only the ambient count shrinks."""
    if k.is_void:
        return k
    used = list(bits(k.used_vertices))
    pos = {v: i for i, v in enumerate(used)}
    facets = tuple(sorted(sum(1 << pos[v] for v in bits(f)) for f in k.facets))
    return Complex(len(used), facets)


# ---------------------------------------------------------------------------
# face enumeration and classification

def all_faces(k: Complex, cap: int = DEFAULT_FACE_CAP) -> list[int]:
    """Every face (including the empty face 0) by downward closure."""
    if k.is_void:
        raise ValueError("void complex has no faces")
    seen: set[int] = set()
    for facet in k.facets:
        stack = [facet]
        while stack:
            f = stack.pop()
            if f in seen:
                continue
            seen.add(f)
            if len(seen) > cap:
                raise FaceCapExceeded(cap)
            for v in bits(f):
                sub = f & ~(1 << v)
                if sub not in seen:
                    stack.append(sub)
    return sorted(seen, key=lambda m: (popcount(m), m))


def face_census(k: Complex, cap: int = DEFAULT_FACE_CAP) -> dict:
    """f-vector indexed by face cardinality, plus the total face count."""
    faces = all_faces(k, cap)
    fvec: dict[int, int] = {}
    for f in faces:
        fvec[popcount(f)] = fvec.get(popcount(f), 0) + 1
    return {"f_vector": fvec, "total": len(faces)}


def class_membership(k: Complex) -> dict:
    """Flagness plus the missing-face parameter d_F and the facet-size
    deficiency d_M used by the complex-level bounds."""
    if k.is_void:
        raise ValueError("void complex has no class data")
    nonfaces = minimal_nonfaces(k)
    d_f = max((popcount(t) for t in nonfaces), default=0)
    d_m = k.n - min(popcount(f) for f in k.facets)
    return {
        "is_flag": d_f <= 2,
        "min_nonface_max_size": d_f,
        "max_facet_deficiency": d_m,
    }


def max_face_count(k: Complex) -> int:
    if k.is_void:
        raise ValueError("void complex has no faces")
    return len(k.facets)


# ---------------------------------------------------------------------------
# facet file format:
#   line 1: "n <vertex count>"
#   then one facet per line as space-separated vertex indices,
#   or a single line "empty" / "void"

def write_facet_file(k: Complex) -> str:
    lines = [f"n {k.n}"]
    if k.is_void:
        lines.append("void")
    elif k.is_empty_complex:
        lines.append("empty")
    else:
        for f in k.facets:
            lines.append(" ".join(str(v) for v in bits(f)))
    return "\n".join(lines) + "\n"


def read_facet_file(text: str) -> Complex:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("facet file must start with 'n <count>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError("bad vertex count in facet file header") from None
    body = lines[1:]
    if body == ["void"]:
        return Complex(n, ())
    if body == ["empty"]:
        return Complex(n, (0,))
    facets = []
    for i, ln in enumerate(body, start=2):
        try:
            verts = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ValueError(f"bad facet on line {i}") from None
        if any(not 0 <= v < n for v in verts):
            raise ValueError(f"vertex out of range on line {i}")
        facets.append(sum(1 << v for v in verts))
    if not facets:
        raise ValueError("facet file has no facets; use 'void' or 'empty'")
    return from_facets(n, facets)
