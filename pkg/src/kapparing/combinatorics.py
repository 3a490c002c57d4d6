"""Partitions, refinement, Faber's kappa/psi basis change, vertex profiles and
stable weighted graphs.

A partition is a tuple of positive ints in non-increasing order.  A profile is a
tuple of ``(genus, points)`` pairs in canonical order: decreasing vertex
dimension ``3g-3+m``, ties broken by decreasing genus.  Positive-dimension
vertices therefore come first and line up with the parts of the partition
they realize.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, Optional, Sequence

Partition = tuple[int, ...]
Vertex = tuple[int, int]
Profile = tuple[Vertex, ...]


class GraphError(ValueError):
    pass


# --- partitions ------------------------------------------------------------

def _partitions(d: int, largest: int) -> Iterator[Partition]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for tail in _partitions(d - first, first):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _all_partitions(d: int) -> tuple[Partition, ...]:
    return tuple(_partitions(d, d))


def partitions(d: int, max_len: Optional[int] = None) -> list[Partition]:
    """Partitions of d in reverse-lexicographic order, optionally with at most max_len parts.

    >>> partitions(4, 2)
    [(4,), (3, 1), (2, 2)]
    """
    if d < 0:
        raise ValueError("negative degree")
    out = _all_partitions(d)
    if max_len is None:
        return list(out)
    return [p for p in out if len(p) <= max_len]


def canonical_partition(parts: Sequence[int]) -> Partition:
    if any(a <= 0 for a in parts):
        raise ValueError(f"partition parts must be positive: {list(parts)}")
    return tuple(sorted(parts, reverse=True))


def refines(p1: Sequence[int], p2: Sequence[int]) -> bool:
    """True iff the parts of p1 group into blocks whose sums are the parts of p2."""
    if sum(p1) != sum(p2):
        raise ValueError(f"degree mismatch: {sum(p1)} != {sum(p2)}")
    if len(p1) < len(p2):
        return False
    parts = sorted(p1, reverse=True)
    bins = sorted(p2, reverse=True)

    def place(i: int, residual: list[int]) -> bool:
        if i == len(parts):
            return True
        tried = set()
        for b, r in enumerate(residual):
            if r >= parts[i] and r not in tried:
                tried.add(r)
                residual[b] -= parts[i]
                ok = place(i + 1, residual)
                residual[b] += parts[i]
                if ok:
                    return True
        return False

    return place(0, bins)


# --- Faber's formula -------------------------------------------------------

def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


def faber_expand(p: Sequence[int]) -> dict[Partition, int]:
    """psi(p) = sum over sigma in S_k of kappa_{sigma(p)}, as {kappa monomial: coefficient}.

    A set partition into blocks B is hit by prod (|B|-1)! permutations.
    """
    if len(p) == 0:
        raise ValueError("empty partition")
    terms: Counter = Counter()
    for blocks in _set_partitions(list(range(len(p)))):
        mono = tuple(sorted((sum(p[i] for i in b) for b in blocks), reverse=True))
        terms[mono] += prod(factorial(len(b) - 1) for b in blocks)
    return dict(terms)


def faber_order(d: int) -> list[Partition]:
    """P(d) sorted by decreasing length, reverse-lex within a length."""
    return sorted(partitions(d), key=lambda p: -len(p))


def faber_matrix(d: int) -> tuple[list[Partition], list[list[Fraction]]]:
    """Matrix expressing psi(p) in the kappa(p') basis, rows/cols in :func:`faber_order`."""
    labels = faber_order(d)
    index = {p: i for i, p in enumerate(labels)}
    mat = [[Fraction(0)] * len(labels) for _ in labels]
    for r, p in enumerate(labels):
        for mono, c in faber_expand(p).items():
            mat[r][index[mono]] = Fraction(c)
    return labels, mat


# --- profiles --------------------------------------------------------------

def vertex_dim(v: Vertex) -> int:
    return 3 * v[0] - 3 + v[1]


def canonical_profile(vertices) -> Profile:
    vs = [(int(g), int(m)) for g, m in vertices]
    for g, m in vs:
        if g < 0 or m < 1 or 2 * g + m <= 2:
            raise ValueError(f"vertex {(g, m)} is not in Q")
    return tuple(sorted(vs, key=lambda v: (vertex_dim(v), v[0]), reverse=True))


def shape(q: Profile) -> Partition:
    return tuple(sorted((vertex_dim(v) for v in q if vertex_dim(v) > 0), reverse=True))


def profiles(p: Sequence[int], g: int, n: int) -> list[Profile]:
    """Q(p; g, n): profiles of connected stable graphs of type (g, n) realizing p."""
    p = canonical_partition(p)
    d, k = sum(p), len(p)
    if n < 1:
        raise ValueError("at least one marked point is required")
    if d > 3 * g - 3 + n:
        raise ValueError(f"degree {d} exceeds dim M_{{{g},{n}}}")
    lower = (d + k + 2) - (2 * g + n)
    ranges = [range((a + 2) // 3 + 1) for a in p]
    found = set()
    for genera in product(*ranges):
        s = sum(genera)
        if not lower <= s <= g:
            continue
        m = 2 * g - 2 + n + s - d
        if m < 1:
            continue
        verts = [(gi, a + 3 - 3 * gi) for gi, a in zip(genera, p)]
        verts += [(0, 3)] * (m - k)
        found.add(canonical_profile(verts))
    return sorted(found, key=profile_sort_key)


def profile_sort_key(q: Profile):
    return (shape(q), tuple((-g, m) for g, m in q))


def profiles_all(d: int, g: int, n: int) -> tuple[list[Profile], list[Partition]]:
    """Q(d; g, n) and the set P(d; g, n) of shapes it achieves."""
    rows = set()
    for p in partitions(d):
        rows.update(profiles(p, g, n))
    rows = sorted(rows, key=profile_sort_key, reverse=True)
    achieved = sorted({shape(q) for q in rows}, reverse=True)
    return rows, achieved


# --- stable weighted graphs ------------------------------------------------

@dataclass
class StableWeightedGraph:
    """Vertices carry (genus, marked points); edges are unordered index pairs, loops allowed."""

    vertices: list[tuple[int, int]]
    edges: list[tuple[int, int]] = field(default_factory=list)

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def profile(self) -> Profile:
        return canonical_profile(
            (g, ni + di) for (g, ni), di in zip(self.vertices, self.degrees())
        )


def validate_graph(G: StableWeightedGraph) -> tuple[int, int]:
    """Check connectivity and vertex stability; return (g(G), n(G))."""
    V = len(G.vertices)
    if V == 0:
        raise GraphError("disconnected: graph has no vertices")
    for i, j in G.edges:
        if not (0 <= i < V and 0 <= j < V):
            raise GraphError(f"edge {(i, j)} references a missing vertex")
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in G.edges:
        parent[find(i)] = find(j)
    if len({find(i) for i in range(V)}) != 1:
        raise GraphError("disconnected")
    for idx, ((gi, ni), di) in enumerate(zip(G.vertices, G.degrees())):
        if gi < 0 or ni < 0:
            raise GraphError(f"negative weight at vertex {idx}")
        if 2 * gi + ni + di <= 2:
            raise GraphError(f"unstable vertex {idx}")
    genus = sum(g for g, _ in G.vertices) + len(G.edges) - V + 1
    return genus, sum(n for _, n in G.vertices)


def witness_graph(q: Sequence[Vertex], e: int) -> StableWeightedGraph:
    """A connected stable graph with e edges whose profile is q.

    Vertices with a single special point are hung off a vertex that still has
    a free marked point; the rest are chained in a path and any further edges
    join the lexicographically first free slots.
    """
    q = canonical_profile(q)
    if e < len(q) - 1 or sum(m for _, m in q) < 2 * e:
        raise GraphError("no witness exists under Lemma hypotheses")
    order = sorted(range(len(q)), key=lambda i: (q[i][1], i))
    G = _witness(q, order, e)
    validate_graph(G)
    if G.profile() != q:
        raise AssertionError("witness profile mismatch")
    return G


def _witness(q: Profile, order: list[int], e: int) -> StableWeightedGraph:
    # order: vertex indices sorted by increasing m
    first = order[0]
    if q[first][1] == 1 and len(order) > 1:
        G = _witness(q, order[1:], e - 1)
        for i in sorted(order[1:]):
            if G.vertices[i][1] > 0:
                gi, ni = G.vertices[i]
                G.vertices[i] = (gi, ni - 1)
                G.vertices[first] = (q[first][0], 0)
                G.edges.append((min(first, i), max(first, i)))
                return G
        raise GraphError("no vertex with a free marked point to attach to")
    path = sorted(order)
    used = set()
    edges = []
    for a, b in zip(path, path[1:]):
        used.update({(a, 1), (b, 0)})
        edges.append((a, b))
    free = [(i, s) for i in path for s in range(q[i][1]) if (i, s) not in used]
    extra = e - (len(path) - 1)
    for t in range(extra):
        (i, _), (j, _) = free[2 * t], free[2 * t + 1]
        edges.append((min(i, j), max(i, j)))
    vertices = [(0, 0)] * len(q)
    deg = Counter()
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    for i in path:
        vertices[i] = (q[i][0], q[i][1] - deg[i])
    G = StableWeightedGraph(vertices, edges)
    return G


# --- text forms ------------------------------------------------------------

_PROFILE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def format_partition(p: Sequence[int]) -> str:
    return "+".join(map(str, p)) if p else "0"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not re.fullmatch(r"\d+(\s*\+\s*\d+)*", text):
        raise ValueError(f"malformed partition {text!r}; expected a1+a2+...")
    return canonical_partition([int(x) for x in text.split("+")])


def format_profile(q: Profile) -> str:
    return "".join(f"({g},{m})" for g, m in q)


def parse_profile(text: str) -> Profile:
    text = text.replace(" ", "")
    if not text or _PROFILE_RE.sub("", text):
        raise ValueError(f"malformed profile {text!r}; expected (g1,m1)(g2,m2)...")
    return canonical_profile((int(a), int(b)) for a, b in _PROFILE_RE.findall(text))
