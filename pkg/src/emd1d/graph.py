"""EMD threshold graphs, the Earth Mover's Graph G(s, n), and Laplacian diagnostics.

Vertices are indices ``0..m-1``; labels and payloads ride along on :class:`EmdGraph`.
Distances between distributions are unit-normalized EMD, so thresholds live in
``[0, 1]``. Graph quantities that are combinatorial (components, mean distance,
isoperimetric number) are exact; the spectrum is floating point.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .emd import compositions, count_compositions, emd_continuous

ZERO_EIG_TOL = 1e-8


@dataclass(frozen=True)
class EmdGraph:
    labels: tuple
    payloads: tuple
    edges: frozenset  # of (u, v) with u < v
    threshold: object = None

    def __post_init__(self):
        m = len(self.labels)
        for u, v in self.edges:
            if not (0 <= u < v < m):
                raise ValueError(f"bad edge {(u, v)} for {m} vertices")

    @property
    def m(self) -> int:
        return len(self.labels)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.m)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbors()]

    @property
    def d_max(self) -> int:
        return max(self.degrees(), default=0)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # ascending
    off_diagonal_residual: float = 0.0
    sweeps: int = 0


def graph_from_edges(m: int, edges, labels: Sequence | None = None) -> EmdGraph:
    """Plain graph on ``m`` vertices; handy for tests and random suites."""
    es = frozenset((min(u, v), max(u, v)) for u, v in edges if u != v)
    labels = tuple(labels) if labels is not None else tuple(range(m))
    return EmdGraph(labels, tuple([None] * m), es)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def unit_distance_matrix(dists: Sequence[Sequence]) -> list[list]:
    """Pairwise unit-normalized EMD, ``emd_continuous / (n - 1)``."""
    lengths = {len(d) for d in dists}
    if len(lengths) > 1:
        raise ValueError(f"distributions have mixed lengths {sorted(lengths)}")
    n = lengths.pop() if lengths else 2
    if n < 2:
        raise ValueError("unit normalization needs n >= 2")
    m = len(dists)
    D = [[0] * m for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        d = emd_continuous(dists[i], dists[j]) / (n - 1)
        D[i][j] = D[j][i] = d
    return D


def _as_threshold(t):
    if isinstance(t, str):
        return Fraction(t)
    return t


def build_emd_graph(
    dists: Sequence[Sequence], threshold, labels: Sequence | None = None
) -> EmdGraph:
    """Join two distributions when their unit-normalized EMD is ``<= threshold``."""
    t = _as_threshold(threshold)
    if t < 0:
        raise ValueError("threshold must be non-negative")
    D = unit_distance_matrix(dists)
    edges = frozenset(
        (i, j) for i, j in itertools.combinations(range(len(dists)), 2) if D[i][j] <= t
    )
    labels = tuple(labels) if labels is not None else tuple(range(len(dists)))
    return EmdGraph(labels, tuple(tuple(d) for d in dists), edges, t)


def earth_movers_graph(s: int, n: int, max_vertices: int = 5000) -> EmdGraph:
    """Graph on C(s, n) joining compositions at discrete EMD exactly 1.

    EMD 1 means one unit moved between adjacent positions, so neighbours are
    generated directly instead of testing all pairs.
    """
    if s < 0 or n < 1:
        raise ValueError("need s >= 0 and n >= 1")
    size = count_compositions(s, n)
    if size > max_vertices:
        raise ValueError(f"|C({s},{n})| = {size} exceeds the vertex cap {max_vertices}")
    verts = list(compositions(s, n))
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for i, v in enumerate(verts):
        for k in range(n - 1):
            if v[k] > 0:
                w = list(v)
                w[k] -= 1
                w[k + 1] += 1
                j = index[tuple(w)]
                edges.add((min(i, j), max(i, j)))
    return EmdGraph(tuple(verts), tuple(verts), frozenset(edges), 1)


# ---------------------------------------------------------------------------
# components and sweeps
# ---------------------------------------------------------------------------


class _DisjointSet:
    def __init__(self, m: int):
        self.parent = list(range(m))
        self.count = m

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1


def connected_components(g: EmdGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    ds = _DisjointSet(g.m)
    for u, v in g.edges:
        ds.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(g.m):
        groups.setdefault(ds.find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def threshold_sweep(dists: Sequence[Sequence], thresholds: Sequence) -> list[tuple]:
    """``(t, component count)`` for each threshold, reusing one distance matrix."""
    ts = [_as_threshold(t) for t in thresholds]
    if any(a > b for a, b in zip(ts, ts[1:])):
        raise ValueError("thresholds must be ascending")
    D = unit_distance_matrix(dists)
    m = len(dists)
    pairs = sorted(
        ((D[i][j], i, j) for i, j in itertools.combinations(range(m), 2)),
        key=lambda x: x[0],
    )
    ds = _DisjointSet(m)
    out = []
    k = 0
    for t in ts:
        while k < len(pairs) and pairs[k][0] <= t:
            ds.union(pairs[k][1], pairs[k][2])
            k += 1
        out.append((t, ds.count))
    return out


def persistence_plateaus(sweep: Sequence[tuple]) -> list[tuple]:
    """Maximal runs ``(component_count, t_first, t_last)`` of a sweep."""
    runs = []
    for t, c in sweep:
        if runs and runs[-1][0] == c:
            runs[-1][2] = t
        else:
            runs.append([c, t, t])
    return [tuple(r) for r in runs]


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def laplacian(g: EmdGraph) -> np.ndarray:
    L = np.zeros((g.m, g.m))
    for u, v in g.edges:
        L[u, v] -= 1.0
        L[v, u] -= 1.0
        L[u, u] += 1.0
        L[v, v] += 1.0
    return L


def _off_norm(a: np.ndarray) -> float:
    return float(math.sqrt(2.0) * np.linalg.norm(np.triu(a, 1)))


def spectrum(L, tol: float = 1e-12, max_sweeps: int = 100) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(L, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    m = a.shape[0]
    sweeps = 0
    while _off_norm(a) >= tol and sweeps < max_sweeps:
        sweeps += 1
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-300 * max(abs(diff), 1.0):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    return Spectrum(np.sort(np.diag(a)), _off_norm(a), sweeps)


def algebraic_connectivity(g: EmdGraph) -> float:
    if g.m < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    return float(spectrum(laplacian(g)).eigenvalues[1])


def zero_eigenvalue_multiplicity(spec: Spectrum, tol: float = ZERO_EIG_TOL) -> int:
    return int(np.sum(np.abs(spec.eigenvalues) < tol))


# ---------------------------------------------------------------------------
# isoperimetric number, mean distance, and the lambda_2 bounds
# ---------------------------------------------------------------------------


def isoperimetric_number(g: EmdGraph, max_vertices: int = 25) -> Fraction:
    """Exact ``min |dX| / |X|`` over ``0 < |X| <= m // 2``; ``dX`` = edges leaving X."""
    m = g.m
    if m > max_vertices:
        raise ValueError(f"exact enumeration infeasible for {m} vertices (cap {max_vertices})")
    if m < 2:
        raise ValueError("isoperimetric number needs at least 2 vertices")
    adj = [0] * m
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best: Fraction | None = None
    for k in range(1, m // 2 + 1):
        for X in itertools.combinations(range(m), k):
            mask = 0
            for v in X:
                mask |= 1 << v
            outside = ~mask
            boundary = sum((adj[v] & outside).bit_count() for v in X)
            r = Fraction(boundary, k)
            if best is None or r < best:
                best = r
    return best


def bfs_distances(g: EmdGraph, source: int, adj: list[list[int]] | None = None) -> list:
    """Hop distances from ``source``; ``None`` where unreachable."""
    adj = adj if adj is not None else g.neighbors()
    dist: list = [None] * g.m
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def mean_distance(g: EmdGraph) -> Fraction:
    """Average hop distance over ordered pairs of distinct vertices."""
    m = g.m
    if m < 2:
        raise ValueError("mean distance undefined for fewer than 2 vertices")
    adj = g.neighbors()
    total = 0
    for v in range(m):
        d = bfs_distances(g, v, adj)
        if any(x is None for x in d):
            raise ValueError("mean distance undefined: graph is disconnected")
        total += sum(d)
    return Fraction(total, m * (m - 1))


def cheeger_bounds(lambda2: float, d_max: int) -> tuple[float, float]:
    """``(lambda2 / 2, sqrt(lambda2 (2 d_max - lambda2)))``."""
    eps = 1e-9
    if lambda2 < -eps or lambda2 > 2 * d_max + eps:
        raise ValueError(f"lambda2={lambda2} outside [0, 2 d_max]")
    lam = min(max(lambda2, 0.0), 2 * d_max)
    return lam / 2, math.sqrt(lam * (2 * d_max - lam))


def mean_distance_bounds(
    lambda2: float, d_max: int, m: int, form: str = "printed"
) -> tuple[float, float]:
    """Lower and upper bounds on the mean distance from ``lambda2``.

    lower = (2 / lambda2 + (m - 2) / 2) / (m - 1)

    ``form="printed"``: upper = m/(m-1) * (d_max - lambda2)/(4 lambda2) * ln(m-1).
    This is the variant behind the published plug-in value 51.08, but it is
    not a valid bound in general (it can even go negative for K_n).

    ``form="mohar"``: upper = m/(m-1) * ceil((d_max + lambda2)/(4 lambda2) * ln(m-1)),
    Mohar's original inequality, which does hold for connected graphs.
    """
    if lambda2 <= 0:
        raise ValueError("lambda2 must be positive")
    if m < 2:
        raise ValueError("need m >= 2")
    lower = (2 / lambda2 + (m - 2) / 2) / (m - 1)
    if form == "printed":
        upper = m / (m - 1) * ((d_max - lambda2) / (4 * lambda2)) * math.log(m - 1)
    elif form == "mohar":
        upper = m / (m - 1) * math.ceil((d_max + lambda2) / (4 * lambda2) * math.log(m - 1))
    else:
        raise ValueError(f"unknown form {form!r}")
    return lower, upper
