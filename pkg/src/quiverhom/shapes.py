"""Shape recognition for underlying graphs, plus standard graph builders.

Classification works on the underlying undirected graph, so it is invariant
under re-orientation.  Star-shaped graphs (exactly one vertex of degree >= 3)
carry their center and rays in the result, because the hill condition on
dimension vectors is read along rays toward the center.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quiver import Quiver


@dataclass(frozen=True)
class StarData:
    """Center plus rays; each ray is listed from its leaf inward to the
    vertex adjacent to the center (the center itself is not included)."""

    center: str
    rays: tuple[tuple[str, ...], ...]

    @property
    def ray_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(r) for r in self.rays))


@dataclass(frozen=True)
class GraphShape:
    """Most specific shape tag for a connected graph.

    kind is one of dynkin, extended, star, tree, cyclic, other.  family
    refines dynkin (A, D, E6, E7, E8) and extended (E6~, E7~, E8~, other);
    rank is the index n for A_n / D_n / E_n.  star is present whenever the
    graph is star-shaped, whatever the kind.
    """

    kind: str
    family: str | None = None
    rank: int | None = None
    star: StarData | None = None

    @property
    def is_dynkin(self) -> bool:
        return self.kind == "dynkin"

    @property
    def is_extended(self) -> bool:
        return self.kind == "extended"

    @property
    def is_tree(self) -> bool:
        return self.kind in ("dynkin", "extended", "star", "tree")

    @property
    def label(self) -> str:
        if self.kind == "dynkin":
            return self.family if self.family.startswith("E") else f"{self.family}{self.rank}"
        if self.kind == "extended":
            return self.family
        return self.kind

    def __str__(self) -> str:
        return self.label


def _star_rays(q: Quiver, center: str) -> tuple[tuple[str, ...], ...]:
    rays = []
    for first in q.neighbors(center):
        ray = [first]
        prev = center
        while True:
            nxt = [w for w in q.neighbors(ray[-1]) if w != prev]
            if not nxt:
                break
            prev = ray[-1]
            ray.append(nxt[0])
        rays.append(tuple(reversed(ray)))
    return tuple(rays)


# sorted ray vertex counts -> (kind, family, rank)
_STAR_PATTERNS = {
    (1, 2, 2): ("dynkin", "E6", 6),
    (1, 2, 3): ("dynkin", "E7", 7),
    (1, 2, 4): ("dynkin", "E8", 8),
    (2, 2, 2): ("extended", "E6~", None),
    (1, 3, 3): ("extended", "E7~", None),
    (1, 2, 5): ("extended", "E8~", None),
    (1, 1, 1, 1): ("extended", "other", None),
}


def classify_graph(q: Quiver) -> GraphShape:
    """Classify the underlying graph of a connected quiver."""
    if not q.is_connected():
        raise ValueError("cannot classify a disconnected quiver")
    if q.has_self_loop():
        return GraphShape(kind="other")
    if len(q.arrows) >= q.n_vertices:
        return GraphShape(kind="cyclic")

    # connected, loop-free, |arrows| = |vertices| - 1: a tree
    branch = [v for v in q.vertices if q.degree(v) >= 3]
    if not branch:
        return GraphShape(kind="dynkin", family="A", rank=q.n_vertices)
    if len(branch) == 1:
        star = StarData(branch[0], _star_rays(q, branch[0]))
        sizes = star.ray_sizes
        if len(sizes) == 3 and sizes[0] == 1 and sizes[1] == 1:
            return GraphShape(kind="dynkin", family="D", rank=q.n_vertices, star=star)
        match = _STAR_PATTERNS.get(sizes)
        if match is not None:
            kind, family, rank = match
            return GraphShape(kind=kind, family=family, rank=rank, star=star)
        return GraphShape(kind="star", star=star)
    if len(branch) == 2:
        u, v = branch
        if (q.degree(u) == 3 and q.degree(v) == 3
                and sum(q.degree(w) == 1 for w in q.neighbors(u)) == 2
                and sum(q.degree(w) == 1 for w in q.neighbors(v)) == 2):
            return GraphShape(kind="extended", family="other")
    return GraphShape(kind="tree")


# -- standard graphs ---------------------------------------------------------

_NAMED_RAYS = {
    "E6": (1, 2, 2),
    "E7": (1, 2, 3),
    "E8": (1, 2, 4),
    "E6t": (2, 2, 2),
    "E7t": (1, 3, 3),
    "E8t": (1, 2, 5),
}

Edge = tuple[str, str]


def path_graph(n: int) -> tuple[tuple[str, ...], tuple[Edge, ...]]:
    """Path on n vertices labeled 1..n."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    vertices = tuple(str(i) for i in range(1, n + 1))
    edges = tuple((str(i), str(i + 1)) for i in range(1, n))
    return vertices, edges


def star_graph(ray_sizes: tuple[int, ...]) -> tuple[tuple[str, ...], tuple[Edge, ...]]:
    """Star with center c and rays r<i>x<d>, d counted outward from the center.

    Each edge is listed (outer, inner), so orientation mask 0 points every
    arrow toward the center.
    """
    if len(ray_sizes) < 3 or any(s < 1 for s in ray_sizes):
        raise ValueError(f"star needs >= 3 rays of size >= 1, got {ray_sizes}")
    vertices = ["c"]
    edges: list[Edge] = []
    for i, size in enumerate(ray_sizes, start=1):
        chain = [f"r{i}x{d}" for d in range(1, size + 1)]
        vertices.extend(chain)
        edges.append((chain[0], "c"))
        for inner, outer in zip(chain, chain[1:]):
            edges.append((outer, inner))
    return tuple(vertices), tuple(edges)


def standard_graph(name: str) -> tuple[tuple[str, ...], tuple[Edge, ...]]:
    """Named graph: A<n>, D<n> (n >= 4), E6, E7, E8, E6t, E7t, E8t."""
    if name in _NAMED_RAYS:
        return star_graph(_NAMED_RAYS[name])
    if name.startswith("A") and name[1:].isdigit():
        return path_graph(int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if n < 4:
            raise ValueError(f"D_n needs n >= 4, got {name}")
        return star_graph((1, 1, n - 3))
    raise ValueError(f"unknown graph name {name!r}")


def orient(vertices: tuple[str, ...], edges: tuple[Edge, ...], mask: int = 0) -> Quiver:
    """Orientation of a graph: bit b of mask flips edge b."""
    if not 0 <= mask < (1 << len(edges)):
        raise ValueError(f"orientation mask {mask} out of range for {len(edges)} edges")
    arrows = [(v, u) if (mask >> b) & 1 else (u, v) for b, (u, v) in enumerate(edges)]
    return Quiver(vertices, arrows)


def named_quiver(name: str, mask: int = 0) -> Quiver:
    vertices, edges = standard_graph(name)
    return orient(vertices, edges, mask)


def all_orientations(name: str) -> list[Quiver]:
    vertices, edges = standard_graph(name)
    return [orient(vertices, edges, m) for m in range(1 << len(edges))]


def random_orientations(name: str, count: int, rng: np.random.Generator) -> list[Quiver]:
    """Sample orientation masks without replacement."""
    vertices, edges = standard_graph(name)
    total = 1 << len(edges)
    if count >= total:
        return [orient(vertices, edges, m) for m in range(total)]
    masks = rng.choice(total, size=count, replace=False)
    return [orient(vertices, edges, int(m)) for m in masks]
