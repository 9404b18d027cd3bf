"""Defining graphs: parsing, join structure, and the doubling constructions.

A defining graph records the generating set of a right-angled Coxeter or
Artin group: vertices are generators, edges mark commuting pairs.  Vertex
declaration order is significant; it is the alphabet order that every
normal form and shortlex enumeration downstream uses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    EmptyGraphError,
    GraphParseError,
    NotAFactorError,
    UnknownGeneratorError,
)

# Commutation masks live in one machine word; far beyond desk scale anyway.
MAX_VERTICES = 64

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class DefiningGraph:
    """Finite simplicial graph with ordered vertex labels.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("vertices", "edges", "comm_masks", "_index")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        if not vertices:
            raise EmptyGraphError("a defining graph needs at least one vertex")
        if len(vertices) > MAX_VERTICES:
            raise GraphParseError(
                "SYNTAX_ERROR", None, f"more than {MAX_VERTICES} vertices"
            )
        index: dict[str, int] = {}
        for v in vertices:
            if not isinstance(v, str) or not _LABEL_RE.match(v):
                raise GraphParseError("SYNTAX_ERROR", None, f"bad vertex label {v!r}")
            if v in index:
                raise GraphParseError(
                    "DUPLICATE_VERTEX", None, f"duplicate vertex {v!r}"
                )
            index[v] = len(index)
        masks = [0] * len(vertices)
        canon = set()
        for a, b in edges:
            ia = index.get(a)
            ib = index.get(b)
            if ia is None or ib is None:
                bad = a if ia is None else b
                raise GraphParseError(
                    "UNKNOWN_ENDPOINT", None, f"edge endpoint {bad!r} not declared"
                )
            if ia == ib:
                raise GraphParseError("SELF_LOOP", None, f"self-loop at {a!r}")
            canon.add((min(ia, ib), max(ia, ib)))
            masks[ia] |= 1 << ib
            masks[ib] |= 1 << ia
        self.vertices = vertices
        self.edges = frozenset(canon)
        self.comm_masks = tuple(masks)
        self._index = index

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_vertex(self, label: str) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownGeneratorError(label) from None

    def adjacent(self, a: str, b: str) -> bool:
        ia, ib = self.index(a), self.index(b)
        return bool((self.comm_masks[ia] >> ib) & 1)

    def edge_labels(self) -> list[tuple[str, str]]:
        return [
            (self.vertices[i], self.vertices[j]) for i, j in sorted(self.edges)
        ]

    def subgraph(self, labels) -> "DefiningGraph":
        """Induced subgraph; vertices keep their relative declaration order."""
        keep = {self.index(v) for v in labels}
        verts = [v for i, v in enumerate(self.vertices) if i in keep]
        edges = [
            (self.vertices[i], self.vertices[j])
            for i, j in self.edges
            if i in keep and j in keep
        ]
        return DefiningGraph(verts, edges)

    def complement_components(self) -> list[list[int]]:
        """Connected components of the complement graph, as sorted index
        lists, ordered by least member."""
        full = (1 << self.n) - 1
        unvisited = full
        comps = []
        while unvisited:
            start = (unvisited & -unvisited).bit_length() - 1
            comp = 0
            frontier = 1 << start
            while frontier:
                comp |= frontier
                unvisited &= ~frontier
                nxt = 0
                f = frontier
                while f:
                    i = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= full & ~self.comm_masks[i] & ~(1 << i)
                frontier = nxt & unvisited
            comps.append([i for i in range(self.n) if (comp >> i) & 1])
        comps.sort(key=lambda c: c[0])
        return comps

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        lines += [f"edge: {a} {b}" for a, b in self.edge_labels()]
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (
            isinstance(other, DefiningGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"DefiningGraph({list(self.vertices)}, {self.edge_labels()})"


def parse_graph(text: str) -> DefiningGraph:
    """Parse the line-oriented graph format.

    Comment lines start with ``#``; the first significant line must be
    ``vertices: <label> ...`` and each following significant line
    ``edge: <label> <label>``.  Declaration order of the vertices defines
    the downstream alphabet order.
    """
    vertices: tuple[str, ...] | None = None
    edges: list[tuple[str, str]] = []
    declared: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise GraphParseError(
                    "SYNTAX_ERROR", lineno, "repeated 'vertices:' line"
                )
            labels = line[len("vertices:"):].split()
            if not labels:
                raise GraphParseError("SYNTAX_ERROR", lineno, "no vertices declared")
            if len(labels) > MAX_VERTICES:
                raise GraphParseError(
                    "SYNTAX_ERROR", lineno, f"more than {MAX_VERTICES} vertices"
                )
            for lab in labels:
                if not _LABEL_RE.match(lab):
                    raise GraphParseError(
                        "SYNTAX_ERROR", lineno, f"bad vertex label {lab!r}"
                    )
                if lab in declared:
                    raise GraphParseError(
                        "DUPLICATE_VERTEX", lineno, f"duplicate vertex {lab!r}"
                    )
                declared.add(lab)
            vertices = tuple(labels)
        elif line.startswith("edge:"):
            if vertices is None:
                raise GraphParseError(
                    "SYNTAX_ERROR", lineno, "'edge:' before 'vertices:'"
                )
            parts = line[len("edge:"):].split()
            if len(parts) != 2:
                raise GraphParseError(
                    "SYNTAX_ERROR", lineno, "expected 'edge: <label> <label>'"
                )
            a, b = parts
            if a not in declared:
                raise GraphParseError(
                    "UNKNOWN_ENDPOINT", lineno, f"edge endpoint {a!r} not declared"
                )
            if b not in declared:
                raise GraphParseError(
                    "UNKNOWN_ENDPOINT", lineno, f"edge endpoint {b!r} not declared"
                )
            if a == b:
                raise GraphParseError("SELF_LOOP", lineno, f"self-loop at {a!r}")
            edges.append((a, b))
        else:
            raise GraphParseError(
                "SYNTAX_ERROR", lineno, f"unrecognized line {line!r}"
            )
    if vertices is None:
        raise GraphParseError("SYNTAX_ERROR", 1, "missing 'vertices:' line")
    return DefiningGraph(vertices, edges)


def load_graph(path) -> DefiningGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- join structure ----------------------------------------------------


def is_join(g: DefiningGraph) -> bool:
    """True iff g is a join of two nonempty subgraphs, i.e. the complement
    graph is disconnected."""
    return len(g.complement_components()) > 1


def join_decompose(g: DefiningGraph) -> list[DefiningGraph]:
    """Maximal join factors: induced subgraphs on the complement's
    components, ordered by least vertex.  Each factor is join-free and the
    join of the factors reconstructs g."""
    return [
        g.subgraph([g.vertices[i] for i in comp])
        for comp in g.complement_components()
    ]


class FactorKind(str, Enum):
    SPHERICAL_POINT = "SPHERICAL_POINT"
    AFFINE_DIHEDRAL = "AFFINE_DIHEDRAL"
    IRREDUCIBLE_NONAFFINE = "IRREDUCIBLE_NONAFFINE"


@dataclass(frozen=True)
class FactorClassification:
    kind: FactorKind
    vertex_set: tuple[str, ...]


def classify_factor(g: DefiningGraph) -> FactorClassification:
    """Trichotomy for a join-free defining graph.

    One vertex gives the order-2 (finite) group; two vertices without an
    edge give the infinite dihedral group, the only irreducible affine
    right-angled case; three or more join-free vertices are infinite,
    irreducible and non-affine.
    """
    if is_join(g):
        raise NotAFactorError(f"graph on {g.vertices} is a join")
    if g.n == 1:
        kind = FactorKind.SPHERICAL_POINT
    elif g.n == 2:
        kind = FactorKind.AFFINE_DIHEDRAL
    else:
        kind = FactorKind.IRREDUCIBLE_NONAFFINE
    return FactorClassification(kind, g.vertices)


# -- Davis-Januszkiewicz doubling constructions ------------------------


def dj_prime(g: DefiningGraph) -> DefiningGraph:
    """Graph double: two labelled copies of g ("_m1" and "_1" suffixes),
    plus a cross edge (i,-1)-(j,1) whenever i != j span an edge of g.

    The associated right-angled Coxeter group is commensurable to the
    right-angled Artin group of g.
    """
    lo = [f"{v}_m1" for v in g.vertices]
    hi = [f"{v}_1" for v in g.vertices]
    edges = []
    for i, j in sorted(g.edges):
        edges.append((lo[i], lo[j]))
        edges.append((hi[i], hi[j]))
        edges.append((lo[i], hi[j]))
        edges.append((lo[j], hi[i]))
    return DefiningGraph(lo + hi, edges)


def dj_double_prime(g: DefiningGraph) -> DefiningGraph:
    """Doubled graph with a clique base: vertices (i,0),(i,1) with labels
    "_0"/"_1"; edges (i,1)-(j,1) for each edge of g, (i,0)-(j,0) for all
    i != j, and (i,0)-(j,1) whenever i != j."""
    lo = [f"{v}_0" for v in g.vertices]
    hi = [f"{v}_1" for v in g.vertices]
    edges = [(hi[i], hi[j]) for i, j in sorted(g.edges)]
    for i in range(g.n):
        for j in range(i + 1, g.n):
            edges.append((lo[i], lo[j]))
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                edges.append((lo[i], hi[j]))
    return DefiningGraph(lo + hi, edges)
