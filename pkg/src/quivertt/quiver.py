"""Finite ordered quivers: vertices, arrows, paths, relation generators.

Vertices and arrow labels are plain strings.  Path words compose left to
right: the word (a, b) means "traverse a, then b", so it is a path from
source(a) to target(b).  The trivial path at a vertex has an empty word.
"""

from __future__ import annotations

from dataclasses import dataclass


class QuiverError(ValueError):
    pass


class NotOrdered(QuiverError):
    """Raised when a quiver contains an oriented cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"oriented cycle through vertices {' -> '.join(self.cycle)}")


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex ids")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise QuiverError("duplicate arrow labels")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.label} has unknown endpoint")

    def arrow(self, label):
        for a in self.arrows:
            if a.label == label:
                return a
        raise QuiverError(f"unknown arrow {label!r}")

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_between(self, v, w):
        return [a for a in self.arrows if a.source == v and a.target == w]

    def undirected_components(self):
        """Connected components of the underlying undirected graph, as a
        list of frozensets in order of first vertex."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in self.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[ra] = rb
        comps = {}
        for v in self.vertices:
            comps.setdefault(find(v), []).append(v)
        return [frozenset(c) for c in sorted(comps.values(),
                                             key=lambda c: self.vertices.index(c[0]))]


def admissible_order(q):
    """Topological order of the vertices; raises NotOrdered with a cycle
    witness if the quiver has an oriented cycle."""
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        if a.source != a.target:
            indeg[a.target] += 1
        else:
            raise NotOrdered([a.source, a.target])
    ready = [v for v in q.vertices if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in q.arrows_from(v):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                ready.append(a.target)
    if len(order) == len(q.vertices):
        return order
    # walk forward inside the leftover subgraph until a vertex repeats
    left = [v for v in q.vertices if v not in set(order)]
    seen = []
    v = left[0]
    while v not in seen:
        seen.append(v)
        v = next(a.target for a in q.arrows_from(v) if a.target in left)
    cycle = seen[seen.index(v):] + [v]
    raise NotOrdered(cycle)


def is_ordered(q):
    try:
        admissible_order(q)
        return True
    except NotOrdered:
        return False


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))

    @classmethod
    def trivial(cls, v):
        return cls(v, v, ())

    @classmethod
    def from_arrows(cls, arrows):
        arrows = list(arrows)
        if not arrows:
            raise QuiverError("empty arrow list; use Path.trivial")
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise QuiverError(
                    f"arrows {a.label} and {b.label} do not compose")
        return cls(arrows[0].source, arrows[-1].target,
                   tuple(a.label for a in arrows))

    @property
    def is_trivial(self):
        return not self.arrows

    def __len__(self):
        return len(self.arrows)

    def compose(self, other):
        """self followed by other; defined when target(self) = source(other)."""
        if self.target != other.source:
            raise QuiverError(
                f"paths {self} and {other} do not compose")
        return Path(self.source, other.target, self.arrows + other.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows)

    def word(self):
        return "*".join(self.arrows) if self.arrows else f"e_{self.source}"

    def __repr__(self):
        return f"Path({self.source}->{self.target}: {self.word()})"


def enumerate_paths(q):
    """All paths of an ordered quiver, grouped by (source, target).

    Returns (flat list sorted by (source index, target index, length, word),
    dict keyed by (source, target)).
    """
    order = admissible_order(q)
    pos = {v: i for i, v in enumerate(order)}
    by_pair = {}
    for v in q.vertices:
        stack = [Path.trivial(v)]
        while stack:
            p = stack.pop()
            by_pair.setdefault((p.source, p.target), []).append(p)
            for a in q.arrows_from(p.target):
                stack.append(Path(p.source, a.target, p.arrows + (a.label,)))
    for key in by_pair:
        by_pair[key].sort(key=Path.sort_key)
    flat = []
    for (s, t) in sorted(by_pair, key=lambda st: (pos[st[0]], pos[st[1]])):
        flat.extend(by_pair[(s, t)])
    return flat, by_pair


@dataclass(frozen=True)
class Relation:
    """A homogeneous linear combination of non-trivial paths with a common
    source and target: a generator of the relation ideal."""

    source: str
    target: str
    terms: tuple  # of (coefficient, Path)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise QuiverError("empty relation")
        for c, p in self.terms:
            if p.is_trivial:
                raise QuiverError(f"relation contains trivial path at {p.source}")
            if p.source != self.source or p.target != self.target:
                raise QuiverError(
                    f"relation not homogeneous: path {p.word()} runs "
                    f"{p.source}->{p.target}, expected {self.source}->{self.target}")

    @classmethod
    def from_terms(cls, terms):
        terms = [(c, p) for c, p in terms]
        s, t = terms[0][1].source, terms[0][1].target
        return cls(s, t, tuple(terms))

    def coefficient_sum(self):
        total = None
        for c, _ in self.terms:
            total = c if total is None else total + c
        return total

    def pretty(self, field=None):
        fmt = field.format if field is not None else str
        out = ""
        for i, (c, p) in enumerate(self.terms):
            text = fmt(c)
            neg = text.startswith("-")
            mag = text[1:] if neg else text
            term = p.word() if mag == "1" else f"{mag} {p.word()}"
            if i == 0:
                out = ("-" + term) if neg else term
            else:
                out += (" - " if neg else " + ") + term
        return out

    def __repr__(self):
        return f"Relation({self.source}->{self.target}: {self.pretty()})"


def full_subquiver(q, verts):
    """The full subquiver on `verts`, plus (vertex list, kept arrow labels)."""
    vs = list(verts)
    known = set(q.vertices)
    for v in vs:
        if v not in known:
            raise QuiverError(f"unknown vertex {v!r}")
    keep = set(vs)
    sub_vertices = tuple(v for v in q.vertices if v in keep)
    sub_arrows = tuple(a for a in q.arrows if a.source in keep and a.target in keep)
    sub = Quiver(sub_vertices, sub_arrows)
    return sub, list(sub_vertices), [a.label for a in sub_arrows]
