"""Finite-dimensional quiver representations with the vertex-wise tensor
product: unit and simple objects, Hom spaces, subrepresentations and
quotients, restriction / extension by zero, and the filtration of the unit
by suffix subquivers.

Arrow matrices act on column vectors; a path acts as the reverse-order
product of its arrow matrices, matching the left-to-right path word
convention used everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import QQ
from .linalg import (DimensionMismatch, Matrix, kernel_basis, kronecker,
                     solve_many)
from .quiver import QuiverError, admissible_order, full_subquiver


class RepresentationError(ValueError):
    pass


class Representation:
    """Vector spaces at vertices, matrices along arrows."""

    def __init__(self, quiver, dims, arrow_maps, field=QQ):
        self.quiver = quiver
        self.field = field
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        self.arrow_maps = {}
        for a in quiver.arrows:
            m = arrow_maps.get(a.label)
            if m is None:
                m = Matrix.zeros(self.dims[a.target], self.dims[a.source], field)
            if (m.rows, m.cols) != (self.dims[a.target], self.dims[a.source]):
                raise RepresentationError(
                    f"arrow {a.label}: matrix is {m.rows}x{m.cols}, "
                    f"expected {self.dims[a.target]}x{self.dims[a.source]}")
            self.arrow_maps[a.label] = m

    def dim_at(self, v):
        return self.dims[v]

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def path_action(self, path):
        """Matrix of a path: V_source -> V_target."""
        m = Matrix.identity(self.dims[path.source], self.field)
        for label in path.arrows:
            m = self.arrow_maps[label] @ m
        return m

    def element_action(self, terms):
        """Matrix of a homogeneous linear combination of paths."""
        out = None
        for c, p in terms:
            part = self.path_action(p).scale(c)
            out = part if out is None else out + part
        return out

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and self.quiver == other.quiver
                and self.dims == other.dims
                and self.arrow_maps == other.arrow_maps)

    def __repr__(self):
        return f"Representation(dims={self.dims})"

    def to_json(self):
        return {
            "dims": {v: self.dims[v] for v in self.quiver.vertices},
            "arrows": {label: [[self.field.format(x) for x in row]
                               for row in m.entries]
                       for label, m in self.arrow_maps.items()},
        }


def satisfies_relations(rep, relations):
    """First violated relation generator, or None if all hold."""
    for gen in relations:
        if not rep.element_action(gen.terms).is_zero():
            return gen
    return None


@dataclass
class RepMorphism:
    source: Representation
    target: Representation
    components: dict   # vertex -> Matrix

    def component(self, v):
        return self.components[v]

    def is_natural(self):
        for a in self.source.quiver.arrows:
            lhs = self.components[a.target] @ self.source.arrow_maps[a.label]
            rhs = self.target.arrow_maps[a.label] @ self.components[a.source]
            if lhs != rhs:
                return False
        return True

    def compose(self, other):
        """self after other (other: X -> Y, self: Y -> Z)."""
        return RepMorphism(other.source, self.target,
                           {v: self.components[v] @ other.components[v]
                            for v in self.components})

    def __add__(self, other):
        return RepMorphism(self.source, self.target,
                           {v: self.components[v] + other.components[v]
                            for v in self.components})

    def scale(self, c):
        return RepMorphism(self.source, self.target,
                           {v: m.scale(c) for v, m in self.components.items()})

    def is_zero(self):
        return all(m.is_zero() for m in self.components.values())


def unit_object(quiver, field=QQ):
    """One-dimensional space at every vertex, identity along every arrow."""
    dims = {v: 1 for v in quiver.vertices}
    maps = {a.label: Matrix.identity(1, field) for a in quiver.arrows}
    return Representation(quiver, dims, maps, field)


def simple_object(quiver, n, field=QQ):
    if n not in quiver.vertices:
        raise QuiverError(f"unknown vertex {n!r}")
    dims = {v: 1 if v == n else 0 for v in quiver.vertices}
    return Representation(quiver, dims, {}, field)


def zero_object(quiver, field=QQ):
    return Representation(quiver, {}, {}, field)


def tensor(v, w):
    """Vertex-wise tensor product; arrow maps are Kronecker products."""
    if v.quiver != w.quiver:
        raise DimensionMismatch("tensor factors live over different quivers")
    dims = {x: v.dims[x] * w.dims[x] for x in v.quiver.vertices}
    maps = {a.label: kronecker(v.arrow_maps[a.label], w.arrow_maps[a.label])
            for a in v.quiver.arrows}
    return Representation(v.quiver, dims, maps, v.field)


def direct_sum(v, w):
    if v.quiver != w.quiver:
        raise DimensionMismatch("summands live over different quivers")
    field = v.field
    dims = {x: v.dims[x] + w.dims[x] for x in v.quiver.vertices}
    maps = {}
    for a in v.quiver.arrows:
        va, wa = v.arrow_maps[a.label], w.arrow_maps[a.label]
        top = va.hstack(Matrix.zeros(va.rows, wa.cols, field))
        bot = Matrix.zeros(wa.rows, va.cols, field).hstack(wa)
        maps[a.label] = top.vstack(bot)
    return Representation(v.quiver, dims, maps, field)


def morphism_tensor(f, g):
    return RepMorphism(tensor(f.source, g.source), tensor(f.target, g.target),
                       {v: kronecker(f.components[v], g.components[v])
                        for v in f.components})


def hom_space(v, w):
    """Basis of all morphisms v -> w, by solving every naturality square
    as one linear system."""
    if v.quiver != w.quiver:
        raise DimensionMismatch("Hom between representations of different quivers")
    field = v.field
    quiver = v.quiver
    # unknown layout: per vertex, the component matrix in row-major order
    offsets = {}
    total = 0
    for x in quiver.vertices:
        offsets[x] = total
        total += w.dims[x] * v.dims[x]

    rows = []
    for a in quiver.arrows:
        n, m = a.source, a.target
        va = v.arrow_maps[a.label]
        wa = w.arrow_maps[a.label]
        for i in range(w.dims[m]):
            for j in range(v.dims[n]):
                row = [field.zero] * total
                for k in range(v.dims[m]):
                    row[offsets[m] + i * v.dims[m] + k] = \
                        row[offsets[m] + i * v.dims[m] + k] + va.entries[k][j]
                for k in range(w.dims[n]):
                    row[offsets[n] + k * v.dims[n] + j] = \
                        row[offsets[n] + k * v.dims[n] + j] - wa.entries[i][k]
                rows.append(row)
    sys_mat = Matrix.from_rows(rows, field, cols=total)
    basis = []
    for vec in kernel_basis(sys_mat):
        comps = {}
        for x in quiver.vertices:
            r, c = w.dims[x], v.dims[x]
            comps[x] = Matrix(r, c,
                              [vec[offsets[x] + i * c: offsets[x] + (i + 1) * c]
                               for i in range(r)], field)
        basis.append(RepMorphism(v, w, comps))
    return basis


def _inverse(b):
    cols = solve_many(b, [tuple(Matrix.identity(b.rows, b.field).column(j))
                          for j in range(b.rows)])
    return Matrix.from_columns(list(cols), b.field, rows=b.cols)


def sub_quotient(rep, sub_bases):
    """Split a representation along arrow-stable per-vertex subspaces.

    `sub_bases` maps each vertex to a list of column vectors.  Returns
    (subrepresentation, quotient, inclusion, projection); raises naming the
    violating arrow when a subspace is not arrow-stable.
    """
    field = rep.field
    quiver = rep.quiver
    sub_mats = {}
    for x in quiver.vertices:
        cols = [tuple(field(c) for c in col) for col in sub_bases.get(x, [])]
        for col in cols:
            if len(col) != rep.dims[x]:
                raise RepresentationError(f"bad subspace vector length at {x}")
        sub_mats[x] = Matrix.from_columns(list(cols), field, rows=rep.dims[x])

    sub_arrow = {}
    for a in quiver.arrows:
        image_cols = [rep.arrow_maps[a.label].apply(col)
                      for col in sub_mats[a.source].columns()]
        try:
            coords = solve_many(sub_mats[a.target], image_cols)
        except Exception as exc:
            raise RepresentationError(
                f"subspace not stable under arrow {a.label}") from exc
        sub_arrow[a.label] = Matrix.from_columns(
            list(coords), field, rows=sub_mats[a.target].cols)
    sub_rep = Representation(quiver, {x: sub_mats[x].cols for x in quiver.vertices},
                             sub_arrow, field)

    # complements by greedily extending with standard basis vectors
    comp_mats = {}
    proj_mats = {}
    for x in quiver.vertices:
        d = rep.dims[x]
        chosen = []
        from .linalg import Echelon
        ech = Echelon(d, field)
        for col in sub_mats[x].columns():
            ech.add(col)
        for j in range(d):
            e = [field.zero] * d
            e[j] = field.one
            if ech.add(e):
                chosen.append(tuple(e))
        comp_mats[x] = Matrix.from_columns(chosen, field, rows=d)
        full = sub_mats[x].hstack(comp_mats[x])
        inv = _inverse(full)
        proj_mats[x] = Matrix.from_rows(
            [inv.row(i) for i in range(sub_mats[x].cols, d)], field, cols=d)

    quot_arrow = {}
    for a in quiver.arrows:
        quot_arrow[a.label] = (proj_mats[a.target]
                               @ rep.arrow_maps[a.label]
                               @ comp_mats[a.source])
    quot_rep = Representation(quiver,
                              {x: comp_mats[x].cols for x in quiver.vertices},
                              quot_arrow, field)
    incl = RepMorphism(sub_rep, rep, dict(sub_mats))
    proj = RepMorphism(rep, quot_rep, dict(proj_mats))
    return sub_rep, quot_rep, incl, proj


def restrict(rep, verts):
    """Restriction along the inclusion of the full subquiver on `verts`."""
    sub, sub_vertices, kept_arrows = full_subquiver(rep.quiver, verts)
    dims = {v: rep.dims[v] for v in sub_vertices}
    maps = {label: rep.arrow_maps[label] for label in kept_arrows}
    return Representation(sub, dims, maps, rep.field)


def extend_by_zero(rep, quiver):
    """Extension by zero of a representation of a full subquiver."""
    sub = rep.quiver
    for v in sub.vertices:
        if v not in quiver.vertices:
            raise QuiverError(f"subquiver vertex {v!r} not in ambient quiver")
    dims = {v: rep.dims.get(v, 0) for v in quiver.vertices}
    maps = {}
    for a in quiver.arrows:
        if a.label in rep.arrow_maps:
            maps[a.label] = rep.arrow_maps[a.label]
    return Representation(quiver, dims, maps, rep.field)


@dataclass
class FiltrationStep:
    level: int                  # 1-based position in the admissible order
    vertex: str
    sub_bases: dict             # per-vertex basis of K_level inside the unit
    rep: Representation         # K_level as a representation
    relation_witness: object    # violated generator, or None
    quotient_is_simple: bool    # K_l / K_{l+1} matches the simple at `vertex`


def unit_filtration(quiver, relations, field=QQ):
    """The chain K_1 = U > K_2 > ... > K_q > K_{q+1} = 0, where K_l is
    spanned by the unit coordinates at vertices at position >= l in the
    admissible order."""
    order = admissible_order(quiver)
    unit = unit_object(quiver, field)

    def bases(level):
        return {v: ([ (field.one,) ] if order.index(v) + 1 >= level else [])
                for v in quiver.vertices}

    steps = []
    for level in range(1, len(order) + 1):
        vertex = order[level - 1]
        sub_rep, _, _, _ = sub_quotient(unit, bases(level))
        # quotient K_l / K_{l+1} inside K_l's own coordinates
        inner = {v: ([ (field.one,) ] if order.index(v) + 1 >= level + 1
                     and sub_rep.dims[v] else [])
                 for v in quiver.vertices}
        _, quot, _, _ = sub_quotient(sub_rep, inner)
        simple = simple_object(quiver, vertex, field)
        is_simple = (quot.dims == simple.dims
                     and all(quot.arrow_maps[a.label] == simple.arrow_maps[a.label]
                             for a in quiver.arrows))
        steps.append(FiltrationStep(level, vertex, bases(level), sub_rep,
                                    satisfies_relations(sub_rep, relations),
                                    is_simple))
    return steps


def module_representation(alg, n):
    """The projective right module generated by the trivial path at n,
    viewed as a representation: the space at v is spanned by the basis
    classes of paths from n to v, arrows acting by right multiplication."""
    quiver = alg.quiver
    field = alg.field
    vertex_basis = {v: alg.pair_indices.get((n, v), []) for v in quiver.vertices}
    dims = {v: len(vertex_basis[v]) for v in quiver.vertices}
    maps = {}
    for a in quiver.arrows:
        src, tgt = vertex_basis[a.source], vertex_basis[a.target]
        pos = {gi: k for k, gi in enumerate(tgt)}
        arrow_class = alg.nf_path(
            _arrow_path(quiver, a))
        cols = []
        for gi in src:
            col = [field.zero] * len(tgt)
            for j, cj in arrow_class.items():
                for gk, c in alg.product_indices(gi, j).items():
                    col[pos[gk]] = col[pos[gk]] + cj * c
            cols.append(tuple(col))
        maps[a.label] = Matrix.from_columns(cols, field, rows=len(tgt))
    return Representation(quiver, dims, maps, field)


def _arrow_path(quiver, a):
    from .quiver import Path
    return Path(a.source, a.target, (a.label,))
