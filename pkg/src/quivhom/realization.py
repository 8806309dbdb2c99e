"""Quiver realizations of cubical sets and the adjunction transpose.

A realization glues one cube digraph per nondegenerate generator along
the canonical faces: a face whose value is the degeneracy word J over a
generator h is glued through the corresponding projections, so arrows
running in a deleted direction collapse and their whole identification
class is removed.  Class labels are the lexicographically smallest
member, ordered by (generator dimension, generator id, coordinates), so
equal inputs produce byte-identical quivers.

For a one-step line digraph the gluing runs over generators of every
dimension.  For longer words the realization is taken of the 1-skeleton:
higher cubes attach along their boundaries only, which reproduces the
skeleton reduction of the one-step case and keeps the realization a
digraph for every word of length at least two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubical import CubicalSet, FormalCube, ValidationError, canonical_face, skeleton, validate_cubical
from .quiver import (ARROW, VERTEX, Quiver, QuiverMap, UnionFind, cube_arrows,
                     cube_arrow_id, cube_digraph, cube_vertex_id, cube_vertices,
                     delete_coords, insert_coord, normalize_word)
from .singular import SingularComplex


def _varying_coord(src: tuple[int, ...], tgt: tuple[int, ...]) -> int:
    for pos in range(len(src)):
        if src[pos] != tgt[pos]:
            return pos + 1
    raise ValueError("arrow endpoints coincide")


@dataclass
class Realization:
    """A realized cubical set: the quotient quiver plus the class lookup."""

    cubical: CubicalSet
    word: str
    quiver: Quiver
    vertex_label: dict[tuple[str, tuple[int, ...]], str]
    arrow_label: dict[tuple[str, tuple[int, ...], tuple[int, ...]], tuple[str, str]]
    glued: CubicalSet  # the presentation actually glued (1-skeleton for long words)

    def cube_map(self, gen: str) -> QuiverMap:
        """The canonical quiver map from the generator's cube digraph into
        the realization."""
        n = self.glued.dim(gen)
        src = cube_digraph(self.word, n)
        vmap = {cube_vertex_id(c): self.vertex_label[(gen, c)]
                for c in cube_vertices(self.word, n)}
        amap = {cube_arrow_id(s, t): self.arrow_label[(gen, s, t)]
                for s, t in cube_arrows(self.word, n)}
        return QuiverMap(src, self.quiver, vmap, amap)


def _vertex_label(member: tuple[int, str, tuple[int, ...]]) -> str:
    _, gen, coords = member
    if not coords:
        return gen
    return f"{gen}@{cube_vertex_id(coords)}"


def _arrow_label(member, k: int) -> str:
    _, gen, src, tgt = member
    if len(src) == 1 and k == 1:
        return gen
    return f"{gen}@{cube_vertex_id(src)}>{cube_vertex_id(tgt)}"


def realize(k_set: CubicalSet, w: str) -> Realization:
    """The quiver realization of a cubical set over the line digraph I_w."""
    w = normalize_word(w)
    report = validate_cubical(k_set)
    if report:
        raise ValidationError(report)
    glued = k_set if len(w) == 1 else skeleton(k_set, 1)
    k = len(w)

    uf_v = UnionFind()
    uf_a = UnionFind()
    dims = {g: glued.dim(g) for g in glued.all_gens()}
    for g, n in dims.items():
        for c in cube_vertices(w, n):
            uf_v.add((g, c))
        for s, t in cube_arrows(w, n):
            uf_a.add((g, s, t))

    collapsed: set = set()
    for g, n in dims.items():
        for i in range(1, n + 1):
            for alpha in (0, 1):
                face = glued.face(g, i, alpha)
                h, j_word = face.gen, face.degens
                for c in cube_vertices(w, n - 1):
                    uf_v.union((g, insert_coord(c, i, alpha * k)),
                               (h, delete_coords(c, j_word)))
                for s, t in cube_arrows(w, n - 1):
                    g_arrow = (g, insert_coord(s, i, alpha * k),
                               insert_coord(t, i, alpha * k))
                    if _varying_coord(s, t) in j_word:
                        collapsed.add(uf_a.find(g_arrow))
                    else:
                        uf_a.union(g_arrow,
                                   (h, delete_coords(s, j_word),
                                    delete_coords(t, j_word)))

    def keyed(member):
        return (dims[member[0]], member[0]) + tuple(member[1:])

    vertex_label = {}
    for root, members in uf_v.classes().items():
        label = _vertex_label(min(keyed(m) for m in members))
        for m in members:
            vertex_label[m] = label

    arrow_label = {}
    arrows = []
    collapsed_roots = {uf_a.find(r) for r in collapsed}
    for root, members in uf_a.classes().items():
        if uf_a.find(root) in collapsed_roots:
            g, s, t = root
            common = vertex_label[(g, s)]
            for m in members:
                arrow_label[m] = (VERTEX, common)
            continue
        label = _arrow_label(min(keyed(m) for m in members), k)
        for m in members:
            arrow_label[m] = (ARROW, label)
        g, s, t = members[0]
        arrows.append((label, vertex_label[(g, s)], vertex_label[(g, t)]))

    quiver = Quiver(tuple(sorted(set(vertex_label.values()))),
                    tuple(sorted(arrows)))
    return Realization(k_set, w, quiver, vertex_label, arrow_label, glued)


# ---------------------------------------------------------------------------
# The adjunction transpose (realization left adjoint to the singular functor)


def adjunction_forward(r: Realization, f: QuiverMap,
                       s: SingularComplex):
    """E(f): the cubical map K -> S transposing f: |K| -> Q.

    Each generator goes to the singular cube v -> f(x, v).  The singular
    complex must be over the same word and truncated at or above the top
    dimension of K.
    """
    from .cubical import CubicalMap
    if f.source != r.quiver:
        raise ValueError("map source is not the realization quiver")
    if s.quiver != f.target:
        raise ValueError("singular complex is not over the map target")
    if s.word != r.word:
        raise ValueError("word mismatch between realization and singular complex")
    if r.glued.max_dim < r.cubical.max_dim:
        raise ValueError(
            "adjunction over a word of length >= 2 needs a cubical set of "
            "dimension <= 1")
    if s.n_max < r.cubical.max_dim:
        raise ValueError("singular truncation too small for the transpose")
    from .quiver import compose
    assignment = {}
    for g in r.cubical.all_gens():
        cube = compose(f, r.cube_map(g))
        assignment[g] = s.strip(cube, r.cubical.dim(g))
    return CubicalMap(r.cubical, s.presentation, assignment)


def adjunction_backward(r: Realization, g, s: SingularComplex) -> QuiverMap:
    """E^{-1}(g): the quiver map |K| -> Q transposing a cubical map
    g: K -> S; well-definedness across each identification class is
    verified."""
    if g.source != r.glued and g.source != r.cubical:
        raise ValueError("cubical map source is not the realized cubical set")
    if g.target != s.presentation:
        raise ValueError("cubical map target is not the singular presentation")
    if s.word != r.word:
        raise ValueError("word mismatch between realization and singular complex")
    if r.glued.max_dim < r.cubical.max_dim:
        raise ValueError(
            "adjunction over a word of length >= 2 needs a cubical set of "
            "dimension <= 1")
    denote = {x: s.formal_to_map(g.assignment[x]) for x in r.glued.all_gens()}

    vmap = {}
    for (x, coords), label in r.vertex_label.items():
        value = denote[x].vmap[cube_vertex_id(coords)]
        if label in vmap and vmap[label] != value:
            raise ValueError(f"cubical map is not constant on vertex class {label!r}")
        vmap[label] = value
    amap = {}
    for (x, cs, ct), (kind, label) in r.arrow_label.items():
        if kind != ARROW:
            continue
        value = denote[x].amap[cube_arrow_id(cs, ct)]
        if label in amap and amap[label] != value:
            raise ValueError(f"cubical map is not constant on arrow class {label!r}")
        amap[label] = value
    return QuiverMap(r.quiver, s.quiver, vmap, amap)
