"""Truncated singular cubical sets of quivers.

An n-cube of the singular cubical set of a quiver Q over a line digraph
I_w is a quiver map I_w^n -> Q.  All such maps are found by backtracking
over vertex assignments followed by independent per-arrow choices, in a
fixed lexicographic order so generator ids are stable across runs.
Faces precompose with the cube face inclusions; a face is re-expressed
as the unique nondegenerate cube under a canonical degeneracy word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import itertools

from .cubical import (CubicalSet, FormalCube, canonicalize_degens, cubical_set,
                      CubicalMap)
from .quiver import (ARROW, VERTEX, Quiver, QuiverMap, compose, cube_digraph,
                     face_map, projection_map, digraph_map, line_digraph,
                     normalize_word, _word_of_line)


@dataclass(eq=True)
class SingularCube:
    """A quiver map from a cube digraph, with its degeneracy flag."""

    word: str
    dim: int
    qmap: QuiverMap
    degenerate: bool = field(compare=False, default=False)


def enumerate_quiver_maps(a: Quiver, b: Quiver):
    """All quiver maps a -> b, lexicographic in (source vertex id, image id)
    then in per-arrow choices.

    Vertex assignments are grown by backtracking with adjacent-arrow
    pruning; for each full assignment the arrow images vary independently
    per arrow (matching arrows, plus the collapse exactly when the
    endpoint images agree).
    """
    vs = sorted(a.vertices)
    pos = {v: i for i, v in enumerate(vs)}
    targets = sorted(b.vertices)
    arrows = sorted(a.arrows)
    # arrows whose endpoints are both assigned once vertex index i is set
    ready: list[list[tuple[str, str, str]]] = [[] for _ in vs]
    for arr in arrows:
        _, s, t = arr
        ready[max(pos[s], pos[t])].append(arr)

    assign: dict[str, str] = {}

    def compatible(s: str, t: str) -> bool:
        fs, ft = assign[s], assign[t]
        return fs == ft or (fs, ft) in b.arrows_between

    def options(s: str, t: str) -> list[tuple[str, str]]:
        fs, ft = assign[s], assign[t]
        opts = [(ARROW, x) for x in b.arrows_between.get((fs, ft), ())]
        if fs == ft:
            opts.append((VERTEX, fs))
        return opts

    def rec(i: int):
        if i == len(vs):
            per_arrow = [options(s, t) for _, s, t in arrows]
            for choice in itertools.product(*per_arrow):
                amap = {arr[0]: img for arr, img in zip(arrows, choice)}
                yield QuiverMap(a, b, dict(assign), amap)
            return
        v = vs[i]
        for u in targets:
            assign[v] = u
            if all(compatible(s, t) for _, s, t in ready[i]):
                yield from rec(i + 1)
            del assign[v]

    yield from rec(0)


def _is_degenerate_in_direction(cube: SingularCube, i: int) -> bool:
    w, n, phi = cube.word, cube.dim, cube.qmap
    psi = compose(phi, face_map(w, n, i, 0))
    return compose(psi, projection_map(w, n, i)) == phi


def enumerate_singular_cubes(q: Quiver, w: str, n: int) -> list[SingularCube]:
    """All singular n-cubes of Q over I_w, each flagged degenerate when it
    factors through some projection."""
    w = normalize_word(w)
    out = []
    for qmap in enumerate_quiver_maps(cube_digraph(w, n), q):
        cube = SingularCube(w, n, qmap)
        cube.degenerate = any(_is_degenerate_in_direction(cube, i)
                              for i in range(1, n + 1))
        out.append(cube)
    return out


def _map_signature(qmap: QuiverMap):
    return (tuple(qmap.vmap[v] for v in sorted(qmap.source.vertices)),
            tuple(qmap.amap[a] for a in sorted(qmap.source.arrow_by_id)))


@dataclass
class SingularComplex:
    """A truncated singular cubical set together with its concrete cubes.

    The presentation's generators are the nondegenerate singular cubes up
    to the truncation dimension; `cubes` maps generator ids back to the
    underlying quiver maps and `strip` re-expresses an arbitrary singular
    cube as a formal cube over the presentation.
    """

    quiver: Quiver
    word: str
    n_max: int
    presentation: CubicalSet
    cubes: dict[str, SingularCube]
    _index: dict = field(repr=False, default_factory=dict)

    def gen_of(self, qmap: QuiverMap) -> str:
        return self._index[_map_signature(qmap)]

    def strip(self, qmap: QuiverMap, dim: int) -> FormalCube:
        """The unique (nondegenerate generator, canonical degeneracy word)
        form of a singular cube."""
        w = self.word
        for i in range(1, dim + 1):
            psi = compose(qmap, face_map(w, dim, i, 0))
            if compose(psi, projection_map(w, dim, i)) == qmap:
                inner = self.strip(psi, dim - 1)
                return FormalCube(inner.gen,
                                  canonicalize_degens((i,) + inner.degens))
        return FormalCube(self.gen_of(qmap), ())

    def formal_to_map(self, c: FormalCube) -> QuiverMap:
        """The concrete singular cube denoted by a formal cube."""
        qmap = self.cubes[c.gen].qmap
        dim = self.presentation.dim(c.gen)
        for j in reversed(c.degens):
            qmap = compose(qmap, projection_map(self.word, dim + 1, j))
            dim += 1
        return qmap


def singular_cubical_set(q: Quiver, w: str, n_max: int) -> SingularComplex:
    """The singular cubical set of Q over I_w, truncated at n_max.

    Generator ids are 's{dim}.{index}' with the index taken over the
    nondegenerate cubes in enumeration order.
    """
    if n_max < 0:
        raise ValueError("truncation dimension must be >= 0")
    w = normalize_word(w)
    gens: list[list[str]] = []
    cubes: dict[str, SingularCube] = {}
    index: dict = {}
    for n in range(n_max + 1):
        layer = []
        for cube in enumerate_singular_cubes(q, w, n):
            if cube.degenerate:
                continue
            gid = f"s{n}.{len(layer)}"
            layer.append(gid)
            cubes[gid] = cube
            index[_map_signature(cube.qmap)] = gid
        gens.append(layer)
    sc = SingularComplex(q, w, n_max, CubicalSet((), {}), cubes, index)
    k = len(w)
    faces: dict[tuple[str, int, int], FormalCube] = {}
    for n in range(1, n_max + 1):
        for gid in gens[n]:
            phi = cubes[gid].qmap
            for i in range(1, n + 1):
                for alpha in (0, 1):
                    fmap = compose(phi, face_map(w, n, i, alpha * k))
                    faces[(gid, i, alpha)] = sc.strip(fmap, n - 1)
    sc.presentation = CubicalSet(tuple(tuple(layer) for layer in gens), faces)
    return sc


# ---------------------------------------------------------------------------
# Induced maps of singular cubical sets


def induced_postcompose(f: QuiverMap, s_src: SingularComplex,
                        s_tgt: SingularComplex) -> CubicalMap:
    """The cubical map phi -> f . phi induced by a quiver map f: Q -> Q'."""
    if s_src.quiver != f.source or s_tgt.quiver != f.target:
        raise ValueError("singular complexes do not match the quiver map")
    if s_src.word != s_tgt.word:
        raise ValueError("singular complexes over different words")
    if s_tgt.n_max < s_src.n_max:
        raise ValueError("target truncation too small")
    assignment = {}
    for gid, cube in s_src.cubes.items():
        img = compose(f, cube.qmap)
        assignment[gid] = s_tgt.strip(img, cube.dim)
    return CubicalMap(s_src.presentation, s_tgt.presentation, assignment)


def induced_precompose(tau: QuiverMap, s_src: SingularComplex,
                       s_tgt: SingularComplex) -> CubicalMap:
    """The map phi -> phi . tau^n induced by a line digraph map
    tau: I_k -> I_m, from the I_m-singular complex to the I_k one.

    Face naturality is checked when tau fixes both endpoints (tau(0) = 0,
    tau(k) = m); assignments for other line maps are still well defined,
    and composites such as i-box after p-box can come out natural, but
    such a map on its own need not commute with faces.
    """
    wk = _word_of_line(tau.source)
    wm = _word_of_line(tau.target)
    if s_src.word != wm or s_tgt.word != wk:
        raise ValueError("line map endpoints do not match the complexes")
    if s_src.quiver != s_tgt.quiver:
        raise ValueError("singular complexes over different quivers")
    if s_tgt.n_max < s_src.n_max:
        raise ValueError("target truncation too small")
    from .quiver import line_map_power
    assignment = {}
    for gid, cube in s_src.cubes.items():
        img = compose(cube.qmap, line_map_power(tau, cube.dim))
        assignment[gid] = s_tgt.strip(img, cube.dim)
    endpoint_fixing = tau.vmap["0"] == "0" and tau.vmap[str(len(wk))] == str(len(wm))
    return CubicalMap(s_src.presentation, s_tgt.presentation, assignment,
                      check=endpoint_fixing)


def interval_inclusion_and_projection(w: str, m: int) -> tuple[QuiverMap, QuiverMap]:
    """The maps i: I -> I_w and p: I_w -> I determined by the cut at
    consecutive vertices (m, m+1); p . i = Id.

    When the arrow at the cut points m -> m+1, i sends 0,1 to m,m+1 and p
    is 0 below the cut and 1 above; with the arrow reversed both maps are
    flipped accordingly.
    """
    w = normalize_word(w)
    k = len(w)
    if not 0 <= m < k:
        raise ValueError(f"cut position {m} out of range for word of length {k}")
    i_line = line_digraph("+")
    w_line = line_digraph(w)
    if w[m] == "+":
        i_vmap = {"0": str(m), "1": str(m + 1)}
        p_vmap = {str(v): ("0" if v <= m else "1") for v in range(k + 1)}
    else:
        i_vmap = {"0": str(m + 1), "1": str(m)}
        p_vmap = {str(v): ("1" if v <= m else "0") for v in range(k + 1)}
    inc = digraph_map(i_line, w_line, i_vmap)
    proj = digraph_map(w_line, i_line, p_vmap)
    return inc, proj


def interval_change_maps(q: Quiver, w: str, m: int, n_max: int):
    """The pair (p-box, i-box) of cubical maps induced by the cut at m.

    p-box goes from the I-singular complex into the I_w one, i-box back;
    their composite is the identity on the truncated I-singular complex.
    Returns (p_box, i_box, s_i, s_w) with the two singular complexes.
    """
    inc, proj = interval_inclusion_and_projection(w, m)
    s_i = singular_cubical_set(q, "+", n_max)
    s_w = singular_cubical_set(q, w, n_max)
    p_box = induced_precompose(proj, s_i, s_w)
    i_box = induced_precompose(inc, s_w, s_i)
    return p_box, i_box, s_i, s_w
