"""Quivers, digraphs, line and cube digraphs, box products, quiver maps.

A quiver is a set of vertices together with arrows carrying explicit
start/end maps; loops and parallel arrows are allowed.  A digraph is a
simple quiver: no loops, at most one arrow per ordered vertex pair.
Quiver maps may send an arrow either to an arrow with matching endpoints
or collapse it to a vertex.

Vertex and arrow identifiers are opaque strings.  Constructors that
synthesize quivers (cube digraphs, box products, quotients) emit their
vertices and arrows sorted lexicographically by id so every downstream
computation is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property


class NonSimpleError(ValueError):
    """A digraph was required but the quiver has a loop or parallel arrows.

    The offending arrow (or pair of parallel arrows) is kept in `witness`.
    """

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (arrow id, src, tgt)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows",
                           tuple((str(a), str(s), str(t)) for a, s, t in self.arrows))
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise ValueError(f"duplicate vertex id {v!r}")
            seen.add(v)
        vset = seen
        aseen = set()
        for a, s, t in self.arrows:
            if a in aseen:
                raise ValueError(f"duplicate arrow id {a!r}")
            aseen.add(a)
            if s not in vset:
                raise ValueError(f"arrow {a!r} has dangling source {s!r}")
            if t not in vset:
                raise ValueError(f"arrow {a!r} has dangling target {t!r}")

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def arrow_by_id(self) -> dict[str, tuple[str, str]]:
        return {a: (s, t) for a, s, t in self.arrows}

    @cached_property
    def arrows_between(self) -> dict[tuple[str, str], tuple[str, ...]]:
        between: dict[tuple[str, str], list[str]] = {}
        for a, s, t in self.arrows:
            between.setdefault((s, t), []).append(a)
        return {k: tuple(sorted(v)) for k, v in between.items()}

    def src(self, a: str) -> str:
        return self.arrow_by_id[a][0]

    def tgt(self, a: str) -> str:
        return self.arrow_by_id[a][1]

    def multiplicity(self, v: str, w: str) -> int:
        return len(self.arrows_between.get((v, w), ()))


def build_quiver(vertices, arrows) -> Quiver:
    """Validated quiver from vertex ids and (id, src, tgt) arrow triples.

    Ordering is preserved as given; it is the canonical basis order for
    everything built on top of this quiver.
    """
    return Quiver(tuple(vertices), tuple(tuple(a) for a in arrows))


def simplicity_violation(q: Quiver):
    """None if simple, otherwise ('loop', a) or ('parallel', a, b)."""
    for a, s, t in q.arrows:
        if s == t:
            return ("loop", a)
    for pair, ids in sorted(q.arrows_between.items()):
        if len(ids) > 1:
            return ("parallel", ids[0], ids[1])
    return None


def is_simple(q: Quiver) -> bool:
    return simplicity_violation(q) is None


@dataclass(frozen=True)
class Digraph(Quiver):
    """A simple quiver: no loops, no parallel arrows."""

    def __post_init__(self):
        super().__post_init__()
        witness = simplicity_violation(self)
        if witness is not None:
            raise NonSimpleError(f"not a digraph: {witness}", witness)


def to_digraph(q: Quiver) -> Digraph:
    """Reinterpret a simple quiver as a digraph; raises NonSimpleError with a witness."""
    return Digraph(q.vertices, q.arrows)


# ---------------------------------------------------------------------------
# Orientation words, line digraphs and cube digraphs


def normalize_word(w: str) -> str:
    """An orientation word: one of '+'/'-' per step of the line digraph.

    Character i gives the direction of the single arrow between vertices
    i and i+1 ('+' means i -> i+1).  Unicode minus is accepted.
    """
    w = str(w).replace("−", "-")
    if not w:
        raise ValueError("orientation word must be nonempty")
    if any(c not in "+-" for c in w):
        raise ValueError(f"orientation word may contain only + and -: {w!r}")
    return w


def line_digraph(w: str) -> Digraph:
    """The line digraph I_k encoded by the word, vertices '0'..'k'."""
    w = normalize_word(w)
    k = len(w)
    vertices = [str(i) for i in range(k + 1)]
    arrows = []
    for i, c in enumerate(w):
        if c == "+":
            arrows.append((f"{i}>{i + 1}", str(i), str(i + 1)))
        else:
            arrows.append((f"{i + 1}>{i}", str(i + 1), str(i)))
    return Digraph(tuple(sorted(vertices)), tuple(sorted(arrows)))


def cube_vertex_id(coords: tuple[int, ...]) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def cube_vertex_coords(vid: str) -> tuple[int, ...]:
    inner = vid.strip()[1:-1]
    if not inner:
        return ()
    return tuple(int(x) for x in inner.split(","))


def cube_vertices(w: str, n: int) -> list[tuple[int, ...]]:
    k = len(normalize_word(w))
    return [tuple(c) for c in itertools.product(range(k + 1), repeat=n)]


def cube_arrow_id(src: tuple[int, ...], tgt: tuple[int, ...]) -> str:
    return f"{cube_vertex_id(src)}>{cube_vertex_id(tgt)}"


def cube_arrows(w: str, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Arrow list of I_w^n as (src coords, tgt coords) pairs."""
    w = normalize_word(w)
    k = len(w)
    out = []
    for c in cube_vertices(w, n):
        for pos in range(n):
            j = c[pos]
            if j < k:
                c2 = c[:pos] + (j + 1,) + c[pos + 1:]
                if w[j] == "+":
                    out.append((c, c2))
                else:
                    out.append((c2, c))
    return out


def cube_digraph(w: str, n: int) -> Digraph:
    """The n-cube digraph I_w^n, the n-fold box power of the line digraph.

    Vertices are coordinate tuples in {0..k}^n; an arrow changes exactly
    one coordinate by one step in the direction dictated by the word.
    n = 0 gives the one-vertex digraph.
    """
    if n < 0:
        raise ValueError("cube dimension must be >= 0")
    vertices = sorted(cube_vertex_id(c) for c in cube_vertices(w, n))
    arrows = sorted((cube_arrow_id(s, t), cube_vertex_id(s), cube_vertex_id(t))
                    for s, t in cube_arrows(w, n))
    return Digraph(tuple(vertices), tuple(arrows))


def insert_coord(coords: tuple[int, ...], i: int, value: int) -> tuple[int, ...]:
    """Insert value at 1-based slot i."""
    return coords[:i - 1] + (value,) + coords[i - 1:]


def delete_coord(coords: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Delete the 1-based slot i."""
    return coords[:i - 1] + coords[i:]


def delete_coords(coords: tuple[int, ...], positions: tuple[int, ...]) -> tuple[int, ...]:
    """Delete several 1-based slots given in strictly decreasing order."""
    for i in positions:
        coords = delete_coord(coords, i)
    return coords


# ---------------------------------------------------------------------------
# Quiver maps


ARROW = "a"
VERTEX = "v"


@dataclass(eq=True)
class QuiverMap:
    """A map of quivers: vertex assignment plus per-arrow assignment.

    Each arrow is sent either to a target arrow with matching endpoints
    (amap value ('a', id)) or collapsed to a vertex, in which case both
    endpoints must land on that vertex (amap value ('v', id)).
    """

    source: Quiver
    target: Quiver
    vmap: dict[str, str]
    amap: dict[str, tuple[str, str]]

    def __post_init__(self):
        for v in self.source.vertices:
            img = self.vmap.get(v)
            if img is None:
                raise ValueError(f"vertex {v!r} has no image")
            if img not in self.target.vertex_set:
                raise ValueError(f"vertex image {img!r} not in target")
        for a, s, t in self.source.arrows:
            img = self.amap.get(a)
            if img is None:
                raise ValueError(f"arrow {a!r} has no image")
            kind, x = img
            if kind == ARROW:
                if x not in self.target.arrow_by_id:
                    raise ValueError(f"arrow image {x!r} not in target")
                s2, t2 = self.target.arrow_by_id[x]
                if self.vmap[s] != s2 or self.vmap[t] != t2:
                    raise ValueError(f"arrow {a!r}: endpoints do not match image {x!r}")
            elif kind == VERTEX:
                if x not in self.target.vertex_set:
                    raise ValueError(f"collapse target {x!r} not in target")
                if self.vmap[s] != x or self.vmap[t] != x:
                    raise ValueError(f"arrow {a!r}: collapse endpoints disagree with {x!r}")
            else:
                raise ValueError(f"bad arrow image tag {kind!r}")

    def vertex(self, v: str) -> str:
        return self.vmap[v]

    def arrow(self, a: str) -> tuple[str, str]:
        return self.amap[a]


def identity_map(q: Quiver) -> QuiverMap:
    return QuiverMap(q, q, {v: v for v in q.vertices},
                     {a: (ARROW, a) for a, _, _ in q.arrows})


def compose(g: QuiverMap, f: QuiverMap) -> QuiverMap:
    """The composite g after f."""
    if f.target != g.source:
        raise ValueError("composition mismatch: f.target != g.source")
    vmap = {v: g.vmap[f.vmap[v]] for v in f.source.vertices}
    amap = {}
    for a, _, _ in f.source.arrows:
        kind, x = f.amap[a]
        if kind == VERTEX:
            amap[a] = (VERTEX, g.vmap[x])
        else:
            amap[a] = g.amap[x]
    return QuiverMap(f.source, g.target, vmap, amap)


def digraph_map(source: Quiver, target: Quiver, vmap: dict[str, str]) -> QuiverMap:
    """Quiver map determined by a vertex map alone.

    An arrow whose endpoints land on the same vertex is collapsed; one
    whose endpoints land on distinct vertices must have a unique arrow
    between the images (true whenever the target is a digraph).
    """
    amap = {}
    for a, s, t in source.arrows:
        fs, ft = vmap[s], vmap[t]
        if fs == ft:
            amap[a] = (VERTEX, fs)
        else:
            ids = target.arrows_between.get((fs, ft), ())
            if len(ids) != 1:
                raise ValueError(
                    f"no unique arrow {fs!r}->{ft!r} for image of {a!r} "
                    f"({len(ids)} candidates)")
            amap[a] = (ARROW, ids[0])
    return QuiverMap(source, target, dict(vmap), amap)


# ---------------------------------------------------------------------------
# Box product and structural cube maps


def _box_vid(a: str, b: str) -> str:
    return f"({a},{b})"


def box_product(a: Quiver, b: Quiver) -> Quiver:
    """Box product A box B for a digraph A and an arbitrary quiver B.

    Vertices are pairs; arrows are copies of B's arrows at each A-vertex
    together with copies of A's arrows at each B-vertex.  The result is a
    digraph whenever B is.
    """
    if not is_simple(a):
        raise NonSimpleError("left box factor must be a digraph",
                             simplicity_violation(a))
    vertices = sorted(_box_vid(x, y) for x in a.vertices for y in b.vertices)
    arrows = []
    for x in a.vertices:
        for e, s, t in b.arrows:
            arrows.append((_box_vid(x, e), _box_vid(x, s), _box_vid(x, t)))
    for e, s, t in a.arrows:
        for y in b.vertices:
            arrows.append((_box_vid(e, y), _box_vid(s, y), _box_vid(t, y)))
    q = Quiver(tuple(vertices), tuple(sorted(arrows)))
    return to_digraph(q) if is_simple(q) else q


def embed_at_line_vertex(w: str, v: int, q: Quiver) -> QuiverMap:
    """The embedding Q -> I_w box Q at line vertex v."""
    w = normalize_word(w)
    box = box_product(line_digraph(w), q)
    vmap = {u: _box_vid(str(v), u) for u in q.vertices}
    amap = {a: (ARROW, _box_vid(str(v), a)) for a, _, _ in q.arrows}
    return QuiverMap(q, box, vmap, amap)


def box_left_map(tau: QuiverMap, b: Quiver) -> QuiverMap:
    """tau box Id: (A box B) -> (A' box B) for a map tau of left factors."""
    src = box_product(tau.source, b)
    tgt = box_product(tau.target, b)
    vmap = {}
    for x in tau.source.vertices:
        for y in b.vertices:
            vmap[_box_vid(x, y)] = _box_vid(tau.vmap[x], y)
    amap = {}
    for x in tau.source.vertices:
        for e, _, _ in b.arrows:
            amap[_box_vid(x, e)] = (ARROW, _box_vid(tau.vmap[x], e))
    for e, s, _ in tau.source.arrows:
        kind, img = tau.amap[e]
        for y in b.vertices:
            if kind == ARROW:
                amap[_box_vid(e, y)] = (ARROW, _box_vid(img, y))
            else:
                amap[_box_vid(e, y)] = (VERTEX, _box_vid(img, y))
    return QuiverMap(src, tgt, vmap, amap)


def box_right_map(a: Quiver, f: QuiverMap) -> QuiverMap:
    """Id box f: (A box B) -> (A box B') for a map f of right factors."""
    src = box_product(a, f.source)
    tgt = box_product(a, f.target)
    vmap = {}
    for x in a.vertices:
        for y in f.source.vertices:
            vmap[_box_vid(x, y)] = _box_vid(x, f.vmap[y])
    amap = {}
    for x in a.vertices:
        for e, _, _ in f.source.arrows:
            kind, img = f.amap[e]
            if kind == ARROW:
                amap[_box_vid(x, e)] = (ARROW, _box_vid(x, img))
            else:
                amap[_box_vid(x, e)] = (VERTEX, _box_vid(x, img))
    for e, _, _ in a.arrows:
        for y in f.source.vertices:
            amap[_box_vid(e, y)] = (ARROW, _box_vid(e, f.vmap[y]))
    return QuiverMap(src, tgt, vmap, amap)


def face_map(w: str, n: int, i: int, alpha: int) -> QuiverMap:
    """The face inclusion of cube digraphs inserting constant alpha at slot i.

    alpha must be 0 or k; the map goes I_w^{n-1} -> I_w^n.
    """
    w = normalize_word(w)
    k = len(w)
    if not 1 <= i <= n:
        raise ValueError(f"face index {i} out of range for dimension {n}")
    if alpha not in (0, k):
        raise ValueError(f"face value must be 0 or {k}, got {alpha}")
    src = cube_digraph(w, n - 1)
    tgt = cube_digraph(w, n)
    vmap = {cube_vertex_id(c): cube_vertex_id(insert_coord(c, i, alpha))
            for c in cube_vertices(w, n - 1)}
    return digraph_map(src, tgt, vmap)


def projection_map(w: str, n: int, i: int) -> QuiverMap:
    """The projection of cube digraphs deleting coordinate i: I_w^n -> I_w^{n-1}."""
    w = normalize_word(w)
    if not 1 <= i <= n:
        raise ValueError(f"projection index {i} out of range for dimension {n}")
    src = cube_digraph(w, n)
    tgt = cube_digraph(w, n - 1)
    vmap = {cube_vertex_id(c): cube_vertex_id(delete_coord(c, i))
            for c in cube_vertices(w, n)}
    return digraph_map(src, tgt, vmap)


def cube_unfold(w: str, n: int) -> QuiverMap:
    """The canonical isomorphism I_w^{n+1} -> I_w box I_w^n splitting off
    the first coordinate."""
    w = normalize_word(w)
    src = cube_digraph(w, n + 1)
    tgt = box_product(line_digraph(w), cube_digraph(w, n))
    vmap = {cube_vertex_id(c): _box_vid(str(c[0]), cube_vertex_id(c[1:]))
            for c in cube_vertices(w, n + 1)}
    return digraph_map(src, tgt, vmap)


def line_map_power(tau: QuiverMap, n: int) -> QuiverMap:
    """The induced map of cube digraphs tau^n for a map of line digraphs.

    Source and target of tau must be line digraphs (vertices '0'..'k');
    the power acts coordinatewise.
    """
    wk = _word_of_line(tau.source)
    wm = _word_of_line(tau.target)
    src = cube_digraph(wk, n)
    tgt = cube_digraph(wm, n)
    f = {int(v): int(tau.vmap[v]) for v in tau.source.vertices}
    vmap = {cube_vertex_id(c): cube_vertex_id(tuple(f[x] for x in c))
            for c in cube_vertices(wk, n)}
    return digraph_map(src, tgt, vmap)


def _word_of_line(q: Quiver) -> str:
    """Recover the orientation word of a line digraph (inverse of line_digraph)."""
    k = len(q.vertices) - 1
    chars = []
    for i in range(k):
        if (str(i), str(i + 1)) in q.arrows_between:
            chars.append("+")
        elif (str(i + 1), str(i)) in q.arrows_between:
            chars.append("-")
        else:
            raise ValueError("not a line digraph")
    w = "".join(chars)
    if line_digraph(w) != q:
        raise ValueError("not a line digraph")
    return w


# ---------------------------------------------------------------------------
# Quotient quivers


class UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
        return x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
        return self.find(a)

    def classes(self) -> dict:
        by_root: dict = {}
        for x in self.parent:
            by_root.setdefault(self.find(x), []).append(x)
        return by_root


SRC_SIDE = 0
TGT_SIDE = 1


@dataclass
class QuotientQuiver:
    """The quotient quiver of a map, with the class lookup for both sides."""

    quiver: Quiver
    vertex_class: dict[tuple[int, str], str]
    arrow_class: dict[tuple[int, str], str | None]  # None: collapsed, removed


def quotient_by_map(f: QuiverMap) -> QuotientQuiver:
    """The quotient quiver glueing source and target of f along its graph.

    Vertices are (V + V')/~, arrows are ([E minus collapsed arrows] + E')/~
    with start/end induced.  Class representatives are the smallest
    target-side ids (every class contains one).
    """
    uf_v = UnionFind()
    for v in f.source.vertices:
        uf_v.add((SRC_SIDE, v))
    for v in f.target.vertices:
        uf_v.add((TGT_SIDE, v))
    for v in f.source.vertices:
        uf_v.union((SRC_SIDE, v), (TGT_SIDE, f.vmap[v]))

    uf_a = UnionFind()
    kept_src_arrows = []
    for a, _, _ in f.source.arrows:
        kind, img = f.amap[a]
        if kind == ARROW:
            kept_src_arrows.append(a)
            uf_a.add((SRC_SIDE, a))
            uf_a.union((SRC_SIDE, a), (TGT_SIDE, img))
    for a, _, _ in f.target.arrows:
        uf_a.add((TGT_SIDE, a))

    def label(members) -> str:
        return min(m for side, m in members if side == TGT_SIDE)

    vclasses = uf_v.classes()
    vlabel_by_root = {root: label(members) for root, members in vclasses.items()}
    vertex_class = {x: vlabel_by_root[uf_v.find(x)] for x in uf_v.parent}

    aclasses = uf_a.classes()
    alabel_by_root = {root: label(members) for root, members in aclasses.items()}
    arrow_class: dict[tuple[int, str], str | None] = {
        x: alabel_by_root[uf_a.find(x)] for x in uf_a.parent}
    for a, _, _ in f.source.arrows:
        if f.amap[a][0] == VERTEX:
            arrow_class[(SRC_SIDE, a)] = None

    arrows = []
    for root, members in aclasses.items():
        lab = alabel_by_root[root]
        side, rep = next(m for m in members if m[0] == TGT_SIDE)
        s, t = f.target.arrow_by_id[rep]
        arrows.append((lab, vertex_class[(TGT_SIDE, s)], vertex_class[(TGT_SIDE, t)]))
    vertices = sorted(set(vlabel_by_root.values()))
    quiver = Quiver(tuple(vertices), tuple(sorted(set(arrows))))
    return QuotientQuiver(quiver, vertex_class, arrow_class)


# ---------------------------------------------------------------------------
# Homotopy


def check_homotopy(w: str, big_f: QuiverMap, f: QuiverMap, g: QuiverMap) -> bool:
    """Whether big_f: I_w box Q -> Q' restricts to f at line vertex 0 and to
    g at line vertex k."""
    w = normalize_word(w)
    if f.source != g.source or f.target != g.target:
        raise ValueError("f and g must share source and target")
    q = f.source
    if big_f.source != box_product(line_digraph(w), q):
        raise ValueError("homotopy source is not I_w box Q")
    if big_f.target != f.target:
        raise ValueError("homotopy target mismatch")
    k = len(w)
    at0 = compose(big_f, embed_at_line_vertex(w, 0, q))
    atk = compose(big_f, embed_at_line_vertex(w, k, q))
    return at0 == f and atk == g


# ---------------------------------------------------------------------------
# Isomorphism up to relabeling


def quivers_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    """Isomorphism of quivers up to relabeling, respecting arrow multiplicities.

    Backtracking over degree-compatible vertex bijections; adequate at desk
    scale (the arrow ids themselves carry no structure).
    """
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return False

    def signature(q: Quiver, v: str):
        outs = sorted(len(ids) for (s, t), ids in q.arrows_between.items() if s == v and t != v)
        ins = sorted(len(ids) for (s, t), ids in q.arrows_between.items() if t == v and s != v)
        loops = q.multiplicity(v, v)
        return (tuple(outs), tuple(ins), loops)

    sig1 = {v: signature(q1, v) for v in q1.vertices}
    sig2 = {v: signature(q2, v) for v in q2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    vs1 = sorted(q1.vertices)
    used: set[str] = set()
    assign: dict[str, str] = {}

    def extend(idx: int) -> bool:
        if idx == len(vs1):
            return True
        v = vs1[idx]
        for u in sorted(q2.vertices):
            if u in used or sig2[u] != sig1[v]:
                continue
            ok = q1.multiplicity(v, v) == q2.multiplicity(u, u)
            for v2, u2 in assign.items():
                if q1.multiplicity(v, v2) != q2.multiplicity(u, u2) or \
                        q1.multiplicity(v2, v) != q2.multiplicity(u2, u):
                    ok = False
                    break
            if not ok:
                continue
            assign[v] = u
            used.add(u)
            if extend(idx + 1):
                return True
            del assign[v]
            used.remove(u)
        return False

    return extend(0)
