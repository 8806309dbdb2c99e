"""The three chain complexes and their homology.

* normalized cubical homology of a presentation: chains on nondegenerate
  cubes, faces that come out degenerate contribute nothing;
* path homology of a digraph: allowed vertex paths, with the boundary
  computed among regular paths and the subspace whose boundary stays
  allowed;
* M-path homology of a quiver: composable arrow paths, with the boundary
  evaluated in an explicit completion to a quiver with exactly M arrows
  between every ordered vertex pair.

Everything is exact: rationals by default, a prime field on request for
the cubical theories only.  Betti numbers at the truncation boundary are
only trusted when the next chain group is known to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cubical import (CubicalMap, CubicalSet, FormalCube, canonical_face,
                      is_simple_cubical)
from .linalg import QQ, Matrix, PrimeField, restricted_kernel
from .quiver import (ARROW, NonSimpleError, Quiver, QuiverMap, box_left_map,
                     box_product, box_right_map, compose, cube_unfold,
                     digraph_map, embed_at_line_vertex, is_simple,
                     line_digraph, normalize_word, simplicity_violation)
from .singular import SingularComplex, induced_postcompose, singular_cubical_set


@dataclass
class ChainComplex:
    """Graded labeled bases with exact boundary matrices; d.d = 0 is
    checked at construction."""

    field_: object
    bases: list[list[str]]
    boundaries: dict[int, Matrix]
    top_exact: bool = False

    def __post_init__(self):
        for p, mat in self.boundaries.items():
            if mat.rows != len(self.bases[p - 1]) or mat.cols != len(self.bases[p]):
                raise ValueError(f"boundary {p} has wrong shape")
        for p in range(2, len(self.bases)):
            prod = self.boundaries[p - 1] @ self.boundaries[p]
            if not prod.is_zero():
                raise ValueError(f"d.d != 0 between degrees {p} and {p - 2}")

    @property
    def p_max(self) -> int:
        return len(self.bases) - 1

    def rank(self, p: int) -> int:
        return len(self.bases[p]) if 0 <= p <= self.p_max else 0

    def chain_ranks(self) -> list[int]:
        return [len(b) for b in self.bases]

    def boundary_rank(self, p: int) -> int:
        if p < 1 or p > self.p_max:
            return 0
        return self.boundaries[p].rank()

    def betti(self) -> tuple[list[int], int]:
        """Betti numbers per degree and the last degree that is reliable.

        b_p = dim ker d_p - rank d_{p+1}; the top degree is reliable only
        when the complex is known to vanish just above the truncation.
        """
        ranks = [self.boundary_rank(p) for p in range(self.p_max + 2)]
        betti = [self.rank(p) - ranks[p] - ranks[p + 1]
                 for p in range(self.p_max + 1)]
        valid_up_to = self.p_max if self.top_exact else self.p_max - 1
        return betti, valid_up_to


def betti_numbers(c: ChainComplex) -> tuple[list[int], list[int], int]:
    """Betti numbers, chain ranks, and the valid-degree bound."""
    betti, valid = c.betti()
    return betti, c.chain_ranks(), valid


def _columns_to_matrix(field_, nrows: int, cols: list[dict[int, int]]) -> Matrix:
    m = Matrix(field_, nrows, len(cols))
    for j, col in enumerate(cols):
        for i, coeff in col.items():
            m.data[i][j] = m.data[i][j] + field_.of_int(coeff)
    return m


# ---------------------------------------------------------------------------
# Normalized cubical homology


def normalized_cubical_complex(k: CubicalSet, p_max: int | None = None,
                               field_=QQ, truncated: bool = False) -> ChainComplex:
    """Chains on nondegenerate generators with the alternating-face
    boundary; a face with a nonempty degeneracy word contributes zero.

    A finite presentation vanishes above its top generator, so reaching
    it makes every degree reliable.  A truncated presentation (a singular
    cubical set cut at p_max) is only known to vanish above the cut when
    it has no positive-dimensional generator at all: a nonconstant cube
    restricts to a nonconstant edge, so an empty degree one kills all
    higher degrees, but emptiness higher up certifies nothing.
    """
    if p_max is None:
        p_max = k.max_dim
    bases = [list(k.gens_of_dim(d)) for d in range(p_max + 1)]
    index = [{g: i for i, g in enumerate(layer)} for layer in bases]
    boundaries = {}
    for p in range(1, p_max + 1):
        cols = []
        for g in bases[p]:
            col: dict[int, int] = {}
            for i in range(1, p + 1):
                for alpha in (0, 1):
                    face_cube = canonical_face(k, FormalCube(g), i, alpha)
                    if face_cube.degens:
                        continue
                    sign = (-1) ** i * (1 if alpha == 0 else -1)
                    row = index[p - 1][face_cube.gen]
                    col[row] = col.get(row, 0) + sign
            cols.append(col)
        boundaries[p] = _columns_to_matrix(field_, len(bases[p - 1]), cols)
    if truncated:
        top_exact = p_max >= 1 and k.max_dim == 0
    else:
        top_exact = p_max >= k.max_dim
    return ChainComplex(field_, bases, boundaries, top_exact=top_exact)


def chain_map_matrices(cmap: CubicalMap, c_src: ChainComplex,
                       c_tgt: ChainComplex) -> dict[int, Matrix]:
    """The chain map on normalized complexes induced by a cubical map:
    a generator goes to its image when nondegenerate and to zero otherwise."""
    out = {}
    for d in range(min(c_src.p_max, c_tgt.p_max) + 1):
        tgt_index = {g: i for i, g in enumerate(c_tgt.bases[d])}
        cols = []
        for g in c_src.bases[d]:
            img = cmap.assignment[g]
            cols.append({} if img.degens else {tgt_index[img.gen]: 1})
        out[d] = _columns_to_matrix(c_src.field_, len(c_tgt.bases[d]), cols)
    return out


# ---------------------------------------------------------------------------
# Path homology of digraphs (allowed vertex paths)


def _path_label(path: tuple[str, ...]) -> str:
    return "e(" + " ".join(path) + ")"


@dataclass
class PathComplex:
    """The allowed-path spaces, the boundary-stays-allowed subspaces, and
    the resulting chain complex."""

    digraph: Quiver
    p_max: int
    allowed: list[list[tuple[str, ...]]]
    omega: list[list[list]]  # per degree: basis vectors in allowed coordinates
    complex: ChainComplex


def _allowed_paths(g: Quiver, p_max: int) -> list[list[tuple[str, ...]]]:
    out_adj = {v: [] for v in g.vertices}
    for _, s, t in g.arrows:
        out_adj[s].append(t)
    for v in out_adj:
        out_adj[v].sort()
    allowed = [[(v,) for v in sorted(g.vertices)]]
    for _ in range(p_max):
        layer = [p + (t,) for p in allowed[-1] for t in out_adj[p[-1]]]
        allowed.append(sorted(layer))
    return allowed


def path_complex(g: Quiver, p_max: int, field_=QQ) -> PathComplex:
    """The path chain complex of a simple quiver (a digraph).

    The boundary of an allowed path is taken among regular paths; the
    degree-p space is the kernel of the projection onto its non-allowed
    coordinates, computed from the finite support of the faces.
    """
    witness = simplicity_violation(g)
    if witness is not None:
        raise NonSimpleError(f"path homology needs a digraph: {witness}", witness)
    allowed = _allowed_paths(g, p_max + 1)
    allowed_sets = [set(layer) for layer in allowed]
    arrows = set(g.arrows_between)

    def is_allowed(path: tuple[str, ...]) -> bool:
        return all((path[i], path[i + 1]) in arrows for i in range(len(path) - 1))

    omega: list[list[list]] = [[[field_.one if i == j else field_.zero
                                 for i in range(len(allowed[0]))]
                                for j in range(len(allowed[0]))]]
    to_allowed: dict[int, Matrix] = {}
    for p in range(1, p_max + 1):
        rows: dict[tuple[str, ...], int] = {pa: i for i, pa in enumerate(allowed[p - 1])}
        extra: list[tuple[str, ...]] = []
        cols: list[dict[int, int]] = []
        for path in allowed[p]:
            col: dict[int, int] = {}
            for q in range(p + 1):
                face_path = path[:q] + path[q + 1:]
                if 0 < q < p and path[q - 1] == path[q + 1]:
                    continue  # irregular: vanishes among regular paths
                if face_path not in rows:
                    extra.append(face_path)
                    rows[face_path] = len(rows)
                idx = rows[face_path]
                col[idx] = col.get(idx, 0) + (-1) ** q
            cols.append(col)
        full = _columns_to_matrix(field_, len(rows), cols)
        forbidden = range(len(allowed[p - 1]), len(rows))
        omega.append(restricted_kernel(full, forbidden))
        to_allowed[p] = full.row_submatrix(range(len(allowed[p - 1])))

    bases: list[list[str]] = []
    boundaries: dict[int, Matrix] = {}
    basis_mats: list[Matrix] = []
    for p in range(p_max + 1):
        vectors = omega[p]
        mat = Matrix.from_columns(field_, len(allowed[p]), vectors)
        basis_mats.append(mat)
        labels = []
        free_cols = _free_columns(vectors)
        for f in free_cols:
            labels.append(_path_label(allowed[p][f]))
        bases.append(labels)
        if p >= 1:
            image = to_allowed[p] @ mat
            boundaries[p] = basis_mats[p - 1].solve(image)
    top_exact = not allowed[p_max + 1]
    cx = ChainComplex(field_, bases, boundaries, top_exact=top_exact)
    return PathComplex(g, p_max, allowed[:p_max + 1], omega, cx)


def _free_columns(vectors: list[list]) -> list[int]:
    """The distinguishing coordinate of each echelon-normalized kernel
    vector: the unique position where it is 1 and all the others vanish."""
    free = []
    for j, v in enumerate(vectors):
        candidates = [i for i, x in enumerate(v)
                      if x == v[i] and x and all(not u[i] for jj, u in enumerate(vectors) if jj != j)]
        # first candidate with value one, else first nonzero
        pick = None
        for i in candidates:
            if v[i] * v[i] == v[i]:  # x == 1 in any field
                pick = i
                break
        if pick is None:
            pick = next(i for i, x in enumerate(v) if x)
        free.append(pick)
    return free


def induced_path_chain_map(f: QuiverMap, pc_src: PathComplex,
                           pc_tgt: PathComplex) -> dict[int, Matrix]:
    """The chain map on path complexes induced by a digraph map: a path
    goes to its image when regular and to zero otherwise."""
    if f.source != pc_src.digraph or f.target != pc_tgt.digraph:
        raise ValueError("path complexes do not match the map")
    field_ = pc_src.complex.field_
    out = {}
    for p in range(min(pc_src.p_max, pc_tgt.p_max) + 1):
        tgt_rows = {pa: i for i, pa in enumerate(pc_tgt.allowed[p])}
        cols = []
        for vec in pc_src.omega[p]:
            col: dict[int, object] = {}
            for i, coeff in enumerate(vec):
                if not coeff:
                    continue
                path = pc_src.allowed[p][i]
                image = tuple(f.vmap[v] for v in path)
                if any(image[q] == image[q + 1] for q in range(len(image) - 1)):
                    continue
                assert image in tgt_rows, "image chain leaves the allowed span"
                r = tgt_rows[image]
                col[r] = col.get(r, field_.zero) + coeff
            cols.append({k: v for k, v in col.items() if v})
        image_mat = Matrix(field_, len(pc_tgt.allowed[p]), len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                image_mat.data[i][j] = v
        basis = Matrix.from_columns(field_, len(pc_tgt.allowed[p]), pc_tgt.omega[p])
        try:
            out[p] = basis.solve(image_mat)
        except ValueError as exc:
            raise AssertionError("image chain leaves Omega") from exc
    return out


# ---------------------------------------------------------------------------
# M-path homology of quivers (arrow paths in a completion)


@dataclass(frozen=True)
class CompletionConfig:
    """Power of the completion (None: the largest arrow multiplicity) and
    whether loop arrows are completed as well."""

    power: int | None = None
    include_loops: bool = True


@dataclass
class Completion:
    base: Quiver
    quiver: Quiver
    power: int
    virtual: frozenset[str]


def max_multiplicity(q: Quiver) -> int:
    return max((len(ids) for ids in q.arrows_between.values()), default=0)


def completion_quiver(q: Quiver, cfg: CompletionConfig = CompletionConfig()) -> Completion:
    """The completion: M - mu(v, w) labeled virtual arrows added to every
    ordered vertex pair."""
    mu_max = max_multiplicity(q)
    power = cfg.power if cfg.power is not None else max(1, mu_max)
    if power < mu_max:
        raise ValueError(f"completion power {power} below the largest "
                         f"multiplicity {mu_max}")
    arrows = list(q.arrows)
    virtual = []
    for v in q.vertices:
        for w in q.vertices:
            if v == w and not cfg.include_loops:
                continue
            for t in range(power - q.multiplicity(v, w)):
                aid = f"~{v}>{w}.{t}"
                virtual.append(aid)
                arrows.append((aid, v, w))
    quiver = Quiver(q.vertices, tuple(arrows))
    return Completion(q, quiver, power, frozenset(virtual))


def arrow_paths(q: Quiver, n: int) -> list[tuple[str, ...]]:
    """Composable arrow paths of length n, sorted; length 0 is the vertex list."""
    if n == 0:
        return [(v,) for v in sorted(q.vertices)]
    by_src: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a, s, _ in q.arrows:
        by_src[s].append(a)
    for v in by_src:
        by_src[v].sort()
    layer = [(a,) for a in sorted(q.arrow_by_id)]
    for _ in range(n - 1):
        layer = [p + (a,) for p in layer for a in by_src[q.tgt(p[-1])]]
    return sorted(layer)


def mpath_boundary(path: tuple[str, ...], comp: Completion) -> dict:
    """Boundary of an arrow path, evaluated in the completion.

    Keys are shorter arrow paths (or vertex ids in degree zero); dropping
    the first or last arrow carries the completion power, merging two
    consecutive arrows sums over every completion arrow with the combined
    endpoints.
    """
    qt = comp.quiver
    m = comp.power
    out: dict = {}

    def add(key, coeff):
        out[key] = out.get(key, 0) + coeff
        if not out[key]:
            del out[key]

    n = len(path)
    if n == 1:
        add(qt.tgt(path[0]), m)
        add(qt.src(path[0]), -m)
        return out
    add(path[1:], m)
    add(path[:-1], m * (-1) ** n)
    for i in range(1, n):
        sign = (-1) ** i
        merged = qt.arrows_between.get((qt.src(path[i - 1]), qt.tgt(path[i])), ())
        for c in merged:
            add(path[:i - 1] + (c,) + path[i + 1:], sign)
    return out


@dataclass
class MPathComplex:
    quiver: Quiver
    completion: Completion
    p_max: int
    paths: list[list[tuple[str, ...]]]  # Lambda_n(Q) bases per degree
    omega: list[list[list]]
    complex: ChainComplex


def mpath_complex(q: Quiver, cfg: CompletionConfig = CompletionConfig(),
                  p_max: int = 3, field_=QQ) -> MPathComplex:
    """The M-path chain complex of a quiver over the rationals.

    The degree-n space is spanned by the arrow paths of the quiver whose
    completion boundary has no coordinate on a path through a virtual
    arrow.
    """
    if field_ is not QQ:
        raise ValueError("M-path homology is computed over the rationals")
    comp = completion_quiver(q, cfg)
    paths = [arrow_paths(q, n) for n in range(p_max + 2)]

    omega: list[list[list]] = [[[field_.one if i == j else field_.zero
                                 for i in range(len(paths[0]))]
                                for j in range(len(paths[0]))]]
    to_allowed: dict[int, Matrix] = {}
    for n in range(1, p_max + 1):
        base_rows = paths[n - 1] if n >= 2 else [(v,) for v in sorted(q.vertices)]
        rows: dict = {key if n >= 2 else key[0]: i for i, key in enumerate(base_rows)}
        cols = []
        for path in paths[n]:
            col: dict[int, int] = {}
            for key, coeff in mpath_boundary(path, comp).items():
                if key not in rows:
                    rows[key] = len(rows)
                col[rows[key]] = coeff
            cols.append(col)
        full = _columns_to_matrix(field_, len(rows), cols)
        forbidden = range(len(base_rows), len(rows))
        omega.append(restricted_kernel(full, forbidden))
        to_allowed[n] = full.row_submatrix(range(len(base_rows)))

    bases: list[list[str]] = []
    boundaries: dict[int, Matrix] = {}
    basis_mats: list[Matrix] = []
    for n in range(p_max + 1):
        mat = Matrix.from_columns(field_, len(paths[n]), omega[n])
        basis_mats.append(mat)
        bases.append(["(" + " ".join(paths[n][f]) + ")"
                      for f in _free_columns(omega[n])])
        if n >= 1:
            boundaries[n] = basis_mats[n - 1].solve(to_allowed[n] @ mat)
    cx = ChainComplex(field_, bases, boundaries, top_exact=not paths[p_max + 1])
    return MPathComplex(q, comp, p_max, paths[:p_max + 1], omega, cx)


def completion_boundary_squares_to_zero(comp: Completion, n_max: int) -> bool:
    """d.d = 0 on every arrow path of the completion up to length n_max,
    checked sparsely."""
    for n in range(2, n_max + 1):
        for path in arrow_paths(comp.quiver, n):
            acc: dict = {}
            for key, coeff in mpath_boundary(path, comp).items():
                for key2, coeff2 in mpath_boundary(key, comp).items():
                    acc[key2] = acc.get(key2, 0) + coeff * coeff2
                    if not acc[key2]:
                        del acc[key2]
            if acc:
                return False
    return True


# ---------------------------------------------------------------------------
# The prism chain homotopy


PRISM_SIGN = -1  # s.d + d.s = PRISM_SIGN * (f# - g#) under our conventions


@dataclass
class PrismHomotopy:
    word: str
    source_complex: ChainComplex
    target_complex: ChainComplex
    source_singular: SingularComplex
    target_singular: SingularComplex
    s: dict[int, Matrix]
    f_sharp: dict[int, Matrix]
    g_sharp: dict[int, Matrix]
    sign: int


def prism_homotopy(q: Quiver, big_f: QuiverMap, w: str, n_max: int,
                   field_=QQ) -> PrismHomotopy:
    """The degree +1 prism operator of a one-step homotopy F: I box Q -> Q'.

    A generator phi goes to the cube F . (pi box Id) . (Id box phi) where
    pi squashes the line digraph onto its first arrow; the word must start
    with '+' so that pi is a digraph map.  The prism identity
    s d + d s = sign (f# - g#) is verified degreewise at construction.
    """
    w = normalize_word(w)
    if w[0] != "+":
        raise ValueError("the prism needs the arrow 0 -> 1: word must start with '+'")
    if big_f.source != box_product(line_digraph("+"), q):
        raise ValueError("homotopy source is not I box Q")
    qp = big_f.target
    f = compose(big_f, embed_at_line_vertex("+", 0, q))
    g = compose(big_f, embed_at_line_vertex("+", 1, q))

    s_q = singular_cubical_set(q, w, n_max)
    s_qp = singular_cubical_set(qp, w, n_max)
    c_q = normalized_cubical_complex(s_q.presentation, n_max, field_, truncated=True)
    c_qp = normalized_cubical_complex(s_qp.presentation, n_max, field_, truncated=True)
    f_sharp = chain_map_matrices(induced_postcompose(f, s_q, s_qp), c_q, c_qp)
    g_sharp = chain_map_matrices(induced_postcompose(g, s_q, s_qp), c_q, c_qp)

    pi = digraph_map(line_digraph(w), line_digraph("+"),
                     {v: ("0" if v == "0" else "1")
                      for v in line_digraph(w).vertices})
    squash = box_left_map(pi, q)  # I_w box Q -> I box Q

    s_mats: dict[int, Matrix] = {}
    for n in range(n_max):
        tgt_index = {gid: i for i, gid in enumerate(c_qp.bases[n + 1])}
        cols = []
        for gid in c_q.bases[n]:
            phi = s_q.cubes[gid].qmap
            lift = compose(box_right_map(line_digraph(w), phi), cube_unfold(w, n))
            cube = compose(big_f, compose(squash, lift))
            formal = s_qp.strip(cube, n + 1)
            cols.append({} if formal.degens else {tgt_index[formal.gen]: 1})
        s_mats[n] = _columns_to_matrix(field_, len(c_qp.bases[n + 1]), cols)

    prism = PrismHomotopy(w, c_q, c_qp, s_q, s_qp, s_mats, f_sharp, g_sharp,
                          PRISM_SIGN)
    _verify_prism_identity(prism)
    return prism


def _verify_prism_identity(pr: PrismHomotopy):
    for n in range(len(pr.source_complex.bases) - 1):
        lhs = pr.target_complex.boundaries[n + 1] @ pr.s[n]
        if n >= 1:
            lhs = lhs + pr.s[n - 1] @ pr.source_complex.boundaries[n]
        rhs = (pr.f_sharp[n] - pr.g_sharp[n]).scale(
            pr.source_complex.field_.of_int(pr.sign))
        if lhs != rhs:
            raise AssertionError(f"prism identity fails in degree {n}")


def chain_maps_equal_on_homology(c_src: ChainComplex, c_tgt: ChainComplex,
                                 m1: dict[int, Matrix], m2: dict[int, Matrix],
                                 degree: int) -> bool:
    """Whether two chain maps induce the same map on homology in a degree.

    Every cycle's two images must differ by a boundary; needs the next
    boundary of the target, so degree < p_max.
    """
    from .linalg import in_span
    field_ = c_src.field_
    if degree >= 1:
        cycles = c_src.boundaries[degree].kernel_basis()
    else:
        cycles = [list(col) for col in Matrix.identity(field_, c_src.rank(0)).data]
    image_basis = [c_tgt.boundaries[degree + 1].column(j)
                   for j in range(c_tgt.rank(degree + 1))]
    zmat = Matrix.from_columns(field_, c_src.rank(degree), cycles) \
        if cycles else Matrix(field_, c_src.rank(degree), 0)
    diff = (m1[degree] - m2[degree]) @ zmat
    return all(in_span(field_, image_basis, diff.column(j))
               for j in range(diff.cols))


# ---------------------------------------------------------------------------
# One entry point per homology theory


def compute_homology(theory: str, obj, *, word: str | None = None,
                     power: int | None = None, max_dim: int | None = None,
                     field_=QQ, include_loops: bool = True) -> dict:
    """Pipeline one of the five homology theories and report the result.

    The report carries the Betti numbers for every computed degree, the
    chain ranks, the last reliable degree, the field, and the parameters
    that produced it.
    """
    if theory in ("path", "mpath", "cubical_path") and field_ is not QQ:
        raise ValueError(f"{theory} homology is computed over the rationals")

    from .realization import realize

    if theory == "cubical":
        if not isinstance(obj, CubicalSet):
            raise TypeError("cubical homology needs a cubical set")
        p_max = max_dim if max_dim is not None else obj.max_dim
        cx = normalized_cubical_complex(obj, p_max, field_)
    elif theory == "cell":
        if not isinstance(obj, Quiver):
            raise TypeError("cell homology needs a quiver")
        w = normalize_word(word if word is not None else "+")
        n_max = max_dim if max_dim is not None else 2
        sc = singular_cubical_set(obj, w, n_max)
        cx = normalized_cubical_complex(sc.presentation, n_max, field_, truncated=True)
    elif theory == "path":
        if not isinstance(obj, Quiver):
            raise TypeError("path homology needs a quiver")
        p_max = max_dim if max_dim is not None else 3
        cx = path_complex(obj, p_max, field_).complex
    elif theory == "cubical_path":
        if not isinstance(obj, CubicalSet):
            raise TypeError("path homology of a cubical set needs a cubical set")
        p_max = max_dim if max_dim is not None else 3
        if word is None:
            if not is_simple_cubical(obj):
                raise ValueError("the simple path homology needs a simple "
                                 "cubical set; give a word of length >= 2")
            g = realize(obj, "+").quiver
        else:
            w = normalize_word(word)
            if len(w) == 1:
                raise ValueError("path homology over a line digraph needs a "
                                 "word of length >= 2 (omit it for the "
                                 "simple theory)")
            g = realize(obj, w).quiver
        cx = path_complex(g, p_max, field_).complex
    elif theory == "mpath":
        if isinstance(obj, CubicalSet):
            quiver = realize(obj, "+").quiver
        elif isinstance(obj, Quiver):
            quiver = obj
        else:
            raise TypeError("M-path homology needs a quiver or a cubical set")
        p_max = max_dim if max_dim is not None else 3
        cfg = CompletionConfig(power=power, include_loops=include_loops)
        mp = mpath_complex(quiver, cfg, p_max, field_)
        power = mp.completion.power
        cx = mp.complex
    else:
        raise ValueError(f"unknown homology theory {theory!r}")

    betti, ranks, valid = betti_numbers(cx)
    if not any(ranks):
        betti = []
    return {
        "theory": theory,
        "field": field_.name,
        "params": {"word": word, "power": power, "max_dim": cx.p_max},
        "chain_ranks": ranks,
        "betti": betti,
        "valid_up_to": valid,
    }
