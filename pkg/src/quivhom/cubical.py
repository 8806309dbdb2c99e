"""Finitely presented cubical sets with canonical degenerate cubes.

A presentation stores only the nondegenerate generators, one ordered list
per dimension, together with the two faces of every generator in each
direction.  Degenerate cubes exist as FormalCube values: a generator with
a canonical word of degeneracy indices (strictly decreasing, applied
left to right).  Uniqueness of that normal form makes cube equality
structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class FormalCube:
    """A possibly degenerate cube: a generator under a canonical word of
    degeneracies."""

    gen: str
    degens: tuple[int, ...] = ()


def canonicalize_degens(word) -> tuple[int, ...]:
    """Normal form of a degeneracy word (outermost index first).

    Uses eps_i eps_j = eps_{j+1} eps_i for i <= j until the word is
    strictly decreasing; the rewriting is confluent, so insertion order
    does not matter.
    """

    def insert(a: int, rest: tuple[int, ...]) -> tuple[int, ...]:
        if not rest or a > rest[0]:
            return (a,) + rest
        return (rest[0] + 1,) + insert(a, rest[1:])

    out: tuple[int, ...] = ()
    for a in reversed(tuple(word)):
        out = insert(a, out)
    return out


class ValidationError(ValueError):
    """A presentation or map failed validation; the report lists each violation."""

    def __init__(self, report: list[str]):
        super().__init__("; ".join(report))
        self.report = report


@dataclass
class CubicalSet:
    """Nondegenerate generators per dimension plus their face assignments.

    faces maps (generator, direction i, alpha in {0,1}) to a FormalCube of
    one dimension lower.  Structural well-formedness is enforced here;
    the cubical interchange identities are checked by validate().
    """

    gens: tuple[tuple[str, ...], ...]
    faces: dict[tuple[str, int, int], FormalCube]

    def __post_init__(self):
        self.gens = tuple(tuple(g) for g in self.gens)
        while self.gens and not self.gens[-1]:
            self.gens = self.gens[:-1]
        dims: dict[str, int] = {}
        for d, layer in enumerate(self.gens):
            for g in layer:
                if g in dims:
                    raise ValueError(f"duplicate generator id {g!r}")
                dims[g] = d
        self._dims = dims
        for (g, i, alpha), c in self.faces.items():
            if g not in dims:
                raise ValueError(f"face of unknown generator {g!r}")
            n = dims[g]
            if not (1 <= i <= n) or alpha not in (0, 1):
                raise ValueError(f"bad face key ({g!r}, {i}, {alpha})")
            self._check_cube(c, n - 1)
        for g, n in dims.items():
            for i in range(1, n + 1):
                for alpha in (0, 1):
                    if (g, i, alpha) not in self.faces:
                        raise ValueError(f"missing face ({g!r}, {i}, {alpha})")

    def _check_cube(self, c: FormalCube, expect_dim: int | None = None):
        if c.gen not in self._dims:
            raise ValueError(f"formal cube over unknown generator {c.gen!r}")
        base = self._dims[c.gen]
        word = tuple(c.degens)
        if word != canonicalize_degens(word):
            raise ValueError(f"degeneracy word {word} not canonical")
        for pos, j in enumerate(reversed(word)):
            if not 1 <= j <= base + pos + 1:
                raise ValueError(f"degeneracy index {j} out of range in {c}")
        if expect_dim is not None and base + len(word) != expect_dim:
            raise ValueError(f"formal cube {c} has dimension {base + len(word)}, "
                             f"expected {expect_dim}")

    def dim(self, gen: str) -> int:
        return self._dims[gen]

    def cube_dim(self, c: FormalCube) -> int:
        return self._dims[c.gen] + len(c.degens)

    @property
    def max_dim(self) -> int:
        return len(self.gens) - 1

    def gens_of_dim(self, d: int) -> tuple[str, ...]:
        return self.gens[d] if 0 <= d < len(self.gens) else ()

    def all_gens(self):
        for layer in self.gens:
            yield from layer

    def face(self, gen: str, i: int, alpha: int) -> FormalCube:
        return self.faces[(gen, i, alpha)]


def cubical_set(gens_by_dim, faces) -> CubicalSet:
    """Build and structurally validate a presentation.

    faces may use FormalCube values, (gen, degens) pairs, or bare
    generator ids for nondegenerate faces.
    """
    norm = {}
    for key, val in faces.items():
        if isinstance(val, FormalCube):
            cube = val
        elif isinstance(val, str):
            cube = FormalCube(val, ())
        else:
            g, degens = val
            cube = FormalCube(g, tuple(degens))
        norm[key] = cube
    return CubicalSet(tuple(tuple(layer) for layer in gens_by_dim), norm)


def canonical_face(k: CubicalSet, c: FormalCube, i: int, alpha: int) -> FormalCube:
    """The face of a formal cube, in canonical form.

    Commutes the face past the degeneracy word, cancelling when the
    indices collide, then applies the stored face of the generator and
    recanonicalizes.
    """
    n = k.cube_dim(c)
    if not 1 <= i <= n:
        raise ValueError(f"face index {i} out of range for dimension {n}")
    if alpha not in (0, 1):
        raise ValueError(f"face side must be 0 or 1, got {alpha}")
    prefix: list[int] = []
    word = c.degens
    for pos, j in enumerate(word):
        if i == j:
            rest = word[pos + 1:]
            return FormalCube(c.gen, canonicalize_degens(tuple(prefix) + rest))
        if i < j:
            prefix.append(j - 1)
        else:
            prefix.append(j)
            i -= 1
    base = k.face(c.gen, i, alpha)
    return FormalCube(base.gen, canonicalize_degens(tuple(prefix) + base.degens))


def validate_cubical(k: CubicalSet, cmap: "CubicalMap | None" = None) -> list[str]:
    """Check the interchange identity on every generator of dimension >= 2.

    Returns an empty report when the presentation is a cubical set; each
    violation is reported with its witness.  When a map is supplied its
    naturality with faces is checked as well.
    """
    report = []
    for d in range(2, k.max_dim + 1):
        for g in k.gens_of_dim(d):
            gc = FormalCube(g)
            for i in range(1, d + 1):
                for j in range(i + 1, d + 1):
                    for alpha in (0, 1):
                        for beta in (0, 1):
                            lhs = canonical_face(k, canonical_face(k, gc, j, beta), i, alpha)
                            rhs = canonical_face(k, canonical_face(k, gc, i, alpha), j - 1, beta)
                            if lhs != rhs:
                                report.append(
                                    f"face identity fails on {g!r}: "
                                    f"d_{i}^{alpha} d_{j}^{beta} = {lhs} but "
                                    f"d_{j - 1}^{beta} d_{i}^{alpha} = {rhs}")
    if cmap is not None:
        report.extend(cmap.naturality_report())
    return report


def map_formal_cube(assignment: dict[str, FormalCube], c: FormalCube) -> FormalCube:
    """Image of a formal cube under a generator assignment."""
    img = assignment[c.gen]
    return FormalCube(img.gen, canonicalize_degens(c.degens + img.degens))


@dataclass
class CubicalMap:
    """A map of presentations: every generator goes to a same-dimension
    formal cube of the target, compatibly with faces.

    Construction checks naturality unless check=False; the only producer
    of unchecked maps is precomposition with a line digraph map that
    moves an endpoint, where face compatibility genuinely fails.
    """

    source: CubicalSet
    target: CubicalSet
    assignment: dict[str, FormalCube]
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        for g in self.source.all_gens():
            img = self.assignment.get(g)
            if img is None:
                raise ValueError(f"generator {g!r} has no image")
            self.target._check_cube(img, self.source.dim(g))
        if self.check:
            report = self.naturality_report()
            if report:
                raise ValidationError(report)

    def naturality_report(self) -> list[str]:
        report = []
        for g in self.source.all_gens():
            n = self.source.dim(g)
            for i in range(1, n + 1):
                for alpha in (0, 1):
                    lhs = canonical_face(self.target, self.assignment[g], i, alpha)
                    rhs = map_formal_cube(self.assignment,
                                          self.source.face(g, i, alpha))
                    if lhs != rhs:
                        report.append(
                            f"map not natural at {g!r}, face ({i},{alpha}): "
                            f"{lhs} != {rhs}")
        return report

    def apply(self, c: FormalCube) -> FormalCube:
        return map_formal_cube(self.assignment, c)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CubicalMap)
                and self.source == other.source
                and self.target == other.target
                and self.assignment == other.assignment)


def identity_cubical_map(k: CubicalSet) -> CubicalMap:
    return CubicalMap(k, k, {g: FormalCube(g) for g in k.all_gens()})


def compose_cubical(g: CubicalMap, f: CubicalMap) -> CubicalMap:
    if f.target != g.source:
        raise ValueError("composition mismatch")
    assignment = {x: map_formal_cube(g.assignment, f.assignment[x])
                  for x in f.source.all_gens()}
    return CubicalMap(f.source, g.target, assignment)


def skeleton(k: CubicalSet, q: int) -> CubicalSet:
    """The q-skeleton: generators of dimension <= q with their faces."""
    if q < 0:
        raise ValueError("skeleton dimension must be >= 0")
    gens = k.gens[:q + 1]
    keep = {g for layer in gens for g in layer}
    faces = {key: c for key, c in k.faces.items() if key[0] in keep}
    return CubicalSet(gens, faces)


def is_simple_cubical(k: CubicalSet) -> bool:
    """No 1-generator with equal endpoints, no two sharing the ordered
    endpoint pair (d_1^1, d_1^0)."""
    seen = set()
    for g in k.gens_of_dim(1):
        pair = (k.face(g, 1, 1).gen, k.face(g, 1, 0).gen)
        if pair[0] == pair[1] or pair in seen:
            return False
        seen.add(pair)
    return True
