"""Deterministic random corpora shared across the suite.

Random cubical sets are grown bottom-up: faces of a new generator are
drawn from the formal cubes over the current presentation by randomized
backtracking against the interchange identities, so every generated
presentation is valid by construction (and the suite re-validates).
"""

from __future__ import annotations

import itertools
import random

from quivhom.cubical import (CubicalSet, FormalCube, canonical_face,
                             cubical_set, validate_cubical)
from quivhom.quiver import (ARROW, VERTEX, Quiver, QuiverMap, box_product,
                            build_quiver, line_digraph)


def canonical_words(base_dim: int, length: int):
    """All canonical degeneracy words of a given length over a base
    dimension: strictly decreasing, each index valid where it applies."""
    if length == 0:
        yield ()
        return
    # innermost index first: position t from the inside allows 1..base_dim+t
    def rec(t: int, lower: int):
        if t > length:
            yield ()
            return
        for j in range(lower + 1, base_dim + t + 1):
            for rest in rec(t + 1, j):
                yield rest + (j,)
    yield from rec(1, 0)


def formal_cubes_of_dim(k: CubicalSet, dim: int) -> list[FormalCube]:
    out = []
    for d in range(dim + 1):
        for g in k.gens_of_dim(d):
            for word in canonical_words(d, dim - d):
                out.append(FormalCube(g, word))
    return out


def add_generator(k: CubicalSet, gid: str, dim: int,
                  faces: dict[tuple[int, int], FormalCube]) -> CubicalSet:
    gens = [list(layer) for layer in k.gens]
    while len(gens) <= dim:
        gens.append([])
    gens[dim].append(gid)
    new_faces = dict(k.faces)
    for (i, alpha), cube in faces.items():
        new_faces[(gid, i, alpha)] = cube
    return CubicalSet(tuple(tuple(layer) for layer in gens), new_faces)


def random_faces(rng: random.Random, k: CubicalSet, dim: int):
    """Random face assignment for a new generator of the given dimension,
    or None when the backtracking finds no compatible assignment."""
    pool = formal_cubes_of_dim(k, dim - 1)
    slots = [(i, alpha) for i in range(1, dim + 1) for alpha in (0, 1)]
    assignment: dict[tuple[int, int], FormalCube] = {}

    def compatible(slot, cube) -> bool:
        i, alpha = slot
        for (j, beta), other in assignment.items():
            if i < j:
                if canonical_face(k, other, i, alpha) != \
                        canonical_face(k, cube, j - 1, beta):
                    return False
            elif i > j:
                if canonical_face(k, cube, j, beta) != \
                        canonical_face(k, other, i - 1, alpha):
                    return False
        return True

    def rec(pos: int) -> bool:
        if pos == len(slots):
            return True
        slot = slots[pos]
        for cube in rng.sample(pool, len(pool)):
            if compatible(slot, cube):
                assignment[slot] = cube
                if rec(pos + 1):
                    return True
                del assignment[slot]
        return False

    return dict(assignment) if rec(0) else None


def random_cubical_set(rng: random.Random, max_dim: int = 3) -> CubicalSet:
    n0 = rng.randint(1, 3)
    k = cubical_set([[f"p{t}" for t in range(n0)]], {})
    for t in range(rng.randint(1, 4)):
        faces = {(1, 0): FormalCube(rng.choice(k.gens_of_dim(0))),
                 (1, 1): FormalCube(rng.choice(k.gens_of_dim(0)))}
        k = add_generator(k, f"e{t}", 1, faces)
    if max_dim >= 2:
        for t in range(rng.randint(0, 2)):
            faces = random_faces(rng, k, 2)
            if faces:
                k = add_generator(k, f"sq{t}", 2, faces)
    if max_dim >= 3 and k.gens_of_dim(2):
        for t in range(rng.randint(0, 1)):
            faces = random_faces(rng, k, 3)
            if faces:
                k = add_generator(k, f"cb{t}", 3, faces)
    assert validate_cubical(k) == []
    return k


def random_quiver(rng: random.Random, max_vertices: int = 3,
                  max_arrows: int = 4, loops: bool = True,
                  connected: bool = False) -> Quiver:
    for _ in range(100):
        nv = rng.randint(1, max_vertices)
        vertices = [f"u{t}" for t in range(nv)]
        arrows = []
        for t in range(rng.randint(0, max_arrows)):
            s = rng.choice(vertices)
            choices = vertices if loops else [v for v in vertices if v != s]
            if not choices:
                continue
            arrows.append((f"a{t}", s, rng.choice(choices)))
        q = build_quiver(vertices, arrows)
        if not connected or _is_connected(q):
            return q
    raise RuntimeError("could not generate a quiver with the requested shape")


def _is_connected(q: Quiver) -> bool:
    if not q.vertices:
        return True
    adj = {v: set() for v in q.vertices}
    for _, s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen = {q.vertices[0]}
    stack = [q.vertices[0]]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(q.vertices)


def random_quiver_map(rng: random.Random, a: Quiver, b: Quiver,
                      tries: int = 60) -> QuiverMap | None:
    """A random valid quiver map a -> b, by randomized greedy assignment."""
    if not b.vertices:
        return None
    for _ in range(tries):
        order = list(a.vertices)
        rng.shuffle(order)
        vmap: dict[str, str] = {}
        ok = True
        for v in order:
            candidates = list(b.vertices)
            rng.shuffle(candidates)
            placed = False
            for u in candidates:
                vmap[v] = u
                good = True
                for _, s, t in a.arrows:
                    if s in vmap and t in vmap:
                        if vmap[s] != vmap[t] and \
                                (vmap[s], vmap[t]) not in b.arrows_between:
                            good = False
                            break
                if good:
                    placed = True
                    break
                del vmap[v]
            if not placed:
                ok = False
                break
        if not ok:
            continue
        amap = {}
        for aid, s, t in a.arrows:
            opts: list[tuple[str, str]] = [
                (ARROW, x) for x in b.arrows_between.get((vmap[s], vmap[t]), ())]
            if vmap[s] == vmap[t]:
                opts.append((VERTEX, vmap[s]))
            amap[aid] = rng.choice(opts)
        return QuiverMap(a, b, vmap, amap)
    return None


def random_one_step_homotopy(rng: random.Random, size_cap: int = 1200):
    """(Q, F) with F: I box Q -> Q' a random one-step homotopy, sized so
    that the dimension-2 singular sets stay small."""
    from quivhom.singular import enumerate_quiver_maps
    from quivhom.quiver import cube_digraph
    while True:
        q = random_quiver(rng, max_vertices=3, max_arrows=3, loops=False)
        qp = random_quiver(rng, max_vertices=3, max_arrows=4, loops=False)
        box = box_product(line_digraph("+"), q)
        big_f = random_quiver_map(rng, box, qp)
        if big_f is None:
            continue
        square = cube_digraph("++", 2)
        count = sum(1 for _ in itertools.islice(
            enumerate_quiver_maps(square, qp), size_cap + 1))
        if count <= size_cap:
            return q, big_f
