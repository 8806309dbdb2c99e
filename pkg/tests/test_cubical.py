"""Cubical presentations: canonical degeneracy words, faces, validation.

The degeneracy calculus is checked against an exhaustive independent
rewriter: apply eps_i eps_j -> eps_{j+1} eps_i (i <= j) in every possible
order and confirm a single normal form is reached.
"""

import itertools

import pytest

from quivhom.cubical import (CubicalMap, FormalCube, ValidationError,
                             canonical_face, canonicalize_degens, cubical_set,
                             is_simple_cubical, skeleton, validate_cubical)


def triangle():
    return cubical_set(
        [["v0", "v1", "v2"], ["i", "j", "k"]],
        {("i", 1, 0): "v0", ("i", 1, 1): "v1",
         ("j", 1, 0): "v1", ("j", 1, 1): "v2",
         ("k", 1, 0): "v0", ("k", 1, 1): "v2"})


def all_normal_forms(word):
    """Every normal form reachable by rewriting in arbitrary order."""
    seen = set()
    stack = [tuple(word)]
    results = set()
    while stack:
        w = stack.pop()
        if w in seen:
            continue
        seen.add(w)
        moved = False
        for t in range(len(w) - 1):
            a, b = w[t], w[t + 1]
            if a <= b:
                stack.append(w[:t] + (b + 1, a) + w[t + 2:])
                moved = True
        if not moved:
            results.add(w)
    return results


def valid_words(base_dim, length):
    """All degeneracy words (not necessarily canonical) applicable to a
    cube of the base dimension."""
    def rec(t):
        if t == 0:
            yield ()
            return
        for rest in rec(t - 1):
            # rest has length t-1 applied innermost; next index applies at
            # dimension base_dim + t - 1
            for j in range(1, base_dim + t + 1):
                yield (j,) + rest
    yield from rec(length)


def test_canonicalization_confluent_exhaustively():
    for base_dim in range(4):
        for length in range(1, 5):
            for word in valid_words(base_dim, length):
                forms = all_normal_forms(word)
                assert len(forms) == 1
                assert forms.pop() == canonicalize_degens(word)


def test_canonical_face_identity_case():
    k = triangle()
    assert canonical_face(k, FormalCube("i", (1,)), 1, 0) == FormalCube("i")
    assert canonical_face(k, FormalCube("i", (1,)), 1, 1) == FormalCube("i")


def test_canonical_face_commutes_past_degeneracy():
    k = triangle()
    # face below the degeneracy index: d_1^a eps_2 e = eps_1 d_1^a e
    for alpha, end in ((0, "v0"), (1, "v1")):
        assert canonical_face(k, FormalCube("i", (2,)), 1, alpha) == \
            FormalCube(end, (1,))


def test_canonical_face_matches_singular_model():
    # independent oracle: faces of concrete cube maps, stripped back
    from quivhom.quiver import build_quiver, compose, face_map
    from quivhom.singular import singular_cubical_set
    q = build_quiver(["0", "1"], [("a", "0", "1")])
    for w in ("+", "++"):
        s = singular_cubical_set(q, w, 2)
        pres = s.presentation
        k = len(w)
        for dim in (1, 2):
            for g in pres.gens_of_dim(dim - 1):
                for eps in range(1, dim + 1):
                    c = FormalCube(g, canonicalize_degens((eps,)))
                    concrete = s.formal_to_map(c)
                    for i in range(1, dim + 1):
                        for alpha in (0, 1):
                            symbolic = canonical_face(pres, c, i, alpha)
                            face = compose(concrete, face_map(w, dim, i, alpha * k))
                            assert symbolic == s.strip(face, dim - 1)


def test_stored_faces_and_double_face_identity():
    k = triangle()
    assert canonical_face(k, FormalCube("i"), 1, 0) == FormalCube("v0")
    assert validate_cubical(k) == []
    # the first identity of the face calculus on arbitrary formal cubes
    for g in ("i", "j", "k"):
        for word in ((1,), (2,)):
            c = FormalCube(g, word)
            for alpha, beta in itertools.product((0, 1), repeat=2):
                lhs = canonical_face(k, canonical_face(k, c, 2, beta), 1, alpha)
                rhs = canonical_face(k, canonical_face(k, c, 1, alpha), 1, beta)
                assert lhs == rhs


def test_validate_flags_bad_corner():
    # a square whose corners disagree: d_1^0 d_2^0 != d_1^0 d_1^0
    k = cubical_set(
        [["x", "y"], ["e", "f"], ["sq"]],
        {("e", 1, 0): "x", ("e", 1, 1): "x",
         ("f", 1, 0): "y", ("f", 1, 1): "y",
         ("sq", 1, 0): "e", ("sq", 1, 1): "e",
         ("sq", 2, 0): "f", ("sq", 2, 1): "f"})
    report = validate_cubical(k)
    assert report and "sq" in report[0]


def test_low_dimensional_presentations_always_valid():
    k = triangle()
    assert validate_cubical(skeleton(k, 1)) == []
    assert validate_cubical(skeleton(k, 0)) == []


def test_skeleton():
    k = triangle()
    assert skeleton(k, 1).gens == k.gens
    sk0 = skeleton(k, 0)
    assert sk0.gens == (("v0", "v1", "v2"),)
    assert sk0.faces == {}
    # filtration: each skeleton is contained in the next
    for q in range(2):
        a, b = skeleton(k, q), skeleton(k, q + 1)
        assert a.gens == b.gens[:q + 1]
        assert set(a.faces) <= set(b.faces)


def test_is_simple_cubical():
    assert is_simple_cubical(triangle())
    parallel = cubical_set(
        [["v0", "v1"], ["a1", "a2"]],
        {("a1", 1, 0): "v0", ("a1", 1, 1): "v1",
         ("a2", 1, 0): "v0", ("a2", 1, 1): "v1"})
    assert not is_simple_cubical(parallel)
    loop = cubical_set([["v"], ["e"]], {("e", 1, 0): "v", ("e", 1, 1): "v"})
    assert not is_simple_cubical(loop)


def test_structural_errors():
    with pytest.raises(ValueError):
        cubical_set([["v"], ["e"]], {("e", 1, 0): "v"})  # missing face
    with pytest.raises(ValueError):
        cubical_set([["v"], ["e"]],
                    {("e", 1, 0): "v", ("e", 1, 1): "w"})  # dangling
    with pytest.raises(ValueError):
        cubical_set([["v"], ["e"]],
                    {("e", 1, 0): ("v", (1, 2)), ("e", 1, 1): "v"})


def test_cubical_map_naturality_enforced():
    k = triangle()
    ident = {g: FormalCube(g) for layer in k.gens for g in layer}
    CubicalMap(k, k, ident)  # fine
    bad = dict(ident)
    bad["i"] = FormalCube("j")
    with pytest.raises(ValidationError):
        CubicalMap(k, k, bad)
