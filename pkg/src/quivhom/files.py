"""File formats and simplicial-complex ingestion.

One self-describing JSON family with a "type" discriminator:

  {"type": "quiver", "vertices": [...],
   "arrows": [{"id": ..., "src": ..., "tgt": ...}, ...]}

  {"type": "cubical_set", "cubes": [
     {"id": ..., "dim": n,
      "faces": {"1-": {"gen": ..., "degens": [...]}, "1+": ..., ...}}]}

  {"type": "simplicial", "facets": [["0", "1", "2"], ...]}

Face keys are "i-" for the 0-side and "i+" for the 1-side; degens is the
canonical strictly decreasing degeneracy word and may be omitted when
empty.  Emission is sorted and deterministic, so loading an emitted file
reproduces the object exactly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .cubical import CubicalSet, FormalCube, ValidationError, cubical_set, validate_cubical
from .quiver import Digraph, Quiver, build_quiver


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplexInput:
    """A finite simplicial complex given by its facets."""

    facets: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "facets",
                           tuple(tuple(str(v) for v in f) for f in self.facets))
        if not self.facets:
            raise ValueError("a simplicial complex needs at least one facet")
        for f in self.facets:
            if not f:
                raise ValueError("empty facet")
            if len(set(f)) != len(f):
                raise ValueError(f"facet {f} repeats a vertex")


def simplex_id(vertices) -> str:
    return "{" + ",".join(sorted(vertices)) + "}"


def simplicial_to_digraph(s: SimplicialComplexInput) -> Digraph:
    """The face-poset digraph: one vertex per simplex, one arrow for each
    codimension-one containment."""
    simplexes: set[tuple[str, ...]] = set()
    for facet in s.facets:
        vs = sorted(set(facet))
        for r in range(1, len(vs) + 1):
            simplexes.update(itertools.combinations(vs, r))
    vertices = sorted(simplex_id(sx) for sx in simplexes)
    arrows = []
    for sx in simplexes:
        if len(sx) == 1:
            continue
        for drop in range(len(sx)):
            tau = sx[:drop] + sx[drop + 1:]
            arrows.append((f"{simplex_id(sx)}>{simplex_id(tau)}",
                           simplex_id(sx), simplex_id(tau)))
    return Digraph(tuple(vertices), tuple(sorted(arrows)))


# ---------------------------------------------------------------------------
# Serialization


def quiver_to_data(q: Quiver) -> dict:
    return {"type": "quiver",
            "vertices": sorted(q.vertices),
            "arrows": [{"id": a, "src": s, "tgt": t}
                       for a, s, t in sorted(q.arrows)]}


def cubical_to_data(k: CubicalSet) -> dict:
    cubes = []
    for d, layer in enumerate(k.gens):
        for g in layer:
            faces = {}
            for i in range(1, d + 1):
                for alpha, tag in ((0, "-"), (1, "+")):
                    c = k.face(g, i, alpha)
                    entry: dict = {"gen": c.gen}
                    if c.degens:
                        entry["degens"] = list(c.degens)
                    faces[f"{i}{tag}"] = entry
            cube: dict = {"id": g, "dim": d}
            if faces:
                cube["faces"] = faces
            cubes.append(cube)
    return {"type": "cubical_set", "cubes": cubes}


def simplicial_to_data(s: SimplicialComplexInput) -> dict:
    return {"type": "simplicial",
            "facets": sorted(sorted(f) for f in s.facets)}


def artifact_to_data(obj) -> dict:
    if isinstance(obj, Quiver):
        return quiver_to_data(obj)
    if isinstance(obj, CubicalSet):
        return cubical_to_data(obj)
    if isinstance(obj, SimplicialComplexInput):
        return simplicial_to_data(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def save_artifact(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(artifact_to_data(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _parse_face_key(key: str) -> tuple[int, int]:
    if len(key) < 2 or key[-1] not in "+-":
        raise ParseError(f"bad face key {key!r}: expected like '1-' or '2+'")
    try:
        i = int(key[:-1])
    except ValueError:
        raise ParseError(f"bad face key {key!r}") from None
    return i, (1 if key[-1] == "+" else 0)


def data_to_artifact(data: dict):
    if not isinstance(data, dict) or "type" not in data:
        raise ParseError("artifact must be an object with a 'type' field")
    kind = data["type"]
    if kind == "quiver":
        try:
            return build_quiver(
                [str(v) for v in data.get("vertices", [])],
                [(str(a["id"]), str(a["src"]), str(a["tgt"]))
                 for a in data.get("arrows", [])])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed quiver: {exc}") from exc
    if kind == "cubical_set":
        cubes = data.get("cubes", [])
        try:
            max_dim = max((int(c["dim"]) for c in cubes), default=-1)
            gens: list[list[str]] = [[] for _ in range(max_dim + 1)]
            faces = {}
            for c in cubes:
                gid, d = str(c["id"]), int(c["dim"])
                gens[d].append(gid)
                for key, val in c.get("faces", {}).items():
                    i, alpha = _parse_face_key(key)
                    cube = FormalCube(str(val["gen"]),
                                      tuple(int(x) for x in val.get("degens", [])))
                    faces[(gid, i, alpha)] = cube
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed cubical set: {exc}") from exc
        k = cubical_set(gens, faces)
        report = validate_cubical(k)
        if report:
            raise ValidationError(report)
        return k
    if kind == "simplicial":
        try:
            return SimplicialComplexInput(tuple(tuple(f) for f in data["facets"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed simplicial complex: {exc}") from exc
    raise ParseError(f"unknown artifact type {kind!r}")


def load_artifact(path):
    """Load and validate a quiver, cubical set, or simplicial complex."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    try:
        return data_to_artifact(data)
    except ValueError as exc:
        if isinstance(exc, (ParseError, ValidationError)):
            raise
        raise ParseError(f"{path}: {exc}") from exc
