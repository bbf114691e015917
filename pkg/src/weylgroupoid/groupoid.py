"""Simply-connected Cartan graphs generated from a seed root set.

Each object is a chamber of the arrangement.  Besides its own root set and
Cartan matrix it remembers its simple roots written in the seed's coordinates
(``basis``), which is what tells two chambers apart: for Weyl groups every
chamber carries the same root set in its own coordinates.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotFinite, WeylGroupoidError
from .exact import IntMat, IntVec, from_columns, identity, mat_inv, mat_mul, mat_vec
from .rootsys import (
    CartanMatrix,
    RootSet,
    canonical_form,
    cartan_from_roots,
    reflect_object,
    reflection_matrix,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_OBJECTS = 100_000


@dataclass(frozen=True)
class GroupoidObject:
    id: int
    roots: RootSet
    cartan: CartanMatrix
    basis: tuple[IntVec, ...]  # simple roots in seed coordinates, one per index

    @property
    def basis_matrix(self) -> IntMat:
        return from_columns(self.basis)

    def to_ambient(self, v: Sequence[int]) -> IntVec:
        """Seed coordinates of the root with coordinates ``v`` at this object."""
        return mat_vec(self.basis_matrix, v)


@dataclass
class CartanGraph:
    rank: int
    objects: list[GroupoidObject]
    edges: dict[tuple[int, int], int]
    _by_basis: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._by_basis:
            self._by_basis = {frozenset(o.basis): o.id for o in self.objects}

    def __len__(self):
        return len(self.objects)

    def __getitem__(self, a: int) -> GroupoidObject:
        return self.objects[a]

    @property
    def seed(self) -> GroupoidObject:
        return self.objects[0]

    def neighbour(self, a: int, i: int) -> int:
        return self.edges[(a, i)]

    def object_with_simple_roots(self, simple: Sequence[Sequence[int]]) -> int | None:
        """Id of the chamber whose simple roots (seed coordinates) are ``simple``, in any order."""
        return self._by_basis.get(frozenset(tuple(v) for v in simple))

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "objects": [
                {
                    "id": o.id,
                    "positive_roots": [list(v) for v in o.roots.sorted()],
                    "cartan": [list(row) for row in o.cartan],
                    "basis": [list(v) for v in o.basis],
                }
                for o in self.objects
            ],
            "edges": [[a, i, b] for (a, i), b in sorted(self.edges.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CartanGraph":
        objects = [
            GroupoidObject(
                id=int(o["id"]),
                roots=RootSet(data["rank"], o["positive_roots"]),
                cartan=tuple(tuple(row) for row in o["cartan"]),
                basis=tuple(tuple(v) for v in o["basis"]),
            )
            for o in data["objects"]
        ]
        edges = {(int(a), int(i)): int(b) for a, i, b in data["edges"]}
        return cls(int(data["rank"]), objects, edges)


def _reflect_basis(basis: tuple[IntVec, ...], cartan: CartanMatrix, i: int) -> tuple[IntVec, ...]:
    # new simple roots: -a_i and a_j - c_ij a_i
    i0 = i - 1
    ai = basis[i0]
    out = []
    for j, aj in zip(range(len(basis)), basis):
        if j == i0:
            out.append(tuple(-x for x in ai))
        else:
            c = cartan[i0][j]
            out.append(tuple(y - c * x for x, y in zip(ai, aj)))
    return tuple(out)


def enumerate_objects(seed: RootSet, max_objects: int = DEFAULT_MAX_OBJECTS) -> CartanGraph:
    """Breadth-first closure of ``seed`` under all simple reflections."""
    r = seed.rank
    start = GroupoidObject(0, seed, cartan_from_roots(seed), tuple(identity(r)))
    objects = [start]
    by_basis = {frozenset(start.basis): 0}
    edges: dict[tuple[int, int], int] = {}
    a = 0
    while a < len(objects):
        obj = objects[a]
        for i in range(1, r + 1):
            if (a, i) in edges:
                continue
            basis = _reflect_basis(obj.basis, obj.cartan, i)
            key = frozenset(basis)
            b = by_basis.get(key)
            if b is None:
                if len(objects) >= max_objects:
                    raise NotFinite(f"not finite within bound: more than {max_objects} objects")
                roots = reflect_object(obj.roots, i)
                b = len(objects)
                objects.append(GroupoidObject(b, roots, cartan_from_roots(roots), basis))
                by_basis[key] = b
            edges[(a, i)] = b
            edges.setdefault((b, i), a)
        a += 1
    log.debug("enumerated %d objects of rank %d", len(objects), r)
    return CartanGraph(r, objects, edges, by_basis)


@dataclass(frozen=True)
class Violation:
    axiom: str
    object: int
    detail: str


@dataclass
class AxiomReport:
    violations: list[Violation]
    coxeter: dict[tuple[int, int, int], int]  # (object, i, j) -> m^a_ij
    checked: tuple[str, ...] = ("C1", "C2", "M1", "M2", "R1", "R2", "R3", "R4")

    @property
    def ok(self) -> bool:
        return not self.violations

    def failed(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": list(self.checked),
            "violations": [{"axiom": v.axiom, "object": v.object, "detail": v.detail}
                           for v in self.violations],
        }


def verify_axioms(G: CartanGraph) -> AxiomReport:
    """Check the Cartan-graph axioms and the root-system axioms on an enumerated graph."""
    r = G.rank
    bad: list[Violation] = []
    coxeter: dict[tuple[int, int, int], int] = {}
    n = len(G.objects)

    for obj in G.objects:
        a = obj.id
        # M1/M2 and consistency of the stored matrix with the roots
        try:
            c = cartan_from_roots(obj.roots)
        except WeylGroupoidError as exc:
            bad.append(Violation("M2", a, str(exc)))
            continue
        if c != obj.cartan:
            bad.append(Violation("M1", a, "stored Cartan matrix differs from the root set"))
        # R1/R2: validated on construction of RootSet; recheck the unit-vector lines
        for i in range(r):
            for v in obj.roots.positive_roots:
                if v[i] > 1 and all(x == 0 for k, x in zip(range(r), v) if k != i):
                    bad.append(Violation("R2", a, f"multiple {v} of a simple root"))

        for i in range(1, r + 1):
            b = G.edges.get((a, i))
            if b is None or not 0 <= b < n:
                bad.append(Violation("C1", a, f"reflection {i} undefined"))
                continue
            if G.edges.get((b, i)) != a:
                bad.append(Violation("C1", a, f"rho_{i}(rho_{i}({a})) = {G.edges.get((b, i))}"))
            other = G.objects[b]
            for j in range(r):
                if obj.cartan[i - 1][j] != other.cartan[i - 1][j]:
                    bad.append(Violation("C2", a, f"c_{i}{j + 1} differs at object {b}"))
            try:
                image = reflect_object(obj.roots, i)
            except WeylGroupoidError as exc:
                bad.append(Violation("R3", a, str(exc)))
                continue
            if image != other.roots:
                bad.append(Violation("R3", a, f"s_{i}(R^{a}) != R^{b}"))

    if any(v.axiom == "C1" for v in bad):
        return AxiomReport(bad, coxeter)

    for obj in G.objects:
        a = obj.id
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                m = sum(1 for v in obj.roots.positive_roots
                        if all(x == 0 for k, x in zip(range(r), v) if k not in (i - 1, j - 1)))
                coxeter[(a, i, j)] = m
                x = a
                for _ in range(m):
                    x = G.edges[(G.edges[(x, j)], i)]
                if x != a:
                    bad.append(Violation("R4", a, f"(rho_{i} rho_{j})^{m}({a}) = {x}"))
    return AxiomReport(bad, coxeter)


@dataclass(frozen=True)
class WeylPath:
    word: tuple[int, ...]
    objects: tuple[int, ...]
    matrix: IntMat

    def __len__(self):
        return len(self.word)


def weyl_path(G: CartanGraph, source: int, target: int) -> WeylPath:
    """Shortest reflection word from ``source`` to ``target``.

    ``matrix`` is the product of the simple reflection matrices along the word,
    taken in path order.  Its columns are the simple roots of ``target`` written
    in the coordinates of ``source``; the root set of ``target`` is its inverse
    applied to the root set of ``source``.
    """
    n = len(G.objects)
    if not (0 <= source < n and 0 <= target < n):
        raise WeylGroupoidError(f"object ids {source}, {target} not in graph")
    prev: dict[int, tuple[int, int]] = {source: (-1, 0)}
    queue = deque([source])
    while queue and target not in prev:
        a = queue.popleft()
        for i in range(1, G.rank + 1):
            b = G.edges[(a, i)]
            if b not in prev:
                prev[b] = (a, i)
                queue.append(b)
    if target not in prev:
        raise WeylGroupoidError(f"object {target} unreachable from {source}")
    word: list[int] = []
    path = [target]
    x = target
    while x != source:
        x, i = prev[x]
        word.append(i)
        path.append(x)
    word.reverse()
    path.reverse()
    m = identity(G.rank)
    for a, i in zip(path, word):
        m = mat_mul(m, reflection_matrix(G.objects[a].cartan, i))
    return WeylPath(tuple(word), tuple(path), m)


def coordinate_change(G: CartanGraph, source: int, target: int) -> IntMat:
    """Matrix turning root coordinates at ``source`` into coordinates at ``target``."""
    return mat_mul(mat_inv(G.objects[target].basis_matrix), G.objects[source].basis_matrix)


def canonical_classes(G: CartanGraph) -> tuple[list[str], list[int]]:
    """Distinct canonical forms in order of first appearance, and each object's class."""
    forms: list[str] = []
    index: dict[str, int] = {}
    by_roots: dict[frozenset, int] = {}
    cls = []
    for obj in G.objects:
        k = by_roots.get(obj.roots.positive_roots)
        if k is None:
            f = canonical_form(obj.roots)
            k = index.get(f)
            if k is None:
                k = index[f] = len(forms)
                forms.append(f)
            by_roots[obj.roots.positive_roots] = k
        cls.append(k)
    return forms, cls


def object_change_dot(G: CartanGraph, name: str = "objects") -> str:
    """DOT graph of canonical root-set classes joined by reflections that change the root set."""
    forms, cls = canonical_classes(G)
    sizes = [0] * len(forms)
    rep: list[int | None] = [None] * len(forms)
    for obj in G.objects:
        sizes[cls[obj.id]] += 1
        if rep[cls[obj.id]] is None:
            rep[cls[obj.id]] = obj.id
    links = set()
    for (a, i), b in G.edges.items():
        if G.objects[a].roots == G.objects[b].roots:
            continue
        u, v = sorted((cls[a], cls[b]))
        links.add((u, v, i))
    lines = [f"graph {name} {{"]
    for k in range(len(forms)):
        obj = G.objects[rep[k]]
        cartan = "\\n".join(" ".join(f"{x:2d}" for x in row) for row in obj.cartan)
        lines.append(f'  c{k} [label="class {k} ({sizes[k]} objects, {len(obj.roots)} roots)\\n{cartan}"];')
    for u, v, i in sorted(links):
        lines.append(f'  c{u} -- c{v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# the builtin is not used in this module
enumerate = enumerate_objects  # noqa: A001
