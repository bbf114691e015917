"""The simplicial complex of an arrangement, with Nichols-algebra decorations.

A pair ``(object a, J)`` names the face of chamber ``a`` cut out by the walls
of the simple roots in ``J``.  Two pairs name the same face iff they make the
same roots positive on it, so faces are keyed by the set of those roots in
seed coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import BraidingError, RestrictionError
from .exact import IntVec
from .groupoid import CartanGraph
from .nichols import BraidingMatrix, HilbertSeries, braiding_at, cartan_from_braiding, hilbert_restricted
from .restriction import RestrictionReport, restrict_parabolic

Pair = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class Cell:
    dimension: int
    representative: Pair
    members: tuple[Pair, ...]

    def to_json(self) -> dict:
        a, J = self.representative
        return {"dimension": self.dimension, "object": a, "J": list(J),
                "members": [[b, list(K)] for b, K in self.members]}


@dataclass
class Complex:
    rank: int
    cells: dict[int, list[Cell]] = field(default_factory=dict)

    def counts(self) -> dict[int, int]:
        return {d: len(cs) for d, cs in sorted(self.cells.items())}

    def all_cells(self) -> list[Cell]:
        return [c for d in sorted(self.cells, reverse=True) for c in self.cells[d]]

    def cell_of(self, a: int, J: Iterable[int]) -> Cell:
        key = (a, tuple(sorted(J)))
        for c in self.all_cells():
            if key in c.members:
                return c
        raise KeyError(key)

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "counts": {str(d): n for d, n in self.counts().items()},
                "cells": [c.to_json() for c in self.all_cells()]}


def _face_key(G: CartanGraph, a: int, J: tuple[int, ...]) -> frozenset[IntVec]:
    obj = G.objects[a]
    Js = {j - 1 for j in J}
    return frozenset(obj.to_ambient(v) for v in obj.roots.positive_roots
                     if any(x for i, x in zip(range(G.rank), v) if i not in Js))


def build_complex(G: CartanGraph, include_minus_one: bool = False) -> Complex:
    """Faces of all chambers, identified across chambers, grouped by dimension ``rank - |J| - 1``."""
    r = G.rank
    groups: dict[frozenset, list[Pair]] = {}
    for size in range(r + (1 if include_minus_one else 0)):
        for J in combinations(range(1, r + 1), size):
            for obj in G.objects:
                groups.setdefault(_face_key(G, obj.id, J), []).append((obj.id, J))
    cx = Complex(r)
    for members in groups.values():
        members.sort()
        cell = Cell(r - len(members[0][1]) - 1, members[0], tuple(members))
        cx.cells.setdefault(cell.dimension, []).append(cell)
    for d in cx.cells:
        cx.cells[d].sort(key=lambda c: c.representative)
    return cx


def euler_characteristic(cx: Complex) -> int:
    """Alternating count of cells of nonnegative dimension."""
    return sum((-1) ** d * len(cs) for d, cs in cx.cells.items() if d >= 0)


@dataclass(frozen=True)
class CellDecoration:
    localization_roots: tuple[IntVec, ...]
    restriction: RestrictionReport | None
    hilbert_localized: HilbertSeries | None = None
    hilbert_restricted: HilbertSeries | None = None

    def to_json(self) -> dict:
        out = {"localization_roots": [list(v) for v in self.localization_roots],
               "restriction": self.restriction.multiset.to_json() if self.restriction else None}
        if self.hilbert_localized is not None:
            out["hilbert_localized"] = self.hilbert_localized.to_json()
            out["hilbert_restricted"] = self.hilbert_restricted.to_json()
        return out


def braiding_on(G: CartanGraph, Q: BraidingMatrix, a: int) -> BraidingMatrix:
    """Braiding at object ``a`` for a braiding ``Q`` given at the seed."""
    if Q.rank != G.rank:
        raise BraidingError("braiding and graph have different ranks")
    Qa = braiding_at(Q, G.objects[a].basis)
    if cartan_from_braiding(Qa) != G.objects[a].cartan:
        raise BraidingError(f"braiding is incompatible with the Cartan matrix of object {a}")
    return Qa


def decorate(G: CartanGraph, cell: Cell, Q: BraidingMatrix | None = None) -> CellDecoration:
    """Localization, restriction and (given a braiding at the seed) Hilbert series of a cell.

    Raises if two members of the cell give restrictions that differ beyond a
    relabeling of the simple roots.
    """
    a, J = cell.representative
    if len(J) == G.rank:
        return CellDecoration(tuple(G.objects[a].roots.sorted()), None)
    rep = restrict_parabolic(G.objects[a].roots, J)
    form = rep.multiset.canonical_form()
    for b, K in cell.members[1:]:
        if restrict_parabolic(G.objects[b].roots, K).multiset.canonical_form() != form:
            raise RestrictionError(f"decoration differs between {(a, J)} and {(b, K)}")
    if Q is None:
        return CellDecoration(rep.localized, rep)
    loc, res = hilbert_restricted(braiding_on(G, Q, a), G.objects[a].roots, J)
    return CellDecoration(rep.localized, rep, loc, res)


def decorated_json(G: CartanGraph, cx: Complex, Q: BraidingMatrix | None = None) -> dict:
    out = cx.to_json()
    out["euler_characteristic"] = euler_characteristic(cx)
    for entry, cell in zip(out["cells"], cx.all_cells()):
        entry["decoration"] = decorate(G, cell, Q).to_json()
    return out


def cell_label(cell: Cell, deco: CellDecoration | None = None) -> str:
    a, J = cell.representative
    label = f"dim {cell.dimension}: object {a}, J={{{','.join(map(str, J))}}}"
    if deco is not None and deco.hilbert_restricted is not None:
        label += f"\\n{deco.hilbert_restricted}"
    return label


def complex_dot(cx: Complex, decorations: dict[Pair, CellDecoration] | None = None,
                name: str = "complex") -> str:
    """DOT graph of face incidences between consecutive dimensions."""
    index = {}
    lines = [f"graph {name} {{"]
    for n, cell in zip(range(len(cx.all_cells())), cx.all_cells()):
        deco = decorations.get(cell.representative) if decorations else None
        lines.append(f'  x{n} [label="{cell_label(cell, deco)}"];')
        for m in cell.members:
            index[m] = n
    links = set()
    for m, n in index.items():
        a, J = m
        for i in range(1, cx.rank + 1):
            if i not in J:
                K = tuple(sorted(J + (i,)))
                if (a, K) in index:
                    links.add((n, index[(a, K)]))
    for u, v in sorted(links):
        lines.append(f"  x{u} -- x{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
