"""Positive root sets of a single Weyl-groupoid object.

Coordinates are always taken with respect to the object's own simple roots, so
the unit vectors are the simple roots.  Simple indices in the public API are
counted from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .errors import InvalidRootSet, NotCartanObject
from .exact import IntMat, IntVec, primitive, unit

CartanMatrix = IntMat


def root_order(v: Sequence[int]):
    """Sort key: by height, then simple roots e_1, e_2, ... first within a height."""
    return (sum(v), tuple(-x for x in v))


@dataclass(frozen=True)
class RootSet:
    rank: int
    positive_roots: frozenset[IntVec]

    def __init__(self, rank: int, positive_roots: Iterable[Sequence[int]]):
        roots = frozenset(tuple(int(x) for x in v) for v in positive_roots)
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "positive_roots", roots)
        self._validate()

    def _validate(self):
        r = self.rank
        if r < 1:
            raise InvalidRootSet("invalid root set: rank must be positive")
        for v in self.positive_roots:
            if len(v) != r:
                raise InvalidRootSet(f"invalid root set: {v} has wrong length")
            if any(x < 0 for x in v):
                raise InvalidRootSet(f"invalid root set: {v} is not positive")
            if not any(v):
                raise InvalidRootSet("invalid root set: zero vector")
        for i in range(r):
            if unit(r, i) not in self.positive_roots:
                raise InvalidRootSet(f"invalid root set: simple root e_{i + 1} missing")
        # no two roots on one line; positive multiples suffice since all roots are >= 0
        seen = set()
        for v in self.positive_roots:
            p, _ = primitive(v)
            if p in seen:
                raise InvalidRootSet(f"invalid root set: proportional roots on the line of {p}")
            seen.add(p)

    def __len__(self):
        return len(self.positive_roots)

    def __contains__(self, v):
        return tuple(v) in self.positive_roots

    def sorted(self) -> list[IntVec]:
        return sorted(self.positive_roots, key=root_order)

    def contains_signed(self, v: Sequence[int]) -> bool:
        """Membership in R = R_+ u -R_+."""
        v = tuple(v)
        return v in self.positive_roots or tuple(-x for x in v) in self.positive_roots

    def to_json(self) -> dict:
        return {"rank": self.rank, "positive_roots": [list(v) for v in self.sorted()]}

    @classmethod
    def from_json(cls, data: dict) -> "RootSet":
        return cls(data["rank"], data["positive_roots"])

    def __repr__(self):
        return f"RootSet(rank={self.rank}, positive_roots={self.sorted()})"


def _max_string(roots: frozenset, rank: int, i: int, j: int) -> int:
    ei = unit(rank, i)
    v = list(unit(rank, j))
    k = 0
    while True:
        v = [a + b for a, b in zip(v, ei)]
        if tuple(v) not in roots:
            return k
        k += 1


def cartan_from_roots(R: RootSet) -> CartanMatrix:
    """Generalized Cartan matrix ``c_ij = -max{k : k e_i + e_j in R_+}``."""
    r = R.rank
    c = [[2 if i == j else -_max_string(R.positive_roots, r, i, j) for j in range(r)]
         for i in range(r)]
    for i in range(r):
        for j in range(r):
            if i != j and (c[i][j] == 0) != (c[j][i] == 0):
                raise NotCartanObject(
                    f"not a Cartan-graph object: c[{i + 1}][{j + 1}]={c[i][j]} "
                    f"but c[{j + 1}][{i + 1}]={c[j][i]}")
    return tuple(tuple(row) for row in c)


def cartan_row(R: RootSet, i: int) -> IntVec:
    """Row ``i`` (1-based) of the Cartan matrix, without the full symmetry check."""
    i0 = i - 1
    return tuple(2 if j == i0 else -_max_string(R.positive_roots, R.rank, i0, j)
                 for j in range(R.rank))


def reflection_matrix(cartan: Sequence[Sequence[int]], i: int) -> IntMat:
    """Matrix of ``s_i(e_j) = e_j - c_ij e_i`` (``i`` 1-based)."""
    r = len(cartan)
    i0 = i - 1
    rows = []
    for a in range(r):
        if a == i0:
            rows.append(tuple((1 if j == i0 else 0) - cartan[i0][j] for j in range(r)))
        else:
            rows.append(unit(r, a))
    return tuple(rows)


def apply_reflection(crow: Sequence[int], i: int, v: Sequence[int]) -> IntVec:
    i0 = i - 1
    w = list(v)
    w[i0] = v[i0] - sum(c * x for c, x in zip(crow, v))
    return tuple(w)


def reflect_object(R: RootSet, i: int) -> RootSet:
    """Positive roots of the object reached by the simple reflection at ``i``."""
    if not 1 <= i <= R.rank:
        raise IndexError(f"simple index {i} out of range 1..{R.rank}")
    crow = cartan_row(R, i)
    ei = unit(R.rank, i - 1)
    out = [ei]
    for v in R.positive_roots:
        if v == ei:
            continue
        w = apply_reflection(crow, i, v)
        if any(x < 0 for x in w):
            raise NotCartanObject(
                f"not a Cartan-graph object: s_{i} sends {v} to non-positive {w}")
        out.append(w)
    return RootSet(R.rank, out)


def height(v: Sequence[int]) -> int:
    if any(x < 0 for x in v) or not any(v):
        raise ValueError("height is defined for nonzero nonnegative vectors")
    return sum(v)


def canonical_form(R: RootSet) -> str:
    """Lexicographically least serialization over all relabelings of the simple roots."""
    r = R.rank
    roots = list(R.positive_roots)
    best = None
    for p in permutations(range(r)):
        key = tuple(sorted(tuple(v[p[a]] for a in range(r)) for v in roots))
        if best is None or key < best:
            best = key
    body = ";".join(",".join(map(str, v)) for v in best)
    return f"{r}:{len(roots)}:{body}"
