"""Exact arithmetic: roots of unity as elements of Q/Z, integer vectors and matrices.

Vectors are plain tuples of ints, matrices are tuples of row tuples.  Python
ints are arbitrary precision, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import WeylGroupoidError

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]


@dataclass(frozen=True, order=True)
class UnityRoot:
    """The root of unity ``exp(2 pi i * exp)``, stored by its exponent in [0, 1)."""

    exp: Fraction

    def __post_init__(self):
        e = Fraction(self.exp) % 1
        object.__setattr__(self, "exp", e)

    @classmethod
    def of(cls, num: int, den: int = 1) -> "UnityRoot":
        return cls(Fraction(num, den))

    @property
    def order(self) -> int:
        return self.exp.denominator

    def is_one(self) -> bool:
        return self.exp == 0

    def __mul__(self, other: "UnityRoot") -> "UnityRoot":
        return UnityRoot(self.exp + other.exp)

    def __pow__(self, n: int) -> "UnityRoot":
        return UnityRoot(self.exp * n)

    def inverse(self) -> "UnityRoot":
        return UnityRoot(-self.exp)

    def to_json(self) -> dict:
        return {"num": self.exp.numerator, "den": self.exp.denominator}

    @classmethod
    def from_json(cls, data: dict) -> "UnityRoot":
        return cls(Fraction(int(data["num"]), int(data["den"])))

    def __repr__(self):
        return f"UnityRoot({self.exp.numerator}/{self.exp.denominator})"


ONE = UnityRoot(Fraction(0))


def ord(q: UnityRoot) -> int:  # noqa: A001 - mirrors the usual notation
    """Multiplicative order of ``q``."""
    return q.order


def primitive(v: Sequence[int]) -> tuple[IntVec, int]:
    """Split ``v`` as ``k * w`` with ``w`` primitive and ``k`` the gcd of the coordinates."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise WeylGroupoidError("zero functional")
    return tuple(x // g for x in v), g


def unit(rank: int, i: int) -> IntVec:
    """Unit vector e_i, with ``i`` counted from 0."""
    return tuple(1 if j == i else 0 for j in range(rank))


def vec_add(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def vec_neg(v: Sequence[int]) -> IntVec:
    return tuple(-a for a in v)


def vec_scale(k: int, v: Sequence[int]) -> IntVec:
    return tuple(k * a for a in v)


def identity(n: int) -> IntMat:
    return tuple(unit(n, i) for i in range(n))


def transpose(m: Sequence[Sequence[int]]) -> IntMat:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> IntVec:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMat:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def columns(m: Sequence[Sequence[int]]) -> list[IntVec]:
    return list(transpose(m))


def from_columns(cols: Iterable[Sequence[int]]) -> IntMat:
    return transpose(tuple(tuple(c) for c in cols))


def as_intmat(rows: Iterable[Iterable[int]]) -> IntMat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _rref_inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]] | None:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def is_unimodular(m: Sequence[Sequence[int]]) -> bool:
    inv = _rref_inverse(m)
    return inv is not None and all(x.denominator == 1 for row in inv for x in row)


def mat_inv(m: Sequence[Sequence[int]]) -> IntMat:
    """Inverse of an integer matrix; raises unless the inverse is integral."""
    if any(len(row) != len(m) for row in m):
        raise WeylGroupoidError("matrix is not square")
    inv = _rref_inverse(m)
    if inv is None or any(x.denominator != 1 for row in inv for x in row):
        raise WeylGroupoidError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in inv)


def permutation_of(m: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Return ``p`` with ``m e_j = e_{p[j]}`` if ``m`` is a permutation matrix, else None."""
    perm = []
    for col in columns(m):
        if sorted(col) != [0] * (len(col) - 1) + [1]:
            return None
        perm.append(col.index(1))
    if sorted(perm) != list(range(len(perm))):
        return None
    return tuple(perm)


def permutation_matrix(perm: Sequence[int]) -> IntMat:
    """Matrix sending e_j to e_{perm[j]}."""
    n = len(perm)
    return from_columns(unit(n, perm[j]) for j in range(n))
