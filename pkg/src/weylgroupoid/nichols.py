"""Diagonal braidings and Hilbert series of the associated Nichols algebras.

A braiding matrix stores each ``q_ij`` as a root of unity, i.e. an exponent in
Q/Z, so the bicharacter ``chi(u, w) = prod q_ab^(u_a w_b)`` is the bilinear form
``sum u_a E_ab w_b`` on exponents.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BraidingError, NotFinite
from .exact import IntVec, UnityRoot, from_columns, identity, mat_inv, mat_vec
from .restriction import restrict_parabolic
from .rootsys import CartanMatrix, RootSet, height


@dataclass(frozen=True)
class BraidingMatrix:
    q: tuple[tuple[UnityRoot, ...], ...]

    def __init__(self, q: Iterable[Iterable[UnityRoot | Fraction | int]]):
        rows = tuple(tuple(x if isinstance(x, UnityRoot) else UnityRoot(Fraction(x)) for x in row)
                     for row in q)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise BraidingError("braiding matrix must be square and nonempty")
        object.__setattr__(self, "q", rows)

    @classmethod
    def from_exponents(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> "BraidingMatrix":
        return cls([[UnityRoot(Fraction(x)) for x in row] for row in rows])

    @property
    def rank(self) -> int:
        return len(self.q)

    def exponents(self) -> list[list[Fraction]]:
        return [[x.exp for x in row] for row in self.q]

    def __getitem__(self, ij: tuple[int, int]) -> UnityRoot:
        """Entry ``q_ij`` with 1-based indices."""
        i, j = ij
        return self.q[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"rank": self.rank, "q": [[x.to_json() for x in row] for row in self.q]}

    @classmethod
    def from_json(cls, data: dict) -> "BraidingMatrix":
        m = cls([[UnityRoot.from_json(x) for x in row] for row in data["q"]])
        if m.rank != int(data.get("rank", m.rank)):
            raise BraidingError("rank does not match the matrix size")
        return m


def _chi(e: list[list[Fraction]], u: Sequence[int], w: Sequence[int]) -> UnityRoot:
    return UnityRoot(sum((u[a] * e[a][b] * w[b] for a in range(len(u)) for b in range(len(w))
                          if u[a] and w[b]), Fraction(0)))


def bicharacter(Q: BraidingMatrix, u: Sequence[int], w: Sequence[int]) -> UnityRoot:
    return _chi(Q.exponents(), u, w)


def selfbraiding(Q: BraidingMatrix, v: Sequence[int]) -> UnityRoot:
    """``chi(v, v)``."""
    return _chi(Q.exponents(), v, v)


def _cartan_entry(Q: BraidingMatrix, i: int, j: int) -> int:
    qii = Q.q[i][i]
    p = (Q.q[i][j] * Q.q[j][i]).exp
    bound = qii.order if not qii.is_one() else 1
    for m in range(bound):
        if not qii.is_one() and (m + 1) % qii.order == 0:
            return -m
        if (m * qii.exp + p) % 1 == 0:
            return -m
    raise BraidingError(f"not of finite Cartan type at ({i + 1},{j + 1})")


def cartan_from_braiding(Q: BraidingMatrix) -> CartanMatrix:
    """Cartan matrix ``c_ij = -min{m : (m+1)_{q_ii} = 0 or q_ii^m q_ij q_ji = 1}``."""
    r = Q.rank
    return tuple(tuple(2 if i == j else _cartan_entry(Q, i, j) for j in range(r)) for i in range(r))


def _congruence(Q: BraidingMatrix, basis: Sequence[Sequence[int]]) -> BraidingMatrix:
    # entries chi(b_j, b_k) for the columns b_j
    e = Q.exponents()
    return BraidingMatrix([[_chi(e, bj, bk) for bk in basis] for bj in basis])


def reflect_braiding(Q: BraidingMatrix, i: int) -> BraidingMatrix:
    """Braiding after the reflection at ``i`` (1-based): ``q'_jk = chi(s_i e_j, s_i e_k)``."""
    r = Q.rank
    if not 1 <= i <= r:
        raise IndexError(f"simple index {i} out of range 1..{r}")
    i0 = i - 1
    row = [2 if j == i0 else _cartan_entry(Q, i0, j) for j in range(r)]
    images = []
    for j in range(r):
        v = [0] * r
        if j == i0:
            v[i0] = -1
        else:
            v[j] = 1
            v[i0] = -row[j]
        images.append(tuple(v))
    return _congruence(Q, images)


def braiding_at(Q: BraidingMatrix, basis: Sequence[Sequence[int]]) -> BraidingMatrix:
    """Braiding at the chamber whose simple roots are ``basis`` (seed coordinates)."""
    return _congruence(Q, basis)


@dataclass(frozen=True)
class HilbertSeries:
    factors: tuple[tuple[int, int], ...]  # (n, h) meaning 1 + t^h + ... + t^(h(n-1)), sorted

    def __init__(self, factors: Iterable[Sequence[int]] = ()):
        fs = []
        for f in factors:
            n, h = int(f[0]), int(f[1])
            if n < 1 or h < 1:
                raise BraidingError(f"bad Hilbert series factor ({n},{h})")
            fs.append((n, h))
        fs.sort(key=lambda f: (f[1], f[0]))
        object.__setattr__(self, "factors", tuple(fs))

    @property
    def dimension(self) -> int:
        d = 1
        for n, _ in self.factors:
            d *= n
        return d

    def expansion(self) -> list[int]:
        """Coefficients of the polynomial, constant term first."""
        poly = [1]
        for n, h in self.factors:
            out = [0] * (len(poly) + h * (n - 1))
            for a, c in enumerate(poly):
                if c:
                    for k in range(n):
                        out[a + k * h] += c
            poly = out
        return poly

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(self.factors + other.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for (n, h), c in Counter(self.factors).items():
            t = "t" if h == 1 else f"{{t^{h}}}"
            s = f"({n})_{t}"
            if c > 1:
                s += f"^{c}"
            parts.append(s)
        return "".join(parts)

    def to_json(self) -> dict:
        return {"factors": [[n, h] for n, h in self.factors], "dimension": str(self.dimension),
                "pretty": str(self)}


def dimension(H: HilbertSeries) -> int:
    return H.dimension


def _factor(Q: BraidingMatrix, beta: Sequence[int], h: int) -> tuple[int, int]:
    q = selfbraiding(Q, beta)
    if q.is_one():
        raise BraidingError(f"infinite-dimensional root direction {tuple(beta)}")
    return q.order, h


def hilbert_full(Q: BraidingMatrix, R: RootSet) -> HilbertSeries:
    """Product of ``(ord chi(b,b))_{t^ht(b)}`` over the positive roots ``b``."""
    if Q.rank != R.rank:
        raise BraidingError("braiding and root set have different ranks")
    return HilbertSeries(_factor(Q, b, height(b)) for b in R.sorted())


def hilbert_restricted(Q: BraidingMatrix, R: RootSet,
                       J: Iterable[int]) -> tuple[HilbertSeries, HilbertSeries]:
    """Series of the localized algebra and of the restricted algebra at ``J``.

    A root sent to ``k`` times a restricted root of height ``h`` is graded in
    degree ``k h``.
    """
    if Q.rank != R.rank:
        raise BraidingError("braiding and root set have different ranks")
    rep = restrict_parabolic(R, J)
    loc = [_factor(Q, b, height(b)) for b, img in rep.fibers if img is None]
    res = [_factor(Q, b, img[1] * height(img[0])) for b, img in rep.fibers if img is not None]
    return HilbertSeries(loc), HilbertSeries(res)


@dataclass(frozen=True)
class BraidedObject:
    id: int
    braiding: BraidingMatrix
    cartan: CartanMatrix
    roots: RootSet


@dataclass
class BraidedGraph:
    """Distinct braidings reachable by reflections, with their root sets."""

    rank: int
    objects: list[BraidedObject]
    edges: dict[tuple[int, int], int]
    chambers: int  # number of chambers of the underlying arrangement

    def __len__(self):
        return len(self.objects)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "chambers": self.chambers,
            "objects": [{"id": o.id, "braiding": o.braiding.to_json(),
                         "cartan": [list(r) for r in o.cartan],
                         "positive_roots": [list(v) for v in o.roots.sorted()]}
                        for o in self.objects],
            "edges": [[a, i, b] for (a, i), b in sorted(self.edges.items())],
        }


def _reflect_cols(basis: tuple[IntVec, ...], crow: Sequence[int], i0: int) -> tuple[IntVec, ...]:
    ai = basis[i0]
    out = []
    for j in range(len(basis)):
        if j == i0:
            out.append(tuple(-x for x in ai))
        else:
            out.append(tuple(y - crow[j] * x for x, y in zip(ai, basis[j])))
    return tuple(out)


def chambers_of_braiding(Q: BraidingMatrix, max_objects: int = 100_000):
    """Chambers (simple roots in seed coordinates) reachable from the seed, with braidings.

    Returns the list of ``(basis, braiding)`` and the chamber adjacency.
    """
    r = Q.rank
    start = tuple(identity(r))
    chambers = [(start, Q)]
    index = {frozenset(start): 0}
    adj: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        basis, q = chambers[a]
        c = cartan_from_braiding(q)
        for i0 in range(r):
            nb = _reflect_cols(basis, c[i0], i0)
            key = frozenset(nb)
            b = index.get(key)
            if b is None:
                if len(chambers) >= max_objects:
                    raise NotFinite(f"not finite within bound: more than {max_objects} chambers")
                b = len(chambers)
                index[key] = b
                chambers.append((nb, braiding_at(Q, nb)))
                queue.append(b)
            adj[(a, i0 + 1)] = b
    return chambers, adj


def roots_of_braiding(Q: BraidingMatrix, max_objects: int = 100_000) -> RootSet:
    """Positive roots at the seed object: the simple roots of all chambers, up to sign."""
    chambers, _ = chambers_of_braiding(Q, max_objects)
    return _roots_from_chambers(Q.rank, chambers, tuple(identity(Q.rank)))


def _roots_from_chambers(r: int, chambers, basis) -> RootSet:
    inv = mat_inv(from_columns(basis))
    roots = set()
    for b, _ in chambers:
        for v in b:
            w = mat_vec(inv, v)
            if all(x <= 0 for x in w):
                w = tuple(-x for x in w)
            roots.add(w)
    return RootSet(r, roots)


def enumerate_braided(Q: BraidingMatrix, max_objects: int = 100_000) -> BraidedGraph:
    """Objects reachable from ``Q`` by reflections, identified by equal braiding matrices."""
    chambers, adj = chambers_of_braiding(Q, max_objects)
    r = Q.rank
    ids: dict[BraidingMatrix, int] = {}
    chamber_obj = []
    objects: list[BraidedObject] = []
    for basis, q in chambers:
        k = ids.get(q)
        if k is None:
            k = ids[q] = len(objects)
            objects.append(BraidedObject(k, q, cartan_from_braiding(q),
                                         _roots_from_chambers(r, chambers, basis)))
        chamber_obj.append(k)
    edges = {}
    for (a, i), b in adj.items():
        edges[(chamber_obj[a], i)] = chamber_obj[b]
    return BraidedGraph(r, objects, edges, len(chambers))
