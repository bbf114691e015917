"""Parabolic, permutation and folding restrictions of root sets.

Restricted roots are bookkept as ``(primitive root, k)`` so that a vector
``k * p`` landing on the line of ``p`` is kept apart from ``p`` itself; the
value is the number of original roots with that image (the multiplicity).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

from .errors import AutomorphismError, RestrictionError, WeylGroupoidError
from .exact import (
    IntMat,
    IntVec,
    from_columns,
    identity,
    is_unimodular,
    mat_inv,
    mat_mul,
    mat_vec,
    permutation_matrix,
    permutation_of,
    primitive,
    unit,
)
from .groupoid import CartanGraph, _reflect_basis, weyl_path
from .rootsys import RootSet, cartan_from_roots, reflect_object, root_order

Key = tuple[IntVec, int]


@dataclass(frozen=True)
class RootMultiset:
    rank: int
    entries: tuple[tuple[IntVec, int, int], ...]  # (primitive root, k, multiplicity), sorted

    def __init__(self, rank: int, entries: Mapping[Key, int] | Iterable[tuple[IntVec, int, int]]):
        if isinstance(entries, Mapping):
            items = [(tuple(p), int(k), int(m)) for (p, k), m in entries.items()]
        else:
            items = [(tuple(p), int(k), int(m)) for p, k, m in entries]
        merged: Counter = Counter()
        for p, k, m in items:
            merged[(p, k)] += m
        norm = []
        for (p, k), m in merged.items():
            if len(p) != rank or m <= 0 or k <= 0:
                raise RestrictionError(f"bad multiset entry {(p, k, m)}")
            q, g = primitive(p)
            if g != 1 or any(x < 0 for x in p):
                raise RestrictionError(f"multiset key {p} is not a positive primitive vector")
            norm.append((p, k, m))
        norm.sort(key=lambda e: (root_order(e[0]), e[1]))
        keys = {(p, k) for p, k, _ in norm}
        for p, k, _ in norm:
            if k > 1 and (p, 1) not in keys:
                raise RestrictionError(f"multiple {k}*{p} present without {p}")
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "entries", tuple(norm))

    @classmethod
    def from_rootset(cls, R: RootSet) -> "RootMultiset":
        return cls(R.rank, {(v, 1): 1 for v in R.positive_roots})

    def as_dict(self) -> dict[Key, int]:
        return {(p, k): m for p, k, m in self.entries}

    def vectors(self) -> list[tuple[IntVec, int]]:
        """Pairs ``(k * p, multiplicity)``."""
        return [(tuple(k * x for x in p), m) for p, k, m in self.entries]

    @property
    def reduced_flag(self) -> bool:
        return all(k == 1 for _, k, _ in self.entries)

    @property
    def total(self) -> int:
        return sum(m for _, _, m in self.entries)

    def multiplicity(self, root: Sequence[int], k: int = 1) -> int:
        return self.as_dict().get((tuple(root), k), 0)

    def hyperplane_multiplicities(self) -> dict[IntVec, int]:
        """Multiplicity of each restricted hyperplane, summed over all multiples k."""
        out: Counter = Counter()
        for p, _, m in self.entries:
            out[p] += m
        return dict(out)

    def reduced_roots(self) -> RootSet:
        return RootSet(self.rank, {p for p, _, _ in self.entries})

    def canonical_form(self) -> str:
        """Least serialization of the entries over all coordinate relabelings."""
        r = self.rank
        best = None
        for perm in permutations(range(r)):
            key = tuple(sorted((tuple(p[perm[a]] for a in range(r)), k, m)
                               for p, k, m in self.entries))
            if best is None or key < best:
                best = key
        return f"{r}:" + ";".join(f"{','.join(map(str, p))}x{k}m{m}" for p, k, m in best)

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "reduced": self.reduced_flag,
                "entries": [{"root": list(p), "k": k, "mult": m} for p, k, m in self.entries],
                "hyperplanes": [{"root": list(p), "mult": m}
                                for p, m in self.hyperplane_multiplicities().items()]}

    @classmethod
    def from_json(cls, data: dict) -> "RootMultiset":
        return cls(data["rank"], [(tuple(e["root"]), e["k"], e["mult"]) for e in data["entries"]])


@dataclass(frozen=True)
class RestrictionReport:
    multiset: RootMultiset
    localized: tuple[IntVec, ...]
    fibers: tuple[tuple[IntVec, Key | None], ...]  # original root -> image, None if localized
    crystallographic: bool | None = None

    def reduced_roots(self) -> RootSet:
        return self.multiset.reduced_roots()

    def to_json(self) -> dict:
        out = self.multiset.to_json()
        out["localized"] = [list(v) for v in self.localized]
        out["fibers"] = [
            {"root": list(v), "localized": True} if img is None
            else {"root": list(v), "image": list(img[0]), "k": img[1]}
            for v, img in self.fibers
        ]
        if self.crystallographic is not None:
            out["crystallographic"] = self.crystallographic
        return out


RootsLike = Union[RootSet, RootMultiset]


def _items(R: RootsLike) -> list[tuple[IntVec, int]]:
    if isinstance(R, RootSet):
        return [(v, 1) for v in R.sorted()]
    return R.vectors()


def _index_set(J: Iterable[int], rank: int) -> tuple[int, ...]:
    J = tuple(sorted(set(int(j) for j in J)))
    if any(not 1 <= j <= rank for j in J):
        raise RestrictionError(f"simple indices {J} out of range 1..{rank}")
    return J


def restrict_parabolic(R: RootsLike, J: Iterable[int]) -> RestrictionReport:
    """Restrict to the intersection of the walls of the simple roots in ``J``.

    Each root outside the span of ``J`` loses its ``J`` coordinates and is
    reduced to the shortest lattice vector on its line; roots inside the span
    vanish and are reported as localized.
    """
    r = R.rank
    J = _index_set(J, r)
    if len(J) == r:
        raise RestrictionError("restriction to origin")
    drop = {j - 1 for j in J}
    keep = [a for a in range(r) if a not in drop]
    counts: Counter = Counter()
    localized: list[IntVec] = []
    fibers: list[tuple[IntVec, Key | None]] = []
    for v, m in _items(R):
        w = tuple(v[a] for a in keep)
        if not any(w):
            localized.extend([v] * m)
            fibers.append((v, None))
            continue
        key = primitive(w)
        counts[key] += m
        fibers.append((v, key))
    return RestrictionReport(RootMultiset(len(keep), counts), tuple(localized), tuple(fibers))


def _normalize_sigma(sigma: Sequence[int] | Mapping[int, int], rank: int) -> dict[int, int]:
    if isinstance(sigma, Mapping):
        s = {int(i): int(j) for i, j in sigma.items()}
        for i in range(1, rank + 1):
            s.setdefault(i, i)
    else:
        if len(sigma) != rank:
            raise RestrictionError(f"permutation of length {len(sigma)} for rank {rank}")
        s = {i + 1: int(j) for i, j in zip(range(rank), sigma)}
    if sorted(s) != list(range(1, rank + 1)) or sorted(s.values()) != list(range(1, rank + 1)):
        raise RestrictionError(f"{sigma} is not a permutation of 1..{rank}")
    return s


def _permute(v: Sequence[int], s: Mapping[int, int]) -> IntVec:
    out = [0] * len(v)
    for i, x in zip(range(1, len(v) + 1), v):
        out[s[i] - 1] = x
    return tuple(out)


def orbits(s: Mapping[int, int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for i in sorted(s):
        if i in seen:
            continue
        orb = []
        j = i
        while j not in seen:
            seen.add(j)
            orb.append(j)
            j = s[j]
        out.append(tuple(sorted(orb)))
    return out


def restrict_permutation(R: RootsLike, sigma: Sequence[int] | Mapping[int, int]) -> RestrictionReport:
    """Restrict to the fixed space of a permutation of the simple roots.

    ``sigma`` lists the image of each simple index (1-based), or maps indices
    to images.  Restricted simple roots are the orbits of ``sigma``; a root's
    coordinate on an orbit is the sum of its coordinates over that orbit.
    """
    r = R.rank
    s = _normalize_sigma(sigma, r)
    if isinstance(R, RootSet):
        for v in R.sorted():
            if _permute(v, s) not in R.positive_roots:
                raise AutomorphismError(f"permutation is not an automorphism: witness root {v}")
    else:
        keys = R.as_dict()
        for (p, k) in keys:
            if (_permute(p, s), k) not in keys:
                raise AutomorphismError(f"permutation does not preserve the key {(p, k)}")
    orbs = orbits(s)
    counts: Counter = Counter()
    fibers = []
    for v, m in _items(R):
        w = tuple(sum(v[i - 1] for i in orb) for orb in orbs)
        key = primitive(w)
        counts[key] += m
        fibers.append((v, key))
    return RestrictionReport(RootMultiset(len(orbs), counts), (), tuple(fibers))


@dataclass(frozen=True)
class AutomorphismCheck:
    ok: bool
    witness: IntVec | None = None

    def __bool__(self):
        return self.ok


def _as_matrix(g: Sequence[Sequence[int]], rank: int) -> IntMat:
    g = tuple(tuple(int(x) for x in row) for row in g)
    if len(g) != rank or any(len(row) != rank for row in g):
        raise AutomorphismError(f"matrix shape does not match rank {rank}")
    if not is_unimodular(g):
        raise AutomorphismError("matrix is not invertible over the integers")
    return g


def validate_automorphism(R: RootSet, g: Sequence[Sequence[int]]) -> AutomorphismCheck:
    """Whether ``g`` (columns = images of the simple roots) maps R onto itself."""
    g = _as_matrix(g, R.rank)
    for v in R.sorted():
        if not R.contains_signed(mat_vec(g, v)):
            return AutomorphismCheck(False, v)
    return AutomorphismCheck(True)


@dataclass(frozen=True)
class FoldingDecomposition:
    word: tuple[int, ...]  # reflections leading from the input chamber to the found one
    basis: tuple[IntVec, ...]  # simple roots of the found chamber in input coordinates
    roots: RootSet  # root set at the found chamber
    g_local: IntMat  # g in the coordinates of the found chamber
    negated: int  # |g R_+ n -R_+| at the found chamber
    delta1: tuple[int, ...]
    sigma: dict[int, int]  # permutation of the remaining simple indices
    object_id: int | None = None


def _negated_count(roots: RootSet, g: IntMat) -> int:
    return sum(1 for v in roots.positive_roots if all(x <= 0 for x in mat_vec(g, v)))


def folding_decompose(R: RootSet, g: Sequence[Sequence[int]],
                      graph: CartanGraph | None = None) -> FoldingDecomposition:
    """Split the folding by an involution into a parabolic and a permutation step.

    Walks from the input chamber to a chamber where ``g`` negates as few
    positive roots as possible, always crossing a simple wall whose root is
    sent to a different negative root.  There ``delta1`` collects the simple
    roots negated by ``g``; the others are permuted modulo ``delta1``.
    """
    r = R.rank
    g = _as_matrix(g, r)
    if mat_mul(g, g) != identity(r):
        raise AutomorphismError("folding lemma requires involution")
    check = validate_automorphism(R, g)
    if not check:
        raise AutomorphismError(f"matrix is not an automorphism: witness root {check.witness}")

    roots = R
    basis = tuple(identity(r))
    word: list[int] = []
    while True:
        b = from_columns(basis)
        gl = mat_mul(mat_mul(mat_inv(b), g), b)
        step = None
        for i in range(1, r + 1):
            w = tuple(row[i - 1] for row in gl)
            if all(x <= 0 for x in w) and w != tuple(-x for x in unit(r, i - 1)):
                step = i
                break
        if step is None:
            break
        basis = _reflect_basis(basis, cartan_from_roots(roots), step)
        roots = reflect_object(roots, step)
        word.append(step)

    delta1 = []
    images = {}
    for i in range(1, r + 1):
        w = tuple(row[i - 1] for row in gl)
        if w == tuple(-x for x in unit(r, i - 1)):
            delta1.append(i)
        else:
            images[i] = w
    sigma = {}
    for i, w in images.items():
        rest = [(j, w[j - 1]) for j in range(1, r + 1) if j not in delta1]
        hits = [j for j, x in rest if x != 0]
        if any(x < 0 for x in w) or len(hits) != 1 or w[hits[0] - 1] != 1:
            raise AutomorphismError(f"g e_{i} = {w} is not a simple root modulo the negated ones")
        sigma[i] = hits[0]
    if sorted(sigma.values()) != sorted(sigma):
        raise AutomorphismError("induced map on the remaining simple roots is not a permutation")

    object_id = graph.object_with_simple_roots(basis) if graph is not None else None
    return FoldingDecomposition(tuple(word), basis, roots, gl, _negated_count(roots, gl),
                                tuple(delta1), sigma, object_id)


def _is_crystallographic(R: RootSet, max_objects: int = 10_000) -> bool:
    from .groupoid import enumerate_objects, verify_axioms
    try:
        return verify_axioms(enumerate_objects(R, max_objects)).ok
    except WeylGroupoidError:
        return False


def restrict_folding(R: RootSet, g: Sequence[Sequence[int]]) -> RestrictionReport:
    """Restriction to the fixed space of an involutive automorphism ``g``."""
    dec = folding_decompose(R, g)
    r = R.rank
    first = restrict_parabolic(dec.roots, dec.delta1)
    rest = [i for i in range(1, r + 1) if i not in dec.delta1]
    pos = {i: n + 1 for n, i in zip(range(len(rest)), rest)}
    sigma = {pos[i]: pos[j] for i, j in dec.sigma.items()}
    second = restrict_permutation(first.multiset, sigma)

    orbs = orbits(_normalize_sigma(sigma, len(rest)))
    b_inv = mat_inv(from_columns(dec.basis))
    fibers = []
    localized = []
    for v in R.sorted():
        c = mat_vec(b_inv, v)
        if all(x <= 0 for x in c):
            c = tuple(-x for x in c)
        w = tuple(c[i - 1] for i in rest)
        if not any(w):
            fibers.append((v, None))
            localized.append(v)
            continue
        fibers.append((v, primitive(tuple(sum(w[i - 1] for i in orb) for orb in orbs))))
    cryst = _is_crystallographic(second.multiset.reduced_roots())
    return RestrictionReport(second.multiset, tuple(localized), tuple(fibers), cryst)


def _in_span(v: Sequence[int], J: set[int]) -> bool:
    return all(x == 0 for i, x in zip(range(1, len(v) + 1), v) if i not in J)


def longest_element(R: RootSet, J: Iterable[int]) -> tuple[tuple[int, ...], tuple[IntVec, ...]]:
    """Word and target chamber of the longest element of the parabolic on ``J``.

    Returns the reflection word and the simple roots of the chamber reached, in
    the coordinates of ``R``.
    """
    J = set(_index_set(J, R.rank))
    roots = R
    basis = tuple(identity(R.rank))
    word = []
    while True:
        step = next((i for i in sorted(J)
                     if _in_span(basis[i - 1], J) and all(x >= 0 for x in basis[i - 1])), None)
        if step is None:
            return tuple(word), basis
        basis = _reflect_basis(basis, cartan_from_roots(roots), step)
        roots = reflect_object(roots, step)
        word.append(step)


def parabolic_equals_folding(R: RootSet, J: Iterable[int]) -> IntMat | None:
    """An automorphism whose folding equals the parabolic restriction to ``J``, if there is one.

    Tests whether the diagram automorphism ``-w_J`` of the parabolic, extended
    by the identity on the other simple roots, preserves R; if so returns
    ``g = w_J f``, which negates the span of ``J`` and fixes the other simple
    roots modulo that span.
    """
    r = R.rank
    J = set(_index_set(J, r))
    if len(J) == r:
        raise RestrictionError("J must be a proper subset of the simple indices")
    _, basis = longest_element(R, J)
    m = from_columns(basis)
    # f sends e_p to e_j where w_J(e_p) = -e_j
    perm = list(range(r))
    for j in J:
        target = tuple(-x for x in unit(r, j - 1))
        hits = [p for p in J if basis[p - 1] == target]
        if len(hits) != 1:
            return None
        perm[hits[0] - 1] = j - 1
    f = permutation_matrix(perm)
    if not validate_automorphism(R, f):
        return None
    g = mat_mul(m, f)
    if any(tuple(row[j - 1] for row in g) != tuple(-x for x in unit(r, j - 1)) for j in J):
        return None
    return g


@dataclass(frozen=True)
class Factorization:
    word: tuple[int, ...]
    target: int
    w_matrix: IntMat
    f: IntMat
    permutation: tuple[int, ...]  # 1-based images of the simple indices under f


def factor_automorphism(G: CartanGraph, g: Sequence[Sequence[int]], K: int = 0) -> Factorization:
    """Write ``g`` (in the coordinates of object ``K``) as a groupoid element times a permutation."""
    obj = G.objects[K]
    g = _as_matrix(g, G.rank)
    check = validate_automorphism(obj.roots, g)
    if not check:
        raise AutomorphismError(f"matrix is not an automorphism: witness root {check.witness}")
    images = [obj.to_ambient(col) for col in zip(*g)]
    target = G.object_with_simple_roots(images)
    if target is None:
        raise AutomorphismError("image chamber not found in the graph")
    path = weyl_path(G, K, target)
    f = mat_mul(mat_inv(path.matrix), g)
    perm = permutation_of(f)
    if perm is None:
        raise AutomorphismError("w^-1 g is not a permutation matrix")
    return Factorization(path.word, target, path.matrix, f, tuple(p + 1 for p in perm))
