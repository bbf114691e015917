"""Classical root systems, example braidings and restriction surveys.

Simple roots use Bourbaki numbering:

* A_n: chain 1-2-...-n.
* B_n: chain with node n short.  C_n: chain with node n long.
* D_n: chain 1-...-(n-1) plus the edge (n-2)-n.
* E_6, E_7, E_8: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
* F_4: chain 1-2-3-4 with nodes 1, 2 long.  G_2: node 1 short.

Gram matrices are normalized so that short roots have squared length 2.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import NotFinite, WeylGroupoidError
from .exact import IntMat, unit
from .groupoid import enumerate_objects
from .nichols import BraidingMatrix
from .restriction import RootMultiset, restrict_parabolic
from .rootsys import RootSet, canonical_form

LIE_TYPES = ("A", "B", "C", "D", "E", "F", "G")


def _parse(type_: str, rank: int | None) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", str(type_))
    if not m:
        raise WeylGroupoidError(f"unknown root system type {type_!r}")
    t = m.group(1).upper()
    if m.group(2):
        n = int(m.group(2))
        if rank is not None and int(rank) != n:
            raise WeylGroupoidError(f"rank {rank} contradicts type {type_}")
    elif rank is None:
        raise WeylGroupoidError(f"type {type_} needs a rank")
    else:
        n = int(rank)
    ok = {"A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4,
          "E": n in (6, 7, 8), "F": n == 4, "G": n == 2}[t]
    if not ok:
        raise WeylGroupoidError(f"invalid rank {n} for type {t}")
    return t, n


def gram_matrix(type_: str, rank: int | None = None) -> IntMat:
    """Symmetrized Cartan matrix ``(alpha_i, alpha_j)`` with short roots of length 2."""
    t, n = _parse(type_, rank)
    g = [[0] * n for _ in range(n)]

    def edge(i, j, v):
        g[i - 1][j - 1] = g[j - 1][i - 1] = v

    if t == "A":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        for i in range(1, n):
            edge(i, i + 1, -1)
    elif t == "B":
        for i in range(1, n):
            g[i - 1][i - 1] = 4
            edge(i, i + 1, -2)
        g[n - 1][n - 1] = 2
    elif t == "C":
        for i in range(1, n):
            g[i - 1][i - 1] = 2
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        g[n - 1][n - 1] = 4
        edge(n - 1, n, -2)
    elif t == "D":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        for i in range(1, n - 1):
            edge(i, i + 1, -1)
        edge(n - 2, n, -1)
    elif t == "E":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        edge(1, 3, -1)
        edge(2, 4, -1)
        for i in range(3, n):
            edge(i, i + 1, -1)
    elif t == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        edge(1, 2, -2)
        edge(2, 3, -2)
        edge(3, 4, -1)
    else:
        g[0][0], g[1][1] = 2, 6
        edge(1, 2, -3)
    return tuple(tuple(row) for row in g)


def cartan_matrix(type_: str, rank: int | None = None) -> IntMat:
    g = gram_matrix(type_, rank)
    return tuple(tuple(2 * g[i][j] // g[i][i] for j in range(len(g))) for i in range(len(g)))


def positive_roots_from_cartan(c: IntMat) -> list[tuple[int, ...]]:
    """Positive roots of a finite-type Cartan matrix via root strings.

    For a root b and a simple root a_i with ``b - p a_i`` the bottom of the
    a_i-string through b, ``b + a_i`` is a root iff ``p - <b, a_i^v> > 0``.
    """
    n = len(c)
    roots = [unit(n, i) for i in range(n)]
    known = set(roots)
    layer = list(roots)
    while layer:
        nxt = []
        for b in layer:
            for i in range(n):
                p = 0
                v = list(b)
                while True:
                    v[i] -= 1
                    if tuple(v) not in known:
                        break
                    p += 1
                pairing = sum(c[i][j] * b[j] for j in range(n))
                if p - pairing > 0:
                    w = list(b)
                    w[i] += 1
                    w = tuple(w)
                    if w not in known:
                        known.add(w)
                        nxt.append(w)
        layer = nxt
    return sorted(known, key=lambda v: (sum(v), tuple(-x for x in v)))


@lru_cache(maxsize=None)
def _classical(t: str, n: int) -> RootSet:
    return RootSet(n, positive_roots_from_cartan(cartan_matrix(t, n)))


def classical(type_: str, rank: int | None = None) -> RootSet:
    """Positive roots of a finite root system, e.g. ``classical("B", 3)`` or ``classical("E7")``."""
    return _classical(*_parse(type_, rank))


def direct_sum(*parts: RootSet) -> RootSet:
    """Root set of the product arrangement."""
    rank = sum(p.rank for p in parts)
    roots = []
    offset = 0
    for p in parts:
        for v in p.positive_roots:
            w = [0] * rank
            w[offset:offset + p.rank] = v
            roots.append(w)
        offset += p.rank
    return RootSet(rank, roots)


def cartan_example() -> RootSet:
    """Rank-3 set of non-Lie type whose restriction to the first wall is B_2."""
    return RootSet(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2),
                       (1, 0, 1), (1, 1, 1), (1, 1, 2)])


def cycle_rank3_roots() -> RootSet:
    """Seven roots of the rank-3 Nichols algebra with a triangular Dynkin diagram."""
    return RootSet(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)])


E7_SPORADIC_J = (1, 2, 6, 7)


def sporadic_seven() -> RootMultiset:
    """Restriction of E_7 to the flat of the A1 x A1 x A2 parabolic on nodes 1, 2, 6, 7."""
    return restrict_parabolic(classical("E", 7), E7_SPORADIC_J).multiset


def _braiding(exps) -> BraidingMatrix:
    return BraidingMatrix.from_exponents(exps)


def uq_plus(type_: str, rank: int | None, ell: int) -> BraidingMatrix:
    """Borel part of the small quantum group: ``q_ij = q^(alpha_i, alpha_j)``, q of order ell."""
    if ell < 2:
        raise WeylGroupoidError("order of q must be at least 2")
    g = gram_matrix(type_, rank)
    return _braiding([[Fraction(x, ell) for x in row] for row in g])


def b2_generic(ell: int) -> BraidingMatrix:
    """``q_11 = q^2``, ``q_22 = q^4``, ``q_12 = q_21 = q^-2`` with q of order ell."""
    if ell < 2:
        raise WeylGroupoidError("order of q must be at least 2")
    return _braiding([[Fraction(2, ell), Fraction(-2, ell)], [Fraction(-2, ell), Fraction(4, ell)]])


def cycle_rank3() -> BraidingMatrix:
    """``q_ii = -1`` and ``q_ij = q_ji = zeta^2`` with zeta a primitive third root of unity."""
    h, z = Fraction(1, 2), Fraction(2, 3)
    return _braiding([[h, z, z], [z, h, z], [z, z, h]])


def a2_minus_one() -> BraidingMatrix:
    """``q = ((-1, -1), (1, -1))``."""
    h = Fraction(1, 2)
    return _braiding([[h, h], [0, h]])


def example_braiding(name: str, *args) -> BraidingMatrix:
    """Look up an example braiding: ``cycle_rank3``, ``a2_minus_one``,
    ``b2_generic`` (ell), ``uq_plus`` (type, rank, ell).

    Names with arguments also parse from strings such as ``"b2_generic(5)"`` or
    ``"uq_plus(E,7,5)"``.
    """
    m = re.fullmatch(r"\s*(\w+)\s*(?:\((.*)\))?\s*", name)
    if m is None:
        raise WeylGroupoidError(f"unknown braiding {name!r}")
    key = m.group(1)
    if m.group(2) is not None:
        args = tuple(a.strip() for a in m.group(2).split(",") if a.strip()) + args
    if key == "cycle_rank3" and not args:
        return cycle_rank3()
    if key == "a2_minus_one" and not args:
        return a2_minus_one()
    if key == "b2_generic" and len(args) == 1:
        return b2_generic(int(args[0]))
    if key == "uq_plus" and len(args) == 3:
        return uq_plus(str(args[0]), int(args[1]), int(args[2]))
    raise WeylGroupoidError(f"unknown braiding {name!r} with arguments {args}")


paper_braiding = example_braiding


def named_root_set(name: str) -> RootSet:
    """Root sets by name: Lie types such as ``B3``/``E7``, ``cycle_rank3``,
    ``cartan_example``, ``sporadic_seven``."""
    key = name.strip()
    if key == "cycle_rank3":
        return cycle_rank3_roots()
    if key == "cartan_example":
        return cartan_example()
    if key == "sporadic_seven":
        return sporadic_seven().reduced_roots()
    return classical(key)


def parabolic_components(R: RootSet, J) -> list[list[int]]:
    """Connected components of ``J`` in the Dynkin diagram of ``R``."""
    from .rootsys import cartan_from_roots
    c = cartan_from_roots(R)
    J = sorted(set(J))
    comps: list[list[int]] = []
    seen: set[int] = set()
    for j in J:
        if j in seen:
            continue
        comp, stack = [], [j]
        seen.add(j)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in J:
                if b not in seen and c[a - 1][b - 1] != 0:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


@lru_cache(maxsize=None)
def _forms_of_rank(n: int) -> dict[str, str]:
    out: dict[str, str] = {}
    for t in LIE_TYPES:
        try:
            f = canonical_form(classical(t, n))
        except WeylGroupoidError:
            continue
        out.setdefault(f, f"{t}{n}")
    return out


def parabolic_type(R: RootSet, J) -> list[str]:
    """Lie types of the components of the parabolic subsystem on ``J``, sorted.

    Components not of Lie type are reported as ``?n``.
    """
    out = []
    for comp in parabolic_components(R, J):
        idx = [j - 1 for j in comp]
        sub = [tuple(v[a] for a in idx) for v in R.positive_roots
               if all(x == 0 for a, x in zip(range(R.rank), v) if a not in idx)]
        name = _forms_of_rank(len(comp)).get(canonical_form(RootSet(len(comp), sub)))
        out.append(name or f"?{len(comp)}")
    return sorted(out, key=lambda s: (int(s[1:]), s[0]))


@dataclass
class SurveyResult:
    entries: dict[str, tuple[RootMultiset, tuple[int, tuple[int, ...]]]] = field(default_factory=dict)
    partial: bool = False
    objects: int = 0

    def to_json(self) -> dict:
        return {
            "partial": self.partial,
            "objects": self.objects,
            "fingerprints": {
                fp: {"witness": {"object": obj, "J": list(J)}, "restriction": ms.to_json()}
                for fp, (ms, (obj, J)) in sorted(self.entries.items())
            },
        }


def _survey_object(args):
    oid, roots, subsets = args
    found = {}
    for J in subsets:
        ms = restrict_parabolic(roots, J).multiset
        fp = canonical_form(ms.reduced_roots())
        if fp not in found:
            found[fp] = (ms, (oid, J))
    return found


def survey_restrictions(R: RootSet, target_rank: int, max_objects: int = 2_000,
                        standard_chamber_only: bool | None = None, jobs: int = 1) -> SurveyResult:
    """Distinct reduced parabolic restrictions of rank ``target_rank``.

    Iterates over all ``J`` of size ``rank - target_rank`` at every object of
    the enumerated groupoid (or only at ``R`` itself).  By default only ``R``
    is used from rank 6 on.  When the groupoid exceeds ``max_objects`` the
    survey falls back to ``R`` alone and is flagged partial.
    """
    r = R.rank
    if not 1 <= target_rank < r:
        raise WeylGroupoidError(f"target rank must be in 1..{r - 1}")
    if standard_chamber_only is None:
        standard_chamber_only = r >= 6
    subsets = list(combinations(range(1, r + 1), r - target_rank))
    result = SurveyResult()
    if standard_chamber_only:
        objs = [(0, R)]
    else:
        try:
            G = enumerate_objects(R, max_objects)
            seen = {}
            for o in G.objects:
                seen.setdefault(o.roots, o.id)
            objs = [(oid, roots) for roots, oid in seen.items()]
        except NotFinite:
            objs = [(0, R)]
            result.partial = True
    result.objects = len(objs)
    tasks = [(oid, roots, subsets) for oid, roots in sorted(objs, key=lambda t: t[0])]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_survey_object, tasks))
    else:
        parts = [_survey_object(t) for t in tasks]
    for part in parts:
        for fp, val in part.items():
            result.entries.setdefault(fp, val)
    return result
