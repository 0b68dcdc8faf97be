"""Weyl group words, orbit enumeration and flag-manifold Poincare polynomials.

Cosets are never enumerated as abstract group elements: a coset space W'/W''
is realised as the orbit of a point whose stabiliser is exactly W''.  BFS
depth in the orbit graph is the length of the minimal coset representative.

Word convention: ``WeylWord((l1, l2, ..., lk))`` is the product
s_l1 s_l2 ... s_lk, so ``apply_word`` applies s_lk first and s_l1 last.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .config import LIMITS
from .errors import BadGeneratorIndex, InvalidParabolicSubset, OrbitLimitExceeded
from .rootsys import RatVec, RootDatum, reflect


class WeylWord(tuple):
    """Sequence of simple-reflection labels (1-based)."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, (int(i) for i in letters))

    def inverse(self) -> "WeylWord":
        return WeylWord(reversed(self))

    def __repr__(self) -> str:
        return "WeylWord(" + ",".join(map(str, self)) + ")"


@dataclass(frozen=True)
class OrbitEntry:
    point: RatVec
    depth: int
    word: WeylWord


@dataclass(frozen=True)
class OrbitTable:
    seed: RatVec
    generators: tuple[int, ...]
    entries: tuple[OrbitEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def points(self) -> list[RatVec]:
        return [e.point for e in self.entries]

    def depth_counts(self) -> list[int]:
        counts = Counter(e.depth for e in self.entries)
        return [counts[d] for d in range(max(counts) + 1)]


def _check_labels(datum: RootDatum, labels: Iterable[int]) -> tuple[int, ...]:
    labels = tuple(labels)
    for i in labels:
        if not isinstance(i, int) or not 1 <= i <= datum.rank:
            raise BadGeneratorIndex(f"{i!r} is not a simple-root label of {datum.descriptor.label}")
    return labels


def apply_word(datum: RootDatum, w: Sequence[int], x: Sequence) -> RatVec:
    w = _check_labels(datum, w)
    x = RatVec(x)
    for label in reversed(w):
        x = reflect(datum.simple_root(label), x)
    return x


def orbit_bfs(
    datum: RootDatum,
    generator_indices: Iterable[int],
    seed: Sequence,
    limit: int | None = None,
) -> OrbitTable:
    """Orbit of ``seed`` under the reflections ``generator_indices``.

    Levels are expanded in lexicographic order of their points and generators
    in increasing label order, so the table (points, depths and words) is
    reproducible.
    """
    gens = tuple(sorted(set(_check_labels(datum, generator_indices))))
    seed = datum.require_in_real_cartan(seed)
    limit = LIMITS.orbit_limit if limit is None else limit
    roots = {i: datum.simple_root(i) for i in gens}

    words = {seed: WeylWord()}
    entries = [OrbitEntry(seed, 0, WeylWord())]
    frontier = [seed]
    depth = 0
    while frontier:
        depth += 1
        found = []
        for point in frontier:
            for i in gens:
                image = reflect(roots[i], point)
                if image not in words:
                    words[image] = WeylWord((i,) + words[point])
                    found.append(image)
                    if len(words) > limit:
                        raise OrbitLimitExceeded(f"orbit exceeds {limit} points")
        found.sort()
        entries.extend(OrbitEntry(p, depth, words[p]) for p in found)
        frontier = found
    return OrbitTable(seed, gens, tuple(entries))


# --- integer coweight-coordinate orbits ------------------------------------

def cartan_integers(datum: RootDatum) -> list[list[int]]:
    """a[i][j] = 2 (psi_i, psi_j) / (psi_j, psi_j), indexed from 0."""
    psi = datum.simple_roots
    out = []
    for a in psi:
        row = []
        for b in psi:
            v = 2 * a.dot(b) / b.dot(b)
            assert v.denominator == 1
            row.append(int(v))
        out.append(row)
    return out


def coweight_coordinates(datum: RootDatum, x: Sequence) -> list[Fraction]:
    """(psi_1(x), ..., psi_r(x)); x = sum_i psi_i(x) omega_i for x in t_R."""
    x = datum.require_in_real_cartan(x)
    return [psi.dot(x) for psi in datum.simple_roots]


def orbit_depth_counts(
    datum: RootDatum,
    generator_indices: Iterable[int],
    seed: Sequence,
    limit: int | None = None,
) -> list[int]:
    """BFS level sizes of the orbit of ``seed``, without building RatVecs.

    Points are tracked by their integer-scaled coweight coordinates, on which
    s_j acts by c_i -> c_i - c_j * a[i][j].
    """
    gens = tuple(j - 1 for j in sorted(set(_check_labels(datum, generator_indices))))
    limit = LIMITS.orbit_limit if limit is None else limit
    coords = coweight_coordinates(datum, seed)
    scale = math.lcm(*(c.denominator for c in coords))
    start = tuple(int(c * scale) for c in coords)
    a = cartan_integers(datum)
    cols = {j: [a[i][j] for i in range(len(start))] for j in gens}

    seen = {start}
    frontier = [start]
    counts = [1]
    while True:
        found = []
        for c in frontier:
            for j in gens:
                cj = c[j]
                if cj == 0:
                    continue
                image = tuple(ci - cj * aij for ci, aij in zip(c, cols[j]))
                if image not in seen:
                    seen.add(image)
                    found.append(image)
            if len(seen) > limit:
                raise OrbitLimitExceeded(f"orbit exceeds {limit} points")
        if not found:
            return counts
        counts.append(len(found))
        frontier = found


def check_parabolic_subset(datum: RootDatum, parabolic_subset: Iterable[int]) -> tuple[int, ...]:
    subset = tuple(sorted(set(parabolic_subset)))
    compact = set(datum.compact_simple_indices)
    bad = [i for i in subset if i not in compact]
    if bad:
        raise InvalidParabolicSubset(
            f"{bad} are not compact simple labels of {datum.descriptor.label} "
            f"(compact labels: {sorted(compact)})"
        )
    return subset


def parabolic_seed(datum: RootDatum, parabolic_subset: Iterable[int]) -> RatVec:
    """Point of t_R whose W_K-stabiliser is generated by ``parabolic_subset``."""
    subset = set(check_parabolic_subset(datum, parabolic_subset))
    x = RatVec.zero(datum.ambient_dim)
    for i in datum.compact_simple_indices:
        if i not in subset:
            x = x + datum.coweight(i)
    return x


def flag_poincare(datum: RootDatum, parabolic_subset: Iterable[int]) -> list[int]:
    """Betti numbers (b_0, b_2, b_4, ...) of K/H, H the centraliser of the subset.

    ``parabolic_subset`` lists the compact simple labels that are simple roots
    of H.  b_2r counts minimal W_K/W_H coset representatives of length r.
    """
    seed = parabolic_seed(datum, parabolic_subset)
    return orbit_depth_counts(datum, datum.compact_simple_indices, seed)


def coset_representatives(datum: RootDatum) -> list[WeylWord]:
    """Words w with {w} a transversal of W_K \\ W, shortest first.

    The orbit of the noncompact coweight under all simple reflections is
    W/W_K; inverting its words gives right-coset representatives.
    """
    seed = datum.coweight(datum.noncompact_simple_index)
    table = orbit_bfs(datum, datum.labels, seed)
    return [e.word.inverse() for e in table.entries]


def _component_order(nodes: list[int], a: list[list[int]]) -> int:
    """|W| of one connected Dynkin diagram, identified from its Cartan integers."""
    k = len(nodes)
    adj = {i: [j for j in nodes if j != i and a[i][j] != 0] for i in nodes}
    if any(a[i][j] * a[j][i] == 2 for i in nodes for j in adj[i]):
        return 2**k * math.factorial(k)  # B_k or C_k
    if any(a[i][j] * a[j][i] > 2 for i in nodes for j in adj[i]):
        raise ValueError("G2 components do not occur for Hermitian pairs")
    branch = [i for i in nodes if len(adj[i]) == 3]
    if not branch:
        return math.factorial(k + 1)  # A_k
    legs = []
    for start in adj[branch[0]]:
        length, prev, cur = 1, branch[0], start
        while len(adj[cur]) == 2:
            prev, cur = cur, next(j for j in adj[cur] if j != prev)
            length += 1
        legs.append(length)
    if sorted(legs)[:2] == [1, 1]:
        return 2 ** (k - 1) * math.factorial(k)  # D_k
    return {6: 51840, 7: 2903040, 8: 696729600}[k]


def weyl_group_order(datum: RootDatum, labels: Iterable[int]) -> int:
    """Order of the reflection subgroup generated by the given simple labels."""
    labels = sorted(set(_check_labels(datum, labels)))
    a = cartan_integers(datum)
    remaining, order = [i - 1 for i in labels], 1
    while remaining:
        comp, stack = [], [remaining[0]]
        while stack:
            i = stack.pop()
            if i in comp:
                continue
            comp.append(i)
            stack.extend(j for j in remaining if j not in comp and a[i][j] != 0)
        remaining = [i for i in remaining if i not in comp]
        order *= _component_order(comp, a)
    return order
