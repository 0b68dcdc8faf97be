"""Signatures (R+, R-) of theta-stable parabolics q_x and their exhaustive enumeration.

For x in t_R, R+(x) counts positive noncompact roots with alpha(x) > 0 and
R-(x) those with alpha(x) < 0.  Signatures are constant on the faces of the
Coxeter arrangement of the full root system and invariant under W_K, so it is
enough to evaluate one generic point per face, modulo W_K: the points
w^-1 . x_B, with x_B = sum_{i in B} omega_i for nonempty B and w running over
a transversal of W/W_K.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .rootsys import PairDescriptor, RatVec, RootDatum, build_root_datum, solve_linear
from .weyl import WeylWord, apply_word, cartan_integers, coset_representatives


class Signature(NamedTuple):
    r_plus: int
    r_minus: int


@dataclass(frozen=True)
class FaceWitness:
    """Which dominant face and coset representative first produced a signature."""

    subset: tuple[int, ...]
    word: WeylWord


@dataclass(frozen=True)
class SignatureSet:
    """Attainable R- values, keyed by R+."""

    values: dict[int, tuple[int, ...]]
    provenance: dict[Signature, FaceWitness] = field(default_factory=dict, compare=False)

    def __getitem__(self, r_plus: int) -> tuple[int, ...]:
        return self.values.get(r_plus, ())

    def pairs(self) -> set[Signature]:
        return {Signature(p, m) for p, ms in self.values.items() for m in ms}

    @classmethod
    def from_pairs(cls, pairs: Iterable, r_plus_filter=None, provenance=None) -> "SignatureSet":
        grouped: dict[int, set[int]] = {}
        for p, m in pairs:
            if r_plus_filter is None or p in r_plus_filter:
                grouped.setdefault(p, set()).add(m)
        if r_plus_filter is not None:
            for p in r_plus_filter:
                grouped.setdefault(p, set())
        values = {p: tuple(sorted(grouped[p])) for p in sorted(grouped)}
        prov = {}
        if provenance:
            prov = {s: w for s, w in provenance.items() if s.r_plus in values}
        return cls(values, prov)


def r_signature(datum: RootDatum, x) -> Signature:
    x = datum.require_in_real_cartan(x)
    plus = minus = 0
    for alpha in datum.pos_noncompact:
        v = alpha.dot(x)
        if v > 0:
            plus += 1
        elif v < 0:
            minus += 1
    return Signature(plus, minus)


def _subsets(rank: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of 1..rank, ordered by bitmask."""
    return [
        tuple(i + 1 for i in range(rank) if mask >> i & 1)
        for mask in range(1, 1 << rank)
    ]


def enumerate_face_points(datum: RootDatum) -> Iterator[RatVec]:
    """One generic point per face of the Coxeter arrangement, modulo W_K, x != 0.

    Points are produced coset representative by coset representative, and
    within one representative by subset bitmask.
    """
    subsets = _subsets(datum.rank)
    for w in coset_representatives(datum):
        images = [apply_word(datum, w, omega) for omega in datum.fundamental_coweights]
        for subset in subsets:
            x = images[subset[0] - 1]
            for i in subset[1:]:
                x = x + images[i - 1]
            yield x


# --- integer bulk evaluation -----------------------------------------------

def _noncompact_coefficients(datum: RootDatum) -> np.ndarray:
    """Simple-root coefficients of the positive noncompact roots: alpha(omega_k)."""
    rows = []
    for alpha in datum.pos_noncompact:
        row = [alpha.dot(omega) for omega in datum.fundamental_coweights]
        assert all(c.denominator == 1 for c in row)
        rows.append([int(c) for c in row])
    return np.array(rows, dtype=np.int64)


def _coweight_images(cartan: list[list[int]], word: WeylWord) -> np.ndarray:
    """Rows: coweight coordinates of w . omega_i for i = 1..rank."""
    r = len(cartan)
    c = np.eye(r, dtype=np.int64)
    a = np.array(cartan, dtype=np.int64)
    for label in reversed(word):
        j = label - 1
        # s_j: c_i -> c_i - c_j a[i][j]
        c = c - np.outer(c[:, j], a[:, j])
    return c


def _signatures_for_words(datum, words, subset_matrix, coeffs, cartan):
    found: dict[Signature, FaceWitness] = {}
    subsets = _subsets(datum.rank)
    for w in words:
        values = subset_matrix @ _coweight_images(cartan, w) @ coeffs.T
        plus = (values > 0).sum(axis=1)
        minus = (values < 0).sum(axis=1)
        for k, sig in enumerate(zip(plus.tolist(), minus.tolist())):
            sig = Signature(*sig)
            if sig not in found:
                found[sig] = FaceWitness(subsets[k], w)
    return found


@lru_cache(maxsize=None)
def _all_signatures(desc: PairDescriptor, threads: int = 1) -> dict[Signature, FaceWitness]:
    datum = build_root_datum(desc)
    words = coset_representatives(datum)
    subset_matrix = np.array(
        [[1 if i + 1 in s else 0 for i in range(datum.rank)] for s in _subsets(datum.rank)],
        dtype=np.int64,
    )
    coeffs = _noncompact_coefficients(datum)
    cartan = cartan_integers(datum)
    if threads <= 1:
        chunks = [words]
    else:
        size = math.ceil(len(words) / threads)
        chunks = [words[i:i + size] for i in range(0, len(words), size)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(
            pool.map(lambda ws: _signatures_for_words(datum, ws, subset_matrix, coeffs, cartan), chunks)
        )
    merged: dict[Signature, FaceWitness] = {}
    for part in parts:  # chunks are in word order, so the first witness wins
        for sig, witness in part.items():
            merged.setdefault(sig, witness)
    return merged


def attainable_signatures(
    datum: RootDatum,
    r_plus_filter: Iterable[int] | None = None,
    threads: int = 1,
) -> SignatureSet:
    """Every signature of a nonzero x in t_R, optionally restricted to some R+ values."""
    found = _all_signatures(datum.descriptor, threads)
    filt = None if r_plus_filter is None else sorted(set(r_plus_filter))
    return SignatureSet.from_pairs(found, filt, found)


def attainable_rminus(desc: PairDescriptor, r_plus: int) -> tuple[int, ...]:
    return attainable_signatures(build_root_datum(desc), [r_plus])[r_plus]


# --- randomized oracle -------------------------------------------------------

def _projector(datum: RootDatum) -> np.ndarray:
    """Integer multiple of the orthogonal projection of R^N onto t_R."""
    N = datum.ambient_dim
    cons = datum.tR_constraints
    proj = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    if cons:
        gram = [[a.dot(b) for b in cons] for a in cons]
        # P = I - C^T (C C^T)^-1 C
        inv = solve_linear(gram, [[int(i == j) for j in range(len(cons))] for i in range(len(cons))])
        for i in range(N):
            for j in range(N):
                proj[i][j] -= sum(
                    cons[a][i] * inv[a][b] * cons[b][j]
                    for a in range(len(cons))
                    for b in range(len(cons))
                )
    scale = math.lcm(*(v.denominator for row in proj for v in row))
    return np.array([[int(v * scale) for v in row] for row in proj], dtype=np.int64)


def _integer_rows(vectors, scale: int = 2) -> np.ndarray:
    out = np.array([[v * scale for v in vec] for vec in vectors], dtype=object)
    assert all(v.denominator == 1 for v in out.flat)
    return out.astype(np.int64)


def sample_signatures(datum: RootDatum, count: int, seed: int) -> set[Signature]:
    """Signatures of ``count`` random integer points projected into t_R."""
    if count <= 0:
        raise ValueError("count must be positive")
    rng = np.random.default_rng(seed)
    raw = rng.integers(-10, 10, size=(count, datum.ambient_dim), endpoint=True)
    points = raw @ _projector(datum).T
    if datum.tR_constraints:
        ok = ~np.any(points @ _integer_rows(datum.tR_constraints).T, axis=1)
        points = points[ok]
    points = points[np.any(points != 0, axis=1)]
    values = points @ _integer_rows(datum.pos_noncompact).T
    plus = (values > 0).sum(axis=1).tolist()
    minus = (values < 0).sum(axis=1).tolist()
    return {Signature(p, m) for p, m in zip(plus, minus)}


def random_cartan_points(datum: RootDatum, count: int, seed: int) -> list[RatVec]:
    """Seeded random nonzero points of t_R, exact, for property checks."""
    rng = np.random.default_rng(seed)
    proj = _projector(datum)
    out = []
    while len(out) < count:
        raw = rng.integers(-10, 10, size=datum.ambient_dim, endpoint=True)
        x = proj @ raw
        if np.any(x):
            out.append(RatVec(int(v) for v in x))
    return out


__all__ = [
    "FaceWitness",
    "Signature",
    "SignatureSet",
    "attainable_rminus",
    "attainable_signatures",
    "enumerate_face_points",
    "r_signature",
    "random_cartan_points",
    "sample_signatures",
]
