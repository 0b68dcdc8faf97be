"""Exact root data for the irreducible Hermitian symmetric pairs.

Every root system is realised inside an ambient Euclidean space R^N with the
standard inner product, following the Bourbaki coordinates.  The real Cartan
subspace t_R is the span of the roots; when it is a proper subspace of R^N it
is cut out by explicit linear constraints (``RootDatum.tR_constraints``).

Simple roots are labelled 1..rank in Bourbaki order and those labels are used
throughout the package (Weyl words, parabolic subsets, the noncompact label).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .config import LIMITS
from .errors import (
    ConstraintViolation,
    DegenerateBasis,
    DimensionMismatch,
    ParameterOutOfRange,
    SingularSystem,
    ZeroRoot,
)

HALF = Fraction(1, 2)


class RatVec(tuple):
    """Immutable vector of exact rationals.

    Tuple ordering gives the lexicographic order used for deterministic
    sorting; equality and hashing are those of the coordinate tuple.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (Fraction(c) for c in coords))

    @classmethod
    def zero(cls, dim: int) -> "RatVec":
        return cls([0] * dim)

    @classmethod
    def unit(cls, i: int, dim: int) -> "RatVec":
        """The basis vector e_i (1-based)."""
        return cls(1 if j == i else 0 for j in range(1, dim + 1))

    def _check(self, other) -> None:
        if len(self) != len(other):
            raise DimensionMismatch(f"length {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check(other)
        return RatVec(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return RatVec(a - b for a, b in zip(self, other))

    def __neg__(self):
        return RatVec(-a for a in self)

    def __mul__(self, scalar):
        return RatVec(a * scalar for a in self)

    __rmul__ = __mul__

    def dot(self, other) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self) -> str:
        return "RatVec(" + ", ".join(str(c) for c in self) + ")"


def vec(*coords) -> RatVec:
    return RatVec(coords)


class CartanType(enum.Enum):
    AIII = "AIII"
    BDI_EVEN = "BDI_even"
    BDI_ODD = "BDI_odd"
    CI = "CI"
    DIII = "DIII"
    EIII = "EIII"
    EVII = "EVII"

    @classmethod
    def parse(cls, name: str) -> "CartanType":
        key = name.strip().replace("-", "_").upper()
        for member in cls:
            if member.value.upper() == key:
                return member
        raise ParameterOutOfRange(f"unknown Hermitian type {name!r}")

    @property
    def param_names(self) -> tuple[str, ...]:
        return _PARAM_NAMES[self]

    @property
    def is_exceptional(self) -> bool:
        return self in (CartanType.EIII, CartanType.EVII)


_PARAM_NAMES = {
    CartanType.AIII: ("m", "n"),
    CartanType.BDI_EVEN: ("m",),
    CartanType.BDI_ODD: ("m",),
    CartanType.CI: ("n",),
    CartanType.DIII: ("n",),
    CartanType.EIII: (),
    CartanType.EVII: (),
}


@dataclass(frozen=True)
class PairDescriptor:
    """One Hermitian symmetric pair (G, K): a family plus its integer parameters.

    >>> PairDescriptor.of("AIII", m=2, n=3).dim_X
    6
    """

    cartan_type: CartanType
    params: tuple[int, ...] = ()

    def __post_init__(self):
        names = self.cartan_type.param_names
        if len(self.params) != len(names):
            raise ParameterOutOfRange(
                f"{self.cartan_type.value} takes parameters {names}, got {self.params}"
            )
        self._check_guards()

    @classmethod
    def of(cls, cartan_type, **params: int) -> "PairDescriptor":
        if not isinstance(cartan_type, CartanType):
            cartan_type = CartanType.parse(cartan_type)
        names = cartan_type.param_names
        extra = set(params) - set(names)
        if extra:
            raise ParameterOutOfRange(f"{cartan_type.value} does not take {sorted(extra)}")
        missing = [k for k in names if params.get(k) is None]
        if missing:
            raise ParameterOutOfRange(f"{cartan_type.value} requires {missing}")
        return cls(cartan_type, tuple(int(params[k]) for k in names))

    def _check_guards(self) -> None:
        t, p = self.cartan_type, self.params
        limit = LIMITS.max_params
        if t is CartanType.AIII:
            m, n = p
            if m < 1 or n < m or (m, n) == (1, 1):
                raise ParameterOutOfRange(f"AIII needs 1 <= m <= n, (m,n) != (1,1); got {p}")
            if m + n > limit:
                raise ParameterOutOfRange(f"AIII m+n={m + n} exceeds the limit {limit}")
            return
        lower = {
            CartanType.BDI_EVEN: 3,
            CartanType.BDI_ODD: 2,
            CartanType.CI: 2,
            CartanType.DIII: 4,
        }.get(t)
        if lower is not None:
            (k,) = p
            if k < lower:
                raise ParameterOutOfRange(f"{t.value} needs parameter >= {lower}; got {k}")
            if k > limit:
                raise ParameterOutOfRange(f"{t.value} parameter {k} exceeds the limit {limit}")

    @property
    def m(self) -> int:
        return dict(zip(self.cartan_type.param_names, self.params))["m"]

    @property
    def n(self) -> int:
        return dict(zip(self.cartan_type.param_names, self.params))["n"]

    @property
    def label(self) -> str:
        if not self.params:
            return self.cartan_type.value
        inner = ",".join(f"{k}={v}" for k, v in zip(self.cartan_type.param_names, self.params))
        return f"{self.cartan_type.value}({inner})"

    @property
    def ambient_dim(self) -> int:
        t = self.cartan_type
        if t is CartanType.AIII:
            return self.m + self.n
        if t in (CartanType.EIII, CartanType.EVII):
            return 8
        return self.params[0]

    @property
    def rank(self) -> int:
        t = self.cartan_type
        if t is CartanType.AIII:
            return self.m + self.n - 1
        return {CartanType.EIII: 6, CartanType.EVII: 7}.get(t, self.ambient_dim)

    @property
    def dim_X(self) -> int:
        """Complex dimension of G/K (number of positive noncompact roots)."""
        t = self.cartan_type
        if t is CartanType.AIII:
            return self.m * self.n
        if t is CartanType.BDI_EVEN:
            return 2 * self.m - 2
        if t is CartanType.BDI_ODD:
            return 2 * self.m - 1
        if t is CartanType.CI:
            return self.n * (self.n + 1) // 2
        if t is CartanType.DIII:
            return self.n * (self.n - 1) // 2
        return {CartanType.EIII: 16, CartanType.EVII: 27}[t]

    @property
    def real_rank(self) -> int:
        t = self.cartan_type
        if t is CartanType.AIII:
            return min(self.m, self.n)
        if t in (CartanType.BDI_EVEN, CartanType.BDI_ODD, CartanType.EIII):
            return 2
        if t is CartanType.CI:
            return self.n
        if t is CartanType.DIII:
            return self.n // 2
        return 3


@dataclass(frozen=True)
class RootDatum:
    descriptor: PairDescriptor
    ambient_dim: int
    tR_constraints: tuple[RatVec, ...]
    simple_roots: tuple[RatVec, ...]
    noncompact_simple_index: int
    pos_compact: tuple[RatVec, ...]
    pos_noncompact: tuple[RatVec, ...]
    fundamental_coweights: tuple[RatVec, ...]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def compact_simple_indices(self) -> tuple[int, ...]:
        return tuple(i for i in self.labels if i != self.noncompact_simple_index)

    def simple_root(self, label: int) -> RatVec:
        return self.simple_roots[label - 1]

    def coweight(self, label: int) -> RatVec:
        return self.fundamental_coweights[label - 1]

    @property
    def positive_roots(self) -> tuple[RatVec, ...]:
        return self.pos_compact + self.pos_noncompact

    @property
    def roots(self) -> tuple[RatVec, ...]:
        pos = self.positive_roots
        return pos + tuple(-a for a in pos)

    def in_real_cartan(self, x: Sequence) -> bool:
        if len(x) != self.ambient_dim:
            return False
        return all(c.dot(x) == 0 for c in self.tR_constraints)

    def require_in_real_cartan(self, x: Sequence) -> RatVec:
        x = RatVec(x)
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(f"expected {self.ambient_dim} coordinates, got {len(x)}")
        bad = [c for c in self.tR_constraints if c.dot(x) != 0]
        if bad:
            raise ConstraintViolation(f"{x!r} violates t_R constraint(s) {bad}")
        return x


def eval_root(alpha: Sequence, x: Sequence) -> Fraction:
    """Pairing alpha(x), computed as the exact ambient dot product."""
    return RatVec(alpha).dot(RatVec(x))


def reflect(alpha: Sequence, x: Sequence) -> RatVec:
    """s_alpha(x) = x - 2 (alpha, x) / (alpha, alpha) * alpha."""
    alpha, x = RatVec(alpha), RatVec(x)
    norm = alpha.dot(alpha)
    if norm == 0:
        raise ZeroRoot("cannot reflect in the zero vector")
    return x - alpha * (2 * alpha.dot(x) / norm)


# --- explicit root lists ---------------------------------------------------

def _e(i: int, dim: int) -> RatVec:
    return RatVec.unit(i, dim)


def _even_sign_vectors() -> list[tuple[int, ...]]:
    """a in {0,1}^5 with even coordinate sum, in lexicographic order."""
    return [a for a in itertools.product((0, 1), repeat=5) if sum(a) % 2 == 0]


def _gamma(a: Sequence[int]) -> RatVec:
    # (1/2)(-e6 - e7 + e8 + sum_j (-1)^{a_j} e_j)
    return RatVec([HALF * (-1) ** aj for aj in a] + [-HALF, -HALF, HALF])


def _beta(c: Sequence[int]) -> RatVec:
    # (1/2)(e6 - e7 + e8 - sum_j (-1)^{c_j} e_j)
    return RatVec([-HALF * (-1) ** cj for cj in c] + [HALF, -HALF, HALF])


def _d5_positive(dim: int = 8) -> list[RatVec]:
    return [
        _e(j, dim) + _e(i, dim) * sign
        for j in range(1, 6)
        for i in range(1, j)
        for sign in (-1, 1)
    ]


def _aiii(m: int, n: int):
    N = m + n
    simple = [_e(j, N) - _e(j + 1, N) for j in range(1, N)]
    compact = [
        _e(i, N) - _e(j, N)
        for i in range(1, N + 1)
        for j in range(i + 1, N + 1)
        if j <= m or i > m
    ]
    noncompact = [_e(i, N) - _e(j, N) for i in range(1, m + 1) for j in range(m + 1, N + 1)]
    return N, [RatVec([1] * N)], simple, m, compact, noncompact


def _bdi_even(m: int):
    simple = [_e(j, m) - _e(j + 1, m) for j in range(1, m)] + [_e(m - 1, m) + _e(m, m)]
    compact = [
        _e(i, m) + _e(j, m) * s for i in range(2, m + 1) for j in range(i + 1, m + 1) for s in (-1, 1)
    ]
    noncompact = [_e(1, m) + _e(j, m) * s for j in range(2, m + 1) for s in (-1, 1)]
    return m, [], simple, 1, compact, noncompact


def _bdi_odd(m: int):
    simple = [_e(j, m) - _e(j + 1, m) for j in range(1, m)] + [_e(m, m)]
    compact = [
        _e(i, m) + _e(j, m) * s for i in range(2, m + 1) for j in range(i + 1, m + 1) for s in (-1, 1)
    ] + [_e(j, m) for j in range(2, m + 1)]
    noncompact = [_e(1, m) + _e(j, m) * s for j in range(2, m + 1) for s in (-1, 1)] + [_e(1, m)]
    return m, [], simple, 1, compact, noncompact


def _ci(n: int):
    simple = [_e(j, n) - _e(j + 1, n) for j in range(1, n)] + [_e(n, n) * 2]
    compact = [_e(i, n) - _e(j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    noncompact = [
        _e(i, n) + _e(j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ] + [_e(i, n) * 2 for i in range(1, n + 1)]
    return n, [], simple, n, compact, noncompact


def _diii(n: int):
    simple = [_e(j, n) - _e(j + 1, n) for j in range(1, n)] + [_e(n - 1, n) + _e(n, n)]
    compact = [_e(i, n) - _e(j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    noncompact = [_e(i, n) + _e(j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return n, [], simple, n, compact, noncompact


def _eiii():
    simple = [
        RatVec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]),
        _e(1, 8) + _e(2, 8),
        _e(2, 8) - _e(1, 8),
        _e(3, 8) - _e(2, 8),
        _e(4, 8) - _e(3, 8),
        _e(5, 8) - _e(4, 8),
    ]
    constraints = [_e(6, 8) - _e(7, 8), _e(7, 8) + _e(8, 8)]
    compact = _d5_positive()
    noncompact = [_gamma(a) for a in _even_sign_vectors()]
    return 8, constraints, simple, 1, compact, noncompact


def _evii():
    simple = [
        RatVec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]),
        _e(1, 8) + _e(2, 8),
        _e(2, 8) - _e(1, 8),
        _e(3, 8) - _e(2, 8),
        _e(4, 8) - _e(3, 8),
        _e(5, 8) - _e(4, 8),
        _e(6, 8) - _e(5, 8),
    ]
    constraints = [_e(7, 8) + _e(8, 8)]
    compact = _d5_positive() + [_gamma(a) for a in _even_sign_vectors()]
    noncompact = (
        [_beta(c) for c in _even_sign_vectors()]
        + [_e(6, 8) + _e(j, 8) * s for j in range(1, 6) for s in (1, -1)]
        + [_e(8, 8) - _e(7, 8)]
    )
    return 8, constraints, simple, 7, compact, noncompact


_BUILDERS = {
    CartanType.AIII: _aiii,
    CartanType.BDI_EVEN: _bdi_even,
    CartanType.BDI_ODD: _bdi_odd,
    CartanType.CI: _ci,
    CartanType.DIII: _diii,
    CartanType.EIII: _eiii,
    CartanType.EVII: _evii,
}


@lru_cache(maxsize=None)
def build_root_datum(desc: PairDescriptor) -> RootDatum:
    """Realise the root data of ``desc`` in exact ambient coordinates."""
    N, constraints, simple, nc, compact, noncompact = _BUILDERS[desc.cartan_type](*desc.params)
    coweights = _coweights(simple, constraints, N)
    return RootDatum(
        descriptor=desc,
        ambient_dim=N,
        tR_constraints=tuple(constraints),
        simple_roots=tuple(simple),
        noncompact_simple_index=nc,
        pos_compact=tuple(compact),
        pos_noncompact=tuple(noncompact),
        fundamental_coweights=tuple(coweights),
    )


# --- rational linear algebra -------------------------------------------------

def solve_linear(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A X = B exactly for square A by Gauss-Jordan elimination.

    ``rhs`` is a list of right-hand-side rows (one per row of A), so several
    systems sharing A are solved at once.  Returns the rows of X.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise DimensionMismatch("solve_linear needs a square system")
    width = len(rhs[0]) if n else 0
    aug = [[Fraction(v) for v in row] + [Fraction(v) for v in b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:n + width] for row in aug]


def _coweights(simple, constraints, N) -> list[RatVec]:
    rows = list(simple) + list(constraints)
    if len(rows) != N:
        raise SingularSystem(f"{len(simple)} simple roots + {len(constraints)} constraints != {N}")
    n = len(simple)
    rhs = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rhs += [[0] * n for _ in constraints]
    sol = solve_linear(rows, rhs)
    # sol[k][j] is coordinate k of omega_j
    return [RatVec(sol[k][j] for k in range(N)) for j in range(n)]


def solve_coweights(datum: RootDatum) -> list[RatVec]:
    """Fundamental coweights: omega_j in t_R with psi_i(omega_j) = delta_ij."""
    return _coweights(datum.simple_roots, datum.tR_constraints, datum.ambient_dim)


def positive_system_from_basis(datum: RootDatum, ordered_basis: Sequence[Sequence]) -> list[RatVec]:
    """Positive roots for the lexicographic order defined by ``ordered_basis``.

    A root is positive when its first nonzero value on H_1, H_2, ... is
    positive.
    """
    basis = [datum.require_in_real_cartan(h) for h in ordered_basis]
    positive = []
    for alpha in datum.roots:
        for h in basis:
            v = alpha.dot(h)
            if v:
                if v > 0:
                    positive.append(alpha)
                break
        else:
            raise DegenerateBasis(f"root {alpha!r} vanishes on every basis vector")
    return positive
