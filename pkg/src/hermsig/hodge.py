"""Cohomological consequences of the signature sets.

Vanishing verdicts for H^{0,q} and H^{1,q} of a compact quotient X_Gamma, the
H^{1,1} structure, Picard-group reports, and the Leray-Hirsch decomposition
of the Hodge numbers of the flag bundle Y_Gamma -> X_Gamma with fibre K/H.

Verdicts are deliberately tri-state.  The signature method can prove that a
group vanishes (or that H^{1,1} is one-dimensional) but never that one is
nonzero, because the multiplicities m(pi, Gamma) depend on the lattice.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DimensionMismatch, ParameterOutOfRange
from .rootsys import CartanType, PairDescriptor, build_root_datum
from .signatures import attainable_rminus
from .weyl import check_parabolic_subset

TORSION_SYMBOL = "Γ/[Γ,Γ]"


class Verdict(enum.Enum):
    ZERO = "Zero"
    ISOMORPHIC_TO_C = "IsomorphicToC"
    UNCONSTRAINED = "Unconstrained"


@dataclass(frozen=True)
class VanishingVerdict:
    value: Verdict
    reason: str


def _fmt(values) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def vanish_h0q(desc: PairDescriptor, q: int) -> VanishingVerdict:
    """H^{0,q}(X_Gamma) = 0 unless some x != 0 has (R+, R-) = (0, q)."""
    if q < 1:
        raise ParameterOutOfRange(f"H^(0,q) verdicts need q >= 1, got {q}")
    r0 = attainable_rminus(desc, 0)
    if q in r0:
        return VanishingVerdict(Verdict.UNCONSTRAINED, f"(0,{q}) is attained; R+=0 gives R- in {_fmt(r0)}")
    return VanishingVerdict(Verdict.ZERO, f"(0,{q}) is not attained; R+=0 gives R- in {_fmt(r0)}")


def vanish_h1q(desc: PairDescriptor, q: int) -> VanishingVerdict:
    """H^{1,q}(X_Gamma) = 0 unless (0, q-1) or (1, q) is attained."""
    if q < 2:
        raise ParameterOutOfRange(f"H^(1,q) verdicts need q >= 2, got {q}")
    r0 = attainable_rminus(desc, 0)
    r1 = attainable_rminus(desc, 1)
    hits = []
    if q - 1 in r0:
        hits.append(f"(0,{q - 1})")
    if q in r1:
        hits.append(f"(1,{q})")
    context = f"R+=0 gives {_fmt(r0)}, R+=1 gives {_fmt(r1)}"
    if hits:
        return VanishingVerdict(Verdict.UNCONSTRAINED, f"{' and '.join(hits)} attained; {context}")
    return VanishingVerdict(Verdict.ZERO, f"neither (0,{q - 1}) nor (1,{q}) attained; {context}")


def h11_structure(desc: PairDescriptor) -> VanishingVerdict:
    """H^{1,1}(X_Gamma) is C whenever the signature (1, 1) is not attained."""
    r1 = attainable_rminus(desc, 1)
    if 1 in r1:
        return VanishingVerdict(Verdict.UNCONSTRAINED, f"(1,1) is attained; R+=1 gives {_fmt(r1)}")
    return VanishingVerdict(Verdict.ISOMORPHIC_TO_C, f"(1,1) is not attained; R+=1 gives {_fmt(r1)}")


def low_degree_vanishing(desc: PairDescriptor, p: int, q: int) -> bool:
    """H^{p,q}(X_Gamma) = 0 for p != q with p + q below the real rank."""
    return p != q and p + q < desc.real_rank


# --- Hodge diamonds ----------------------------------------------------------

@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers h^{p,q} for 0 <= p, q <= dim; ``None`` marks an unknown entry.

    Entries outside the square are 0.  Entries inside the square that are not
    listed are unknown.
    """

    dim: int
    entries: Mapping[tuple[int, int], int | None] = field(default_factory=dict)
    symmetric: bool = False

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionMismatch(f"negative dimension {self.dim}")
        clean = {}
        for (p, q), v in self.entries.items():
            if not (0 <= p <= self.dim and 0 <= q <= self.dim):
                if v not in (0, None):
                    raise DimensionMismatch(f"h^({p},{q})={v} lies outside a diamond of dim {self.dim}")
                continue
            if v is not None and (not isinstance(v, int) or v < 0):
                raise ValueError(f"h^({p},{q}) must be a nonnegative integer, got {v!r}")
            clean[(p, q)] = v
        object.__setattr__(self, "entries", clean)
        if self.symmetric:
            for (p, q), v in clean.items():
                w = clean.get((q, p))
                if v is not None and w is not None and v != w:
                    raise ValueError(f"h^({p},{q})={v} but h^({q},{p})={w} in a symmetric diamond")

    def __getitem__(self, pq: tuple[int, int]) -> int | None:
        p, q = pq
        if not (0 <= p <= self.dim and 0 <= q <= self.dim):
            return 0
        return self.entries.get((p, q))

    def is_fully_known(self) -> bool:
        return all(self[p, q] is not None for p in range(self.dim + 1) for q in range(self.dim + 1))

    def is_hodge_symmetric(self) -> bool:
        return all(
            self[p, q] is None or self[q, p] is None or self[p, q] == self[q, p]
            for p in range(self.dim + 1)
            for q in range(self.dim + 1)
        )

    def euler_characteristic(self) -> int | None:
        total = 0
        for p in range(self.dim + 1):
            for q in range(self.dim + 1):
                v = self[p, q]
                if v is None:
                    return None
                total += (-1) ** (p + q) * v
        return total

    def to_json_dict(self) -> dict:
        rows = []
        for p in range(self.dim + 1):
            for q in range(self.dim + 1):
                v = self[p, q]
                rows.append({"p": p, "q": q, "value": "unknown" if v is None else v})
        out = {"dim": self.dim, "entries": rows}
        if self.symmetric:
            out["symmetric"] = True
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "HodgeDiamond":
        """Parse ``{"dim": int, "entries": [{"p", "q", "value": int | "unknown"}]}``.

        An optional boolean ``"symmetric"`` key asks for Hodge symmetry to be
        enforced.  Raises ValueError on any schema violation.
        """
        if not isinstance(data, Mapping) or set(data) - {"dim", "entries", "symmetric"}:
            raise ValueError("diamond must be an object with keys dim, entries[, symmetric]")
        dim = data.get("dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ValueError(f"dim must be a nonnegative integer, got {dim!r}")
        raw = data.get("entries", [])
        if not isinstance(raw, list):
            raise ValueError("entries must be a list")
        entries: dict[tuple[int, int], int | None] = {}
        for item in raw:
            if not isinstance(item, Mapping) or set(item) != {"p", "q", "value"}:
                raise ValueError(f"bad entry {item!r}")
            p, q, v = item["p"], item["q"], item["value"]
            if not all(isinstance(k, int) and not isinstance(k, bool) for k in (p, q)):
                raise ValueError(f"p and q must be integers in {item!r}")
            if v == "unknown":
                v = None
            elif not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"value must be a nonnegative integer or 'unknown' in {item!r}")
            if (p, q) in entries:
                raise ValueError(f"duplicate entry ({p},{q})")
            entries[(p, q)] = v
        symmetric = data.get("symmetric", False)
        if not isinstance(symmetric, bool):
            raise ValueError("symmetric must be a boolean")
        return cls(dim, entries, symmetric)

    @classmethod
    def from_json(cls, text: str) -> "HodgeDiamond":
        return cls.from_json_dict(json.loads(text))


def leray_hirsch(
    x_diamond: HodgeDiamond,
    fiber_betti: Iterable[int],
    base_dim: int | None = None,
) -> HodgeDiamond:
    """h^{p,q}(Y) = sum_r h^{p-r,q-r}(X) * b_2r(K/H).

    A sum is unknown as soon as one term pairs an unknown base entry with a
    nonzero Betti number.  ``base_dim``, when given, must equal the base
    diamond's dimension.
    """
    b = list(fiber_betti)
    if not b or any(not isinstance(v, int) or v < 0 for v in b):
        raise ValueError(f"fiber Betti numbers must be a nonempty list of nonnegative ints, got {b}")
    if base_dim is not None and base_dim != x_diamond.dim:
        raise DimensionMismatch(f"base diamond has dim {x_diamond.dim}, expected {base_dim}")
    dim = x_diamond.dim + len(b) - 1
    out: dict[tuple[int, int], int | None] = {}
    for p in range(dim + 1):
        for q in range(dim + 1):
            total: int | None = 0
            for r, br in enumerate(b):
                if br == 0:
                    continue
                h = x_diamond[p - r, q - r]
                if h is None:
                    total = None
                    break
                total += h * br
            out[(p, q)] = total
    return HodgeDiamond(dim, out, x_diamond.symmetric)


# --- Picard groups -------------------------------------------------------------

@dataclass(frozen=True)
class PicardReport:
    rank_free_part: int | None
    torsion: str | None
    c1_isomorphism: bool
    y_gamma_extra_rank: int
    y_split: bool
    reason: str


def _pic_x_cases(desc: PairDescriptor) -> tuple[bool, bool]:
    """(rank of Pic(X_Gamma) is 1, c1 : Pic -> H^2 is an isomorphism) for the known cases."""
    t = desc.cartan_type
    if t is CartanType.AIII:
        m, n = desc.params
        return (m >= 2 and (m, n) != (2, 2), m >= 3)
    if t is CartanType.CI:
        return (desc.n >= 3, desc.n >= 4)
    if t is CartanType.DIII:
        return (desc.n >= 5, desc.n >= 4)
    if t.is_exceptional:
        return (True, True)
    return (False, False)


def picard_reports(
    desc: PairDescriptor,
    parabolic_subset: Iterable[int],
    assume_h02_zero: bool = False,
) -> PicardReport:
    datum = build_root_datum(desc)
    subset = check_parabolic_subset(datum, parabolic_subset)
    extra = len(datum.compact_simple_indices) - len(subset)

    rank_one, c1_iso = _pic_x_cases(desc)
    notes = []
    if rank_one:
        notes.append("rank Pic(X) = 1 since (1,1) is not attained and G is simple")
    else:
        notes.append(f"rank Pic(X) not determined for {desc.label}")
    if c1_iso:
        notes.append("c1: Pic(X) -> H^2(X,Z) is an isomorphism")

    derived = vanish_h0q(desc, 2).value is Verdict.ZERO
    if assume_h02_zero and derived:
        notes.append("H^(0,2)(X)=0 assumed and also forced by signatures")
    elif assume_h02_zero:
        notes.append("H^(0,2)(X)=0 assumed")
    elif derived:
        notes.append("H^(0,2)(X)=0 forced by signatures")
    split = assume_h02_zero or derived
    if split:
        notes.append(f"Pic(Y) = Pic(X) + Z^{extra}")
    else:
        notes.append("Pic(Y) split not established: H^(0,2)(X) may be nonzero")

    return PicardReport(
        rank_free_part=1 if rank_one else None,
        torsion=TORSION_SYMBOL if c1_iso else None,
        c1_isomorphism=c1_iso,
        y_gamma_extra_rank=extra,
        y_split=split,
        reason="; ".join(notes),
    )
