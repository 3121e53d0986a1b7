"""Theorem-checking layer: sign conjecture, Jantzen crossing, unitarity.

Everything here is decided on exact rationals.  The central statement
being verified: on an irreducible module realized with lowest Hodge index
a (the codimension of the supporting orbit), the compact-form-invariant
diagonal value at Hodge level p has sign (-1)^(p-a).  Unitarity is then
read off from the noncompact-form signs, which differ by the diagonal
Cartan involution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from .exact import RationalLike, Sign
from .filtrations import hodge_level, w1_member
from .forms import form_diagonal, gR_form_diagonal
from .modules import (
    BasisVector,
    ModuleSpec,
    Parity,
    PointModule,
    PrincipalSeries,
    W1Sub,
    basis_window,
    constituents,
    is_reduction_point,
)

__all__ = [
    "Definiteness",
    "ConjectureRecord",
    "ConjectureReport",
    "verify_conjecture",
    "JantzenRecord",
    "JantzenReport",
    "jantzen_crossing",
    "definiteness",
    "ClassificationEntry",
    "ClassificationReport",
    "classify",
]


class Definiteness(Enum):
    POS_DEF = "PosDef"
    NEG_DEF = "NegDef"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class ConjectureRecord:
    vector: BasisVector
    hodge_level: int
    codim: int
    sign: Sign
    expected: Sign

    @property
    def ok(self) -> bool:
        return self.sign is self.expected


@dataclass(frozen=True)
class ConjectureReport:
    spec: ModuleSpec
    bound: int
    records: Tuple[ConjectureRecord, ...]

    @property
    def verdict(self) -> bool:
        return all(r.ok for r in self.records)


def verify_conjecture(spec: ModuleSpec, bound: int) -> ConjectureReport:
    """Check sign(v, v) = (-1)^(hodge_level - codim) for every window vector.

    A pole (reducible ambient module) is recorded as a mismatch, so the
    report fails closed.
    """
    records = []
    a = spec.codim
    for v in basis_window(spec, bound):
        p = hodge_level(v, spec)
        expected = Sign.POSITIVE if (p - a) % 2 == 0 else Sign.NEGATIVE
        records.append(ConjectureRecord(v, p, a, form_diagonal(v, spec).sign, expected))
    return ConjectureReport(spec, bound, tuple(records))


@dataclass(frozen=True)
class JantzenRecord:
    vector: BasisVector
    sign_below: Sign
    sign_above: Sign
    w1: bool

    @property
    def preserved(self) -> bool:
        return self.sign_below is self.sign_above


@dataclass(frozen=True)
class JantzenReport:
    lambda0: Fraction
    parity: Parity
    epsilon: Fraction
    bound: int
    records: Tuple[JantzenRecord, ...]

    @property
    def verdict(self) -> bool:
        """Signs persist across the reduction point exactly on W1."""
        return all(r.preserved == r.w1 for r in self.records)


def jantzen_crossing(
    lambda0: RationalLike, parity: Parity, epsilon: RationalLike, bound: int
) -> JantzenReport:
    """Compare exact diagonal signs at lambda0 -/+ epsilon with W1 membership.

    epsilon must satisfy 0 < epsilon < 1/2, which keeps both sample
    parameters strictly between neighboring reduction points.
    """
    lambda0 = Fraction(lambda0)
    epsilon = Fraction(epsilon)
    if not is_reduction_point(lambda0, parity) or lambda0 <= 0:
        raise ValueError(
            f"{lambda0} is not a positive reduction point for {parity.value} parity"
        )
    if not 0 < epsilon < Fraction(1, 2):
        raise ValueError(f"epsilon must lie in (0, 1/2), got {epsilon}")
    below = PrincipalSeries(lambda0 - epsilon, parity)
    above = PrincipalSeries(lambda0 + epsilon, parity)
    records = []
    for v in basis_window(below, bound):
        records.append(
            JantzenRecord(
                v,
                form_diagonal(v, below).sign,
                form_diagonal(v, above).sign,
                w1_member(v, lambda0, parity),
            )
        )
    return JantzenReport(lambda0, parity, epsilon, bound, tuple(records))


def _g_sign(v: BasisVector, spec: ModuleSpec) -> Sign:
    return gR_form_diagonal(v, spec).sign


def definiteness(spec: ModuleSpec, bound: Optional[int] = None) -> Definiteness:
    """Exact definiteness of the noncompact-form on the whole basis.

    Point modules have constant positive signs.  On a principal series the
    Hodge level grows by exactly one per step outside the convergence
    strip while the involution sign alternates, so the sign sequence is
    constant on both tails; scanning past the last level jump therefore
    decides the infinite basis exactly.  ``bound`` may widen the scanned
    window but cannot change the verdict.
    """
    if isinstance(spec, PrincipalSeries) and spec.reducible:
        raise ValueError(f"{spec} is reducible; classify its constituents instead")
    if isinstance(spec, PointModule):
        scan = basis_window(spec, max(bound or 0, 2))
    elif isinstance(spec, W1Sub):
        scan = basis_window(spec, spec.dim)
    else:
        tail_start = math.ceil((spec.lam + 1) / 2) + 1
        scan = basis_window(spec, max(bound or 0, tail_start))
    signs = {_g_sign(v, spec) for v in scan}
    if signs == {Sign.POSITIVE}:
        return Definiteness.POS_DEF
    if signs == {Sign.NEGATIVE}:
        return Definiteness.NEG_DEF
    return Definiteness.INDEFINITE


@dataclass(frozen=True)
class ClassificationEntry:
    constituent: ModuleSpec
    hermitian: bool
    definiteness: Definiteness

    @property
    def unitary(self) -> bool:
        return self.definiteness is not Definiteness.INDEFINITE


@dataclass(frozen=True)
class ClassificationReport:
    lam: Fraction
    parity: Parity
    entries: Tuple[ClassificationEntry, ...]


def classify(lam: RationalLike, parity: Parity) -> ClassificationReport:
    """Decompose into constituents and decide unitarity of each by exact signs.

    Every constituent here is hermitian for structural reasons: the Cartan
    involution is inner and fixes all three orbits and their local
    systems, so both invariant forms exist.  Unitary means the noncompact
    form is definite of either sign.
    """
    lam = Fraction(lam)
    ps = PrincipalSeries(lam, parity)
    entries = tuple(
        ClassificationEntry(part, True, definiteness(part)) for part in constituents(ps)
    )
    return ClassificationReport(lam, parity, entries)
