"""Invariant hermitian forms via exact meromorphic continuation.

The compact-form-invariant pairing of two basis vectors vanishes off the
diagonal (radial symmetry / matching of delta derivatives), and on the
diagonal of a principal series equals

    V(n) = 4 pi * int_0^inf u^(n + (lam-1)/2) (1+u)^(-(lam+1)) du,

a Beta value inside the convergence strip |n| < (lam+1)/2.  Integration by
parts continues it beyond the strip through the exact one-step ratio

    V(n+1) / V(n) = (2n + lam + 1) / (lam - 1 - 2n),

whose denominator vanishes exactly at the reduction points.  All signs and
ratios are products of these rational steps anchored at the reference
vector (n = 0 even, 1/2 odd); the float magnitude is |ratio| times the
reference Beta value and never participates in a sign decision.

On point modules the diagonal values are the closed form

    P(k) = (-1)^k k! (m+1)(m+2)...(m+k)    (exact integers),

anchored at P(0) = 1.  The noncompact-form-invariant values are obtained
by twisting with the diagonal Cartan involution signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .exact import HalfInt, RationalLike, Sign, beta_value
from .modules import (
    BasisVector,
    Generator,
    ModuleSpec,
    PointModule,
    PrincipalSeries,
    W1Sub,
    act,
    basis_window,
    reference_index,
    require_member,
    theta_sign,
)

__all__ = [
    "POLE",
    "INDETERMINATE",
    "continuation_ratio",
    "FormValue",
    "form_diagonal",
    "form_pairing",
    "gR_form_diagonal",
    "convergence_range",
    "InvarianceReport",
    "invariance_check",
    "point_diagonal_value",
    "reference_magnitude",
]


class _Pole:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Pole"


class _Indeterminate:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Indeterminate"


POLE = _Pole()
INDETERMINATE = _Indeterminate()

RatioResult = Union[Fraction, _Pole, _Indeterminate]


def continuation_ratio(n: "HalfInt | RationalLike", lam: RationalLike) -> RatioResult:
    """Exact one-step ratio V(n+1)/V(n) = (2n+lam+1)/(lam-1-2n).

    POLE when only the denominator vanishes (this happens exactly at
    reduction points); INDETERMINATE for the single 0/0 configuration,
    which lies off the valid parameter set.
    """
    n = HalfInt.of(n)
    lam = Fraction(lam)
    numerator = n.twice + lam + 1
    denominator = lam - 1 - n.twice
    if denominator == 0:
        return POLE if numerator != 0 else INDETERMINATE
    return numerator / denominator


@dataclass(frozen=True)
class FormValue:
    """Diagonal form value as exact data relative to the reference vector.

    ``ratio_to_reference`` is absent exactly when the continuation has a
    pole; ``magnitude`` (when present) is |ratio| * reference_magnitude.
    """

    sign: Sign
    ratio_to_reference: Optional[Fraction]
    magnitude: Optional[float]
    reference_magnitude: float

    @classmethod
    def pole(cls, reference_magnitude: float) -> "FormValue":
        return cls(Sign.POLE, None, None, reference_magnitude)

    @classmethod
    def from_ratio(cls, ratio: Fraction, reference_magnitude: float) -> "FormValue":
        return cls(
            Sign.of(ratio), ratio, abs(float(ratio)) * reference_magnitude,
            reference_magnitude,
        )


def reference_magnitude(spec: ModuleSpec) -> float:
    """Float value of the diagonal form at the reference vector.

    On the open-orbit modules this is 4 pi times the Beta value of the
    convergent reference integral; on point modules the anchor is 1.
    """
    if isinstance(spec, PointModule):
        return 1.0
    ps = spec.base if isinstance(spec, W1Sub) else spec
    n0 = reference_index(ps).as_fraction
    half = (ps.lam + 1) / 2
    return 4.0 * math.pi * beta_value(half + n0, half - n0)


def _ratio_walk(n: HalfInt, ps: PrincipalSeries) -> RatioResult:
    """Product of continuation steps from the reference index to n."""
    ratio = Fraction(1)
    j = reference_index(ps)
    while j < n:
        step = continuation_ratio(j, ps.lam)
        if not isinstance(step, Fraction):
            return step
        ratio *= step
        j = j + 1
    while j > n:
        j = j - 1
        step = continuation_ratio(j, ps.lam)
        if not isinstance(step, Fraction) or step == 0:
            return POLE
        ratio /= step
    return ratio


def point_diagonal_value(m: int, k: int) -> int:
    """Closed-form diagonal value (-1)^k k! (m+1)(m+2)...(m+k) on a point module."""
    value = math.factorial(k)
    for j in range(1, k + 1):
        value *= m + j
    return -value if k % 2 else value


def form_diagonal(v: BasisVector, spec: ModuleSpec) -> FormValue:
    """Compact-form-invariant diagonal value (v, v), exact sign and ratio.

    On a reducible principal series the module-level pairing is well
    defined only on the constituents, so every ambient value reports a
    pole; evaluate on W1Sub or the point modules instead.
    """
    require_member(v, spec)
    ref_mag = reference_magnitude(spec)
    if isinstance(spec, PointModule):
        k = v.index.twice // 2
        return FormValue.from_ratio(Fraction(point_diagonal_value(spec.m, k)), ref_mag)
    if isinstance(spec, PrincipalSeries):
        if spec.reducible:
            return FormValue.pole(ref_mag)
        ratio = _ratio_walk(v.index, spec)
    else:  # W1Sub: every index sits inside the convergence strip
        ratio = _ratio_walk(v.index, spec.base)
    if not isinstance(ratio, Fraction):
        return FormValue.pole(ref_mag)
    return FormValue.from_ratio(ratio, ref_mag)


def form_pairing(v: BasisVector, w: BasisVector, spec: ModuleSpec) -> FormValue:
    """Pairing (v, w): zero off the diagonal, form_diagonal on it."""
    require_member(v, spec)
    require_member(w, spec)
    if v != w:
        return FormValue.from_ratio(Fraction(0), reference_magnitude(spec))
    return form_diagonal(v, spec)


def gR_form_diagonal(v: BasisVector, spec: ModuleSpec) -> FormValue:
    """Noncompact-form-invariant diagonal value (theta v, v), exact."""
    base = form_diagonal(v, spec)
    if base.sign is Sign.POLE:
        return base
    t = theta_sign(v, spec)
    return FormValue.from_ratio(t * base.ratio_to_reference, base.reference_magnitude)


def convergence_range(spec: PrincipalSeries) -> List[HalfInt]:
    """Basis indices with -(lam+1)/2 < n < (lam+1)/2 (strict, exact)."""
    bound2 = spec.lam + 1  # strict bound on |2n|
    res = spec.parity.twice_residue
    hi = math.ceil(bound2) - 1
    while Fraction(hi) >= bound2 or hi % 2 != res:
        hi -= 1
    return [HalfInt(tw) for tw in range(-hi, hi + 1, 2)] if hi >= 0 else []


def _u_ratio(v: BasisVector, spec: ModuleSpec) -> Fraction:
    value = form_diagonal(v, spec).ratio_to_reference
    if value is None:
        raise ValueError(f"form has a pole at {v} on {spec}")
    return value


@dataclass(frozen=True)
class InvarianceReport:
    """Exact invariance sweep; failures list the first violating pairs."""

    spec: ModuleSpec
    bound: int
    ok: bool
    failures: Tuple[str, ...]


def invariance_check(spec: ModuleSpec, bound: int) -> InvarianceReport:
    """Verify both invariance laws exactly on all window pairs.

    Compact form:    (e+ u, w) = (u, e- w)  and  (h u, w) = (u, h w).
    Noncompact form: (e+ u, w) = -(u, e- w).

    A generator moves an index by at most one step and all pairings reduce
    to the diagonal, so a pair (u, w) can only violate a law when w is u
    or a window neighbor of u; every such pair is checked as an exact
    identity between rational ratio products.
    """
    failures = []
    window = basis_window(spec, bound)
    in_window = set(window)
    uratio = {v: _u_ratio(v, spec) for v in window}
    gratio = {v: theta_sign(v, spec) * uratio[v] for v in window}

    def pair(comb, w: BasisVector, table) -> Fraction:
        return comb.coeff(w) * table[w]

    laws = (
        (Generator.E_PLUS, Generator.E_MINUS, 1, uratio, "(e+u,w)=(u,e-w)"),
        (Generator.H, Generator.H, 1, uratio, "(hu,w)=(u,hw)"),
        (Generator.E_PLUS, Generator.E_MINUS, -1, gratio, "(e+u,w)=-(u,e-w)"),
    )
    for u in window:
        neighbors = [w for w in (BasisVector(u.index - 1), u, BasisVector(u.index + 1))
                     if w in in_window]
        for gen_l, gen_r, flip, table, law in laws:
            left_comb = act(gen_l, u, spec)
            for w in neighbors:
                lhs = pair(left_comb, w, table)
                rhs = flip * pair(act(gen_r, w, spec), u, table)
                if lhs != rhs:
                    failures.append(f"{law} fails at u={u}, w={w}: {lhs} != {rhs}")
    return InvarianceReport(spec, bound, not failures, tuple(failures))
