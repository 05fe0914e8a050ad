"""Variational data along a rational invariant curve.

A planar polynomial system (P, Q) induces the foliation d(eta)/d(xi) =
Q/P away from P = 0.  Along an integral curve eta = phi(xi), the
solution displacement w = eta - phi(xi) satisfies w' = R(xi, phi + w),
and the Taylor coefficients of the right-hand side in w,

    kappa_k(xi) = k! * [w^k] R(xi, phi(xi) + w),

are exact rational functions.  kappa_1 drives the first-order equation
Omega' = kappa_1 * Omega; its solution decomposes as Omega =
e^{E(xi)} * prod_c p_c(xi)^{r_c} with a rational exponential part E and
one residue r_c per irreducible pole class of kappa_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Tuple

from .exactalg import (
    BiPoly,
    FactorClass,
    FieldSpec,
    QuadExt,
    RatFunc,
    UPoly,
    eval_mod,
    partial_fractions,
    poly_xgcd,
)


class CurveInSingularLocusError(ValueError):
    """The curve lies inside P = 0, so the foliation is undefined on it."""


@dataclass(frozen=True)
class PlanarSystem:
    """The polynomial system xi' = P(xi, eta), eta' = Q(xi, eta)."""

    P: BiPoly
    Q: BiPoly
    field: FieldSpec
    label: str = ""

    def __post_init__(self):
        if self.P.is_zero():
            raise ValueError("P must be nonzero (the foliation Q/P must exist)")
        if self.P.d != self.field.d or self.Q.d != self.field.d:
            raise ValueError("P, Q and the field disagree on d")


@dataclass(frozen=True)
class CurveData:
    """The candidate integral curve eta = phi(xi)."""

    phi: RatFunc


@dataclass(frozen=True)
class VariationalData:
    """kappa_1..kappa_K, each reduced, for one system and curve."""

    system: PlanarSystem
    curve: CurveData
    K: int
    kappas: Tuple[RatFunc, ...]

    def kappa(self, k: int) -> RatFunc:
        if not 1 <= k <= self.K:
            raise IndexError(f"order {k} outside 1..{self.K}")
        return self.kappas[k - 1]


def verify_integral_curve(sys: PlanarSystem, curve: CurveData) -> bool:
    """True iff Q(xi, phi) - phi' * P(xi, phi) vanishes identically."""
    p_on_curve = sys.P.eval_eta(curve.phi)
    if p_on_curve.is_zero():
        raise CurveInSingularLocusError(
            "P vanishes identically on the curve"
        )
    q_on_curve = sys.Q.eval_eta(curve.phi)
    return (q_on_curve - curve.phi.derivative() * p_on_curve).is_zero()


def kappa_coefficients(
    sys: PlanarSystem, curve: CurveData, K: int
) -> VariationalData:
    """Expand R = Q/P along the curve: kappa_k = k! [w^k] R(xi, phi + w).

    Numerator and denominator of R are expanded exactly in the normal
    displacement w; the denominator series is inverted order by order,
    which is valid because P does not vanish identically on the curve.
    The zeroth coefficient must reproduce phi' (the curve is integral).
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    phi = curve.phi
    p_series = sys.P.shift_eta(phi, K)
    q_series = sys.Q.shift_eta(phi, K)
    p0 = p_series[0]
    if p0.is_zero():
        raise CurveInSingularLocusError(
            "P vanishes identically on the curve"
        )
    r_series: List[RatFunc] = [q_series[0] / p0]
    if r_series[0] != phi.derivative():
        raise ValueError(
            "curve is not an integral curve: [w^0] of Q/P differs from phi'"
        )
    for k in range(1, K + 1):
        acc = q_series[k]
        for i in range(1, k + 1):
            acc = acc - p_series[i] * r_series[k - i]
        r_series.append(acc / p0)
    kappas = tuple(
        factorial(k) * r_series[k] for k in range(1, K + 1)
    )
    return VariationalData(system=sys, curve=curve, K=K, kappas=kappas)


def kappa_by_differentiation(
    sys: PlanarSystem, curve: CurveData, K: int
) -> Tuple[RatFunc, ...]:
    """Oracle route: kappa_k = (d/d eta)^k (Q/P) restricted to the curve.

    Repeated symbolic differentiation of the quotient followed by
    substitution of eta = phi.  Slower than the series route; retained
    for cross-checking.
    """
    phi = curve.phi
    num, den = sys.Q, sys.P
    out: List[RatFunc] = []
    for _ in range(1, K + 1):
        # d/d eta (num/den) = (num_eta * den - num * den_eta) / den^2
        num, den = (
            num.derivative_eta() * den - num * den.derivative_eta(),
            den * den,
        )
        den_val = den.eval_eta(phi)
        if den_val.is_zero():
            raise CurveInSingularLocusError(
                "P vanishes identically on the curve"
            )
        out.append(num.eval_eta(phi) / den_val)
    return tuple(out)


@dataclass(frozen=True)
class ResidueEntry:
    """The residue of kappa_1 on one irreducible pole class.

    The residue is stored as an element of K[xi]/(p): a polynomial
    representative of degree < deg p.  It is one number exactly when the
    representative is constant; otherwise the conjugate roots of p carry
    distinct (necessarily irrational) residues.
    """

    cls: FactorClass
    residue: UPoly

    def constant_value(self) -> Optional[QuadExt]:
        if self.residue.degree > 0:
            return None
        return self.residue.coeff(0)

    def is_rational_number(self) -> bool:
        value = self.constant_value()
        return value is not None and value.is_rational()


@dataclass(frozen=True)
class OmegaData:
    """Omega = e^{E} * prod_c p_c^{r_c}, plus the regularity flag.

    E carries the polynomial part and all pole orders >= 2 of the
    antiderivative of kappa_1 (zero-constant normalization); the residues
    carry the order-1 pole data.  regular_at_infinity records
    deg kappa_1_den > deg kappa_1_num.
    """

    kappa1: RatFunc
    exp_part: RatFunc
    residues: Tuple[ResidueEntry, ...]
    regular_at_infinity: bool

    def reconstruct(self) -> RatFunc:
        """E' + sum_c (r_c * p_c' mod p_c)/p_c; must equal kappa_1."""
        acc = self.exp_part.derivative()
        for entry in self.residues:
            p = entry.cls.factor
            acc = acc + RatFunc(
                eval_mod(entry.residue * p.derivative(), p), p
            )
        return acc


def omega_decompose(kappa1: RatFunc) -> OmegaData:
    """Split the antiderivative of kappa_1 into exponential and log data.

    Partial fractions give kappa_1 = poly + sum n_{c,i}/p_c^i.  The
    polynomial part integrates into E.  Each order-i >= 2 term is reduced
    by one order using n = u*p + v*p', since int(v*p'/p^i) contributes
    the rational term -v/((i-1) p^{i-1}); iterating leaves only simple
    poles, whose class residues are n_c/(p_c') in K[xi]/(p_c).
    """
    d = kappa1.d
    regular = kappa1.den.degree > kappa1.num.degree
    pf = partial_fractions(kappa1)
    exp_part = RatFunc.from_poly(pf.poly_part.antiderivative())

    # Group the term numerators per class: digits[order] = numerator.
    by_class: dict = {}
    for term in pf.terms:
        by_class.setdefault(term.factor, {})[term.order] = term.numerator
    residues: List[ResidueEntry] = []
    for p in sorted(by_class, key=lambda q: q.sort_key()):
        digits = by_class[p]
        m = max(digits)
        dp = p.derivative()
        _, _, t = poly_xgcd(p, dp)  # t * p' = 1 mod p
        zero = UPoly.zero(d)
        current = digits.get(m, zero)
        for i in range(m, 1, -1):
            v = eval_mod(current * t, p)
            u = (current - v * dp).exact_div(p)
            inv = QuadExt(1, 0, d) / (i - 1)
            exp_part = exp_part - RatFunc(v.scale(inv), p ** (i - 1))
            current = u + v.derivative().scale(inv) + digits.get(i - 1, zero)
        if not current.is_zero():
            residue = eval_mod(current * t, p)
            residues.append(
                ResidueEntry(cls=FactorClass(p, m), residue=residue)
            )
    return OmegaData(
        kappa1=kappa1,
        exp_part=exp_part,
        residues=tuple(residues),
        regular_at_infinity=regular,
    )
