"""Curves A(Y) = B(X) with coprime degrees: points, fibres, pole orders.

``x`` has pole order ``a = deg A`` and ``y`` has pole order ``b = deg B`` at the
single point at infinity, so the monomial ``x^i y^j`` has pole order
``i*a + j*b``.  A fibre of ``y`` lies over one value of ``y`` and has at most
``b`` points; a fibre of ``x`` has at most ``a`` points.
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import DegreesNotCoprime, DegreeTooSmall, ZeroPolynomial
from .galois import FieldSpec, UniPoly, poly_eval_all
from .semigroup import NumericalSemigroup


class Axis(str, enum.Enum):
    """Which coordinate is constant on a fibre.

    ``Y``: fibres of y, recovery polynomials in x.  ``X``: the reverse.
    """

    Y = "y"
    X = "x"

    @classmethod
    def parse(cls, value) -> "Axis":
        if isinstance(value, Axis):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"orientation must be 'y' or 'x', got {value!r}") from None


class AffinePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Fibre:
    base: int
    axis: Axis
    points: tuple[AffinePoint, ...]
    split: bool

    def __len__(self):
        return len(self.points)

    @property
    def abscissae(self) -> tuple[int, ...]:
        """Values of the non-constant coordinate, one per point."""
        if self.axis is Axis.Y:
            return tuple(P.x for P in self.points)
        return tuple(P.y for P in self.points)


@dataclass(frozen=True)
class PowerSums:
    role: str  # "B" for fibres of y, "A" for fibres of x
    degree: int
    pi: tuple[int, ...]

    @property
    def all_zero(self) -> bool:
        return not any(self.pi)


def is_linearized(f: UniPoly, p: int) -> bool:
    """Nonzero coefficients only at exponents 1, p, p^2, ...; linear term nonzero."""
    if f[1] == 0:
        return False
    powers = set()
    e = 1
    while e <= f.degree:
        powers.add(e)
        e *= p
    return all(c == 0 or i in powers for i, c in enumerate(f.coeffs))


@dataclass(frozen=True, eq=False)
class SepCurve:
    field: FieldSpec
    A: UniPoly
    B: UniPoly
    semigroup: NumericalSemigroup
    irreducibility_certificate: str
    weierstrass_certificate: str

    @property
    def a(self) -> int:
        return self.A.degree

    @property
    def b(self) -> int:
        return self.B.degree

    @property
    def genus(self) -> int:
        return self.semigroup.genus

    @property
    def semigroup_certified(self) -> bool:
        return self.weierstrass_certificate != "coprime-assumed"

    def __repr__(self):
        return f"SepCurve({self.A.pretty('Y')} = {self.B.pretty('X')} over {self.field!r})"

    def pole_orders(self, axis: Axis) -> tuple[int, int]:
        """(v(phi1), v(phi2)) for the given fibre orientation."""
        axis = Axis.parse(axis)
        return (self.b, self.a) if axis is Axis.Y else (self.a, self.b)

    def valuation(self, i: int, j: int) -> int:
        """Pole order of x^i y^j."""
        if i < 0 or j < 0:
            raise ValueError("exponents must be nonnegative")
        return i * self.a + j * self.b

    @cached_property
    def points(self) -> tuple[AffinePoint, ...]:
        """All affine rational points, sorted by (y, x)."""
        F = self.field
        bx = poly_eval_all(F, self.B)
        ay = poly_eval_all(F, self.A)
        by_value = defaultdict(list)
        for x in np.argsort(bx, kind="stable").tolist():
            by_value[int(bx[x])].append(x)
        pts = []
        for y in range(F.q):
            for x in by_value.get(int(ay[y]), ()):
                pts.append(AffinePoint(x, y))
        return tuple(pts)

    def fibres(self, axis: Axis) -> tuple[Fibre, ...]:
        axis = Axis.parse(axis)
        return self._fibres[axis]

    def split_fibres(self, axis: Axis) -> tuple[Fibre, ...]:
        return tuple(f for f in self.fibres(axis) if f.split)

    @cached_property
    def _fibres(self) -> dict:
        out = {}
        for axis in Axis:
            size = self.pole_orders(axis)[0]
            groups = defaultdict(list)
            for P in self.points:
                groups[P.y if axis is Axis.Y else P.x].append(P)
            fibres = []
            for base in sorted(groups):
                pts = sorted(groups[base], key=(lambda P: P.x) if axis is Axis.Y else (lambda P: P.y))
                fibres.append(Fibre(base, axis, tuple(pts), len(pts) == size))
            out[axis] = tuple(fibres)
        return out


def make_curve(F: FieldSpec, A, B, assert_semigroup: bool = False) -> SepCurve:
    """Validate A(Y) = B(X) and attach certificates.

    ``A`` and ``B`` are :class:`UniPoly` or coefficient sequences (canonical
    integers, lowest degree first).  Only coprime degrees are accepted; that
    alone makes A(Y) - B(X) absolutely irreducible with x, y having a single
    common pole.  The Weierstrass semigroup is certified to be <a, b> when one
    side is linearized with nonzero linear term and the other side has degree
    at least 2 prime to the characteristic; otherwise it is assumed, unless
    the caller asserts it.
    """
    A = A if isinstance(A, UniPoly) else UniPoly.from_coeffs(A)
    B = B if isinstance(B, UniPoly) else UniPoly.from_coeffs(B)
    for name, f in (("A", A), ("B", B)):
        if f.is_zero:
            raise ZeroPolynomial(f"{name} is the zero polynomial")
        if f.degree < 1:
            raise DegreeTooSmall(f"{name} must have degree >= 1")
        for c in f.coeffs:
            F.check(c)
    a, b = A.degree, B.degree
    if math.gcd(a, b) != 1:
        raise DegreesNotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)}")
    p = F.p
    if is_linearized(B, p) and a >= 2 and a % p:
        cert = "linearized-B"
    elif is_linearized(A, p) and b >= 2 and b % p:
        cert = "linearized-A"
    elif assert_semigroup:
        cert = "user-asserted"
    else:
        cert = "coprime-assumed"
    return SepCurve(F, A, B, NumericalSemigroup(a, b), "coprime-degrees", cert)


def newton_girard(F: FieldSpec, f: UniPoly, count: int) -> list[int]:
    """Power sums pi_1..pi_count of the roots of f, from its coefficients only."""
    d = f.degree
    lead_inv = F.inv(f.lead())
    lam = [F.mul(c, lead_inv) for c in f.coeffs]  # monic
    sigma = [1] + [lam[d - i] if i % 2 == 0 else F.neg(lam[d - i]) for i in range(1, d + 1)]
    pi = [F.embed(d)]
    for i in range(1, count + 1):
        s = F.mul(F.embed(i), sigma[i] if i <= d else 0)
        acc = s if i % 2 == 1 else F.neg(s)
        for j in range(1, min(i - 1, d) + 1):
            term = F.mul(pi[i - j], sigma[j])
            # minus (-1)^j * term
            acc = F.add(acc, term) if j % 2 == 1 else F.sub(acc, term)
        pi.append(acc)
    return pi[1:]


def power_sums(C: SepCurve, axis: Axis) -> PowerSums:
    """pi_1 .. pi_{deg-2} of the polynomial cutting out each fibre.

    The constant term never enters, so these are the power sums of the
    abscissae of every totally split fibre at once.
    """
    axis = Axis.parse(axis)
    f, role = (C.B, "B") if axis is Axis.Y else (C.A, "A")
    if f.degree < 2:
        raise DegreeTooSmall(f"{role} has degree {f.degree} < 2")
    return PowerSums(role, f.degree, tuple(newton_girard(C.field, f, f.degree - 2)))


class Applicability(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def one_addition_applicable(C: SepCurve, axis: Axis, V) -> Applicability:
    """Whether every codeword sums to zero over every split fibre."""
    axis = Axis.parse(axis)
    if Axis.parse(V.orientation) is not axis:
        return Applicability(False, "space orientation differs from fibre axis")
    size = C.pole_orders(axis)[0]
    if size < 2:
        return Applicability(False, "fibres have a single point")
    ps = power_sums(C, axis)
    if not ps.all_zero:
        first = next(i for i, v in enumerate(ps.pi, 1) if v)
        return Applicability(False, f"power sum pi_{first} of {ps.role} is nonzero")
    if ps.degree % C.field.p == 0:
        return Applicability(True, f"power sums vanish and char {C.field.p} divides deg {ps.role} = {ps.degree}")
    if V.epsilons[0] == 0:
        return Applicability(True, "power sums vanish and constants in phi2 are excluded (eps_0 = 0)")
    return Applicability(
        False, f"char {C.field.p} does not divide deg {ps.role} = {ps.degree} and eps_0 = 1")
