"""Affine-linear forms over exact rationals in a fixed tuple of formal variables.

Used for symbolic exponents in the coordinates (l1, ..., lm, t) and for the
arguments of formal zeta/L factors.  Forms support the ring operations needed
by the vector helpers in :mod:`weylcalc.rootspace`, so signed permutations and
block projections apply verbatim to vectors of forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AffineForm:
    """sum_i coeffs[i] * x_i + const, with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]
    const: Fraction = Fraction(0)

    @classmethod
    def constant(cls, value, nvars: int) -> "AffineForm":
        return cls((Fraction(0),) * nvars, Fraction(value))

    @classmethod
    def variable(cls, index: int, nvars: int) -> "AffineForm":
        coeffs = [Fraction(0)] * nvars
        coeffs[index] = Fraction(1)
        return cls(tuple(coeffs), Fraction(0))

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> "AffineForm":
        if isinstance(other, AffineForm):
            if other.nvars != self.nvars:
                raise ValueError("affine forms over different variable tuples")
            return other
        return AffineForm.constant(other, self.nvars)

    def __add__(self, other) -> "AffineForm":
        o = self._coerce(other)
        return AffineForm(
            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.const + o.const
        )

    __radd__ = __add__

    def __sub__(self, other) -> "AffineForm":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "AffineForm":
        return -self + other

    def __neg__(self) -> "AffineForm":
        return AffineForm(tuple(-a for a in self.coeffs), -self.const)

    def __mul__(self, scalar) -> "AffineForm":
        c = Fraction(scalar)
        return AffineForm(tuple(a * c for a in self.coeffs), self.const * c)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "AffineForm":
        return self * (Fraction(1) / Fraction(scalar))

    def evaluate(self, point) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("evaluation point has the wrong arity")
        acc = self.const
        for a, x in zip(self.coeffs, point):
            acc += a * Fraction(x)
        return acc

    def is_zero(self) -> bool:
        return self.const == 0 and all(a == 0 for a in self.coeffs)

    def is_constant(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def directional_coefficient(self, direction) -> Fraction:
        """Derivative along a direction vector (the linear part paired with it)."""
        return sum(
            (a * Fraction(d) for a, d in zip(self.coeffs, direction)), Fraction(0)
        )

    def render(self, names: tuple[str, ...]) -> str:
        if len(names) != self.nvars:
            raise ValueError("need one name per variable")
        pieces: list[str] = []
        for a, name in zip(self.coeffs, names):
            if a == 0:
                continue
            if a == 1:
                term = name
            elif a == -1:
                term = f"-{name}"
            else:
                term = f"{a}*{name}"
            if pieces and not term.startswith("-"):
                pieces.append("+" + term)
            else:
                pieces.append(term)
        if self.const != 0 or not pieces:
            c = str(self.const)
            if pieces and not c.startswith("-"):
                pieces.append("+" + c)
            else:
                pieces.append(c)
        return "".join(pieces)


AffineVector = tuple  # tuple of AffineForm sharing one variable tuple


def constant_vector(values, nvars: int) -> AffineVector:
    return tuple(AffineForm.constant(v, nvars) for v in values)


def evaluate_vector(vec: AffineVector, point) -> tuple[Fraction, ...]:
    return tuple(f.evaluate(point) for f in vec)
