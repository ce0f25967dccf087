"""Exact-rational root-space computations for Sp_N (type C) and GL_N (type A).

The character lattice of the diagonal torus is identified with Q^N and the
pairing against coweights is the standard dot product.  Everything here is
pure and exact; vectors are tuples of ``fractions.Fraction`` (or of affine
forms, which support the same ring operations).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compositions import Composition, SpComposition
from .weyl import positive_roots

Vector = tuple  # length-N tuple of Fraction (or AffineForm) coordinates


def vector(*coords) -> Vector:
    return tuple(Fraction(c) for c in coords)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def dot(u: Vector, v: Vector):
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


@dataclass(frozen=True)
class RestrictedRoot:
    """A positive root of type C ('minus': e_i-e_j, 'plus': e_i+e_j, 'long': 2e_i)."""

    kind: str
    i: int
    j: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("minus", "plus", "long"):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind in ("minus", "plus") and not self.i < self.j:
            raise ValueError("pair roots need i < j")

    def as_vector(self, n: int) -> Vector:
        v = [Fraction(0)] * n
        if self.kind == "minus":
            v[self.i - 1], v[self.j - 1] = Fraction(1), Fraction(-1)
        elif self.kind == "plus":
            v[self.i - 1], v[self.j - 1] = Fraction(1), Fraction(1)
        else:
            v[self.i - 1] = Fraction(2)
        return tuple(v)

    def coroot_pairing(self, lam: Vector):
        """<lam, alpha^vee>: lam_i - lam_j, lam_i + lam_j, or lam_i."""
        if self.kind == "minus":
            return lam[self.i - 1] - lam[self.j - 1]
        if self.kind == "plus":
            return lam[self.i - 1] + lam[self.j - 1]
        return lam[self.i - 1]


def type_c_positive_roots(n: int) -> list[RestrictedRoot]:
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(RestrictedRoot("minus", i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(RestrictedRoot("plus", i, j))
    for i in range(1, n + 1):
        out.append(RestrictedRoot("long", i))
    return out


@dataclass(frozen=True)
class ExponentDecomposition:
    """lambda = lambda_Q + lambda^Q with lambda_Q constant on blocks, zero on Sp_r."""

    lambda_Q: Vector
    lambda_upper_Q: Vector


def _block_data(comp):
    if isinstance(comp, SpComposition):
        return comp.gl_blocks(), comp.sp_block()
    blocks = comp.blocks()
    n = comp.total
    from .compositions import IntegerInterval

    return blocks, IntegerInterval(n + 1, n)


def project_vector(lam: Vector, comp) -> Vector:
    """Orthogonal projection onto the split-center directions of the Levi.

    Each GL block is replaced by its average; the anisotropic block is sent
    to zero (its split center is trivial).  For a GL composition there is no
    anisotropic part and every block is averaged.
    """
    blocks, sp = _block_data(comp)
    out = list(lam)
    for block in blocks:
        members = block.members()
        total = lam[members[0] - 1]
        for i in members[1:]:
            total = total + lam[i - 1]
        if isinstance(total, int):
            total = Fraction(total)
        avg = total / len(block)
        for i in block:
            out[i - 1] = avg
    for i in sp:
        out[i - 1] = lam[i - 1] * 0
    return tuple(out)


def project(lam: Vector, comp) -> ExponentDecomposition:
    lam_q = project_vector(lam, comp)
    return ExponentDecomposition(lam_q, sub(lam, lam_q))


def rho(comp: SpComposition) -> Vector:
    """Half-sum of the roots in the unipotent radical, as a torus character.

    Closed form x_j = N + (1 - n_j)/2 - nu_{j-1} on the j-th GL block and 0
    on the anisotropic block.
    """
    n = comp.total
    out = [Fraction(0)] * n
    acc = 0
    for p in comp.parts:
        x = Fraction(n) + Fraction(1 - p, 2) - acc
        for i in range(acc + 1, acc + p + 1):
            out[i - 1] = x
        acc += p
    return tuple(out)


def rho_brute(comp: SpComposition) -> Vector:
    """Oracle: half the sum of all positive roots outside the Levi."""
    from .weyl import levi_roots

    n = comp.total
    levi = levi_roots(comp)
    total = [Fraction(0)] * n
    for beta in positive_roots(n, "sp"):
        if beta not in levi:
            for i, x in enumerate(beta):
                total[i] += x
    return tuple(x / 2 for x in total)


def rho_zero(n: int) -> Vector:
    """rho of the Borel: (N, N-1, ..., 1)."""
    return tuple(Fraction(n + 1 - i) for i in range(1, n + 1))


def coweight_cuts(comp: SpComposition) -> tuple[int, ...]:
    """The indices nu_1 < ... < nu_k at which the fundamental coweights pair."""
    if comp.is_full_group:
        return ()
    return comp.partial_sums()


def coweight_pairings(lam: Vector, comp: SpComposition) -> tuple:
    """<lam, varpi_{nu_j}> = sum of the first nu_j coordinates, j = 1..k."""
    out = []
    acc = Fraction(0)
    cuts = coweight_cuts(comp)
    pos = 0
    for idx, x in enumerate(lam, start=1):
        acc = acc + x
        if pos < len(cuts) and idx == cuts[pos]:
            out.append(acc)
            pos += 1
    return tuple(out)


def is_negative_exponent(lam: Vector, comp: SpComposition) -> bool:
    """Square-integrability sign test: all coweight pairings strictly negative."""
    if comp.is_full_group:
        raise ValueError("negativity test needs a proper parabolic")
    return all(p < 0 for p in coweight_pairings(lam, comp))
