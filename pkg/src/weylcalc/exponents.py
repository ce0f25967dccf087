"""Exponent calculus at the residue point of the degenerate Eisenstein family.

The ambient group is Sp_N with N = m + 2n.  The inducing Levi has m singleton
blocks and one block of size 2n; the residue point is
lambda0 = (m, ..., 1, (1/2)^(2n)), its projection to the coarser Levi is
mu0 = (m, ..., 1, 0^(2n)) and theta0 = (0^(m), (-1/2)^(2n)) is the shift
between them.  Everything is exact; symbolic quantities are affine forms in
the variables (l1, ..., lm, t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .affine import AffineForm, AffineVector, evaluate_vector
from .compositions import Composition, SpComposition
from .parabolic import (
    Table,
    period_roots,
    sigma_of_table,
    standard_parabolic_roots,
    transport,
)
from .rootspace import (
    Vector,
    coweight_cuts,
    coweight_pairings,
    project_vector,
    rho,
    sub,
)
from .weyl import DPartition, SignedPermutation, dpartitions, w_from_D


@dataclass(frozen=True)
class ResidueContext:
    """Sizes (m, n) of the residue setup on Sp_{m+2n}."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 1:
            raise ValueError("need m >= 0 and n >= 1")

    @property
    def rank(self) -> int:
        return self.m + 2 * self.n

    @property
    def nvars(self) -> int:
        return self.m + 1

    @property
    def var_names(self) -> tuple[str, ...]:
        return tuple(f"l{i}" for i in range(1, self.m + 1)) + ("t",)

    def lambda0(self) -> Vector:
        return tuple(
            [Fraction(self.m + 1 - i) for i in range(1, self.m + 1)]
            + [Fraction(1, 2)] * (2 * self.n)
        )

    def mu0(self) -> Vector:
        return tuple(
            [Fraction(self.m + 1 - i) for i in range(1, self.m + 1)]
            + [Fraction(0)] * (2 * self.n)
        )

    def theta0(self) -> Vector:
        return tuple(
            [Fraction(0)] * self.m + [Fraction(-1, 2)] * (2 * self.n)
        )

    def mu0_point(self) -> tuple[Fraction, ...]:
        """Evaluation point (l_i = m+1-i, t = 0) for the m+1 formal variables."""
        return tuple(
            [Fraction(self.m + 1 - i) for i in range(1, self.m + 1)] + [Fraction(0)]
        )

    def lambda_var(self, i: int) -> AffineForm:
        if not 1 <= i <= self.m:
            raise ValueError(f"lambda index {i} outside [1, {self.m}]")
        return AffineForm.variable(i - 1, self.nvars)

    def t_var(self) -> AffineForm:
        return AffineForm.variable(self.m, self.nvars)

    def source_blocks(self) -> Composition:
        return Composition((1,) * self.m + (2 * self.n,))

    def inducing_levi(self) -> SpComposition:
        """The fine Levi with m singleton blocks and the 2n block, inside the Siegel."""
        return SpComposition((1,) * self.m + (2 * self.n,), 0)

    def coarse_levi(self) -> SpComposition:
        """The Levi with m singleton blocks and anisotropic rank 2n."""
        return SpComposition((1,) * self.m, 2 * self.n)

    def slotted_levi(self, i: int) -> SpComposition:
        """The Levi with the 2n block in slot i+1 among the m singletons."""
        if not 0 <= i <= self.m:
            raise ValueError(f"slot {i} outside [0, {self.m}]")
        return SpComposition((1,) * i + (2 * self.n,) + (1,) * (self.m - i), 0)

    def generic_full(self) -> AffineVector:
        """(l1, ..., lm, t, ..., t): the generic point of the fine Levi's dual."""
        forms = [self.lambda_var(i) for i in range(1, self.m + 1)]
        forms += [self.t_var()] * (2 * self.n)
        return tuple(forms)

    def generic_coarse(self) -> AffineVector:
        """(l1, ..., lm, 0, ..., 0): the generic point of the coarse dual."""
        zero = AffineForm.constant(0, self.nvars)
        forms = [self.lambda_var(i) for i in range(1, self.m + 1)]
        forms += [zero] * (2 * self.n)
        return tuple(forms)


def q_poly(ctx: ResidueContext) -> list[AffineForm]:
    """The m + 1 affine factors whose product extracts the multi-residue."""
    t = ctx.t_var()
    out = [t - Fraction(1, 2)]
    if ctx.m >= 1:
        out.append(ctx.lambda_var(ctx.m) - 1)
    for i in range(1, ctx.m):
        out.append(ctx.lambda_var(i) - ctx.lambda_var(i + 1) - 1)
    return out


# ---------------------------------------------------------------------------
# reduced elements with direct 2n block, per target parabolic


def residue_partitions(ctx: ResidueContext, q: SpComposition) -> list[DPartition]:
    """D-partitions whose big block is carried directly (no sign), any slot."""
    if q.total != ctx.rank:
        raise ValueError("target lives in a different group")
    big = ctx.m + 1
    return [dp for dp in dpartitions(ctx.source_blocks(), q) if dp.is_direct(big)]


def all_partitions(ctx: ResidueContext, q: SpComposition) -> list[DPartition]:
    return dpartitions(ctx.source_blocks(), q)


def slot_index(ctx: ResidueContext, dp: DPartition) -> int:
    """The target slot holding the 2n block (0 means the anisotropic part)."""
    return dp.slot_of(ctx.m + 1)


def element_of(ctx: ResidueContext, dp: DPartition, q: SpComposition) -> SignedPermutation:
    return w_from_D(dp, ctx.source_blocks(), q)


def theta_shift(ctx: ResidueContext, dp: DPartition) -> Vector:
    """theta0 when the 2n block lands in a linear slot, zero otherwise."""
    if slot_index(ctx, dp) >= 1:
        return ctx.theta0()
    return tuple([Fraction(0)] * ctx.rank)


# ---------------------------------------------------------------------------
# the distinguished tables and the exponent shift


def distinguished_table(ctx: ResidueContext, q: SpComposition, i: int) -> Table:
    """The table S_{Q,i} pairing Q with the period subgroup Sp_{m+n} x Sp_n.

    Slot 0 puts the n-row entirely on the anisotropic column (needs r >= n);
    slot i >= 1 puts it on column i (needs n_i >= n).
    """
    n = ctx.n
    parts, r = q.parts, q.anisotropic_rank
    if i == 0:
        if r < n:
            raise ValueError(f"slot 0 needs anisotropic rank >= {n}, got {r}")
        row_a = parts + (r - n,)
        row_b = (0,) * len(parts) + (n,)
    else:
        if not 1 <= i <= len(parts):
            raise ValueError(f"slot {i} outside the blocks of {q}")
        if parts[i - 1] < n:
            raise ValueError(f"slot {i} needs block size >= {n}, got {parts[i - 1]}")
        row_a = tuple(
            p - n if j == i - 1 else p for j, p in enumerate(parts)
        ) + (r,)
        row_b = tuple(n if j == i - 1 else 0 for j in range(len(parts))) + (0,)
    return Table(q, row_a, row_b)


def sigma_Qw(ctx: ResidueContext, q: SpComposition, dp: DPartition) -> Table:
    """The distinguished table attached to a reduced element via its slot."""
    return distinguished_table(ctx, q, slot_index(ctx, dp))


def two_rho_meet(q: SpComposition, sigma: SignedPermutation, a: int, b: int) -> Vector:
    """2 rho of Q cap sigma^{-1} H sigma via root sets (the half-sum oracle).

    The intersection is generated by the torus and the roots common to
    sigma(Q) and the period subgroup; its modulus character is the sum of the
    roots whose negative is absent, pulled back through sigma.
    """
    rank = q.total
    q_roots = transport(standard_parabolic_roots(q), sigma)
    meet = q_roots & period_roots(a, b, "sp")
    back = transport(meet, sigma.inverse())
    total = [0] * rank
    for beta in back:
        if tuple(-x for x in beta) not in back:
            for idx, x in enumerate(beta):
                total[idx] += x
    return tuple(Fraction(x) for x in total)


@lru_cache(maxsize=None)
def _two_rho_intersection(ctx: ResidueContext, q: SpComposition, i: int) -> Vector:
    sigma = sigma_of_table(distinguished_table(ctx, q, i))
    return two_rho_meet(q, sigma, ctx.m + ctx.n, ctx.n)


def two_rho_intersection_closed(ctx: ResidueContext, q: SpComposition, i: int) -> Vector:
    """Closed form for the same vector: blockwise constants with the slot-i split."""
    m, n = ctx.m, ctx.n
    parts, r = q.parts, q.anisotropic_rank
    out: list[Fraction] = []
    acc = 0
    for j, p in enumerate(parts, start=1):
        delta = 0 if i == 0 or j < i else (n if j == i else 2 * n)
        y = Fraction(2 * (m + n) + 1 - p - 2 * acc + delta)
        if i >= 1 and j == i:
            out.extend([y] * (p - n))
            out.extend([Fraction(n + 1)] * n)
        else:
            out.extend([y] * p)
        acc += p
    out.extend([Fraction(0)] * r)
    return tuple(out)


def exponent_shift(ctx: ResidueContext, q: SpComposition, dp: DPartition) -> Vector:
    """rho_Q - 2 rho_{Q cap sigma^{-1} H sigma} for the distinguished sigma.

    Computed from the root-set oracle and cross-checked against the closed
    form; the two must agree on every instance.
    """
    i = slot_index(ctx, dp)
    oracle = _two_rho_intersection(ctx, q, i)
    closed = two_rho_intersection_closed(ctx, q, i)
    if oracle != closed:
        raise AssertionError(
            f"half-sum oracle and closed form disagree at Q={q}, slot {i}"
        )
    return sub(rho(q), oracle)


def residue_point_projection(ctx: ResidueContext, q: SpComposition, i: int) -> Vector:
    """The Q-projection of the residue point as carried by the slot-i embedding.

    Defined through its coweight pairings: below slot i the partial sums take
    the largest linear values of the residue point; from slot i on they also
    absorb the full 2n run of halves.  When the positions of the run inside Q
    line up this is the literal projection of the rotated residue point; the
    partial-sum description is the one the exponent identity actually needs.
    """
    m, n = ctx.m, ctx.n
    cuts = coweight_cuts(q)
    values: list[Fraction] = []
    prev = Fraction(0)
    for ell, nu in enumerate(cuts, start=1):
        if i == 0 or ell < i:
            linear = nu
            cum = Fraction(sum(m + 1 - j for j in range(1, linear + 1)))
        else:
            linear = nu - 2 * n
            if linear < 0:
                raise AssertionError("slot carries the run before it fits")
            cum = Fraction(n) + Fraction(sum(m + 1 - j for j in range(1, linear + 1)))
        block = q.parts[ell - 1]
        values.extend([(cum - prev) / block] * block)
        prev = cum
    values.extend([Fraction(0)] * q.anisotropic_rank)
    return tuple(values)


def verify_exponent_shift(ctx: ResidueContext, q: SpComposition, dp: DPartition) -> bool:
    """The central identity: the projected shift equals minus the carried residue point."""
    i = slot_index(ctx, dp)
    lhs = project_vector(exponent_shift(ctx, q, dp), q)
    rhs = tuple(-x for x in residue_point_projection(ctx, q, i))
    return lhs == rhs


# ---------------------------------------------------------------------------
# the controlling exponent eta and its sign classification


def eta(ctx: ResidueContext, q: SpComposition, dp: DPartition, lam: AffineVector) -> AffineVector:
    """(w lam + shift)_Q as affine forms, for w the element of the partition."""
    w = element_of(ctx, dp, q)
    shift = exponent_shift(ctx, q, dp)
    moved = w.act(lam)
    shifted = tuple(f + c for f, c in zip(moved, shift))
    return project_vector(shifted, q)


def eta_at_residue(ctx: ResidueContext, q: SpComposition, dp: DPartition) -> Vector:
    """eta at the coarse residue point, with the half-shift riding on the 2n block."""
    theta = theta_shift(ctx, dp)
    lam = tuple(
        AffineForm.constant(c, ctx.nvars) + (ctx.lambda_var(j + 1) if j < ctx.m else 0)
        for j, c in enumerate(theta)
    )
    sym = eta(ctx, q, dp, lam)
    return evaluate_vector(sym, ctx.mu0_point())


@dataclass(frozen=True)
class ZeroExponentRecord:
    """Sign data of eta at the residue point for one (Q, w) pair."""

    q: SpComposition
    dp: DPartition
    slot: int
    pairings: tuple
    zero_flags: tuple

    @property
    def is_global_zero(self) -> bool:
        return all(p == 0 for p in self.pairings)


def _equality_expected(ctx: ResidueContext, q: SpComposition, dp: DPartition, ell: int) -> bool:
    """Predicted vanishing of the ell-th pairing: slot condition and prefix condition."""
    i = slot_index(ctx, dp)
    if not (i == 0 or ell < i):
        return False
    nu = q.partial_sums()[ell - 1]
    prefix: set[int] = set()
    for j in range(ell):
        prefix |= set(dp.dparts[j])
    return prefix == set(range(1, nu + 1))


def classify_zero_exponents(ctx: ResidueContext) -> list[ZeroExponentRecord]:
    """Sign classification of eta at the residue point over all proper (Q, w).

    Asserts, instance by instance: every coweight pairing is <= 0; a pairing
    vanishes exactly under the slot/prefix conditions; pairings at or beyond
    a linear slot are <= -2n; and eta vanishes identically exactly for the
    identity element with anisotropic rank >= 2n.
    """
    from .compositions import sp_compositions_of

    out: list[ZeroExponentRecord] = []
    for q in sp_compositions_of(ctx.rank):
        if q.is_full_group:
            continue
        for dp in residue_partitions(ctx, q):
            vec = eta_at_residue(ctx, q, dp)
            pairings = coweight_pairings(vec, q)
            i = slot_index(ctx, dp)
            for ell, value in enumerate(pairings, start=1):
                if value > 0:
                    raise AssertionError(f"positive pairing at Q={q}, {dp}")
                expected_zero = _equality_expected(ctx, q, dp, ell)
                if (value == 0) != expected_zero:
                    raise AssertionError(
                        f"vanishing mismatch at Q={q}, {dp}, ell={ell}: {value}"
                    )
                if i >= 1 and ell >= i and value > -2 * ctx.n:
                    raise AssertionError(
                        f"pairing beyond the slot not <= -2n at Q={q}, {dp}"
                    )
            record = ZeroExponentRecord(
                q, dp, i, pairings, tuple(p == 0 for p in pairings)
            )
            w = element_of(ctx, dp, q)
            expected_global = w.is_identity() and q.anisotropic_rank >= 2 * ctx.n
            if record.is_global_zero != expected_global:
                raise AssertionError(f"global-zero mismatch at Q={q}, {dp}")
            out.append(record)
    return out


# ---------------------------------------------------------------------------
# regularity


def regularity_quadratic(ctx: ResidueContext, x: int) -> Fraction:
    """f(x) = x^2 + (m - 2n)x + n(n - m - 1); negative on the admissible range."""
    m, n = ctx.m, ctx.n
    return Fraction(x * x + (m - 2 * n) * x + n * (n - m - 1))


def regularity_range(ctx: ResidueContext) -> range:
    return range(max(0, ctx.n - ctx.m), ctx.n + 1)


def quadratic_negative_on_range(ctx: ResidueContext) -> bool:
    return all(regularity_quadratic(ctx, x) < 0 for x in regularity_range(ctx))


@dataclass(frozen=True)
class RegularityViolation:
    q: SpComposition
    slot: int
    table: Table
    exponent: Vector


def residual_exponent(ctx: ResidueContext, i: int) -> Vector:
    """The cuspidal exponent carried at slot i: the negated, rotated residue point."""
    m, n = ctx.m, ctx.n
    out = [Fraction(-(m + 1 - j)) for j in range(1, i + 1)]
    out += [Fraction(-1, 2)] * (2 * n)
    out += [Fraction(-(m - i + 1 - j)) for j in range(1, m - i + 1)]
    return tuple(out)


def regularity_violations(ctx: ResidueContext) -> list[RegularityViolation]:
    """Scan maximal parabolics and tables for vanishing regularized exponents.

    The slot-i exponent occurs along a maximal standard Q only when Q
    contains the slot-i parabolic, i.e. when the slotted composition refines
    Q's.  For every such pair and every table over Q with period margins,
    test whether the projected exponent plus the table's modulus shift
    vanishes; all vanishing triples are returned (empty means no
    obstruction).
    """
    from .compositions import refines
    from .parabolic import enumerate_tables

    m, n = ctx.m, ctx.n
    out: list[RegularityViolation] = []
    for j in range(1, ctx.rank + 1):
        q = SpComposition((j,), ctx.rank - j)
        for i in range(0, m + 1):
            if not refines(ctx.slotted_levi(i), q):
                continue
            mu = residual_exponent(ctx, i)
            for table in enumerate_tables(m + n, n, q):
                sigma = sigma_of_table(table)
                shift = sub(rho(q), two_rho_meet(q, sigma, m + n, n))
                candidate = project_vector(
                    tuple(x + y for x, y in zip(mu, shift)), q
                )
                if all(x == 0 for x in candidate):
                    out.append(RegularityViolation(q, i, table, mu))
    return out


def reference_violation(ctx: ResidueContext) -> tuple[SpComposition, Table]:
    """The expected obstruction witness: Q = (1; N-1) with the (0, m+n | 1, n-1) table."""
    q = SpComposition((1,), ctx.rank - 1)
    table = Table(q, (0, ctx.m + ctx.n), (1, ctx.n - 1))
    return q, table
