"""Compositions indexing standard parabolic subgroups.

A ``Composition`` (n_1, ..., n_k) of N indexes a block-upper-triangular
parabolic of GL_N.  An ``SpComposition`` (n_1, ..., n_k; r) additionally
carries an anisotropic rank r for the middle Sp_r block; the semicolon slot
is significant, so (1,2,3;0) and (1,2;3) are different parabolic data even
though the underlying integer tuples agree.

Zero entries among the n_i are dropped at construction time (they index the
same subgroup), which keeps equality structural and hashing sound.  The
anisotropic rank r is kept even when it is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered tuple of positive integers; indexes a standard parabolic of GL_N."""

    parts: tuple[int, ...]

    def __init__(self, parts) -> None:
        cleaned = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in cleaned):
            raise ValueError(f"composition parts must be nonnegative, got {parts}")
        if not cleaned:
            raise ValueError("a composition needs at least one positive part")
        object.__setattr__(self, "parts", cleaned)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def partial_sums(self) -> tuple[int, ...]:
        """nu_1 < ... < nu_k, the right endpoints of the blocks (1-indexed)."""
        out, acc = [], 0
        for p in self.parts:
            acc += p
            out.append(acc)
        return tuple(out)

    def blocks(self) -> list["IntegerInterval"]:
        """The block intervals [nu_{i-1}+1, nu_i] partitioning [1, N]."""
        out, lo = [], 1
        for p in self.parts:
            out.append(IntegerInterval(lo, lo + p - 1))
            lo += p
        return out

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True, order=True)
class SpComposition:
    """(n_1, ..., n_k; r) with sum(n_i) + r = N; indexes a standard parabolic of Sp_N.

    k = 0 (empty parts) is legal and denotes the full group Sp_N itself.
    """

    parts: tuple[int, ...]
    anisotropic_rank: int

    def __init__(self, parts, anisotropic_rank: int) -> None:
        cleaned = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in cleaned):
            raise ValueError(f"composition parts must be nonnegative, got {parts}")
        r = int(anisotropic_rank)
        if r < 0:
            raise ValueError(f"anisotropic rank must be nonnegative, got {r}")
        if not cleaned and r == 0:
            raise ValueError("empty symplectic composition")
        object.__setattr__(self, "parts", cleaned)
        object.__setattr__(self, "anisotropic_rank", r)

    @property
    def total(self) -> int:
        return sum(self.parts) + self.anisotropic_rank

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def is_full_group(self) -> bool:
        return not self.parts

    def partial_sums(self) -> tuple[int, ...]:
        out, acc = [], 0
        for p in self.parts:
            acc += p
            out.append(acc)
        return tuple(out)

    def gl_blocks(self) -> list["IntegerInterval"]:
        out, lo = [], 1
        for p in self.parts:
            out.append(IntegerInterval(lo, lo + p - 1))
            lo += p
        return out

    def sp_block(self) -> "IntegerInterval":
        """The anisotropic interval [nu_k+1, N]; empty when r = 0."""
        nu_k = sum(self.parts)
        return IntegerInterval(nu_k + 1, self.total)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) + ";" + str(self.anisotropic_rank)

    @classmethod
    def parse(cls, text: str) -> "SpComposition":
        """Parse the "n1,...,nk;r" syntax, e.g. "1,2;3" or ";4"."""
        if ";" not in text:
            raise ValueError(f"symplectic composition needs a ';r' slot: {text!r}")
        head, _, tail = text.partition(";")
        parts = [int(p) for p in head.split(",") if p.strip() != ""]
        return cls(parts, int(tail))


@dataclass(frozen=True, order=True)
class IntegerInterval:
    """[lo, hi] = {i : lo <= i <= hi}; lo = hi + 1 encodes the empty interval."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi + 1:
            raise ValueError(f"inverted interval [{self.lo},{self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def members(self) -> tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1))


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, in lexicographic order."""
    if n < 1:
        raise ValueError(f"compositions are defined for N >= 1, got {n}")
    out = []
    for cuts in range(1 << (n - 1)):
        parts, run = [], 1
        for pos in range(n - 1):
            if cuts >> pos & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(parts))
    return sorted(out)


def sp_compositions_of(n: int) -> list[SpComposition]:
    """All (n_1,...,n_k; r) with sum + r = n, including (;n) for the full group."""
    if n < 1:
        raise ValueError(f"compositions are defined for N >= 1, got {n}")
    out = [SpComposition((), n)]
    for r in range(n):
        for comp in compositions_of(n - r):
            out.append(SpComposition(comp.parts, r))
    return sorted(out, key=lambda c: (c.anisotropic_rank, c.parts))


def refines(beta, alpha) -> bool:
    """Whether beta refines alpha blockwise (same kind, same total).

    For GL compositions this means each alpha-block splits into consecutive
    beta-blocks; for Sp compositions additionally the leftover tail of beta
    must organise into a symplectic composition of alpha's anisotropic rank,
    which holds exactly when no beta-part straddles the anisotropic boundary.
    """
    if isinstance(beta, Composition) != isinstance(alpha, Composition):
        raise ValueError("refinement compares compositions of the same kind")
    if beta.total != alpha.total:
        raise ValueError(
            f"refinement needs equal totals, got {beta.total} != {alpha.total}"
        )
    if isinstance(alpha, Composition):
        return set(alpha.partial_sums()) <= set(beta.partial_sums())
    cuts = set(beta.partial_sums()) | {0}
    return all(nu in cuts for nu in alpha.partial_sums())


def consecutive_intervals(
    interval: IntegerInterval, beta: Composition
) -> list[IntegerInterval]:
    """Partition of ``interval`` into consecutive pieces of sizes beta_1, ..., beta_t."""
    if len(interval) != beta.total:
        raise ValueError(
            f"interval of size {len(interval)} cannot carry a composition of {beta.total}"
        )
    out, lo = [], interval.lo
    for p in beta.parts:
        out.append(IntegerInterval(lo, lo + p - 1))
        lo += p
    return out


def split_sizes(total: int, sizes: tuple[int, ...]) -> list[IntegerInterval]:
    """Consecutive intervals of the given sizes covering [1, total]; zero sizes allowed."""
    if sum(sizes) != total:
        raise ValueError(f"sizes {sizes} do not sum to {total}")
    out, lo = [], 1
    for s in sizes:
        out.append(IntegerInterval(lo, lo + s - 1))
        lo += s
    return out


def value_assignments(universe: tuple[int, ...], sizes: tuple[int, ...]):
    """Yield all ways to split ``universe`` into disjoint subsets of the given sizes.

    Subsets are produced as sorted tuples; the enumeration order is
    deterministic (lexicographic in the chosen combinations).
    """
    if not sizes:
        if not universe:
            yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in combinations(universe, first):
        remaining = tuple(x for x in universe if x not in chosen)
        for tail in value_assignments(remaining, rest):
            yield (chosen,) + tail
