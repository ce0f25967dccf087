"""Tables with prescribed margins, the permutations they induce, and the
semi-standard parabolics relevant to a two-factor period subgroup.

For H = GL_a x GL_b inside GL_N (or Sp_a x Sp_b inside Sp_N) the semi-standard
parabolics containing the Borel of H are exactly the conjugates sigma_T(P) of
standard parabolics by the order-preserving permutations attached to integer
tables T with column sums the blocks of P and row sums (a, b).  Subgroups
generated by the torus and root subgroups are handled as closed sets of root
vectors; matrix-level verification lives in :mod:`weylcalc.matrices` and the
test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .compositions import Composition, IntegerInterval, SpComposition, split_sizes
from .weyl import (
    SignedPermutation,
    is_positive_root,
    is_right_reduced,
    levi_roots,
    positive_roots,
    right_reduced_reps,
)

RootSet = frozenset


@dataclass(frozen=True)
class Table:
    """Integer table over the columns of a composition with margins (a, b).

    ``top`` is the underlying composition; for the symplectic kind the last
    column is the anisotropic one and carries the pair (r_1, r_2).  Column
    sums reproduce the top row and the two content rows sum to a and b.
    """

    top: Composition | SpComposition
    row_a: tuple[int, ...]
    row_b: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = self.columns()
        if len(self.row_a) != len(cols) or len(self.row_b) != len(cols):
            raise ValueError("rows must align with the columns")
        for (x, y), col in zip(zip(self.row_a, self.row_b), cols):
            if x < 0 or y < 0 or x + y != col:
                raise ValueError(f"column ({x},{y}) does not sum to {col}")

    @property
    def kind(self) -> str:
        return "sp" if isinstance(self.top, SpComposition) else "gl"

    def columns(self) -> tuple[int, ...]:
        if isinstance(self.top, SpComposition):
            return self.top.parts + (self.top.anisotropic_rank,)
        return self.top.parts

    @property
    def margin_a(self) -> int:
        return sum(self.row_a)

    @property
    def margin_b(self) -> int:
        return sum(self.row_b)

    def __str__(self) -> str:
        cols = "|".join(str(c) for c in self.columns())
        ra = "|".join(str(c) for c in self.row_a)
        rb = "|".join(str(c) for c in self.row_b)
        return f"[{cols} // {ra} // {rb}]"


def enumerate_tables(a: int, b: int, alpha) -> list[Table]:
    """All tables over ``alpha`` with margins (a, b), lexicographic in the top row."""
    if a < 0 or b < 0:
        raise ValueError("margins must be nonnegative")
    if a + b != alpha.total:
        raise ValueError(f"margins {a}+{b} do not sum to {alpha.total}")
    if isinstance(alpha, SpComposition):
        cols = alpha.parts + (alpha.anisotropic_rank,)
    else:
        cols = alpha.parts
    out = []
    for row_a in product(*(range(c + 1) for c in cols)):
        if sum(row_a) == a:
            row_b = tuple(c - x for c, x in zip(cols, row_a))
            out.append(Table(alpha, row_a, row_b))
    return out


def sigma_of_table(table: Table) -> SignedPermutation:
    """The order-preserving permutation attached to a table.

    Consecutive intervals of sizes (a_1, b_1, ..., a_K, b_K) are carried,
    order preserving and without signs, onto the consecutive intervals of
    sizes (a_1, ..., a_K, b_1, ..., b_K).
    """
    cols = table.columns()
    n = sum(cols)
    interleaved = []
    for x, y in zip(table.row_a, table.row_b):
        interleaved.extend([x, y])
    sources = split_sizes(n, tuple(interleaved))
    targets = split_sizes(n, table.row_a + table.row_b)
    k = len(cols)
    tau = [0] * n
    for j in range(k):
        src_a, src_b = sources[2 * j], sources[2 * j + 1]
        dst_a, dst_b = targets[j], targets[k + j]
        for offset in range(len(src_a)):
            tau[src_a.lo - 1 + offset] = dst_a.lo + offset
        for offset in range(len(src_b)):
            tau[src_b.lo - 1 + offset] = dst_b.lo + offset
    return SignedPermutation(tuple(tau), 0)


# ---------------------------------------------------------------------------
# subgroups as closed root sets


@lru_cache(maxsize=None)
def standard_parabolic_roots(comp) -> RootSet:
    """Roots of the standard parabolic: every positive root plus Levi negatives."""
    kind = "sp" if isinstance(comp, SpComposition) else "gl"
    positives = set(positive_roots(comp.total, kind))
    if kind == "sp":
        return frozenset(positives | levi_roots(comp))
    out = set(positives)
    for block in comp.blocks():
        for i in block:
            for j in block:
                if i != j:
                    v = [0] * comp.total
                    v[i - 1], v[j - 1] = 1, -1
                    out.add(tuple(v))
    return frozenset(out)


def gl_levi_roots(comp: Composition) -> RootSet:
    out = set()
    for block in comp.blocks():
        for i in block:
            for j in block:
                if i != j:
                    v = [0] * comp.total
                    v[i - 1], v[j - 1] = 1, -1
                    out.add(tuple(v))
    return frozenset(out)


def transport(roots: RootSet, w: SignedPermutation) -> RootSet:
    return frozenset(w.act_root(beta) for beta in roots)


@dataclass(frozen=True)
class SemiStandardParabolic:
    """w(P) for a standard parabolic P and a right-reduced conjugator w."""

    base: Composition | SpComposition
    conjugator: SignedPermutation

    def __post_init__(self) -> None:
        if not is_right_reduced(self.conjugator, self.base):
            raise ValueError("conjugator must be right reduced for the base Levi")

    @property
    def kind(self) -> str:
        return "sp" if isinstance(self.base, SpComposition) else "gl"

    @property
    def rank(self) -> int:
        return self.base.total

    def roots(self) -> RootSet:
        return transport(standard_parabolic_roots(self.base), self.conjugator)

    def levi_root_set(self) -> RootSet:
        if self.kind == "sp":
            return transport(levi_roots(self.base), self.conjugator)
        return transport(gl_levi_roots(self.base), self.conjugator)

    def contains(self, other: "SemiStandardParabolic") -> bool:
        return other.roots() <= self.roots()

    def __str__(self) -> str:
        return f"({self.base})^({self.conjugator})"


def period_roots(a: int, b: int, kind: str, signed: bool = True) -> RootSet:
    """Roots of GL_a x GL_b (or Sp_a x Sp_b) inside the ambient rank-(a+b) group."""
    n = a + b
    first = tuple(range(1, a + 1))
    second = tuple(range(a + 1, n + 1))
    out = set()
    for letters in (first, second):
        for i in letters:
            for j in letters:
                if i != j:
                    v = [0] * n
                    v[i - 1], v[j - 1] = 1, -1
                    out.add(tuple(v))
        if kind == "sp":
            for i in letters:
                for j in letters:
                    if i < j:
                        for si, sj in ((1, 1), (-1, -1)):
                            v = [0] * n
                            v[i - 1], v[j - 1] = si, sj
                            out.add(tuple(v))
                v = [0] * n
                v[i - 1] = 2
                out.add(tuple(v))
                v = [0] * n
                v[i - 1] = -2
                out.add(tuple(v))
    if not signed:
        return frozenset(beta for beta in out if is_positive_root(beta))
    return frozenset(out)


def period_borel_roots(a: int, b: int, kind: str) -> RootSet:
    """Positive roots of the period subgroup: the root set of its Borel."""
    return period_roots(a, b, kind, signed=False)


def is_relevant(p: SemiStandardParabolic, a: int, b: int) -> bool:
    """Whether p contains the Borel of the period subgroup."""
    return period_borel_roots(a, b, p.kind) <= p.roots()


def relevant_parabolics(a: int, b: int, kind: str) -> list[SemiStandardParabolic]:
    """The full family of relevant semi-standard parabolics, via tables.

    One entry sigma_T(P) per standard parabolic P and table T; the map
    T -> sigma_T is checked injective and every entry is checked relevant.
    """
    n = a + b
    if kind == "sp":
        from .compositions import sp_compositions_of

        standards = sp_compositions_of(n)
    elif kind == "gl":
        from .compositions import compositions_of

        standards = compositions_of(n)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    out = []
    for comp in standards:
        sigmas = set()
        for table in enumerate_tables(a, b, comp):
            sigma = sigma_of_table(table)
            if (sigma.tau, sigma.mask) in sigmas:
                raise AssertionError(f"table map not injective over {comp}")
            sigmas.add((sigma.tau, sigma.mask))
            p = SemiStandardParabolic(comp, sigma)
            if not is_relevant(p, a, b):
                raise AssertionError(f"table image {p} misses the period Borel")
            out.append(p)
    return out


def table_of(p: SemiStandardParabolic, a: int, b: int) -> Table:
    """Recover the defining table of a relevant parabolic; raises if not relevant."""
    for table in enumerate_tables(a, b, p.base):
        if sigma_of_table(table) == p.conjugator:
            return table
    raise ValueError(f"{p} is not in the relevant family for ({a},{b})")


def intersect_with_H(p: SemiStandardParabolic, a: int, b: int):
    """Intersection datum with the period subgroup, from the table rows.

    For the symplectic kind returns the pair of symplectic compositions of a
    and b; for the linear kind the pair of ordinary compositions.  The root
    set of the intersection is verified against the closed form.
    """
    table = table_of(p, a, b)
    if p.kind == "sp":
        first = SpComposition(table.row_a[:-1], table.row_a[-1]) if any(table.row_a) else None
        second = SpComposition(table.row_b[:-1], table.row_b[-1]) if any(table.row_b) else None
    else:
        first = Composition(table.row_a) if any(table.row_a) else None
        second = Composition(table.row_b) if any(table.row_b) else None
    expected = intersection_root_set(first, second, a, b, p.kind)
    actual = p.roots() & period_roots(a, b, p.kind)
    if actual != expected:
        raise AssertionError(f"intersection of {p} does not match its table")
    return first, second


def intersection_root_set(first, second, a: int, b: int, kind: str) -> RootSet:
    """Root set of the embedded product parabolic P_first x P_second."""
    n = a + b
    out: set = set()

    def embed(comp, offset: int, size: int):
        if comp is None:
            return
        roots = standard_parabolic_roots(comp)
        for beta in roots:
            v = [0] * n
            for i, x in enumerate(beta):
                v[offset + i] = x
            out.add(tuple(v))

    embed(first, 0, a)
    embed(second, a, b)
    return frozenset(out)


# ---------------------------------------------------------------------------
# matrix-level verification of the table bijection


def _period_panel(a: int, b: int, kind: str):
    """Generators of the period Borel: one unipotent per positive root, torus elements."""
    from . import matrices as mx

    n = a + b
    panel = []
    if kind == "sp":
        for beta in sorted(period_borel_roots(a, b, "sp")):
            panel.append(mx.root_unipotent(beta, n))
        for i in range(n):
            for entry in (2, 3):
                coords = [1] * n
                coords[i] = entry
                panel.append(mx.torus(coords))
    else:
        for beta in sorted(period_borel_roots(a, b, "gl")):
            i = beta.index(1) + 1
            j = beta.index(-1) + 1
            panel.append(mx.gl_root_unipotent(i, j, n))
        for i in range(n):
            for entry in (2, 3):
                diag = [[Fraction(entry if r == i else 1) if r == c else Fraction(0) for c in range(n)] for r in range(n)]
                panel.append(tuple(tuple(row) for row in diag))
    return panel


def verify_relevant_family_matrix(a: int, b: int, comp) -> dict:
    """Two-sided matrix check of the table parameterization over one standard base.

    Every table conjugate must contain the whole period-Borel generator panel;
    every other reduced conjugator must be excluded by an explicit unipotent
    witness (the long-root one when the conjugator carries signs).  Root-set
    and matrix answers are required to agree on every element.
    """
    from . import matrices as mx
    from .weyl import all_elements

    kind = "sp" if isinstance(comp, SpComposition) else "gl"
    n = comp.total
    tables = enumerate_tables(a, b, comp)
    sigma_set = {sigma_of_table(t) for t in tables}
    if kind == "sp":
        reduced = right_reduced_reps(comp)
        pattern = lambda g: mx.in_standard_sp_parabolic(g, comp)
        rep = lambda w: mx.signed_permutation_matrix(w, n)
    else:
        reduced = [w for w in all_elements(n, "gl") if is_right_reduced(w, comp)]
        pattern = lambda g: mx.in_standard_gl_parabolic(g, comp)
        rep = lambda w: mx.permutation_matrix(w.tau)
    panel = _period_panel(a, b, kind)
    borel_h = period_borel_roots(a, b, kind)
    base_roots = standard_parabolic_roots(comp)
    counts = {"members": 0, "excluded": 0}
    for w in reduced:
        conjugate_roots = transport(base_roots, w)
        rootset_member = borel_h <= conjugate_roots
        if rootset_member != (w in sigma_set):
            raise AssertionError(f"root-set membership disagrees with tables at {w}")
        w_mat = rep(w)
        w_inv = mx.mat_inv(w_mat)
        if rootset_member:
            for g in panel:
                if not pattern(mx.mat_mul(mx.mat_mul(w_inv, g), w_mat)):
                    raise AssertionError(f"panel generator escapes {comp} under {w}")
            counts["members"] += 1
        else:
            witness_root = None
            if kind == "sp" and w.mask:
                i = min(w.sign_set)
                candidate = [0] * n
                candidate[w.tau[i - 1] - 1] = 2
                candidate = tuple(candidate)
                if candidate in borel_h and candidate not in conjugate_roots:
                    witness_root = candidate
            if witness_root is None:
                witness_root = min(sorted(borel_h - conjugate_roots))
            if kind == "sp":
                u = mx.root_unipotent(witness_root, n)
                in_borel_h = mx.in_period_subgroup(u, a, b) and all(
                    u[r][c] == 0 for r in range(2 * n) for c in range(r)
                )
            else:
                i = witness_root.index(1) + 1
                j = witness_root.index(-1) + 1
                u = mx.gl_root_unipotent(i, j, n)
                fac = (lambda x: 0 if x <= a else 1)
                in_borel_h = i < j and fac(i) == fac(j)
            if not in_borel_h:
                raise AssertionError(f"witness for {w} is not in the period Borel")
            if pattern(mx.mat_mul(mx.mat_mul(w_inv, u), w_mat)):
                raise AssertionError(f"witness fails to exclude {w} from the family")
            counts["excluded"] += 1
    return counts


# ---------------------------------------------------------------------------
# restriction to the Levi of a relevant parabolic


def ordered_set_partitions(letters: tuple[int, ...]):
    """All ordered partitions of a set of letters into nonempty parts."""
    if not letters:
        yield ()
        return
    from itertools import combinations

    for size in range(1, len(letters) + 1):
        for first in combinations(letters, size):
            remaining = tuple(x for x in letters if x not in first)
            for tail in ordered_set_partitions(remaining):
                yield (first,) + tail


def gl_parabolic_subsets(letters: tuple[int, ...], n: int):
    """Root sets of all parabolics of GL(letters) containing the torus."""
    for parts in ordered_set_partitions(letters):
        cls = {}
        for idx, part in enumerate(parts):
            for p in part:
                cls[p] = idx
        out = set()
        for i in letters:
            for j in letters:
                if i != j and cls[i] <= cls[j]:
                    v = [0] * n
                    v[i - 1], v[j - 1] = 1, -1
                    out.add(tuple(v))
        yield frozenset(out)


def sp_parabolic_subsets(letters: tuple[int, ...], n: int):
    """Root sets of all semi-standard parabolics of Sp(letters)."""
    r = len(letters)
    if r == 0:
        yield frozenset()
        return
    from .compositions import sp_compositions_of

    ordered = tuple(sorted(letters))

    def relabel(beta_small):
        v = [0] * n
        for i, x in enumerate(beta_small):
            v[ordered[i] - 1] = x
        return tuple(v)

    for comp in sp_compositions_of(r):
        for w in right_reduced_reps(comp):
            p = SemiStandardParabolic(comp, w)
            yield frozenset(relabel(beta) for beta in p.roots())


def levi_factor_letters(p: SemiStandardParabolic) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """Images of the GL blocks and of the anisotropic block under the conjugator."""
    w = p.conjugator
    if p.kind == "sp":
        gl = [tuple(sorted(w.tau[i - 1] for i in blk)) for blk in p.base.gl_blocks()]
        sp = tuple(sorted(w.tau[i - 1] for i in p.base.sp_block()))
        return gl, sp
    gl = [tuple(sorted(w.tau[i - 1] for i in blk)) for blk in p.base.blocks()]
    return gl, ()


def restriction_bijection_check(q: SemiStandardParabolic, a: int, b: int) -> bool:
    """Whether P -> P intersect L is a bijection onto the relevant parabolics of L.

    The domain is the set of relevant parabolics contained in q; the codomain
    is enumerated independently, factor by factor of the Levi of q, and the
    two are compared as sets of root sets.
    """
    kind = q.kind
    if not is_relevant(q, a, b):
        raise ValueError("restriction makes sense only for relevant parabolics")
    n = a + b
    q_roots = q.roots()
    levi = q.levi_root_set()
    borel_h = period_borel_roots(a, b, kind)
    base_target = borel_h & levi

    family = relevant_parabolics(a, b, kind)
    domain = [p for p in family if p.roots() <= q_roots]
    images = [p.roots() & levi for p in domain]
    if len(set(images)) != len(images):
        return False

    gl_letters, sp_letters = levi_factor_letters(q)
    factor_sets: list[list[RootSet]] = []
    for letters in gl_letters:
        factor_sets.append(list(gl_parabolic_subsets(letters, n)))
    if kind == "sp":
        factor_sets.append(list(sp_parabolic_subsets(sp_letters, n)))
    codomain = set()
    for pieces in product(*factor_sets) if factor_sets else [()]:
        combined = frozenset().union(*pieces) if pieces else frozenset()
        if base_target <= combined:
            codomain.add(combined)
    return set(images) == codomain
