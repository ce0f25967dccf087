"""Formal meromorphic products with an axiomatized order function, singularity
divisors of intertwining operators, constant-term skeletons and the survivor
classification of the multi-residue.

Analytic inputs are never computed: they live in an explicit axiom table
(pole locations with orders, zero-free half-planes, declared point values)
and every order computation reports exactly which axioms it consumed.  A
query not covered by the table answers "unknown" rather than zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine import AffineForm
from .compositions import SpComposition
from .exponents import ResidueContext, all_partitions, element_of, q_poly
from .rootspace import RestrictedRoot, project_vector
from .weyl import SignedPermutation, block_image, levi_roots

FAMILIES = ("zeta", "L_pi", "L_pi_wedge2")


# ---------------------------------------------------------------------------
# axiom table


@dataclass(frozen=True)
class AnalyticAxioms:
    """Declared analytic facts per factor family.

    ``poles``      -- family -> {point: pole order}; the order is exact and the
                      leading coefficient is declared nonzero.
    ``zerofree``   -- family -> c; the family is holomorphic and nonvanishing
                      at real arguments s > c apart from the declared poles.
    ``entire``     -- families with no poles anywhere.
    ``values``     -- family -> points where the value is declared nonzero.
    """

    poles: tuple[tuple[str, Fraction, int], ...]
    zerofree: tuple[tuple[str, Fraction], ...]
    entire: tuple[str, ...]
    values: tuple[tuple[str, Fraction], ...]

    def order_of(self, family: str, point: Fraction) -> tuple[int | None, str | None]:
        """Exact order at a real point (pole positive) and the axiom consumed."""
        if family not in FAMILIES:
            raise ValueError(f"unknown factor family {family!r}")
        for fam, at, order in self.poles:
            if fam == family and at == point:
                return order, f"{family}:pole@{at}"
        for fam, at in self.values:
            if fam == family and at == point:
                return 0, f"{family}:value@{at}"
        for fam, c in self.zerofree:
            if fam == family and point > c:
                return 0, f"{family}:zerofree>{c}"
        return None, None

    @classmethod
    def default(cls) -> "AnalyticAxioms":
        """The working hypotheses of the residue construction.

        zeta has a simple pole at 1 and (s-1)zeta(s) is holomorphic and
        nonvanishing on Re(s) > 0; the standard L-factor is entire,
        nonvanishing on Re(s) > 1 and declared nonzero at 1/2; the exterior
        square factor has a simple pole at 1 with nonzero residue and is
        holomorphic nonvanishing on Re(s) > 1.
        """
        return cls(
            poles=(("zeta", Fraction(1), 1), ("L_pi_wedge2", Fraction(1), 1)),
            zerofree=(
                ("zeta", Fraction(0)),
                ("L_pi", Fraction(1)),
                ("L_pi_wedge2", Fraction(1)),
            ),
            entire=("L_pi",),
            values=(("L_pi", Fraction(1, 2)),),
        )

    def dump(self) -> str:
        lines = []
        for fam, at, order in self.poles:
            lines.append(f"{fam} pole {at} {order}")
        for fam, c in self.zerofree:
            lines.append(f"{fam} zerofree-re-gt {c}")
        for fam in self.entire:
            lines.append(f"{fam} entire")
        for fam, at in self.values:
            lines.append(f"{fam} nonzero-at {at}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "AnalyticAxioms":
        poles, zerofree, entire, values = [], [], [], []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            fam, rule = fields[0], fields[1]
            if fam not in FAMILIES:
                raise ValueError(f"unknown family {fam!r} in axiom file")
            if rule == "pole":
                poles.append((fam, Fraction(fields[2]), int(fields[3])))
            elif rule == "zerofree-re-gt":
                zerofree.append((fam, Fraction(fields[2])))
            elif rule == "entire":
                entire.append(fam)
            elif rule == "nonzero-at":
                values.append((fam, Fraction(fields[2])))
            else:
                raise ValueError(f"unknown axiom rule {rule!r}")
        return cls(tuple(poles), tuple(zerofree), tuple(entire), tuple(values))

    @classmethod
    def load(cls, path: str) -> "AnalyticAxioms":
        with open(path, encoding="utf-8") as handle:
            return cls.parse(handle.read())


# ---------------------------------------------------------------------------
# formal products


@dataclass(frozen=True)
class FormalFactor:
    """family(argument)^exponent with an affine-form argument."""

    family: str
    argument: AffineForm
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown factor family {self.family!r}")


@dataclass(frozen=True)
class MeromorphicProduct:
    """Product of formal L-type factors and affine-form powers."""

    factors: tuple[FormalFactor, ...] = ()
    affine: tuple[tuple[AffineForm, int], ...] = ()

    def times(self, other: "MeromorphicProduct") -> "MeromorphicProduct":
        return MeromorphicProduct(
            self.factors + other.factors, self.affine + other.affine
        )


@dataclass(frozen=True)
class OrderResult:
    """Outcome of an order computation: exact order or unknown, plus provenance."""

    order: int | None
    consumed: frozenset[str]
    unknown: tuple[str, ...] = ()

    @property
    def known(self) -> bool:
        return self.order is not None


def order_at_point(
    product: MeromorphicProduct,
    point,
    direction,
    axioms: AnalyticAxioms | None = None,
) -> OrderResult:
    """Order of the product at a point along a generic direction.

    Pole orders count positive, vanishing orders negative.  The direction
    must move every factor argument (checked); the result is unknown when
    any factor's order at its argument is not covered by the axioms, and in
    that case the offending factors are reported.
    """
    axioms = axioms or AnalyticAxioms.default()
    for factor in product.factors:
        if factor.argument.directional_coefficient(direction) == 0:
            raise ValueError(
                f"direction is not generic for {factor.family}({factor.argument})"
            )
    for form, _ in product.affine:
        if form.directional_coefficient(direction) == 0:
            raise ValueError("direction is not generic for an affine factor")
    total = 0
    consumed: set[str] = set()
    unknown: list[str] = []
    for factor in product.factors:
        value = factor.argument.evaluate(point)
        order, axiom = axioms.order_of(factor.family, value)
        if order is None:
            unknown.append(f"{factor.family}@{value}")
            continue
        total += order * factor.exponent
        if axiom is not None:
            consumed.add(axiom)
    for form, exponent in product.affine:
        if form.evaluate(point) == 0:
            total -= exponent
    if unknown:
        return OrderResult(None, frozenset(consumed), tuple(unknown))
    return OrderResult(total, frozenset(consumed))


def generic_direction(nvars: int) -> tuple[Fraction, ...]:
    """A fixed direction with pairwise-distinct prime coordinates."""
    primes = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)
    if nvars > len(primes):
        raise ValueError("direction table too small")
    return tuple(Fraction(p) for p in primes[:nvars])


# ---------------------------------------------------------------------------
# the unramified constant-term product for the full flip


def gk_product(ctx: ResidueContext, augmented: bool = False) -> MeromorphicProduct:
    """The global factor attached to the longest relative element.

    Exterior-square quotient at 2t, a zeta-zeta-L sextet per linear slot, a
    four-factor zeta block per pair of slots; ``augmented`` adds the long-root
    quotient zeta(l_i)/zeta(l_i + 1) per slot, which supplies the pole along
    l_m = 1 that the displayed product lacks.
    """
    m = ctx.m
    t = ctx.t_var()
    factors: list[FormalFactor] = [
        FormalFactor("L_pi_wedge2", 2 * t, 1),
        FormalFactor("L_pi_wedge2", 2 * t + 1, -1),
    ]
    for i in range(1, m + 1):
        li = ctx.lambda_var(i)
        factors.extend(
            [
                FormalFactor("zeta", li - t, 1),
                FormalFactor("zeta", li + t, 1),
                FormalFactor("L_pi", li - t, 1),
                FormalFactor("zeta", li - t + 1, -1),
                FormalFactor("zeta", li + t + 1, -1),
                FormalFactor("L_pi", li - t + 1, -1),
            ]
        )
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            li, lj = ctx.lambda_var(i), ctx.lambda_var(j)
            factors.extend(
                [
                    FormalFactor("zeta", li - lj, 1),
                    FormalFactor("zeta", li + lj, 1),
                    FormalFactor("zeta", li - lj + 1, -1),
                    FormalFactor("zeta", li + lj + 1, -1),
                ]
            )
    if augmented:
        for i in range(1, m + 1):
            li = ctx.lambda_var(i)
            factors.append(FormalFactor("zeta", li, 1))
            factors.append(FormalFactor("zeta", li + 1, -1))
    return MeromorphicProduct(tuple(factors))


def residue_extractor(ctx: ResidueContext) -> MeromorphicProduct:
    """The product of the q-factors as affine powers."""
    return MeromorphicProduct(affine=tuple((f, 1) for f in q_poly(ctx)))


def lambda0_point(ctx: ResidueContext) -> tuple[Fraction, ...]:
    """(m, ..., 1, 1/2) in the formal variables (l1, ..., lm, t)."""
    return tuple(
        [Fraction(ctx.m + 1 - i) for i in range(1, ctx.m + 1)] + [Fraction(1, 2)]
    )


# ---------------------------------------------------------------------------
# restricted roots of the slotted Levis and singularity divisors


def slot_coordinate_forms(ctx: ResidueContext, i: int) -> tuple[AffineForm, ...]:
    """Formal coordinates of the slot-i Levi: l's with t in slot i+1."""
    forms: list[AffineForm] = []
    for ell in range(1, ctx.m + 2):
        if ell <= i:
            forms.append(ctx.lambda_var(ell))
        elif ell == i + 1:
            forms.append(ctx.t_var())
        else:
            forms.append(ctx.lambda_var(ell - 1))
    return tuple(forms)


def block_positive_roots(ctx: ResidueContext) -> list[RestrictedRoot]:
    from .rootspace import type_c_positive_roots

    return type_c_positive_roots(ctx.m + 1)


def gamma_roots(ctx: ResidueContext) -> list[RestrictedRoot]:
    """The m+1 restricted roots whose shifted pairings cut out the residue point."""
    m = ctx.m
    out = [RestrictedRoot("minus", j, j + 1) for j in range(1, m)]
    if m >= 1:
        out.append(RestrictedRoot("long", m))
    out.append(RestrictedRoot("long", m + 1))
    return out


def involved_roots(ctx: ResidueContext, i: int) -> set[RestrictedRoot]:
    """Positive restricted roots touching the slot carrying the 2n block."""
    return {
        alpha
        for alpha in block_positive_roots(ctx)
        if alpha.i == i + 1 or (alpha.kind != "long" and alpha.j == i + 1)
    }


def inverted_roots(ctx: ResidueContext, w_block: SignedPermutation) -> set[RestrictedRoot]:
    """Positive restricted roots sent negative by the block-level element."""
    from .weyl import is_positive_root

    size = ctx.m + 1
    out = set()
    for alpha in block_positive_roots(ctx):
        image = w_block.act_root(tuple(int(x) for x in alpha.as_vector(size)))
        if not is_positive_root(image):
            out.add(alpha)
    return out


def divisor_of_intertwiner(
    ctx: ResidueContext, source_slot: int, w_block: SignedPermutation
) -> list[AffineForm]:
    """Affine forms whose product clears the poles of the exchange at this element.

    One factor (pairing - 1) per inverted restricted root away from the slot
    carrying the 2n block, plus (t - 1/2) when the long root on that slot is
    inverted; the latter branch is established only for source slot m.
    """
    coords = slot_coordinate_forms(ctx, source_slot)
    inverted = inverted_roots(ctx, w_block)
    involved = involved_roots(ctx, source_slot)
    long_slot = RestrictedRoot("long", source_slot + 1)
    out = []
    for alpha in sorted(inverted - involved, key=lambda a: (a.kind, a.i, a.j)):
        out.append(alpha.coroot_pairing(coords) - 1)
    if long_slot in inverted:
        if source_slot != ctx.m:
            raise ValueError(
                "half-shift divisor only established for the last slot as source"
            )
        out.append(long_slot.coroot_pairing(coords) - Fraction(1, 2))
    return out


# ---------------------------------------------------------------------------
# constant-term skeletons


@dataclass(frozen=True)
class SkeletonTerm:
    """One summand of a constant-term expansion: element, exponent, divisor."""

    dp: object
    element: SignedPermutation
    exponent: tuple
    divisor: tuple[AffineForm, ...]


@dataclass(frozen=True)
class ConstantTermSkeleton:
    source: SpComposition
    target: SpComposition
    terms: tuple[SkeletonTerm, ...]


def admits_slotted_levi(ctx: ResidueContext, q: SpComposition) -> bool:
    """Whether the Levi of q contains one of the slotted Levis."""
    target = levi_roots(q)
    return any(
        levi_roots(ctx.slotted_levi(i)) <= target for i in range(0, ctx.m + 1)
    )


def cuspidal_constant_term_skeleton(
    ctx: ResidueContext, q: SpComposition
) -> ConstantTermSkeleton:
    """Terms of the constant term along q of the fine Eisenstein family.

    Empty exactly when the Levi of q contains no slotted Levi; otherwise one
    term per reduced element carrying the fine Levi into q's, with symbolic
    exponent (w lambda)_Q and the singularity divisor of the exchange.
    """
    partitions = all_partitions(ctx, q)
    if bool(partitions) != admits_slotted_levi(ctx, q):
        raise AssertionError(f"containment and enumeration disagree at {q}")
    lam = ctx.generic_full()
    terms = []
    for dp in partitions:
        w = element_of(ctx, dp, q)
        exponent = project_vector(w.act(lam), q)
        w_block = block_image(w, ctx.source_blocks())
        divisor = tuple(divisor_of_intertwiner(ctx, ctx.m, w_block))
        terms.append(SkeletonTerm(dp, w, exponent, divisor))
    return ConstantTermSkeleton(ctx.inducing_levi(), q, tuple(terms))


# ---------------------------------------------------------------------------
# survivors of the multi-residue


def _multiset_divides(small: list[AffineForm], big: tuple[AffineForm, ...]) -> bool:
    pool = list(big)
    for f in small:
        if f in pool:
            pool.remove(f)
        else:
            return False
    return True


def surviving_residue_terms(ctx: ResidueContext, q: SpComposition) -> list[SkeletonTerm]:
    """Terms along a slotted parabolic whose divisor absorbs all residue factors.

    The target must be one of the slotted parabolics; exactly one term
    survives, namely the rotation composed with the full flip, and this is
    asserted before returning.
    """
    slot = None
    for i in range(0, ctx.m + 1):
        if q == ctx.slotted_levi(i):
            slot = i
            break
    if slot is None:
        raise ValueError(f"{q} is not one of the slotted parabolics")
    skeleton = cuspidal_constant_term_skeleton(ctx, q)
    needed = q_poly(ctx)
    survivors = [
        term for term in skeleton.terms if _multiset_divides(needed, term.divisor)
    ]
    from .weyl import block_rotation, full_flip

    expected = block_rotation(slot, ctx.m, ctx.n) * full_flip(ctx.m, ctx.n)
    if len(survivors) != 1 or survivors[0].element != expected:
        raise AssertionError(f"survivor classification failed at {q}")
    return survivors
