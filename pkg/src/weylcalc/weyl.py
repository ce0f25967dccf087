"""The signed-permutation group on N letters and its coset combinatorics.

An element tau*c acts on Q^N by e_i -> -e_{tau(i)} for i in c and
e_i -> e_{tau(i)} otherwise; the sign set c is conjugated by permutations,
tau c tau^{-1} = tau(c).  Composition applies the right factor first, so for
w = (tau = (1 2), c = {1}) one has w(x1, x2) = (x2, -x1).

All reduced-representative sets are produced both from the interval
characterization (fast, any rank) and by brute-force minimal-length
selection (the oracle, small rank); the test-suite asserts they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .compositions import (
    Composition,
    IntegerInterval,
    SpComposition,
    split_sizes,
    value_assignments,
)

RootVector = tuple[int, ...]


@dataclass(frozen=True)
class SignedPermutation:
    """Element tau*c of the rank-N hyperoctahedral group.

    ``tau`` maps i to tau[i-1]; ``mask`` holds the sign set c as a bitmask
    with bit i-1 standing for the letter i.
    """

    tau: tuple[int, ...]
    mask: int = 0

    @property
    def rank(self) -> int:
        return len(self.tau)

    @property
    def sign_set(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.rank) if self.mask >> i & 1)

    @classmethod
    def from_sign_set(cls, tau, signs) -> "SignedPermutation":
        mask = 0
        for i in signs:
            mask |= 1 << (i - 1)
        return cls(tuple(tau), mask)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)), 0)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition self∘other (other acts first)."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch in composition")
        tau = tuple(self.tau[t - 1] for t in other.tau)
        mask = 0
        for j in range(self.rank):
            if self.mask >> (other.tau[j] - 1) & 1:
                mask |= 1 << j
        return SignedPermutation(tau, mask ^ other.mask)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.rank
        for i, t in enumerate(self.tau):
            inv[t - 1] = i + 1
        mask = 0
        for i in range(self.rank):
            if self.mask >> i & 1:
                mask |= 1 << (self.tau[i] - 1)
        return SignedPermutation(tuple(inv), mask)

    def is_identity(self) -> bool:
        return self.mask == 0 and all(t == i + 1 for i, t in enumerate(self.tau))

    def act(self, vec):
        """Linear action on a length-N coordinate vector (rationals or forms)."""
        if len(vec) != self.rank:
            raise ValueError(f"rank mismatch: element of rank {self.rank} on {len(vec)} coords")
        out = [None] * self.rank
        for i in range(self.rank):
            out[self.tau[i] - 1] = -vec[i] if self.mask >> i & 1 else vec[i]
        return tuple(out)

    def act_root(self, root: RootVector) -> RootVector:
        return self.act(root)

    def sort_key(self):
        return (length(self), self.tau, self.mask)

    def __str__(self) -> str:
        signs = "{" + ",".join(str(i) for i in sorted(self.sign_set)) + "}"
        return f"[{' '.join(str(t) for t in self.tau)}]{signs}"


# ---------------------------------------------------------------------------
# roots


@lru_cache(maxsize=None)
def positive_roots(n: int, kind: str = "sp") -> tuple[RootVector, ...]:
    """Positive roots as coordinate vectors; type C for 'sp', type A for 'gl'."""
    out: list[RootVector] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = [0] * n
            v[i - 1], v[j - 1] = 1, -1
            out.append(tuple(v))
    if kind == "sp":
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                v = [0] * n
                v[i - 1] += 1
                v[j - 1] += 1
                out.append(tuple(v))
    elif kind != "gl":
        raise ValueError(f"unknown kind {kind!r}")
    return tuple(out)


def is_positive_root(root: RootVector) -> bool:
    for x in root:
        if x:
            return x > 0
    return False


@lru_cache(maxsize=None)
def _length(tau: tuple[int, ...], mask: int, kind: str) -> int:
    w = SignedPermutation(tau, mask)
    return sum(
        1 for beta in positive_roots(len(tau), kind) if not is_positive_root(w.act_root(beta))
    )


def length(w: SignedPermutation, kind: str = "sp") -> int:
    """Number of positive roots sent to negative ones."""
    return _length(w.tau, w.mask, kind)


def all_elements(n: int, kind: str = "sp") -> list[SignedPermutation]:
    """The full group, sorted by (length, tau, mask); 'gl' restricts to S_N."""
    masks = range(1 << n) if kind == "sp" else (0,)
    out = [
        SignedPermutation(tau, mask)
        for tau in permutations(range(1, n + 1))
        for mask in masks
    ]
    return sorted(out, key=lambda w: w.sort_key())


# ---------------------------------------------------------------------------
# parabolic Weyl subgroups


def _gl_blocks(comp) -> list[IntegerInterval]:
    if isinstance(comp, SpComposition):
        return comp.gl_blocks()
    return comp.blocks()


def _sp_interval(comp) -> IntegerInterval:
    if isinstance(comp, SpComposition):
        return comp.sp_block()
    n = comp.total
    return IntegerInterval(n + 1, n)


def in_levi_subgroup(w: SignedPermutation, comp) -> bool:
    """Structural membership in W_M for the standard Levi M of ``comp``."""
    sp = _sp_interval(comp)
    for i in range(1, w.rank + 1):
        if w.mask >> (i - 1) & 1 and i not in sp:
            return False
    for block in _gl_blocks(comp) + [sp]:
        for i in block:
            if w.tau[i - 1] not in block:
                return False
    return True


def levi_elements(comp) -> list[SignedPermutation]:
    """All of W_M, enumerated blockwise."""
    n = comp.total
    blocks = [b.members() for b in _gl_blocks(comp)]
    sp = _sp_interval(comp).members()
    per_block = [list(permutations(b)) for b in blocks]
    sp_choices = [
        (perm, mask_bits)
        for perm in permutations(sp)
        for mask_bits in product((0, 1), repeat=len(sp))
    ]
    out = []
    for gl_choice in product(*per_block) if per_block else [()]:
        for sp_perm, sp_bits in sp_choices:
            tau = list(range(1, n + 1))
            for block, images in zip(blocks, gl_choice):
                for src, dst in zip(block, images):
                    tau[src - 1] = dst
            mask = 0
            for src, dst, bit in zip(sp, sp_perm, sp_bits):
                tau[src - 1] = dst
                mask |= bit << (src - 1)
            out.append(SignedPermutation(tuple(tau), mask))
    return sorted(out, key=lambda w: w.sort_key())


def levi_simple_roots(comp) -> list[RootVector]:
    """Delta_0^M: simple roots of the standard Levi of ``comp``."""
    n = comp.total
    out: list[RootVector] = []
    for block in _gl_blocks(comp):
        for i in range(block.lo, block.hi):
            v = [0] * n
            v[i - 1], v[i] = 1, -1
            out.append(tuple(v))
    sp = _sp_interval(comp)
    if len(sp) > 0:
        for i in range(sp.lo, sp.hi):
            v = [0] * n
            v[i - 1], v[i] = 1, -1
            out.append(tuple(v))
        v = [0] * n
        v[n - 1] = 2
        out.append(tuple(v))
    return out


def levi_roots(comp) -> frozenset[RootVector]:
    """All roots of the standard Levi (both signs)."""
    n = comp.total
    out: set[RootVector] = set()
    for block in _gl_blocks(comp):
        for i in block:
            for j in block:
                if i != j:
                    v = [0] * n
                    v[i - 1], v[j - 1] = 1, -1
                    out.add(tuple(v))
    sp = _sp_interval(comp)
    for i in sp:
        for j in sp:
            if i < j:
                for si, sj in ((1, -1), (1, 1), (-1, 1), (-1, -1)):
                    v = [0] * n
                    v[i - 1], v[j - 1] = si, sj
                    out.add(tuple(v))
        v = [0] * n
        v[i - 1] = 2
        out.add(tuple(v))
        v = [0] * n
        v[i - 1] = -2
        out.add(tuple(v))
    return frozenset(out)


def is_right_reduced(w: SignedPermutation, comp) -> bool:
    """w alpha > 0 for every simple root alpha of the Levi (minimal in wW_M)."""
    return all(is_positive_root(w.act_root(a)) for a in levi_simple_roots(comp))


def right_reduced_reps(comp) -> list[SignedPermutation]:
    """[W/W_M], generated from the interval characterization.

    Per GL block one chooses a split point d_i; tau is order preserving on
    the first d_i slots, order reversing (with signs) on the rest, and order
    preserving without signs on the anisotropic slots.
    """
    n = comp.total
    blocks = _gl_blocks(comp)
    sp = _sp_interval(comp)
    out = []
    for splits in product(*(range(len(b) + 1) for b in blocks)):
        piece_sizes = []
        for block, d in zip(blocks, splits):
            piece_sizes.extend([d, len(block) - d])
        piece_sizes.append(len(sp))
        for values in value_assignments(tuple(range(1, n + 1)), tuple(piece_sizes)):
            tau = [0] * n
            mask = 0
            idx = 0
            for block, d in zip(blocks, splits):
                keep = values[idx]
                rev = values[idx + 1]
                idx += 2
                for offset, dst in enumerate(keep):
                    tau[block.lo - 1 + offset] = dst
                for offset, dst in enumerate(sorted(rev, reverse=True)):
                    pos = block.lo + d + offset
                    tau[pos - 1] = dst
                    mask |= 1 << (pos - 1)
            for offset, dst in enumerate(values[idx]):
                tau[sp.lo - 1 + offset] = dst
            out.append(SignedPermutation(tuple(tau), mask))
    return sorted(out, key=lambda w: w.sort_key())


def right_reduced_reps_brute(comp, kind: str = "sp") -> list[SignedPermutation]:
    """Oracle: the unique minimal-length element of each coset wW_M."""
    group = all_elements(comp.total, kind)
    subgroup = levi_elements(comp)
    seen: set[tuple] = set()
    reps = []
    for w in group:
        key = (w.tau, w.mask)
        if key in seen:
            continue
        coset = [w * s for s in subgroup]
        for u in coset:
            seen.add((u.tau, u.mask))
        best = min(length(u) for u in coset)
        minimal = [u for u in coset if length(u) == best]
        if len(minimal) != 1:
            raise AssertionError(f"non-unique minimal element in coset of {w}")
        reps.append(minimal[0])
    return sorted(reps, key=lambda w: w.sort_key())


def is_left_reduced(w: SignedPermutation, comp) -> bool:
    return is_right_reduced(w.inverse(), comp)


def double_coset_reps(left, right) -> list[SignedPermutation]:
    """Reduced representatives of W_L \\ W / W_M, rank from the composition data."""
    if left.total != right.total:
        raise ValueError("Levi data must live in the same group")
    return [w for w in right_reduced_reps(right) if is_left_reduced(w, left)]


def maps_levi_into(w: SignedPermutation, source, target) -> bool:
    """Whether w conjugates the standard Levi of ``source`` into that of ``target``."""
    target_roots = levi_roots(target)
    return all(w.act_root(beta) in target_roots for beta in levi_roots(source))


def circ_reps(left, right) -> list[SignedPermutation]:
    """Subset of double-coset representatives conjugating M into L."""
    return [w for w in double_coset_reps(left, right) if maps_levi_into(w, right, left)]


# ---------------------------------------------------------------------------
# partitions parameterizing reduced elements with Siegel-contained source


@dataclass(frozen=True)
class DPartition:
    """Partition (D_1, E_1, ..., D_k, E_k, D_0) of the source block indices [1, t].

    Block j of the source lands in target slot i direct (j in D_i), reversed
    with signs (j in E_i), or in the anisotropic part (j in D_0).
    """

    dparts: tuple[frozenset[int], ...]
    eparts: tuple[frozenset[int], ...]
    d0: frozenset[int]

    def __post_init__(self) -> None:
        if len(self.dparts) != len(self.eparts):
            raise ValueError("need as many D_i as E_i")
        everything: list[int] = []
        for s in (*self.dparts, *self.eparts, self.d0):
            everything.extend(s)
        if len(everything) != len(set(everything)):
            raise ValueError("parts of a D-partition must be disjoint")

    @property
    def k(self) -> int:
        return len(self.dparts)

    def validate(self, blocks: Composition, target: SpComposition) -> None:
        """Check block-size compatibility against the ambient pair."""
        sizes = blocks.parts
        used = set()
        for s in (*self.dparts, *self.eparts, self.d0):
            used |= set(s)
        if used != set(range(1, len(sizes) + 1)):
            raise ValueError("D-partition does not cover the source blocks")
        for i, (d, e) in enumerate(zip(self.dparts, self.eparts), start=1):
            total = sum(sizes[j - 1] for j in d | e)
            if total != target.parts[i - 1]:
                raise ValueError(
                    f"slot {i} carries {total}, target block is {target.parts[i - 1]}"
                )
        if sum(sizes[j - 1] for j in self.d0) != target.anisotropic_rank:
            raise ValueError("anisotropic sizes do not match")

    def slot_of(self, j: int) -> int:
        """Target slot of source block j: i >= 1 for D_i or E_i, 0 for D_0."""
        for i, (d, e) in enumerate(zip(self.dparts, self.eparts), start=1):
            if j in d or j in e:
                return i
        if j in self.d0:
            return 0
        raise ValueError(f"block {j} not covered")

    def is_direct(self, j: int) -> bool:
        return j in self.d0 or any(j in d for d in self.dparts)

    def __str__(self) -> str:
        def fmt(s):
            return "{" + ",".join(str(x) for x in sorted(s)) + "}"

        pieces = []
        for i in range(self.k):
            pieces.append(f"D{i + 1}={fmt(self.dparts[i])}")
            pieces.append(f"E{i + 1}={fmt(self.eparts[i])}")
        pieces.append(f"D0={fmt(self.d0)}")
        return "(" + " ".join(pieces) + ")"


def dpartitions(blocks: Composition, target: SpComposition) -> list[DPartition]:
    """All D-partitions compatible with the given source blocks and target."""
    if blocks.total != target.total:
        raise ValueError("source and target must have the same total")
    sizes = blocks.parts
    t = len(sizes)
    k = target.k
    out: list[DPartition] = []

    def assign(j: int, loads: list[int], r_load: int, slots: list[tuple[int, bool]]):
        if j > t:
            if r_load == target.anisotropic_rank and all(
                loads[i] == target.parts[i] for i in range(k)
            ):
                dparts = [frozenset(b for b, (s, d) in zip(range(1, t + 1), slots) if s == i + 1 and d) for i in range(k)]
                eparts = [frozenset(b for b, (s, d) in zip(range(1, t + 1), slots) if s == i + 1 and not d) for i in range(k)]
                d0 = frozenset(b for b, (s, _) in zip(range(1, t + 1), slots) if s == 0)
                out.append(DPartition(tuple(dparts), tuple(eparts), d0))
            return
        size = sizes[j - 1]
        for i in range(k):
            if loads[i] + size <= target.parts[i]:
                loads[i] += size
                for direct in (True, False):
                    slots.append((i + 1, direct))
                    assign(j + 1, loads, r_load, slots)
                    slots.pop()
                loads[i] -= size
        if r_load + size <= target.anisotropic_rank:
            slots.append((0, True))
            assign(j + 1, loads, r_load + size, slots)
            slots.pop()

    assign(1, [0] * k, 0, [])
    return sorted(
        out,
        key=lambda dp: tuple(
            (dp.slot_of(j), not dp.is_direct(j)) for j in range(1, t + 1)
        ),
    )


def w_from_D(dp: DPartition, blocks: Composition, target: SpComposition) -> SignedPermutation:
    """The reduced element whose action realizes the D-partition.

    Within target slot i the direct blocks appear first in increasing source
    order, then the reversed ones in decreasing source order; each direct
    block is copied order preserving, each reversed block order reversing
    with all signs flipped.  The anisotropic slot holds D_0 in increasing
    order, order preserving, unsigned.
    """
    dp.validate(blocks, target)
    sizes = blocks.parts
    source = blocks.blocks()
    layout: list[tuple[int, bool]] = []
    for d, e in zip(dp.dparts, dp.eparts):
        layout.extend((j, True) for j in sorted(d))
        layout.extend((j, False) for j in sorted(e, reverse=True))
    layout.extend((j, True) for j in sorted(dp.d0))
    targets = split_sizes(blocks.total, tuple(sizes[j - 1] for j, _ in layout))
    tau = [0] * blocks.total
    mask = 0
    for (j, direct), dst in zip(layout, targets):
        src = source[j - 1]
        if direct:
            for offset in range(len(src)):
                tau[src.lo - 1 + offset] = dst.lo + offset
        else:
            for offset in range(len(src)):
                pos = src.lo + offset
                tau[pos - 1] = dst.hi - offset
                mask |= 1 << (pos - 1)
    return SignedPermutation(tuple(tau), mask)


def block_image(w: SignedPermutation, blocks: Composition) -> SignedPermutation:
    """Collapse w to a signed permutation of the source block indices.

    Requires every source block to map onto a contiguous run, monotonically,
    with a uniform sign; holds for all reduced elements produced here.
    """
    source = blocks.blocks()
    t = len(source)
    images = []
    for j, src in enumerate(source, start=1):
        pts = [w.tau[i - 1] for i in src]
        signs = {bool(w.mask >> (i - 1) & 1) for i in src}
        if len(signs) != 1:
            raise ValueError(f"block {j} has mixed signs under {w}")
        flipped = signs.pop()
        lo, hi = min(pts), max(pts)
        if hi - lo + 1 != len(pts):
            raise ValueError(f"block {j} is torn apart by {w}")
        if len(pts) > 1:
            increasing = all(b - a == 1 for a, b in zip(pts, pts[1:]))
            decreasing = all(a - b == 1 for a, b in zip(pts, pts[1:]))
            if flipped and not decreasing or not flipped and not increasing:
                raise ValueError(f"block {j} is scrambled by {w}")
        images.append((lo, flipped, j))
    order = sorted(images)
    tau = [0] * t
    mask = 0
    for rank, (_, flipped, j) in enumerate(order, start=1):
        tau[j - 1] = rank
        if flipped:
            mask |= 1 << (j - 1)
    return SignedPermutation(tuple(tau), mask)


# ---------------------------------------------------------------------------
# elementary symmetries


def standard_levis(n: int):
    from .compositions import sp_compositions_of

    return sp_compositions_of(n)


_ELEMENTARY_CACHE: dict[tuple, "SignedPermutation"] = {}


def _cached_elementary(comp: SpComposition, wall: SpComposition) -> "SignedPermutation":
    key = (comp, wall)
    if key not in _ELEMENTARY_CACHE:
        _ELEMENTARY_CACHE[key] = elementary_symmetry(comp, wall)
    return _ELEMENTARY_CACHE[key]


def conjugate_levi(w: SignedPermutation, comp: SpComposition) -> SpComposition | None:
    """The standard Levi datum of w(M) if w(M) is standard, else None."""
    source = levi_roots(comp)
    image = frozenset(w.act_root(beta) for beta in source)
    for cand in standard_levis(comp.total):
        if levi_roots(cand) == image:
            return cand
    return None


def in_weyl_set(w: SignedPermutation, comp: SpComposition) -> bool:
    """Membership in W(M): right reduced and conjugating M to a standard Levi."""
    return is_right_reduced(w, comp) and conjugate_levi(w, comp) is not None


def relative_walls(comp: SpComposition) -> list[SpComposition]:
    """Minimal Levis strictly containing M, one per relative simple root."""
    out = []
    parts = comp.parts
    r = comp.anisotropic_rank
    for i in range(len(parts) - 1):
        merged = parts[:i] + (parts[i] + parts[i + 1],) + parts[i + 2:]
        out.append(SpComposition(merged, r))
    if parts:
        out.append(SpComposition(parts[:-1], r + parts[-1]))
    return out


def elementary_symmetry(comp: SpComposition, wall: SpComposition) -> SignedPermutation:
    """The unique nontrivial element of W_{L_wall}(M); requires M maximal in the wall."""
    candidates = [
        w
        for w in levi_elements(wall)
        if not w.is_identity()
        and is_right_reduced(w, comp)
        and conjugate_levi(w, comp) is not None
    ]
    if len(candidates) != 1:
        raise AssertionError(
            f"wall {wall} over {comp} has {len(candidates)} nontrivial reduced elements"
        )
    return candidates[0]


def relative_length(w: SignedPermutation, comp: SpComposition) -> int:
    """Number of restricted positive roots sent negative.

    Restricted roots are taken without multiplicity: distinct positive roots
    with the same nonzero restriction to the split center of M count once.
    The image restriction equals w applied to the source restriction, so no
    second projection is needed.
    """
    from .rootspace import project_vector

    restrictions = set()
    for beta in positive_roots(comp.total):
        v = project_vector(beta, comp)
        if any(x != 0 for x in v):
            restrictions.add(v)
    return sum(1 for v in restrictions if not is_positive_fraction_vector(w.act(v)))


def conjugate_levi_checked(w: SignedPermutation, comp: SpComposition) -> SpComposition:
    target = conjugate_levi(w, comp)
    if target is None:
        raise ValueError(f"{w} does not send the Levi of {comp} to a standard one")
    return target


def is_positive_fraction_vector(vec) -> bool:
    for x in vec:
        if x != 0:
            return x > 0
    return False


def elementary_factorization(
    w: SignedPermutation, comp: SpComposition
) -> list[tuple[SpComposition, SignedPermutation]]:
    """Factor w in W(M) as s_l ... s_1 with each s_i elementary for the running Levi.

    Returns the list [(M_1, s_1), (M_2, s_2), ...] where M_1 = M and
    s_{i+1} is elementary for M_{i+1} = s_i(M_i); greedy descent on the
    restricted inversion number, which strictly drops at every step.
    """
    if not in_weyl_set(w, comp):
        raise ValueError(f"{w} is not in W(M) for M = {comp}")
    steps: list[tuple[SpComposition, SignedPermutation]] = []
    current = comp
    rest = w
    while not rest.is_identity():
        best = None
        for wall in relative_walls(current):
            s = _cached_elementary(current, wall)
            candidate = rest * s.inverse()
            nxt = conjugate_levi_checked(s, current)
            if relative_length(candidate, nxt) < relative_length(rest, current):
                best = (s, nxt, candidate)
                break
        if best is None:
            raise AssertionError(f"no descent available for {rest} over {current}")
        s, nxt, candidate = best
        steps.append((current, s))
        current, rest = nxt, candidate
        if not rest.is_identity() and not in_weyl_set(rest, current):
            raise AssertionError("descent left the relative Weyl set")
    return steps


def factorization_distance(w: SignedPermutation, comp: SpComposition) -> int:
    """Oracle: breadth-first minimal number of elementary symmetries composing to w."""
    if not in_weyl_set(w, comp):
        raise ValueError(f"{w} is not in W(M) for M = {comp}")
    if w.is_identity():
        return 0
    target = (w.tau, w.mask)
    frontier = [(comp, SignedPermutation.identity(comp.total))]
    seen = {(comp, frontier[0][1].tau, frontier[0][1].mask)}
    dist = 0
    while frontier:
        dist += 1
        if dist > 64:
            raise AssertionError("runaway search for a factorization")
        nxt = []
        for cur_comp, acc in frontier:
            for wall in relative_walls(cur_comp):
                s = _cached_elementary(cur_comp, wall)
                new_acc = s * acc
                if (new_acc.tau, new_acc.mask) == target:
                    return dist
                new_comp = conjugate_levi_checked(s, cur_comp)
                key = (new_comp, new_acc.tau, new_acc.mask)
                if key not in seen:
                    seen.add(key)
                    nxt.append((new_comp, new_acc))
        frontier = nxt
    raise AssertionError(f"{w} is not a product of elementary symmetries")


# ---------------------------------------------------------------------------
# distinguished elements of the residue analysis


def block_rotation(i: int, m: int, n: int) -> SignedPermutation:
    """Permutation moving the 2n run from slots [m+1, m+2n] to [i+1, i+2n].

    Coordinates 1..i stay put, the 2n run lands right after them and the
    remaining m-i singletons follow in order.  No signs.
    """
    if not 0 <= i <= m:
        raise ValueError(f"slot index {i} outside [0, {m}]")
    nn = m + 2 * n
    tau = [0] * nn
    for p in range(1, i + 1):
        tau[p - 1] = p
    for s in range(1, 2 * n + 1):
        tau[m + s - 1] = i + s
    for s in range(1, m - i + 1):
        tau[i + s - 1] = i + 2 * n + s
    return SignedPermutation(tuple(tau), 0)


def full_flip(m: int, n: int) -> SignedPermutation:
    """The longest relative element for the (1^m, 2n) Levi: every slot negated.

    Identity on the singleton slots, order reversing with signs on the 2n
    run, signs on the singletons.
    """
    nn = m + 2 * n
    tau = list(range(1, nn + 1))
    mask = (1 << nn) - 1
    for p in range(m + 1, nn + 1):
        tau[p - 1] = m + 1 + nn - p
    return SignedPermutation(tuple(tau), mask)


# ---------------------------------------------------------------------------
# fast index-based machinery for brute-force double-coset selection


@lru_cache(maxsize=None)
def _group_index(n: int):
    """Element list, index lookup, lengths, and simple-reflection tables for W_N.

    Returns (elements, index, lengths, left_tables, right_tables) where the
    tables map generator position -> array over element indices.  Generators
    are the N-1 adjacent transpositions followed by the sign flip of the last
    letter.
    """
    elements = all_elements(n)
    index = {(w.tau, w.mask): i for i, w in enumerate(elements)}
    lengths = [length(w) for w in elements]
    gens: list[SignedPermutation] = []
    for i in range(1, n):
        tau = list(range(1, n + 1))
        tau[i - 1], tau[i] = tau[i], tau[i - 1]
        gens.append(SignedPermutation(tuple(tau), 0))
    gens.append(SignedPermutation(tuple(range(1, n + 1)), 1 << (n - 1)))
    left_tables, right_tables = [], []
    for s in gens:
        left_tables.append([index[((s * w).tau, (s * w).mask)] for w in elements])
        right_tables.append([index[((w * s).tau, (w * s).mask)] for w in elements])
    return elements, index, lengths, left_tables, right_tables


def _levi_generator_positions(comp) -> list[int]:
    """Positions of the simple reflections generating W_M (0-based, long root last)."""
    n = comp.total
    out = []
    blocks = _gl_blocks(comp) + [_sp_interval(comp)]
    for block in blocks:
        for i in range(block.lo, block.hi):
            out.append(i - 1)
    if len(_sp_interval(comp)) > 0:
        out.append(n - 1)
    return out


def double_coset_min_reps_brute(left, right) -> list[SignedPermutation]:
    """Oracle: the minimal-length element of every (W_L, W_M) double coset.

    Greedy memoized descent: an element with a shorter neighbour under a
    generator of either side inherits that neighbour's representative;
    elements are processed in increasing length so the target is resolved.
    Uniqueness of the descent-free element per coset is certified separately
    by the fiber-size check in ``tiles_group_exactly``.
    """
    n = left.total
    elements, _, lengths, left_tables, right_tables = _group_index(n)
    l_gens = _levi_generator_positions(left)
    r_gens = _levi_generator_positions(right)
    order = sorted(range(len(elements)), key=lambda i: lengths[i])
    rep = [-1] * len(elements)
    for i in order:
        target = None
        for g in l_gens:
            j = left_tables[g][i]
            if lengths[j] < lengths[i]:
                target = j
                break
        if target is None:
            for g in r_gens:
                j = right_tables[g][i]
                if lengths[j] < lengths[i]:
                    target = j
                    break
        rep[i] = i if target is None else rep[target]
    reps = sorted(set(rep))
    return [elements[i] for i in reps]


# ---------------------------------------------------------------------------
# double-coset tiling


def group_order(n: int, kind: str = "sp") -> int:
    from math import factorial

    return factorial(n) * (1 << n if kind == "sp" else 1)


def levi_order(comp) -> int:
    from math import factorial

    out = 1
    for p in _gl_blocks(comp):
        out *= factorial(len(p))
    r = len(_sp_interval(comp))
    out *= factorial(r) * (1 << r)
    return out


def double_coset_size(
    w: SignedPermutation,
    left,
    right,
    left_elements: list[SignedPermutation] | None = None,
    right_elements: list[SignedPermutation] | None = None,
) -> int:
    """|W_L w W_M| via the stabilizer formula, iterating over the smaller side."""
    ol, om = levi_order(left), levi_order(right)
    w_inv = w.inverse()
    if om <= ol:
        elements = right_elements if right_elements is not None else levi_elements(right)
        stab = sum(1 for s in elements if in_levi_subgroup(w * s * w_inv, left))
    else:
        elements = left_elements if left_elements is not None else levi_elements(left)
        stab = sum(1 for s in elements if in_levi_subgroup(w_inv * s * w, right))
    size, rem = divmod(ol * om, stab)
    if rem:
        raise AssertionError("stabilizer does not divide the product of orders")
    return size


def tiles_group_exactly(
    left,
    right,
    reps: list[SignedPermutation] | None = None,
    left_elements: list[SignedPermutation] | None = None,
    right_elements: list[SignedPermutation] | None = None,
) -> bool:
    """Whether the reduced double cosets are pairwise distinct and cover the group.

    Distinct reduced representatives give distinct double cosets, so covering
    is equivalent to the coset sizes summing to the group order.
    """
    if reps is None:
        reps = double_coset_reps(left, right)
    if len(set((w.tau, w.mask) for w in reps)) != len(reps):
        return False
    total = sum(
        double_coset_size(w, left, right, left_elements, right_elements) for w in reps
    )
    return total == group_order(left.total)
