"""Exact matrix realizations: Sp_N inside GL_{2N}, embeddings and generators.

Sp_N is the isometry group of the form with Gram matrix J = [[0, w], [-w, 0]]
where w is the antidiagonal of ones.  The functions here provide membership
tests, the block-diagonal embedding iota, the two-factor embedding of
Sp_a x Sp_b, root-group unipotents, torus elements and matrix representatives
of signed permutations.  They exist to serve as an independent oracle for the
root-set combinatorics, so they favour clarity over speed.
"""

from __future__ import annotations

import random
from fractions import Fraction

Matrix = tuple[tuple[Fraction, ...], ...]


def matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, mid, m = len(a), len(b), len(b[0])
    if len(a[0]) != mid:
        raise ValueError("matrix size mismatch")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_inv(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse over exact rationals."""
    n = len(a)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def antidiag_ones(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i + j == n - 1 else 0) for j in range(n)) for i in range(n)
    )


def gram(n: int) -> Matrix:
    """J = [[0, w_n], [-w_n, 0]], the symplectic Gram matrix for Sp_n."""
    w = antidiag_ones(n)
    zero = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    top = tuple(zr + wr for zr, wr in zip(zero, w))
    bottom = tuple(tuple(-x for x in wr) + zr for wr, zr in zip(w, zero))
    return top + bottom


def is_symplectic(g: Matrix, n: int) -> bool:
    if len(g) != 2 * n or any(len(row) != 2 * n for row in g):
        return False
    j = gram(n)
    return mat_mul(mat_mul(transpose(g), j), g) == j


def star(g: Matrix) -> Matrix:
    """g* = w g^{-T} w for g in GL_m, with w the antidiagonal of ones."""
    w = antidiag_ones(len(g))
    return mat_mul(mat_mul(w, transpose(mat_inv(g))), w)


def block_diag(*blocks: Matrix) -> Matrix:
    size = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[offset + i][offset + j] = x
        offset += len(b)
    return tuple(tuple(row) for row in out)


def iota(gl_factors: list[Matrix], sp_factor: Matrix | None = None) -> Matrix:
    """diag(g_1, ..., g_k, h, g_k*, ..., g_1*); h symplectic or omitted."""
    for g in gl_factors:
        if len(g) != len(g[0]):
            raise ValueError("GL factors must be square")
    middle: list[Matrix] = []
    if sp_factor is not None:
        if len(sp_factor) % 2:
            raise ValueError("symplectic factor must have even size")
        if not is_symplectic(sp_factor, len(sp_factor) // 2):
            raise ValueError("middle factor is not symplectic")
        middle = [sp_factor]
    stars = [star(g) for g in reversed(gl_factors)]
    return block_diag(*gl_factors, *middle, *stars)


def j_embed(h1: Matrix, h2: Matrix) -> Matrix:
    """The two-factor embedding of Sp_a x Sp_b into Sp_{a+b}.

    h1 contributes its quadrants to the outer corners, h2 sits in the middle;
    the image is the centralizer of iota(I_a, -I_b).
    """
    if len(h1) % 2 or len(h2) % 2:
        raise ValueError("symplectic factors must have even size")
    a, b = len(h1) // 2, len(h2) // 2
    if not is_symplectic(h1, a) or not is_symplectic(h2, b):
        raise ValueError("factors must be symplectic")
    size = 2 * (a + b)
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(a):
        for j in range(a):
            out[i][j] = h1[i][j]
            out[i][j + a + 2 * b] = h1[i][j + a]
            out[i + a + 2 * b][j] = h1[i + a][j]
            out[i + a + 2 * b][j + a + 2 * b] = h1[i + a][j + a]
    for i in range(2 * b):
        for j in range(2 * b):
            out[a + i][a + j] = h2[i][j]
    return tuple(tuple(row) for row in out)


def minus_marker(a: int, b: int) -> Matrix:
    """iota(I_a, -I_b) = diag(I_a, -I_{2b}, I_a), whose centralizer is the period subgroup."""
    n = a + b
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(2 * n):
        out[i][i] = Fraction(-1 if a <= i < a + 2 * b else 1)
    return tuple(tuple(row) for row in out)


# ---------------------------------------------------------------------------
# generators


def torus(coords) -> Matrix:
    """iota(t_1, ..., t_N) = diag(t_1, ..., t_N, t_N^-1, ..., t_1^-1)."""
    ts = [Fraction(t) for t in coords]
    n = len(ts)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i, t in enumerate(ts):
        out[i][i] = t
        out[2 * n - 1 - i][2 * n - 1 - i] = Fraction(1) / t
    return tuple(tuple(row) for row in out)


def root_unipotent(root, n: int, c=Fraction(1)) -> Matrix:
    """u_beta(c) for a type C root given as a coordinate vector of ints."""
    c = Fraction(c)
    nz = [(i + 1, x) for i, x in enumerate(root) if x]
    out = [list(row) for row in identity(2 * n)]
    if len(nz) == 1:
        (i, x) = nz[0]
        if abs(x) != 2:
            raise ValueError(f"not a root vector: {root}")
        if x > 0:
            out[i - 1][2 * n - i] += c
        else:
            out[2 * n - i][i - 1] += c
    elif len(nz) == 2:
        (i, xi), (j, xj) = nz
        if {abs(xi), abs(xj)} != {1}:
            raise ValueError(f"not a root vector: {root}")
        if xi == 1 and xj == -1:
            out[i - 1][j - 1] += c
            out[2 * n - j][2 * n - i] -= c
        elif xi == -1 and xj == 1:
            out[j - 1][i - 1] += c
            out[2 * n - i][2 * n - j] -= c
        elif xi == 1 and xj == 1:
            out[i - 1][2 * n - j] += c
            out[j - 1][2 * n - i] += c
        else:
            out[2 * n - j][i - 1] += c
            out[2 * n - i][j - 1] += c
    else:
        raise ValueError(f"not a root vector: {root}")
    return tuple(tuple(row) for row in out)


def gl_root_unipotent(i: int, j: int, n: int, c=Fraction(1)) -> Matrix:
    """I_n + c e_{i,j} in GL_n (i != j, 1-indexed)."""
    if i == j:
        raise ValueError("off-diagonal entry required")
    out = [list(row) for row in identity(n)]
    out[i - 1][j - 1] += Fraction(c)
    return tuple(tuple(row) for row in out)


def signed_permutation_matrix(w, n: int) -> Matrix:
    """A symplectic representative of a signed permutation of rank n.

    Unsigned letters permute the first n coordinates (and mirror on the last
    n); a flipped letter i sends f_i to -f_{2n+1-tau(i)} and f_{2n+1-i} to
    f_{tau(i)}, which keeps the Gram matrix fixed.
    """
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(1, n + 1):
        t = w.tau[i - 1]
        if w.mask >> (i - 1) & 1:
            out[2 * n - t][i - 1] = Fraction(-1)
            out[t - 1][2 * n - i] = Fraction(1)
        else:
            out[t - 1][i - 1] = Fraction(1)
            out[2 * n - t][2 * n - i] = Fraction(1)
    return tuple(tuple(row) for row in out)


def permutation_matrix(tau: tuple[int, ...]) -> Matrix:
    n = len(tau)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, t in enumerate(tau, start=1):
        out[t - 1][i - 1] = Fraction(1)
    return tuple(tuple(row) for row in out)


def random_symplectic(n: int, rng: random.Random, steps: int = 6) -> Matrix:
    """Product of random root unipotents and a torus element; exactly symplectic."""
    from .weyl import positive_roots

    roots = positive_roots(n, "sp")
    g = torus([rng.choice([1, 2, 3, Fraction(1, 2)]) for _ in range(n)])
    for _ in range(steps):
        beta = rng.choice(roots)
        if rng.random() < 0.5:
            beta = tuple(-x for x in beta)
        c = Fraction(rng.randint(-2, 2))
        if c:
            g = mat_mul(g, root_unipotent(beta, n, c))
    return g


# ---------------------------------------------------------------------------
# membership patterns


def sp_block_pattern(comp) -> list[int]:
    """Block index of each of the 2N coordinates for the standard parabolic."""
    sizes = list(comp.parts) + [2 * comp.anisotropic_rank] + [p for p in reversed(comp.parts)]
    out = []
    for b, s in enumerate(sizes):
        out.extend([b] * s)
    return out


def in_standard_sp_parabolic(g: Matrix, comp) -> bool:
    """Block upper-triangular test against the pattern of the composition."""
    pattern = sp_block_pattern(comp)
    size = len(pattern)
    if len(g) != size:
        raise ValueError("matrix size does not match the composition")
    for i in range(size):
        for j in range(size):
            if pattern[i] > pattern[j] and g[i][j] != 0:
                return False
    return True


def gl_block_pattern(comp) -> list[int]:
    out = []
    for b, s in enumerate(comp.parts):
        out.extend([b] * s)
    return out


def in_standard_gl_parabolic(g: Matrix, comp) -> bool:
    pattern = gl_block_pattern(comp)
    if len(g) != len(pattern):
        raise ValueError("matrix size does not match the composition")
    for i in range(len(pattern)):
        for j in range(len(pattern)):
            if pattern[i] > pattern[j] and g[i][j] != 0:
                return False
    return True


def in_period_subgroup(g: Matrix, a: int, b: int) -> bool:
    """Membership in the embedded Sp_a x Sp_b: commutes with the marker, right shape."""
    marker = minus_marker(a, b)
    if mat_mul(g, marker) != mat_mul(marker, g):
        return False
    return is_symplectic(g, a + b)
