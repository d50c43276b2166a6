"""Lie subalgebras of pgl_m(R): spans, limits, contractions, invariants.

Subalgebras are stored as spans of trace-free rational matrices.  Conjugacy
limits along factored sequences are computed exactly through the weight
filtration: in the diagonal frame, grade every matrix position (i, j) by
w_i - w_j, collect for each grade d the leading parts of the subspace of
elements supported on grades >= d, and conjugate the resulting span back.
Abstract (basis-only) Lie algebras are handled as structure-constant tables,
which is what contractions produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import linalg
from .errors import (
    DecompositionError,
    DimError,
    EmbeddingError,
    NoMatch,
    NotClosed,
    NotSubalgebra,
    SignatureError,
)
from .linalg import Mat, Vec
from .projective import FactoredSequence

Signature = tuple[tuple[int, int], ...]


def _flatten(x: Mat) -> Vec:
    return [c for row in x for c in row]


def _unflatten(v: Vec, m: int) -> Mat:
    return [list(v[i * m : (i + 1) * m]) for i in range(m)]


def _subspace_with_zeros(vectors: list[Vec], positions: list[int]) -> list[Vec]:
    """Basis of the subspace of span(vectors) vanishing at the given positions."""
    if not vectors:
        return []
    if not positions:
        return [v[:] for v in vectors]
    constraint = [[v[p] for v in vectors] for p in positions]
    combos = linalg.nullspace(constraint)
    out: list[Vec] = []
    n = len(vectors[0])
    for c in combos:
        vec = [Fraction(0)] * n
        for coeff, v in zip(c, vectors):
            if coeff != 0:
                for i in range(n):
                    vec[i] += coeff * v[i]
        out.append(vec)
    return out


class LieAlgebraSpan:
    """Span of trace-free matrices in pgl_m(R), closed under the commutator.

    The basis is kept exactly as given (after removing traces); closure under
    the bracket is verified on construction unless ``check_closed=False``.
    """

    def __init__(self, m: int, basis, *, check_closed: bool = True):
        self.m = int(m)
        mats: list[Mat] = []
        for b in basis:
            rows = linalg.frac_rows(b)
            if len(rows) != self.m or any(len(r) != self.m for r in rows):
                raise DimError(f"basis matrix is not {self.m}x{self.m}")
            tr = sum(rows[i][i] for i in range(self.m))
            if tr != 0:
                shift = tr / self.m
                for i in range(self.m):
                    rows[i][i] -= shift
            mats.append(rows)
        flat = [_flatten(x) for x in mats]
        if linalg.rank(flat) != len(mats):
            raise DimError("basis matrices are linearly dependent after trace removal")
        self.basis: list[Mat] = mats
        if check_closed and not self.is_closed():
            raise NotClosed("span is not closed under the matrix commutator")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def flattened(self) -> list[Vec]:
        return [_flatten(x) for x in self.basis]

    def span_basis(self) -> list[Vec]:
        """Canonical (RREF) basis of the flattened span."""
        return linalg.row_space_basis(self.flattened())

    def contains(self, x: Mat) -> bool:
        rows = linalg.frac_rows(x)
        tr = sum(rows[i][i] for i in range(self.m))
        if tr != 0:
            shift = tr / self.m
            for i in range(self.m):
                rows[i][i] -= shift
        return linalg.in_row_space(self.flattened(), _flatten(rows))

    def is_closed(self) -> bool:
        flat = self.flattened()
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                br = linalg.commutator(self.basis[i], self.basis[j])
                if not linalg.in_row_space(flat, _flatten(br)):
                    return False
        return True

    def span_equals(self, other: "LieAlgebraSpan") -> bool:
        return self.m == other.m and self.span_basis() == other.span_basis()

    def structure_constants(self) -> "BracketTable":
        """Structure constants c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k."""
        n = self.dim
        basis_rows = self.flattened()
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                br = _flatten(linalg.commutator(self.basis[i], self.basis[j]))
                coords = linalg.coordinates_in_basis(basis_rows, br)
                if coords is None:
                    raise NotClosed(
                        f"bracket of basis elements {i}, {j} leaves the span"
                    )
                for k in range(n):
                    c[i][j][k] = coords[k]
                    c[j][i][k] = -coords[k]
        return BracketTable(c)

    def conjugated(self, g: Mat) -> "LieAlgebraSpan":
        """Ad_g of the span, for an invertible rational matrix g."""
        ginv = linalg.inverse(linalg.frac_rows(g))
        new = [linalg.mat_mul(linalg.mat_mul(linalg.frac_rows(g), x), ginv) for x in self.basis]
        return LieAlgebraSpan(self.m, new, check_closed=False)

    def __repr__(self) -> str:
        return f"LieAlgebraSpan(m={self.m}, dim={self.dim})"


class BracketTable:
    """Structure constants of an abstract Lie algebra in a fixed basis."""

    __slots__ = ("c",)

    def __init__(self, c):
        frozen = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in c
        )
        n = len(frozen)
        if any(len(plane) != n or any(len(row) != n for row in plane) for plane in frozen):
            raise DimError("structure constants must form an n x n x n array")
        self.c: tuple[tuple[tuple[Fraction, ...], ...], ...] = frozen

    @property
    def dim(self) -> int:
        return len(self.c)

    def bracket_coords(self, u: Vec, v: Vec) -> Vec:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] == 0:
                    continue
                f = u[i] * v[j]
                row = self.c[i][j]
                for k in range(n):
                    if row[k] != 0:
                        out[k] += f * row[k]
        return out

    def is_antisymmetric(self) -> bool:
        n = self.dim
        return all(
            self.c[i][j][k] == -self.c[j][i][k]
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )

    def satisfies_jacobi(self) -> bool:
        n = self.dim
        basis = [[Fraction(1 if s == i else 0) for s in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = [Fraction(0)] * n
                    for a, b, c_ in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_coords(basis[b], basis[c_])
                        term = self.bracket_coords(basis[a], inner)
                        for s in range(n):
                            total[s] += term[s]
                    if any(x != 0 for x in total):
                        return False
        return True

    def is_abelian(self) -> bool:
        return all(
            x == 0 for plane in self.c for row in plane for x in row
        )

    # -- subspace machinery for invariants --------------------------------

    def _product_space(self, a: list[Vec], b: list[Vec]) -> list[Vec]:
        prods = [self.bracket_coords(u, v) for u in a for v in b]
        return linalg.row_space_basis([p for p in prods if any(x != 0 for x in p)])

    def derived_series_dims(self) -> tuple[int, ...]:
        cur = linalg.identity(self.dim)
        dims = [self.dim]
        while True:
            nxt = self._product_space(cur, cur)
            if len(nxt) == dims[-1]:
                break
            dims.append(len(nxt))
            cur = nxt
            if not nxt:
                break
        return tuple(dims)

    def lower_central_dims(self) -> tuple[int, ...]:
        full = linalg.identity(self.dim)
        cur = full
        dims = [self.dim]
        while True:
            nxt = self._product_space(full, cur)
            if len(nxt) == dims[-1]:
                break
            dims.append(len(nxt))
            cur = nxt
            if not nxt:
                break
        return tuple(dims)

    def center_dim(self) -> int:
        n = self.dim
        # rows: for each j, k the linear form  x -> sum_i x_i c^k_{ij}
        constraints: list[Vec] = []
        for j in range(n):
            for k in range(n):
                constraints.append([self.c[i][j][k] for i in range(n)])
        return len(linalg.nullspace(constraints))

    def killing_matrix(self) -> Mat:
        n = self.dim
        k_mat = linalg.zeros(n, n)
        for i in range(n):
            for j in range(n):
                acc = Fraction(0)
                for k in range(n):
                    row = self.c[i][k]
                    for l in range(n):
                        if row[l] != 0 and self.c[j][l][k] != 0:
                            acc += row[l] * self.c[j][l][k]
                k_mat[i][j] = acc
        return k_mat

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"BracketTable(dim={self.dim})"


def bracket(x: Mat, y: Mat) -> Mat:
    """Matrix commutator [x, y] = xy - yx."""
    return linalg.commutator(linalg.frac_rows(x), linalg.frac_rows(y))


def truncated_exp(x: Mat, order: int) -> Mat:
    """sum_{r<=order} x^r / r! -- a rational approximation of exp(x)."""
    m = len(x)
    x = linalg.frac_rows(x)
    out = linalg.identity(m)
    power = linalg.identity(m)
    fact = 1
    for r in range(1, order + 1):
        power = linalg.mat_mul(power, x)
        fact *= r
        term = linalg.mat_scale(power, Fraction(1, fact))
        out = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(out, term)]
    return out


# ---------------------------------------------------------------------------
# Orthogonal block algebras
# ---------------------------------------------------------------------------


def validate_signature(sig, m: int | None = None) -> Signature:
    """Normalize and check a block signature ((p_0,q_0), (p_1,q_1), ...).

    A flat pair of integers denotes a single block, mirroring the text
    syntax where ``(4,1)`` is the one-block signature and ``((4),(1))``
    spells out two blocks.
    """
    sig = tuple(sig)
    if len(sig) == 2 and all(isinstance(entry, int) for entry in sig):
        sig = (sig,)
    blocks = []
    for block in sig:
        if isinstance(block, int):
            block = (block, 0)
        block = tuple(block)
        if len(block) == 1:
            block = (block[0], 0)
        p, q = block
        p, q = int(p), int(q)
        if p < 0 or q < 0 or p + q < 1:
            raise SignatureError(f"invalid block ({p},{q})")
        blocks.append((p, q))
    if not blocks:
        raise SignatureError("signature needs at least one block")
    total = sum(p + q for p, q in blocks)
    if m is not None and total != m:
        raise SignatureError(f"signature blocks sum to {total}, expected {m}")
    return tuple(blocks)


def signature_str(sig: Signature) -> str:
    parts = []
    for p, q in sig:
        parts.append(f"({p})" if q == 0 else f"({p},{q})")
    return "(" + ",".join(parts) + ")" if len(sig) > 1 else parts[0]


def _block_ranges(sig: Signature) -> list[range]:
    out = []
    start = 0
    for p, q in sig:
        out.append(range(start, start + p + q))
        start += p + q
    return out


def _form_diagonal(sig: Signature) -> list[int]:
    """The diagonal of the block form J: -1 on the first p coords of a block."""
    j: list[int] = []
    for p, q in sig:
        j.extend([-1] * p + [1] * q)
    return j


def build_po(sig, m: int | None = None) -> LieAlgebraSpan:
    """The block algebra po(sig) in pgl_m(R).

    Basis order: for each block in order, the generators
    M_ab = E_ab - J_a J_b E_ba for a < b inside the block (sorted by (a, b));
    then all strictly-lower cross-block matrix units E_rc sorted row-major.
    """
    sig = validate_signature(sig, m)
    m = sum(p + q for p, q in sig)
    jdiag = _form_diagonal(sig)
    ranges = _block_ranges(sig)
    basis: list[Mat] = []
    for rng in ranges:
        for a in rng:
            for b in rng:
                if a < b:
                    x = linalg.zeros(m, m)
                    x[a][b] = Fraction(1)
                    x[b][a] = Fraction(-jdiag[a] * jdiag[b])
                    basis.append(x)
    for r in range(m):
        for c in range(m):
            block_r = next(i for i, rng in enumerate(ranges) if r in rng)
            block_c = next(i for i, rng in enumerate(ranges) if c in rng)
            if block_r > block_c:
                x = linalg.zeros(m, m)
                x[r][c] = Fraction(1)
                basis.append(x)
    return LieAlgebraSpan(m, basis, check_closed=False)


def po_dimension(sig) -> int:
    sig = validate_signature(sig)
    sizes = [p + q for p, q in sig]
    d = sum(s * (s - 1) // 2 for s in sizes)
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            d += sizes[i] * sizes[j]
    return d


# ---------------------------------------------------------------------------
# Conjugacy limits
# ---------------------------------------------------------------------------


def conjugacy_limit(alg: LieAlgebraSpan, seq: FactoredSequence) -> LieAlgebraSpan:
    """The t -> 0 limit of Ad_{b(t)} alg for a factored sequence b.

    The limit always has the same dimension as ``alg`` and is verified to be
    bracket-closed.
    """
    m = alg.m
    if seq.dim != m:
        raise DimError(f"sequence dimension {seq.dim} != algebra ambient {m}")
    right = seq.right_rows()
    rinv = linalg.inverse(right)
    frame = [linalg.mat_mul(linalg.mat_mul(right, x), rinv) for x in alg.basis]
    vectors = [_flatten(x) for x in frame]
    w = seq.weights
    grade = [w[i] - w[j] for i in range(m) for j in range(m)]
    grades = sorted({g for g in grade})
    limit_vecs: list[Vec] = []
    for d in grades:
        low = [p for p in range(m * m) if grade[p] < d]
        sub = _subspace_with_zeros(vectors, low)
        for v in sub:
            lead = [x if grade[p] == d else Fraction(0) for p, x in enumerate(v)]
            if any(x != 0 for x in lead):
                limit_vecs.append(lead)
    basis_vecs = linalg.row_space_basis(limit_vecs)
    if len(basis_vecs) != alg.dim:
        raise DecompositionError(
            "weight filtration lost dimensions; this cannot happen for a "
            "bracket-closed span"
        )
    left = seq.left_rows()
    linv = linalg.inverse(left)
    mats = [
        linalg.mat_mul(linalg.mat_mul(left, _unflatten(v, m)), linv) for v in basis_vecs
    ]
    out = LieAlgebraSpan(m, mats, check_closed=True)
    return out


def z_and_nplus(
    alg: LieAlgebraSpan, seq: FactoredSequence
) -> tuple[LieAlgebraSpan, LieAlgebraSpan]:
    """Split a conjugacy limit into centralizer and contracted translations.

    Returns (z, n_plus): z is the part of ``alg`` commuting with the sequence
    generator (grade-0 in the diagonal frame), n_plus the strictly-positive
    part of the limit with respect to the generator X_b of b_n = exp(n X_b)
    (equivalently the strictly *negative* t-grades).  Their direct sum must be
    the whole conjugacy limit; DecompositionError otherwise.
    """
    m = alg.m
    if seq.dim != m:
        raise DimError(f"sequence dimension {seq.dim} != algebra ambient {m}")
    right = seq.right_rows()
    rinv = linalg.inverse(right)
    frame = [linalg.mat_mul(linalg.mat_mul(right, x), rinv) for x in alg.basis]
    vectors = [_flatten(x) for x in frame]
    w = seq.weights
    grade = [w[i] - w[j] for i in range(m) for j in range(m)]

    nonzero_grade = [p for p in range(m * m) if grade[p] != 0]
    z_vecs = _subspace_with_zeros(vectors, nonzero_grade)

    limit = conjugacy_limit(alg, seq)
    left = seq.left_rows()
    linv = linalg.inverse(left)
    limit_frame = [
        _flatten(linalg.mat_mul(linalg.mat_mul(linv, x), left)) for x in limit.basis
    ]
    nonneg = [p for p in range(m * m) if grade[p] >= 0]
    nplus_vecs = _subspace_with_zeros(limit_frame, nonneg)

    if len(z_vecs) + len(nplus_vecs) != limit.dim or linalg.rank(
        z_vecs + nplus_vecs
    ) != limit.dim:
        raise DecompositionError(
            "centralizer + positive part do not span the conjugacy limit"
        )
    back = lambda vecs: [
        linalg.mat_mul(linalg.mat_mul(left, _unflatten(v, m)), linv) for v in vecs
    ]
    z = LieAlgebraSpan(m, back(z_vecs), check_closed=True) if z_vecs else LieAlgebraSpan(m, [], check_closed=False)
    np_ = (
        LieAlgebraSpan(m, back(nplus_vecs), check_closed=True)
        if nplus_vecs
        else LieAlgebraSpan(m, [], check_closed=False)
    )
    return z, np_


def embed_and_limit(
    alg: LieAlgebraSpan, m_target: int, seq: FactoredSequence
) -> LieAlgebraSpan:
    """Pad ``alg`` into pgl_{m_target} and take the limit along ``seq``.

    The sequence must be block-diagonal with respect to the embedding: no
    mixing between the first ``alg.m`` coordinates and the padding ones.
    """
    m = alg.m
    if m_target < m:
        raise EmbeddingError(f"target dimension {m_target} below ambient {m}")
    if seq.dim != m_target:
        raise DimError(f"sequence dimension {seq.dim} != target {m_target}")
    for mat in (seq.left_rows(), seq.right_rows()):
        for i in range(m_target):
            for j in range(m_target):
                if (i < m) != (j < m) and mat[i][j] != 0:
                    raise EmbeddingError(
                        "sequence factors mix embedded block with padding"
                    )
    padded = []
    for x in alg.basis:
        big = linalg.zeros(m_target, m_target)
        for i in range(m):
            for j in range(m):
                big[i][j] = x[i][j]
        padded.append(big)
    return conjugacy_limit(LieAlgebraSpan(m_target, padded, check_closed=False), seq)


# ---------------------------------------------------------------------------
# Matching limits against permuted block algebras
# ---------------------------------------------------------------------------


def enumerate_signatures(m: int) -> list[Signature]:
    """All ordered block signatures with p_i >= q_i >= 0 summing to m."""
    out: list[Signature] = []

    def extend(prefix: list[tuple[int, int]], remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for size in range(1, remaining + 1):
            for q in range(0, size // 2 + 1):
                p = size - q
                extend(prefix + [(p, q)], remaining - size)

    extend([], m)
    return sorted(out)


def match_limit_geometry(limit: LieAlgebraSpan) -> tuple[Signature, tuple[int, ...]]:
    """Identify a limit span as Ad_{P(perm)} po(sig).

    Returns the lexicographically smallest signature, and for it the smallest
    permutation tuple, such that conjugating po(sig) by the permutation matrix
    reproduces the span exactly.  Raises NoMatch if no pair works.
    """
    m = limit.m
    target = limit.span_basis()
    target_support = {
        p for vec in target for p in range(m * m) if vec[p] != 0
    }
    dim = limit.dim
    for sig in enumerate_signatures(m):
        if po_dimension(sig) != dim:
            continue
        base = build_po(sig, m)
        base_flat = base.flattened()
        base_support = {
            (p // m, p % m)
            for vec in base_flat
            for p in range(m * m)
            if vec[p] != 0
        }
        for perm in permutations(range(m)):
            inv = [0] * m
            for i, v in enumerate(perm):
                inv[v] = i
            # Ad_{P} E_{ij} = E_{perm^-1(i), perm^-1(j)}
            mapped_support = {inv[i] * m + inv[j] for (i, j) in base_support}
            if mapped_support != target_support:
                continue
            mapped = []
            for vec in base_flat:
                new = [Fraction(0)] * (m * m)
                for i in range(m):
                    for j in range(m):
                        x = vec[i * m + j]
                        if x != 0:
                            new[inv[i] * m + inv[j]] = x
                mapped.append(new)
            if linalg.row_space_basis(mapped) == target:
                return sig, tuple(perm)
    raise NoMatch("limit span is not a permuted orthogonal block algebra")


# ---------------------------------------------------------------------------
# Contractions
# ---------------------------------------------------------------------------


def contract(h: BracketTable | LieAlgebraSpan, t_indices) -> BracketTable:
    """Contract a Lie algebra along the subalgebra spanned by basis indices.

    In the split basis the contracted bracket keeps [t, t] whole, projects
    [t, t^c] onto the complement, and kills [t^c, t^c].
    """
    table = h.structure_constants() if isinstance(h, LieAlgebraSpan) else h
    n = table.dim
    t_set = sorted(set(int(i) for i in t_indices))
    if any(i < 0 or i >= n for i in t_set):
        raise DimError(f"contraction indices out of range for dimension {n}")
    in_t = [i in t_set for i in range(n)]
    for i in t_set:
        for j in t_set:
            if any(table.c[i][j][k] != 0 for k in range(n) if not in_t[k]):
                raise NotSubalgebra(
                    f"indices {t_set} do not span a subalgebra: "
                    f"[e_{i}, e_{j}] leaves the span"
                )
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if in_t[i] and in_t[j]:
                for k in range(n):
                    c[i][j][k] = table.c[i][j][k]
            elif in_t[i] != in_t[j]:
                for k in range(n):
                    if not in_t[k]:
                        c[i][j][k] = table.c[i][j][k]
    return BracketTable(c)


def verify_morphism(map_matrix: Mat, src: BracketTable, dst: BracketTable) -> bool:
    """Whether x -> M x is a Lie algebra isomorphism from src onto dst.

    The i-th column of M holds the dst-coordinates of the image of the i-th
    src basis vector.
    """
    n = src.dim
    if dst.dim != n:
        raise DimError(f"source dimension {n} != target dimension {dst.dim}")
    mm = linalg.frac_rows(map_matrix)
    if len(mm) != n or any(len(r) != n for r in mm):
        raise DimError(f"map must be {n}x{n}")
    if linalg.determinant(mm) == 0:
        return False
    cols = [[mm[r][i] for r in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = linalg.mat_vec(mm, src.c[i][j])
            rhs = dst.bracket_coords(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# Invariant profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantProfile:
    dim: int
    derived_series: tuple[int, ...]
    lower_central_series: tuple[int, ...]
    center_dim: int
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    killing_rank: int
    killing_signature: tuple[int, int, int]

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "derived_series": list(self.derived_series),
            "lower_central_series": list(self.lower_central_series),
            "center_dim": self.center_dim,
            "is_abelian": self.is_abelian,
            "is_nilpotent": self.is_nilpotent,
            "is_solvable": self.is_solvable,
            "killing_rank": self.killing_rank,
            "killing_signature": list(self.killing_signature),
        }


def invariant_profile(h: BracketTable | LieAlgebraSpan) -> InvariantProfile:
    """Isomorphism invariants of a Lie algebra given by structure constants."""
    table = h.structure_constants() if isinstance(h, LieAlgebraSpan) else h
    derived = table.derived_series_dims()
    lower = table.lower_central_dims()
    killing = table.killing_matrix()
    plus, minus, zero = linalg.symmetric_signature(killing)
    return InvariantProfile(
        dim=table.dim,
        derived_series=derived,
        lower_central_series=lower,
        center_dim=table.center_dim(),
        is_abelian=table.is_abelian(),
        is_nilpotent=lower[-1] == 0,
        is_solvable=derived[-1] == 0,
        killing_rank=plus + minus,
        killing_signature=(plus, minus, zero),
    )


# ---------------------------------------------------------------------------
# Contraction chains (sigma chains)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainStep:
    """One single-split contraction step of a sigma chain."""

    split: int  # 1-based split position i_l
    fixed_indices: tuple[int, ...]  # t_{l-1}: basis indices fixed by the step
    table: BracketTable  # contracted structure constants h_l
    morphism: tuple[tuple[Fraction, ...], ...]  # sigma_l in the limit basis
    verified: bool  # morphism check against the conjugacy limit


@dataclass(frozen=True)
class ChainResult:
    signature: tuple[int, int]
    weights: tuple[int, ...]
    splits: tuple[int, ...]
    steps: tuple[ChainStep, ...]
    final_table: BracketTable
    final_matches_limit: bool

    @property
    def all_verified(self) -> bool:
        return all(s.verified for s in self.steps) and self.final_matches_limit


def _min_grade_projection(x: Mat, u: list[int]) -> Mat:
    m = len(x)
    grades = [
        u[i] - u[j] for i in range(m) for j in range(m) if x[i][j] != 0
    ]
    if not grades:
        return [row[:] for row in x]
    d = min(grades)
    return [
        [x[i][j] if u[i] - u[j] == d else Fraction(0) for j in range(m)]
        for i in range(m)
    ]


def sigma_chain(p: int, q: int, weights) -> ChainResult:
    """Realize the conjugacy limit of po(p,q) as a chain of contractions.

    ``weights`` must be weakly decreasing; each strict drop contributes one
    single-split factor, processed in ascending split position.  Every step
    contracts along the subalgebra fixed by its factor and is verified (via
    verify_morphism) to be isomorphic to the conjugacy limit up to that step;
    the last step's limit is the conjugacy limit along the full sequence.
    """
    m = p + q
    w = tuple(int(x) for x in weights)
    if len(w) != m:
        raise DimError(f"need {m} weights, got {len(w)}")
    if any(w[i] < w[i + 1] for i in range(m - 1)):
        raise SignatureError("weights must be weakly decreasing")
    po = build_po(((p, q),), m)
    table = po.structure_constants()
    n = po.dim
    sigma_images = [[row[:] for row in x] for x in po.basis]
    splits = tuple(i for i in range(1, m) if w[i - 1] > w[i])

    steps: list[ChainStep] = []
    composite = [0] * m
    current = table
    for split in splits:
        u = [0] * split + [-1] * (m - split)
        fixed = tuple(
            idx
            for idx in range(n)
            if all(
                u[i] == u[j]
                for i in range(m)
                for j in range(m)
                if sigma_images[idx][i][j] != 0
            )
        )
        current = contract(current, fixed)
        sigma_images = [
            sigma_images[idx]
            if idx in fixed
            else _min_grade_projection(sigma_images[idx], u)
            for idx in range(n)
        ]
        composite = [a + b for a, b in zip(composite, u)]
        limit = conjugacy_limit(po, FactoredSequence.diagonal(composite))
        limit_basis = limit.span_basis()
        cols: list[Vec] = []
        ok = True
        for img in sigma_images:
            coords = linalg.coordinates_in_basis(limit_basis, _flatten(img))
            if coords is None:
                ok = False
                coords = [Fraction(0)] * n
            cols.append(coords)
        morphism = [[cols[i][r] for i in range(n)] for r in range(n)]
        dst = LieAlgebraSpan(
            m, [_unflatten(v, m) for v in limit_basis], check_closed=False
        ).structure_constants()
        verified = ok and verify_morphism(morphism, current, dst)
        steps.append(
            ChainStep(
                split=split,
                fixed_indices=fixed,
                table=current,
                morphism=tuple(tuple(row) for row in morphism),
                verified=verified,
            )
        )

    # Final check against the limit along the *original* weights (the per-step
    # limits used unit drops; the full sequence may space its drops freely).
    full_limit = conjugacy_limit(po, FactoredSequence.diagonal(w))
    full_basis = full_limit.span_basis()
    final_ok = True
    cols = []
    for img in sigma_images:
        coords = linalg.coordinates_in_basis(full_basis, _flatten(img))
        if coords is None:
            final_ok = False
            coords = [Fraction(0)] * n
        cols.append(coords)
    if final_ok:
        morphism = [[cols[i][r] for i in range(n)] for r in range(n)]
        dst = LieAlgebraSpan(
            m, [_unflatten(v, m) for v in full_basis], check_closed=False
        ).structure_constants()
        final_ok = verify_morphism(morphism, current, dst)
    return ChainResult(
        signature=(p, q),
        weights=w,
        splits=splits,
        steps=tuple(steps),
        final_table=current,
        final_matches_limit=final_ok,
    )
