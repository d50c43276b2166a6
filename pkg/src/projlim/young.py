"""Young-diagram representation theory for sl(5,R).

Irreducible tensor modules are labeled by pairs of Young diagrams
``(lam, lam_bar)`` — symmetrization patterns for covariant and contravariant
tensor slots.  This module computes their dimensions (Weyl formula),
Littlewood-Richardson products, skew quotients, the branching to the Lorentz
subalgebra via division by the formal sum of even-row diagrams, exterior-power
spin content, spin and statistics assignments, and the classifier deciding
which modules stay irreducible under the flat-limit (Poincare) structure
algebra.

Diagrams are tuples of weakly decreasing positive row lengths; ``()`` denotes
the empty diagram.  Half-integer spins are carried as doubled integers
internally and surfaced as exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DimError, NotColumnOnly, ShapeError, TooLarge

__all__ = [
    "Diagram",
    "DiagramPair",
    "validate_diagram",
    "validate_pair",
    "boxes",
    "height",
    "conjugate_diagram",
    "diagram_str",
    "pair_str",
    "schur_dim",
    "lr_decompose",
    "skew_divide",
    "delta_terms",
    "BranchSummand",
    "BranchResult",
    "branch_to_lorentz",
    "LorentzIrrep",
    "exterior_power_spins",
    "spin_total",
    "statistics",
    "IrreducibilityVerdict",
    "is_poincare_irreducible",
    "symmetrizer_matrix",
    "symmetrizer_basis",
    "symmetrizer_image_dim",
    "tensor_power_decompose",
    "spin_statistics_obeyed",
]

Diagram = Tuple[int, ...]
DiagramPair = Tuple[Diagram, Diagram]

RANK = 4  # sl(5) has rank 4
DIM_FUND = 5


def validate_diagram(rows: Iterable[int]) -> Diagram:
    """Normalize a diagram to a tuple of weakly decreasing positive rows."""
    out = tuple(int(r) for r in rows)
    for r in out:
        if r < 1:
            raise ShapeError(f"row lengths must be positive, got {r}")
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ShapeError(f"row lengths must weakly decrease, got {out}")
    return out


def validate_pair(pair: Sequence[Iterable[int]]) -> DiagramPair:
    lam, lam_bar = pair
    return validate_diagram(lam), validate_diagram(lam_bar)


def boxes(lam: Diagram) -> int:
    return sum(lam)


def height(lam: Diagram) -> int:
    return len(lam)


def conjugate_diagram(lam: Diagram) -> Diagram:
    """Transpose rows and columns."""
    if not lam:
        return ()
    return tuple(sum(1 for r in lam if r > c) for c in range(lam[0]))


def diagram_str(lam: Diagram) -> str:
    return "[" + ",".join(str(r) for r in lam) + "]"


def pair_str(pair: DiagramPair) -> str:
    lam, lam_bar = pair
    return f"({diagram_str(lam)},{diagram_str(lam_bar)})"


def _strip_full_columns(lam: Diagram) -> Diagram:
    """Remove columns of height 5 (they carry the trivial determinant factor)."""
    if height(lam) < DIM_FUND:
        return lam
    cut = lam[DIM_FUND - 1]
    return tuple(r - cut for r in lam[:DIM_FUND] if r > cut)


def _dynkin_labels(pair: DiagramPair) -> tuple[int, ...]:
    """Highest-weight Dynkin labels of the module with covariant pattern lam
    and contravariant pattern lam_bar, both reduced to height <= 4."""
    lam, lam_bar = pair

    def row(d: Diagram, i: int) -> int:  # 1-based, zero beyond height
        return d[i - 1] if 1 <= i <= len(d) else 0

    return tuple(
        (row(lam, i) - row(lam, i + 1)) + (row(lam_bar, RANK + 1 - i) - row(lam_bar, RANK + 2 - i))
        for i in range(1, RANK + 1)
    )


def _weyl_dimension(labels: Sequence[int]) -> int:
    """Weyl dimension formula for sl(5): product over positive root segments."""
    num = 1
    den = 1
    for i in range(RANK):
        for j in range(i, RANK):
            num *= sum(labels[i : j + 1]) + (j - i + 1)
            den *= j - i + 1
    dim, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("Weyl dimension did not come out integral")
    return dim


def schur_dim(pair: Sequence[Iterable[int]]) -> int:
    """Dimension of the sl(5) module labeled by a diagram pair.

    Diagrams of height 6 or more label the zero module; height-5 columns are
    stripped (each is a full antisymmetrization, projectively trivial).  The
    empty pair labels the trivial one-dimensional module.

    >>> schur_dim(((1,), ()))
    5
    >>> schur_dim(((1,), (1,)))
    24
    >>> schur_dim(((1, 1, 1, 1, 1, 1), ()))
    0
    """
    lam, lam_bar = validate_pair(pair)
    if height(lam) > DIM_FUND or height(lam_bar) > DIM_FUND:
        return 0
    lam = _strip_full_columns(lam)
    lam_bar = _strip_full_columns(lam_bar)
    return _weyl_dimension(_dynkin_labels((lam, lam_bar)))


# ---------------------------------------------------------------------------
# Littlewood-Richardson combinatorics
# ---------------------------------------------------------------------------


def _contains(outer: Diagram, inner: Diagram) -> bool:
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


def _partitions_of(n: int, max_first: int | None = None) -> Iterable[Diagram]:
    """All partitions of n, largest part first, lexicographically descending."""
    if n == 0:
        yield ()
        return
    first_cap = n if max_first is None else min(n, max_first)
    for first in range(first_cap, 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def _lr_fillings(outer: Diagram, inner: Diagram, content: Diagram) -> int:
    """Number of Littlewood-Richardson fillings of the skew shape outer/inner
    with the given content (row-weak, column-strict, lattice reading word)."""
    rows = len(outer)
    inner_pad = tuple(inner) + (0,) * (rows - len(inner))
    cells = [
        (r, c) for r in range(rows) for c in range(inner_pad[r], outer[r])
    ]
    if not cells:
        return 1 if not content else 0
    if sum(content) != len(cells):
        return 0
    n_values = len(content)
    grid: dict[tuple[int, int], int] = {}
    remaining = list(content)
    count = 0

    def lattice_ok() -> bool:
        # Reverse reading word: rows top to bottom, right to left.
        seen = [0] * (n_values + 1)
        for r in range(rows):
            for c in range(outer[r] - 1, inner_pad[r] - 1, -1):
                v = grid.get((r, c))
                if v is None:
                    continue
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    return False
        return True

    def place(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            if lattice_ok():
                count += 1
            return
        r, c = cells[idx]
        left = grid.get((r, c - 1))
        above = grid.get((r - 1, c))
        low = left if left is not None else 1
        for v in range(low, n_values + 1):
            if remaining[v - 1] == 0:
                continue
            if above is not None and v <= above:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            place(idx + 1)
            remaining[v - 1] += 1
            del grid[(r, c)]

    place(0)
    return count


def lr_decompose(lam: Iterable[int], mu: Iterable[int]) -> Dict[Diagram, int]:
    """Littlewood-Richardson product: s_lam * s_mu = sum c^nu_{lam,mu} s_nu.

    Returns the full GL decomposition (no height cap); callers working in
    sl(5) discard heights above 5 via :func:`schur_dim`.

    >>> sorted(lr_decompose((1,), (1,)).items())
    [((1, 1), 1), ((2,), 1)]
    """
    lam = validate_diagram(lam)
    mu = validate_diagram(mu)
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}
    total = boxes(lam) + boxes(mu)
    out: Dict[Diagram, int] = {}
    for nu in _partitions_of(total):
        if not _contains(nu, lam):
            continue
        coeff = _lr_fillings(nu, lam, mu)
        if coeff:
            out[nu] = coeff
    return out


def skew_divide(lam: Iterable[int], mu: Iterable[int]) -> Dict[Diagram, int]:
    """Skew quotient lam/mu = sum over nu of c^lam_{nu,mu} nu.

    >>> skew_divide((1, 1, 1), (2,))
    {}
    >>> sorted(skew_divide((2, 1), (1,)).items())
    [((1, 1), 1), ((2,), 1)]
    """
    lam = validate_diagram(lam)
    mu = validate_diagram(mu)
    if boxes(mu) > boxes(lam):
        return {}
    out: Dict[Diagram, int] = {}
    for nu in _partitions_of(boxes(lam) - boxes(mu)):
        if not _contains(lam, nu):
            continue
        coeff = lr_decompose(nu, mu).get(lam, 0)
        if coeff:
            out[nu] = coeff
    return out


def delta_terms(max_boxes: int) -> list[Diagram]:
    """The formal sum Delta: all diagrams with even row lengths, truncated
    at the given box count (higher terms only produce empty quotients)."""
    terms: list[Diagram] = []
    for n in range(0, max_boxes + 1, 2):
        for part in _partitions_of(n):
            if all(r % 2 == 0 for r in part):
                terms.append(part)
    return terms


def _divide_by_delta(lam: Diagram) -> Dict[Diagram, int]:
    out: Dict[Diagram, int] = {}
    for delta in delta_terms(boxes(lam)):
        for nu, coeff in skew_divide(lam, delta).items():
            out[nu] = out.get(nu, 0) + coeff
    return out


@dataclass(frozen=True)
class BranchSummand:
    lam: Diagram
    lam_bar: Diagram
    multiplicity: int


@dataclass(frozen=True)
class BranchResult:
    """Expansion of (lam/Delta) tensor (lam_bar/Delta)."""

    summands: tuple[BranchSummand, ...]
    single_summand: bool

    def as_dict(self) -> dict:
        return {
            "summands": [
                {
                    "lam": list(s.lam),
                    "lam_bar": list(s.lam_bar),
                    "multiplicity": s.multiplicity,
                }
                for s in self.summands
            ],
            "single_summand": self.single_summand,
        }


def branch_to_lorentz(pair: Sequence[Iterable[int]]) -> BranchResult:
    """Branch an sl(5) module label to the Lorentz subalgebra.

    Both diagrams are divided by the formal sum Delta of even-row diagrams;
    the result is the expanded tensor sum.  The branching collapses to a
    single summand exactly when both diagrams are empty or consist of
    columns only (no horizontal even strip fits into a single column).

    >>> branch_to_lorentz(((1, 1, 1), ())).single_summand
    True
    >>> len(branch_to_lorentz(((2,), ())).summands)
    2
    """
    lam, lam_bar = validate_pair(pair)
    left = _divide_by_delta(lam)
    right = _divide_by_delta(lam_bar)
    summands = tuple(
        BranchSummand(nu, nu_bar, c1 * c2)
        for nu, c1 in sorted(left.items())
        for nu_bar, c2 in sorted(right.items())
    )
    single = left == {lam: 1} and right == {lam_bar: 1}
    return BranchResult(summands=summands, single_summand=single)


# ---------------------------------------------------------------------------
# Spin content
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LorentzIrrep:
    """Lorentz irrep (a, b) with multiplicity; spins stored doubled."""

    a2: int  # 2a
    b2: int  # 2b
    multiplicity: int

    @property
    def a(self) -> Fraction:
        return Fraction(self.a2, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.b2, 2)

    @property
    def dimension(self) -> int:
        return (self.a2 + 1) * (self.b2 + 1)

    def __str__(self) -> str:
        return f"({self.a},{self.b})x{self.multiplicity}"


# Exterior powers of the single factor C^2: spin content by degree.
_EXT_C2 = {0: 0, 1: 1, 2: 0}  # degree -> doubled spin of the 1-dim'l or 2-dim'l piece


def exterior_power_spins(p: int) -> list[LorentzIrrep]:
    """Spin content of the p-th exterior power of C^2 + conj(C^2).

    >>> [str(ir) for ir in exterior_power_spins(1)]
    ['(1/2,0)x1', '(0,1/2)x1']
    >>> sum(ir.dimension * ir.multiplicity for ir in exterior_power_spins(2))
    6
    """
    if p < 0:
        raise ShapeError("exterior power degree must be nonnegative")
    if p >= 5:
        return []
    tally: Dict[tuple[int, int], int] = {}
    for a_deg in range(0, 3):
        b_deg = p - a_deg
        if not 0 <= b_deg <= 2:
            continue
        key = (_EXT_C2[a_deg], _EXT_C2[b_deg])
        tally[key] = tally.get(key, 0) + 1
    return [
        LorentzIrrep(a2, b2, mult)
        for (a2, b2), mult in sorted(tally.items(), reverse=True)
    ]


#: total spin (doubled) contributed by a single column with 0..4 boxes
_COLUMN_SPIN2 = (0, 1, 2, 1, 0)


def _column_boxes(lam: Diagram) -> int:
    """Box count of a column-only diagram, after stripping height-5 columns."""
    lam = _strip_full_columns(lam)
    if any(r != 1 for r in lam):
        raise NotColumnOnly(f"diagram {diagram_str(lam)} is not a single column")
    return len(lam)


def spin_total(pair: Sequence[Iterable[int]]) -> Fraction:
    """Total spin s(lam) + s(lam_bar) of a column-only pair.

    Columns with 0..4 boxes carry spin 0, 1/2, 1, 1/2, 0; height-5 columns
    are trivial and are stripped first.

    >>> spin_total(((1,), ()))
    Fraction(1, 2)
    >>> spin_total(((1, 1), (1, 1, 1)))
    Fraction(3, 2)
    """
    lam, lam_bar = validate_pair(pair)
    s2 = _COLUMN_SPIN2[_column_boxes(lam)] + _COLUMN_SPIN2[_column_boxes(lam_bar)]
    return Fraction(s2, 2)


def statistics(pair: Sequence[Iterable[int]]) -> str:
    """Statistics flag from box-count parity: fermionic iff the total number
    of boxes is odd.

    >>> statistics(((1,), ()))
    'fermionic'
    >>> statistics(((1, 1), ()))
    'bosonic'
    """
    lam, lam_bar = validate_pair(pair)
    return "fermionic" if (boxes(lam) + boxes(lam_bar)) % 2 else "bosonic"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    accepted: bool
    reason: str

    def __bool__(self) -> bool:
        return self.accepted


def is_poincare_irreducible(pair: Sequence[Iterable[int]]) -> IrreducibilityVerdict:
    """Decide whether the module stays irreducible under the flat-limit
    structure algebra.

    Accepted labels are exactly the single columns of 1..4 boxes on one side
    with the other side empty: branching must keep a single summand (columns
    only) and exactly one slot may be populated.

    >>> bool(is_poincare_irreducible(((1, 1, 1), ())))
    True
    >>> bool(is_poincare_irreducible(((1,), (1,))))
    False
    """
    lam, lam_bar = validate_pair(pair)
    if not lam and not lam_bar:
        return IrreducibilityVerdict(False, "empty pair labels the trivial module")
    if lam and lam_bar:
        return IrreducibilityVerdict(
            False, "both diagrams nonempty: the branching mixes the two slots"
        )
    side = lam if lam else lam_bar
    if any(r != 1 for r in side):
        return IrreducibilityVerdict(
            False, "diagram is not a single column: branching has several summands"
        )
    if len(side) > RANK:
        return IrreducibilityVerdict(
            False, "column height exceeds 4: module is trivial or zero"
        )
    return IrreducibilityVerdict(True, "single column on one side")


# ---------------------------------------------------------------------------
# Young symmetrizers on small tensor powers (oracle-grade construction)
# ---------------------------------------------------------------------------

_SYMMETRIZER_CAP = 3


def _diagram_cells(lam: Diagram) -> list[tuple[int, int]]:
    return [(r, c) for r, row_len in enumerate(lam) for c in range(row_len)]


def _group_permutations(groups: list[list[int]], p: int) -> list[tuple[tuple[int, ...], int]]:
    """All permutations of 0..p-1 that permute within the given index groups,
    together with their signs."""
    per_group = []
    for group in groups:
        position = {g: k for k, g in enumerate(group)}
        options = []
        for images in itertools.permutations(group):
            sign = 1
            for i in range(len(images)):
                for j in range(i + 1, len(images)):
                    if position[images[i]] > position[images[j]]:
                        sign = -sign
            options.append((dict(zip(group, images)), sign))
        per_group.append(options)
    perms: list[tuple[tuple[int, ...], int]] = []
    for combo in itertools.product(*per_group):
        mapping = {i: i for i in range(p)}
        sign = 1
        for sub_map, sub_sign in combo:
            mapping.update(sub_map)
            sign *= sub_sign
        perms.append((tuple(mapping[i] for i in range(p)), sign))
    return perms


def symmetrizer_matrix(lam: Iterable[int]) -> tuple[list[list[Fraction]], list[tuple[int, ...]]]:
    """Matrix of the Young symmetrizer c = (row symmetrize) o (column
    antisymmetrize) on (C^5) tensor power boxes(lam), together with the
    ordered list of index tuples labeling the tensor basis.

    Capped at 3 boxes (the 125-dimensional cube).
    """
    lam = validate_diagram(lam)
    p = boxes(lam)
    if p > _SYMMETRIZER_CAP:
        raise TooLarge(f"symmetrizer construction is capped at {_SYMMETRIZER_CAP} boxes")
    tuples = list(itertools.product(range(DIM_FUND), repeat=p))
    index_of = {tup: k for k, tup in enumerate(tuples)}
    dim = DIM_FUND ** p
    if p == 0:
        return [[Fraction(1)]], tuples
    cells = _diagram_cells(lam)
    number = {cell: k for k, cell in enumerate(cells)}
    rows = [
        [number[(r, c)] for c in range(row_len)] for r, row_len in enumerate(lam)
    ]
    cols_shape = conjugate_diagram(lam)
    cols = [
        [number[(r, c)] for r in range(col_len)] for c, col_len in enumerate(cols_shape)
    ]
    row_perms = _group_permutations(rows, p)
    col_perms = _group_permutations(cols, p)

    # Apply b (antisymmetrize columns with signs), then a (symmetrize rows).
    matrix = [[Fraction(0)] * dim for _ in range(dim)]
    for tup in tuples:
        j = index_of[tup]
        b_image: Dict[tuple[int, ...], int] = {}
        for perm, sign in col_perms:
            moved = tuple(tup[perm[k]] for k in range(p))
            b_image[moved] = b_image.get(moved, 0) + sign
        for mid, coeff in b_image.items():
            if coeff == 0:
                continue
            for perm, _ in row_perms:
                moved = tuple(mid[perm[k]] for k in range(p))
                matrix[index_of[moved]][j] += coeff
    return matrix, tuples


def symmetrizer_basis(lam: Iterable[int]) -> tuple[list[list[Fraction]], list[tuple[int, ...]]]:
    """A rational basis of the symmetrizer image: the pivot columns of the
    symmetrizer matrix, returned as a (5^p) x d column matrix."""
    from .linalg import rref

    matrix, tuples = symmetrizer_matrix(lam)
    _, pivots = rref(matrix)
    basis = [[row[j] for j in pivots] for row in matrix]
    return basis, tuples


def symmetrizer_image_dim(lam: Iterable[int], on_power: int) -> int:
    """Rank of the Young symmetrizer acting on (C^5) tensor power ``on_power``.

    Exact brute-force construction, capped at 3 boxes.

    >>> symmetrizer_image_dim((2,), 2)
    15
    >>> symmetrizer_image_dim((1, 1), 2)
    10
    """
    lam = validate_diagram(lam)
    p = boxes(lam)
    if p != on_power:
        raise DimError(f"diagram has {p} boxes but the power is {on_power}")
    basis, _ = symmetrizer_basis(lam)
    return len(basis[0]) if basis else 0


def _hook_lengths(lam: Diagram) -> list[int]:
    conj = conjugate_diagram(lam)
    return [
        lam[r] - c + conj[c] - r - 1
        for r, row_len in enumerate(lam)
        for c in range(row_len)
    ]


def standard_tableaux_count(lam: Diagram) -> int:
    """Hook length formula for the number of standard tableaux."""
    lam = validate_diagram(lam)
    n = boxes(lam)
    if n == 0:
        return 1
    denom = 1
    for h in _hook_lengths(lam):
        denom *= h
    count, rem = divmod(factorial(n), denom)
    if rem:
        raise ArithmeticError("hook length product does not divide n!")
    return count


def tensor_power_decompose(p: int) -> list[tuple[Diagram, int]]:
    """Decompose (C^5) tensor power p into Schur modules with multiplicities
    equal to standard-tableau counts.

    >>> tensor_power_decompose(2)
    [((1, 1), 1), ((2,), 1)]
    >>> sum(f * schur_dim((lam, ())) for lam, f in tensor_power_decompose(3))
    125
    """
    if p < 0 or p > 5:
        raise TooLarge("tensor powers are supported up to p = 5")
    return [(lam, standard_tableaux_count(lam)) for lam in sorted(_partitions_of(p))]


# ---------------------------------------------------------------------------
# Spin-statistics check on explicit coefficient arrays
# ---------------------------------------------------------------------------


def spin_statistics_obeyed(
    coeffs: Mapping[tuple, object], p: int, q: int, stat: str
) -> bool:
    """Check the (anti)symmetry of an indexed coefficient array.

    Keys are ``(gamma, alphas, betas)`` with ``alphas`` a p-tuple and
    ``betas`` a q-tuple of indices in 1..5; ``gamma`` is a spectator label.
    Bosonic coefficients must be invariant under S_p x S_q acting on the two
    index groups; fermionic ones must transform with the product of sign
    characters.  Missing keys are zero.

    >>> spin_statistics_obeyed({("g", (1, 2), ()): Fraction(1),
    ...                         ("g", (2, 1), ()): Fraction(-1)}, 2, 0, "fermionic")
    True
    """
    if stat not in ("fermionic", "bosonic"):
        raise ShapeError(f"unknown statistics {stat!r}")
    table: Dict[tuple, Fraction] = {}
    for key, value in coeffs.items():
        if len(key) != 3:
            raise ShapeError("keys must be (gamma, alphas, betas)")
        gamma, alphas, betas = key
        alphas = tuple(alphas)
        betas = tuple(betas)
        if len(alphas) != p or len(betas) != q:
            raise ShapeError(f"index shape mismatch: expected ({p},{q})")
        for idx in alphas + betas:
            if not isinstance(idx, int) or not 1 <= idx <= DIM_FUND:
                raise ShapeError(f"index {idx!r} outside 1..5")
        table[(gamma, alphas, betas)] = Fraction(value)  # type: ignore[arg-type]

    def perm_sign(perm: tuple[int, ...]) -> int:
        sign = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    sign = -sign
        return sign

    fermionic = stat == "fermionic"
    for (gamma, alphas, betas), value in table.items():
        for sigma in itertools.permutations(range(p)):
            for rho in itertools.permutations(range(q)):
                moved = (
                    gamma,
                    tuple(alphas[i] for i in sigma),
                    tuple(betas[i] for i in rho),
                )
                sign = perm_sign(sigma) * perm_sign(rho) if fermionic else 1
                if table.get(moved, Fraction(0)) != sign * value:
                    return False
    return True
