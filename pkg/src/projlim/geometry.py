"""Model-space geometry: membership, limit signatures, point limits, vector gauge.

A geometry signature ``((p0,q0),...,(pk,qk))`` fixes a quadratic form of
signature ``(p0,q0)`` on the leading coordinates; the model space is the open
subset of projective space where that form is negative.  Degenerating a
geometry along a diagonal sequence splits its signature blocks and pushes
interior points to the boundary or onto lower-dimensional strata.  This module
provides the point-level side of that story; the algebra-level side lives in
:mod:`projlim.lie`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DimError, ProjlimError, SignatureError
from .laurent import LaurentScalar
from .lie import (
    Signature,
    build_po,
    conjugacy_limit,
    match_limit_geometry,
    validate_signature,
)
from .projective import (
    FactoredSequence,
    ProjPoint,
    invert_permutation,
    point_limit,
)

__all__ = [
    "in_model_space",
    "limit_signature",
    "geometry_limit",
    "PointLimitReport",
    "classify_point_limit",
    "transform_vector",
    "gauge_equivalent",
    "scale_matrix",
]

PointLike = Union[ProjPoint, Sequence[object]]

#: Direction along which vector components may be shifted without changing
#: the underlying projective vector field: (W1-f, W2-f, W3-f, W4-f, W5+f).
GAUGE_DIRECTION = (
    Fraction(1),
    Fraction(1),
    Fraction(1),
    Fraction(1),
    Fraction(-1),
)


def _rational_coords(x: PointLike, m: int = 5) -> list[Fraction]:
    """Coerce a point-like value to a list of ``m`` exact rational coordinates."""
    if isinstance(x, ProjPoint):
        coords = x.constant_coords()
        if coords is None:
            raise ProjlimError(
                "point has parameter-dependent coordinates; take its limit first"
            )
        values = list(coords)
    else:
        values = []
        for entry in x:
            if isinstance(entry, LaurentScalar):
                if not (entry.is_zero() or entry.is_constant()):
                    raise ProjlimError(
                        "vector entry depends on the parameter; take a limit first"
                    )
                values.append(entry.constant_value())
            else:
                values.append(Fraction(entry))
    if len(values) != m:
        raise DimError(f"expected {m} coordinates, got {len(values)}")
    return values


def quadratic_form_value(sig: Signature, x: PointLike) -> Fraction:
    """Evaluate the first-block form Q(x) = -x_0^2-...-x_{p0-1}^2 + x_{p0}^2+...

    Only the leading ``p0 + q0`` coordinates enter; the remaining coordinates
    span the null directions of the degenerate form.
    """
    sig = validate_signature(sig)
    m = sum(p + q for p, q in sig)
    coords = _rational_coords(x, m)
    p0, q0 = sig[0]
    total = Fraction(0)
    for i in range(p0):
        total -= coords[i] * coords[i]
    for i in range(p0, p0 + q0):
        total += coords[i] * coords[i]
    return total


def in_model_space(sig: Signature, x: PointLike) -> str:
    """Classify a point against the model space of ``sig``.

    Returns ``"interior"`` (Q < 0), ``"boundary"`` (Q = 0) or ``"outside"``
    (Q > 0).  The sign is projectively well-defined because Q is quadratic.

    >>> in_model_space(((1, 0), (3, 1)), [1, 7, 0, 0, 0])
    'interior'
    >>> in_model_space(((1, 0), (3, 1)), [0, 1, 2, 3, 4])
    'boundary'
    >>> in_model_space((4, 1), [1, 0, 0, 0, 2])
    'outside'
    """
    value = quadratic_form_value(sig, x)
    if value < 0:
        return "interior"
    if value == 0:
        return "boundary"
    return "outside"


def limit_signature(p: int, q: int, split_set: Iterable[int]) -> Signature:
    """Split the sign sequence (-1 x p, +1 x q) at the given positions.

    Splitting after position ``s`` (for ``1 <= s <= p+q-1``) starts a new
    block; each resulting segment contributes a block ``(p_i, q_i)`` counting
    its -1s and +1s.  Totals are preserved: the blocks sum back to ``(p, q)``.

    >>> limit_signature(4, 1, {1})
    ((1, 0), (3, 1))
    >>> limit_signature(4, 1, set())
    ((4, 1),)
    >>> limit_signature(3, 2, {4})
    ((3, 1), (0, 1))
    """
    if p < 0 or q < 0 or p + q < 1:
        raise SignatureError(f"invalid signature ({p},{q})")
    m = p + q
    splits = sorted(set(split_set))
    for s in splits:
        if not 1 <= s <= m - 1:
            raise SignatureError(f"split position {s} outside 1..{m - 1}")
    bounds = [0] + splits + [m]
    blocks = []
    for start, stop in zip(bounds, bounds[1:]):
        minus = max(0, min(stop, p) - min(start, p))
        plus = (stop - start) - minus
        blocks.append((minus, plus))
    return tuple(blocks)


def geometry_limit(
    sig: Signature, seq: FactoredSequence
) -> tuple[Signature, tuple[int, ...]]:
    """Degenerate the geometry of ``sig`` along ``seq``.

    Computes the conjugacy limit of the structure algebra and matches it to a
    permuted block algebra; returns ``(limit_sig, perm)`` such that the limit
    span equals the ``perm``-conjugate of ``build_po(limit_sig)``.
    """
    algebra = build_po(sig)
    limit = conjugacy_limit(algebra, seq)
    return match_limit_geometry(limit)


@dataclass(frozen=True)
class PointLimitReport:
    """Outcome of pushing one interior point through a degeneration."""

    kind: str  # interior_generic | interior_lower_dim | boundary
    point: ProjPoint
    vanishing: tuple[int, ...]  # coordinate positions that became zero
    limit_signature: Signature

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "point": str(self.point),
            "vanishing": list(self.vanishing),
            "limit_signature": [list(block) for block in self.limit_signature],
        }


def classify_point_limit(
    sig: Signature,
    b: FactoredSequence,
    x: PointLike,
    limit_sig: Optional[Signature] = None,
) -> PointLimitReport:
    """Classify the t->0 limit of an interior point under a degeneration.

    The point must be interior for ``sig``.  Its limit ``y`` is classified
    against ``limit_sig``: boundary points report ``"boundary"``; interior
    limit points report ``"interior_generic"`` when the sequence keeps full
    rank in the limit and ``"interior_lower_dim"`` otherwise (the image then
    lies in the strictly smaller subspace recorded by ``vanishing``).

    When ``limit_sig`` is omitted it is computed from the structure-algebra
    limit, and membership is tested in the correspondingly permuted frame.
    """
    sig = validate_signature(sig)
    if not isinstance(x, ProjPoint):
        x = ProjPoint(list(x))
    if in_model_space(sig, x) != "interior":
        raise ProjlimError("point is not interior to the model space")

    y = point_limit(b, x)

    perm: Optional[tuple[int, ...]] = None
    if limit_sig is None:
        limit_sig, perm = geometry_limit(sig, b)
    else:
        limit_sig = validate_signature(limit_sig)

    if perm is None:
        z_coords = _rational_coords(y)
    else:
        # Membership in the permuted model space P.X(sig'): test P^-1 y.
        inv = invert_permutation(perm)
        y_coords = _rational_coords(y)
        z_coords = [y_coords[inv[i]] for i in range(len(y_coords))]

    membership = in_model_space(limit_sig, z_coords)
    vanishing = y.zero_pattern()
    if membership == "boundary":
        kind = "boundary"
    elif membership == "interior":
        if b.matrix().rank_at_limit() == len(z_coords):
            kind = "interior_generic"
        else:
            kind = "interior_lower_dim"
    else:
        raise ProjlimError(
            "interior point escaped the closed limit model space; "
            "the sequence does not degenerate this geometry"
        )
    return PointLimitReport(
        kind=kind, point=y, vanishing=vanishing, limit_signature=limit_sig
    )


def transform_vector(w: PointLike, b: FactoredSequence) -> ProjPoint:
    """Push projective vector components through a degeneration sequence.

    Returns the canonical t->0 limit of ``b(t) . w``; rank loss is allowed,
    so some components may vanish in the limit.

    >>> from .projective import FactoredSequence
    >>> str(transform_vector([1, 0, 0, 0, 1], FactoredSequence.diagonal([1, 0, 0, 0, 1])))
    '[1, 0, 0, 0, 1]'
    """
    if not isinstance(w, ProjPoint):
        w = ProjPoint(list(w))
    return point_limit(b, w)


def _vector_entries(w: PointLike) -> list[Fraction]:
    if isinstance(w, ProjPoint):
        coords = w.constant_coords()
        if coords is None:
            raise ProjlimError("vector components must be parameter-free")
        return list(coords)
    return _rational_coords(w)


def gauge_equivalent(w1: PointLike, w2: PointLike) -> bool:
    """Decide whether two component lists define the same projective vector.

    Components are defined up to a common nonzero scale c and a gauge shift
    f along ``(1, 1, 1, 1, -1)``: w2 must equal c*(W1-f, ..., W4-f, W5+f)
    for some c != 0 and some f.  Solved exactly as a 2-parameter linear
    system: w2 = alpha*w1 + beta*g with alpha = c != 0.

    >>> gauge_equivalent([1, 1, 1, 1, 0], [0, 0, 0, 0, 1])
    True
    >>> gauge_equivalent([1, 0, 0, 0, 0], [0, 1, 0, 0, 0])
    False
    """
    a = _vector_entries(w1)
    c = _vector_entries(w2)
    g = GAUGE_DIRECTION
    # Solve [a g] . (alpha, beta)^T = c over the rationals.
    from .linalg import nullspace, solve

    columns = [[a[i], g[i]] for i in range(5)]
    solution = solve(columns, list(c))
    if solution is None:
        return False
    kernel = nullspace(columns)
    if kernel:
        # a is parallel to g (or zero): alpha is shiftable to a nonzero value.
        return True
    return solution[0] != 0


def scale_matrix(mode: str) -> FactoredSequence:
    """Diagonal scale transformation d(s) = diag(1, s, s, s, s).

    ``"uv"`` parametrizes s = t (the limit s -> 0); ``"ir"`` parametrizes
    s = 1/t (the limit s -> infinity).

    >>> scale_matrix("uv").weights
    (0, 1, 1, 1, 1)
    >>> scale_matrix("ir").weights
    (0, -1, -1, -1, -1)
    """
    if mode == "uv":
        return FactoredSequence.diagonal([0, 1, 1, 1, 1])
    if mode == "ir":
        return FactoredSequence.diagonal([0, -1, -1, -1, -1])
    raise ProjlimError(f"unknown scale mode {mode!r}; expected 'uv' or 'ir'")
