"""Block algebras, conjugacy limits, contractions, and contraction chains."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projlim.errors import NotSubalgebra, SignatureError
from projlim.lie import (
    LieAlgebraSpan,
    bracket,
    build_po,
    conjugacy_limit,
    contract,
    embed_and_limit,
    enumerate_signatures,
    invariant_profile,
    match_limit_geometry,
    po_dimension,
    sigma_chain,
    signature_str,
    truncated_exp,
    validate_signature,
    verify_morphism,
    z_and_nplus,
)
from projlim.parsing import parse_sequence
from projlim.projective import FactoredSequence


def _matrix(m, entries):
    out = [[Fraction(0)] * m for _ in range(m)]
    for (i, j), c in entries.items():
        out[i][j] = Fraction(c)
    return out


# Basis of the rotation algebra in three variables and of its flat partners.
X1 = _matrix(3, {(0, 1): 1, (1, 0): -1})
X2 = _matrix(3, {(0, 2): -1, (2, 0): 1})
X3 = _matrix(3, {(1, 2): 1, (2, 1): -1})
Y1 = _matrix(3, {(1, 0): -1})
Y2 = _matrix(3, {(2, 0): 1})
Y3 = _matrix(3, {(2, 1): -1})


class TestSignatures:
    def test_flat_pair_is_single_block(self):
        assert validate_signature((4, 1)) == ((4, 1),)

    def test_bare_p_block(self):
        assert validate_signature(((1,), (3, 1))) == ((1, 0), (3, 1))

    def test_str_roundtrip(self):
        assert signature_str(((1, 0), (3, 1))) == "((1),(3,1))"
        assert signature_str(((4, 1),)) == "(4,1)"

    def test_empty_block_rejected(self):
        with pytest.raises(SignatureError):
            validate_signature(((0, 0),))

    def test_dimension_formula(self):
        # so(5)-type block: full antisymmetric algebra has dimension 10
        assert build_po(((4, 1),)).dim == po_dimension(((4, 1),)) == 10
        # flat geometry: rotations+boosts (6) plus translations (4)
        assert build_po(((1, 0), (3, 1))).dim == po_dimension(((1, 0), (3, 1))) == 10
        assert build_po(((1, 0), (2, 0))).dim == po_dimension(((1, 0), (2, 0))) == 3

    def test_enumerate_signatures_m3(self):
        sigs = enumerate_signatures(3)
        assert ((3, 0),) in sigs and ((2, 1),) in sigs
        assert ((1, 0), (2, 0)) in sigs
        assert ((1, 0), (1, 0), (1, 0)) in sigs
        # canonical blocks always have p >= q
        assert all(p >= q for sig in sigs for (p, q) in sig)


class TestRotationContractionChain:
    def test_first_contraction_matches_flat_algebra(self):
        o3 = LieAlgebraSpan(3, [X1, X2, X3])
        table = contract(o3, (2,))
        flat = LieAlgebraSpan(3, [Y1, Y2, X3]).structure_constants()
        assert table == flat
        # [X1', X2'] = 0, [X1', X3'] = -X2', [X2', X3'] = X1'
        assert table.c[0][1] == (0, 0, 0)
        assert table.c[0][2] == (0, -1, 0)
        assert table.c[1][2] == (1, 0, 0)

    def test_second_contraction_is_heisenberg(self):
        flat = LieAlgebraSpan(3, [Y1, Y2, X3])
        table = contract(flat, (0,))
        heis = LieAlgebraSpan(3, [Y1, Y2, Y3]).structure_constants()
        assert table == heis
        assert invariant_profile(table).center_dim == 1

    def test_third_contraction_is_abelian(self):
        heis = LieAlgebraSpan(3, [Y1, Y2, Y3]).structure_constants()
        assert contract(heis, (1,)).is_abelian()

    def test_contraction_needs_subalgebra(self):
        o3 = LieAlgebraSpan(3, [X1, X2, X3])
        with pytest.raises(NotSubalgebra):
            contract(o3, (0, 1))  # [X1, X2] = X3 does not stay in the span

    def test_profiles_separate_heisenberg_from_abelian(self):
        heis = LieAlgebraSpan(3, [Y1, Y2, Y3]).structure_constants()
        abelian = contract(heis, (1,))
        assert invariant_profile(heis) != invariant_profile(abelian)
        assert invariant_profile(abelian).is_abelian


class TestConjugacyLimits:
    def test_flat_to_galilei(self):
        limit = conjugacy_limit(build_po(((1, 0), (3, 1))), parse_sequence("diag(t,1,1,1,t)"))
        assert match_limit_geometry(limit) == (
            ((1, 0), (1, 0), (3, 0)),
            (0, 2, 3, 4, 1),
        )

    def test_positive_curvature_to_flat(self):
        limit = conjugacy_limit(
            build_po(((4, 1),)), parse_sequence("diag(t^4,t^-1,t^-1,t^-1,t^-1)")
        )
        assert match_limit_geometry(limit) == (((1, 0), (3, 1)), (0, 1, 2, 3, 4))

    def test_negative_curvature_to_flat(self):
        limit = conjugacy_limit(
            build_po(((3, 2),)), parse_sequence("diag(t^-1,t^-1,t^-1,t^-1,t^4)")
        )
        assert match_limit_geometry(limit) == (((1, 0), (3, 1)), (1, 2, 3, 4, 0))

    def test_constant_sequence_is_isomorphism(self):
        alg = build_po(((2, 1),))
        seq = FactoredSequence.constant([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
        limit = conjugacy_limit(alg, seq)
        assert limit.dim == alg.dim
        assert invariant_profile(limit) == invariant_profile(alg)

    def test_limit_dimension_never_drops(self):
        alg = build_po(((4, 1),))
        for text in ("diag(t,1,1,1,1)", "diag(t^2,t,1,t^-1,t^-2)"):
            assert conjugacy_limit(alg, parse_sequence(text)).dim == alg.dim

    def test_z_and_nplus_grading(self):
        alg = build_po(((4, 1),))
        seq = parse_sequence("diag(t^4,t^-1,t^-1,t^-1,t^-1)")
        z, nplus = z_and_nplus(alg, seq)
        # zero-weight stabilizer (6 rotations/boosts) + contracted translations (4)
        assert (z.dim, nplus.dim) == (6, 4)
        assert z.dim + nplus.dim == alg.dim
        from projlim.linalg import mat_mul

        for x in nplus.basis:
            sq = mat_mul(x, x)
            assert all(c == 0 for row in sq for c in row)

    @given(st.lists(st.integers(-2, 2), min_size=3, max_size=3))
    @settings(max_examples=25, deadline=None)
    def test_limits_of_m3_blocks_close_and_match(self, weights):
        for sig in (((3, 0),), ((2, 1),), ((1, 0), (2, 0))):
            limit = conjugacy_limit(build_po(sig), FactoredSequence.diagonal(weights))
            table = limit.structure_constants()
            assert table.is_antisymmetric() and table.satisfies_jacobi()
            match_limit_geometry(limit)  # must not raise


class TestSigmaChain:
    def test_rotation_chain(self):
        result = sigma_chain(3, 0, (0, -1, -2))
        assert result.splits == (1, 2)
        assert result.all_verified
        assert result.final_matches_limit
        assert result.final_table.is_abelian() is False  # two-step chain, not full flattening

    def test_full_flattening_chain(self):
        result = sigma_chain(2, 0, (0, -1))
        assert result.all_verified

    def test_morphism_checker_rejects_wrong_map(self):
        o3 = LieAlgebraSpan(3, [X1, X2, X3]).structure_constants()
        heis = LieAlgebraSpan(3, [Y1, Y2, Y3]).structure_constants()
        not_a_morphism = [[Fraction(1 if i == j else 0) for j in range(3)] for i in range(3)]
        assert not verify_morphism(not_a_morphism, o3, heis)


class TestEmbedding:
    def test_limit_unchanged_in_larger_space(self):
        alg = build_po(((4, 1),))
        base = conjugacy_limit(alg, parse_sequence("diag(t^4,t^-1,t^-1,t^-1,t^-1)"))
        for m_target in (6, 7):
            weights = [4, -1, -1, -1, -1] + [0] * (m_target - 5)
            big = embed_and_limit(alg, m_target, FactoredSequence.diagonal(weights))
            padded = LieAlgebraSpan(
                m_target,
                [
                    [
                        [x[i][j] if i < 5 and j < 5 else Fraction(0) for j in range(m_target)]
                        for i in range(m_target)
                    ]
                    for x in base.basis
                ],
                check_closed=False,
            )
            assert big.span_equals(padded)


class TestTruncatedExp:
    def test_nilpotent_exponential_is_exact(self):
        n = _matrix(3, {(0, 1): 1})
        h = truncated_exp(n, 3)
        assert h == [
            [Fraction(1), Fraction(1), Fraction(0)],
            [Fraction(0), Fraction(1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1)],
        ]

    def test_bracket_is_commutator(self):
        assert bracket(X1, X2) == X3
        assert bracket(X2, X1) == [[-c for c in row] for row in X3]
