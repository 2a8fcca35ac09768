"""Unit tests for the Mellin-Barnes integral and the exponential-arctan integral."""

import pytest

from hurwitzlommel.controls import ContourSpec
from hurwitzlommel.errors import (
    BranchError,
    ConfigurationError,
    ContourError,
    DomainError,
    DoublePoleProximity,
    PoleError,
    TailBoundExceeded,
)
from hurwitzlommel.mellin import (
    LemmaIntegralParams,
    MellinKernel,
    i_s_closed,
    i_s_line,
    i_s_line_result,
    i_s_residue,
    inter_reassembly,
    lemma_lhs_integral,
    lemma_lhs_quadrature,
    lemma_rhs,
    mellin_pair_check,
)
from hurwitzlommel.mellin.barnes import default_abscissa

MELLIN_POINTS = [(-0.3, 0.5), (-1.2, 0.8), (-2.9 + 0.5j, 0.6), (-0.5 + 1j, 0.25)]


class TestThreeRoutes:
    """Line integral, residue sum and closed form of I_s(z)."""

    @pytest.mark.parametrize("s, z", MELLIN_POINTS)
    def test_line_matches_closed_form(self, s, z):
        assert i_s_line(s, z) == pytest.approx(i_s_closed(s, z), rel=1e-9)

    @pytest.mark.parametrize("s, z", MELLIN_POINTS)
    def test_residues_match_closed_form(self, s, z):
        assert i_s_residue(s, z) == pytest.approx(i_s_closed(s, z), rel=1e-9)

    def test_line_diagnostics(self):
        result = i_s_line_result(-0.3, 0.5)
        assert result.c == pytest.approx(default_abscissa(complex(-0.3)))
        assert result.t_max > 0
        assert result.nodes_used > 0
        assert result.tail_bound <= ContourSpec().tol

    def test_contour_independence(self):
        """Moving the line across the pole at xi = 1 leaves the value unchanged"""
        left = i_s_line(-0.5, 0.7, ContourSpec(c=0.7))
        right = i_s_line(-0.5, 0.7, ContourSpec(c=1.6))
        assert right == pytest.approx(left, rel=1e-9)

    def test_default_abscissa_in_strip(self):
        for s in (-0.3, -1.5, -2.9):
            c = default_abscissa(complex(s))
            assert max(-1.0, -s) < c


class TestRouteErrors:
    """Domain checks of the three routes."""

    def test_branch_cut(self):
        with pytest.raises(BranchError):
            i_s_line(-0.5, -1.0)

    def test_closed_form_pole(self):
        with pytest.raises(PoleError, match="singular"):
            i_s_closed(-1.0, 0.5)

    def test_residue_near_integer(self):
        with pytest.raises(DoublePoleProximity):
            i_s_residue(-2.0, 0.5)

    def test_residue_needs_left_half_plane(self):
        with pytest.raises(DomainError, match="Re\\(s\\) < 0"):
            i_s_residue(0.5, 0.5)

    @pytest.mark.parametrize("c", [0.2, 1.0])
    def test_inadmissible_abscissa(self, c):
        with pytest.raises(ContourError):
            i_s_line(-0.3, 0.5, ContourSpec(c=c))

    def test_short_contour(self):
        with pytest.raises(TailBoundExceeded, match="t_max"):
            i_s_line(-0.3, 0.5, ContourSpec(t_max=2.0))


class TestLemmaIntegral:
    """Exponential-arctan integral against its Lommel closed form."""

    @pytest.mark.parametrize("s, a, k", [
        (1.5, 1.0, 1),
        (-1.4, 0.25, 2),
        (-2 + 1.3j, 2 ** 0.5, 5),
        (0.25 - 0.75j, 1.0, 1),
    ])
    def test_quadrature_matches_closed_form(self, s, a, k):
        p = LemmaIntegralParams(s, a, k)
        assert lemma_lhs_integral(p) == pytest.approx(lemma_rhs(p), rel=1e-8, abs=1e-12)

    def test_zero_order(self):
        p = LemmaIntegralParams(0.0, 1.0, 3)
        assert lemma_lhs_integral(p) == 0
        assert lemma_rhs(p) == 0
        assert lemma_lhs_quadrature(p).nodes_used == 0

    def test_reassembly_from_mellin_barnes(self):
        p = LemmaIntegralParams(1.5, 1.0, 1)
        assert inter_reassembly(1.5, 1.0, 1) == pytest.approx(lemma_lhs_integral(p), rel=1e-8)

    @pytest.mark.parametrize("a, k, message", [
        (-1.0, 1, "a must be a positive"),
        (1.0, 0, "k must be a positive integer"),
        (1.0, True, "k must be a positive integer"),
    ])
    def test_invalid_params(self, a, k, message):
        with pytest.raises(ConfigurationError, match=message):
            LemmaIntegralParams(1.5, a, k)


class TestMellinPairs:
    """Inverse Mellin transforms of the two kernels."""

    @pytest.mark.parametrize("y", [0.3, 0.7, 2.0])
    def test_exponential_kernel(self, y):
        assert mellin_pair_check(MellinKernel.EXP_KERNEL, y) < 1e-10

    def test_arctan_kernel(self):
        assert mellin_pair_check("arctan_kernel", 0.7, s=1.5, a=1.0) < 1e-8

    def test_arctan_kernel_needs_order(self):
        with pytest.raises(DomainError, match="needs s"):
            mellin_pair_check("arctan_kernel", 0.7)

    def test_positive_argument(self):
        with pytest.raises(DomainError, match="y must be positive"):
            mellin_pair_check("exp_kernel", 0.0)
