import pytest
from hypothesis import given, settings

from conftest import ssf_fillings
from examples_data import CLASSIFY_EXAMPLE, PHI_LEFT, PHI_MIDDLE, PHI_RIGHT
from skyfill import Composition, Filling, InvalidFillingError, ParameterError, enumerate_ssf, weight
from skyfill.involution import (
    Kind,
    annotate,
    classify,
    classify_fast,
    free_counts,
    lower,
    phi,
    phi_row,
    phi_steps,
    raise_,
)

R = Filling.from_rows  # shorthand


def brute_partner_search(F, t):
    """Pseudo-free pairs from the definition, scanning every pair of boxes."""
    cells = dict(F.items())
    cols = {}
    for (i, j), e in cells.items():
        cols.setdefault(j, set()).add(e)
    unpaired = {c: e for c, e in cells.items() if e in (t, t + 1) and not {t, t + 1} <= cols[c[1]]}
    pairs = set()
    for lo, e in unpaired.items():
        for hi, f in unpaired.items():
            if e == t and f == t + 1 and hi[0] < lo[0] and hi[1] > lo[1]:
                if all({t, t + 1} <= cols.get(k, set()) for k in range(lo[1] + 1, hi[1])):
                    pairs.add((lo, hi))
    return pairs


class TestClassify:
    def test_classify_example(self):
        cls = classify(CLASSIFY_EXAMPLE, 2)
        pf = {(c, k.partner) for c, k in cls.classes.items() if k.kind is Kind.PSEUDO_FREE}
        assert pf == {
            ((7, 2), (5, 4)),
            ((5, 4), (7, 2)),
            ((6, 9), (4, 11)),
            ((4, 11), (6, 9)),
        }
        assert cls.cells_of(Kind.FREE) == [(2, 1), (5, 5), (5, 7), (5, 8)]
        assert len(cls.classes) == sum(1 for _, e in CLASSIFY_EXAMPLE.items() if e in (2, 3))

    def test_not_upper_right_means_free(self):
        cls = classify(R([[], [2, 1]]), 1)
        assert cls[(2, 1)].kind is Kind.FREE
        assert cls[(2, 2)].kind is Kind.FREE

    def test_paired_and_free(self):
        cls = classify(R([[1], [2, 2, 2], [], [4, 4]]), 1)
        assert cls[(1, 1)].kind is Kind.PAIRED
        assert cls[(2, 1)].kind is Kind.PAIRED
        assert cls[(2, 2)].kind is Kind.FREE
        assert cls[(2, 3)].kind is Kind.FREE
        assert set(cls.classes) == {(1, 1), (2, 1), (2, 2), (2, 3)}

    def test_rejects_invalid(self):
        with pytest.raises(InvalidFillingError):
            classify(R([[], [1, 2]]), 1)

    def test_fast_path_and_brute_force_agree_with_definition(self, small_family):
        for alpha in small_family:
            for F in enumerate_ssf(alpha):
                for t in range(1, alpha.n):
                    cls = classify(F, t)
                    assert cls == classify_fast(F, t)
                    pf = {
                        (c, k.partner)
                        for c, k in cls.classes.items()
                        if k.kind is Kind.PSEUDO_FREE and F[c] == t
                    }
                    assert pf == brute_partner_search(F, t)

    def test_classify_example_fast_path(self):
        assert classify_fast(CLASSIFY_EXAMPLE, 2) == classify(CLASSIFY_EXAMPLE, 2)

    def test_annotation(self):
        assert annotate(PHI_LEFT, 1).splitlines()[2] == "3 2 2~ 2* 2 2 2 2*"


class TestLower:
    def test_phi_example(self):
        assert lower(PHI_LEFT, 3, 1) == PHI_MIDDLE
        assert lower(PHI_MIDDLE, 3, 1) == PHI_RIGHT

    def test_no_free_entry(self):
        F = R([[1, 1]])
        assert lower(F, 1, 1) is F

    def test_small(self):
        F = R([[1], [2, 2, 2], [], [4, 4]])
        G = lower(F, 2, 1)
        assert G == R([[1], [2, 2, 1], [], [4, 4]])
        assert G in enumerate_ssf(Composition((1, 3, 0, 2)))

    def test_with_swap_run(self):
        F = R([[], [2, 2], [1]])
        assert lower(F, 2, 1) == R([[], [1, 1], [2]])

    def test_parameter_errors(self):
        F = R([[1], [2, 2, 2], [], [4, 4]])
        with pytest.raises(ParameterError):
            lower(F, 5, 1)
        with pytest.raises(ParameterError):
            lower(F, 1, 2)
        with pytest.raises(ParameterError):
            lower(F, 2, 0)

    def test_r_equal_t_allowed(self):
        F = R([[1], [2, 2, 2], [], [4, 4]])
        assert lower(F, 2, 2) == F  # row 2 has no 3


class TestRaise:
    def test_phi_example(self):
        assert raise_(PHI_RIGHT, 3, 1) == PHI_MIDDLE
        assert raise_(PHI_MIDDLE, 3, 1) == PHI_LEFT

    def test_small(self):
        assert raise_(R([[1], [2, 2, 1], [], [4, 4]]), 2, 1) == R([[1], [2, 2, 2], [], [4, 4]])

    def test_no_free_entry(self):
        F = R([[1], [2, 2, 2], [], [4, 4]])
        assert raise_(F, 2, 1) is F

    def test_precondition(self):
        with pytest.raises(ParameterError):
            raise_(R([[1], [2, 2, 2], [], [4, 4]]), 1, 1)


class TestPhi:
    def test_phi_example(self):
        assert free_counts(PHI_LEFT, 3, 1) == (2, 0)
        assert list(phi_steps(PHI_LEFT, 3, 1)) == [PHI_LEFT, PHI_MIDDLE, PHI_RIGHT]
        assert phi(PHI_LEFT, 3, 1) == PHI_RIGHT
        assert phi(PHI_RIGHT, 3, 1) == PHI_LEFT

    def test_balanced_row_is_fixed(self):
        F = R([[1], [2, 1, 1], [], [4, 4]])
        assert free_counts(F, 4, 2) == (0, 0)
        assert phi(F, 4, 2) == F

    def test_small(self):
        F = R([[1], [2, 2, 2], [], [4, 4]])
        G = phi(F, 2, 1)
        assert G == R([[1], [2, 1, 1], [], [4, 4]])
        assert phi(G, 2, 1) == F

    def test_precondition(self):
        with pytest.raises(ParameterError):
            phi(PHI_LEFT, 1, 1)


class TestPhiRow:
    def test_nothing_to_move(self):
        # no entry r or r+1 below row r
        assert phi_row(R([[1], [], [3]]), 1) == R([[1], [], [3]])
        assert phi_row(R([[1, 1], [2], []]), 2) == R([[1, 1], [2], []])

    def test_involution_on_shape_1302(self):
        for F in enumerate_ssf(Composition((1, 3, 0, 2))):
            for r in range(1, 4):
                assert phi_row(phi_row(F, r), r) == F

    def test_order_of_rows_is_immaterial(self, small_family):
        for alpha in small_family:
            for F in enumerate_ssf(alpha):
                for r in range(1, alpha.n):
                    G = F
                    for i in range(alpha.n, r, -1):
                        G = phi(G, i, r)
                    assert G == phi_row(F, r)

    def test_parameter_error(self):
        with pytest.raises(ParameterError):
            phi_row(R([[1], [2]]), 2)


@settings(max_examples=300, deadline=None)
@given(ssf_fillings())
def test_operator_properties(F):
    n = F.n
    for t in range(1, n):
        for r in range(t + 1, n + 1):
            n1, n2 = free_counts(F, r, t)
            L, Rz = lower(F, r, t), raise_(F, r, t)
            assert L.is_ssf and Rz.is_ssf
            if n1:
                assert raise_(L, r, t) == F
            if n2:
                assert lower(Rz, r, t) == F
            P = phi(F, r, t)
            assert phi(P, r, t) == F
            assert free_counts(P, r, t) == (n2, n1)
            w, wp = weight(F), weight(P)
            assert w[t - 1] + w[t] == wp[t - 1] + wp[t]
            assert w[: t - 1] == wp[: t - 1] and w[t + 1 :] == wp[t + 1 :]
            for rp in range(r + 1, n + 1):
                assert phi(phi(F, r, t), rp, t) == phi(phi(F, rp, t), r, t)
