import pytest
from jsonschema import validate

from helpers import code, example
from quotient_space_codes.bounds import (
    general_hamming_compare,
    gv_type,
    hamming_type,
    singleton,
    singleton_for,
)
from quotient_space_codes.errors import PreconditionError
from quotient_space_codes.pauli_space import enumerate_errors
from quotient_space_codes.qsqc_core import verify
from quotient_space_codes.quotient import QuotientSpace, canonicalize
from quotient_space_codes.schemas import BOUND_SCHEMA
from quotient_space_codes.stabilizer import degeneracy_profile


class TestHammingType:
    def test_c83(self):
        report = hamming_type(code("c83"), verify(*example("c83")))
        assert (report.lhs, report.rhs) == (200, 256)
        assert report.holds
        assert report.detail["me"] == 25
        validate(report.to_dict(), BOUND_SCHEMA)

    def test_c9(self):
        report = hamming_type(code("c9"), verify(*example("c9")))
        assert (report.lhs, report.rhs) == (64, 256)
        assert report.detail["s"] == 1
        assert report.detail["t"] == 0

    def test_c12(self):
        report = hamming_type(code("c12"), verify(*example("c12")))
        assert report.rhs == 2048
        assert report.detail["t"] == 2
        assert report.holds

    @pytest.mark.parametrize("name", ["c83", "c9", "c12"])
    def test_me_matches_direct_count(self, name):
        c, omega, d = example(name)
        report = hamming_type(c, verify(c, omega, d))
        inside = degeneracy_profile(c, d).span_dual
        space = QuotientSpace(c.dual)
        reps = {canonicalize(space, e).rep for e in enumerate_errors(c.n, report.detail["t"]) if inside.contains(e)}
        assert len(reps) == report.detail["me"]

    def test_needs_certificate(self):
        with pytest.raises(PreconditionError):
            hamming_type(code("c83"), verify(*example("c83-wrong")))


class TestGvType:
    def test_c9_promises_three_cosets(self):
        report = gv_type(code("c9"), 2, 2)
        assert (report.lhs, report.rhs) == (200, 256)
        assert report.holds
        assert (report.detail["reduced_lhs"], report.detail["reduced_rhs"]) == (50, 64)
        assert report.detail["promised_L"] == 3

    def test_c9_fails_at_three(self):
        report = gv_type(code("c9"), 2, 3)
        assert report.lhs == 300
        assert report.holds is False

    def test_rejects_bad_arguments(self):
        with pytest.raises(PreconditionError):
            gv_type(code("c9"), 2, 0)
        with pytest.raises(PreconditionError):
            gv_type(code("c9"), 0, 2)


class TestSingleton:
    def test_tight(self):
        report = singleton(5, 1, 0, 3)
        assert report.applicable
        assert report.holds
        assert report.lhs == report.rhs == 5

    def test_violated(self):
        report = singleton(6, 0, 2, 4)
        assert report.applicable
        assert report.holds is False

    @pytest.mark.parametrize("n, k, l, d", [(9, 2, 4, 2), (8, 0, 3, 3), (12, 0, 1, 5), (8, 3, None, 3)])
    def test_not_applicable(self, n, k, l, d):
        report = singleton(n, k, l, d)
        assert not report.applicable
        assert report.holds is None

    def test_from_certificate(self):
        report = singleton_for(verify(*example("c83")))
        assert report.detail["L"] == 8
        assert report.detail["l"] == 3
        assert not report.applicable

    def test_non_power_of_two(self):
        c, omega, d = example("c83")
        cert = verify(c, omega.without(7), d)
        report = singleton_for(cert)
        assert report.detail["l"] is None
        assert not report.applicable


class TestGeneralHamming:
    def test_c9_at_t_one(self):
        report = general_hamming_compare(code("c9"), 2, t=1)
        assert (report.lhs, report.rhs) == (28, 50)
        assert report.detail["direction"] == "<="

    def test_c8_is_tight(self):
        report = general_hamming_compare(code("c8"), 3)
        assert (report.lhs, report.rhs) == (25, 25)
        assert report.holds

    def test_rejects_negative_t(self):
        with pytest.raises(PreconditionError):
            general_hamming_compare(code("c8"), 3, t=-1)
