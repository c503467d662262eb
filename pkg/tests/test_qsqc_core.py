import math

import pytest
from jsonschema import validate

from helpers import C8_FAMILY, code, example, qsc, v
from quotient_space_codes.corpus import bundled_examples
from quotient_space_codes.errors import DuplicateCoset, PreconditionError
from quotient_space_codes.pauli_space import quantum_weight
from quotient_space_codes.qsqc_core import (
    build_qsc,
    classical_union_distance,
    classify,
    format_distance,
    max_certifiable_distance,
    ust_distance,
    verify,
)
from quotient_space_codes.schemas import CERTIFICATE_SCHEMA, UST_REPORT_SCHEMA
from quotient_space_codes.stabilizer import analyze


def _certified_examples():
    return [e.name for e in bundled_examples().get_all().values() if e.expect_certified]


class TestBuild:
    def test_reps_are_canonical(self):
        c8 = code("c8")
        omega = build_qsc(c8, [v("00000000|11111111")])
        assert omega.L == 1
        assert omega.cosets[0].is_zero()

    def test_duplicate_coset(self):
        c8 = code("c8")
        x = v("10000000|00000000")
        with pytest.raises(DuplicateCoset) as info:
            build_qsc(c8, [v("00000000|00000000"), x, x + v("00000000|11111111")])
        assert info.value.pair == (1, 2)

    def test_empty(self):
        with pytest.raises(PreconditionError):
            build_qsc(code("c8"), [])

    def test_distance_of_single_coset_is_infinite(self):
        omega = qsc("c8", "omega8")
        assert omega.distance == math.inf
        assert omega.closest_pair is None
        assert omega.projection_distance() == math.inf

    def test_normalized_starts_at_zero(self):
        omega = qsc("c83", "omega83")
        moved = build_qsc(code("c83"), [r + omega.reps[3] for r in omega.reps])
        normalized, shift = moved.normalized()
        assert normalized.cosets[0].is_zero()
        assert shift == moved.reps[0]
        assert normalized.distance == omega.distance

    def test_without(self):
        omega = qsc("c83", "omega83")
        assert omega.without(7).L == 7
        with pytest.raises(PreconditionError):
            qsc("c8", "omega8").without(0)

    def test_projection_distance_bounds_distance(self):
        omega = qsc("c83", "omega83")
        assert omega.projection_distance() >= omega.distance


class TestVerify:
    @pytest.mark.parametrize("name", _certified_examples())
    def test_bundled_examples_certify(self, name):
        c, omega, d = example(name)
        cert = verify(c, omega, d)
        assert cert.certified, cert.witness
        assert cert.reason is None
        validate(cert.to_dict(), CERTIFICATE_SCHEMA)

    @pytest.mark.parametrize("name, k, L", [("c8", 3, 1), ("c81", 2, 2), ("c82", 1, 4), ("c83", 0, 8)])
    def test_c8_family_parameters(self, name, k, L):
        c, omega, d = example(name)
        cert = verify(c, omega, d)
        assert (cert.n, cert.k, cert.L) == (8, k, L)
        assert cert.dimension == 8
        assert cert.parameters() == f"((8, 2^{k}·{L}, 3))"

    def test_c8_flags(self):
        cert = verify(*example("c8"))
        assert cert.flags.additive
        assert not cert.flags.cws
        assert not cert.flags.degenerate
        assert cert.dm == 3
        assert cert.s == 0

    def test_c12_is_degenerate_cws(self):
        cert = verify(*example("c12"))
        assert cert.flags.cws
        assert cert.flags.degenerate
        assert cert.containing_code[1] == 11
        assert cert.to_dict()["dm"] is None

    def test_d_above_dm(self):
        cert = verify(code("c8"), qsc("c8", "omega8"), 4)
        assert not cert.certified
        assert cert.reason == "d_le_dm"
        assert cert.witness == {"dm": 3, "d": 4}

    def test_wrong_representative(self):
        c, omega, d = example("c83-wrong")
        cert = verify(c, omega, d)
        assert cert.status == "rejected"
        assert cert.reason == "qsc_distance"
        assert cert.witness["pair"] == [0, 1]
        assert cert.witness["distance"] == 1
        assert quantum_weight(v(cert.witness["error"])) == 1

    def test_distance_failure_reported_before_measurement(self):
        c9 = code("c9")
        omega = build_qsc(c9, [v("000000000|000000000"), v("000000000|000000001")])
        cert = verify(c9, omega, 2)
        assert not cert.conditions.measurement_ok
        assert not cert.conditions.qsc_distance_ok
        assert cert.reason == "qsc_distance"

    def test_measurement_is_the_only_failure(self):
        c12 = code("c12")
        omega = build_qsc(c12, [v("000000000000|000000000000"), v("000000111110|000000000001")])
        cert = verify(c12, omega, 5)
        assert cert.conditions.qsc_distance_ok
        assert cert.conditions.d_le_dm
        assert not cert.conditions.measurement_ok
        assert cert.reason == "measurement"
        assert cert.witness == {"pair": [0, 1], "stabilizer_element": "000000000001|000000000000"}

    def test_verify_is_deterministic(self):
        c9 = code("c9")
        omega = qsc("c9", "omega9")
        assert verify(c9, omega, 2).to_dict() == verify(c9, omega, 2).to_dict()

    def test_hamming_mode_doubles_requirement(self):
        cert = verify(code("c8"), qsc("c8", "omega8", "hamming"), 3)
        assert cert.required_distance == 5
        assert cert.norm_mode == "hamming"
        assert cert.certified

    @pytest.mark.parametrize("index", range(16))
    def test_removing_a_coset_keeps_certificate(self, index):
        c9 = code("c9")
        smaller = qsc("c9", "omega9").without(index)
        cert = verify(c9, smaller, 2)
        assert cert.certified
        assert cert.L == 15

    def test_c12_parameters(self):
        cert = verify(*example("c12"))
        assert cert.parameters() == "((12, 2^0·2, 5))"
        assert cert.qsc_distance == 5

    def test_c7_beats_its_stabilizer(self):
        cert = verify(*example("c7"))
        assert cert.certified
        assert cert.qsc_distance == 2
        assert cert.dm == 2

    def test_translation_invariance(self):
        c83 = code("c83")
        omega = qsc("c83", "omega83")
        moved = build_qsc(c83, [r + omega.reps[5] for r in omega.reps])
        cert = verify(c83, moved, 3)
        assert cert.certified
        assert cert.translation == moved.reps[0]

    def test_wrong_space(self):
        with pytest.raises(PreconditionError):
            verify(code("c81"), qsc("c8", "omega8"), 3)

    def test_rejects_nonpositive_d(self):
        with pytest.raises(PreconditionError):
            verify(code("c8"), qsc("c8", "omega8"), 0)

    def test_max_certifiable_distance(self):
        assert max_certifiable_distance(code("c83"), qsc("c83", "omega83")) == 3
        assert max_certifiable_distance(code("c8"), qsc("c8", "omega8")) == 3

    def test_max_certifiable_distance_unbounded(self):
        self_dual = analyze([v("10|00"), v("01|00")])
        trivial = build_qsc(self_dual, [v("00|00")])
        assert max_certifiable_distance(self_dual, trivial) == math.inf


class TestClassify:
    def test_additive(self):
        labels, containing = classify(verify(*example("c8")))
        assert labels == {"additive", "nondegenerate"}
        assert containing[:2] == (8, 8)

    @pytest.mark.parametrize("name", C8_FAMILY[1:])
    def test_nonadditive(self, name):
        labels, _ = classify(verify(*example(name)))
        assert "additive" not in labels

    def test_cws(self):
        labels, _ = classify(verify(*example("c83")))
        assert "cws" in labels

    def test_rejected(self):
        with pytest.raises(PreconditionError):
            classify(verify(*example("c83-wrong")))


class TestUnionConstruction:
    def test_c83_matches_qsc_distance(self):
        report = ust_distance(code("c83"), qsc("c83", "omega83"))
        assert report.ust_distance == 3
        assert report.classical_union_distance <= report.ust_distance
        validate(report.to_dict(), UST_REPORT_SCHEMA)

    def test_additive_case_is_dm(self):
        report = ust_distance(code("c8"), qsc("c8", "omega8"))
        assert report.ust_distance == 3
        assert report.exclusion_dim == 5

    def test_c9_is_strict(self):
        report = ust_distance(code("c9"), qsc("c9", "omega9"))
        assert report.classical_union_distance == 1
        assert report.ust_distance == 2
        assert report.strict

    def test_union_distance_bounded_by_qsc_distance(self):
        omega = qsc("c83", "omega83")
        assert classical_union_distance(code("c83"), omega) <= omega.distance


def test_format_distance():
    assert format_distance(math.inf) is None
    assert format_distance(3) == 3
