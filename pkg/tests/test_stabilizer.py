import math

import numpy as np
import pytest

from helpers import code, v
from quotient_space_codes.errors import NotSelfOrthogonal, PreconditionError
from quotient_space_codes.gf2_linalg import reduce_array, symplectic_inner
from quotient_space_codes.pauli_space import quantum_weights
from quotient_space_codes.stabilizer import (
    analyze,
    degeneracy_profile,
    dm,
    min_quantum_weight,
    min_weight_outside,
    random_self_orthogonal,
)


class TestAnalyze:
    def test_c8(self):
        c8 = code("c8")
        assert (c8.n, c8.k, c8.subspace.dim) == (8, 3, 5)
        assert not c8.is_self_dual
        assert c8.subspace.is_subspace_of(c8.dual)

    @pytest.mark.parametrize("name, k", [("c81", 2), ("c82", 1), ("c83", 0)])
    def test_c8_family_dimensions(self, name, k):
        assert code(name).k == k

    def test_self_dual_codes(self):
        assert code("c83").is_self_dual
        assert code("c12").is_self_dual

    def test_rejects_anticommuting_rows(self):
        with pytest.raises(NotSelfOrthogonal) as info:
            analyze([v("10|00"), v("01|00"), v("00|10")])
        assert info.value.pair == (0, 2)


class TestDistances:
    def test_dm_of_c8(self):
        assert dm(code("c8")) == 3

    def test_dm_infinite_when_self_dual(self):
        assert dm(code("c83")) == math.inf
        assert dm(code("c12")) == math.inf

    def test_c9(self):
        c9 = code("c9")
        assert min_quantum_weight(c9.subspace) == 1
        assert dm(c9) == 3

    def test_c7(self):
        c7 = code("c7")
        assert min_quantum_weight(c7.subspace) == 1
        assert dm(c7) == 2

    def test_weight_ordered_search_agrees_with_brute_force(self):
        c8 = code("c8")
        brute = min_weight_outside(c8.dual, c8.subspace)
        ordered = min_weight_outside(c8.dual, c8.subspace, brute_force_dim=0)
        assert brute.exact and ordered.exact
        assert brute.value == ordered.value == 3

    def test_truncated_search_reports_lower_bound(self):
        c8 = code("c8")
        bound = min_weight_outside(c8.dual, brute_force_dim=0, max_weight=1)
        assert bound.value == 2
        assert not bound.exact

    def test_zero_subspace_has_infinite_weight(self):
        c8 = code("c8")
        assert min_weight_outside(c8.subspace, c8.subspace).value == math.inf


class TestDegeneracy:
    def test_c8_nondegenerate_at_three(self):
        profile = degeneracy_profile(code("c8"), 3)
        assert profile.nondegenerate
        assert profile.span_dual.dim == 16

    def test_c12_weight_four_subcode(self):
        profile = degeneracy_profile(code("c12"), 5)
        assert profile.s == 1
        assert profile.span.basis == (v("000000000001|000000000000"),)

    def test_c9_weight_one_subcode(self):
        profile = degeneracy_profile(code("c9"), 2)
        assert profile.s == 1
        assert profile.lowweight_set == (v("000000001|000000000"),)
        assert profile.span_dual.dim == 17

    def test_lowweight_elements_lie_in_code(self):
        c12 = code("c12")
        profile = degeneracy_profile(c12, 5)
        assert all(c12.subspace.contains(c) for c in profile.lowweight_set)

    @pytest.mark.parametrize("name, d", [("c8", 3), ("c9", 2), ("c12", 5)])
    def test_code_outside_lowweight_span_is_heavy(self, name, d):
        c = code(name)
        profile = degeneracy_profile(c, d)
        elements = c.subspace.elements()
        outside = elements[reduce_array(elements, profile.span) != 0]
        assert len(outside) > 0
        assert quantum_weights(outside, c.n).min() >= d

    def test_d_one_has_empty_subcode(self):
        profile = degeneracy_profile(code("c9"), 1)
        assert profile.lowweight_set == ()
        assert profile.s == 0

    def test_rejects_nonpositive_d(self):
        with pytest.raises(PreconditionError):
            degeneracy_profile(code("c8"), 0)


class TestRandomCodes:
    def test_random_self_orthogonal(self):
        rng = np.random.default_rng(3)
        for n, dim in [(3, 2), (5, 3), (6, 6)]:
            c = random_self_orthogonal(n, dim, rng)
            assert c.subspace.dim == dim
            rows = c.generators
            assert all(symplectic_inner(r, s) == 0 for r in rows for s in rows)

    def test_deterministic_for_seed(self):
        a = random_self_orthogonal(4, 2, np.random.default_rng(11))
        b = random_self_orthogonal(4, 2, np.random.default_rng(11))
        assert a.subspace == b.subspace

    def test_rejects_oversized_dim(self):
        with pytest.raises(PreconditionError):
            random_self_orthogonal(3, 4, np.random.default_rng(0))
