import pytest

from helpers import v
from quotient_space_codes.gf2_linalg import SympVector, symplectic_inner
from quotient_space_codes.pauli_space import (
    count_errors,
    enumerate_errors,
    hamming_weight,
    psi_map,
    quantum_weight,
    trace_inner,
    vectors_by_hamming_weight,
)


def _all_vectors(n):
    return [SympVector(n, bits) for bits in range(1 << (2 * n))]


def test_weights():
    x = v("11|01")
    assert quantum_weight(x) == 2
    assert hamming_weight(x) == 3


def test_y_counts_once_in_quantum_weight():
    assert quantum_weight(v("100|100")) == 1
    assert hamming_weight(v("100|100")) == 2


@pytest.mark.parametrize(
    "n, t, expected",
    [(8, 2, 277), (12, 4, 46666), (9, 1, 28), (3, 0, 1), (2, 5, 16)],
)
def test_count_errors(n, t, expected):
    assert count_errors(n, t) == expected


def test_enumerate_errors_matches_count():
    errors = list(enumerate_errors(4, 2))
    assert len(errors) == count_errors(4, 2)
    assert len(set(errors)) == len(errors)


def test_enumerate_errors_ordering():
    errors = list(enumerate_errors(3, 2))
    weights = [quantum_weight(e) for e in errors]
    assert errors[0].is_zero()
    assert weights == sorted(weights)
    for w in (1, 2):
        layer = [e for e in errors if quantum_weight(e) == w]
        assert layer == sorted(layer)


def test_enumerate_errors_range():
    with pytest.raises(ValueError):
        list(enumerate_errors(3, 4))
    with pytest.raises(ValueError):
        list(enumerate_errors(3, -1))


def test_vectors_by_hamming_weight():
    vectors = list(vectors_by_hamming_weight(2))
    assert len(vectors) == 16
    assert [hamming_weight(x) for x in vectors] == sorted(hamming_weight(x) for x in vectors)
    assert len(list(vectors_by_hamming_weight(3, max_weight=1))) == 7


def test_psi_map_letters():
    assert [int(x) for x in psi_map(v("110|011")).entries] == [2, 1, 3]


def test_psi_preserves_weight():
    for x in _all_vectors(3):
        assert psi_map(x).weight() == quantum_weight(x)


def test_psi_is_additive():
    for x in _all_vectors(2)[:16]:
        for y in _all_vectors(2):
            assert psi_map(x) + psi_map(y) == psi_map(x + y)


def test_trace_inner_matches_symplectic_form():
    vectors = _all_vectors(2)
    for x in vectors:
        for y in vectors:
            assert trace_inner(psi_map(x), psi_map(y)) == symplectic_inner(x, y)
