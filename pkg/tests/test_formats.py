import pytest

from helpers import v
from quotient_space_codes.corpus import load_data_file
from quotient_space_codes.errors import (
    DimensionMismatch,
    InconsistentLength,
    MatrixSyntaxError,
    PreconditionError,
)
from quotient_space_codes.formats import parse_check_matrix, parse_omega, read_text, serialize_vectors


def test_parse_with_comments_and_spacing():
    text = "# header\n\n1000 1011|0010 1101  # row 1\n0100 1110|0011 1010\n"
    assert parse_check_matrix(text) == [v("10001011|00101101"), v("01001110|00111010")]


def test_bundled_matrix():
    rows = parse_check_matrix(load_data_file("c8.chk"))
    assert len(rows) == 5
    assert str(rows[-1]) == "00000000|11111111"


def test_syntax_error_position():
    with pytest.raises(MatrixSyntaxError) as info:
        parse_check_matrix("10|01\n1x|00\n")
    assert (info.value.line, info.value.col) == (2, 2)


def test_missing_bar():
    with pytest.raises(MatrixSyntaxError):
        parse_check_matrix("1001\n")


def test_two_bars():
    with pytest.raises(MatrixSyntaxError):
        parse_check_matrix("10|01|1\n")


def test_unequal_halves():
    with pytest.raises(InconsistentLength) as info:
        parse_check_matrix("10|01\n100|01\n")
    assert info.value.line == 2


def test_mixed_n_across_lines():
    with pytest.raises(InconsistentLength) as info:
        parse_check_matrix("10|01\n100|011\n")
    assert info.value.line == 2


def test_omega_checks_n():
    with pytest.raises(DimensionMismatch):
        parse_omega("00|00\n", 3)


def test_empty_omega():
    with pytest.raises(PreconditionError):
        parse_omega("# nothing here\n")


def test_serialize_reads_back(tmp_path):
    vectors = [v("110|001"), v("000|111")]
    path = tmp_path / "out.om"
    path.write_text(serialize_vectors(vectors, comments=["found by search"]), encoding="utf-8")
    text = read_text(path)
    assert text.startswith("# found by search\n")
    assert parse_omega(text, 3) == vectors


@pytest.mark.parametrize(
    "name", ["c7.chk", "c8.chk", "c81.chk", "c82.chk", "c83.chk", "c9.chk", "c12.chk", "omega9.om", "omega12.om"]
)
def test_bundled_files_survive_serialization(name):
    vectors = parse_check_matrix(load_data_file(name))
    assert parse_check_matrix(serialize_vectors(vectors)) == vectors


def test_invalid_utf8_position(tmp_path):
    path = tmp_path / "bad.chk"
    path.write_bytes(b"10|01\n1\xff|00\n")
    with pytest.raises(MatrixSyntaxError) as info:
        read_text(path)
    assert (info.value.line, info.value.col) == (2, 2)
