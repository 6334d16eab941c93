import numpy as np
import pytest

from grothnorm.classes import SymMatrix, RectMatrix
from grothnorm.classes.tests.random_matrices import generate_symmetric, generate_rect
from grothnorm.readwrite import *
from grothnorm.utils import FieldTag, GrothmatParseError, SymmetryError


def sym_file(field, n, body):
    return f"grothmat v1\nkind: sym\nfield: {field}\nsize: {n}\n{body}\n"


class TestParseMatrix:

    def test_real_diagonal(self):
        A = parse_matrix(sym_file("real", 2, "1 0\n0 -1"))
        assert isinstance(A, SymMatrix) and A.field is FieldTag.REAL
        assert np.array_equal(A.entries, np.diag([1.0, -1.0]))

    def test_hermitian_pair(self):
        A = parse_matrix(sym_file("complex", 2, "1 1+2i\n1-2i 3"))
        assert A.entries[0, 1] == 1 + 2j and A.entries[1, 0] == 1 - 2j

    def test_symmetry_violation(self):
        with pytest.raises(SymmetryError):
            parse_matrix(sym_file("real", 2, "0 1\n0 0"))

    def test_non_real_diagonal(self):
        with pytest.raises(SymmetryError):
            parse_matrix(sym_file("complex", 1, "1+1i"))

    def test_rectangular(self):
        B = parse_matrix("grothmat v1\nkind: rect\nfield: real\nsize: 2 3\n1 2 3\n4 5 6\n")
        assert isinstance(B, RectMatrix) and B.shape == (2, 3)

    def test_comments_and_blank_lines(self):
        A = parse_matrix("# a comment\ngrothmat v1\n\nkind: sym # trailing\nfield: real\nsize: 1\n\n7\n")
        assert A.entries[0, 0] == 7

    @pytest.mark.parametrize('text,lineno', [
        ("grothmat v2\n", 1),
        ("grothmat v1\nkind: tri\n", 2),
        ("grothmat v1\nkind: sym\nfield: quaternion\n", 3),
        ("grothmat v1\nkind: sym\nfield: real\nsize: 2\n1 2\n2 x\n", 6),
        ("grothmat v1\nkind: sym\nfield: real\nsize: 2\n1 2\n2\n", 6),
        ("grothmat v1\nkind: sym\nfield: real\nsize: 1 2\n", 4),
    ])
    def test_parse_errors(self, text, lineno):
        with pytest.raises(GrothmatParseError) as info:
            parse_matrix(text)
        assert info.value.lineno == lineno


class TestWriteMatrix:

    @pytest.mark.parametrize('s,field', [(0, FieldTag.REAL), (1, FieldTag.COMPLEX), (2, FieldTag.COMPLEX)])
    def test_file_round_trip(self, tmp_path, s, field):
        A = generate_symmetric(4, s, field)
        path = tmp_path / "a.mat"
        write_matrix(path, A)
        B = read_matrix(path)
        assert B.field is field and np.array_equal(A.entries, B.entries)

    def test_rect_header(self):
        text = format_matrix(generate_rect(2, 3, 0))
        assert text.splitlines()[1:4] == ["kind: rect", "field: real", "size: 2 3"]

    def test_seventeen_digits(self):
        text = format_matrix(SymMatrix([[1 / 3]]))
        assert text.splitlines()[-1] == f"{1 / 3:.17g}"
