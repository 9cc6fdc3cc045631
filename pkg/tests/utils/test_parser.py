"""
Unit tests for the polynomial expression parser.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclonorm.core.exceptions import EmptyInputError, PolySyntaxError
from cyclonorm.core.polyring import IntPoly
from cyclonorm.utils.parser import parse_expr, parse_poly, render, tokenize


class TestParsePoly:
    """Tests for accepted expressions"""

    @pytest.mark.parametrize("source,coeffs", [
        ("1 - x + x^2", (1, -1, 1)),
        ("x^5", (0, 0, 0, 0, 0, 1)),
        ("1 - x - x^2 + x", (1, 0, -1)),
        ("1-x+x^2", (1, -1, 1)),
        ("2x", (0, 2)),
        ("2*x^3 - 7", (-7, 0, 0, 2)),
        ("-x", (0, -1)),
        ("  x^2  ", (0, 0, 1)),
        ("1 - -x", (1, 1)),
        ("x - x", ()),
        ("0", ()),
    ])
    def test_accepted(self, source, coeffs):
        assert parse_poly(source).coeffs == coeffs

    def test_parse_expr_keeps_source(self):
        expr = parse_expr("x^2-x+1")
        assert expr.source == "x^2-x+1"
        assert expr.parsed == IntPoly((1, -1, 1))
        assert expr.canonical() == "1 - x + x^2"


class TestParseErrors:
    """Tests for rejected expressions and their offsets"""

    @pytest.mark.parametrize("source,offset", [
        ("1 + * x", 4),
        ("xx", 1),
        ("x^0", 2),
        ("x^", 2),
        ("1 $ x", 2),
        ("2 3", 2),
        ("1 +", 3),
        ("--x", 1),
        ("3*", 2),
    ])
    def test_syntax_error_offsets(self, source, offset):
        with pytest.raises(PolySyntaxError, match=f"syntax error at offset {offset}") as excinfo:
            parse_poly(source)
        assert excinfo.value.offset == offset

    @pytest.mark.parametrize("source", ["", "   ", "\t"])
    def test_empty_input(self, source):
        with pytest.raises(EmptyInputError, match="empty input"):
            parse_poly(source)

    def test_uppercase_variable_rejected(self):
        with pytest.raises(PolySyntaxError):
            parse_poly("X^2")


class TestTokenize:
    def test_offsets(self):
        tokens = tokenize("12 x^3")
        assert [(t.kind, t.offset) for t in tokens] == [
            ("INT", 0), ("VAR", 3), ("CARET", 4), ("INT", 5), ("END", 6),
        ]


class TestRoundTrip:
    """Tests for parse_poly(render(p)) == p"""

    @pytest.mark.property
    @settings(max_examples=1000)
    @given(st.lists(st.integers(min_value=-99, max_value=99), max_size=9))
    def test_render_then_parse(self, coeffs):
        poly = IntPoly(tuple(coeffs))
        assert parse_poly(render(poly)) == poly
