"""
Unit tests for output formatters.
"""
import csv
import json

import pytest

from cyclonorm.core.models import SweepRecord
from cyclonorm.core.quadfield import QuadElem
from cyclonorm.utils.formatters import (
    FIELDS,
    RecordFormatter,
    format_csv,
    format_json,
    format_text,
    to_plain,
    to_text,
)


class TestToPlain:
    """Tests for JSON-safe conversion"""

    def test_big_integer_becomes_string(self):
        assert to_plain(2 ** 100) == str(2 ** 100)

    def test_list(self):
        assert to_plain([1, 11, 44]) == ["1", "11", "44"]

    def test_field_element(self):
        assert to_plain(QuadElem(0, -1, 1, -7)) == {"a": "0", "b": "-1", "den": "1", "dstar": "-7"}

    def test_nested(self):
        value = {"relnorm": QuadElem(5, -1, 2, 5), "m": -1}
        assert to_plain(value) == {"relnorm": {"a": "5", "b": "-1", "den": "2", "dstar": "5"}, "m": "-1"}

    def test_passthrough(self):
        assert to_plain(None) is None
        assert to_plain(True) is True
        assert to_plain("x") == "x"


class TestToText:
    def test_list_is_compact(self):
        assert to_text([1, 11, 44, 77, 55, 11]) == "[1,11,44,77,55,11]"

    def test_bool(self):
        assert to_text(False) == "false"

    def test_dict(self):
        assert to_text({"relnorm": QuadElem(0, 1, 1, -7), "sign": 1}) == "{relnorm=sqrt(-7), sign=1}"


class TestRecordFormats:
    """Tests for the three line formats"""

    def test_text(self, sample_record):
        assert format_text(sample_record) == "domino n=11 value=[1,11,44,77,55,11] method=closed_form"

    def test_text_quotes_polynomial(self):
        record = SweepRecord(command="norm", n=35, poly="1 - x + x^2", value=1, unit=True, method="prs")
        assert format_text(record) == "norm n=35 poly='1 - x + x^2' value=1 unit=true method=prs"

    def test_json_fixed_keys(self, sample_record):
        data = json.loads(format_json(sample_record))
        assert list(data) == list(FIELDS)
        assert data["value"] == ["1", "11", "44", "77", "55", "11"]
        assert data["n"] == 11
        assert data["ok"] is None

    def test_json_big_value(self):
        record = SweepRecord(command="lucas", n=500, value=10 ** 120)
        assert json.loads(format_json(record))["value"] == "1" + "0" * 120

    def test_csv_round_trips_through_reader(self, sample_record):
        row = next(csv.reader([format_csv(sample_record)]))
        assert row == ["domino", "11", "", "[1,11,44,77,55,11]", "", "closed_form", ""]

    def test_formatter_header(self):
        assert RecordFormatter("csv").header() == "command,n,poly,value,unit,method,ok"
        assert RecordFormatter("json").header() is None

    def test_formatter_dispatch(self, sample_record):
        assert RecordFormatter("text").format(sample_record) == format_text(sample_record)

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="Unknown output format"):
            RecordFormatter("xml")
