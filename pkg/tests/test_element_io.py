"""Tests for element files."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import json

import numpy as np
import pytest

from src.campaign.element_io import dumps_element, element_to_dict, loads_element, read_element, write_element
from src.errors import FactorMismatch, ParseError
from src.factors import make_factor, parse_factor_spec

IDENTITY_M2 = {
    "factor": {"kind": "rectangular", "sizes": [2, 2]},
    "coords": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]],
    "label": "identity",
}


class TestElementFiles:
    """Tests for reading and writing elements."""

    def test_identity_of_m2(self):
        """Test the documented M2 identity example."""
        x = loads_element(json.dumps(IDENTITY_M2))
        assert np.allclose(x.space.to_matrix(x), np.eye(2))
        assert element_to_dict(x, "identity") == IDENTITY_M2

    def test_c5_is_bit_exact(self, tmp_path):
        """Test that a random C5 element reads back with identical bits."""
        space = make_factor("c5")
        x = space.random_element(np.random.default_rng(0))
        path = tmp_path / "x.json"
        write_element(path, x, "sample")
        y = read_element(path, expected=space)
        assert y.space is space
        assert np.array_equal(y.coords, x.coords)

    def test_direct_sum_label(self):
        """Test that direct sums are rebuilt from their parts."""
        space = parse_factor_spec("spin:3+symmetric:2")
        x = space.random_element(np.random.default_rng(1))
        data = json.loads(dumps_element(x))
        assert data["factor"]["kind"] == "direct_sum"
        assert len(data["factor"]["parts"]) == 2
        y = loads_element(dumps_element(x))
        assert y.space.label == space.label
        assert np.array_equal(y.coords, x.coords)

    def test_interleaved_coordinates(self):
        """Test the flat [re, im, re, im, ...] form."""
        text = json.dumps({"factor": {"kind": "spin", "sizes": [2]}, "coords": [1.0, 0.0, 0.0, 2.0]})
        assert np.allclose(loads_element(text).coords, [1.0, 2j])

    def test_odd_interleaved_length(self):
        """Test that an odd number of interleaved parts is a parse error."""
        text = json.dumps({"factor": {"kind": "spin", "sizes": [2]}, "coords": [1.0, 0.0, 0.0]})
        with pytest.raises(ParseError) as exc_info:
            loads_element(text)
        assert exc_info.value.position == "coords"

    @pytest.mark.parametrize(
        "data,position",
        [
            ({"coords": []}, "factor"),
            ({"factor": {"kind": "spin", "sizes": [2]}, "coords": [[1.0, 0.0]]}, "coords"),
            ({"factor": {"kind": "spin", "sizes": "2"}, "coords": []}, "factor.sizes"),
            ({"factor": {"kind": "spin", "sizes": [1]}, "coords": [["a", 0.0]]}, "coords[0][0]"),
            ({"factor": {"kind": "torus", "sizes": [1]}, "coords": [[0.0, 0.0]]}, "factor"),
        ],
    )
    def test_structural_defects(self, data, position):
        """Test that defects are reported with the offending field."""
        with pytest.raises(ParseError) as exc_info:
            loads_element(json.dumps(data))
        assert exc_info.value.position == position

    def test_invalid_json_reports_offset(self):
        """Test that JSON syntax errors carry the character offset."""
        with pytest.raises(ParseError) as exc_info:
            loads_element('{"factor": ')
        assert isinstance(exc_info.value.position, int)

    def test_factor_mismatch(self):
        """Test that reading into another factor raises FactorMismatch."""
        with pytest.raises(FactorMismatch):
            loads_element(json.dumps(IDENTITY_M2), expected=make_factor("rectangular", (2, 3)))
