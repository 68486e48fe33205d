"""
Tests for PMASK1 mask files
"""

import math

import numpy as np
import pytest

from dqc1slm.data_models.domain_models_core import CellSpec, PanelDims
from dqc1slm.exceptions import MalformedFile
from dqc1slm.phase_mask import load_mask, make_linear_ramp, make_random_balanced, quantize, save_mask


class TestSaveLoad:
    """Test writing and reading masks"""

    def test_radian_mask_is_exact(self, tmp_path, random_mask, tiny_dims):
        """Test radians survive a save/load cycle bit for bit"""
        mask = random_mask(tiny_dims)
        path = save_mask(mask, tmp_path / "random.pmask")
        loaded = load_mask(path)
        assert loaded.dims == tiny_dims
        assert loaded.levels is None
        assert np.array_equal(loaded.phases, mask.phases)

    def test_quantized_mask_stores_levels(self, tmp_path):
        """Test quantized masks are written as integer gray levels"""
        mask = quantize(make_linear_ramp(PanelDims(2, 4), math.pi, 2 * math.pi), 256)
        path = save_mask(mask, tmp_path / "ramp.pmask")
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "PMASK1 2 4 L256"
        assert lines[1] == "128 128"
        assert lines[3] == "192 192"
        loaded = load_mask(path)
        assert loaded.levels == 256
        assert np.array_equal(loaded.phases, mask.phases)

    def test_boolean_mask(self, tmp_path):
        """Test a random balanced oracle keeps its 0/pi layout"""
        mask = make_random_balanced(PanelDims(8, 8), CellSpec.square(2), seed=11)
        loaded = load_mask(save_mask(mask, tmp_path / "oracle.pmask"))
        assert loaded.equals(mask)

    def test_comments_and_blank_lines(self, tmp_path):
        """Test '#' lines and blank lines are skipped"""
        path = tmp_path / "hand.pmask"
        path.write_text("# hand written\nPMASK1 2 1\n\n0 3.141592653589793\n", encoding="utf-8")
        mask = load_mask(path)
        assert mask.phases[0, 1] == pytest.approx(math.pi)

    def test_gray_levels_wrap(self, tmp_path):
        """Test gray level values are reduced modulo the level count"""
        path = tmp_path / "wrap.pmask"
        path.write_text("PMASK1 1 1 L4\n5\n", encoding="utf-8")
        assert load_mask(path).phases[0, 0] == pytest.approx(math.pi / 2)


class TestMalformed:
    """Test rejection of broken files"""

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "IPROF1 2 1\n0 0\n",
            "PMASK1 2\n0 0\n",
            "PMASK1 2 x\n0 0\n",
            "PMASK1 2 1 256\n0 0\n",
            "PMASK1 2 1 L1\n0 0\n",
            "PMASK1 2 2\n0 0\n",
            "PMASK1 2 1\n0 0 0\n",
            "PMASK1 2 1\n0 zero\n",
            "PMASK1 2 1 L4\n0 1.5\n",
        ],
    )
    def test_rejected(self, tmp_path, text):
        """Test header and payload errors raise MalformedFile"""
        path = tmp_path / "bad.pmask"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(MalformedFile):
            load_mask(path)

    def test_missing_file(self, tmp_path):
        """Test a missing file raises OSError"""
        with pytest.raises(OSError):
            load_mask(tmp_path / "absent.pmask")
