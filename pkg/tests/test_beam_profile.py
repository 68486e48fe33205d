"""
Tests for beam intensity profiles and their file formats
"""

import logging

import numpy as np
import pytest

from dqc1slm.beam_profile import (
    cell_masses,
    flat,
    from_counts,
    gaussian,
    load_counts,
    load_profile,
    make_gaussian_counts,
    save_counts,
    save_profile,
)
from dqc1slm.data_models.domain_models_core import CountsGrid, PanelDims
from dqc1slm.dqc1_core import compensated_sum
from dqc1slm.exceptions import AllZeroCounts, BadWaist, MalformedFile, NegativeWeight, TilingMismatch


class TestFlatAndGaussian:
    """Test analytic beam profiles"""

    def test_flat(self, small_dims):
        """Test flat profile weights"""
        profile = flat(small_dims)
        assert profile.is_uniform
        assert profile.weights[0, 0] == 1.0 / small_dims.pixel_count

    def test_gaussian_unit_sum(self, gaussian_small):
        """Test normalization to unit sum"""
        assert compensated_sum(gaussian_small.weights) == pytest.approx(1.0, abs=1e-14)

    def test_gaussian_symmetry(self, gaussian_small):
        """Test a centered beam is mirror symmetric"""
        weights = gaussian_small.weights
        assert np.array_equal(weights, weights[::-1, :])
        assert np.array_equal(weights, weights[:, ::-1])
        assert weights.argmax() == np.ravel_multi_index((47, 47), weights.shape)

    def test_gaussian_off_center(self, small_dims):
        """Test an explicit center moves the peak"""
        profile = gaussian(small_dims, waist=5.0, center_x=10.5, center_y=80.5)
        assert np.unravel_index(profile.weights.argmax(), small_dims.shape) == (80, 10)

    def test_bad_waist(self, small_dims):
        """Test nonpositive waists raise BadWaist"""
        with pytest.raises(BadWaist):
            gaussian(small_dims, waist=0.0)

    def test_beam_misses_panel(self, small_dims):
        """Test a beam far outside the panel raises BadWaist"""
        with pytest.raises(BadWaist):
            gaussian(small_dims, waist=0.01, center_x=1e6)


class TestFromCounts:
    """Test ingestion of coincidence-count grids"""

    def test_two_cells(self):
        """Test counts 3:1 give cell masses 0.75 and 0.25"""
        grid = CountsGrid(cells_x=2, cells_y=1, cell_size=2, counts=[3.0, 1.0])
        profile = from_counts(grid, PanelDims(4, 2))
        assert profile.weights[0, 0] == 0.1875
        assert profile.weights[1, 3] == 0.0625
        assert cell_masses(profile, 2).tolist() == [[0.75, 0.25]]

    def test_uniform_counts_are_flat(self, uniform_counts_full_hd, full_hd_dims):
        """Test equal counts give a uniform profile"""
        assert from_counts(uniform_counts_full_hd, full_hd_dims).is_uniform

    def test_scale_invariance(self):
        """Test multiplying every count leaves the profile unchanged"""
        grid = make_gaussian_counts(4, 3, 5, total=1e4, waist_cells=2.0)
        dims = PanelDims(20, 15)
        assert np.array_equal(from_counts(grid, dims).weights, from_counts(grid.scaled(4.0), dims).weights)

    def test_tiling_mismatch(self):
        """Test cells must cover the panel exactly"""
        grid = CountsGrid(cells_x=2, cells_y=2, cell_size=5, counts=np.ones(4))
        with pytest.raises(TilingMismatch):
            from_counts(grid, PanelDims(10, 12))

    def test_all_zero(self):
        """Test a grid with no signal raises AllZeroCounts"""
        grid = CountsGrid(cells_x=2, cells_y=1, cell_size=1, counts=[0.0, 0.0])
        with pytest.raises(AllZeroCounts):
            from_counts(grid, PanelDims(2, 1))

    def test_gaussian_counts(self):
        """Test synthetic beam scans"""
        grid = make_gaussian_counts(16, 9, 120, total=1e5, waist_cells=4.0)
        assert grid.counts.shape == (9, 16)
        assert compensated_sum(grid.counts) == pytest.approx(1e5)
        assert grid.counts[4, 8] == grid.counts.max()

    def test_cell_masses_mismatch(self, flat_small):
        """Test cell_masses needs an exact tiling"""
        with pytest.raises(TilingMismatch):
            cell_masses(flat_small, 7)


class TestProfileFiles:
    """Test IPROF1 and CGRID1 files"""

    def test_profile_exact(self, tmp_path, gaussian_small):
        """Test weights are preserved bit for bit"""
        loaded = load_profile(save_profile(gaussian_small, tmp_path / "beam.iprof"))
        assert np.array_equal(loaded.weights, gaussian_small.weights)

    def test_renormalize_with_warning(self, tmp_path, caplog):
        """Test unnormalized files are scaled and reported"""
        path = tmp_path / "raw.iprof"
        path.write_text("IPROF1 2 2\n1 1\n1 1\n", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            profile = load_profile(path)
        assert "re-normalizing" in caplog.text
        assert np.all(profile.weights == 0.25)

    def test_tolerance_override(self, tmp_path, caplog):
        """Test a loose tolerance silences the warning"""
        path = tmp_path / "near.iprof"
        path.write_text("IPROF1 2 1\n0.5 0.5000001\n", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            profile = load_profile(path, tolerance=1e-3)
        assert "re-normalizing" not in caplog.text
        assert compensated_sum(profile.weights) == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize(
        "text,error",
        [
            ("IPROF1 2 1\n0.5 -0.5\n", NegativeWeight),
            ("IPROF1 2 1\n0 0\n", AllZeroCounts),
            ("IPROF1 2 1\n0.5 nan\n", MalformedFile),
            ("IPROF1 2\n0.5 0.5\n", MalformedFile),
            ("PMASK1 2 1\n0.5 0.5\n", MalformedFile),
            ("IPROF1 2 2\n0.5 0.5\n", MalformedFile),
        ],
    )
    def test_profile_rejected(self, tmp_path, text, error):
        """Test bad profile files"""
        path = tmp_path / "bad.iprof"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(error):
            load_profile(path)

    def test_counts_file(self, tmp_path, uniform_counts_full_hd):
        """Test counts grids survive a save/load cycle"""
        loaded = load_counts(save_counts(uniform_counts_full_hd, tmp_path / "beam.cgrid"))
        assert (loaded.cells_x, loaded.cells_y, loaded.cell_size) == (16, 9, 120)
        assert np.array_equal(loaded.counts, uniform_counts_full_hd.counts)

    def test_counts_rejected(self, tmp_path):
        """Test bad counts files"""
        path = tmp_path / "bad.cgrid"
        path.write_text("CGRID1 2 1\n1 2\n", encoding="utf-8")
        with pytest.raises(MalformedFile):
            load_counts(path)
        path.write_text("CGRID1 2 1 4\n1 -2\n", encoding="utf-8")
        with pytest.raises(NegativeWeight):
            load_counts(path)
