"""
DQC1 SLM Domain Models

Core entities of the virtual modulator: the panel, the phase masks that
encode diagonal unitaries on it, and the beam that illuminates it.
Grids are numpy arrays of shape (height, width), row 0 at the top of the panel.
"""

import math
import re
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..exceptions import NegativeWeight, ValidationError

TWO_PI = 2.0 * math.pi
UNIT_SUM_TOLERANCE = 1e-12

_DIMS_PATTERN = re.compile(r"^\s*(\d+)\s*[xX×]\s*(\d+)\s*$")


def canonicalize_phases(values: np.ndarray) -> np.ndarray:
    """Reduce phases modulo 2*pi into [0, 2*pi)"""
    wrapped = np.mod(np.asarray(values, dtype=np.float64), TWO_PI)
    # np.mod can round tiny negatives up to exactly 2*pi
    wrapped[wrapped >= TWO_PI] = 0.0
    return wrapped


def _frozen_array(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=np.float64, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class PanelDims:
    """Pixel dimensions of the (virtual) SLM panel"""

    width: int  # N_x, pixels per row
    height: int  # N_y, rows

    def __post_init__(self):
        if int(self.width) < 1 or int(self.height) < 1:
            raise ValidationError(f"panel dimensions must be positive, got {self.width}x{self.height}")
        object.__setattr__(self, "width", int(self.width))
        object.__setattr__(self, "height", int(self.height))

    @classmethod
    def parse(cls, text: str) -> "PanelDims":
        """Parse '<width>x<height>', e.g. '1920x1080'"""
        match = _DIMS_PATTERN.match(text)
        if not match:
            raise ValidationError(f"dimensions must look like 1920x1080, got {text!r}")
        return cls(width=int(match.group(1)), height=int(match.group(2)))

    @property
    def shape(self) -> Tuple[int, int]:
        """numpy shape (rows, columns)"""
        return (self.height, self.width)

    @property
    def pixel_count(self) -> int:
        return self.width * self.height

    def __str__(self) -> str:
        return f"{self.width}x{self.height}"


@dataclass(frozen=True)
class CellSpec:
    """Rectangular block of pixels that share one phase"""

    cell_width: int
    cell_height: int

    def __post_init__(self):
        if int(self.cell_width) < 1 or int(self.cell_height) < 1:
            raise ValidationError(f"cell dimensions must be positive, got {self.cell_width}x{self.cell_height}")
        object.__setattr__(self, "cell_width", int(self.cell_width))
        object.__setattr__(self, "cell_height", int(self.cell_height))

    @classmethod
    def square(cls, size: int) -> "CellSpec":
        return cls(cell_width=size, cell_height=size)

    def grid_shape(self, dims: PanelDims) -> Tuple[int, int]:
        """Cells per (column, row) axis as numpy shape; trailing partial cells count"""
        return (
            -(-dims.height // self.cell_height),
            -(-dims.width // self.cell_width),
        )

    def cell_count(self, dims: PanelDims) -> int:
        rows, cols = self.grid_shape(dims)
        return rows * cols

    def tiles_exactly(self, dims: PanelDims) -> bool:
        """True when no partial cells are needed"""
        return dims.width % self.cell_width == 0 and dims.height % self.cell_height == 0

    def __str__(self) -> str:
        return f"{self.cell_width}x{self.cell_height}"


@dataclass(frozen=True, eq=False)
class PhaseMask:
    """
    Phase map programmed on the panel

    The diagonal of the encoded unitary U = sum exp(-i phi)|x,y><x,y|.
    Phases are canonicalized into [0, 2*pi) on construction and the array is
    read-only afterwards.
    """

    dims: PanelDims
    phases: np.ndarray
    levels: Optional[int] = None  # set when every phase is a multiple of 2*pi/levels

    def __post_init__(self):
        phases = np.asarray(self.phases, dtype=np.float64)
        if phases.size != self.dims.pixel_count:
            raise ValidationError(
                f"phase grid has {phases.size} values, panel {self.dims} needs {self.dims.pixel_count}"
            )
        phases = phases.reshape(self.dims.shape)
        if not np.all(np.isfinite(phases)):
            raise ValidationError("phase grid contains non-finite values")
        object.__setattr__(self, "phases", _frozen_array(canonicalize_phases(phases)))

    @property
    def pixel_count(self) -> int:
        return self.dims.pixel_count

    def conjugate(self) -> "PhaseMask":
        """Mask of the complex-conjugate unitary (every phase negated)"""
        return PhaseMask(dims=self.dims, phases=-self.phases, levels=self.levels)

    def shifted(self, delta: float) -> "PhaseMask":
        """Mask with a global phase delta added to every pixel"""
        return PhaseMask(dims=self.dims, phases=self.phases + delta)

    def equals(self, other: "PhaseMask") -> bool:
        """Bitwise equality of panel and phases"""
        return self.dims == other.dims and np.array_equal(self.phases, other.phases)

    def __repr__(self) -> str:
        levels = f", levels={self.levels}" if self.levels else ""
        return f"PhaseMask(dims={self.dims}{levels})"


@dataclass(frozen=True, eq=False)
class IntensityProfile:
    """
    Transverse beam intensity on the panel

    Weights c_ij are nonnegative and sum to one; use the beam_profile
    constructors, which normalize, rather than building this directly.
    """

    dims: PanelDims
    weights: np.ndarray

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=np.float64)
        if weights.size != self.dims.pixel_count:
            raise ValidationError(
                f"weight grid has {weights.size} values, panel {self.dims} needs {self.dims.pixel_count}"
            )
        weights = weights.reshape(self.dims.shape)
        if not np.all(np.isfinite(weights)):
            raise ValidationError("weight grid contains non-finite values")
        if np.any(weights < 0):
            raise NegativeWeight("intensity weights must be nonnegative")
        # deferred: dqc1_core imports this module
        from ..dqc1_core.summation import compensated_sum

        total = compensated_sum(weights)
        if abs(total - 1.0) > UNIT_SUM_TOLERANCE:
            raise ValidationError(f"intensity weights must sum to 1, got {total!r}")
        object.__setattr__(self, "weights", _frozen_array(weights))

    @property
    def is_uniform(self) -> bool:
        return bool(np.all(self.weights == self.weights.flat[0]))

    def __repr__(self) -> str:
        return f"IntensityProfile(dims={self.dims})"


@dataclass(frozen=True, eq=False)
class CountsGrid:
    """
    Coincidence counting rates measured on square detection cells

    counts has shape (cells_y, cells_x); each cell covers cell_size x cell_size
    pixels. Rates are nonnegative reals (counts/s).
    """

    cells_x: int
    cells_y: int
    cell_size: int
    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.cells_x < 1 or self.cells_y < 1 or self.cell_size < 1:
            raise ValidationError("counts grid needs at least one cell of positive size")
        counts = np.asarray(self.counts, dtype=np.float64)
        if counts.size != self.cells_x * self.cells_y:
            raise ValidationError(
                f"counts grid has {counts.size} values, expected {self.cells_x}x{self.cells_y}"
            )
        counts = counts.reshape(self.cells_y, self.cells_x)
        if not np.all(np.isfinite(counts)):
            raise ValidationError("counts grid contains non-finite values")
        if np.any(counts < 0):
            raise NegativeWeight("counts must be nonnegative")
        object.__setattr__(self, "counts", _frozen_array(counts))

    @property
    def covered_dims(self) -> PanelDims:
        """Panel area the cells cover"""
        return PanelDims(width=self.cells_x * self.cell_size, height=self.cells_y * self.cell_size)

    @property
    def has_signal(self) -> bool:
        return bool(np.any(self.counts > 0))

    def scaled(self, factor: float) -> "CountsGrid":
        return CountsGrid(self.cells_x, self.cells_y, self.cell_size, self.counts * factor)
