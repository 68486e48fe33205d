"""
DQC1 SLM Domain Factories

Factory classes for standard panels and the reference linear-ramp
configurations with their reference normalized traces.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

from ..config.simulation_config_manager import get_simulation_config
from .domain_models_core import CellSpec, PanelDims


@dataclass(frozen=True)
class RampSpec:
    """A linear ramp along y and the normalized trace reported for it"""

    label: str
    phi_start: float
    phi_end: float
    reference_re: float  # flat beam, no dephasing
    reference_im: float
    reference_delta_re: float  # reported experimental uncertainty
    reference_delta_im: float


class PanelFactory:
    """Factory for panel dimensions with standard configurations"""

    @staticmethod
    def create_full_hd_panel() -> PanelDims:
        """1920 x 1080 phase-only modulator"""
        return PanelDims(width=1920, height=1080)

    @staticmethod
    def create_default_panel() -> PanelDims:
        """Panel from the simulation configuration"""
        panel = get_simulation_config().panel
        return PanelDims(width=panel.width, height=panel.height)


class CellFactory:
    """Factory for oracle cell sizes"""

    @staticmethod
    def create_sweep_cells(sizes: Optional[List[int]] = None) -> List[CellSpec]:
        """Square cells of the resolution sweep (1x1, 5x5, 10x10 by default)"""
        if sizes is None:
            sizes = get_simulation_config().oracle.sweep_cell_sizes
        return [CellSpec.square(size) for size in sizes]

    @staticmethod
    def create_beam_cell() -> CellSpec:
        """Detection cell used when scanning the beam profile"""
        size = get_simulation_config().panel.beam_cell_size
        return CellSpec.square(size)


class RampFactory:
    """Factory for the four benchmark ramps"""

    @staticmethod
    def create_reference_ramps() -> List[RampSpec]:
        """Benchmark ramps with their reference flat-beam traces"""
        pi = math.pi
        return [
            RampSpec("(3pi/4, 5pi/4)", 3 * pi / 4, 5 * pi / 4, -0.903, 0.012, 0.005, 0.008),
            RampSpec("(pi, 2pi)", pi, 2 * pi, -0.004, -0.637, 0.008, 0.007),
            RampSpec("(pi/2, 3pi/2)", pi / 2, 3 * pi / 2, -0.644, -0.003, 0.006, 0.008),
            RampSpec("(pi/2, pi)", pi / 2, pi, -0.638, 0.639, 0.007, 0.007),
        ]
