"""
DQC1 SLM Error Hierarchy

Every error raised by the simulator derives from Dqc1SlmError and carries the
process exit code the CLI reports for it:

- 1: file format / other I/O
- 3: dimension or tiling mismatch
- 4: domain validation failure
"""


class Dqc1SlmError(Exception):
    """Base class for all simulator errors"""

    exit_code: int = 4


# Dimension errors (exit 3)


class DimensionError(Dqc1SlmError, ValueError):
    """Grids that must line up do not"""

    exit_code = 3


class DimsMismatch(DimensionError):
    """Mask and profile panels differ"""


class TilingMismatch(DimensionError):
    """Counts grid cells do not tile the panel exactly"""


# Validation errors (exit 4)


class ValidationError(Dqc1SlmError, ValueError):
    """An input violates a domain precondition"""

    exit_code = 4


class OddHeight(ValidationError):
    """Half-split masks need an even number of rows"""


class OddCellCount(ValidationError):
    """Balanced masks need an even number of cells"""


class BadLevels(ValidationError):
    """Phase quantization needs at least two levels"""


class BadWaist(ValidationError):
    """Gaussian waist must be positive and finite"""


class BadDephasing(ValidationError):
    """Dephasing parameter outside [0, 1/2]"""


class AllZeroCounts(ValidationError):
    """A counts grid with no positive cell cannot be normalized"""


class NegativeWeight(ValidationError):
    """Intensity weights and counts must be nonnegative"""


class NonBooleanMask(ValidationError):
    """Oracle masks may only carry phases 0 and pi"""


class BadThreshold(ValidationError):
    """Decision threshold must lie strictly between 0 and 1"""


class BadPhotonBudget(ValidationError):
    """Photon budget per basis must be at least one"""


class InvalidDensityMatrix(ValidationError):
    """Matrix is not Hermitian, unit-trace and positive semidefinite"""


class ConfigurationError(ValidationError):
    """Simulation configuration file is inconsistent"""


# File format errors (exit 1)


class FileFormatError(Dqc1SlmError):
    """A mask, profile or counts file could not be parsed"""

    exit_code = 1


class MalformedFile(FileFormatError, ValueError):
    """Header or payload of a text artefact is malformed"""
