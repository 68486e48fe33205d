"""Beam intensity profiles and counts-grid ingestion"""

from .profile_io import load_counts, load_profile, save_counts, save_profile
from .profiles import cell_masses, flat, from_counts, gaussian, make_gaussian_counts, normalize_weights

__all__ = [
    "cell_masses",
    "flat",
    "from_counts",
    "gaussian",
    "load_counts",
    "load_profile",
    "make_gaussian_counts",
    "normalize_weights",
    "save_counts",
    "save_profile",
]
