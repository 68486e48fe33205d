"""
Vose alias table

O(K) construction, O(1) draws from a discrete distribution over K outcomes;
used to pick the pixel each simulated photon lands on.
"""

import logging
import threading
import weakref

import numpy as np

from ..data_models.domain_models_core import IntensityProfile
from ..exceptions import ValidationError

logger = logging.getLogger(__name__)


class AliasTable:
    """Walker/Vose alias table over flat outcome indices 0 .. K-1"""

    def __init__(self, probabilities: np.ndarray):
        weights = np.asarray(probabilities, dtype=np.float64).ravel()
        total = weights.sum()
        if weights.size == 0 or not total > 0 or np.any(weights < 0):
            raise ValidationError("alias table needs nonnegative weights with positive sum")

        size = weights.size
        scaled_array = weights * (size / total)
        small = np.flatnonzero(scaled_array < 1.0).tolist()
        large = np.flatnonzero(scaled_array >= 1.0).tolist()
        scaled = scaled_array.tolist()
        accept = np.ones(size)
        alias = np.arange(size)

        while small and large:
            lesser = small.pop()
            greater = large.pop()
            accept[lesser] = scaled[lesser]
            alias[lesser] = greater
            scaled[greater] = (scaled[greater] + scaled[lesser]) - 1.0
            if scaled[greater] < 1.0:
                small.append(greater)
            else:
                large.append(greater)

        # leftovers are 1 up to rounding
        self.accept = accept
        self.alias = alias
        self.size = size

    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Draw `count` outcome indices"""
        columns = rng.integers(0, self.size, size=count)
        coins = rng.random(count)
        return np.where(coins < self.accept[columns], columns, self.alias[columns])

    def probabilities(self) -> np.ndarray:
        """Reconstructed outcome probabilities (for checks)"""
        mass = self.accept.copy()
        np.add.at(mass, self.alias, 1.0 - self.accept)
        return mass / self.size


_TABLES: "weakref.WeakKeyDictionary[IntensityProfile, AliasTable]" = weakref.WeakKeyDictionary()
_TABLES_LOCK = threading.Lock()


def alias_table_for(profile: IntensityProfile) -> AliasTable:
    """
    Alias table over the profile's pixels, built once per profile instance

    Tables are held only while their profile is alive; a full-HD table costs
    about 48 MB.
    """
    with _TABLES_LOCK:
        table = _TABLES.get(profile)
        if table is None:
            logger.debug(f"Building alias table for {profile}")
            table = AliasTable(profile.weights)
            _TABLES[profile] = table
        return table
