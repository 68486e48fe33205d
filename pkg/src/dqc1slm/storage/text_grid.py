"""
Text Grid Storage

Shared reader/writer for the simulator's text artefacts. Every file starts
with a header line `<MAGIC> <fields...>` followed by one line per grid row of
space-separated numbers. UTF-8, LF line endings; lines starting with `#` and
blank lines are ignored.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from ..exceptions import MalformedFile

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


@dataclass
class TextGrid:
    """Parsed artefact: header fields after the magic word and the raw rows"""

    path: Path
    header: List[str]
    rows: List[List[str]]

    def as_array(self, rows: int, columns: int, dtype=np.float64) -> np.ndarray:
        """
        Convert the payload to a (rows, columns) array

        Raises:
            MalformedFile: on a row/column count mismatch or unparsable number
        """
        if len(self.rows) != rows:
            raise MalformedFile(f"{self.path}: header declares {rows} rows, payload has {len(self.rows)}")
        for index, row in enumerate(self.rows):
            if len(row) != columns:
                raise MalformedFile(
                    f"{self.path}: row {index} has {len(row)} values, header declares {columns}"
                )
        try:
            return np.array(self.rows, dtype=dtype).reshape(rows, columns)
        except ValueError as e:
            raise MalformedFile(f"{self.path}: unparsable value ({e})") from e


def read_text_grid(path: PathLike, magic: str) -> TextGrid:
    """
    Read a text grid artefact

    Args:
        path: File to read
        magic: Expected first token of the header line

    Returns:
        TextGrid with header fields and payload rows

    Raises:
        OSError: if the file cannot be read
        MalformedFile: if the header is missing or carries the wrong magic word
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as handle:
        lines = [line.strip() for line in handle]

    content = [line for line in lines if line and not line.startswith("#")]
    if not content:
        raise MalformedFile(f"{path}: empty file")

    header = content[0].split()
    if header[0] != magic:
        raise MalformedFile(f"{path}: expected {magic} header, found {header[0]!r}")

    rows = [line.split() for line in content[1:]]
    logger.debug(f"Read {magic} header {header[1:]} and {len(rows)} rows from {path}")
    return TextGrid(path=path, header=header[1:], rows=rows)


def write_text_grid(path: PathLike, header: Sequence[object], values: np.ndarray, fmt: str) -> Path:
    """
    Write a 2-D grid under a header line

    Args:
        path: Destination file
        header: Header tokens, magic word first
        values: 2-D array written one row per line
        fmt: printf-style format per value ('%.17g' round-trips float64)
    """
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(" ".join(str(token) for token in header) + "\n")
        np.savetxt(handle, np.atleast_2d(values), fmt=fmt, delimiter=" ", newline="\n")
    logger.debug(f"Wrote {header[0]} grid {np.shape(values)} to {path}")
    return path


def parse_int_field(path: Path, value: str, name: str) -> int:
    """Header integer field or MalformedFile"""
    try:
        parsed = int(value)
    except ValueError as e:
        raise MalformedFile(f"{path}: header field {name} is not an integer: {value!r}") from e
    if parsed < 1:
        raise MalformedFile(f"{path}: header field {name} must be positive, got {parsed}")
    return parsed
