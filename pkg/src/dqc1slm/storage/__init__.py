"""
Storage Package

Plain-text grid artefacts (PMASK1 masks, IPROF1 profiles, CGRID1 counts).
"""

from .text_grid import TextGrid, read_text_grid, write_text_grid
