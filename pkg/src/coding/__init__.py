"""
Coding package for LDSC.

Codebook construction, encoder/decoder and the codeword container.
"""

from src.coding.types import CodeParams, SparseSeq, Codeword, ProbeTrace, OUTSIDE
from src.coding.levels import level_size, min_level
from src.coding.codebook import LevelPlan, Codebook, build_level, get_codebook, probe_plan
from src.coding.codec import level_accepts, encode, decode_bit, decode_full
from src.coding.container import ContainerHeader, serialize_codeword, parse_codeword

__all__ = [
    'CodeParams',
    'SparseSeq',
    'Codeword',
    'ProbeTrace',
    'OUTSIDE',
    'level_size',
    'min_level',
    'LevelPlan',
    'Codebook',
    'build_level',
    'get_codebook',
    'probe_plan',
    'level_accepts',
    'encode',
    'decode_bit',
    'decode_full',
    'ContainerHeader',
    'serialize_codeword',
    'parse_codeword',
]
