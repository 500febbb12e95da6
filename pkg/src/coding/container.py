"""
Bit-exact codeword container ("SLDC", format 1).

Layout (all integers little-endian):

    offset  size  field
    0       4     magic b"SLDC"
    4       1     format_version
    5       1     scheme_version
    6       8     n
    14      4     r
    18      4     d
    22      8     master_seed
    30      8     l (codeword length in bits)
    38      ceil(l/8)  payload

Codeword bit i (1-based) lives in payload byte (i-1)//8 at bit (i-1)%8,
least significant bit first. Pad bits are zero and the file ends right
after the payload.
"""

import struct
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from bitarray import bitarray

from src.coding.types import CodeParams, Codeword, default_k_max
from src.core import constants
from src.core.errors import (
    BadMagic,
    ContainerError,
    InvalidParameterError,
    NonzeroPadding,
    TrailingBytes,
    TruncatedPayload,
    UnsupportedVersion,
)
from src.utils.validation_utils import check_code_parameters

_HEADER = struct.Struct("<4sBBQIIQQ")
HEADER_SIZE = _HEADER.size


@dataclass(frozen=True)
class ContainerHeader:
    """Header fields echoed back by parse_codeword."""
    format_version: int
    scheme_version: int
    n: int
    r: int
    d: int
    master_seed: int
    length: int

    def to_params(self, k_max: Optional[int] = None) -> CodeParams:
        """
        CodeParams able to decode this codeword.

        Without an explicit k_max the default cap is widened to cover l.
        """
        if k_max is None:
            k_max = max(default_k_max(self.n, self.r, self.d), self.length)
        return CodeParams(self.n, self.r, self.d, self.master_seed, k_max, self.scheme_version)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'format_version': self.format_version,
            'scheme_version': self.scheme_version,
            'n': self.n,
            'r': self.r,
            'd': self.d,
            'master_seed': self.master_seed,
            'length': self.length,
        }


def payload_size(length: int) -> int:
    return (length + 7) // 8


def serialize_codeword(params: CodeParams, c: Codeword) -> bytes:
    """
    Container bytes for c under params.

    Examples:
        >>> serialize_codeword(handmade_params, Codeword(10, (2, 3, 4, 6, 7, 8)))[HEADER_SIZE:]
        b'\\xee\\x00'
    """
    header = _HEADER.pack(
        constants.CONTAINER_MAGIC,
        constants.FORMAT_VERSION,
        params.scheme_version,
        params.n,
        params.r,
        params.d,
        params.master_seed,
        c.length,
    )
    bits = bitarray(c.length, endian='little')
    bits.setall(0)
    for position in c.ones:
        bits[position - 1] = 1
    return header + bits.tobytes()


def parse_codeword(data: bytes) -> Tuple[ContainerHeader, Codeword]:
    """
    Inverse of serialize_codeword.

    Raises:
        BadMagic: First four bytes are not b"SLDC"
        UnsupportedVersion: Unknown format or scheme version
        TruncatedPayload: Header or payload shorter than announced
        NonzeroPadding: Pad bits after bit l are set
        TrailingBytes: Bytes after the payload
        ContainerError: Header fields outside their domain
    """
    data = bytes(data)
    if len(data) < 4 or data[:4] != constants.CONTAINER_MAGIC:
        raise BadMagic(f"Expected magic {constants.CONTAINER_MAGIC!r}, got {data[:4]!r}")
    if len(data) < HEADER_SIZE:
        raise TruncatedPayload(f"Header needs {HEADER_SIZE} bytes, got {len(data)}")

    _, format_version, scheme_version, n, r, d, seed, length = _HEADER.unpack_from(data)
    if format_version != constants.FORMAT_VERSION:
        raise UnsupportedVersion(f"Container format {format_version} (supported: {constants.FORMAT_VERSION})")
    if scheme_version not in constants.SUPPORTED_SCHEME_VERSIONS:
        raise UnsupportedVersion(f"Scheme version {scheme_version} not supported")
    try:
        check_code_parameters(n, r, d)
    except InvalidParameterError as e:
        raise ContainerError(f"Invalid header parameters: {e}") from e
    if length < 1:
        raise ContainerError("Codeword length must be at least 1")

    expected = payload_size(length)
    payload = data[HEADER_SIZE:]
    if len(payload) < expected:
        raise TruncatedPayload(f"Payload has {len(payload)} bytes, expected {expected}")
    if len(payload) > expected:
        raise TrailingBytes(f"{len(payload) - expected} bytes after the payload")

    bits = bitarray(endian='little')
    bits.frombytes(payload)
    if bits[length:].any():
        raise NonzeroPadding(f"Pad bits after bit {length} are not zero")

    ones = tuple(i + 1 for i, bit in enumerate(bits[:length]) if bit)
    header = ContainerHeader(format_version, scheme_version, n, r, d, seed, length)
    return header, Codeword(length, ones)


__all__ = ['ContainerHeader', 'serialize_codeword', 'parse_codeword', 'payload_size', 'HEADER_SIZE']
