"""
Protocol package for LDSC.

Two-party membership protocol built on the local decoder.
"""

from src.protocol.speedlimit import (
    Transcript,
    ProtocolCostReport,
    run_protocol,
    protocol_cost_experiment,
)

__all__ = [
    'Transcript',
    'ProtocolCostReport',
    'run_protocol',
    'protocol_cost_experiment',
]
