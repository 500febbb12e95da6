"""
Exhaustive correctness sweep.

Single Responsibility: Enumerate every r-subset of [n] and check the code on it
- every bit of every word decodes correctly
- the decoder reads exactly d positions for j in S_l and none otherwise
- the positions read are the ones probe_plan fixes before any codeword access
- distinct words get distinct codewords
- the chosen level is the smallest accepting one
- optionally, the membership protocol answers every (S, i) correctly

Usage:
    from src.execution.exhaustive import exhaustive_verify

    report = exhaustive_verify(CodeParams(n=12, r=2, d=3))
    report.errors, report.max_probes, report.injective    # 0, 3, True
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Set, Tuple

from src.coding.codebook import Codebook, get_codebook
from src.coding.codec import decode_bit, encode, level_accepts
from src.coding.types import OUTSIDE, CodeParams, Codeword, SparseSeq
from src.combinatorics.binomial import binom_exact
from src.core.constants import EXHAUSTIVE_GUARD
from src.core.errors import GuardViolation
from src.core.results import ExecutionMetrics
from src.utils.error_utils import error_context
from src.utils.log_utils import log_operation_complete, log_operation_start, log_validation_result
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Failure messages kept in a report
MAX_RECORDED_FAILURES = 20


@dataclass
class VerificationReport:
    """
    Outcome of one exhaustive sweep.

    Attributes:
        params: Swept code parameters
        sequences: Source words enumerated (C(n, r))
        queries: Bits decoded (sequences * n)
        errors: Bits decoded wrongly
        max_probes: Largest number of positions read for one bit
        probe_budget_respected: Every query read exactly d positions inside S_l and 0 outside
        non_adaptive: Every query read exactly the positions probe_plan announced
        injective: No two words share a codeword
        min_level_checked: Every word sits at its smallest accepting level
        protocol_checked: Membership protocol was run on every (S, i)
        protocol_errors: Wrong protocol answers
        failures: First few failure descriptions
    """
    params: CodeParams
    sequences: int = 0
    queries: int = 0
    errors: int = 0
    max_probes: int = 0
    probe_budget_respected: bool = True
    non_adaptive: bool = True
    injective: bool = True
    min_level_checked: bool = True
    protocol_checked: bool = False
    protocol_errors: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.errors == 0 and self.probe_budget_respected and self.non_adaptive
                and self.injective and self.min_level_checked and self.protocol_errors == 0)

    def record(self, message: str) -> None:
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.params.to_dict(),
            'sequences': self.sequences,
            'queries': self.queries,
            'errors': self.errors,
            'max_probes': self.max_probes,
            'probe_budget_respected': self.probe_budget_respected,
            'non_adaptive': self.non_adaptive,
            'injective': self.injective,
            'min_level_checked': self.min_level_checked,
            'protocol_checked': self.protocol_checked,
            'protocol_errors': self.protocol_errors,
            'passed': self.passed,
            'failures': list(self.failures),
        }


def check_guard(params: CodeParams) -> int:
    """
    Number of words to enumerate.

    Raises:
        GuardViolation: If C(n, r) exceeds the exhaustive guard
    """
    count = binom_exact(params.n, params.r)
    if count > EXHAUSTIVE_GUARD:
        raise GuardViolation(
            f"C({params.n},{params.r}) = {count} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}"
        )
    return count


class ExhaustiveVerifier:
    """
    Runs the sweep for one codebook.

    Responsibilities:
    - Encode every word and check minimality and injectivity
    - Decode every bit and check the value, probe count and probe positions

    Does NOT:
    - Sample (every word is enumerated)
    - Decide on guard limits for the caller beyond EXHAUSTIVE_GUARD
    """

    def __init__(self, params: CodeParams, codebook: Optional[Codebook] = None):
        self.params = params
        self.codebook = codebook or get_codebook(params)

    def _is_minimal(self, support: Tuple[int, ...], length: int) -> bool:
        for k in range(self.params.k_min, length):
            if not self.codebook.level_index_set(k).issuperset(support):
                continue
            if level_accepts(self.codebook.level(k), support):
                return False
        return True

    def _check_queries(self, x: SparseSeq, c: Codeword, report: VerificationReport) -> None:
        d = self.params.d
        for j in range(1, self.params.n + 1):
            plan = self.codebook.probe_plan(j, c.length)
            bit, trace = decode_bit(self.params, c, j, self.codebook)
            report.queries += 1
            report.max_probes = max(report.max_probes, trace.probes)

            if bit != x.bit(j):
                report.errors += 1
                report.record(f"support {list(x.support)}: bit {j} decoded as {bit}")

            expected = () if plan is OUTSIDE else tuple(plan)
            if trace.positions != expected:
                report.non_adaptive = False
                report.record(f"support {list(x.support)}: query {j} read {trace.positions}, plan {expected}")

            if trace.probes != (0 if plan is OUTSIDE else d):
                report.probe_budget_respected = False
                report.record(f"support {list(x.support)}: query {j} used {trace.probes} probes")

    def _check_protocol(self, x: SparseSeq, report: VerificationReport) -> None:
        # local import: protocol builds on the execution statistics
        from src.protocol.speedlimit import run_protocol

        for i in range(1, self.params.n + 1):
            transcript = run_protocol(self.params, x.support, i, self.codebook)
            if transcript.answer != x.bit(i):
                report.protocol_errors += 1
                report.record(f"support {list(x.support)}: protocol answered {transcript.answer} for i={i}")

    def verify(self, check_protocol: bool = False) -> VerificationReport:
        """
        Sweep every r-subset of [n].

        Raises:
            GuardViolation: If C(n, r) exceeds the exhaustive guard
            SearchCapExceeded: If some word cannot be encoded
        """
        count = check_guard(self.params)
        log_operation_start(logger, 'Exhaustive sweep', n=self.params.n, r=self.params.r,
                            d=self.params.d, seed=self.params.master_seed, sequences=count)
        metrics = ExecutionMetrics.start('exhaustive_verify')
        report = VerificationReport(self.params, protocol_checked=check_protocol)
        seen: Set[Codeword] = set()

        with error_context('Exhaustive sweep', logger=logger):
            for support in combinations(range(1, self.params.n + 1), self.params.r):
                x = SparseSeq(self.params.n, support)
                c = encode(self.params, x, self.codebook)
                report.sequences += 1

                if c in seen:
                    report.injective = False
                    report.record(f"support {list(support)}: codeword {c.to_dict()} already used")
                seen.add(c)

                if not self._is_minimal(support, c.length):
                    report.min_level_checked = False
                    report.record(f"support {list(support)}: a level below {c.length} accepts")

                self._check_queries(x, c, report)
                if check_protocol:
                    self._check_protocol(x, report)

        metrics.complete(items_processed=report.sequences)
        log_validation_result(logger, report.passed, 'Exhaustive sweep', errors=report.failures)
        log_operation_complete(logger, 'Exhaustive sweep', status='success' if report.passed else 'error',
                               sequences=report.sequences, errors=report.errors,
                               max_probes=report.max_probes, seconds=round(metrics.duration_seconds, 2))
        return report


def exhaustive_verify(params: CodeParams, codebook: Optional[Codebook] = None,
                      check_protocol: bool = False) -> VerificationReport:
    """Enumerate all of C(n, r) and verify the code; see ExhaustiveVerifier."""
    return ExhaustiveVerifier(params, codebook).verify(check_protocol)


__all__ = ['VerificationReport', 'ExhaustiveVerifier', 'check_guard', 'exhaustive_verify']
