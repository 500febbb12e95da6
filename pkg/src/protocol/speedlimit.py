"""
Two-party membership protocol under a speed limit.

Bob holds an r-subset S of [n], Alice holds an index i and wants
f(i, S) = [i in S]. Bob encodes the indicator word of S and announces the
codeword length l using z = bit_length(l) = ceil(log2(l + 1)) bits; z is
then the per-message limit. Alice, knowing only (params, i, l), either
answers 0 at once (i outside S_l) or asks for the d positions T_{i,l} one
per round, each in z bits, and Bob replies with one codeword bit per round.
Alice answers the AND of the replies.

Messages travel through an in-process queue; no network is involved.

Usage:
    from src.protocol.speedlimit import run_protocol

    transcript = run_protocol(params, S=(2, 6), i=2)
    transcript.answer, len(transcript.rounds), transcript.z
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Deque, Dict, List, Optional, Sequence, Tuple

from src.bounds.achievability import upper_bound_nonadaptive
from src.coding.codebook import Codebook, get_codebook
from src.coding.codec import encode
from src.coding.types import OUTSIDE, CodeParams, Codeword, SparseSeq
from src.combinatorics.prf import Role, SampleKey
from src.combinatorics.sampling import UniformDraws, sample_subset
from src.core.errors import InvalidParameterError, ProtocolError
from src.core.results import ExecutionMetrics
from src.execution.statistics import IntegerAccumulator
from src.utils.error_utils import error_context
from src.utils.log_utils import log_operation_complete, log_operation_start
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Trial sub-streams: level 0 draws S, level 1 draws the query i
QUERY_STREAM = 1


class Party(str, Enum):
    ALICE = 'alice'
    BOB = 'bob'


@dataclass(frozen=True)
class Message:
    sender: Party
    value: int
    bits: int


@dataclass
class Transcript:
    """
    Everything exchanged in one protocol run.

    Attributes:
        z: Speed limit (bits per Alice message), bit width of l
        initial_message: l as announced by Bob
        rounds: (position asked by Alice, bit replied by Bob)
        answer: Alice's output
        alice_bits_sent: z per round
        bob_bits_sent: z for the announcement plus 1 per round
    """
    z: int
    initial_message: int
    rounds: List[Tuple[int, int]] = field(default_factory=list)
    answer: Optional[int] = None
    alice_bits_sent: int = 0
    bob_bits_sent: int = 0

    @property
    def pow2z(self) -> int:
        return 1 << self.z

    def to_dict(self) -> Dict[str, Any]:
        return {
            'z': self.z,
            'initial_message': self.initial_message,
            'rounds': [list(r) for r in self.rounds],
            'answer': self.answer,
            'alice_bits_sent': self.alice_bits_sent,
            'bob_bits_sent': self.bob_bits_sent,
        }

    def to_text(self) -> str:
        """Structured text dump for debugging."""
        lines = [
            f"speed limit z = {self.z} bits",
            f"bob -> alice: length {self.initial_message} ({self.z} bits)",
        ]
        for number, (position, bit) in enumerate(self.rounds, start=1):
            lines.append(f"round {number}: alice -> bob: position {position} ({self.z} bits); bob -> alice: {bit}")
        lines.append(f"answer = {self.answer}")
        lines.append(f"bits sent: alice {self.alice_bits_sent}, bob {self.bob_bits_sent}")
        return "\n".join(lines)


class Bob:
    """Server side: holds S and its codeword, answers bit requests."""

    def __init__(self, params: CodeParams, S: Sequence[int], codebook: Codebook):
        self.codeword: Codeword = encode(params, SparseSeq.from_support(params.n, S), codebook)
        self.z = self.codeword.length.bit_length()

    def announce(self) -> Message:
        return Message(Party.BOB, self.codeword.length, self.z)

    def reply(self, request: Message) -> Message:
        if not 1 <= request.value <= self.codeword.length:
            raise ProtocolError(f"Requested position {request.value} outside [1..{self.codeword.length}]")
        return Message(Party.BOB, self.codeword.bit(request.value), 1)


class Alice:
    """Client side: holds i, knows the public codebook, never sees S."""

    def __init__(self, params: CodeParams, i: int, codebook: Codebook):
        params.check_query(i)
        self.i = i
        self.codebook = codebook
        self.pending: Deque[int] = deque()
        self.received: List[int] = []
        self.z: Optional[int] = None

    def receive_announcement(self, message: Message) -> None:
        self.z = message.bits
        plan = self.codebook.probe_plan(self.i, message.value)
        if plan is not OUTSIDE:
            self.pending.extend(plan)

    def next_request(self) -> Optional[Message]:
        if not self.pending:
            return None
        return Message(Party.ALICE, self.pending.popleft(), self.z)

    def receive_reply(self, message: Message) -> None:
        self.received.append(message.value)

    def answer(self) -> int:
        return int(all(self.received)) if self.received else 0


def run_protocol(params: CodeParams, S: Sequence[int], i: int,
                 codebook: Optional[Codebook] = None) -> Transcript:
    """
    Run one membership query.

    Raises:
        QueryOutOfRangeError: If i is not in [1..n]
        SearchCapExceeded: Propagated from encoding S
        ProtocolError: If a transcript invariant breaks
    """
    codebook = codebook or get_codebook(params)
    bob = Bob(params, S, codebook)
    alice = Alice(params, i, codebook)
    queue: Deque[Message] = deque([bob.announce()])

    transcript: Optional[Transcript] = None
    while queue:
        message = queue.popleft()
        if message.sender is Party.BOB and transcript is None:
            transcript = Transcript(z=message.bits, initial_message=message.value,
                                    bob_bits_sent=message.bits)
            alice.receive_announcement(message)
        elif message.sender is Party.BOB:
            alice.receive_reply(message)
            position = transcript.rounds[-1][0]
            transcript.rounds[-1] = (position, message.value)
            transcript.bob_bits_sent += message.bits
        else:
            if message.value >= 1 << transcript.z:
                raise ProtocolError(f"Position {message.value} does not fit in z={transcript.z} bits")
            transcript.rounds.append((message.value, -1))
            transcript.alice_bits_sent += message.bits
            queue.append(bob.reply(message))
            continue

        request = alice.next_request()
        if request is not None:
            queue.append(request)

    transcript.answer = alice.answer()
    if len(transcript.rounds) > params.d:
        raise ProtocolError(f"{len(transcript.rounds)} rounds exceed d={params.d}")
    logger.debug(f"Protocol run i={i}: answer={transcript.answer}, rounds={len(transcript.rounds)}, z={transcript.z}")
    return transcript


@dataclass(frozen=True)
class ProtocolCostReport:
    """
    Monte Carlo cost of the protocol.

    Attributes:
        trials: Protocol runs
        mean_pow2z: Sample mean of 2^z
        ci95_halfwidth: Normal-approximation half width for mean_pow2z
        mean_length: Sample mean of the codeword length l
        length_ci95_halfwidth: Half width for mean_length
        bound: Closed-form upper bound on E[l]
        pow2z_bound: 2 * bound + 2, the matching bound on E[2^z]
        within_bound: mean_pow2z - ci <= pow2z_bound
        length_within_bound: mean_length - ci <= bound
        all_correct: Every answer equalled [i in S]
        mean_rounds: Average number of probe rounds
    """
    trials: int
    mean_pow2z: float
    ci95_halfwidth: float
    mean_length: float
    length_ci95_halfwidth: float
    bound: float
    pow2z_bound: float
    within_bound: bool
    length_within_bound: bool
    all_correct: bool
    mean_rounds: float

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)


def trial_query(params: CodeParams, master_seed: int, t: int) -> int:
    """Query index of trial t."""
    key = SampleKey(master_seed, QUERY_STREAM, Role.TRIAL, t)
    return UniformDraws(key).uniform(params.n)


def protocol_cost_experiment(params: CodeParams, trials: int,
                             master_seed: Optional[int] = None,
                             codebook: Optional[Codebook] = None) -> ProtocolCostReport:
    """
    Run the protocol on trial-keyed uniform (S, i) and summarise its cost.

    Raises:
        InvalidParameterError: If trials < 1
        SearchCapExceeded: Propagated from encoding
    """
    if trials < 1:
        raise InvalidParameterError(f"trials must be >= 1, got {trials}")
    seed = params.master_seed if master_seed is None else master_seed
    codebook = codebook or get_codebook(params)

    log_operation_start(logger, 'SpeedLimit experiment', n=params.n, r=params.r, d=params.d, trials=trials)
    metrics = ExecutionMetrics.start('protocol_cost_experiment')
    pow2z = IntegerAccumulator()
    lengths = IntegerAccumulator()
    rounds = 0
    all_correct = True

    with error_context('SpeedLimit experiment', logger=logger):
        for t in range(trials):
            S = sample_subset(params.n, params.r, SampleKey.trial(seed, t))
            i = trial_query(params, seed, t)
            transcript = run_protocol(params, S, i, codebook)
            pow2z.add(transcript.pow2z)
            lengths.add(transcript.initial_message)
            rounds += len(transcript.rounds)
            if transcript.answer != int(i in S):
                all_correct = False
                logger.error(f"Trial {t}: wrong answer {transcript.answer} for i={i}, S={list(S)}")

    bound = upper_bound_nonadaptive(params.n, params.r, params.d)
    mean_pow2z = float(pow2z.mean)
    mean_length = float(lengths.mean)
    ci = pow2z.ci_halfwidth()
    length_ci = lengths.ci_halfwidth()
    report = ProtocolCostReport(
        trials=trials,
        mean_pow2z=mean_pow2z,
        ci95_halfwidth=ci,
        mean_length=mean_length,
        length_ci95_halfwidth=length_ci,
        bound=bound,
        pow2z_bound=2 * bound + 2,
        within_bound=mean_pow2z - ci <= 2 * bound + 2,
        length_within_bound=mean_length - length_ci <= bound,
        all_correct=all_correct,
        mean_rounds=float(Fraction(rounds, trials)),
    )
    metrics.complete(items_processed=trials)
    log_operation_complete(logger, 'SpeedLimit experiment', mean_pow2z=round(mean_pow2z, 3),
                           bound=round(bound, 3), seconds=round(metrics.duration_seconds, 2))
    return report


__all__ = [
    'Party',
    'Message',
    'Transcript',
    'Bob',
    'Alice',
    'run_protocol',
    'ProtocolCostReport',
    'trial_query',
    'protocol_cost_experiment',
]
