"""Turn raw corpus files into request sequences and initial lists, plus
seeded synthetic workloads for property testing.

Preprocessing strips exactly spaces, carriage returns and line feeds by
default; tabs and all other bytes survive. Every remaining byte becomes one
request, so the returned ``bytes`` object is itself a request sequence.
"""

import math
import random
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .listcore import ListLabError, ListState, RequestSequence, Symbol

DEFAULT_STRIP_BYTES = frozenset((0x20, 0x0D, 0x0A))


class EmptyAfterPreprocessing(ListLabError):
    """Nothing was left of the input once the stripped bytes were removed."""


class EmptySequence(ListLabError):
    pass


class EmptyAlphabet(ListLabError):
    pass


@dataclass
class CorpusText:
    data: bytes
    source_name: str = ""


class ListOrderPolicy(Enum):
    """Initial ordering of the derived list: order of first appearance in
    the sequence, or ascending byte value."""

    FIRST_OCCURRENCE = "first-occurrence"
    BYTE_VALUE = "byte-value"


def load_file(path: str | Path) -> CorpusText:
    path = Path(path)
    return CorpusText(path.read_bytes(), path.name)


def preprocess(
    text: CorpusText | bytes,
    strip: Iterable[int] = DEFAULT_STRIP_BYTES,
) -> bytes:
    """Drop the stripped bytes, keeping everything else in order."""
    if isinstance(text, CorpusText):
        data, name = text.data, text.source_name
    else:
        data, name = bytes(text), "input"
    remaining = data.translate(None, bytes(sorted(set(strip))))
    if not remaining:
        raise EmptyAfterPreprocessing(f"{name or 'input'}: nothing left after stripping")
    return remaining


def derive_list(
    sequence: RequestSequence,
    policy: ListOrderPolicy = ListOrderPolicy.FIRST_OCCURRENCE,
) -> ListState:
    """List of the sequence's distinct symbols, all counters zero."""
    if len(sequence) == 0:
        raise EmptySequence("cannot derive a list from an empty sequence")
    if policy is ListOrderPolicy.FIRST_OCCURRENCE:
        distinct = list(dict.fromkeys(sequence))
    else:
        distinct = sorted(set(sequence))
    return ListState.from_order(distinct)


@dataclass(frozen=True)
class Uniform:
    pass


@dataclass(frozen=True)
class Zipf:
    """Rank-weighted sampling: the r-th alphabet symbol gets weight
    1 / (r + 1) ** exponent."""

    exponent: float = 1.0


@dataclass(frozen=True)
class RunLengths:
    """Bursty workload: symbols are drawn uniformly, each repeated for a
    geometrically distributed run with the given mean. Exercises the
    batched-lookahead branch of VFC."""

    mean_run: float = 4.0


Distribution = Uniform | Zipf | RunLengths


def generate_sequence(
    alphabet: Sequence[Symbol],
    length: int,
    distribution: Distribution = Uniform(),
    seed: int = 0,
) -> list[Symbol]:
    """Seeded synthetic request sequence over ``alphabet``."""
    symbols = list(alphabet)
    if not symbols:
        raise EmptyAlphabet("alphabet must contain at least one symbol")
    if len(set(symbols)) != len(symbols):
        raise ValueError("alphabet symbols must be distinct")
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = random.Random(seed)

    if isinstance(distribution, Uniform):
        return rng.choices(symbols, k=length)

    if isinstance(distribution, Zipf):
        s = distribution.exponent
        if s <= 0:
            raise ValueError("Zipf exponent must be positive")
        weights = [(r + 1) ** -s for r in range(len(symbols))]
        return rng.choices(symbols, weights=weights, k=length)

    mean = distribution.mean_run
    if mean < 1:
        raise ValueError("mean run length must be at least 1")
    p = 1.0 / mean
    out: list[Symbol] = []
    while len(out) < length:
        sym = symbols[rng.randrange(len(symbols))]
        if p >= 1.0:
            run = 1
        else:
            # geometric via inversion; always >= 1
            run = int(math.log(1.0 - rng.random()) / math.log(1.0 - p)) + 1
        out.extend([sym] * min(run, length - len(out)))
    return out
