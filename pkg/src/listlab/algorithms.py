"""The four list-accessing engines: MTF, TRANS, FC, and VFC.

MTF moves the requested element to the front after each access; TRANS swaps
it with its immediate predecessor. FC increments the requested element's
counter and then reinserts the element ahead of the first prefix position it
now beats: scanning positions 1..j-1 while the accessed element sits at j,
the element moves (by free exchange) to the first position i where its
counter f satisfies f > f_i, or f == f_i with f strictly greater than the
counter at i+1. The tie rule can consult the accessed element's own updated
counter (when i+1 == j), which blocks the move and keeps equal-counter
neighbors stable.

VFC serves runs of repeated requests in one batched step. When the current
request's counter f is at least the head's counter, it behaves exactly like
FC. Otherwise it computes a window budget ``|f - f_head| + 1`` and peeks at
the budgeted-minus-one requests after the current one. If the batch trigger
fires (see :class:`VfcPolicy`), the whole block of ``B = min(budget,
requests remaining)`` requests is consumed at once: the counter grows by B,
the charge is the access cost at the pre-access position plus one unit per
extra consumed request, and a single reorganization follows. Requests inside
a consumed block are never served individually; under the LITERAL policy a
block may swallow requests for other symbols.

Step functions are pure: they return fresh states and touch no global state.
``run_algorithm`` drives an engine over a whole sequence and reports the
per-step trace. The cached head counter is recomputed from the actual head
after every step rather than trusted from the previous one.
"""

from dataclasses import dataclass
from enum import Enum

from .listcore import (
    CostModel,
    ListLabError,
    ListState,
    RequestSequence,
    StepRecord,
    Symbol,
    SymbolNotInList,
    access_cost,
)


class CursorExhausted(ListLabError):
    """A step was asked for after the request sequence ran out."""


class AlgorithmKind(Enum):
    MTF = "mtf"
    TRANS = "trans"
    FC = "fc"
    VFC = "vfc"


class VfcPolicy(Enum):
    """How VFC's batch trigger reads the lookahead window.

    LITERAL batches when the current symbol occurs anywhere in the window,
    so a consumed block may swallow requests for other symbols.
    STRICT_HOMOGENEOUS batches only when the window is non-empty and every
    request in it repeats the current symbol. The two policies coincide
    whenever every window encountered is homogeneous.
    """

    LITERAL = "literal"
    STRICT_HOMOGENEOUS = "strict"


@dataclass
class VfcRunState:
    """Progress of one VFC run: the list, the index of the next unconsumed
    request (0-based), and the cached counter of the current head element."""

    list_state: ListState
    cursor: int
    head_freq: int

    @classmethod
    def fresh(cls, state: ListState) -> "VfcRunState":
        head_freq = state.freq[state.head] if len(state) else 0
        return cls(state.copy(), 0, head_freq)


@dataclass
class RunReport:
    """Trace and total access cost of one engine run."""

    algorithm: AlgorithmKind
    cost_model: CostModel
    n_requests: int
    total_cost: int
    steps: list[StepRecord]
    final_state: ListState
    policy: VfcPolicy | None = None

    @property
    def step_costs(self) -> list[int]:
        return [s.cost_charged for s in self.steps]

    @property
    def consumed_counts(self) -> list[int]:
        return [s.requests_consumed for s in self.steps]


def vfc_lookahead_size(f_elem: int, f_head: int) -> int:
    """Window budget for one lookahead: ``|f_elem - f_head| + 1``."""
    return abs(f_elem - f_head) + 1


def frequency_count_reorganize(state: ListState, accessed: Symbol) -> ListState:
    """Reinsert ``accessed`` per the counter-scan rule described above.

    Expects the accessed element's counter to have been updated for this
    step already. Performs at most one free exchange.
    """
    new = state.copy()
    _reorganize_inplace(new, accessed)
    return new


def _reorganize_inplace(state: ListState, accessed: Symbol, j: int | None = None) -> None:
    order = state.order
    freq = state.freq
    if j is None:
        try:
            j = order.index(accessed)
        except ValueError:
            raise SymbolNotInList(accessed) from None
    f = freq[accessed]
    for i in range(j):
        fi = freq[order[i]]
        if f > fi:
            order.insert(i, order.pop(j))
            return
        if f == fi:
            # order[i + 1] always exists for i < j; when i + 1 == j it is the
            # accessed element itself, whose updated counter blocks the move.
            if i + 1 >= len(order) or f > freq[order[i + 1]]:
                order.insert(i, order.pop(j))
                return


def _find(state: ListState, request: Symbol) -> int:
    try:
        return state.order.index(request)
    except ValueError:
        raise SymbolNotInList(request) from None


def _mtf_inplace(state: ListState, request: Symbol, model: CostModel) -> tuple[int, int]:
    j = _find(state, request)
    cost = access_cost(model, j + 1)
    if j:
        state.order.insert(0, state.order.pop(j))
    return cost, j + 1


def _trans_inplace(state: ListState, request: Symbol, model: CostModel) -> tuple[int, int]:
    j = _find(state, request)
    cost = access_cost(model, j + 1)
    if j:
        order = state.order
        order[j - 1], order[j] = order[j], order[j - 1]
    return cost, j + 1


def _fc_inplace(state: ListState, request: Symbol, model: CostModel) -> tuple[int, int]:
    j = _find(state, request)
    cost = access_cost(model, j + 1)
    state.freq[request] += 1
    _reorganize_inplace(state, request, j)
    return cost, j + 1


def mtf_step(state: ListState, request: Symbol, model: CostModel = CostModel.FULL) -> tuple[ListState, int]:
    """Serve one request with move-to-front; returns (new state, cost)."""
    new = state.copy()
    cost, _ = _mtf_inplace(new, request, model)
    return new, cost


def trans_step(state: ListState, request: Symbol, model: CostModel = CostModel.FULL) -> tuple[ListState, int]:
    """Serve one request with transpose; the head has no predecessor and
    stays put."""
    new = state.copy()
    cost, _ = _trans_inplace(new, request, model)
    return new, cost


def fc_step(state: ListState, request: Symbol, model: CostModel = CostModel.FULL) -> tuple[ListState, int]:
    """Serve one request with frequency count: charge, bump the counter,
    reorganize."""
    new = state.copy()
    cost, _ = _fc_inplace(new, request, model)
    return new, cost


def _window_contains(sequence: RequestSequence, symbol: Symbol, start: int, stop: int) -> bool:
    # bytes, list and tuple all expose bounded index(); bounds past the end clip.
    try:
        sequence.index(symbol, start, stop)  # type: ignore[attr-defined]
    except ValueError:
        return False
    return True


def _window_homogeneous(sequence: RequestSequence, symbol: Symbol, start: int, stop: int) -> bool:
    stop = min(stop, len(sequence))
    if stop <= start:
        return False
    if sequence[start] != symbol:
        return False
    window = sequence[start:stop]
    return window.count(symbol) == stop - start


def _vfc_step_inplace(
    state: ListState,
    head_freq: int,
    sequence: RequestSequence,
    cursor: int,
    model: CostModel,
    policy: VfcPolicy,
) -> tuple[int, int, int, int]:
    """Advance one VFC step in place.

    Returns (cost, requests consumed, counter of the new head, pre-access
    position). ``head_freq`` must be the counter of the current head.
    """
    n = len(sequence)
    if cursor >= n:
        raise CursorExhausted(f"cursor {cursor} is past the end of {n} requests")
    request = sequence[cursor]
    j = _find(state, request)
    pos = j + 1
    f = state.freq[request]
    consumed = 1
    batched = False
    if head_freq > f:
        budget = vfc_lookahead_size(f, head_freq)
        start, stop = cursor + 1, cursor + budget
        if policy is VfcPolicy.LITERAL:
            batched = _window_contains(sequence, request, start, stop)
        else:
            batched = _window_homogeneous(sequence, request, start, stop)
        if batched:
            consumed = min(budget, n - cursor)
            state.freq[request] = f + consumed
            cost = access_cost(model, pos) + (consumed - 1)
            _reorganize_inplace(state, request, j)
    if not batched:
        cost = access_cost(model, pos)
        state.freq[request] = f + 1
        _reorganize_inplace(state, request, j)
    return cost, consumed, state.freq[state.order[0]], pos


def vfc_step(
    run: VfcRunState,
    sequence: RequestSequence,
    model: CostModel = CostModel.FULL,
    policy: VfcPolicy = VfcPolicy.LITERAL,
) -> tuple[VfcRunState, int, int]:
    """Serve the next request (or batched block) of a VFC run.

    Returns (advanced run state, cost charged by this step, requests
    consumed). The advanced state's head counter is recomputed from the
    actual head element.
    """
    state = run.list_state.copy()
    cost, consumed, head_freq, _ = _vfc_step_inplace(
        state, run.head_freq, sequence, run.cursor, model, policy
    )
    return VfcRunState(state, run.cursor + consumed, head_freq), cost, consumed


_STEP_ENGINES = {
    AlgorithmKind.MTF: _mtf_inplace,
    AlgorithmKind.TRANS: _trans_inplace,
    AlgorithmKind.FC: _fc_inplace,
}


def _snapshot(record: StepRecord, state: ListState) -> StepRecord:
    record.list_after = tuple(state.order)
    record.freq_after = state.frequencies_in_order()
    return record


def run_algorithm(
    kind: AlgorithmKind,
    state: ListState,
    sequence: RequestSequence,
    model: CostModel = CostModel.FULL,
    policy: VfcPolicy = VfcPolicy.LITERAL,
    *,
    keep_trace: bool = True,
    snapshots: bool = False,
) -> RunReport:
    """Run one engine over a whole request sequence.

    Every request is consumed exactly once across steps. ``keep_trace=False``
    drops the per-step records (corpus-scale runs only need totals);
    ``snapshots=True`` additionally captures the list order and counters
    after every step.
    """
    work = state.copy()
    steps: list[StepRecord] = []
    total = 0
    n = len(sequence)

    if kind is AlgorithmKind.VFC:
        head_freq = work.freq[work.head] if len(work) else 0
        cursor = 0
        while cursor < n:
            request = sequence[cursor]
            try:
                cost, consumed, head_freq, pos = _vfc_step_inplace(
                    work, head_freq, sequence, cursor, model, policy
                )
            except SymbolNotInList as err:
                raise SymbolNotInList(err.symbol, cursor) from None
            total += cost
            if keep_trace:
                record = StepRecord(request, pos, cost, consumed)
                steps.append(_snapshot(record, work) if snapshots else record)
            cursor += consumed
    else:
        engine = _STEP_ENGINES[kind]
        for index, request in enumerate(sequence):
            try:
                cost, pos = engine(work, request, model)
            except SymbolNotInList as err:
                raise SymbolNotInList(err.symbol, index) from None
            total += cost
            if keep_trace:
                record = StepRecord(request, pos, cost, 1)
                steps.append(_snapshot(record, work) if snapshots else record)

    return RunReport(
        algorithm=kind,
        cost_model=model,
        n_requests=n,
        total_cost=total,
        steps=steps,
        final_state=work,
        policy=policy if kind is AlgorithmKind.VFC else None,
    )
