import pytest
from hypothesis import given, settings, strategies as st

from listlab import (
    AlgorithmKind,
    CostModel,
    CursorExhausted,
    ListState,
    SymbolNotInList,
    VfcPolicy,
    VfcRunState,
    fc_step,
    frequency_count_reorganize,
    mtf_step,
    run_algorithm,
    trans_step,
    vfc_lookahead_size,
    vfc_step,
)

FULL = CostModel.FULL
PARTIAL = CostModel.PARTIAL
LITERAL = VfcPolicy.LITERAL
STRICT = VfcPolicy.STRICT_HOMOGENEOUS


def state(order, freq=None):
    return ListState.from_order(order, freq)


class TestMtf:
    def test_moves_request_to_front(self):
        new, cost = mtf_step(state([1, 2, 3]), 3, FULL)
        assert (new.order, cost) == ([3, 1, 2], 3)

    def test_head_access_is_fixpoint(self):
        new, cost = mtf_step(state([1, 2, 3]), 1, FULL)
        assert (new.order, cost) == ([1, 2, 3], 1)

    def test_full_run_total(self):
        # step costs 1,2,1,3,1,1 by direct simulation
        report = run_algorithm(AlgorithmKind.MTF, state([1, 2, 3]), (1, 2, 2, 3, 3, 3), FULL)
        assert report.step_costs == [1, 2, 1, 3, 1, 1]
        assert report.total_cost == 9

    def test_ignores_counters(self):
        zero = run_algorithm(AlgorithmKind.MTF, state([1, 2, 3]), (3, 1, 2, 3))
        skewed = run_algorithm(AlgorithmKind.MTF, state([1, 2, 3], (9, 0, 4)), (3, 1, 2, 3))
        assert zero.step_costs == skewed.step_costs
        assert zero.final_state.order == skewed.final_state.order


class TestTrans:
    def test_swaps_with_predecessor(self):
        new, cost = trans_step(state([1, 2, 3]), 3, FULL)
        assert (new.order, cost) == ([1, 3, 2], 3)

    def test_head_has_no_predecessor(self):
        new, cost = trans_step(state([1, 2, 3]), 1, FULL)
        assert (new.order, cost) == ([1, 2, 3], 1)

    def test_partial_cost(self):
        new, cost = trans_step(state([2, 1, 3]), 3, PARTIAL)
        assert (new.order, cost) == ([2, 3, 1], 2)


class TestReorganize:
    def test_tie_with_self_successor_blocks_move(self):
        s = state([1, 2, 3], (1, 1, 0))
        assert frequency_count_reorganize(s, 2).order == [1, 2, 3]

    def test_strictly_greater_moves_to_front(self):
        s = state([1, 2, 3], (1, 2, 0))
        assert frequency_count_reorganize(s, 2).order == [2, 1, 3]

    def test_tie_with_smaller_successor_jumps_ahead(self):
        s = state([2, 1, 3], {2: 2, 1: 1, 3: 2})
        assert frequency_count_reorganize(s, 3).order == [3, 2, 1]

    def test_absent_symbol(self):
        with pytest.raises(SymbolNotInList):
            frequency_count_reorganize(state([1, 2]), 7)

    def test_input_not_mutated(self):
        s = state([1, 2, 3], (1, 2, 0))
        frequency_count_reorganize(s, 2)
        assert s.order == [1, 2, 3]


class TestFc:
    def test_reference_instance_with_interleaved_requests(self):
        report = run_algorithm(AlgorithmKind.FC, state([1, 2, 3]), (1, 2, 2, 3, 2, 3), FULL)
        assert report.step_costs == [1, 2, 2, 3, 1, 3]
        assert report.total_cost == 12

    def test_reference_instance_with_run_suffix(self):
        report = run_algorithm(AlgorithmKind.FC, state([1, 2, 3]), (1, 2, 2, 3, 3, 3), FULL)
        assert report.step_costs == [1, 2, 2, 3, 3, 1]
        assert report.total_cost == 12

    def test_singleton_list(self):
        report = run_algorithm(AlgorithmKind.FC, state([1]), (1, 1, 1), FULL)
        assert report.total_cost == 3

    def test_counters_match_occurrence_counts(self):
        seq = (2, 3, 2, 1, 2, 3)
        report = run_algorithm(AlgorithmKind.FC, state([1, 2, 3]), seq, FULL)
        assert report.final_state.freq == {1: 1, 2: 3, 3: 2}

    def test_step_returns_new_state(self):
        s = state([1, 2, 3])
        new, cost = fc_step(s, 2, FULL)
        assert cost == 2
        assert new.freq[2] == 1
        assert s.freq[2] == 0


class TestLookaheadSize:
    @pytest.mark.parametrize("f_elem,f_head,expected", [(0, 1, 2), (0, 2, 3), (5, 5, 1)])
    def test_values(self, f_elem, f_head, expected):
        assert vfc_lookahead_size(f_elem, f_head) == expected

    @given(st.integers(min_value=0, max_value=100), st.integers(min_value=0, max_value=100))
    def test_symmetric_and_positive(self, a, b):
        assert vfc_lookahead_size(a, b) == vfc_lookahead_size(b, a) >= 1


class TestVfcStep:
    def test_batch_consumes_window(self):
        run = VfcRunState(state([1, 2, 3], (1, 0, 0)), 1, 1)
        new, cost, consumed = vfc_step(run, (1, 2, 2, 3, 3, 3), FULL, LITERAL)
        assert (cost, consumed) == (3, 2)
        assert new.list_state.order == [2, 1, 3]
        assert new.list_state.freq[2] == 2
        assert new.cursor == 3
        assert new.head_freq == 2

    def test_second_batch_reaches_final_configuration(self):
        run = VfcRunState(state([2, 1, 3], {2: 2, 1: 1, 3: 0}), 3, 2)
        new, cost, consumed = vfc_step(run, (1, 2, 2, 3, 3, 3), FULL, LITERAL)
        assert (cost, consumed) == (5, 3)
        assert new.list_state.order == [3, 2, 1]
        assert new.list_state.frequencies_in_order() == (3, 2, 1)

    def test_empty_window_falls_back_to_normal_service(self):
        run = VfcRunState(state([1, 2], (1, 0)), 2, 1)
        new, cost, consumed = vfc_step(run, (1, 1, 2), FULL, LITERAL)
        assert (cost, consumed) == (2, 1)
        assert new.list_state.freq[2] == 1

    def test_untriggered_window_serves_single_request(self):
        # window exists but never repeats the request
        run = VfcRunState(state([1, 2], (1, 0)), 1, 1)
        new, cost, consumed = vfc_step(run, (1, 2, 1), FULL, LITERAL)
        assert (cost, consumed) == (2, 1)

    def test_strict_rejects_heterogeneous_window(self):
        st_run = VfcRunState(state([1, 2, 3], (2, 0, 0)), 2, 2)
        seq = (1, 1, 2, 1, 2)
        strict, cost_s, consumed_s = vfc_step(st_run, seq, FULL, STRICT)
        assert consumed_s == 1
        lit, cost_l, consumed_l = vfc_step(st_run, seq, FULL, LITERAL)
        assert consumed_l == 3

    def test_cursor_exhausted(self):
        run = VfcRunState(state([1]), 1, 0)
        with pytest.raises(CursorExhausted):
            vfc_step(run, (1,), FULL)

    def test_fresh_run_state(self):
        run = VfcRunState.fresh(state([4, 5], (7, 1)))
        assert (run.cursor, run.head_freq) == (0, 7)


class TestRunAlgorithm:
    def test_vfc_worked_instance(self):
        for policy in (LITERAL, STRICT):
            report = run_algorithm(
                AlgorithmKind.VFC, state([1, 2, 3]), (1, 2, 2, 3, 3, 3), FULL, policy
            )
            assert report.total_cost == 9
            assert report.step_costs == [1, 3, 5]
            assert report.consumed_counts == [1, 2, 3]
            assert report.final_state.order == [3, 2, 1]

    def test_empty_sequence(self):
        report = run_algorithm(AlgorithmKind.FC, state([1, 2, 3]), (), FULL)
        assert report.total_cost == 0
        assert report.steps == []

    def test_absent_request_carries_index(self):
        with pytest.raises(SymbolNotInList) as exc:
            run_algorithm(AlgorithmKind.MTF, state([1, 2]), (1, 2, 9), FULL)
        assert exc.value.request_index == 2
        assert exc.value.symbol == 9

    def test_vfc_absent_request_carries_index(self):
        with pytest.raises(SymbolNotInList) as exc:
            run_algorithm(AlgorithmKind.VFC, state([1, 2]), (1, 7), FULL)
        assert exc.value.request_index == 1

    def test_snapshots_capture_order_and_counters(self):
        report = run_algorithm(
            AlgorithmKind.VFC, state([1, 2, 3]), (1, 2, 2, 3, 3, 3), FULL, snapshots=True
        )
        assert report.steps[-1].list_after == (3, 2, 1)
        assert report.steps[-1].freq_after == (3, 2, 1)

    def test_trace_can_be_dropped(self):
        report = run_algorithm(AlgorithmKind.FC, state([1, 2]), (2, 2, 1), keep_trace=False)
        assert report.steps == []
        assert report.total_cost > 0


@st.composite
def small_instance(draw):
    m = draw(st.integers(min_value=1, max_value=4))
    order = list(draw(st.permutations(range(m))))
    n = draw(st.integers(min_value=0, max_value=24))
    seq = draw(st.lists(st.sampled_from(order), min_size=n, max_size=n))
    return order, tuple(seq)


@settings(max_examples=200)
@given(small_instance(), st.sampled_from(list(AlgorithmKind)), st.sampled_from([FULL, PARTIAL]))
def test_every_engine_consumes_each_request_once(case, kind, model):
    order, seq = case
    report = run_algorithm(kind, state(order), seq, model)
    assert sum(report.consumed_counts) == len(seq)
    assert sorted(report.final_state.order) == sorted(order)


@settings(max_examples=200)
@given(small_instance(), st.sampled_from(list(AlgorithmKind)))
def test_full_model_lower_bound(case, kind):
    order, seq = case
    report = run_algorithm(kind, state(order), seq, FULL)
    assert report.total_cost >= len(seq)


@settings(max_examples=100)
@given(small_instance(), st.sampled_from(list(AlgorithmKind)), st.sampled_from([LITERAL, STRICT]))
def test_engines_are_deterministic(case, kind, policy):
    order, seq = case
    first = run_algorithm(kind, state(order), seq, FULL, policy)
    second = run_algorithm(kind, state(order), seq, FULL, policy)
    assert first.step_costs == second.step_costs
    assert first.final_state == second.final_state


@settings(max_examples=200)
@given(small_instance(), st.sampled_from([LITERAL, STRICT]))
def test_vfc_conserves_counter_totals(case, policy):
    order, seq = case
    report = run_algorithm(AlgorithmKind.VFC, state(order), seq, FULL, policy)
    assert sum(report.final_state.freq.values()) == len(seq)


@settings(max_examples=200)
@given(small_instance(), st.sampled_from([AlgorithmKind.FC, AlgorithmKind.VFC]))
def test_counters_non_increasing_after_every_step(case, kind):
    order, seq = case
    report = run_algorithm(kind, state(order), seq, FULL, snapshots=True)
    for step in report.steps:
        freqs = step.freq_after
        assert all(freqs[i] >= freqs[i + 1] for i in range(len(freqs) - 1))
