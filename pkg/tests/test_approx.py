import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from compcodes import (BudgetParams, Code, InvalidInputError, approx_optimal,
                       build_code_for_budget, is_fix_free, total_cost)
from compcodes.oracles import min_cost_fix_free

Q = Fraction


def test_total_cost_examples():
    assert total_cost(Code.from_strings(["0", "11"]), 2) == 5
    code = Code.from_strings(["0110", "1", "000"])
    assert total_cost(code, 1) == 8
    for n in (2, 3, 5):
        one_hot = Code(2, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))
        for m in (1, Q(5, 2), 4):
            assert total_cost(one_hot, m) == n * (n - 1 + m)
    with pytest.raises(InvalidInputError):
        total_cost(Code(3, ((2,),)), 1)


def test_budget_derived_quantities():
    p = BudgetParams(2, 2, 3)
    assert (p.max_letters, p.max_ones, p.word_length, p.ones_cap, p.pool_size()) == (3, 1, 4, 2, 11)
    p = BudgetParams(3, 1, 6)
    assert (p.max_letters, p.max_ones, p.word_length, p.ones_cap, p.pool_size()) == (4, 4, 5, 5, 32)


def test_build_examples():
    assert build_code_for_budget(BudgetParams(2, 2, 3)).to_strings() == ["0000", "0001"]
    code = build_code_for_budget(BudgetParams(3, 1, 6))
    assert code.to_strings() == ["00000", "00001", "00010"]
    assert total_cost(code, 1) == 15 <= Q(11, 2) * 6
    assert build_code_for_budget(BudgetParams(2, 1, 0)).to_strings() == ["0", "1"]


def test_build_fails_when_pool_too_small():
    # x = 0 gives single-letter words only: two of them, fewer than three codewords.
    assert build_code_for_budget(BudgetParams(3, 1, 0)) is None


def test_budget_params_validation():
    for args in [(1, 1, 5), (2, Q(1, 2), 5), (2, 1, -1)]:
        with pytest.raises(InvalidInputError):
            BudgetParams(*args)


def test_build_output_invariants_on_grid():
    for n in range(2, 7):
        for m in (1, Q(3, 2), 2, 3):
            prev_ok = False
            x = Q(0)
            while x <= n * (n - 1 + m):
                p = BudgetParams(n, m, x)
                code = build_code_for_budget(p)
                if code is None:
                    assert not prev_ok, "success must be monotone in the budget"
                else:
                    prev_ok = True
                    assert len(code) == n and len(set(code.words)) == n
                    assert is_fix_free(code)
                    for w in code.words:
                        assert len(w) == p.max_letters + 1
                        assert sum(w) <= p.max_ones + 1
                        assert total_cost(Code(2, (w,)), m) <= (p.max_ones + 1) * m + (p.max_letters - p.max_ones)
                x += Q(1, 4)
            assert prev_ok


@given(st.integers(2, 60), st.fractions(min_value=1, max_value=20))
def test_upper_endpoint_always_succeeds(n, m):
    assert build_code_for_budget(BudgetParams(n, m, n * (n - 1 + m))) is not None


@given(st.integers(2, 12), st.fractions(min_value=1, max_value=6),
       st.fractions(min_value=0, max_value=80), st.fractions(min_value=0, max_value=10))
def test_success_is_monotone(n, m, x, dx):
    if build_code_for_budget(BudgetParams(n, m, x)) is not None:
        assert build_code_for_budget(BudgetParams(n, m, x + dx)) is not None


@pytest.mark.parametrize("n,m,opt", [(2, 2, 3), (2, 1, 2)])
def test_approx_examples(n, m, opt):
    eps = Q(1, 4)
    assert min_cost_fix_free(n, m, n) == opt
    result = approx_optimal(n, m, eps)
    assert is_fix_free(result.code) and len(result.code) == n
    assert result.achieved_cost == total_cost(result.code, m)
    assert result.ratio_bound == 5 + Q(1, n - 1) + eps
    assert result.achieved_cost <= result.ratio_bound * opt


@settings(deadline=None, max_examples=40)
@given(st.integers(2, 40), st.fractions(min_value=1, max_value=8),
       st.fractions(min_value=Q(1, 64), max_value=4))
def test_search_bracket_and_probe_count(n, m, eps):
    result = approx_optimal(n, m, eps)
    upper = n * (n - 1 + m)
    assert len(result.code) == n and is_fix_free(result.code)
    assert build_code_for_budget(BudgetParams(n, m, result.budget_used)) == result.code
    # Either nothing fails (the search slid down to 0) or the last failing
    # probe lies within eps below the returned budget.
    below = result.budget_used - eps
    if build_code_for_budget(BudgetParams(n, m, 0)) is None:
        assert build_code_for_budget(BudgetParams(n, m, max(below, 0))) is None
    assert result.probes - 1 <= math.ceil(math.log2(upper / eps)) + 1


def test_approx_rejects_bad_parameters():
    for args in [(1, 1, 1), (2, Q(1, 2), 1), (2, 1, 0)]:
        with pytest.raises(InvalidInputError):
            approx_optimal(*args)
