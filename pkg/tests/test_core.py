import pytest
from hypothesis import given, strategies as st

from wellfounded import (
    DescentBudgetError,
    EvidenceError,
    NatLessEvidence,
    check_recursion_equation,
    check_unique_solution,
    empty_relation,
    fuzz_descent,
    nat_less,
    nat_less_decide,
    nat_wfrec,
    validated_evidence,
    wfrec,
)
from wellfounded.combinators import lex_first, lex_product, lex_second

from conftest import direct_ackermann, iterative_fib


def fib_step(n, rec):
    if n < 2:
        return n
    return rec(n - 1, nat_less_decide(n - 1, n)) + rec(n - 2, nat_less_decide(n - 2, n))


def ackermann_step(pair, rec):
    m, n = pair
    if m == 0:
        return n + 1
    if n == 0:
        return rec((m - 1, 1), lex_first(nat_less_decide(m - 1, m)))
    inner = rec((m, n - 1), lex_second(nat_less_decide(n - 1, n)))
    return rec((m - 1, inner), lex_first(nat_less_decide(m - 1, m)))


class TestWfrec:
    def test_course_of_values_fibonacci(self):
        assert iterative_fib(10) == 55
        assert wfrec(nat_less(), fib_step, 10) == 55

    def test_constant_step_at_zero(self):
        def constant(n, _rec):
            return 7

        assert wfrec(nat_less(), constant, 0) == 7

    def test_ackermann_over_lex_product(self):
        assert direct_ackermann(2, 3) == 9
        order = lex_product(nat_less(), nat_less())
        assert wfrec(order, ackermann_step, (2, 3)) == 9

    def test_validation_rejects_bogus_evidence(self):
        def cheating(n, rec):
            if n < 3:
                return rec(n + 1, NatLessEvidence())
            return 0

        with validated_evidence():
            with pytest.raises(EvidenceError):
                wfrec(nat_less(), cheating, 1)


class TestNatLessDecide:
    def test_adjacent_is_the_equality_leaf(self):
        evidence = nat_less_decide(2, 3)
        assert evidence is not None
        assert evidence.rest is None
        assert evidence.equality is not None

    def test_irreflexive(self):
        assert nat_less_decide(3, 3) is None

    def test_three_unfoldings(self):
        evidence = nat_less_decide(0, 3)
        assert evidence == NatLessEvidence(
            rest=NatLessEvidence(rest=NatLessEvidence())
        )
        assert evidence.depth() == 2

    def test_chain_depth_matches_distance(self):
        for m in range(6):
            for n in range(m + 1, 8):
                assert nat_less_decide(m, n).depth() == n - m - 1

    @given(st.integers(0, 40), st.integers(0, 40))
    def test_matches_host_comparison(self, m, n):
        assert (nat_less_decide(m, n) is not None) == (m < n)

    @given(st.integers(0, 25), st.integers(0, 25))
    def test_asymmetric(self, m, n):
        if nat_less_decide(m, n) is not None:
            assert nat_less_decide(n, m) is None


class TestNatWfrec:
    def test_fibonacci(self):
        assert nat_wfrec(fib_step, 10) == 55
        for n in range(25):
            assert nat_wfrec(fib_step, n) == iterative_fib(n)

    def test_step_ignoring_rec(self):
        assert nat_wfrec(lambda n, _rec: n, 4) == 4

    def test_agreement_with_generic_operator(self):
        def triangular(n, rec):
            return 0 if n == 0 else n + rec(n - 1, nat_less_decide(n - 1, n))

        nat = nat_less()
        for n in range(51):
            assert nat_wfrec(triangular, n) == wfrec(nat, triangular, n)
        for n in range(21):
            assert nat_wfrec(fib_step, n) == wfrec(nat, fib_step, n)


class TestEmptyRelation:
    def test_never_decides(self):
        unit = empty_relation()
        assert unit.decide("u", "u") is None

    def test_wfrec_is_one_step(self):
        unit = empty_relation()
        assert wfrec(unit, lambda x, _rec: (x, "done"), "u") == ("u", "done")

    def test_rec_is_uncallable(self):
        unit = empty_relation()

        def misbehaving(x, rec):
            return rec(x, None)

        with pytest.raises(EvidenceError):
            wfrec(unit, misbehaving, "u")

    def test_no_predecessors(self):
        assert empty_relation().predecessors("u") == ()


class TestRecursionEquationHarness:
    def test_fibonacci_passes(self):
        report = check_recursion_equation(nat_less(), fib_step, range(21))
        assert report.ok and report.total == 21

    def test_constant_on_empty_relation(self):
        report = check_recursion_equation(
            empty_relation(), lambda x, _rec: 1, ["u"]
        )
        assert report.ok

    def test_detects_a_broken_operator(self):
        from dataclasses import replace

        broken = replace(
            nat_less(), recursor=lambda step, a: -1  # ignores the step entirely
        )
        report = check_recursion_equation(broken, fib_step, range(3))
        assert not report.ok


class TestUniqueSolution:
    def test_oracle_table_is_the_solution(self):
        table = {n: iterative_fib(n) for n in range(6)}
        assert check_unique_solution(nat_less(), fib_step, table, range(6))

    def test_perturbed_table_fails(self):
        table = {n: iterative_fib(n) for n in range(6)}
        table[3] += 1
        assert not check_unique_solution(nat_less(), fib_step, table, range(6))

    def test_wfrec_table_is_the_solution(self):
        nat = nat_less()
        table = {n: wfrec(nat, fib_step, n) for n in range(6)}
        assert check_unique_solution(nat, fib_step, table, range(6))


class TestFuzzDescent:
    def test_nat_chain_bottoms_out(self):
        chain = fuzz_descent(nat_less(), 9, seed=0)
        assert chain[0] == 9 and chain[-1] == 0
        assert len(chain) <= 10
        assert all(b < a for a, b in zip(chain, chain[1:]))

    def test_empty_relation_chain_is_the_start(self):
        assert fuzz_descent(empty_relation(), "u", seed=3) == ["u"]

    def test_budget_exhaustion_reports(self):
        with pytest.raises(DescentBudgetError):
            fuzz_descent(nat_less(), 50, max_steps=3, seed=0)

    def test_same_seed_same_chain(self):
        first = fuzz_descent(nat_less(), 30, seed=11)
        second = fuzz_descent(nat_less(), 30, seed=11)
        assert first == second


class TestCoherence:
    def test_predecessors_match_decide(self):
        nat = nat_less()
        for n in range(10):
            below = dict(nat.predecessors(n))
            for m in range(12):
                if nat.decide(m, n) is not None:
                    assert m in below
                else:
                    assert m not in below
