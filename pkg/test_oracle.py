#!/usr/bin/env python3
"""
Tests for the brute-force oracle
"""

import sys

import pytest

from algebra_core import EquationSpec, Transformation, WreathElement, cyclic_group, trivial_group
from egf_engine import CountSequence, exp_transform, solution_series
from error_handler import OracleInfeasibleError, PreconditionError
from index_set import IndexSet
from oracle import (
    count_commuting_idempotent_pairs,
    count_power_solutions,
    enumerate_idempotents,
    idempotent_count_direct,
    two_colour_connected,
)

ALL = IndexSet.everything()
IDEMPOTENT = EquationSpec(1, 2)


def test_count_power_solutions_examples():
    trivial = trivial_group()
    assert count_power_solutions(2, IDEMPOTENT, trivial, ALL, ALL) == 3
    assert count_power_solutions(4, IDEMPOTENT, trivial, ALL, ALL) == 41
    assert count_power_solutions(0, IDEMPOTENT, trivial, ALL, ALL) == 1
    assert count_power_solutions(0, IDEMPOTENT, trivial, ALL, IndexSet.odd()) == 0


def test_parallel_count_agrees():
    trivial = trivial_group()
    serial = count_power_solutions(5, EquationSpec(2, 4), trivial, ALL, ALL)
    parallel = count_power_solutions(5, EquationSpec(2, 4), trivial, ALL, ALL, workers=2)
    assert serial == parallel


def test_solution_sets_grow_with_the_equation():
    # X^a = X^b implies X^a' = X^b' whenever a <= a' and (b − a) | (b' − a')
    trivial = trivial_group()
    chain = [EquationSpec(1, 2), EquationSpec(1, 3), EquationSpec(2, 4), EquationSpec(2, 6)]
    counts = [count_power_solutions(4, eq, trivial, ALL, ALL) for eq in chain]
    assert counts == sorted(counts)


def test_enumerate_idempotents():
    trivial = trivial_group()
    assert enumerate_idempotents(1, trivial) == [WreathElement.identity(1)]
    assert len(enumerate_idempotents(3, trivial)) == 10
    assert len(enumerate_idempotents(0, trivial)) == 1

    c2 = cyclic_group(2)
    labelled = enumerate_idempotents(2, c2)
    expected = solution_series(IDEMPOTENT, c2, ALL, ALL, 2)[2]
    assert len(labelled) == expected == 5


def test_two_colour_connected():
    ident = Transformation.identity(3)
    constant = Transformation.of([1, 1, 1])
    assert not two_colour_connected(ident, ident)
    assert two_colour_connected(ident, constant)
    assert two_colour_connected(Transformation.of([1, 1, 3]), Transformation.of([1, 3, 3]))
    assert not two_colour_connected(Transformation.of([1, 1, 3]), Transformation.of([2, 2, 3]))


def test_commuting_pairs():
    trivial = trivial_group()
    assert count_commuting_idempotent_pairs(1, trivial, connected_only=True) == 1
    assert count_commuting_idempotent_pairs(2, trivial, connected_only=True) == 6
    assert count_commuting_idempotent_pairs(2, trivial) == 7
    assert count_commuting_idempotent_pairs(3, trivial) == 58
    assert count_commuting_idempotent_pairs(0, trivial) == 1
    assert count_commuting_idempotent_pairs(0, trivial, connected_only=True) == 0


def test_pairs_recombine_through_exponential_formula():
    for group, n_max in ((trivial_group(), 4), (cyclic_group(2), 3)):
        connected = [0] + [
            count_commuting_idempotent_pairs(n, group, connected_only=True) for n in range(1, n_max + 1)
        ]
        totals = [count_commuting_idempotent_pairs(n, group) for n in range(n_max + 1)]
        meaning = "c_count" if group.order == 1 else "d_count"
        assert list(exp_transform(CountSequence(tuple(connected), meaning)).values) == totals


def test_idempotent_count_direct():
    assert idempotent_count_direct(0) == 1
    assert idempotent_count_direct(3) == 10
    assert idempotent_count_direct(5) == 196
    with pytest.raises(PreconditionError):
        idempotent_count_direct(-1)


def test_budget_is_enforced():
    with pytest.raises(OracleInfeasibleError) as excinfo:
        count_power_solutions(6, IDEMPOTENT, trivial_group(), ALL, ALL, budget=1000)
    assert excinfo.value.candidates == 6**6
    assert excinfo.value.budget == 1000
    with pytest.raises(OracleInfeasibleError):
        count_commuting_idempotent_pairs(4, cyclic_group(2), budget=100)
    with pytest.raises(PreconditionError):
        count_power_solutions(-1, IDEMPOTENT, trivial_group(), ALL, ALL)


if __name__ == "__main__":
    print("=" * 60)
    print("wreathcount - oracle tests")
    print("=" * 60)
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
                print(f"PASS {name}")
            except Exception as e:
                failed += 1
                print(f"FAIL {name}: {e!r}")
    print("=" * 60)
    sys.exit(1 if failed else 0)
