import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import involutions, perms
from affinv.affine_core import (
    compose, from_window, identity, inverse, length, reflection, simple,
)
from affinv.atoms import atoms_bruteforce
from affinv.genfunc import count_N
from affinv.involutions import (
    NotAnInvolutionError, absolute_length, canonical_cycles, check_involution,
    demazure_conjugate, dumps, endpoint_kind, enumerate_involutions,
    from_cycle_record, hat_length, involution_from_cycles, is_321_avoiding,
    is_fully_commutative, is_involution, standardize, to_cycle_record,
    winding_edges,
)

# the running rank-8 example with arcs labelled 1, -1, 0
Z8 = involution_from_cycles(8, [(1, 12), (7, 10), (3, 6)])


def test_cycles_of_running_example():
    assert canonical_cycles(Z8) == ((1, 12), (3, 6), (7, 10))
    assert canonical_cycles(identity(5)) == ()
    assert canonical_cycles(from_window(4, [8, 7, -2, -3])) == ((1, 8), (2, 7))


def test_lengths_of_examples():
    assert (absolute_length(Z8), length(Z8), hat_length(Z8)) == (3, 25, 14)
    assert (absolute_length(identity(3)), hat_length(identity(3))) == (0, 0)
    t05 = from_window(4, [-4, 2, 3, 9])
    assert t05 == reflection(4, 0, 5)
    assert (absolute_length(t05), hat_length(t05)) == (1, 4)


def test_check_involution():
    assert is_involution(simple(3, 1))
    with pytest.raises(NotAnInvolutionError):
        check_involution(compose(simple(3, 1), simple(3, 2)))


def test_endpoint_kinds():
    t = reflection(4, 1, 8)
    assert endpoint_kind(identity(4), 1) == "fixed"
    assert endpoint_kind(t, 1) == "left" and endpoint_kind(t, 8) == "right"


def test_demazure_conjugation_examples():
    s = lambda i: simple(4, i)  # noqa: E731
    assert demazure_conjugate(identity(4), 1) == s(1)
    assert demazure_conjugate(s(1), 1) == s(1)
    assert demazure_conjugate(s(2), 1) == reflection(4, 1, 3)


def test_enumeration_small():
    assert list(enumerate_involutions(3, 0)) == [identity(3)]
    t05 = from_window(4, [-4, 2, 3, 9])
    assert t05 in [z for z in enumerate_involutions(4, 4) if length(z) == 7]


@pytest.mark.parametrize("n,L", [(2, 10), (3, 8), (4, 6), (5, 5)])
def test_enumeration_matches_group_oracle(n, L):
    fast = {z.window for z in enumerate_involutions(n, L) if length(z) <= L}
    assert fast == set(oracles.involutions(n, L))


def test_enumeration_counts_rank_two():
    for m in range(1, 8):
        assert sum(1 for z in enumerate_involutions(2, m) if length(z) == m) == count_N(2, m)


def test_standardize_example():
    y = involution_from_cycles(8, [(1, 3), (2, 12), (6, 8)])
    assert standardize(y, {2, 4, 6, 7, 8}) == involution_from_cycles(5, [(1, 7), (3, 5)])


@given(perms())
def test_standardize_full_set_is_identity_map(w):
    assert standardize(w, range(1, w.n + 1)) == w


@given(st.integers(2, 6), st.sets(st.integers(1, 6), min_size=1))
def test_standardize_identity(n, E):
    E = {e for e in E if e <= n} or {1}
    assert standardize(identity(n), E) == identity(len(E))


def test_321_avoidance():
    assert is_321_avoiding(identity(4))
    assert is_321_avoiding(simple(4, 1))
    assert not is_321_avoiding(from_window(4, [-4, 2, 3, 9]))


@pytest.mark.parametrize("n", [3, 4])
def test_321_avoiding_means_single_atom(n):
    for z in enumerate_involutions(n, 4):
        assert is_321_avoiding(z) == (len(atoms_bruteforce(z)) == 1)


@pytest.mark.parametrize("n", [3, 4])
def test_fully_commutative_agrees_with_321_check(n):
    for z in enumerate_involutions(n, 5):
        assert is_fully_commutative(z) == is_321_avoiding(z)


def test_winding_edges():
    assert winding_edges(identity(5)) == []
    assert sorted(e.label for e in winding_edges(Z8)) == [-1, 0, 1]
    (edge,) = winding_edges(simple(4, 1))
    assert (edge.start, edge.target, edge.label) == (1, 2, 0)


def test_cycle_records():
    zs = [Z8, identity(3), reflection(4, 0, 5)]
    for z in zs:
        assert from_cycle_record(to_cycle_record(z)) == z
    assert dumps([identity(2)]).strip() == '{"n": 2, "cycles": []}'


@given(involutions())
def test_involution_invariants(z):
    assert compose(z, z) == identity(z.n)
    assert inverse(z) == z
    assert (length(z) - absolute_length(z)) % 2 == 0
    assert involution_from_cycles(z.n, canonical_cycles(z)) == z


@given(involutions(), st.integers(1, 5))
def test_demazure_conjugation_raises_hat_length_by_at_most_one(z, i):
    i = (i - 1) % z.n + 1
    y = demazure_conjugate(z, i)
    assert is_involution(y)
    assert hat_length(y) - hat_length(z) in (0, 1)
