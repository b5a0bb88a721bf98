import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import involutions
from affinv.affine_core import (
    compose, from_window, identity, inverse, length, simple, star, times_simple,
)
from affinv.involutions import (
    absolute_length, canonical_cycles, enumerate_involutions,
    involution_from_cycles,
)
from affinv.weighted import (
    WeightedInvolution, alpha_L, alpha_R, count_matchings, descents_left,
    descents_right, dumps, enumerate_matchings, from_record,
    is_left_admissible, is_matching, is_right_admissible, lambda_left,
    lambda_right, matching_edges, omega_left, omega_right, pi_left, pi_right,
    pi_word_left, pi_word_right, prec_compare, precL_covers, precR_covers,
    star_weighted, to_record, w_abs_length, w_length, weight, weighted,
    zeta_L, zeta_R,
)

THETA1 = weighted(involution_from_cycles(5, [(1, 2), (3, 10)]), {(1, 2): 2, (3, 10): 3})
THETA2 = weighted(involution_from_cycles(5, [(0, 2), (3, 11)]), {(5, 7): 2, (3, 11): 2})
THETA3 = weighted(involution_from_cycles(5, [(0, 3), (2, 11)]), {(2, 11): 2, (5, 8): 1})
THETA2_PRIME = weighted(THETA2.base, {(5, 7): 1, (3, 11): 3})
Z4 = from_window(4, [8, 7, -2, -3])      # t_{1,8} t_{2,7}


def weighted_universe(n, max_hat, max_wt):
    """Every weighting with total <= max_wt of every involution with hat length <= max_hat."""
    for w in enumerate_involutions(n, max_hat):
        cyc = list(canonical_cycles(w))
        for ws in itertools.product(range(max_wt + 1), repeat=len(cyc)):
            if sum(ws) <= max_wt:
                yield weighted(w, dict(zip(cyc, ws)))


def test_weights_and_lengths():
    assert weight(THETA1) == 5
    z = THETA1.base
    assert weight(weighted(z)) == 0 and w_length(weighted(z)) == length(z)
    theta = lambda_right(Z4)
    assert weight(theta) == 6 and w_length(theta) == 14


def test_pi_examples():
    assert pi_right(THETA1, 5) == THETA2
    assert pi_right(THETA2, 1) == THETA2
    assert pi_right(THETA2, 2) == THETA3
    assert pi_word_right(THETA1, (5, 2)) == THETA3
    assert pi_left(5, THETA1) == THETA2_PRIME
    assert pi_left(2, THETA2_PRIME) == THETA3


def test_pi_fixes_weightless():
    theta = weighted(Z4)
    assert all(pi_right(theta, i) == theta == pi_left(i, theta) for i in range(1, 5))
    assert pi_word_right(THETA1, ()) == THETA1


def test_descents():
    assert descents_right(weighted(Z4)) == set()
    assert 5 in descents_right(THETA1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pi_relations_exhaustive(n):
    for theta in weighted_universe(n, 3, 4):
        for i in range(1, n + 1):
            assert pi_right(pi_right(theta, i), i) == pi_right(theta, i)
            assert pi_left(i, pi_left(i, theta)) == pi_left(i, theta)
            for j in range(1, n + 1):
                if (i - j) % n not in (0, 1, n - 1):
                    assert pi_word_right(theta, (i, j)) == pi_word_right(theta, (j, i))
                    assert pi_word_left((i, j), theta) == pi_word_left((j, i), theta)
            if n >= 3:
                j = i % n + 1
                assert pi_word_right(theta, (i, j, i)) == pi_word_right(theta, (j, i, j))
                assert pi_word_left((i, j, i), theta) == pi_word_left((j, i, j), theta)


def test_no_braid_relation_in_rank_two():
    # the rank-2 group is infinite dihedral, so the braid move is not a relation
    theta = weighted(involution_from_cycles(2, [(2, 3)]), {(2, 3): 3})
    assert pi_word_right(theta, (1, 2, 1)) != pi_word_right(theta, (2, 1, 2))


def test_mixed_actions_need_not_commute():
    theta = weighted(simple(2, 1), {(1, 2): 2})
    assert pi_right(pi_left(0, theta), 1) != pi_left(0, pi_right(theta, 1))


def test_mixed_actions_on_weight_one_generator_agree():
    # with weight 1 on s_1 both orders reach the same weightless involution
    theta = weighted(simple(2, 1), {(1, 2): 1})
    left_first = pi_right(pi_left(0, theta), 2)
    right_first = pi_left(0, pi_right(theta, 2))
    assert left_first == right_first == weighted(involution_from_cycles(2, [(0, 3)]))


@given(involutions(max_hat=4), st.integers(1, 5), st.data())
def test_star_intertwines_pi(z, i, data):
    cyc = canonical_cycles(z)
    ws = data.draw(st.lists(st.integers(0, 3), min_size=len(cyc), max_size=len(cyc)))
    theta = weighted(z, dict(zip(cyc, ws)))
    n = z.n
    assert star_weighted(star_weighted(theta)) == theta
    assert weight(star_weighted(theta)) == weight(theta)
    assert star_weighted(pi_left(i, theta)) == pi_right(star_weighted(theta), n - i)


def test_star_of_identity():
    assert star_weighted(weighted(identity(4))) == weighted(identity(4))


def test_admissibility_examples():
    nested = weighted(involution_from_cycles(4, [(1, 4), (2, 3)]), {(2, 3): 5})
    assert not is_right_admissible(nested)
    for theta in enumerate_matchings(4, 4):
        assert is_right_admissible(theta) and is_left_admissible(theta)
    crossing = weighted(involution_from_cycles(4, [(1, 3), (2, 4)]), {(1, 3): 7, (2, 4): 1})
    assert is_right_admissible(crossing) and is_left_admissible(crossing)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_admissibility_preserved_by_pi(n):
    for theta in weighted_universe(n, 5, 4):
        if is_right_admissible(theta):
            for i in range(1, n + 1):
                image = pi_right(theta, i)
                assert is_right_admissible(image) and w_length(image) == w_length(theta)
        if is_left_admissible(theta):
            for i in range(1, n + 1):
                image = pi_left(i, theta)
                assert is_left_admissible(image) and w_length(image) == w_length(theta)


def test_omega_examples():
    target = involution_from_cycles(5, [(1, 13), (5, 9)])
    for theta in (THETA1, THETA2, THETA3):
        assert omega_right(theta)[0] == target
    z = THETA1.base
    assert omega_right(weighted(z)) == (z, identity(5))


def _random_omega(theta, rng, right=True):
    g = identity(theta.n)
    while weight(theta):
        des = descents_right(theta) if right else descents_left(theta)
        assert des
        i = rng.choice(sorted(des))
        if right:
            theta, g = pi_right(theta, i), times_simple(g, i)
        else:
            theta, g = pi_left(i, theta), compose(simple(theta.n, i), g)
    return theta.base, (g if right else inverse(g))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_omega_independent_of_descent_order(n):
    rng = random.Random(n)
    for theta in weighted_universe(n, 2, 4):
        for _ in range(3):
            assert _random_omega(theta, rng) == omega_right(theta)
            assert _random_omega(theta, rng, right=False) == omega_left(theta)
        h = omega_right(theta)[1]
        assert length(h) == weight(theta)


@pytest.mark.parametrize("n", [3, 4])
def test_omega_star_relation(n):
    for theta in weighted_universe(n, 3, 3):
        w, g = omega_right(theta)
        assert omega_left(star_weighted(theta)) == (star(w), star(g))


def test_lambda_examples():
    assert lambda_right(Z4) == weighted(compose(simple(4, 1), simple(4, 3)), {(3, 4): 4, (1, 2): 2})
    assert lambda_left(Z4) == weighted(compose(simple(4, 1), simple(4, 3)), {(3, 4): 2, (1, 2): 4})


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lambda_independent_of_base_and_starred(n):
    for z in enumerate_involutions(n, 5):
        for m in range(-n, n + 1):
            assert lambda_right(z, base=m) == lambda_right(z)
            assert lambda_left(z, base=m) == lambda_left(z)
        assert lambda_left(star(z)) == star_weighted(lambda_right(z))


def test_lambda_fixes_matchings():
    for theta in enumerate_matchings(4, 3):
        assert lambda_right(theta) == theta == lambda_left(theta)


@given(involutions(max_hat=6))
def test_bijection_round_trip(z):
    for lam, om in ((lambda_right, omega_right), (lambda_left, omega_left)):
        theta = lam(z)
        assert is_matching(theta)
        assert om(theta)[0] == z
        assert (w_length(theta), w_abs_length(theta)) == (length(z), absolute_length(z))


def test_alpha_examples():
    assert alpha_R(Z4) == from_window(4, [3, 5, 2, 0])
    assert alpha_L(Z4) == from_window(4, [5, 3, 0, 2])
    assert alpha_R(identity(4)) == identity(4) == alpha_L(identity(4))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_alpha_is_g_of_lambda(n):
    for z in enumerate_involutions(n, 5):
        assert alpha_R(z) == omega_right(lambda_right(z))[1]
        assert alpha_L(z) == omega_left(lambda_left(z))[1]
        for m in range(-n, n + 1):
            assert alpha_R(z, base=m) == alpha_R(z)


def test_zeta():
    assert zeta_R(identity(4)) == identity(4)
    z8 = involution_from_cycles(8, [(1, 12), (7, 10), (3, 6)])
    y = zeta_R(z8)
    assert (length(y), absolute_length(y)) == (25, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_zeta_involutive(n):
    for z in enumerate_involutions(n, 5):
        assert zeta_R(zeta_R(z)) == z and zeta_L(zeta_L(z)) == z
        assert zeta_L(star(z)) == star(zeta_R(z))
        y = zeta_R(z)
        assert (length(y), absolute_length(y)) == (length(z), absolute_length(z))


def test_matching_counts():
    assert count_matchings(4, 1) == 4
    assert count_matchings(6, 0) == 1
    assert count_matchings(8, 3) == 16
    assert count_matchings(4, 3) == 0
    for n in range(2, 9):
        sizes = [len(m) for m in oracles.matchings(n)]
        for k in range(n // 2 + 1):
            assert count_matchings(n, k) == sizes.count(k)


def test_matching_enumeration():
    for n in range(2, 7):
        got = list(enumerate_matchings(n, 0))
        assert len(got) == len(oracles.matchings(n)) == len(set(got))
        assert {frozenset(i for i, _ in matching_edges(t)) for t in got} == set(oracles.matchings(n))


def test_prec_order_and_covers():
    a = weighted(simple(4, 1), {(1, 2): 1})
    b = weighted(simple(4, 1), {(1, 2): 3})
    assert prec_compare(a, b) and not prec_compare(b, a)
    assert not prec_compare(a, weighted(simple(4, 2), {(2, 3): 3}))
    assert precR_covers(identity(4)) == set()


@pytest.mark.parametrize("n", [3, 4])
def test_prec_covers(n):
    for z in enumerate_involutions(n, 5):
        ups = precR_covers(z)
        assert all(length(u) == length(z) + 2 and absolute_length(u) == absolute_length(z) for u in ups)
        assert precL_covers(star(z)) == {star(u) for u in ups}


@pytest.mark.parametrize("n", [3, 4])
def test_prec_minimal_elements_have_equal_lengths(n):
    covered = {u for z in enumerate_involutions(n, 5) for u in precR_covers(z)}
    for z in enumerate_involutions(n, 4):
        assert (z in covered) == (length(z) > absolute_length(z))


def test_omega_maps_prec_covers():
    # raising one weight by 1 gives a cover in M_n; omega_R sends it to a cover of the image
    for theta in enumerate_matchings(4, 3):
        z = omega_right(theta)[0]
        for a, b in canonical_cycles(theta.base):
            bigger = weighted(theta.base, dict(theta.weights) | {(a, b): theta.phi(a, b) + 1})
            assert omega_right(bigger)[0] in precR_covers(z)


def test_records():
    for theta in (THETA1, THETA2, THETA3):
        assert from_record(to_record(theta)) == theta
    assert from_record({"n": 4, "edges": [[1, 2], [3, 4]]}) == lambda_right(Z4)
    assert dumps([THETA1]).count("\n") == 1


def test_weighted_validation():
    with pytest.raises(ValueError):
        weighted(simple(4, 1), {(2, 3): 1})
    with pytest.raises(ValueError):
        WeightedInvolution(simple(4, 1), (((1, 2), -1),))
