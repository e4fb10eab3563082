"""Seeded property suites, one test per suite (shared with acceptance)."""

import suites


def test_order_axioms(rng):
    assert suites.suite_order_axioms(rng) > 0


def test_profile_is_permutation_minimum(rng):
    assert suites.suite_profile_is_permutation_minimum(rng) > 0


def test_support_comparison(rng):
    assert suites.suite_support_comparison(rng) > 0


def test_rebalancing_moves(rng):
    assert suites.suite_rebalancing_moves(rng) > 0


def test_min_variable_degree_pin(rng):
    assert suites.suite_min_variable_degree_pin(rng) > 0


def test_standard_monomials_divisible_by_min_variable(rng):
    assert suites.suite_standard_monomials_divisible_by_min_variable(rng) > 0


def test_quadratic_witness(rng):
    assert suites.suite_quadratic_witness(rng) > 0


def test_toric_binomial_closure(rng):
    assert suites.suite_toric_binomial_closure(rng) > 0


def test_reduced_basis_uniqueness(rng):
    assert suites.suite_reduced_basis_uniqueness(rng) > 0
