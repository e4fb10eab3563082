"""Configurations, toric kernels, Veronese layers, and the full pipeline."""

from fractions import Fraction

import pytest

from veronese_gb.errors import DomainError, NotAConfigurationError
from veronese_gb.polyring import base_ring, parse_polynomial, veronese_ring
from veronese_gb.toric import (Configuration, certify_grading, point_rank,
                               toric_groebner_basis, toric_ideal,
                               veronese_layer, verify_veronese_toric)
from veronese_gb.veronese import pullback_homogeneous_ideal

CURVE = ((1, 0), (1, 1), (1, 2))


def test_certify_grading_examples():
    assert certify_grading(CURVE) == (Fraction(1), Fraction(0))
    with pytest.raises(NotAConfigurationError):
        certify_grading([(1,), (2,)])
    assert certify_grading([(5,)]) == (Fraction(1, 5),)
    with pytest.raises(DomainError):
        certify_grading([])


def test_configuration_checks_supplied_grading():
    cfg = Configuration.from_points(CURVE, grading=(1, 0))
    assert cfg.grading == (Fraction(1), Fraction(0))
    with pytest.raises(NotAConfigurationError):
        Configuration.from_points(CURVE, grading=(0, 1))


def test_toric_ideal_rational_normal_curve():
    cfg = Configuration.from_points(CURVE)
    ideal = toric_ideal(cfg)
    S = base_ring(3)
    assert ideal.generators == (parse_polynomial("y2^2 - y1*y3", S),)


def test_toric_ideal_independent_points_is_zero():
    cfg = Configuration.from_points([(1, 0), (0, 1)])
    assert toric_ideal(cfg).generators == ()


def test_toric_ideal_repeated_point_gives_linear_binomial():
    cfg = Configuration.from_points([(1, 0), (1, 0), (1, 2)])
    ideal = toric_ideal(cfg)
    S = base_ring(3)
    assert parse_polynomial("y1 - y2", S) in set(ideal.generators) or \
        parse_polynomial("y2 - y1", S) in set(ideal.generators)


def test_toric_ideal_negative_coordinates():
    # shifted curve through negative exponents exercises the inverse-product path
    cfg = Configuration.from_points([(1, -1), (1, 0), (1, 1)])
    ideal = toric_ideal(cfg)
    S = base_ring(3)
    assert ideal.generators == (parse_polynomial("y2^2 - y1*y3", S),)


def test_toric_gb_elements_are_binomials_with_equal_images(rng):
    for _ in range(5):
        ks = sorted(rng.sample(range(0, 7), 3))
        cfg = Configuration.from_points([(1, k) for k in ks])
        gb = toric_ideal(cfg).generators
        for g in gb:
            assert g.is_binomial_pm1()
            images = {cfg.image_exps(e) for e in g.terms}
            assert len(images) == 1
            degs = {sum(e) for e in g.terms}
            assert len(degs) == 1  # homogeneous under the grading


def test_veronese_layer_example():
    cfg = Configuration.from_points(CURVE)
    layer = veronese_layer(cfg, 2)
    assert sorted(layer.configuration.points) == [
        (2, 0), (2, 1), (2, 2), (2, 2), (2, 3), (2, 4)]
    assert len(layer.unique_points) == 5
    assert layer.configuration.grading == (Fraction(1, 2), Fraction(0))
    assert len(layer.duplicate_pairs) == 1

    assert veronese_layer(cfg, 1).configuration.points == CURVE

    single = Configuration.from_points([(3,)])
    assert veronese_layer(single, 4).configuration.points == ((12,),)


def test_rank_is_preserved_by_layers():
    for pts in (CURVE, ((1, 0), (0, 1)), ((1, 0, 2), (1, 1, 1), (1, 2, 0))):
        cfg = Configuration.from_points(pts)
        r = point_rank(cfg.points)
        for d in (1, 2, 3):
            assert point_rank(veronese_layer(cfg, d).configuration.points) == r


def test_layer_kernel_equals_pullback():
    # direct elimination on the layer's points against the pullback pipeline
    cfg = Configuration.from_points(CURVE)
    ideal = toric_ideal(cfg)
    from veronese_gb.groebner import find_weight_vector
    omega = find_weight_vector(ideal, ideal.ring.default_order())
    d = 2
    res = pullback_homogeneous_ideal(ideal, d, omega)
    layer = veronese_layer(cfg, d)
    direct = toric_groebner_basis(layer.configuration.points,
                                  ring=veronese_ring(cfg.size, d),
                                  order=res.order)
    assert tuple(direct) == tuple(res.reduced)


def test_verify_pipeline_independent_points():
    cfg = Configuration.from_points([(1, 0), (0, 1)])
    cert = verify_veronese_toric(cfg, 2)
    assert cert.ok and cert.all_binomial and cert.max_degree <= 2


def test_verify_pipeline_identity_degree():
    cfg = Configuration.from_points(CURVE)
    cert = verify_veronese_toric(cfg, 1)
    assert not cert.meets_bound      # the computed bound exceeds 1
    assert cert.all_binomial and cert.images_equal
    assert cert.max_degree == 2      # this kernel happens to be quadratic already


def test_verify_pipeline_curve_small_degree():
    cfg = Configuration.from_points(CURVE)
    cert = verify_veronese_toric(cfg, 2)
    assert cert.all_binomial and cert.images_equal and cert.duplicates_linear
    assert cert.pullback.certificate["initial_matches_monomial_pullback"]
