import pytest

from idplab.fan import is_splitting
from idplab.fans2d import Fan2D, base_fans, convex_height_classes, enumerate_fans, search
from idplab.linalg import determinant

COMPASS = Fan2D(((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)))


def test_fan2d_validates_orientation():
    with pytest.raises(ValueError):
        Fan2D(((1, 0), (0, 1), (-1, -2)))  # det of last/first pair is 2


def test_self_intersections_sum_rule():
    # Sigma a_i = 3k - 12 for a smooth complete fan with k rays
    for f in base_fans(2) + [COMPASS]:
        k = f.num_rays
        assert sum(f.self_intersections()) == 3 * k - 12


def test_canonical_key_identifies_mirror_fans():
    fa = Fan2D(((1, 0), (0, 1), (-1, 2), (0, -1)))
    fb = Fan2D(((1, 0), (0, 1), (-1, -2), (0, -1)))
    assert fa.canonical_key() == fb.canonical_key()


def test_subdivision_inserts_sum():
    f = Fan2D(((1, 0), (0, 1), (-1, -1)))
    g = f.subdivide(0)
    assert g.rays == ((1, 0), (1, 1), (0, 1), (-1, -1))
    for i in range(4):
        assert determinant((g.rays[i], g.rays[(i + 1) % 4])) == 1


def test_enumeration_counts():
    assert len(enumerate_fans(3, 2)) == 1
    assert len(enumerate_fans(4, 2)) == 3
    assert len(enumerate_fans(5, 2)) == 3


def test_enumeration_reaches_compass_fan():
    keys = {f.canonical_key() for f in enumerate_fans(8, 2)}
    assert COMPASS.canonical_key() in keys


def test_every_enumerated_fan_is_valid():
    for k in (3, 4, 5, 6):
        for f in enumerate_fans(k, 2):
            fan = f.to_fan()
            assert len(fan.maximal_cones) == k
            if k == 4 and f.canonical_key() in {(-1, 0, 1, 0), (0, 0, 0, 0)}:
                assert is_splitting(fan)


def test_height_classes_are_convex_and_distinct():
    fan = Fan2D(((1, 0), (0, 1), (-1, -1))).to_fan()
    classes = convex_height_classes(fan, 2)
    # the projective-plane polytopes up to translation are the dilates 0..6
    assert len(classes) == 7


def test_search_small_all_pass():
    rep = search(3, 2)
    assert rep.all_pass
    assert rep.pairs_checked == 28  # 7 classes, unordered pairs with repeats
    rep = search(4, 1)
    assert rep.all_pass


def test_search_reports_failure_on_compass():
    rep = search(8, 2, stop_on_witness=True, fans=[COMPASS])
    assert not rep.all_pass
    rays, h, h2, witnesses = rep.failures[0]
    assert rays == COMPASS.rays
    assert witnesses


def test_search_instance_cap():
    with pytest.raises(ValueError, match="cap"):
        search(4, 2, max_instances=5)


def test_search_deterministic_across_workers():
    rep1 = search(4, 1, workers=1)
    rep2 = search(4, 1, workers=2)
    assert rep1.to_dict() == rep2.to_dict()
