import pytest
from mpmath import cos, mpf, pi, sqrt

from hypvol.packing import PackingBound, borbounds_constants, boroczky_min_angle, max_packing_radius
from oracle import inside


def test_two_disks_angle_pi_over_6():
    assert inside(boroczky_min_angle(2), pi / 6)


def test_four_disks_angle_2pi_over_9():
    assert inside(boroczky_min_angle(4), 2 * pi / 9)


@pytest.mark.parametrize("n,genus", [(2, 2), (3, 2), (4, 2), (5, 3), (10, 4)])
def test_radius_matches_law_of_cosines(n, genus):
    pb = max_packing_radius(n, genus)
    a = n * pi / (3 * n + 6 * (genus - 1))
    cosh_2r = cos(a) / (1 - cos(a))
    assert inside(pb.cosh_R_max, sqrt((cosh_2r + 1) / 2))
    # the density bound is saturated at the returned radius
    assert pb.density_gap().contains(0.0)
    assert isinstance(pb, PackingBound)


def test_four_disks_radius():
    # cosh R'' = 1/sqrt(2(1 - cos 2pi/9))
    assert inside(max_packing_radius(4).cosh_R_max, 1 / sqrt(2 * (1 - cos(2 * pi / 9))))


def test_borbounds():
    d11, l1 = borbounds_constants()
    assert inside(d11, 3 + 2 * sqrt(mpf(3)))
    assert inside(l1, (3 + sqrt(mpf(3))) / 4)


def test_invalid_n():
    with pytest.raises(ValueError):
        max_packing_radius(1)
    with pytest.raises(ValueError):
        boroczky_min_angle(0)
