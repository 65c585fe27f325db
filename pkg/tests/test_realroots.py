import random

from witrees.realroots import distinct_real_roots, real_rooted


def _mul_linear(poly, a):
    """poly * (t + a) over the integers."""
    out = [0] + poly
    for i in range(len(poly)):
        out[i] += a * poly[i]
    return out


def test_known_small_cases():
    assert real_rooted([3, 3]).all_real
    assert real_rooted([5]).all_real and real_rooted([5]).degree == 0
    assert not real_rooted([1, 0, 1]).all_real  # t^2 + 1
    assert not real_rooted([1, 1, 1]).all_real  # negative discriminant
    assert real_rooted([1, 2, 1]).all_real  # (t+1)^2
    assert real_rooted([0, 0, 2, 2]).all_real  # t^2 factor stripped
    assert real_rooted([-1, 0, 1]).all_real  # (t-1)(t+1)


def test_zero_polynomial_is_vacuous():
    r = real_rooted([0, 0, 0])
    assert r.vacuous and r.all_real


def test_stripped_power_reported():
    r = real_rooted([0, 0, 0, 7])
    assert r.stripped_power == 3 and r.degree == 0 and r.all_real


def test_distinct_root_counts():
    assert distinct_real_roots([0, 1]) == 1
    assert distinct_real_roots([-1, 0, 1]) == 2
    assert distinct_real_roots([1, 2, 1]) == 1  # double root counted once
    assert distinct_real_roots([1, 0, 1]) == 0
    assert distinct_real_roots([0, -1, 0, 1]) == 3  # t(t-1)(t+1)
    assert distinct_real_roots([6]) == 0


def test_factorization_oracle():
    rng = random.Random(99)
    for _ in range(250):
        poly = [rng.choice([1, 2, 3])]
        deg = rng.randint(1, 6)
        for _ in range(deg):
            poly = _mul_linear(poly, rng.randint(-6, 6))
        rep = real_rooted(poly)
        assert rep.all_real, poly
        assert rep.distinct_roots <= rep.degree
        # ... and an irreducible quadratic factor must break the verdict
        c = rng.randint(1, 5)
        lifted = [0, 0] + poly
        for i in range(len(poly)):
            lifted[i] += c * poly[i]
        assert not real_rooted(lifted).all_real, (poly, c)


def test_report_str_mentions_verdict():
    assert "real-rooted" in str(real_rooted([3, 3]))
    assert "NOT" in str(real_rooted([1, 0, 1]))
    assert "vacuously" in str(real_rooted([]))
