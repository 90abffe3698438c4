import pytest

import oracles

mp = pytest.importorskip("mpmath")


@pytest.fixture(autouse=True)
def _dps():
    with mp.workdps(30):
        yield


def _cubic(q, r=25):
    w = mp.exp(2j * mp.pi / 3)
    third = mp.mpf(1) / 3
    a = b = c = 0
    for k in range(-r, r + 1):
        for l in range(-r, r + 1):
            e = k * k + k * l + l * l
            a += q**e
            b += w ** (k - l) * q**e
            c += q ** ((k + third) ** 2 + (k + third) * (l + third) + (l + third) ** 2)
    return a, mp.re(b), c


def test_theta_oracles():
    q = mp.exp(-mp.pi)
    assert float(mp.jtheta(3, 0, q)) == pytest.approx(oracles.THETA3_NULL_T1, rel=1e-16)
    assert float(mp.jtheta(3, 0, q) ** 2) == pytest.approx(oracles.THETA3_NULL_T1_SQ, rel=1e-16)
    assert float(mp.jtheta(4, 0, q) ** 2) == pytest.approx(oracles.GAUSS_CONSTANT, rel=1e-16)


def test_elliptic_oracle():
    assert float(mp.ellipk(mp.mpf(1) / 2)) == pytest.approx(oracles.ELLIPTIC_K_HALF, rel=1e-16)


def test_hex_oracles():
    a, b, c = _cubic(mp.exp(-mp.pi * 2 / mp.sqrt(3)))
    assert float(b) == pytest.approx(oracles.HEX_MIN_T1, rel=1e-16)
    assert float(c) == pytest.approx(oracles.HEX_MIN_T1, rel=1e-16)
    assert float(a) == pytest.approx(oracles.HEX_MAX_T1, rel=1e-16)


def test_gamma_oracles():
    g = mp.gamma
    third, sixth = mp.mpf(1) / 3, mp.mpf(1) / 6
    assert float(g(third) * g(5 * sixth) / g(sixth)) == pytest.approx(oracles.LANDAU_UPPER, rel=1e-16)
    assert float(g(0.5) * g(0.75) / g(0.25)) == pytest.approx(oracles.LEMNISCATE_2, rel=1e-16)
