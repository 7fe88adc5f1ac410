import numpy as np
import pytest

import nlft


def gaussian(n=64, extent=20.0, amplitude=1.0):
    zl = nlft.position_lattice(n, extent / n)
    x = np.asarray(zl.axis)
    x1, x2 = np.meshgrid(x, x)
    return nlft.Field(amplitude * np.exp(-(x1**2 + x2**2)) + 0j, zl.spacing)


def test_field_round_trip():
    q = gaussian()
    arr = q.numpy()
    assert arr.shape == (64, 64)
    assert np.isclose(q.l2(), np.sqrt(np.pi / 2), rtol=1e-12)
    assert np.array_equal(nlft.Field(arr, q.lattice.spacing).numpy(), arr)


def test_gaussian_transform():
    q = gaussian()
    kl = nlft.spectral_lattice(32, np.pi / 20)
    qh = nlft.ek_transform(q, kl).numpy()
    k = np.asarray(kl.axis)
    k1, k2 = np.meshgrid(k, k)
    assert np.allclose(qh, 1j * np.exp(-(k1**2 + k2**2)), atol=1e-12)


def test_forward_is_nearly_isometric():
    q = gaussian(amplitude=0.5)
    s = nlft.forward(q, nlft.spectral_lattice(48, np.pi / 20))
    assert s.holes == 0
    assert abs(s.l2_norm / s.source_norm - 1) < 1e-3


def test_errors_are_python_exceptions():
    q = gaussian()
    with pytest.raises(ValueError):
        nlft.ek_transform(q, nlft.spectral_lattice(32, 0.25))
    with pytest.raises(ValueError):
        nlft.Field(np.zeros((4, 6), complex), 0.1)
    with pytest.raises(ValueError):
        nlft.evolve_direct(q, 0.1, 1.0, nlft.spectral_lattice(64, np.pi / 20))


def test_direct_solver_conserves_mass():
    q = gaussian(amplitude=2.0)
    qt, times, mass = nlft.evolve_direct(q, 0.05, 5e-3, nlft.spectral_lattice(32, np.pi / 20))
    assert abs(mass[-1] / mass[0] - 1) < 1e-12
    assert qt.n == 64


def test_io(tmp_path):
    q = gaussian(n=16)
    nlft.write_field(tmp_path / "q.nlf2", q)
    back = nlft.read_field(tmp_path / "q.nlf2")
    assert np.array_equal(back.numpy(), q.numpy())
    (tmp_path / "bad.nlf2").write_bytes(b"garbage")
    with pytest.raises(IOError):
        nlft.read_field(tmp_path / "bad.nlf2")
