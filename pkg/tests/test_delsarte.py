import math
from fractions import Fraction as Q

import numpy as np
import pytest

from poscert.delsarte import (
    BoundCertificate,
    CertificateRejection,
    LpInfeasible,
    SphericalCode,
    blichfeldt_density_bound,
    classical_upper_bounds,
    code_upper_bound_check,
    cohn_zhao_density_bound,
    hermite_gamma_upper,
    known_certificate,
    lp_bound,
    verify_certificate,
)
from poscert.polycore import Poly


def test_known_certificates():
    c8 = known_certificate("paper-8")
    assert c8.bound == 240 and c8.dim == 8 and c8.cos_angle == Q(1, 2)
    c24 = known_certificate("paper-24")
    assert c24.bound == 196560 and c24.dim == 24
    with pytest.raises(KeyError):
        known_certificate("paper-7")


def test_antipodal_pair_certificate():
    for n in (2, 5, 9):
        cert = verify_certificate(n, Q(-1), Poly([1, 1]))
        assert cert.bound == 2
        assert cert.coeffs.coeffs == (1, 1)


def test_rejection_positivity():
    with pytest.raises(CertificateRejection) as exc:
        verify_certificate(4, Q(1, 2), Poly([1]))
    assert exc.value.kind == "positivity_violation"


def test_rejection_negative_coefficient():
    # 1 - t has Gegenbauer coefficients (1, -1)
    with pytest.raises(CertificateRejection) as exc:
        verify_certificate(3, Q(-1, 2), Poly([1, -1]))
    assert exc.value.kind == "negative_coefficient"
    assert "k=1" in str(exc.value)


def test_rejection_nonpositive_c0():
    with pytest.raises(CertificateRejection) as exc:
        verify_certificate(3, Q(-1, 2), Poly([0, 1]))
    assert exc.value.kind == "nonpositive_c0"


def test_verify_deterministic():
    f = known_certificate("paper-8").poly
    b1 = verify_certificate(8, Q(1, 2), f).bound
    b2 = verify_certificate(8, Q(1, 2), f).bound
    assert b1 == b2 == Q(240)


def test_certificate_json_round_trip():
    c = known_certificate("paper-8")
    d = c.to_json_dict()
    assert d["bound"] == "240"
    assert d["cos_angle"] == "1/2"
    back = BoundCertificate.from_json_dict(d)
    assert back.bound == c.bound
    assert back.coeffs == c.coeffs


def test_lp_bound_degree_one_exact():
    for n in (3, 5, 8):
        res = lp_bound(n, Q(-1, 2), 1, grid=200)
        assert abs(res.float_bound - 3.0) < 1e-9
        assert res.certificate is not None
        assert res.certificate.bound == 3


def test_lp_bound_infeasible():
    with pytest.raises(LpInfeasible):
        lp_bound(5, Q(1, 2), 0, grid=100)
    with pytest.raises(LpInfeasible):
        lp_bound(8, Q(1, 2), 1, grid=100)  # degree 1 cannot be <= 0 at t = 0


def test_lp_bound_kissing_8_small_grid():
    res = lp_bound(8, Q(1, 2), 6, grid=500)
    assert abs(res.float_bound - 240) < 0.5
    assert res.certificate is not None
    assert 240 <= res.certificate.bound <= 241
    # repair only weakens: verified bound >= float optimum (up to 1e-6 rel)
    assert float(res.certificate.bound) >= res.float_bound * (1 - 1e-6)


def test_lp_bound_monotone_in_degree():
    prev = math.inf
    for d in range(1, 5):
        res = lp_bound(4, Q(-1, 2), d, grid=200)
        assert res.float_bound <= prev + 1e-9
        prev = res.float_bound


def test_lp_bound_deterministic():
    a = lp_bound(6, Q(-1, 2), 3, grid=300)
    b = lp_bound(6, Q(-1, 2), 3, grid=300)
    assert a.float_bound == b.float_bound
    assert np.array_equal(a.float_coeffs, b.float_coeffs)
    assert a.certificate.bound == b.certificate.bound


def square_code():
    pts = np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], dtype=float)
    return SphericalCode.from_array(pts)


def right_angle_certificate():
    # f = t^2 + t is <= 0 on [-1, 0]; for n = 2 its coefficients are
    # (1/2, 1, 1/2) with bound f(1)/c_0 = 4 = A(2, pi/2).
    return verify_certificate(2, Q(0), Poly([0, 1, 1]))


def test_code_upper_bound_trivial_pair():
    cert = verify_certificate(3, Q(-1), Poly([1, 1]))
    code = SphericalCode.from_array(np.array([[1.0, 0, 0], [-1.0, 0, 0]]))
    assert code_upper_bound_check(code, cert)


def test_code_upper_bound_square():
    cert = right_angle_certificate()
    assert cert.bound == 4
    assert code_upper_bound_check(square_code(), cert)


def test_code_upper_bound_e8_equality():
    from poscert.lattice import e8_coordinate_lattice, short_vectors

    lat = e8_coordinate_lattice()
    coords = short_vectors(lat, 2)
    assert len(coords) == 240
    pts = lat.embed(coords) / math.sqrt(2.0)
    code = SphericalCode.from_array(pts)
    assert code.min_cosine <= 0.5 + 1e-12
    cert = known_certificate("paper-8")
    assert code_upper_bound_check(code, cert)
    assert len(code) == cert.bound == 240


def test_code_upper_bound_mismatches():
    cert = known_certificate("paper-8")
    code3 = SphericalCode.from_array(np.eye(3))
    with pytest.raises(ValueError):
        code_upper_bound_check(code3, cert)
    tight = SphericalCode.from_array(np.array([[1.0, 0], [0.9, math.sqrt(1 - 0.81)]]))
    with pytest.raises(ValueError):
        code_upper_bound_check(tight, right_angle_certificate())


def test_code_validation():
    with pytest.raises(ValueError):
        SphericalCode.from_array(np.array([[1.0, 1.0]]))


def test_certificate_soundness_randomized():
    # random codes respecting each certificate angle never exceed the bound;
    # 10^4 trials spread over dimensions 2..8
    rng = np.random.default_rng(42)
    certs = [
        verify_certificate(n, Q(-1), Poly([1, 1])) for n in range(2, 9)
    ] + [right_angle_certificate(), known_certificate("paper-8")]
    for trial in range(10_000):
        cert = certs[trial % len(certs)]
        n, s = cert.dim, float(cert.cos_angle)
        if s == -1.0:  # antipodal: the second point is forced
            p = rng.standard_normal(n)
            p /= np.linalg.norm(p)
            pts = [p, -p]
        else:
            pts = []
            cands = rng.standard_normal((3 * int(min(cert.bound, 24)), n))
            cands /= np.linalg.norm(cands, axis=1, keepdims=True)
            for cand in cands:
                if not pts or (np.asarray(pts) @ cand).max() <= s + 1e-12:
                    pts.append(cand)
        code = SphericalCode.from_array(np.array(pts))
        assert code_upper_bound_check(code, cert)


def test_classical_bounds():
    assert blichfeldt_density_bound(8) == pytest.approx(0.3125)
    assert hermite_gamma_upper(8) == pytest.approx((4 / 3) ** 3.5)
    assert hermite_gamma_upper(8) > 2.0  # strictly above the true gamma_8
    assert cohn_zhao_density_bound(8, math.pi / 3, 240) == pytest.approx(0.9375)
    with pytest.raises(ValueError):
        cohn_zhao_density_bound(8, 0.5, 240)
    rep = classical_upper_bounds(8, theta=math.pi / 3, code_bound=240)
    assert rep["cohn_zhao"] == pytest.approx(0.9375)
    rep = classical_upper_bounds(4)
    assert "cohn_zhao" not in rep
