import math

import pytest

import zetastrips as zs


def test_zeta_values():
    value, bound = zs.eval_zeta(2.0, 0.0)
    assert abs(value - math.pi**2 / 6) < 1e-12
    assert bound < 1e-10
    assert abs(zs.eval_zeta(0.5, 14.134725)[0]) < 1e-6
    assert zs.phase(2.0, 0.0) == 0.0


def test_hardy_z_matches_zeta_modulus():
    for t in (20.0, 123.4, 999.0):
        assert abs(abs(zs.hardy_z(t)) - abs(zs.eval_zeta(0.5, t)[0])) < 1e-9


def test_first_zeros():
    zeros = zs.find_critical_zeros(10.0, 30.0)
    assert [o for o, _ in zeros] == [1, 2, 3]
    assert [round(t, 6) for _, t in zeros] == [14.134725, 21.02204, 25.010858]


def test_asymptote_and_fit():
    assert round(zs.strip_asymptote(1), 5) == 9.06472
    fit = zs.linfit([1.0, 2.0, 3.0, 4.0], [2.0, 4.0, 6.0, 8.0])
    assert fit["slope"] == pytest.approx(2.0)


def test_errors_map_to_python():
    with pytest.raises(zs.ZetaError, match="PoleError"):
        zs.eval_zeta(1.0, 0.0)
    with pytest.raises(zs.ZetaError, match="DomainError"):
        zs.count_zeros_rvm(5.0)


def test_trace_and_classify():
    traces = zs.trace_contours(1)
    assert [t["terminus"] for t in traces] == ["LeftBoundary", "Zero", "LeftBoundary"]
    assert traces[1]["zero_ordinal"] == 1
    assert zs.classify_zero_contour(14.134725142) == "RightInfinity"


def test_run(tmp_path):
    report = zs.run(m_max=1, output_dir=str(tmp_path), worker_count=1)
    assert report["primary_score"]["mean"] == 0.5
    assert (tmp_path / "strips.csv").exists()
