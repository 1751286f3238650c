import json

import pytest

from eulerlab import identity_engine as engine
from eulerlab.core_numerics import integrate_unit_square
from eulerlab.errors import DomainError
from eulerlab.identity_engine import (
    SkippedPoint,
    VerificationReport,
    all_passed,
    grid,
    list_identities,
    to_csv,
    to_json,
    verify,
    verify_all,
)
from eulerlab.integral_forms import (
    I_minus,
    SignedKernel,
    integrand_2d,
    termwise_series_oracle,
)

CORE_OPS_PREFIX = "core_numerics."


class TestRegistry:
    def test_sixteen_entries_in_stable_order(self):
        ids = [ident.id for ident in list_identities()]
        assert ids == [
            "eq2", "eq3", "eq4", "eq6", "eq7", "eq9", "eq10_limit", "eq11",
            "eq12", "eq14", "eq15", "eq16", "eq17", "eq18", "wallis", "stirling",
        ]
        assert ids == [ident.id for ident in list_identities()]

    def test_half_plane_domains(self):
        by_id = {ident.id: ident for ident in list_identities()}
        assert by_id["eq15"].s_domain == -3.0
        assert by_id["eq12"].s_domain == -2.0
        assert by_id["eq18"].s_domain == 0.0

    def test_exclusions_confined_to_eq12_eq15(self):
        for ident in list_identities():
            if ident.excluded_points:
                assert ident.id in ("eq12", "eq15")
                assert set(ident.excluded_points) <= {-1 + 0j, -2 + 0j}

    def test_route_independence_metadata(self):
        for ident in list_identities():
            if ident.self_check:
                continue
            shared = set(ident.lhs_ops) & set(ident.rhs_ops)
            assert all(op.startswith(CORE_OPS_PREFIX) for op in shared), ident.id


class TestVerify:
    def test_eq3_passes_at_tight_tolerance(self):
        report = verify("eq3", tol=1e-9)
        assert report.passed
        assert report.abs_err == abs(report.lhs - report.rhs)
        assert report.tol == 1e-9

    def test_eq15_midplane_point(self):
        report = verify("eq15", s=0.5)
        assert report.passed
        assert report.abs_err <= 1e-8

    def test_eq15_beyond_eq12_domain(self):
        report = verify("eq15", s=-2.5 + 0j)
        assert report.passed

    def test_eq16_recurrence_point(self):
        report = verify("eq16", s=2.5)
        assert report.passed
        assert report.abs_err <= 1e-12

    def test_unknown_identity(self):
        with pytest.raises(ValueError, match="unknown identity"):
            verify("eq99")

    def test_parameter_arity(self):
        with pytest.raises(ValueError, match="requires a parameter"):
            verify("eq15")
        with pytest.raises(ValueError, match="not parameterized"):
            verify("eq2", s=1.0)

    def test_domain_violation(self):
        with pytest.raises(DomainError, match="outside"):
            verify("eq15", s=-3.5)

    def test_excluded_point(self):
        with pytest.raises(DomainError, match="exclusion"):
            verify("eq12", s=-1.0)

    def test_deterministic_reports(self):
        a = verify("eq15", s=0.5 + 1j)
        b = verify("eq15", s=0.5 + 1j)
        assert (a.lhs, a.rhs, a.abs_err, a.rel_err, a.passed) == (
            b.lhs, b.rhs, b.abs_err, b.rel_err, b.passed
        )


class TestGrid:
    def test_skips_excluded_point(self):
        entries = grid("eq12", (-1.5, 1.0, 0.5), (0.0, 0.0, 1.0))
        skipped = [e for e in entries if isinstance(e, SkippedPoint)]
        assert len(skipped) == 1
        assert skipped[0].s == -1 + 0j
        assert all(e.passed for e in entries if isinstance(e, VerificationReport))

    def test_row_major_re_fastest(self):
        entries = grid("eq18", (1.0, 2.0, 1.0), (0.0, 1.0, 1.0))
        points = [e.s for e in entries]
        assert points == [1 + 0j, 2 + 0j, 1 + 1j, 2 + 1j]

    def test_domain_points_marked_skipped(self):
        entries = grid("eq12", (-2.5, -1.5, 1.0), (0.0, 0.0, 1.0))
        assert isinstance(entries[0], SkippedPoint)
        assert "outside" in entries[0].reason

    def test_empty_surviving_set(self):
        entries = grid("eq12", (-5.0, -3.0, 1.0), (0.0, 0.0, 1.0))
        assert all(isinstance(e, SkippedPoint) for e in entries)

    def test_nonparameterized_rejected(self):
        with pytest.raises(ValueError, match="not parameterized"):
            grid("eq2", (0.0, 1.0, 1.0), (0.0, 0.0, 1.0))

    def test_skip_soundness(self):
        entries = grid("eq15", (-3.5, -0.5, 0.25), (0.0, 0.0, 1.0))
        for entry in entries:
            if isinstance(entry, VerificationReport):
                assert entry.s.real > -3.0
                assert abs(entry.s - (-1.0)) >= engine.EXCLUSION_RADIUS
                assert abs(entry.s - (-2.0)) >= engine.EXCLUSION_RADIUS

    def test_thread_cap_env(self, monkeypatch):
        monkeypatch.setenv("EULERLAB_MAX_THREADS", "4")
        parallel = grid("eq18", (1.0, 3.0, 0.5), (0.0, 1.0, 1.0))
        monkeypatch.delenv("EULERLAB_MAX_THREADS")
        serial = grid("eq18", (1.0, 3.0, 0.5), (0.0, 1.0, 1.0))
        assert [e.s for e in parallel] == [e.s for e in serial]
        assert [e.lhs for e in parallel if isinstance(e, VerificationReport)] == [
            e.lhs for e in serial if isinstance(e, VerificationReport)
        ]


@pytest.fixture(scope="module")
def entries():
    return verify_all()


class TestVerifyAll:
    def test_every_report_passes(self, entries):
        assert all_passed(entries)
        failures = [
            e for e in entries if isinstance(e, VerificationReport) and not e.passed
        ]
        assert failures == []

    def test_report_count(self, entries):
        assert len(entries) >= 16
        tokens = {e.id for e in entries}
        assert tokens == {ident.id for ident in list_identities()}

    def test_tol_override_fails_limit_route(self):
        report = verify("eq10_limit", tol=1e-12)
        assert not report.passed

    def test_unknown_override_rejected(self):
        with pytest.raises(ValueError, match="unknown identity"):
            verify_all({"eq99": 1e-6})

    def test_serialization_byte_stable_across_runs(self, entries):
        again = verify_all()
        assert to_json(entries) == to_json(again)
        assert to_csv(entries) == to_csv(again)


class TestThreeRouteConsistency:
    def test_euler_constant_routes_agree_pairwise(self, gamma_reference):
        quadrature = I_minus(-1.0, 1e-9).value
        series = termwise_series_oracle(SignedKernel.MINUS, 10**6).value
        square = integrate_unit_square(
            lambda x, y: integrand_2d(SignedKernel.MINUS, -1.0, x, y), 1e-6
        ).value
        for a, b in [(quadrature, series), (quadrature, square), (series, square)]:
            assert abs(a - b) <= 2e-5
        assert abs(quadrature - gamma_reference) <= 1e-9


class TestSerialization:
    def test_json_round_trip(self):
        entries = [verify("eq3"), verify("eq15", s=0.5 + 1j)]
        payload = json.loads(to_json(entries))
        assert len(payload) == 2
        first = payload[0]
        assert first["id"] == "eq3"
        assert first["s"] is None
        assert first["lhs"]["re"] == entries[0].lhs.real
        assert first["pass"] is True
        second = payload[1]
        assert second["s"] == {"re": 0.5, "im": 1.0}
        assert second["abs_err"] == entries[1].abs_err

    def test_json_byte_stable(self):
        a = to_json([verify("eq3"), verify("eq16", s=2.5)])
        b = to_json([verify("eq3"), verify("eq16", s=2.5)])
        assert a == b

    def test_csv_round_trip(self):
        entries = grid("eq12", (-1.5, 0.0, 0.5), (0.0, 0.0, 1.0))
        text = to_csv(entries)
        lines = text.strip().split("\n")
        assert lines[0] == engine.CSV_HEADER
        rows = [line.split(",") for line in lines[1:]]
        reports = [e for e in entries if isinstance(e, VerificationReport)]
        data_rows = [r for r in rows if r[-1] != "skipped"]
        assert len(data_rows) == len(reports)
        for row, report in zip(data_rows, reports):
            assert row[0] == report.id
            assert float(row[1]) == report.s.real
            assert float(row[3]) == report.lhs.real
            assert float(row[7]) == report.abs_err
            assert row[10] == ("true" if report.passed else "false")
        skip_rows = [r for r in rows if r[-1] == "skipped"]
        assert len(skip_rows) == 1 and float(skip_rows[0][1]) == -1.0
