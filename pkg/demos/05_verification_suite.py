"""A reduced run of the verification suite with its traceability report.

The full default configuration (all gauges, dimensions 2..4, every valid
i) is what `orlicz-radii verify` and the acceptance tests run; here a
small slice keeps the demo quick.

Run:  python3 demos/05_verification_suite.py
"""
from orlicz_radii import SuiteConfig, run_suite
from orlicz_radii.phi import make_poly_phi, make_power_phi
from orlicz_radii.verify import format_report

config = SuiteConfig(
    dims=(2, 3),
    phis=[make_power_phi(2.0), make_poly_phi(0.5, 0.5)],
    phis_random=[make_power_phi(2.0)],
    claims=("thm-outer-eq", "thm-inner-eq", "diff-eq", "prop-rev",
            "lemma-1.4", "lp-constant", "selfsum"),
)
report = run_suite(config)

print(format_report(report, config).split("[machine]")[0])
print(f"exit code: {report.exit_code}  ({len(report.results)} claims, "
      f"{len(report.failures)} not passing, {report.elapsed:.1f}s)")
