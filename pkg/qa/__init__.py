"""
qtau verification suites

Replays the worked examples and structural statements about one-point
extensions against the fixture algebras, plus sampled property checks.
Results are written as JSON and Markdown reports.
"""

__version__ = "1.0.0"
