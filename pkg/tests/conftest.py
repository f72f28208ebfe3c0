"""Shared test infrastructure: acceptance-criterion result collection.

Each acceptance test registers exactly one PASS/FAIL line; the terminal
summary hook prints them after the run so the verdicts survive pytest's
output capture.
"""

criterion_results = []


def record(number: int, passed: bool, description: str) -> None:
    criterion_results.append((number, passed, description))


def pytest_terminal_summary(terminalreporter):
    if not criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, description in sorted(criterion_results):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"[criterion {number:02d}] {verdict} - {description}")
