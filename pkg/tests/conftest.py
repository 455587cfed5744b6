import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                rows.append((int(m.group(1)), m.group(2), outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n, name, outcome in sorted(rows):
        terminalreporter.write_line(f"criterion {n:02d}: {'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
