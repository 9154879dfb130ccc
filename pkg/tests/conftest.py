import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

acceptance_results: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_results:
        terminalreporter.section("acceptance criteria")
        for name, ok in acceptance_results:
            terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}")
