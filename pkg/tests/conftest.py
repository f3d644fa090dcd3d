import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=80, deadline=None)
settings.load_profile("default")


CRITERIA = {}


def record(number, passed, detail):
    CRITERIA[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        passed, detail = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if passed else 'FAIL'}  {detail}")
