import contextlib
import functools

import pytest

from polyneigh import faces, hull

ACCEPTANCE = {}


@contextlib.contextmanager
def criterion(number, title):
    """Record a pass/fail line for an acceptance criterion."""
    try:
        yield
    except BaseException:
        ACCEPTANCE[number] = (False, title)
        raise
    ACCEPTANCE[number] = (True, title)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")


@functools.lru_cache(maxsize=None)
def analyze(p):
    fs = hull.enumerate_facets(p)
    return fs, faces.all_faces(fs, p)


@pytest.fixture
def analyzed():
    return analyze
