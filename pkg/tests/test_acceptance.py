"""One test per acceptance criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line; the lines are
also collected and repeated in the terminal summary.  Run this file directly
(``python3 tests/test_acceptance.py``) to get only the manifest.
"""
import pytest

from quandlering.reproduce import CHECKS, run_checks

LINES: dict[int, str] = {}
_cache: dict[int, object] = {}


def outcome(key: int):
    if key not in _cache:
        (_cache[key],) = run_checks([str(key)])
    return _cache[key]


def line_for(result) -> str:
    first = result.details[0] if result.details else ""
    return f"criterion {result.key:2d}: {result.status:4s} {result.group}: {result.title} | {first}"


@pytest.mark.parametrize("key", [k for k, *_ in CHECKS], ids=lambda k: f"criterion_{k:02d}")
def test_criterion(key):
    r = outcome(key)
    LINES[key] = line_for(r)
    print(LINES[key])
    assert r.passed, "\n".join(d for d in r.details if "\n" not in d)


if __name__ == "__main__":
    for r in run_checks():
        print(line_for(r))
