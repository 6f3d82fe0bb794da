from hypothesis import settings

settings.register_profile("repro", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("repro")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(LINES):
            terminalreporter.write_line(LINES[key])
