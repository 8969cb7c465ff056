from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100, derandomize=True)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        title, ok, elapsed, limit, note = RESULTS[k]
        line = f"criterion {k}: {'PASS' if ok else 'FAIL'} {elapsed:6.2f}s / {limit}s  {title} {note}"
        terminalreporter.write_line(line.rstrip())
