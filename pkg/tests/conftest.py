import pytest

# criterion id -> (title, passed); filled in by test_acceptance
ACCEPTANCE: dict[str, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda c: (int(c.split(".")[0][2:]), c)):
        title, ok = ACCEPTANCE[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid:<6} {title}")


@pytest.fixture
def criterion():
    """Record the outcome of the enclosed block under an acceptance id."""

    class _Recorder:
        def __call__(self, cid, title):
            self.cid, self.title = cid, title
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            ACCEPTANCE[self.cid] = (self.title, exc_type is None)
            return False

    return _Recorder()
