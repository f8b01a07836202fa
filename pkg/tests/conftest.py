import pytest

# criterion number -> (title, [outcomes])
_ACCEPTANCE: dict = {}

_TITLES = {
    1: "oracle equivalence of top_k on 3 seeded 1,000-name corpora",
    2: "worked-value cosine check on {abcd, abce}",
    3: "self-match rank-1 property over randomized corpora",
    4: "Prec@1 / MRR correctness and invariants",
    5: "end-to-end synthetic baseline accuracy",
    6: "diff identities",
    7: "desk-scale performance and parallel consistency",
    8: "dataset / solution / snapshot round-trips",
    9: "highlight correctness and symmetry in pair views",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(num): acceptance criterion this test exercises")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker:
        num = marker.args[0]
        _ACCEPTANCE.setdefault(num, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        status = "PASS" if all(_ACCEPTANCE[num]) else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status} - {_TITLES.get(num, '')}")
