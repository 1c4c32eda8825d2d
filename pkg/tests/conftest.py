import sys
import json

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def quiver_file(tmp_path):
    def make(n, arrows, name=None):
        return _write(tmp_path, name or f"q{n}_{len(arrows)}.json", {"n": n, "arrows": [list(a) for a in arrows]})

    return make


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(acc.RESULTS, key=lambda k: (int(k.split("-")[0]), k)):
        terminalreporter.write_line(acc.RESULTS[key])
