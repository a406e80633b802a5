import json
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

import stringy

sys.path.insert(0, str(Path(__file__).parent))

CORPUS = Path(stringy.__file__).parent / "corpus"

settings.register_profile(
    "default", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

ACCEPTANCE = {}


def corpus_files(kind):
    return sorted((CORPUS / kind).glob("*.json"))


def load_json(path):
    text = Path(path).read_text()
    return text, json.loads(text)


@pytest.fixture
def record_acceptance():
    def record(key, ok, detail=""):
        ACCEPTANCE[key] = (ok, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        tail = f" - {detail}" if detail else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {key}{tail}")
