import pytest

from conftest import CORPUS, load_json
from stringy import schema
from stringy.verify import verify_flip, verify_group, verify_strata, verify_toric

FILES = sorted(CORPUS.glob("*/*.json"))


def run_verify(path):
    text, data = load_json(path)
    kind = schema.detect_kind(data)
    if kind == "group":
        return verify_group(schema.parse_group(data, text))
    if kind == "toric":
        return verify_toric(schema.parse_toric(data, text))
    if kind == "flip":
        return verify_flip(*schema.parse_flip(data, text))
    return verify_strata(schema.parse_strata(data, text))


def test_corpus_shape():
    kinds = {p.parent.name for p in FILES}
    assert kinds == {"groups", "toric", "flip", "strata"}
    assert len(list((CORPUS / "groups").glob("*.json"))) >= 40


@pytest.mark.parametrize("path", FILES, ids=lambda p: f"{p.parent.name}/{p.stem}")
def test_every_identity_holds(path):
    checks = run_verify(path)
    assert checks
    failed = [c.line() for c in checks if not c.ok]
    assert not failed, failed
