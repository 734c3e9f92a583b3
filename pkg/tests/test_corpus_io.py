"""Corpus file parsing, validation, and export."""

import json

import pytest

from npscensus.corpus import (
    CorpusError,
    dump_corpus,
    entry_from_group,
    load_corpus,
    regular_representation,
)
from npscensus.core import group_from_generators
from npscensus.families import build
from npscensus.isomorphism import are_isomorphic
from npscensus.specs import parse_spec


def write(tmp_path, payload):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


class TestLoad:
    def test_valid_file(self, tmp_path):
        path = write(
            tmp_path,
            [{"name": "Sym(3)", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}],
        )
        entries = load_corpus(path)
        assert len(entries) == 1
        g = entries[0].group(cap=600)
        assert g.order == 6

    def test_empty_corpus(self, tmp_path):
        assert load_corpus(write(tmp_path, [])) == []

    def test_not_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("not json", encoding="utf-8")
        with pytest.raises(CorpusError, match="valid JSON"):
            load_corpus(path)

    def test_top_level_must_be_array(self, tmp_path):
        with pytest.raises(CorpusError, match="array"):
            load_corpus(write(tmp_path, {"name": "x"}))

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusError, match="cannot read"):
            load_corpus(tmp_path / "nope.json")

    @pytest.mark.parametrize(
        "entry",
        [
            {"degree": 3, "generators": []},
            {"name": "", "degree": 3, "generators": []},
            {"name": "x", "degree": 0, "generators": []},
            {"name": "x", "degree": 3, "generators": [[0, 1]]},
            {"name": "x", "degree": 3, "generators": [[0, 0, 1]]},
            {"name": "x", "degree": 3, "generators": "nope"},
        ],
    )
    def test_bad_entries(self, tmp_path, entry):
        with pytest.raises(CorpusError):
            load_corpus(write(tmp_path, [entry]))


class TestExport:
    def test_regular_representation_is_faithful(self):
        s3 = build(parse_spec("Gn(1,3)"))
        perms = regular_representation(s3)
        back = group_from_generators(s3.order, perms)
        assert back.order == s3.order
        assert are_isomorphic(back, s3)

    def test_dump_load_round_trip(self, tmp_path):
        entries = [
            entry_from_group("Q8", build(parse_spec("Q(8)"))),
            entry_from_group("A4", build(parse_spec("Alt(4)"))),
        ]
        path = tmp_path / "out.json"
        dump_corpus(entries, path)
        again = load_corpus(path)
        assert again == entries


class TestShippedCorpora:
    def test_sample_files_load(self):
        from pathlib import Path

        data = Path(__file__).resolve().parent.parent / "data"
        buckets = load_corpus(data / "bucket_groups.json")
        controls = load_corpus(data / "control_groups.json")
        assert len(buckets) >= 40
        assert len(controls) >= 5
        names = " ".join(e.name for e in controls)
        assert "Sym(4)" in names
        assert "M(5)" in names
        assert "C7 x| C6" in names

    def test_schema_is_valid_json(self):
        from pathlib import Path

        data = Path(__file__).resolve().parent.parent / "data"
        schema = json.loads((data / "corpus.schema.json").read_text(encoding="utf-8"))
        assert schema["type"] == "array"
        assert set(schema["items"]["required"]) == {"name", "degree", "generators"}
