"""Tests for the JSON-lines cache and the sweep summary storage."""

import pytest

from rackit.criteria import certificate_to_json, classify_sym_class
from rackit.data import ResultCache, SweepStorage, summary_row
from rackit.version import __version__


@pytest.fixture
def certs():
    return [classify_sym_class(4, t) for t in ("1^4", "2,1^2", "4")]


class TestResultCache:
    def test_put_and_reload(self, tmp_path, certs):
        path = tmp_path / "cache" / "results.jsonl"
        cache = ResultCache(path)
        for cert in certs:
            cache.put(cert)
        reloaded = ResultCache(path)
        assert len(reloaded) == 3
        cert = reloaded.get("sym:4", certs[2].label, __version__)
        assert certificate_to_json(cert) == certificate_to_json(certs[2])
        assert reloaded.get("sym:4", certs[2].label, "0.0.0") is None
        assert (reloaded.hits, reloaded.misses) == (1, 1)

    def test_corrupt_lines_are_skipped(self, tmp_path, certs):
        path = tmp_path / "results.jsonl"
        cache = ResultCache(path)
        cache.put(certs[0])
        with open(path, "a", encoding="utf-8") as f:
            f.write("{not json\n\n")
            f.write('{"key": {"group": "sym:4"}, "certificate": {}}\n')
        cache.put(certs[1])
        reloaded = ResultCache(path)
        assert len(reloaded) == 2
        assert reloaded.corrupt == 2

    def test_later_record_shadows(self, tmp_path, certs):
        path = tmp_path / "results.jsonl"
        cache = ResultCache(path)
        cache.put(certs[1])
        shadow = classify_sym_class(4, "2,1^2")
        shadow.notes = ("recomputed",)
        cache.put(shadow)
        reloaded = ResultCache(path)
        assert len(reloaded) == 1
        assert reloaded.get("sym:4", shadow.label, __version__).notes == ("recomputed",)


class TestSweepStorage:
    def test_roundtrip(self, tmp_path, certs):
        storage = SweepStorage(tmp_path / "sweep.csv")
        assert not storage.exists()
        assert storage.load().empty
        storage.save([summary_row(c) for c in certs])
        df = storage.load()
        assert len(df) == 3
        assert set(df["verdict"]) == {"NoCriterion"}
        assert list(df.columns) == SweepStorage.COLUMNS

    def test_append_deduplicates(self, tmp_path, certs):
        storage = SweepStorage(tmp_path / "sweep.csv")
        storage.save([summary_row(c) for c in certs])
        storage.save([summary_row(classify_sym_class(5, "3,1^2")), summary_row(certs[0])], append=True)
        assert storage.count() == 4
        assert len(storage.load(degree_min=5)) == 1
        assert len(storage.load(degree_max=4)) == 3

    def test_basis_survives(self, tmp_path):
        storage = SweepStorage(tmp_path / "sweep.csv")
        storage.save([summary_row(classify_sym_class(6, "3,2,1"))])
        row = storage.load().iloc[0]
        assert row["basis"] == "exa:12m;co:especial;coro:dp-cor;lemma-odd"
        assert row["element_order"] == 6

    def test_rejects_other_types(self, tmp_path):
        with pytest.raises(ValueError):
            SweepStorage(tmp_path / "sweep.csv").save("rows")
