import pytest

from rhombus import oeis
from rhombus.verify import FAIL, INCONCLUSIVE, PASS

SAMPLE = "# comment\n0 1\n1 4\n2 14\n\n3 50\n"


class CountingTransport:
    def __init__(self, text=None, error=None):
        self.text, self.error, self.calls = text, error, []

    def __call__(self, url):
        self.calls.append(url)
        if self.error:
            raise self.error
        return self.text


@pytest.fixture
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path))
    return tmp_path


def test_parse_bfile():
    b = oeis.parse_bfile(SAMPLE, "A055099")
    assert b.values() == [1, 4, 14, 50]


def test_parse_rejects_malformed_line():
    with pytest.raises(oeis.BFileError) as err:
        oeis.parse_bfile("1 1\n2 3\n3 x\n")
    assert err.value.line == 3


def test_parse_rejects_non_increasing():
    with pytest.raises(oeis.BFileError):
        oeis.parse_bfile("1 1\n1 2\n")


def test_unknown_id():
    with pytest.raises(ValueError):
        oeis.fetch_bfile("A000045")
    with pytest.raises(ValueError):
        oeis.fetch_bfile("X12")


def test_fixture_examples(cache):
    a = oeis.fetch_bfile("A000079")
    assert a.source == "fixture" and a.values()[:4] == [1, 2, 4, 8]
    j = oeis.fetch_bfile("A001045").as_dict()
    assert [j[i] for i in range(1, 6)] == [1, 1, 3, 5, 11]


@pytest.mark.parametrize("seq_id", oeis.KNOWN_IDS)
def test_fixtures_have_50_terms(seq_id):
    assert len(oeis.parse_bfile(oeis.fixture_text(seq_id)).entries) == 50


def test_fixture_prefixes_match_printed_values():
    printed = {
        "A001045": (2, [1, 3, 5, 11, 21, 43, 85, 171]),
        "A055099": (0, [1, 4, 14, 50, 178, 634, 2258, 8042]),
        "A256959": (0, [1, 4, 19, 89, 385, 1601, 6529, 26369]),
        "A256960": (0, [1, 4, 11, 36, 119, 408, 1419, 4988, 17631]),
        "A059319": (1, [1, 3, 2, 5, 5, 6, 3, 11, 4, 15, 7, 10]),
    }
    for seq_id, (start, values) in printed.items():
        table = oeis.parse_bfile(oeis.fixture_text(seq_id)).as_dict()
        assert [table[start + i] for i in range(len(values))] == values


def test_compare_examples(cache):
    assert oeis.compare("A055099", [1, 4, 14, 50, 178], 0).status == PASS
    assert oeis.compare("A256959", [1, 4, 19, 89], 0).status == PASS
    assert oeis.compare("A000302", [1, 4, 16], 0).status == PASS


def test_compare_mismatch_and_range(cache):
    r = oeis.compare("A055099", [1, 4, 15], 0)
    assert r.status == FAIL and r.witness == {"index": 2}
    assert oeis.compare("A055099", [1] * 5, 48).status == INCONCLUSIVE


def test_offline_never_calls_transport(cache):
    t = CountingTransport(SAMPLE)
    oeis.fetch_bfile("A055099", "offline", transport=t)
    (cache / "b055099.txt").write_text(SAMPLE)
    b = oeis.fetch_bfile("A055099", "offline", transport=t)
    assert b.source == "cache" and t.calls == []


def test_online_writes_cache(cache):
    t = CountingTransport(SAMPLE)
    b = oeis.fetch_bfile("A055099", "online", transport=t)
    assert b.source == "network" and t.calls == ["https://oeis.org/A055099/b055099.txt"]
    assert (cache / "b055099.txt").read_text() == SAMPLE
    assert not list(cache.glob("*.tmp"))
    again = oeis.fetch_bfile("A055099", "offline", transport=t)
    assert again.source == "cache" and len(t.calls) == 1


def test_network_failure_falls_back(cache):
    t = CountingTransport(error=OSError("no route"))
    cold = oeis.fetch_bfile("A256959", "online", transport=t)
    assert cold.source == "fixture" and "no route" in cold.warning
    (cache / "b256959.txt").write_text("0 1\n1 4\n")
    warm = oeis.fetch_bfile("A256959", "online", transport=t)
    assert warm.source == "cache" and warm.warning


def test_paths_agree(cache):
    computed = oeis.computed_terms("A256960", 8)
    fixture = oeis.compare("A256960", computed)
    t = CountingTransport(oeis.fixture_text("A256960"))
    network = oeis.compare("A256960", computed, mode="online", transport=t)
    cached = oeis.compare("A256960", computed)
    assert [r.status for r in (fixture, network, cached)] == [PASS] * 3
    assert [r.params["source"] for r in (fixture, network, cached)] == ["fixture", "network", "cache"]


def test_default_cache_dir(monkeypatch):
    monkeypatch.delenv(oeis.CACHE_ENV, raising=False)
    assert oeis.cache_dir().name == "oeis"
