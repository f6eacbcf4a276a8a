import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polybern.oeis_io import (
    KNOWN,
    BFile,
    BFileParseError,
    OEISConfig,
    Unavailable,
    antidiagonal_flatten,
    compare_sequence,
    fetch_bfile,
    load_fixture,
    parse_bfile,
    serialize_bfile,
)


def test_parse_examples():
    assert parse_bfile("0 1\n1 2\n").terms == ((0, 1), (1, 2))
    assert parse_bfile("# comment\n5 3170\n").terms == ((5, 3170),)
    with pytest.raises(BFileParseError) as e:
        parse_bfile("1 x")
    assert e.value.line_no == 1
    with pytest.raises(BFileParseError) as e:
        parse_bfile("0 1\n\n2 3 4\n")
    assert e.value.line_no == 3
    with pytest.raises(BFileParseError):
        parse_bfile("2 1\n1 1\n")


@given(st.lists(st.integers(-10 ** 30, 10 ** 30), max_size=20), st.integers(-5, 5))
def test_roundtrip(values, offset):
    b = BFile("A000001", tuple((offset + i, v) for i, v in enumerate(values)))
    assert parse_bfile(serialize_bfile(b), "A000001") == b


def test_fixtures():
    assert load_fixture("A098830").values == [1, 2, 4, 10, 32, 126, 588, 3170]
    assert load_fixture("A136127").values == [1, 2, 5, 16, 63, 294, 1585]
    assert load_fixture("A099594").values[:6] == [1, 1, 1, 1, 2, 1]
    with pytest.raises(Unavailable):
        load_fixture("A000045")


@pytest.mark.parametrize("anum", KNOWN)
def test_offline_comparisons(anum, tmp_path):
    rep = compare_sequence(anum, config=OEISConfig(offline=True, cache_dir=tmp_path))
    assert rep.ok and rep.rows


def test_compare_explicit_local():
    b = parse_bfile("1 1\n2 2\n3 5\n", "A136127")
    assert compare_sequence("A136127", [1, 2, 5], bfile=b).ok
    rep = compare_sequence("A136127", [1, 2, 6], bfile=b)
    assert rep.mismatches == [(3, 5, 6)]
    assert rep.as_dict()["mismatches"][0]["local"] == "6"


def test_antidiagonal_order():
    assert antidiagonal_flatten(lambda n, k: (n, k), 4) == [(0, 0), (0, 1), (1, 0), (0, 2)]


class CountingTransport:
    def __init__(self, text="0 1\n1 2\n"):
        self.calls = []
        self.text = text

    def __call__(self, url, timeout):
        self.calls.append(url)
        return self.text


def test_fetch_caches(tmp_path):
    cfg = OEISConfig(base_url="http://mirror.test/", cache_dir=tmp_path)
    t = CountingTransport()
    b1 = fetch_bfile("A098830", cfg, t)
    b2 = fetch_bfile("a98830", cfg, t)
    assert b1 == b2
    assert t.calls == ["http://mirror.test/A098830/b098830.txt"]
    assert (tmp_path / "b098830.txt").read_text() == "0 1\n1 2\n"


def test_fetch_failure(tmp_path):
    def broken(url, timeout):
        raise OSError("no route")
    with pytest.raises(Unavailable):
        fetch_bfile("A098830", OEISConfig(cache_dir=tmp_path), broken)
    assert not list(tmp_path.iterdir())


def test_bad_download_not_cached(tmp_path):
    with pytest.raises(BFileParseError):
        fetch_bfile("A098830", OEISConfig(cache_dir=tmp_path), CountingTransport("garbage here x\n"))
    assert not (tmp_path / "b098830.txt").exists()


def test_env_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("POLYBERN_OEIS_URL", "http://elsewhere.test")
    monkeypatch.setenv("POLYBERN_CACHE_DIR", str(tmp_path))
    cfg = OEISConfig()
    assert cfg.base_url == "http://elsewhere.test"
    assert str(cfg.cache_dir) == str(tmp_path)


def test_concurrent_fetch(tmp_path):
    cfg = OEISConfig(cache_dir=tmp_path)
    text = "".join(f"{i} {i * i}\n" for i in range(2000))
    errors = []

    def run():
        try:
            fetch_bfile("A000290", cfg, CountingTransport(text))
        except Exception as e:  # pragma: no cover
            errors.append(e)

    threads = [threading.Thread(target=run) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert not errors
    assert (tmp_path / "b000290.txt").read_text() == text
    assert [p.name for p in tmp_path.iterdir()] == ["b000290.txt"]
