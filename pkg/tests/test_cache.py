import json

from hypothesis import given
from hypothesis import strategies as st

from fpure_lab.bei import bei
from fpure_lab.cache import ENV_VAR, GBCache, ideal_key
from fpure_lab.families import cycle, path
from fpure_lab.fedder import fedder
from fpure_lab.poly import LEX
from strategies import graphs


def test_hit_reproduces_cold_basis(tmp_cache):
    cache = GBCache(tmp_cache)
    I = bei(cycle(5), 3).ideal
    cold = cache.groebner(I)
    files = list(tmp_cache.iterdir())
    assert cache.misses == 1 and len(files) == 1
    raw = files[0].read_bytes()
    warm = GBCache(tmp_cache).groebner(bei(cycle(5), 3).ideal)
    assert warm.strings() == cold.strings()
    assert warm.stats.get("cached")
    # storing again writes the same bytes
    GBCache(tmp_cache).store(I, warm)
    assert files[0].read_bytes() == raw


@given(graphs(min_n=2, max_n=5), st.sampled_from([2, 3]))
def test_recompute_sampling(g, p):
    import tempfile

    with tempfile.TemporaryDirectory() as d:
        cache = GBCache(d)
        I = bei(g, p).ideal
        first = cache.groebner(I).strings()
        again = cache.groebner(bei(g, p).ideal).strings()
        assert cache.hits == 1
        assert first == again == bei(g, p).ideal.gb().strings()


def test_key_depends_on_order_and_p():
    a = ideal_key(bei(path(3), 2).ideal)
    assert a != ideal_key(bei(path(3), 3).ideal)
    assert a != ideal_key(bei(path(3), 2, LEX).ideal)
    assert a == ideal_key(bei(path(3), 2).ideal)


def test_corrupt_entry_is_ignored(tmp_cache):
    cache = GBCache(tmp_cache)
    I = bei(path(3), 2).ideal
    cache.groebner(I)
    f = next(tmp_cache.iterdir())
    f.write_text(json.dumps({"key": "wrong", "basis": []}))
    assert cache.load(I) is None
    f.write_text("{not json")
    assert cache.load(I) is None


def test_env_var_wins(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    c = GBCache.from_env(str(tmp_path / "flag"))
    assert c.dir == tmp_path / "env"
    monkeypatch.delenv(ENV_VAR)
    assert GBCache.from_env(None) is None


def test_fedder_with_cache_matches(tmp_cache):
    cache = GBCache(tmp_cache)
    cold = fedder(cycle(5), 3, cache=cache)
    warm = fedder(cycle(5), 3, cache=cache)
    plain = fedder(cycle(5), 3)
    assert cache.hits == 1
    assert cold.witness_poly == warm.witness_poly == plain.witness_poly
