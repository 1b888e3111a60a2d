import json

import pytest

from src.cache import BFunctionCache, CacheFormatError
from src.engine import BFunctionEngine
from src.factored import FactoredBPoly


def test_missing_file_is_empty(tmp_path):
    assert BFunctionCache(tmp_path / 'absent.json').load() == {}


def test_save_and_load(tmp_path):
    engine = BFunctionEngine()
    engine.b_xi(5)
    cache = BFunctionCache(tmp_path / 'nested' / 'cache.json')
    cache.save(engine.memo)
    loaded = cache.load()
    assert loaded == engine.memo
    assert loaded[3] == FactoredBPoly({'-2/3': 1, -1: 2, '-4/3': 1})


def test_cached_engine_gives_same_results(tmp_path):
    cache = BFunctionCache(tmp_path / 'cache.json')
    fresh = BFunctionEngine()
    fresh.b_xi(6)
    cache.save(fresh.memo)
    warm = BFunctionEngine(cache=cache.load())
    assert warm.b_xi(6) == fresh.b_xi(6)
    assert warm.cache_hits == 1


def test_unknown_version_rejected(tmp_path):
    path = tmp_path / 'cache.json'
    path.write_text(json.dumps({'version': 99, 'entries': {}}))
    with pytest.raises(CacheFormatError):
        BFunctionCache(path).load()


@pytest.mark.parametrize('content', [
    'not json',
    '[]',
    json.dumps({'version': 1, 'entries': []}),
    json.dumps({'version': 1, 'entries': {'x': {'roots': []}}}),
    json.dumps({'version': 1, 'entries': {'3': {'roots': [{'num': -2, 'den': 4, 'mult': 1}]}}}),
])
def test_malformed_rejected(tmp_path, content):
    path = tmp_path / 'cache.json'
    path.write_text(content)
    with pytest.raises(CacheFormatError):
        BFunctionCache(path).load()


def test_format_error_is_value_error():
    assert issubclass(CacheFormatError, ValueError)
