import json
import warnings
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbgw.intersection import (
    CacheCorruptionError,
    DimensionWarning,
    cache_path,
    derive_hodge_table,
    hodge_integral,
    load_cache,
    psi_integral,
    psi_table,
    save_cache,
    string_dilaton_check,
)


@pytest.mark.parametrize(
    "g, exps, value",
    [
        (0, (0, 0, 0), Fraction(1)),
        (1, (1,), Fraction(1, 24)),
        (2, (4,), Fraction(1, 1152)),
        (2, (2, 2, 2), Fraction(7, 240)),
        (2, (3, 2), Fraction(29, 5760)),
        (3, (7,), Fraction(1, 82944)),
    ],
)
def test_known_values(g, exps, value):
    assert psi_integral(g, exps) == value


@pytest.mark.parametrize("g", [1, 2, 3])
def test_one_point_closed_form(g):
    assert psi_integral(g, (3 * g - 2,)) == Fraction(1, 24**g * factorial(g))


@given(st.lists(st.integers(0, 4), min_size=3, max_size=7))
def test_genus_zero_multinomial(exps):
    m = len(exps)
    if sum(exps) != m - 3:
        return
    want = Fraction(factorial(m - 3))
    for a in exps:
        want /= factorial(a)
    assert psi_integral(0, exps) == want


@pytest.mark.parametrize("g", [0, 1, 2])
def test_string_equation(g):
    # every tuple with one extra unit of degree, so that tau_0 tau_a is in the stable range
    for m in range(1, 5):
        if 2 * g - 2 + m <= 0:
            continue
        for exps in psi_table(g, m + 1):
            if len(exps) != m + 1 or 0 not in exps:
                continue
            rest = list(exps)
            rest.remove(0)
            rest = tuple(rest)
            rhs = sum(psi_integral(g, rest[:i] + (a - 1,) + rest[i + 1 :]) for i, a in enumerate(rest) if a > 0)
            assert psi_integral(g, exps) == rhs
            assert string_dilaton_check(g, rest)


@pytest.mark.parametrize("g", [0, 1, 2])
def test_dilaton_equation(g):
    for exps, value in psi_table(g, 4).items():
        m = len(exps)
        assert psi_integral(g, (1,) + exps) == (2 * g - 2 + m) * value
        assert string_dilaton_check(g, exps)


def test_dimension_mismatch_warns():
    with pytest.warns(DimensionWarning):
        assert psi_integral(1, (2,)) == 0


def test_unstable_is_zero():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert psi_integral(0, (0, 0)) == 0


def test_table_entries_are_nonnegative():
    for g in range(3):
        assert all(v > 0 for v in psi_table(g, 4).values())


def test_cache_round_trip(tmp_path):
    path = save_cache(2, 4, tmp_path)
    assert path == cache_path(tmp_path)
    entries = json.loads(path.read_text())["entries"]
    assert load_cache(tmp_path) == len(entries) > 0


def test_cache_directory_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("HILBGW_CACHE_DIR", str(tmp_path))
    assert cache_path() == tmp_path / "wk_cache.json"
    save_cache(1, 3)
    assert (tmp_path / "wk_cache.json").exists()


def test_missing_cache_loads_nothing(tmp_path):
    assert load_cache(tmp_path) == 0


def test_checksum_tampering(tmp_path):
    path = save_cache(1, 3, tmp_path)
    payload = json.loads(path.read_text())
    payload["checksum"] = "0" * 64
    path.write_text(json.dumps(payload))
    with pytest.raises(CacheCorruptionError):
        load_cache(tmp_path)


def test_value_tampering_with_valid_checksum(tmp_path):
    import hashlib

    path = save_cache(1, 3, tmp_path)
    payload = json.loads(path.read_text())
    payload["entries"][0]["value"] = "5/7"
    blob = json.dumps(payload["entries"], sort_keys=True, separators=(",", ":")).encode()
    payload["checksum"] = hashlib.sha256(blob).hexdigest()
    path.write_text(json.dumps(payload))
    with pytest.raises(CacheCorruptionError):
        load_cache(tmp_path)


def test_unreadable_cache(tmp_path):
    cache_path(tmp_path).write_text("{not json")
    with pytest.raises(CacheCorruptionError):
        load_cache(tmp_path)


def test_hodge_derivation_matches_fixture():
    table = derive_hodge_table()
    assert table[(1, "lambda1")] == Fraction(1, 24)
    assert table[(2, "lambda1^3")] == Fraction(1, 2880)
    assert table[(2, "lambda1*lambda2")] == Fraction(1, 5760)
    for (g, mono), v in table.items():
        assert hodge_integral(g, mono) == v


def test_unknown_hodge_monomial():
    with pytest.raises(KeyError):
        hodge_integral(3, "lambda1")
