"""psi-class intersection numbers on moduli of stable curves, and Hodge integrals.

<tau_{a_1} ... tau_{a_m}>_g is computed by the DVV (Virasoro) recursion with
base cases <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.  Values can be persisted to
a checksummed JSON cache whose directory is read from HILBGW_CACHE_DIR.

The Hodge integrals needed for the degree-0 oracle (g <= 2) are derived from
Mumford's Grothendieck-Riemann-Roch formula for ch(E) in ``derive_hodge_table``
and shipped as the fixture data/hodge.json.
"""

from __future__ import annotations

import hashlib
import json
import os
import warnings
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations
from math import factorial
from pathlib import Path

from .bernoulli import bernoulli_number

CACHE_ENV = "HILBGW_CACHE_DIR"
CACHE_NAME = "wk_cache.json"


class DimensionWarning(UserWarning):
    pass


class CacheCorruptionError(RuntimeError):
    pass


def _double_factorial(k: int) -> int:
    # (-1)!! = 1
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def psi_integral(g: int, exponents) -> Fraction:
    """<tau_{a_1} ... tau_{a_m}>_g, zero outside the stable range."""
    exps = tuple(sorted((int(a) for a in exponents), reverse=True))
    if any(a < 0 for a in exps) or g < 0:
        return Fraction(0)
    m = len(exps)
    if 2 * g - 2 + m <= 0:
        return Fraction(0)
    if sum(exps) != 3 * g - 3 + m:
        warnings.warn(f"dimension mismatch for <{exps}>_{g}", DimensionWarning, stacklevel=2)
        return Fraction(0)
    return _psi(g, exps)


@lru_cache(maxsize=None)
def _psi(g: int, exps: tuple[int, ...]) -> Fraction:
    m = len(exps)
    if g < 0 or 2 * g - 2 + m <= 0 or any(a < 0 for a in exps):
        return Fraction(0)
    if sum(exps) != 3 * g - 3 + m:
        return Fraction(0)
    if g == 0 and exps == (0, 0, 0):
        return Fraction(1)
    if g == 1 and exps == (1,):
        return Fraction(1, 24)
    if exps[0] == 0:
        return Fraction(0)
    k = exps[0] - 1
    rest = exps[1:]

    def norm(t):
        return tuple(sorted(t, reverse=True))

    total = Fraction(0)
    for j, d in enumerate(rest):
        others = rest[:j] + rest[j + 1 :]
        coeff = Fraction(_double_factorial(2 * k + 2 * d + 1), _double_factorial(2 * d - 1))
        total += coeff * _psi(g, norm(others + (d + k,)))
    half = Fraction(0)
    for r in range(k):
        s = k - 1 - r
        w = _double_factorial(2 * r + 1) * _double_factorial(2 * s + 1)
        term = _psi(g - 1, norm((r, s) + rest))
        idx = range(len(rest))
        for size in range(len(rest) + 1):
            for I in combinations(idx, size):
                left = tuple(rest[i] for i in I)
                right = tuple(rest[i] for i in idx if i not in I)
                for g1 in range(g + 1):
                    a = _psi(g1, norm((r,) + left))
                    if a:
                        term += a * _psi(g - g1, norm((s,) + right))
        half += w * term
    total += half / 2
    return total / _double_factorial(2 * k + 3)


def string_dilaton_check(g: int, exponents) -> bool:
    """String and dilaton equations for the correlator with one extra tau_0 / tau_1."""
    exps = tuple(exponents)
    m = len(exps)
    ok = True
    # string: <tau_0 tau_a>_g = sum_i <tau_{a_i - 1} ...>_g
    if sum(exps) == 3 * g - 3 + m + 1 and 2 * g - 2 + m > 0:
        lhs = psi_integral(g, (0,) + exps)
        rhs = sum(
            (psi_integral(g, exps[:i] + (a - 1,) + exps[i + 1 :]) for i, a in enumerate(exps) if a > 0),
            Fraction(0),
        )
        ok &= lhs == rhs
    # dilaton: <tau_1 tau_a>_g = (2g - 2 + m) <tau_a>_g
    if sum(exps) == 3 * g - 3 + m and 2 * g - 2 + m > 0:
        ok &= psi_integral(g, (1,) + exps) == (2 * g - 2 + m) * psi_integral(g, exps)
    return ok


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def psi_table(g: int, max_points: int) -> dict:
    """All nonzero <tau_a>_g with m <= max_points, keyed by sorted exponent tuples."""
    out = {}
    for m in range(max_points + 1):
        if 2 * g - 2 + m <= 0:
            continue
        dim = 3 * g - 3 + m
        seen = set()
        for comp in _compositions(dim, m):
            key = tuple(sorted(comp, reverse=True))
            if key in seen:
                continue
            seen.add(key)
            out[key] = psi_integral(g, key)
    return out


# --- persistent cache -----------------------------------------------------------


def cache_path(directory: str | os.PathLike | None = None) -> Path:
    base = directory or os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "hilbgw"
    return Path(base) / CACHE_NAME


def _checksum(entries: list) -> str:
    blob = json.dumps(entries, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def save_cache(max_genus: int = 2, max_points: int = 6, directory=None) -> Path:
    entries = []
    for g in range(max_genus + 1):
        for exps, value in sorted(psi_table(g, max_points).items()):
            entries.append({"g": g, "exponents": list(exps), "value": f"{value.numerator}/{value.denominator}"})
    path = cache_path(directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"version": 1, "entries": entries, "checksum": _checksum(entries)}
    path.write_text(json.dumps(payload, indent=1, sort_keys=True))
    return path


def load_cache(directory=None) -> int:
    """Seed the in-process table from disk; returns the number of entries loaded."""
    path = cache_path(directory)
    if not path.exists():
        return 0
    try:
        payload = json.loads(path.read_text())
        entries = payload["entries"]
        if payload.get("checksum") != _checksum(entries):
            raise CacheCorruptionError(f"checksum mismatch in {path}")
        for e in entries:
            exps = tuple(sorted((int(a) for a in e["exponents"]), reverse=True))
            value = Fraction(e["value"])
            g = int(e["g"])
            fresh = _psi(g, exps)
            if fresh != value:
                raise CacheCorruptionError(f"cached value disagrees with recursion for <{exps}>_{g}")
    except (KeyError, ValueError, TypeError, json.JSONDecodeError) as exc:
        raise CacheCorruptionError(f"unreadable cache {path}: {exc}") from exc
    return len(entries)


# --- Hodge integrals ---------------------------------------------------------------


def mumford_ch_integral(g: int) -> Fraction:
    """The top-degree integral of ch_{2g-1}(E) against the unpointed moduli space (g = 1 uses one marking).

    Mumford's formula on Mbar_{g,n}:
      ch_{2k-1}(E) = B_{2k}/(2k)! [ kappa_{2k-1} - sum_i psi_i^{2k-1}
                     + 1/2 sum_boundary iota_*( sum_{a+b=2k-2} (-1)^a psi^a psi'^b ) ].
    For g = 2 (k = 2, dimension 3) the terms are kappa_3 = <tau_4>_2, the
    irreducible divisor Mbar_{1,2} and the separating divisor Mbar_{1,1} x Mbar_{1,1}.
    For g = 1 we integrate ch_1 over Mbar_{1,1}.
    """
    if g == 1:
        k = 1
        kappa = psi_integral(1, (2, 0))  # kappa_1 = pi_*(psi_2^2) on Mbar_{1,1}
        psi_term = psi_integral(1, (1,))
        boundary = Fraction(1)  # Mbar_{0,3}, empty psi-sum a = b = 0
        bracket = kappa - psi_term + boundary / 2
    elif g == 2:
        k = 2
        kappa = psi_integral(2, (4,))
        irreducible = sum(
            ((-1) ** a * psi_integral(1, (a, 2 - a)) for a in range(3)),
            Fraction(0),
        )
        separating = sum(
            # only a = b = 1 is dimensionally allowed on each Mbar_{1,1} factor
            ((-1) ** a * _psi(1, (a,)) * _psi(1, (2 - a,)) for a in range(3)),
            Fraction(0),
        )
        bracket = kappa + (irreducible + separating) / 2
    else:
        raise ValueError("only g = 1, 2 are supported")
    return bernoulli_number(2 * k) / factorial(2 * k) * bracket


def derive_hodge_table() -> dict:
    """lambda_1 on Mbar_{1,1}; lambda_1^3 and lambda_1 lambda_2 on Mbar_2.

    On Mbar_2: c(E) c(E^dual) = 1 gives lambda_1^2 = 2 lambda_2, lambda_3 = 0
    (rank 2), hence ch_3 = (lambda_1^3 - 3 lambda_1 lambda_2)/6 = -lambda_1^3/12.
    On Mbar_{1,1}: ch_1 = lambda_1.
    """
    lam1_g1 = mumford_ch_integral(1)
    lam1_cubed = -12 * mumford_ch_integral(2)
    return {
        (1, "lambda1"): lam1_g1,
        (2, "lambda1^3"): lam1_cubed,
        (2, "lambda1*lambda2"): lam1_cubed / 2,
    }


def hodge_table_to_json(table: dict) -> dict:
    return {
        "entries": [
            {"g": g, "monomial": mono, "value": f"{v.numerator}/{v.denominator}"}
            for (g, mono), v in sorted(table.items())
        ]
    }


@lru_cache(maxsize=None)
def _load_hodge_fixture() -> tuple:
    text = resources.files("hilbgw").joinpath("data/hodge.json").read_text()
    payload = json.loads(text)
    return tuple(((e["g"], e["monomial"]), Fraction(e["value"])) for e in payload["entries"])


def hodge_integral(g: int, monomial: str) -> Fraction:
    """Fixture lookup: (1, 'lambda1'), (2, 'lambda1^3'), (2, 'lambda1*lambda2')."""
    table = dict(_load_hodge_fixture())
    try:
        return table[(g, monomial)]
    except KeyError:
        raise KeyError(f"no Hodge integral for {monomial} in genus {g}") from None
