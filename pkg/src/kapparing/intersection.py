"""Witten-Kontsevich intersection numbers <tau_{a_1} ... tau_{a_n}>_g.

Values are exact :class:`fractions.Fraction` objects.  Genus 0 and genus 1
use closed forms; higher genus goes through String/Dilaton reduction and the
DVV (Virasoro) recursion.  A second, closed-form-free engine
(:func:`psi_integral_recursive`) is kept apart as an oracle for tests.

Results are memoized on the canonical key ``(g, sorted exponents)`` in a
:class:`PsiMemo`, which can be saved to and loaded from a text file whose
lines read ``g;a_1,...,a_n;num/den``.
"""

from __future__ import annotations

import logging
import os
import sys
import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .poly import UniPoly, binom, binom_frac_lower, double_factorial, interpolate

log = logging.getLogger(__name__)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Key = tuple[int, tuple[int, ...]]


class PsiMemo:
    """Memo table shared by all callers.

    Reads are lock-free; inserts go through a lock and never overwrite, so two
    threads racing on one key both end up seeing the first stored value.
    """

    def __init__(self):
        self._data: dict[Key, Fraction] = {}
        self._lock = threading.Lock()

    def get(self, key: Key):
        return self._data.get(key)

    def put(self, key: Key, value: Fraction) -> Fraction:
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def items(self):
        return list(self._data.items())

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data


MEMO = PsiMemo()
_ORACLE_MEMO = PsiMemo()


def _check_args(g: int, exps: Sequence[int]) -> tuple[int, ...]:
    if g < 0:
        raise ValueError(f"negative genus {g}")
    if len(exps) == 0:
        raise ValueError("empty exponent list")
    if any(a < 0 for a in exps):
        raise ValueError(f"negative exponent in {list(exps)}")
    if 2 * g - 2 + len(exps) <= 0:
        raise ValueError(f"unstable moduli space: (g, n) = ({g}, {len(exps)})")
    return tuple(sorted(int(a) for a in exps))


def _multinomial(exps: Iterable[int]) -> int:
    exps = list(exps)
    return factorial(sum(exps)) // prod(factorial(a) for a in exps)


def genus0_closed(exps: Sequence[int]) -> Fraction:
    """(n-3)! / prod(a_i!) on M_{0,n}; zero off dimension."""
    n = len(exps)
    if n < 3:
        raise ValueError("genus-0 integrals need at least 3 points")
    if any(a < 0 for a in exps):
        raise ValueError(f"negative exponent in {list(exps)}")
    if sum(exps) != n - 3:
        return Fraction(0)
    return Fraction(_multinomial(exps))


def _elementary_symmetric(xs: Sequence[int]) -> list[int]:
    # e[i] = i-th elementary symmetric polynomial of xs
    e = [1] + [0] * len(xs)
    for x in xs:
        for i in range(len(e) - 1, 0, -1):
            e[i] += e[i - 1] * x
    return e


def genus1_closed(exps: Sequence[int]) -> Fraction:
    """Closed formula for top psi integrals on M_{1,n}.

    (1/24) * multinomial(n; a) * (1 - sum_{i=2..n} sigma_i(a) / (i(i-1) C(n,i)))
    """
    n = len(exps)
    if n < 1:
        raise ValueError("genus-1 integrals need at least 1 point")
    if any(a < 0 for a in exps):
        raise ValueError(f"negative exponent in {list(exps)}")
    if sum(exps) != n:
        return Fraction(0)
    sigma = _elementary_symmetric(exps)
    correction = sum(
        (Fraction(sigma[i], i * (i - 1) * comb(n, i)) for i in range(2, n + 1)),
        Fraction(0),
    )
    return Fraction(_multinomial(exps), 24) * (1 - correction)


def _submultisets(items: Sequence[tuple[int, int]]) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (chosen counts, number of labeled subsets) for a multiset given as (value, count)."""
    if not items:
        yield (), 1
        return
    (_, c), rest = items[0], items[1:]
    for sub, w in _submultisets(rest):
        for k in range(c + 1):
            yield (k,) + sub, comb(c, k) * w


def _expand(items: Sequence[tuple[int, int]], counts: Sequence[int]) -> list[int]:
    out = []
    for (v, _), k in zip(items, counts):
        out.extend([v] * k)
    return out


def _integral(g: int, exps: Sequence[int], closed: bool) -> Fraction:
    if 2 * g - 2 + len(exps) <= 0 or g < 0:
        return Fraction(0)
    if sum(exps) != 3 * g - 3 + len(exps):
        return Fraction(0)
    key = (g, tuple(sorted(exps)))
    memo = MEMO if closed else _ORACLE_MEMO
    hit = memo.get(key)
    if hit is not None:
        return hit
    return memo.put(key, _evaluate(g, key[1], closed))


def _evaluate(g: int, a: tuple[int, ...], closed: bool) -> Fraction:
    n = len(a)
    if closed and g == 0:
        return genus0_closed(a)
    if closed and g == 1:
        return genus1_closed(a)
    if (g, a) == (0, (0, 0, 0)):
        return Fraction(1)
    if (g, a) == (1, (1,)):
        return Fraction(1, 24)
    if a[0] == 0 and 2 * g - 2 + (n - 1) > 0:
        # String equation
        rest = list(a[1:])
        total = Fraction(0)
        for i, v in enumerate(rest):
            if v and (i == 0 or rest[i - 1] != v):
                mult = rest.count(v)
                lowered = rest[:i] + [v - 1] + rest[i + 1:]
                total += mult * _integral(g, lowered, closed)
        return total
    if 1 in a and 2 * g - 2 + (n - 1) > 0:
        # Dilaton equation
        rest = list(a)
        rest.remove(1)
        return (2 * g - 2 + n - 1) * _integral(g, rest, closed)
    return _dvv(g, a, closed)


def _dvv(g: int, a: tuple[int, ...], closed: bool) -> Fraction:
    """One DVV step on the largest insertion tau_{k+1}."""
    k = a[-1] - 1
    rest = list(a[:-1])
    total = Fraction(0)
    seen = set()
    for j, b in enumerate(rest):
        if b in seen:
            continue
        seen.add(b)
        mult = rest.count(b)
        others = rest[:j] + rest[j + 1:]
        coeff = Fraction(double_factorial(2 * (k + b) + 1), double_factorial(2 * b - 1))
        total += mult * coeff * _integral(g, others + [k + b], closed)

    items = []
    for v in sorted(set(rest)):
        items.append((v, rest.count(v)))
    half = Fraction(0)
    for x in range(k):
        y = k - 1 - x
        w = double_factorial(2 * x + 1) * double_factorial(2 * y + 1)
        inner = _integral(g - 1, rest + [x, y], closed)
        for counts, mult in _submultisets(items):
            left = _expand(items, counts)
            right = _expand(items, [c - s for (_, c), s in zip(items, counts)])
            top = x + sum(left) - len(left) + 2
            if top % 3:
                continue
            g1 = top // 3
            g2 = g - g1
            if g1 < 0 or g2 < 0:
                continue
            if 2 * g1 - 1 + len(left) <= 0 or 2 * g2 - 1 + len(right) <= 0:
                continue
            lv = _integral(g1, left + [x], closed)
            if lv:
                inner += mult * lv * _integral(g2, right + [y], closed)
        half += w * inner
    total += half / 2
    return total / double_factorial(2 * k + 3)


def psi_integral(g: int, exps: Sequence[int]) -> Fraction:
    """<tau_{a_1} ... tau_{a_n}>_g = integral of prod psi_i^{a_i} over M_{g,n}.

    Returns 0 when sum(exps) != 3g - 3 + n.

    >>> psi_integral(1, [1, 1, 1])
    Fraction(1, 12)
    >>> psi_integral(2, [3, 2])
    Fraction(29, 5760)
    """
    a = _check_args(g, exps)
    return _integral(g, a, closed=True)


def psi_integral_recursive(g: int, exps: Sequence[int]) -> Fraction:
    """Same numbers as :func:`psi_integral` with no closed forms anywhere.

    Uses only String, Dilaton, DVV and the two base values; kept separate
    (own memo) so tests can compare it against the closed-form path.
    """
    a = _check_args(g, exps)
    return _integral(g, a, closed=False)


# --- two-point family ------------------------------------------------------

def _geometric_min(h: int) -> int:
    return max(3 * h - 1, 1)


def two_point(h: int, m: int, j: int) -> Fraction:
    """24^h h! * integral over M_{h, m-3h+3} of psi_1^{m-j} psi_2^j."""
    if h < 0:
        raise ValueError("negative genus")
    if m < _geometric_min(h) or not 0 <= j <= m:
        raise ValueError(
            f"(h, m, j) = ({h}, {m}, {j}) is outside the geometric range; "
            "use two_point_poly(h, j)(m) for the polynomial extension"
        )
    exps = [m - j, j] + [0] * (m - 3 * h + 1)
    return 24**h * factorial(h) * psi_integral(h, exps)


@lru_cache(maxsize=None)
def two_point_poly(h: int, j: int) -> UniPoly:
    """Polynomial in m of degree <= j extending m -> two_point(h, m, j)."""
    if h < 0 or j < 0:
        raise ValueError("h and j must be non-negative")
    start = max(3 * h - 1, j, 1)
    nodes = list(range(start, start + j + 1))
    return interpolate(nodes, [two_point(h, m, j) for m in nodes])


def q_sum(h: int, j: int, m: int) -> Fraction:
    """sum_{p=0..j} C(m-3h, p) C(h, (j-p)/3), second factor zero unless 3 | j-p."""
    total = Fraction(0)
    for p in range(j + 1):
        if (j - p) % 3 == 0:
            total += binom(m - 3 * h, p) * binom(h, (j - p) // 3)
    return total


@lru_cache(maxsize=None)
def _kdv_P(h: int, j: int) -> Fraction:
    if j < 0 or h < 0:
        return Fraction(0)
    if j == 0:
        return Fraction(1)
    c = Fraction(1, 2 * j + 1)
    val = (c - 2) * _kdv_P(h, j - 1) + (c - 1) * _kdv_P(h, j - 2)
    val += c * (binom_frac_lower(h, Fraction(j, 3)) + 2 * binom_frac_lower(h, Fraction(j - 1, 3)))
    if h:
        val += 6 * h * c * sum(comb(4, k) * _kdv_P(h - 1, j - 1 - k) for k in range(5))
    return val


def boundary_P(h: int, j: int) -> Fraction:
    """P_j(h) = n_j(h, 3h-1) from the KdV recursion alone (no psi_integral)."""
    if h < 1 or not 0 <= j <= 3 * h - 1:
        raise ValueError(f"boundary_P needs h >= 1 and 0 <= j <= 3h-1, got ({h}, {j})")
    return _kdv_P(h, j)


def boundary_P_poly(j: int) -> UniPoly:
    """P_j as a polynomial in h, interpolated on j+1 admissible genera."""
    start = max(1, -(-(j + 1) // 3))
    nodes = list(range(start, start + j + 1))
    return interpolate(nodes, [boundary_P(h, j) for h in nodes])


# --- cache persistence -----------------------------------------------------

CACHE_ENV = "KAPPARING_CACHE"


def format_key_line(key: Key, value: Fraction) -> str:
    g, a = key
    return f"{g};{','.join(map(str, a))};{value.numerator}/{value.denominator}"


def save_cache(path: str | os.PathLike, memo: PsiMemo = MEMO) -> int:
    lines = sorted(format_key_line(k, v) for k, v in memo.items())
    with open(path, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")
    return len(lines)


def _parse_line(line: str) -> tuple[Key, Fraction]:
    g_s, a_s, v_s = line.split(";")
    g = int(g_s)
    a = tuple(int(x) for x in a_s.split(","))
    num, den = v_s.split("/")
    value = Fraction(int(num), int(den))
    if g < 0 or not a or any(x < 0 for x in a) or list(a) != sorted(a):
        raise ValueError("bad key")
    if 2 * g - 2 + len(a) <= 0 or sum(a) != 3 * g - 3 + len(a):
        raise ValueError("key off dimension")
    return (g, a), value


def load_cache(path: str | os.PathLike, memo: PsiMemo = MEMO) -> tuple[int, int]:
    """Overlay entries from ``path`` onto ``memo``; returns (entries read, malformed lines).

    Existing entries win. An unreadable file is a cold start.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        log.warning("cache %s unreadable (%s); starting cold", path, exc)
        return 0, 0
    good = bad = 0
    for line in lines:
        if not line.strip():
            continue
        try:
            key, value = _parse_line(line.strip())
        except (ValueError, ZeroDivisionError):
            bad += 1
            continue
        memo.put(key, value)
        good += 1
    if bad:
        log.warning("skipped %d malformed cache line(s) in %s", bad, path)
    return good, bad
