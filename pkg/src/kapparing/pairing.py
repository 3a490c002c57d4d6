"""Pairing of psi(p) classes with combinatorial cycles and the rank of R(d; g, n)."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm, prod
from typing import Sequence

from .combinatorics import (
    Partition,
    Profile,
    canonical_partition,
    canonical_profile,
    format_partition,
    format_profile,
    partitions,
    profiles_all,
    refines,
    shape,
    vertex_dim,
)
from .intersection import psi_integral
from .kernels import det_int, rank_int


def pair(p: Sequence[int], q: Sequence[tuple[int, int]]) -> Fraction:
    """<psi(p), [G]> for any stable graph G with profile q.

    Sums over labeled maps from the parts of p to the vertices of q in which
    every positive-dimension vertex (g_i, m_i) receives parts summing to
    3g_i-3+m_i.  Each such map contributes the product over vertices of
    <prod tau_{a+1} * tau_0^{m_i}>_{g_i}.  Equal parts and equal vertices are
    counted with multiplicity.
    """
    p = canonical_partition(p) if p else ()
    q = canonical_profile(q)
    targets = [(v, vertex_dim(v)) for v in q if vertex_dim(v) > 0]
    if sum(t for _, t in targets) != sum(p):
        return Fraction(0)
    parts = sorted(Counter(p).items(), reverse=True)
    return _assign(tuple(targets), tuple(c for _, c in parts), tuple(v for v, _ in parts))


def _assign(targets, counts, values) -> Fraction:
    if not targets:
        return Fraction(1) if not any(counts) else Fraction(0)
    (g, m), target = targets[0]
    total = Fraction(0)
    for chosen, weight in _sub_with_sum(values, counts, target):
        exps = [0] * m
        for v, k in zip(values, chosen):
            exps.extend([v + 1] * k)
        here = psi_integral(g, exps)
        if not here:
            continue
        left = tuple(c - k for c, k in zip(counts, chosen))
        total += weight * here * _assign(targets[1:], left, values)
    return total


def _sub_with_sum(values, counts, target, i=0):
    """Sub-multisets of parts summing to target, with the number of labeled ways to pick them."""
    if i == len(values):
        if target == 0:
            yield (), 1
        return
    v, c = values[i], counts[i]
    for k in range(min(c, target // v) + 1):
        for rest, w in _sub_with_sum(values, counts, target - k * v, i + 1):
            yield (k,) + rest, comb(c, k) * w


def lambda_norm(q: Sequence[tuple[int, int]]) -> Fraction:
    """prod over vertices of 1 / (24^g_i g_i!)."""
    return Fraction(1, prod(24**g * factorial(g) for g, _ in q))


@dataclass
class PairingMatrix:
    d: int
    g: int
    n: int
    row_labels: list[Profile]
    col_labels: list[Partition]
    entries: list[list[Fraction]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def dump(self) -> str:
        """Text dump: a header line, then one tab-separated line per row."""
        lines = [f"R({self.d};{self.g},{self.n}) rows={len(self.row_labels)} cols={len(self.col_labels)}"]
        for q, row in zip(self.row_labels, self.entries):
            lines.append("\t".join([format_profile(q)] + [format_rational(x) for x in row]))
        return "\n".join(lines) + "\n"

    def column_header(self) -> str:
        return "\t".join(["profile"] + [format_partition(p) for p in self.col_labels])


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pairing_matrix(d: int, g: int, n: int, threads: int = 1) -> PairingMatrix:
    """R(d; g, n) with rows Q(d; g, n), columns P(d) and entries <p, q> / Lambda(q)."""
    if not 0 <= d <= 3 * g - 3 + n:
        raise ValueError(f"degree {d} outside [0, {3 * g - 3 + n}]")
    rows, _ = profiles_all(d, g, n)
    cols = partitions(d)

    def build(q):
        sq = shape(q)
        norm = lambda_norm(q)
        return [pair(p, q) / norm if refines(p, sq) else Fraction(0) for p in cols]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(build, rows))
    else:
        entries = [build(q) for q in rows]
    return PairingMatrix(d, g, n, rows, cols, entries)


def _integer_rows(M) -> list[list[int]]:
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def exact_rank(M) -> int:
    """Rank over Q: clear each row's denominators, then Bareiss elimination."""
    if isinstance(M, PairingMatrix):
        M = M.entries
    rows = [r for r in _integer_rows(M) if any(r)]
    return rank_int(rows) if rows else 0


def exact_det(M) -> Fraction:
    """Determinant of a square rational matrix via integer Bareiss."""
    rows = [[Fraction(x) for x in r] for r in M]
    scales = [lcm(*(x.denominator for x in r)) if r else 1 for r in rows]
    ints = [[int(x * s) for x in r] for r, s in zip(rows, scales)]
    return Fraction(det_int(ints), prod(scales))


def kappa_rank(d: int, g: int, n: int, threads: int = 1) -> int:
    """r(d; g, n), the rank of R(d; g, n).

    Degrees below zero give 0; degree 0 goes through the same machinery
    (a single column for the empty partition).
    """
    if d < 0 or d > 3 * g - 3 + n or 2 * g - 2 + n <= 0:
        return 0
    return exact_rank(pairing_matrix(d, g, n, threads=threads))
