"""Prime sieving and finite-X frequency reports for equivalence verdicts.

Reports give the frequency among primes up to X only; a density (or upper
density) is a limit and is never claimed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class UndefinedDensity(ValueError):
    """No counted primes, so no frequency."""


def prime_sieve(X: int) -> list[int]:
    """All primes <= X, Eratosthenes over odd numbers only."""
    if X < 2:
        return []
    odd = np.ones((X - 1) // 2, dtype=bool)  # odd[i] <-> 2i + 3
    i = 0
    while True:
        p = 2 * i + 3
        if p * p > X:
            break
        if odd[i]:
            odd[(p * p - 3) // 2 :: p] = False
        i += 1
    return [2] + (2 * np.flatnonzero(odd) + 3).tolist()


def trial_division_count(X: int) -> int:
    """pi(X) by trial division; slow, used only to cross-check the sieve."""
    count = 0
    for n in range(2, X + 1):
        d = 2
        while d * d <= n and n % d:
            d += 1
        count += d * d > n
    return count


@dataclass(frozen=True)
class DensityReport:
    X: int | None
    total_primes: int
    hits: int
    observed: Fraction
    predicted: Fraction | None = None

    @property
    def deviation(self) -> Fraction | None:
        if self.predicted is None:
            return None
        return abs(self.observed - self.predicted)

    def kv_lines(self) -> list[str]:
        lines = [
            f"@X={self.X if self.X is not None else '-'}",
            f"@total_primes={self.total_primes}",
            f"@hits={self.hits}",
            f"@observed={self.observed}",
            f"@observed_float={float(self.observed):.6f}",
        ]
        if self.predicted is not None:
            lines += [f"@predicted={self.predicted}", f"@deviation_float={float(self.deviation):.6f}"]
        return lines

    def __str__(self):
        s = (f"frequency over primes <= {self.X}: {self.hits}/{self.total_primes}"
             f" = {float(self.observed):.4f}")
        if self.predicted is not None:
            s += f" (predicted {self.predicted}, deviation {float(self.deviation):.4f})"
        return s


def density_report(verdicts, predicted=None, X: int | None = None) -> DensityReport:
    """Fraction of verdicts that are equivalent.

    ``verdicts`` is a sequence of (p, PotEquivVerdict) pairs, normally from
    ``table_verdicts``; excluded primes never appear there, so they count in
    neither numerator nor denominator.
    """
    verdicts = list(verdicts)
    if not verdicts:
        raise UndefinedDensity("no primes to count")
    hits = sum(1 for _, v in verdicts if v.equivalent)
    pred = Fraction(predicted) if predicted is not None else None
    return DensityReport(X, len(verdicts), hits, Fraction(hits, len(verdicts)), pred)


def check_stabilization(reports, noise=Fraction(1, 50)) -> bool:
    """Soft check that deviations shrink as X grows, up to ``noise``.

    Emits a warning instead of failing; finite-X frequencies fluctuate.
    """
    ok = True
    for a, b in zip(reports, reports[1:]):
        if b.deviation > a.deviation + noise:
            ok = False
            warnings.warn(f"deviation grew from X={a.X} ({float(a.deviation):.4f}) "
                          f"to X={b.X} ({float(b.deviation):.4f})", stacklevel=2)
    return ok
