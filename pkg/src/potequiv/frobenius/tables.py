"""Per-prime Frobenius tables for pairs of representations."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..algebra import RatPoly
from ..core import PotEquivVerdict, SemisimpleClass, locally_pot_equiv
from ..density import prime_sieve
from .curves import CM_CURVE, ExcludedPrime, count_points, is_prime


class TableError(ValueError):
    """A table violates its structural invariants."""


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    tags: dict = field(default_factory=dict, compare=True, hash=False)
    good_reduction: bool = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise TableError(f"{self.p} is not prime")


@dataclass(frozen=True)
class TableEntry:
    record: PrimeRecord
    charpoly1: SemisimpleClass
    charpoly2: SemisimpleClass

    @property
    def p(self) -> int:
        return self.record.p


@dataclass
class FrobeniusTable:
    label1: str
    label2: str
    entries: list[TableEntry] = field(default_factory=list)
    excluded: list[tuple[int, str]] = field(default_factory=list)

    def __post_init__(self):
        self.validate()

    def validate(self):
        primes = [e.p for e in self.entries]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise TableError("primes must be strictly increasing")
        degrees = {e.charpoly1.n for e in self.entries} | {e.charpoly2.n for e in self.entries}
        if len(degrees) > 1:
            raise TableError(f"entries have mixed degrees {sorted(degrees)}")
        clash = set(primes) & {p for p, _ in self.excluded}
        if clash:
            raise TableError(f"primes both excluded and present: {sorted(clash)}")

    @property
    def degree(self) -> int | None:
        return self.entries[0].charpoly1.n if self.entries else None

    @property
    def primes(self) -> list[int]:
        return [e.p for e in self.entries]

    def entry(self, p: int) -> TableEntry:
        for e in self.entries:
            if e.p == p:
                return e
        raise KeyError(p)

    def __len__(self):
        return len(self.entries)


def _linear(c) -> SemisimpleClass:
    return SemisimpleClass(RatPoly((-c, 1)))


def cm_entry(p: int, a_p: int | None = None) -> TableEntry:
    """Frobenius data at an odd good prime for chi+chi versus Ind(psi^2).

    The first charpoly is (x - p)^2. At inert p (p = 3 mod 4) the second is
    x^2 + p^2. At split p the Frobenius pi of the CM curve satisfies
    pi + conj(pi) = a_p and pi * conj(pi) = p, so psi^2 has eigenvalues
    pi^2, conj(pi)^2 with sum a_p^2 - 2p and product p^2.
    """
    f = SemisimpleClass(RatPoly((p * p, -2 * p, 1)))
    if p % 4 == 3:
        g = SemisimpleClass(RatPoly((p * p, 0, 1)))
        tags = {"class": "inert", "mod4": 3}
    else:
        if a_p is None:
            a_p = count_points(CM_CURVE, p)
        g = SemisimpleClass(RatPoly((p * p, -(a_p * a_p - 2 * p), 1)))
        tags = {"class": "split", "mod4": 1, "a_p": a_p}
    return TableEntry(PrimeRecord(p, tags), f, g)


def cm_pair_table(X: int) -> FrobeniusTable:
    if X < 10:
        raise ValueError(f"cm_pair_table needs X >= 10, got {X}")
    entries, excluded = [], []
    for p in prime_sieve(X):
        if p == 2:
            excluded.append((2, "characteristic 2 excluded"))
            continue
        try:
            entries.append(cm_entry(p))
        except ExcludedPrime as exc:
            excluded.append((p, exc.reason))
    return FrobeniusTable("chi+chi", "Ind(psi^2)", entries, excluded)


def cyclotomic_pair_table(X: int, k1: int, k2: int) -> FrobeniusTable:
    """chi^k1 against chi^k2 for the cyclotomic character: x - p^k at p."""
    if k1 < 0 or k2 < 0:
        raise ValueError("cyclotomic exponents must be >= 0")
    entries = [
        TableEntry(PrimeRecord(p, {"mod4": p % 4}), _linear(p**k1), _linear(p**k2))
        for p in prime_sieve(X) if p != 2
    ]
    excluded = [(2, "characteristic 2 excluded")] if X >= 2 else []
    return FrobeniusTable(f"chi^{k1}", f"chi^{k2}", entries, excluded)


def _verdict(args) -> PotEquivVerdict:
    f, g, mode = args
    return locally_pot_equiv(f, g, mode=mode)


def table_verdicts(T: FrobeniusTable, mode: str = "exact", workers: int = 1) -> list[tuple[int, PotEquivVerdict]]:
    """(p, verdict) for every entry, in ascending prime order."""
    if T.entries and any(e.charpoly1.n != e.charpoly2.n for e in T.entries):
        raise TableError("degree mismatch between the two charpolys")
    jobs = [(e.charpoly1, e.charpoly2, mode) for e in T.entries]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verdict, jobs, chunksize=64))
    else:
        results = [_verdict(j) for j in jobs]
    return list(zip(T.primes, results))
