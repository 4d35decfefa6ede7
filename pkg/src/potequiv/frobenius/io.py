"""Text formats for Frobenius tables and a_p tables.

Frobenius table, one record per line::

    #degree=2
    #label1=chi+chi
    #label2=Ind(psi^2)
    #excluded 2 characteristic 2 excluded
    #tag 5 a_p=-2 class=split mod4=1
    5;1 -10 25;1 6 25

Coefficients are listed highest degree first and may be integers or
rationals such as ``3/4``. ``#tag`` and ``#excluded`` lines are optional
metadata; any other ``#`` line is a comment.

a_p table::

    #weight=2 #level=11
    3 -1
    5 1
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ..algebra import ContractError, RatPoly
from ..core import SemisimpleClass
from .tables import FrobeniusTable, PrimeRecord, TableEntry, TableError
from .twist import APTable


class TableFormatError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _tokens(text: str, offset: int):
    """Yield (token, 1-based column) for whitespace-separated tokens."""
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        yield text[i:j], offset + i + 1
        i = j


def _parse_int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TableFormatError(f"expected an integer, got {tok!r}", lineno, col) from None


def _parse_coeffs(text: str, offset: int, lineno: int) -> RatPoly:
    coeffs = []
    for tok, col in _tokens(text, offset):
        try:
            coeffs.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise TableFormatError(f"bad coefficient {tok!r}", lineno, col) from None
    if not coeffs:
        raise TableFormatError("empty coefficient list", lineno, offset + 1)
    return RatPoly.from_high(coeffs)


def _format_tag_value(v) -> str:
    return str(v)


def _parse_tag_value(s: str):
    try:
        return int(s)
    except ValueError:
        return s


def write_frobenius_table(T: FrobeniusTable, path) -> None:
    Path(path).write_text(format_frobenius_table(T))


def format_frobenius_table(T: FrobeniusTable) -> str:
    lines = []
    if T.degree is not None:
        lines.append(f"#degree={T.degree}")
    lines.append(f"#label1={T.label1}")
    lines.append(f"#label2={T.label2}")
    for p, reason in T.excluded:
        lines.append(f"#excluded {p} {reason}")
    for e in T.entries:
        if e.record.tags:
            kv = " ".join(f"{k}={_format_tag_value(v)}" for k, v in sorted(e.record.tags.items()))
            lines.append(f"#tag {e.p} {kv}")
        c1 = " ".join(str(a) for a in e.charpoly1.charpoly.high_coeffs())
        c2 = " ".join(str(a) for a in e.charpoly2.charpoly.high_coeffs())
        lines.append(f"{e.p};{c1};{c2}")
    return "\n".join(lines) + "\n"


def parse_frobenius_table(path) -> FrobeniusTable:
    return parse_frobenius_text(Path(path).read_text())


def parse_frobenius_text(text: str) -> FrobeniusTable:
    degree = None
    label1 = label2 = ""
    excluded: list[tuple[int, str]] = []
    tags: dict[int, dict] = {}
    entries: list[TableEntry] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:]
            if body.startswith("degree="):
                degree = _parse_int(body[7:].strip(), lineno, 9)
                if degree < 1:
                    raise TableFormatError("degree must be >= 1", lineno, 9)
            elif body.startswith("label1="):
                label1 = body[7:]
            elif body.startswith("label2="):
                label2 = body[7:]
            elif body.startswith("excluded "):
                parts = body[9:].split(None, 1)
                if not parts:
                    raise TableFormatError("excluded line needs a prime", lineno, 11)
                excluded.append((_parse_int(parts[0], lineno, 11), parts[1] if len(parts) > 1 else ""))
            elif body.startswith("tag "):
                toks = list(_tokens(body[4:], 5))
                if not toks:
                    raise TableFormatError("tag line needs a prime", lineno, 6)
                p = _parse_int(toks[0][0], lineno, toks[0][1])
                d = {}
                for tok, col in toks[1:]:
                    if "=" not in tok:
                        raise TableFormatError(f"tag {tok!r} is not key=value", lineno, col)
                    k, v = tok.split("=", 1)
                    d[k] = _parse_tag_value(v)
                tags[p] = d
            continue
        fields = line.split(";")
        if len(fields) != 3:
            raise TableFormatError(f"expected 3 ';'-separated fields, found {len(fields)}", lineno, 1)
        if degree is None:
            raise TableFormatError("missing '#degree=n' header before first record", lineno, 1)
        p = _parse_int(fields[0].strip(), lineno, 1)
        off1 = len(fields[0]) + 1
        off2 = off1 + len(fields[1]) + 1
        f = _parse_coeffs(fields[1], off1, lineno)
        g = _parse_coeffs(fields[2], off2, lineno)
        for poly, off in ((f, off1), (g, off2)):
            if poly.degree != degree:
                raise TableFormatError(f"charpoly of degree {poly.degree}, header says {degree}", lineno, off + 1)
        if p in seen:
            raise TableFormatError(f"duplicate prime {p}", lineno, 1)
        if entries and p < entries[-1].p:
            raise TableFormatError(f"prime {p} out of order after {entries[-1].p}", lineno, 1)
        seen.add(p)
        try:
            record = PrimeRecord(p, tags.get(p, {}))
            entry = TableEntry(record, SemisimpleClass(f), SemisimpleClass(g))
        except (ContractError, TableError) as exc:
            raise TableFormatError(str(exc), lineno, 1) from None
        entries.append(entry)
    try:
        return FrobeniusTable(label1, label2, entries, excluded)
    except TableError as exc:
        raise TableFormatError(str(exc), 0) from None


def write_ap_table(A: APTable, path) -> None:
    Path(path).write_text(format_ap_table(A))


def format_ap_table(A: APTable) -> str:
    lines = [f"#weight={A.weight} #level={A.level}"]
    if A.label:
        lines.append(f"#label={A.label}")
    lines += [f"{p} {a}" for p, a in sorted(A.ap.items())]
    return "\n".join(lines) + "\n"


def parse_ap_table(path) -> APTable:
    path = Path(path)
    return parse_ap_text(path.read_text(), default_label=path.stem)


def parse_ap_text(text: str, default_label: str = "") -> APTable:
    weight = level = None
    label = default_label
    ap: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("#label="):
                label = line[7:]
                continue
            for tok, col in _tokens(raw, 0):
                if tok.startswith("#weight="):
                    weight = _parse_int(tok[8:], lineno, col + 8)
                elif tok.startswith("#level="):
                    level = _parse_int(tok[7:], lineno, col + 7)
            continue
        toks = list(_tokens(raw, 0))
        if len(toks) != 2:
            raise TableFormatError(f"expected 'p a_p', found {len(toks)} fields", lineno, 1)
        p = _parse_int(toks[0][0], lineno, toks[0][1])
        if p in ap:
            raise TableFormatError(f"duplicate prime {p}", lineno, toks[0][1])
        ap[p] = _parse_int(toks[1][0], lineno, toks[1][1])
    if weight is None or level is None:
        raise TableFormatError("missing '#weight=k #level=N' header", 1)
    return APTable(label, ap, weight, level)
