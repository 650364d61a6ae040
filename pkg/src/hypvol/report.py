"""Rendering of tables, certificates and lemma reports as md, csv or json.

Human-readable formats print lower bounds truncated (floored) to three
decimals; json carries full interval endpoints.  Output depends only on
its inputs, so identical runs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Decimal
from typing import Sequence

from .bounds import HProfile
from .certify import Certificate, LemmaReport, TableRow, floor3

FORMATS = ("md", "csv", "json")
TABLE_HEADER = ("cosh l1", "muffin volume", "area outside disks", "H", "volume")


def _short(d: Decimal) -> str:
    s = str(d)
    return s[1:] if s.startswith("0.") else s


def _h_cell(h: HProfile) -> str:
    return f"{_short(floor3(h.h.lo))} ({h.label})"


def _row_cells(row: TableRow) -> list[str]:
    lo, hi = row.c1_text
    return [f"[{lo},{hi}]", str(row.muffin_lb), str(row.area_lb), _h_cell(row.H), str(row.vol_lb)]


def _table_md(rows: Sequence[TableRow]) -> str:
    out = ["| " + " | ".join(TABLE_HEADER) + " |", "|" + "---|" * len(TABLE_HEADER)]
    out += ["| " + " | ".join(_row_cells(r)) + " |" for r in rows]
    notes = [f"- [{r.c1_text[0]},{r.c1_text[1]}]: {n}" for r in rows for n in r.notes]
    fails = [f"- [{r.c1_text[0]},{r.c1_text[1]}]: FAILED {', '.join(r.failing())}" for r in rows if not r.ok]
    if notes or fails:
        out += [""] + notes + fails
    return "\n".join(out) + "\n"


def _table_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in rows:
        w.writerow(_row_cells(r))
    return buf.getvalue()


def _row_json(r: TableRow) -> dict:
    return {
        "c1": list(r.c1_text),
        "c1_range": r.c1_range.to_json(),
        "muffin": r.muffin.to_json(),
        "area": r.area.to_json(),
        "H": r.H.h.to_json(),
        "H_label": r.H.label,
        "volume": r.volume.to_json(),
        "printed": r.printed,
        "checks": r.checks,
        "notes": r.notes,
    }


def _cert_md(cert: Certificate) -> str:
    out = [
        f"claim: {cert.claim_id}",
        f"status: {cert.status.value}",
        f"pieces: {len(cert.pieces)}",
        f"depth used: {cert.depth_used}",
        f"config digest: {cert.config_digest}",
    ]
    mb = cert.min_bound
    if mb is not None:
        out.append(f"smallest bound lower end: {floor3(mb)}")
    return "\n".join(out) + "\n"


def _cert_csv(cert: Certificate) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("lo", "hi", "bound_lo", "bound_hi", "kind"))
    for p in cert.pieces:
        d = p.to_json()
        w.writerow((d["lo"], d["hi"], d["bound_lo"], d["bound_hi"], d["kind"]))
    return buf.getvalue()


def _lemma_md(rep: LemmaReport) -> str:
    out = [f"## {rep.lemma_id.value}: {rep.verdict.value}", "", "| witness | value | claim | holds |", "|---|---|---|---|"]
    for w in rep.witnesses:
        val = "" if w.value is None else f"[{floor3(w.value.lo)}, {w.value.hi!r}]"
        out.append(f"| {w.name} | {val} | {w.claim} | {'yes' if w.holds else 'NO'} |")
    return "\n".join(out) + "\n"


def _lemma_csv_rows(rep: LemmaReport) -> list[tuple]:
    return [
        (rep.lemma_id.value, rep.verdict.value, w.name, "" if w.value is None else repr(w.value.lo),
         "" if w.value is None else repr(w.value.hi), w.claim, w.holds)
        for w in rep.witnesses
    ]


def emit_report(
    rows: Sequence[TableRow] | None,
    cert: Certificate | None,
    fmt: str,
    lemmas: Sequence[LemmaReport] | None = None,
) -> bytes:
    """Render table rows, a certificate and/or lemma reports."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        payload: dict = {}
        if rows is not None:
            payload["rows"] = [_row_json(r) for r in rows]
        if cert is not None:
            payload["certificate"] = cert.to_json()
        if lemmas is not None:
            payload["lemmas"] = [rep.to_json() for rep in lemmas]
        if set(payload) == {"certificate"}:
            payload = payload["certificate"]
        return (json.dumps(payload, indent=2) + "\n").encode()

    parts: list[str] = []
    if fmt == "md":
        if rows is not None:
            parts.append(_table_md(rows))
        if lemmas is not None:
            summary = ["| lemma | verdict |", "|---|---|"]
            summary += [f"| {rep.lemma_id.value} | {rep.verdict.value} |" for rep in lemmas]
            parts.append("\n".join(summary) + "\n")
            parts += [_lemma_md(rep) for rep in lemmas]
        if cert is not None:
            parts.append(_cert_md(cert))
        return "\n".join(parts).encode()

    # csv: one table per call; rows win over lemmas, lemmas over pieces
    if rows is not None:
        return _table_csv(rows).encode()
    if lemmas is not None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("lemma", "verdict", "witness", "value_lo", "value_hi", "claim", "holds"))
        for rep in lemmas:
            w.writerows(_lemma_csv_rows(rep))
        return buf.getvalue().encode()
    if cert is not None:
        return _cert_csv(cert).encode()
    return b""
