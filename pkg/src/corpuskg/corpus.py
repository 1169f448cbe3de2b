"""Corpus ingestion: turn heterogeneous text files into a uniform document list.

Supported input formats:

* ``jsonl``    -- one JSON object per line with fields ``id`` (optional),
  ``text`` (required), ``source`` (optional), ``domain`` (optional)
* ``csv``      -- header row required; column names supplied by the caller
* ``termlist`` -- one term per line, ``#`` comment lines and blanks ignored

Malformed records are skipped and counted in lenient mode (the default) or
abort the run in strict mode; either way they are reported with their line
number.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError, ParameterError

logger = logging.getLogger(__name__)

SOURCES = frozenset({"smd-definitions", "arxiv", "wikipedia", "thesaurus", "other"})
DOMAINS = frozenset(
    {"heliophysics", "astrophysics", "planetary", "earth", "bio-physical", "unknown"}
)

FORMATS = ("jsonl", "csv", "termlist")


@dataclass
class Document:
    """One ingested text unit. ``text`` may be empty; ``id`` may not."""

    id: str
    text: str
    source: str = "other"
    domain: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ParameterError("document id must be nonempty")
        if self.source not in SOURCES:
            raise ParameterError(f"unknown source {self.source!r}")
        if self.domain is not None and self.domain not in DOMAINS:
            raise ParameterError(f"unknown domain {self.domain!r}")


@dataclass
class Corpus:
    """An ordered document list plus per-source counts.

    Order is ingestion order; ``provenance`` is derived from the documents
    and always sums to ``len(documents)``.
    """

    documents: list[Document] = field(default_factory=list)
    provenance: dict[str, int] = field(init=False, default_factory=dict)

    def __post_init__(self):
        seen = set()
        for doc in self.documents:
            if doc.id in seen:
                raise ParameterError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)
            self.provenance[doc.source] = self.provenance.get(doc.source, 0) + 1

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)


@dataclass
class CsvColumns:
    """Column mapping for CSV ingestion. ``text`` is mandatory."""

    text: str
    id: str | None = None
    domain: str | None = None


def ingest(
    path: str | Path,
    format: str,
    source: str = "other",
    domain: str | None = None,
    *,
    csv_columns: CsvColumns | None = None,
    strict: bool = False,
) -> Corpus:
    """Read ``path`` in the given format and return a :class:`Corpus`.

    ``source`` and ``domain`` are defaults for records that do not carry
    their own. Ids missing from the input are synthesized as
    ``<source>-<ordinal>`` with a 0-based ordinal.
    """
    if format not in FORMATS:
        raise ParameterError(f"unknown format {format!r}; expected one of {FORMATS}")
    if source not in SOURCES:
        raise ParameterError(f"unknown source {source!r}")
    if domain is not None and domain not in DOMAINS:
        raise ParameterError(f"unknown domain {domain!r}")
    if format == "csv" and csv_columns is None:
        raise ParameterError("csv ingestion requires a column mapping")

    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"input not readable: {path}")

    if format == "jsonl":
        records = _read_jsonl(path, source, domain, strict)
    elif format == "csv":
        records = _read_csv(path, source, domain, csv_columns, strict)
    else:
        records = _read_termlist(path, source, domain)

    documents = []
    seen: set[str] = set()
    skipped = 0
    for lineno, record in records:
        if record is None:
            skipped += 1
            if strict:
                raise FormatError(f"{path}:{lineno}: malformed record")
            continue
        doc_id = record.id or f"{record.source}-{len(documents)}"
        if doc_id in seen:
            skipped += 1
            msg = f"{path}:{lineno}: duplicate document id {doc_id!r}"
            if strict:
                raise FormatError(msg)
            logger.warning("%s (skipped)", msg)
            continue
        seen.add(doc_id)
        documents.append(
            Document(id=doc_id, text=record.text, source=record.source, domain=record.domain)
        )
    if skipped:
        logger.warning("%s: skipped %d malformed record(s)", path, skipped)
    return Corpus(documents)


@dataclass
class _Record:
    text: str
    source: str
    domain: str | None
    id: str | None = None


def _read_jsonl(path, source, domain, strict):
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                out.append((lineno, _reject(path, lineno, f"invalid JSON ({exc.msg})", strict)))
                continue
            if not isinstance(obj, dict) or not isinstance(obj.get("text"), str):
                out.append((lineno, _reject(path, lineno, "missing string field 'text'", strict)))
                continue
            rec_source = obj.get("source", source)
            rec_domain = obj.get("domain", domain)
            rec_id = obj.get("id")
            if rec_source not in SOURCES:
                out.append((lineno, _reject(path, lineno, f"unknown source {rec_source!r}", strict)))
                continue
            if rec_domain is not None and rec_domain not in DOMAINS:
                out.append((lineno, _reject(path, lineno, f"unknown domain {rec_domain!r}", strict)))
                continue
            if rec_id is not None and (not isinstance(rec_id, str) or not rec_id):
                out.append((lineno, _reject(path, lineno, "id must be a nonempty string", strict)))
                continue
            out.append((lineno, _Record(obj["text"], rec_source, rec_domain, rec_id)))
    return out


def _read_csv(path, source, domain, columns: CsvColumns, strict):
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise FormatError(f"{path}: empty file, header row required")
        for name in filter(None, (columns.text, columns.id, columns.domain)):
            if name not in reader.fieldnames:
                raise FormatError(f"{path}: header has no column {name!r}")
        for row in reader:
            lineno = reader.line_num
            text = row.get(columns.text)
            if text is None:
                out.append((lineno, _reject(path, lineno, "row too short", strict)))
                continue
            rec_id = row.get(columns.id) if columns.id else None
            rec_domain = row.get(columns.domain) if columns.domain else domain
            if rec_domain == "":
                rec_domain = None
            if rec_domain is not None and rec_domain not in DOMAINS:
                out.append((lineno, _reject(path, lineno, f"unknown domain {rec_domain!r}", strict)))
                continue
            out.append((lineno, _Record(text, source, rec_domain, rec_id or None)))
    return out


def _read_termlist(path, source, domain):
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            term = line.strip()
            if not term or term.startswith("#"):
                continue
            out.append((lineno, _Record(term, source, domain)))
    return out


def _reject(path, lineno, reason, strict):
    if strict:
        raise FormatError(f"{path}:{lineno}: {reason}")
    logger.warning("%s:%d: %s (skipped)", path, lineno, reason)
    return None
