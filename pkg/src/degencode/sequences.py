"""FASTA and raw-text sequence ingestion, and frame-wise annotated
translation.

Input is normalized on read: case is folded, T becomes U, and any other
letter raises InvalidBase carrying the record id, line and column, so
records downstream always hold clean U/C/A/G residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Literal

from .code_table import CodeTable, Product, canonical_table
from .codons import Codon, DegencodeError, InvalidBase, format_signature, parse_base, signature
from .rules import Character, MultipletRole, law_character
from .verification import assign_role


class EmptyInput(DegencodeError):
    """No sequence data in the input at all."""


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    residues: str  # only U, C, A, G after normalization
    source: str = "<stdin>"


@dataclass(frozen=True)
class AnnotatedCodon:
    index: int  # 0-based codon position within the frame
    codon: Codon
    signature: str
    product: Product
    dibase_character: Character
    multiplet: str  # synonym-set size label, e.g. "6pt"
    role: MultipletRole


@dataclass(frozen=True)
class TranslatedSequence:
    record_id: str
    codons: tuple[AnnotatedCodon, ...]
    tail: str  # 0-2 trailing residues that did not fill a codon


def _normalize(chars: Iterable[tuple[str, int, int]], record_id: str) -> str:
    out = []
    for ch, line, column in chars:
        try:
            out.append(parse_base(ch).value)
        except InvalidBase:
            raise InvalidBase(ch, record=record_id, line=line, column=column) from None
    return "".join(out)


def read_sequences(
    stream: IO[str], fmt: Literal["fasta", "raw"] = "fasta", source: str = "<stdin>"
) -> list[SequenceRecord]:
    """Read FASTA records ('>' headers, whitespace ignored) or one raw
    record with synthesized id "stdin". Raises EmptyInput when no
    residues are present."""
    records: list[SequenceRecord] = []
    if fmt == "raw":
        chars = []
        for lineno, line in enumerate(stream, start=1):
            for col, ch in enumerate(line, start=1):
                if not ch.isspace():
                    chars.append((ch, lineno, col))
        if not chars:
            raise EmptyInput("no sequence data")
        return [SequenceRecord("stdin", _normalize(chars, "stdin"), source)]

    current_id: str | None = None
    chars: list[tuple[str, int, int]] = []

    def flush():
        if current_id is not None:
            records.append(SequenceRecord(current_id, _normalize(chars, current_id), source))

    for lineno, line in enumerate(stream, start=1):
        if line.startswith(">"):
            flush()
            current_id = line[1:].strip().split()[0] if line[1:].strip() else f"record{len(records) + 1}"
            chars = []
        elif line.strip():
            if current_id is None:
                current_id = "record1"  # headerless leading sequence
                chars = []
            for col, ch in enumerate(line, start=1):
                if not ch.isspace():
                    chars.append((ch, lineno, col))
    flush()

    if not any(r.residues for r in records):
        raise EmptyInput("no sequence data")
    return records


def annotate_codon(codon: Codon, index: int = 0, table: CodeTable | None = None) -> AnnotatedCodon:
    table = table or canonical_table()
    return AnnotatedCodon(
        index=index,
        codon=codon,
        signature=format_signature(signature(codon)),
        product=table.translate(codon),
        dibase_character=law_character(codon.dibase),
        multiplet=table.synonym_set(codon).label,
        role=assign_role(table, codon),
    )


def translate_sequence(
    record: SequenceRecord,
    frame: int = 0,
    stop_policy: Literal["annotate", "truncate"] = "annotate",
    table: CodeTable | None = None,
) -> TranslatedSequence:
    """Translate from offset `frame`, annotating each codon.

    Trailing residues that do not fill a codon are returned in `tail`.
    Under the truncate policy output ends with the first STOP codon.
    """
    if frame not in (0, 1, 2):
        raise ValueError(f"frame must be 0, 1 or 2, got {frame}")
    table = table or canonical_table()
    residues = record.residues[frame:]
    codons: list[AnnotatedCodon] = []
    for index, offset in enumerate(range(0, len(residues) - 2, 3)):
        codon = Codon(*(parse_base(ch) for ch in residues[offset : offset + 3]))
        annotated = annotate_codon(codon, index, table)
        codons.append(annotated)
        if stop_policy == "truncate" and annotated.product.is_stop:
            break
    tail = "" if stop_policy == "truncate" else residues[len(residues) - len(residues) % 3 :]
    return TranslatedSequence(record.id, tuple(codons), tail)
