"""Command-line interface.

Subcommands: classify, verify, minset, translate, census.
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Output is deterministic: identical inputs and flags give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .code_table import CodeTable, canonical_table
from .codons import (
    Codon,
    DegencodeError,
    DiBase,
    all_codons,
    all_dibases,
    coherence,
    format_signature,
    parse_codon,
    signature,
)
from .rules import (
    NAMED_RULES,
    decisive_slots,
    law_character,
    predicted_partition,
)
from .sequences import read_sequences, translate_sequence
from .verification import (
    assign_role,
    format_slot_sets,
    format_slots,
    full_report,
    minimal_subset_oracle,
)
from .rules import REQUIRED_SLOTS


def _codon_entry(codon: Codon, table: CodeTable) -> dict:
    dibase = codon.dibase
    synonyms = table.synonym_set(codon)
    role = assign_role(table, codon)
    required = REQUIRED_SLOTS[role]
    return {
        "codon": str(codon),
        "signature": format_signature(signature(codon)),
        "product": str(table.translate(codon)),
        "multiplet": synonyms.label,
        "synonyms": [str(c) for c in synonyms.sorted_codons()],
        "dibase": str(dibase),
        "dibase_character": str(law_character(dibase)),
        "b2_coherence": str(coherence(codon.b2)),
        "predicted_partition": str(predicted_partition(dibase)),
        "rules": _rule_map(dibase),
        "role": str(role),
        "required_count": len(required),
        "required_slots": format_slots(required),
    }


def _rule_map(dibase: DiBase) -> dict[str, str]:
    out = {}
    for rule in NAMED_RULES:
        verdict = rule(dibase)
        out[verdict.rule] = str(verdict.character) if verdict.applicable else "n/a"
    return out


def _dibase_entry(dibase: DiBase, table: CodeTable) -> dict:
    partition = table.observed_partition(dibase)
    return {
        "dibase": str(dibase),
        "character": str(law_character(dibase)),
        "observed_character": str(table.observed_character(dibase)),
        "b2_coherence": str(coherence(dibase.b2)),
        "decisive_slots": format_slots(decisive_slots(dibase)),
        "predicted_partition": str(predicted_partition(dibase)),
        "observed_groups": "|".join(
            ",".join(f"{c}:{table.translate(c)}" for c in group) for group in partition.groups
        ),
        "rules": _rule_map(dibase),
    }


def _emit(entries: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(entries, indent=2))
    elif fmt == "tsv":
        columns = list(entries[0])
        print("\t".join(columns))
        for entry in entries:
            print("\t".join(_tsv_cell(entry[c]) for c in columns))
    else:
        blocks = []
        for entry in entries:
            blocks.append("\n".join(f"{key}: {_tsv_cell(value)}" for key, value in entry.items()))
        print("\n\n".join(blocks))


def _tsv_cell(value) -> str:
    if isinstance(value, dict):
        return ",".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    return str(value)


def cmd_classify(args) -> int:
    table = canonical_table()
    if args.all:
        if args.dibase:
            entries = [_dibase_entry(d, table) for d in all_dibases()]
        else:
            entries = [_codon_entry(c, table) for c in all_codons()]
    elif args.target is None:
        print("classify: give a codon/di-base or --all", file=sys.stderr)
        return 2
    elif args.dibase:
        entries = [_dibase_entry(DiBase.from_string(args.target), table)]
    else:
        entries = [_codon_entry(parse_codon(args.target), table)]
    _emit(entries, args.format)
    return 0


def cmd_verify(args) -> int:
    if args.table:
        try:
            table = CodeTable.from_tsv(Path(args.table).read_text())
        except (OSError, DegencodeError) as exc:
            print(f"verify: bad table file: {exc}", file=sys.stderr)
            return 2
    else:
        table = canonical_table()
    report = full_report(table)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "tsv":
        sys.stdout.write(report.to_tsv())
    else:
        sys.stdout.write(report.summary())
    return 0 if report.overall_pass else 1


def cmd_minset(args) -> int:
    table = canonical_table()
    if not args.all and args.target is None:
        print("minset: give a codon or --all", file=sys.stderr)
        return 2
    codons = list(all_codons()) if args.all else [parse_codon(args.target)]
    entries = []
    for codon in codons:
        result = minimal_subset_oracle(table, codon)
        entries.append(
            {
                "codon": str(result.codon),
                "role": str(result.role),
                "minimal_size": result.minimal_size,
                "minimal_sets": format_slot_sets(result.minimal_sets),
                "paper_count": result.paper_count,
                "paper_slots": format_slots(result.paper_slots),
                "paper_slots_sufficient": result.paper_slots_sufficient,
                "counts_agree": result.counts_agree,
            }
        )
    _emit(entries, args.format)
    return 0


def cmd_translate(args) -> int:
    table = canonical_table()
    if args.input == "-":
        stream = sys.stdin
        source = "<stdin>"
    else:
        stream = open(args.input)
        source = args.input
    try:
        records = read_sequences(stream, fmt=args.input_format, source=source)
    finally:
        if stream is not sys.stdin:
            stream.close()
    rows = []
    for record in records:
        result = translate_sequence(record, frame=args.frame, stop_policy=args.stop_policy, table=table)
        if result.tail:
            print(
                f"warning: record {record.id!r}: {len(result.tail)} trailing "
                f"residue(s) ignored ({result.tail})",
                file=sys.stderr,
            )
        for ac in result.codons:
            rows.append(
                {
                    "record_id": result.record_id,
                    "index": ac.index,
                    "codon": str(ac.codon),
                    "signature": ac.signature,
                    "product": str(ac.product),
                    "dibase_character": str(ac.dibase_character),
                    "multiplet": ac.multiplet,
                    "role": str(ac.role),
                }
            )
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        columns = ["record_id", "index", "codon", "signature", "product",
                   "dibase_character", "multiplet", "role"]
        print("\t".join(columns))
        for row in rows:
            print("\t".join(str(row[c]) for c in columns))
    return 0


def cmd_census(args) -> int:
    table = canonical_table()
    census = table.degeneracy_census()
    entries = []
    for size, products in census.items():
        entries.append(
            {
                "multiplet": f"{size}pt",
                "size": size,
                "count": len(products),
                "products": [str(p) for p in products],
            }
        )
    _emit(entries, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degencode",
        description="Classify codons and verify the degeneration rules of the genetic code.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a codon or di-base")
    p.add_argument("target", nargs="?", help="codon (e.g. UGC) or di-base with --dibase")
    p.add_argument("--dibase", action="store_true", help="treat target as a di-base")
    p.add_argument("--all", action="store_true", help="all 64 codons (or 16 di-bases)")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the full verification report")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p.add_argument("--table", help="alternate code table (TSV: codon<TAB>product, 64 lines)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minset", help="minimal sufficient property-slot sets")
    p.add_argument("target", nargs="?", help="codon, e.g. AUG")
    p.add_argument("--all", action="store_true")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p.set_defaults(func=cmd_minset)

    p = sub.add_parser("translate", help="translate sequences with per-codon annotations")
    p.add_argument("input", nargs="?", default="-", help="FASTA/raw file, or - for stdin")
    p.add_argument("--input-format", choices=("fasta", "raw"), default="fasta")
    p.add_argument("--frame", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--stop-policy", choices=("annotate", "truncate"), default="annotate")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("census", help="degeneracy census of the canonical table")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p.set_defaults(func=cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegencodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
