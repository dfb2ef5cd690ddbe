"""The canonical genetic code: translation, synonym sets, and per-di-base
observed partitions.

STOP is treated as a product on the same footing as the twenty amino
acids, so the 64 codons partition into 21 synonym sets (the three STOP
codons form one set of size 3). The table is compiled in as data; nothing
is loaded at runtime.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .codons import (
    Codon,
    DegencodeError,
    DiBase,
    all_codons,
    canonical_key,
    parse_codon,
)
from .rules import Character


class Product(enum.Enum):
    """An amino acid (three-letter code) or STOP."""

    ALA = "Ala"
    ARG = "Arg"
    ASN = "Asn"
    ASP = "Asp"
    CYS = "Cys"
    GLN = "Gln"
    GLU = "Glu"
    GLY = "Gly"
    HIS = "His"
    ILE = "Ile"
    LEU = "Leu"
    LYS = "Lys"
    MET = "Met"
    PHE = "Phe"
    PRO = "Pro"
    SER = "Ser"
    THR = "Thr"
    TRP = "Trp"
    TYR = "Tyr"
    VAL = "Val"
    STOP = "Stop"

    def __str__(self) -> str:
        return self.value

    @property
    def is_stop(self) -> bool:
        return self is Product.STOP


class BadTableFile(DegencodeError):
    """A user-supplied table file that does not define all 64 codons."""


# The standard code, written out codon by codon in U,C,A,G-major order.
_CANONICAL_CODE = """
UUU Phe  UCU Ser  UAU Tyr  UGU Cys
UUC Phe  UCC Ser  UAC Tyr  UGC Cys
UUA Leu  UCA Ser  UAA Stop UGA Stop
UUG Leu  UCG Ser  UAG Stop UGG Trp
CUU Leu  CCU Pro  CAU His  CGU Arg
CUC Leu  CCC Pro  CAC His  CGC Arg
CUA Leu  CCA Pro  CAA Gln  CGA Arg
CUG Leu  CCG Pro  CAG Gln  CGG Arg
AUU Ile  ACU Thr  AAU Asn  AGU Ser
AUC Ile  ACC Thr  AAC Asn  AGC Ser
AUA Ile  ACA Thr  AAA Lys  AGA Arg
AUG Met  ACG Thr  AAG Lys  AGG Arg
GUU Val  GCU Ala  GAU Asp  GGU Gly
GUC Val  GCC Ala  GAC Asp  GGC Gly
GUA Val  GCA Ala  GAA Glu  GGA Gly
GUG Val  GCG Ala  GAG Glu  GGG Gly
"""


def multiplet_label(size: int) -> str:
    """Synonym-set size label: 1pt, 2pt, 3pt, 4pt or 6pt."""
    if size not in (1, 2, 3, 4, 6):
        raise ValueError(f"no multiplet class of size {size}")
    return f"{size}pt"


@dataclass(frozen=True)
class SynonymSet:
    """All codons sharing one product."""

    product: Product
    codons: frozenset[Codon]

    @property
    def size(self) -> int:
        return len(self.codons)

    @property
    def label(self) -> str:
        return multiplet_label(self.size)

    def sorted_codons(self) -> tuple[Codon, ...]:
        return tuple(sorted(self.codons, key=canonical_key))


@dataclass(frozen=True)
class ObservedPartition:
    """The four codons of a di-base grouped by equal product.

    Groups are ordered by the third base (U,C,A,G) of their first member.
    """

    dibase: DiBase
    groups: tuple[tuple[Codon, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(sorted((len(g) for g in self.groups), reverse=True))

    def group_of(self, codon: Codon) -> tuple[Codon, ...]:
        for group in self.groups:
            if codon in group:
                return group
        raise KeyError(str(codon))


class CodeTable:
    """An immutable total mapping of the 64 codons to 21 products."""

    def __init__(self, mapping: dict[Codon, Product]):
        missing = [c for c in all_codons() if c not in mapping]
        if missing or len(mapping) != 64:
            raise BadTableFile(
                f"table must define exactly the 64 codons; missing {len(missing)}, "
                f"got {len(mapping)} entries"
            )
        self._mapping = dict(mapping)

    def translate(self, codon: Codon) -> Product:
        return self._mapping[codon]

    def synonym_set(self, codon: Codon) -> SynonymSet:
        product = self.translate(codon)
        members = frozenset(c for c in all_codons() if self.translate(c) is product)
        return SynonymSet(product, members)

    def degeneracy_census(self) -> dict[int, tuple[Product, ...]]:
        """Products grouped by synonym-set size, values in table order."""
        seen: dict[Product, int] = {}
        for codon in all_codons():
            product = self.translate(codon)
            seen[product] = seen.get(product, 0) + 1
        census: dict[int, list[Product]] = {}
        for product, size in seen.items():
            census.setdefault(size, []).append(product)
        return {size: tuple(census[size]) for size in sorted(census)}

    def observed_partition(self, dibase: DiBase) -> ObservedPartition:
        groups: list[list[Codon]] = []
        by_product: dict[Product, list[Codon]] = {}
        for codon in dibase.codons():
            product = self.translate(codon)
            if product not in by_product:
                by_product[product] = []
                groups.append(by_product[product])
            by_product[product].append(codon)
        return ObservedPartition(dibase, tuple(tuple(g) for g in groups))

    def observed_character(self, dibase: DiBase) -> Character:
        """Non-discriminating iff the di-base's four codons share one product."""
        if len(self.observed_partition(dibase).groups) == 1:
            return Character.NON_DISCRIMINATING
        return Character.DISCRIMINATING

    def mutated(self, codon: Codon, product: Product) -> "CodeTable":
        """A copy with one entry changed; for fault-injection tests."""
        mapping = dict(self._mapping)
        mapping[codon] = product
        return CodeTable(mapping)

    def items(self) -> list[tuple[Codon, Product]]:
        return [(c, self._mapping[c]) for c in all_codons()]

    @staticmethod
    def from_tsv(text: str) -> "CodeTable":
        """Parse a 64-line "codon<TAB>product" file (fault-injection format)."""
        by_value = {p.value: p for p in Product}
        mapping: dict[Codon, Product] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            if len(fields) != 2:
                raise BadTableFile(f"line {lineno}: expected 'codon<TAB>product'")
            try:
                codon = parse_codon(fields[0])
            except DegencodeError as exc:
                raise BadTableFile(f"line {lineno}: {exc}") from exc
            if fields[1] not in by_value:
                raise BadTableFile(f"line {lineno}: unknown product {fields[1]!r}")
            if codon in mapping:
                raise BadTableFile(f"line {lineno}: duplicate codon {codon}")
            mapping[codon] = by_value[fields[1]]
        return CodeTable(mapping)

    def to_tsv(self) -> str:
        return "".join(f"{codon}\t{product}\n" for codon, product in self.items())


def _parse_canonical() -> CodeTable:
    by_value = {p.value: p for p in Product}
    mapping: dict[Codon, Product] = {}
    tokens = _CANONICAL_CODE.split()
    for codon_text, product_text in zip(tokens[0::2], tokens[1::2]):
        mapping[parse_codon(codon_text)] = by_value[product_text]
    return CodeTable(mapping)


_CANONICAL_TABLE: CodeTable | None = None


def canonical_table() -> CodeTable:
    """The standard genetic code (cached; construction is pure)."""
    global _CANONICAL_TABLE
    if _CANONICAL_TABLE is None:
        _CANONICAL_TABLE = _parse_canonical()
    return _CANONICAL_TABLE
