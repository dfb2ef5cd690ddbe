"""Bases, codons, di-bases, and the six-slot property representation.

Each base carries two properties: its molecular type (pyrimidine Y or
purine R) and the number of hydrogen bonds it forms in codon-anticodon
pairing (2 or 3). A codon is then an ordered arrangement of six property
values, two per position, and that arrangement is the canonical form the
rule machinery operates on; the letters are a reconstructible view.

All values here are immutable and all functions pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class DegencodeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidBase(DegencodeError):
    """A character outside the U/C/A/G (or T) alphabet.

    ``record``, ``line`` and ``column`` are filled in by the sequence
    reader; for bare codon/base parsing only ``offset`` is meaningful.
    """

    def __init__(self, char: str, offset: int = 0, *, record: str | None = None,
                 line: int | None = None, column: int | None = None):
        self.char = char
        self.offset = offset
        self.record = record
        self.line = line
        self.column = column
        where = f"offset {offset}"
        if record is not None:
            where = f"record {record!r}, line {line}, column {column}"
        super().__init__(f"invalid base {char!r} at {where}")


class WrongLength(DegencodeError):
    """A codon string whose length is not 3."""

    def __init__(self, text: str):
        self.text = text
        super().__init__(f"codon must be 3 bases, got {len(text)}: {text!r}")


class MolType(enum.Enum):
    """Molecular type: pyrimidine (Y) or purine (R)."""

    Y = "Y"
    R = "R"

    def __str__(self) -> str:
        return self.value


class Coherence(enum.Enum):
    """Whether a base's two properties carry the same rule character.

    C and A are coherent; U and G are non-coherent.
    """

    COHERENT = "coherent"
    NON_COHERENT = "non-coherent"

    def __str__(self) -> str:
        return self.value


class Base(enum.Enum):
    U = "U"
    C = "C"
    A = "A"
    G = "G"

    def __str__(self) -> str:
        return self.value


class DualDescriptor(NamedTuple):
    """The (molecular type, hydrogen-bond count) pair of a base."""

    mol_type: MolType
    h_bonds: int

    def __str__(self) -> str:
        return f"{self.mol_type}/{self.h_bonds}"


_DESCRIPTORS: dict[Base, DualDescriptor] = {
    Base.U: DualDescriptor(MolType.Y, 2),
    Base.C: DualDescriptor(MolType.Y, 3),
    Base.A: DualDescriptor(MolType.R, 2),
    Base.G: DualDescriptor(MolType.R, 3),
}

# Canonical enumeration order, used everywhere output determinism matters.
BASE_ORDER: tuple[Base, ...] = (Base.U, Base.C, Base.A, Base.G)


def descriptor(base: Base) -> DualDescriptor:
    """The fixed property pair of a base: U=Y/2, C=Y/3, A=R/2, G=R/3."""
    return _DESCRIPTORS[base]


def coherence(base: Base) -> Coherence:
    """Coherent when both properties pull the same way.

    Y and 3 are the non-discriminating properties, R and 2 the
    discriminating ones (see rules.property_character); a base is
    coherent exactly when its pair is Y/3 or R/2.
    """
    mt, nhb = descriptor(base)
    same = (mt is MolType.Y) == (nhb == 3)
    return Coherence.COHERENT if same else Coherence.NON_COHERENT


def parse_base(ch: str, offset: int = 0) -> Base:
    """Parse one base letter, case-insensitively; T normalizes to U."""
    upper = ch.upper()
    if upper == "T":
        upper = "U"
    try:
        return Base(upper)
    except ValueError:
        raise InvalidBase(ch, offset) from None


class PropertyKind(enum.Enum):
    MT = "mT"
    NHB = "nHb"

    def __str__(self) -> str:
        return self.value


class Slot(NamedTuple):
    """One of the six property slots of a codon: (position, kind)."""

    position: int
    kind: PropertyKind

    def __str__(self) -> str:
        return f"B{self.position}.{self.kind}"


ALL_SLOTS: tuple[Slot, ...] = tuple(
    Slot(pos, kind) for pos in (1, 2, 3) for kind in (PropertyKind.MT, PropertyKind.NHB)
)


@dataclass(frozen=True)
class DiBase:
    """The first two bases of a codon; 16 exist."""

    b1: Base
    b2: Base

    def __str__(self) -> str:
        return f"{self.b1}{self.b2}"

    @staticmethod
    def from_string(text: str) -> "DiBase":
        text = text.strip().rstrip("-")
        if len(text) != 2:
            raise WrongLength(text)
        return DiBase(parse_base(text[0], 0), parse_base(text[1], 1))

    def codons(self) -> tuple["Codon", ...]:
        """The four codons sharing this di-base, in U,C,A,G third-base order."""
        return tuple(Codon(self.b1, self.b2, b3) for b3 in BASE_ORDER)


@dataclass(frozen=True)
class Codon:
    """An ordered base triple; position is semantically significant."""

    b1: Base
    b2: Base
    b3: Base

    def __str__(self) -> str:
        return f"{self.b1}{self.b2}{self.b3}"

    @property
    def dibase(self) -> DiBase:
        return DiBase(self.b1, self.b2)

    def base_at(self, position: int) -> Base:
        return (self.b1, self.b2, self.b3)[position - 1]

    def slot_value(self, slot: Slot) -> MolType | int:
        d = descriptor(self.base_at(slot.position))
        return d.mol_type if slot.kind is PropertyKind.MT else d.h_bonds


def parse_codon(text: str) -> Codon:
    """Parse a 3-letter codon string; T→U, case-insensitive."""
    text = text.strip()
    if len(text) != 3:
        raise WrongLength(text)
    return Codon(*(parse_base(ch, i) for i, ch in enumerate(text)))


@dataclass(frozen=True)
class PropertyVector:
    """The six positioned properties of a codon, one descriptor per position."""

    d1: DualDescriptor
    d2: DualDescriptor
    d3: DualDescriptor

    def descriptors(self) -> tuple[DualDescriptor, DualDescriptor, DualDescriptor]:
        return (self.d1, self.d2, self.d3)

    def value(self, slot: Slot) -> MolType | int:
        d = self.descriptors()[slot.position - 1]
        return d.mol_type if slot.kind is PropertyKind.MT else d.h_bonds

    def to_codon(self) -> Codon:
        """Reconstruct the codon; the six slots are injective over the 64."""
        by_descriptor = {v: k for k, v in _DESCRIPTORS.items()}
        return Codon(*(by_descriptor[d] for d in self.descriptors()))

    def __str__(self) -> str:
        return format_signature(self)


def signature(codon: Codon) -> PropertyVector:
    """The codon's six-slot property vector, e.g. UGC → Y/2 R/3 Y/3."""
    return PropertyVector(*(descriptor(b) for b in (codon.b1, codon.b2, codon.b3)))


def format_signature(vector: PropertyVector) -> str:
    """Canonical one-line signature text: "mT/nHb mT/nHb mT/nHb"."""
    return " ".join(str(d) for d in vector.descriptors())


def parse_signature(text: str) -> PropertyVector:
    """Inverse of format_signature."""
    parts = text.split()
    if len(parts) != 3:
        raise WrongLength(text)
    descriptors = []
    for part in parts:
        mt_text, _, nhb_text = part.partition("/")
        try:
            descriptors.append(DualDescriptor(MolType(mt_text), int(nhb_text)))
        except ValueError:
            raise InvalidBase(part) from None
    vector = PropertyVector(*descriptors)
    vector.to_codon()  # rejects descriptor pairs outside the four real bases
    return vector


def canonical_key(item: Codon | DiBase) -> tuple[int, ...]:
    """Sort key placing bases in U,C,A,G order (not alphabetical)."""
    if isinstance(item, Codon):
        bases: tuple[Base, ...] = (item.b1, item.b2, item.b3)
    else:
        bases = (item.b1, item.b2)
    return tuple(BASE_ORDER.index(b) for b in bases)


def all_codons() -> Iterator[Codon]:
    """All 64 codons in U,C,A,G-major order."""
    for b1 in BASE_ORDER:
        for b2 in BASE_ORDER:
            for b3 in BASE_ORDER:
                yield Codon(b1, b2, b3)


def all_dibases() -> Iterator[DiBase]:
    """All 16 di-bases in U,C,A,G-major order."""
    for b1 in BASE_ORDER:
        for b2 in BASE_ORDER:
            yield DiBase(b1, b2)
