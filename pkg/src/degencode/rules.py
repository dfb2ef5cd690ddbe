"""The degeneration rules: property characters, per-rule di-base verdicts,
the majority law, decisive slots, predicted partitions, and the
required-property budgets for amino-acid specification.

Each named rule is implemented independently so that its agreement with
the majority law can be checked rather than assumed. Only three of the
six codon slots ever matter for the discriminating character: the
hydrogen-bond count of B1 and both properties of B2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .codons import (
    ALL_SLOTS,
    Base,
    Codon,
    Coherence,
    DegencodeError,
    DiBase,
    MolType,
    PropertyKind,
    Slot,
    coherence,
    descriptor,
)


class Character(enum.Enum):
    """Discriminating (splits its four codons) or non-discriminating."""

    DISCRIMINATING = "D"
    NON_DISCRIMINATING = "non-D"

    def __str__(self) -> str:
        return self.value


class UndefinedRole(DegencodeError):
    """A multiplet role inconsistent with the codon's partition shape."""


def property_character(kind: PropertyKind, value: MolType | int) -> Character:
    """Y and 3 are non-discriminating; R and 2 are discriminating."""
    if kind is PropertyKind.MT:
        if not isinstance(value, MolType):
            raise ValueError(f"mT value must be a MolType, got {value!r}")
        return Character.NON_DISCRIMINATING if value is MolType.Y else Character.DISCRIMINATING
    if value not in (2, 3):
        raise ValueError(f"nHb value must be 2 or 3, got {value!r}")
    return Character.NON_DISCRIMINATING if value == 3 else Character.DISCRIMINATING


@dataclass(frozen=True)
class RuleVerdict:
    rule: str
    applicable: bool
    character: Character | None = None
    note: str = ""

    def __post_init__(self):
        assert (self.character is not None) == self.applicable


def rule1_verdict(d: DiBase) -> RuleVerdict:
    """A/C rule: C makes the di-base non-D and A makes it D, with B2
    breaking the tie when both occur (CA- is D, AC- is non-D)."""
    contains = {d.b1, d.b2}
    if Base.A not in contains and Base.C not in contains:
        return RuleVerdict("rule1", False)
    if d.b2 is Base.C:
        return RuleVerdict("rule1", True, Character.NON_DISCRIMINATING)
    if d.b2 is Base.A:
        return RuleVerdict("rule1", True, Character.DISCRIMINATING)
    if Base.C in contains:
        return RuleVerdict("rule1", True, Character.NON_DISCRIMINATING)
    return RuleVerdict("rule1", True, Character.DISCRIMINATING)


def rule_ug_verdict(d: DiBase) -> RuleVerdict:
    """U/G rule: among di-bases built only from U and G, -U- in second
    position gives non-D and -G- gives D. The uniform pairs UU- and GG-
    are not covered by that statement; their verdicts delegate to the
    majority law and are flagged as an extension."""
    if d.b1 not in (Base.U, Base.G) or d.b2 not in (Base.U, Base.G):
        return RuleVerdict("rule_ug", False)
    if d.b1 is not d.b2:
        char = (
            Character.NON_DISCRIMINATING if d.b2 is Base.U else Character.DISCRIMINATING
        )
        return RuleVerdict("rule_ug", True, char)
    return RuleVerdict("rule_ug", True, law_character(d), note="extension: delegated to majority law")


def rule3_verdict(d: DiBase) -> RuleVerdict:
    """nHb rule: both first-position bases with 3 bonds → non-D; both
    with 2 bonds → D; mixed pairs are outside this rule."""
    n1, n2 = descriptor(d.b1).h_bonds, descriptor(d.b2).h_bonds
    if n1 != n2:
        return RuleVerdict("rule3", False)
    char = Character.NON_DISCRIMINATING if n1 == 3 else Character.DISCRIMINATING
    return RuleVerdict("rule3", True, char)


NAMED_RULES = (rule1_verdict, rule_ug_verdict, rule3_verdict)

# The three slots that decide the discriminating character: B1's bond
# count and both properties of B2. The other three are irrelevant to it.
LAW_SLOTS: tuple[Slot, ...] = (
    Slot(1, PropertyKind.NHB),
    Slot(2, PropertyKind.MT),
    Slot(2, PropertyKind.NHB),
)


def law_character(d: DiBase) -> Character:
    """Majority vote over the three decisive slot characters.

    Three voters and two outcomes, so ties cannot occur.
    """
    d1, d2 = descriptor(d.b1), descriptor(d.b2)
    votes = [
        property_character(PropertyKind.NHB, d1.h_bonds),
        property_character(PropertyKind.MT, d2.mol_type),
        property_character(PropertyKind.NHB, d2.h_bonds),
    ]
    n_disc = sum(1 for v in votes if v is Character.DISCRIMINATING)
    return Character.DISCRIMINATING if n_disc >= 2 else Character.NON_DISCRIMINATING


def decisive_slots(d: DiBase) -> frozenset[Slot]:
    """A coherent B2 decides alone; a non-coherent B2 also needs B1's nHb."""
    if coherence(d.b2) is Coherence.COHERENT:
        return frozenset({Slot(2, PropertyKind.MT), Slot(2, PropertyKind.NHB)})
    return frozenset(LAW_SLOTS)


class PredictedPartition(enum.Enum):
    """How a di-base's four codons are predicted to group."""

    QUADRUPLET = "quadruplet"
    TWO_DUPLETS = "two-duplets"
    # D with non-coherent B2: the Y half stays a duplet; the R half is
    # permitted, not forced, to split into singlets.
    DUPLET_PLUS_DIVERGIBLE_R_HALF = "duplet-plus-divergible-R-half"

    def __str__(self) -> str:
        return self.value


def predicted_partition(d: DiBase) -> PredictedPartition:
    if law_character(d) is Character.NON_DISCRIMINATING:
        return PredictedPartition.QUADRUPLET
    if coherence(d.b2) is Coherence.COHERENT:
        return PredictedPartition.TWO_DUPLETS
    return PredictedPartition.DUPLET_PLUS_DIVERGIBLE_R_HALF


class MultipletRole(enum.Enum):
    """A codon's local role: member of a quadruplet, an intact duplet,
    or a diverged R-half (singlet)."""

    QUADRUPLET = "4pt"
    DUPLET = "2pt"
    SINGLET = "1pt"

    def __str__(self) -> str:
        return self.value


_B1B2_SLOTS = frozenset(s for s in ALL_SLOTS if s.position in (1, 2))

REQUIRED_SLOTS: dict[MultipletRole, frozenset[Slot]] = {
    MultipletRole.QUADRUPLET: _B1B2_SLOTS,
    MultipletRole.DUPLET: _B1B2_SLOTS | {Slot(3, PropertyKind.MT)},
    MultipletRole.SINGLET: frozenset(ALL_SLOTS),
}


@dataclass(frozen=True)
class RequiredProperties:
    """How many, and which, of the six slots specify the product."""

    count: int
    slots: frozenset[Slot]

    def __post_init__(self):
        assert self.count == len(self.slots)

    def sorted_slots(self) -> tuple[Slot, ...]:
        return tuple(s for s in ALL_SLOTS if s in self.slots)


def required_properties(codon: Codon, role: MultipletRole) -> RequiredProperties:
    """The named slot budget for a codon's role: 4 for quadruplet members
    (all of B1 and B2), 5 for duplet members (plus B3's molecular type),
    6 for singlet members.

    Raises UndefinedRole when the role cannot occur at the codon's
    di-base under the predicted partition.
    """
    shape = predicted_partition(codon.dibase)
    if role is MultipletRole.QUADRUPLET and shape is not PredictedPartition.QUADRUPLET:
        raise UndefinedRole(f"{codon} sits in a discriminating di-base; 4pt role undefined")
    if role is not MultipletRole.QUADRUPLET and shape is PredictedPartition.QUADRUPLET:
        raise UndefinedRole(f"{codon} sits in a non-discriminating di-base; {role} role undefined")
    if role is MultipletRole.SINGLET:
        if shape is not PredictedPartition.DUPLET_PLUS_DIVERGIBLE_R_HALF:
            raise UndefinedRole(f"di-base {codon.dibase}- cannot diverge into singlets")
        if descriptor(codon.b3).mol_type is not MolType.R:
            raise UndefinedRole(f"{codon} lies in the Y half, which never diverges")
    slots = REQUIRED_SLOTS[role]
    return RequiredProperties(len(slots), slots)
