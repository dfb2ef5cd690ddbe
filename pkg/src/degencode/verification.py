"""Exhaustive verification of the rule engine against the code table,
plus an independent brute-force search for minimal sufficient slot sets.

The oracle knows nothing about the rules: for each codon it tries all 64
subsets of the six property slots and keeps those whose values alone pin
down the product. The named slot budgets (4/5/6 per role) are then
checked for sufficiency against the oracle, and any codon whose true
minimum is smaller than its budget lands in the discrepancies section
rather than failing the run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .code_table import CodeTable, ObservedPartition
from .codons import ALL_SLOTS, Codon, DiBase, MolType, Slot, all_codons, all_dibases, descriptor
from .rules import (
    Character,
    MultipletRole,
    NAMED_RULES,
    PredictedPartition,
    REQUIRED_SLOTS,
    RequiredProperties,
    RuleVerdict,
    UndefinedRole,
    law_character,
    predicted_partition,
    required_properties,
)


@dataclass(frozen=True)
class CharacterCheck:
    dibase: DiBase
    law: Character
    observed: Character

    @property
    def agree(self) -> bool:
        return self.law is self.observed


@dataclass(frozen=True)
class RuleConsistencyCheck:
    """For one di-base: every applicable named rule versus the law."""

    dibase: DiBase
    law: Character
    verdicts: tuple[RuleVerdict, ...]  # applicable rules only

    @property
    def covered(self) -> bool:
        return bool(self.verdicts)

    @property
    def agree(self) -> bool:
        return self.covered and all(v.character is self.law for v in self.verdicts)


@dataclass(frozen=True)
class PartitionCheck:
    dibase: DiBase
    predicted: PredictedPartition
    observed: ObservedPartition

    @property
    def y_half_intact(self) -> bool:
        u_codon, c_codon = self.observed.dibase.codons()[:2]
        return c_codon in self.observed.group_of(u_codon)

    @property
    def compatible(self) -> bool:
        shape = self.observed.shape
        if self.predicted is PredictedPartition.QUADRUPLET:
            return shape == (4,)
        if self.predicted is PredictedPartition.TWO_DUPLETS:
            return shape == (2, 2)
        return shape in ((2, 2), (2, 1, 1), (3, 1)) and self.y_half_intact


@dataclass(frozen=True)
class MinimalSubsetResult:
    codon: Codon
    role: MultipletRole
    paper_count: int
    paper_slots: frozenset[Slot]
    paper_slots_sufficient: bool
    minimal_size: int
    minimal_sets: tuple[frozenset[Slot], ...]
    is_stop: bool
    # False when the observed role cannot occur under the predicted
    # partition; never happens on the canonical table.
    role_consistent: bool = True

    @property
    def counts_agree(self) -> bool:
        return self.minimal_size == self.paper_count


def verify_characters(table: CodeTable) -> list[CharacterCheck]:
    """Compare the majority-law character with the table for all 16 di-bases."""
    return [
        CharacterCheck(d, law_character(d), table.observed_character(d))
        for d in all_dibases()
    ]


def verify_rule_consistency() -> list[RuleConsistencyCheck]:
    """Every applicable named rule must agree with the law, and every
    di-base must be covered by at least one named rule."""
    checks = []
    for d in all_dibases():
        verdicts = tuple(v for rule in NAMED_RULES if (v := rule(d)).applicable)
        checks.append(RuleConsistencyCheck(d, law_character(d), verdicts))
    return checks


def verify_partitions(table: CodeTable) -> list[PartitionCheck]:
    return [
        PartitionCheck(d, predicted_partition(d), table.observed_partition(d))
        for d in all_dibases()
    ]


def assign_role(table: CodeTable, codon: Codon) -> MultipletRole:
    """A codon's local role, read off the observed partition.

    The Y half (third base U or C) of a split di-base is always an intact
    duplet; the R half is a duplet only if its two codons agree.
    """
    partition = table.observed_partition(codon.dibase)
    if len(partition.groups) == 1:
        return MultipletRole.QUADRUPLET
    if descriptor(codon.b3).mol_type is MolType.Y:
        return MultipletRole.DUPLET
    _, _, a_codon, g_codon = codon.dibase.codons()
    if table.translate(a_codon) is table.translate(g_codon):
        return MultipletRole.DUPLET
    return MultipletRole.SINGLET


def _sufficient(table: CodeTable, codon: Codon, slots: tuple[Slot, ...]) -> bool:
    """A slot set is sufficient when every codon agreeing with the target
    on those slots has the same product."""
    target = table.translate(codon)
    values = [codon.slot_value(s) for s in slots]
    for other in all_codons():
        if all(other.slot_value(s) == v for s, v in zip(slots, values)):
            if table.translate(other) is not target:
                return False
    return True


class _SufficiencyIndex:
    """Sufficiency of every slot subset for every codon, in one sweep.

    For each of the 64 subsets, codons are grouped by their projected
    slot values; a subset is sufficient for a codon iff its group maps
    to a single product.
    """

    def __init__(self, table: CodeTable):
        codons = list(all_codons())
        values = [tuple(c.slot_value(s) for s in ALL_SLOTS) for c in codons]
        products = [table.translate(c) for c in codons]
        self._index = {str(c): i for i, c in enumerate(codons)}
        self._sufficient: dict[frozenset[Slot], list[bool]] = {}
        for size in range(7):
            for combo in combinations(range(6), size):
                groups: dict[tuple, set] = {}
                keys = []
                for v, product in zip(values, products):
                    key = tuple(v[j] for j in combo)
                    keys.append(key)
                    groups.setdefault(key, set()).add(product)
                slots = frozenset(ALL_SLOTS[j] for j in combo)
                self._sufficient[slots] = [len(groups[k]) == 1 for k in keys]

    def sufficient(self, codon: Codon, slots: frozenset[Slot]) -> bool:
        return self._sufficient[slots][self._index[str(codon)]]

    def sufficient_sets_of_size(self, codon: Codon, size: int) -> list[frozenset[Slot]]:
        i = self._index[str(codon)]
        return [
            frozenset(ALL_SLOTS[j] for j in combo)
            for combo in combinations(range(6), size)
            if self._sufficient[frozenset(ALL_SLOTS[j] for j in combo)][i]
        ]


def _oracle_result(table: CodeTable, codon: Codon, index: _SufficiencyIndex) -> MinimalSubsetResult:
    role = assign_role(table, codon)
    try:
        paper = required_properties(codon, role)
        role_consistent = True
    except UndefinedRole:
        slots = REQUIRED_SLOTS[role]
        paper = RequiredProperties(len(slots), slots)
        role_consistent = False

    for size in range(7):
        minimal_sets = index.sufficient_sets_of_size(codon, size)
        if minimal_sets:
            break
    return MinimalSubsetResult(
        codon=codon,
        role=role,
        paper_count=paper.count,
        paper_slots=paper.slots,
        paper_slots_sufficient=index.sufficient(codon, paper.slots),
        minimal_size=size,
        minimal_sets=tuple(minimal_sets),
        is_stop=table.translate(codon).is_stop,
        role_consistent=role_consistent,
    )


def minimal_subset_oracle(table: CodeTable, codon: Codon) -> MinimalSubsetResult:
    """Brute-force all 64 slot subsets for one codon.

    The full six-slot set is always sufficient because the slot values
    reconstruct the codon.
    """
    return _oracle_result(table, codon, _SufficiencyIndex(table))


def verify_specification_rules(table: CodeTable) -> list[MinimalSubsetResult]:
    index = _SufficiencyIndex(table)
    return [_oracle_result(table, c, index) for c in all_codons()]


@dataclass(frozen=True)
class VerificationReport:
    character_checks: tuple[CharacterCheck, ...]
    rule_consistency: tuple[RuleConsistencyCheck, ...]
    partition_checks: tuple[PartitionCheck, ...]
    specification_checks: tuple[MinimalSubsetResult, ...]

    @property
    def discrepancies(self) -> tuple[MinimalSubsetResult, ...]:
        """Codons whose true minimum differs from the named budget.

        Reported, not failed: the budgets are sufficiency claims and may
        overstate the minimum for particular codons.
        """
        return tuple(r for r in self.specification_checks if not r.counts_agree)

    @property
    def overall_pass(self) -> bool:
        return (
            all(c.agree for c in self.character_checks)
            and all(c.agree for c in self.rule_consistency)
            and all(c.compatible for c in self.partition_checks)
            and all(
                r.paper_slots_sufficient and r.role_consistent
                for r in self.specification_checks
            )
        )

    def failing_checks(self) -> list[str]:
        """Human-readable names of every failed check, in report order."""
        failures = []
        for c in self.character_checks:
            if not c.agree:
                failures.append(f"character:{c.dibase}-")
        for rc in self.rule_consistency:
            if not rc.agree:
                failures.append(f"rule_consistency:{rc.dibase}-")
        for p in self.partition_checks:
            if not p.compatible:
                failures.append(f"partition:{p.dibase}-")
        for s in self.specification_checks:
            if not (s.paper_slots_sufficient and s.role_consistent):
                failures.append(f"specification:{s.codon}")
        return failures

    def to_dict(self) -> dict:
        return {
            "character_checks": [
                {
                    "dibase": str(c.dibase),
                    "law": str(c.law),
                    "observed": str(c.observed),
                    "agree": c.agree,
                }
                for c in self.character_checks
            ],
            "rule_consistency": [
                {
                    "dibase": str(c.dibase),
                    "law": str(c.law),
                    "rules": {v.rule: str(v.character) for v in c.verdicts},
                    "covered": c.covered,
                    "agree": c.agree,
                }
                for c in self.rule_consistency
            ],
            "partition_checks": [
                {
                    "dibase": str(p.dibase),
                    "predicted": str(p.predicted),
                    "observed_groups": _format_groups(p.observed),
                    "observed_shape": _format_shape(p.observed.shape),
                    "y_half_intact": p.y_half_intact,
                    "compatible": p.compatible,
                }
                for p in self.partition_checks
            ],
            "specification_checks": [_subset_dict(r) for r in self.specification_checks],
            "discrepancies": [_subset_dict(r) for r in self.discrepancies],
            "overall_pass": self.overall_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_tsv(self) -> str:
        lines = ["section\tsubject\texpected\tactual\tok"]
        for c in self.character_checks:
            lines.append(
                f"character\t{c.dibase}-\t{c.law}\t{c.observed}\t{_ok(c.agree)}"
            )
        for rc in self.rule_consistency:
            rules = ",".join(f"{v.rule}={v.character}" for v in rc.verdicts) or "uncovered"
            lines.append(f"rule_consistency\t{rc.dibase}-\t{rc.law}\t{rules}\t{_ok(rc.agree)}")
        for p in self.partition_checks:
            lines.append(
                f"partition\t{p.dibase}-\t{p.predicted}\t"
                f"{_format_shape(p.observed.shape)}\t{_ok(p.compatible)}"
            )
        for s in self.specification_checks:
            lines.append(
                f"specification\t{s.codon}\t{s.paper_count} slots sufficient\t"
                f"min={s.minimal_size}\t{_ok(s.paper_slots_sufficient)}"
            )
        for s in self.discrepancies:
            lines.append(
                f"discrepancy\t{s.codon}\tcount {s.paper_count}\t"
                f"min {s.minimal_size}: {format_slot_sets(s.minimal_sets)}\tnote"
            )
        lines.append(f"overall\t-\tpass\t{_ok(self.overall_pass)}\t{_ok(self.overall_pass)}")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        n_char = sum(c.agree for c in self.character_checks)
        n_rule = sum(c.agree for c in self.rule_consistency)
        n_part = sum(c.compatible for c in self.partition_checks)
        n_spec = sum(r.paper_slots_sufficient for r in self.specification_checks)
        lines = [
            f"character checks: {n_char}/16",
            f"rule consistency: {n_rule}/16",
            f"partition checks: {n_part}/16",
            f"specification sufficiency: {n_spec}/64",
            f"count discrepancies: {len(self.discrepancies)}"
            + (
                " (" + ", ".join(f"{d.codon}:{d.minimal_size}<{d.paper_count}" for d in self.discrepancies) + ")"
                if self.discrepancies
                else ""
            ),
            f"overall: {'PASS' if self.overall_pass else 'FAIL'}",
        ]
        failures = self.failing_checks()
        if failures:
            lines.append("failing: " + ", ".join(failures))
        return "\n".join(lines) + "\n"


def _ok(flag: bool) -> str:
    return "ok" if flag else "FAIL"


def _format_shape(shape: tuple[int, ...]) -> str:
    return "+".join(str(n) for n in shape)


def _format_groups(partition: ObservedPartition) -> str:
    return "|".join(",".join(str(c) for c in group) for group in partition.groups)


def format_slots(slots: frozenset[Slot]) -> str:
    return "+".join(str(s) for s in ALL_SLOTS if s in slots)


def format_slot_sets(sets: tuple[frozenset[Slot], ...]) -> str:
    return "; ".join(format_slots(s) for s in sets)


def _subset_dict(r: MinimalSubsetResult) -> dict:
    return {
        "codon": str(r.codon),
        "role": str(r.role),
        "is_stop": r.is_stop,
        "paper_count": r.paper_count,
        "paper_slots": [str(s) for s in ALL_SLOTS if s in r.paper_slots],
        "paper_slots_sufficient": r.paper_slots_sufficient,
        "minimal_size": r.minimal_size,
        "minimal_sets": [
            [str(s) for s in ALL_SLOTS if s in subset] for subset in r.minimal_sets
        ],
        "counts_agree": r.counts_agree,
        "role_consistent": r.role_consistent,
    }


def is_rule_visible_mutation(table: CodeTable, mutated: CodeTable, codon: Codon) -> bool:
    """True when a single-entry mutation at `codon` changes its di-base's
    partition shape in a way the rules forbid.

    Shape changes that stay inside the predicted envelope (a divergible R
    half splitting or merging) produce alternative codes the rules
    deliberately permit and are invisible to verification.
    """
    partition = mutated.observed_partition(codon.dibase)
    if partition.shape == table.observed_partition(codon.dibase).shape:
        return False
    predicted = predicted_partition(codon.dibase)
    if predicted is PredictedPartition.QUADRUPLET:
        return partition.shape != (4,)
    if predicted is PredictedPartition.TWO_DUPLETS:
        return partition.shape != (2, 2)
    u_codon, c_codon = codon.dibase.codons()[:2]
    y_broken = mutated.translate(u_codon) is not mutated.translate(c_codon)
    return partition.shape not in ((2, 2), (2, 1, 1), (3, 1)) or y_broken


def full_report(table: CodeTable) -> VerificationReport:
    """Run every suite in deterministic U,C,A,G order and aggregate."""
    return VerificationReport(
        character_checks=tuple(verify_characters(table)),
        rule_consistency=tuple(verify_rule_consistency()),
        partition_checks=tuple(verify_partitions(table)),
        specification_checks=tuple(verify_specification_rules(table)),
    )
