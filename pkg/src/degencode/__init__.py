"""Codon property calculus: the degeneration rules of the genetic code,
their exhaustive verification, and annotated sequence translation."""

from .codons import (
    ALL_SLOTS,
    Base,
    Codon,
    Coherence,
    DegencodeError,
    DiBase,
    DualDescriptor,
    InvalidBase,
    MolType,
    PropertyKind,
    PropertyVector,
    Slot,
    WrongLength,
    all_codons,
    all_dibases,
    coherence,
    descriptor,
    format_signature,
    parse_base,
    parse_codon,
    parse_signature,
    signature,
)
from .code_table import (
    BadTableFile,
    CodeTable,
    ObservedPartition,
    Product,
    SynonymSet,
    canonical_table,
    multiplet_label,
)
from .rules import (
    Character,
    MultipletRole,
    PredictedPartition,
    RequiredProperties,
    RuleVerdict,
    UndefinedRole,
    decisive_slots,
    law_character,
    predicted_partition,
    property_character,
    required_properties,
    rule1_verdict,
    rule3_verdict,
    rule_ug_verdict,
)
from .sequences import (
    AnnotatedCodon,
    EmptyInput,
    SequenceRecord,
    TranslatedSequence,
    read_sequences,
    translate_sequence,
)
from .verification import (
    MinimalSubsetResult,
    VerificationReport,
    assign_role,
    full_report,
    minimal_subset_oracle,
    verify_characters,
    verify_partitions,
    verify_rule_consistency,
    verify_specification_rules,
)

__version__ = "0.1.0"
