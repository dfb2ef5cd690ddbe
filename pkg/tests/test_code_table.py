"""The canonical table, synonym sets, census, and observed partitions."""

import pytest

from degencode.code_table import BadTableFile, CodeTable, Product, canonical_table, multiplet_label
from degencode.codons import DiBase, all_codons, all_dibases, coherence, parse_codon, Coherence
from degencode.rules import Character

# Independent encoding of the standard code (NCBI-style one-letter string,
# codons in U,C,A,G-major order), used as a checksum against the compiled
# table.
_NCBI_AAS = "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG"
_ONE_TO_THREE = {
    "A": Product.ALA, "R": Product.ARG, "N": Product.ASN, "D": Product.ASP,
    "C": Product.CYS, "Q": Product.GLN, "E": Product.GLU, "G": Product.GLY,
    "H": Product.HIS, "I": Product.ILE, "L": Product.LEU, "K": Product.LYS,
    "M": Product.MET, "F": Product.PHE, "P": Product.PRO, "S": Product.SER,
    "T": Product.THR, "W": Product.TRP, "Y": Product.TYR, "V": Product.VAL,
    "*": Product.STOP,
}


@pytest.fixture(scope="module")
def table():
    return canonical_table()


def test_checksum_against_independent_encoding(table):
    for codon, letter in zip(all_codons(), _NCBI_AAS):
        assert table.translate(codon) is _ONE_TO_THREE[letter], str(codon)


@pytest.mark.parametrize(
    "codon, product",
    [
        ("UUU", Product.PHE),
        ("UGA", Product.STOP),
        ("GCG", Product.ALA),
        ("AUG", Product.MET),
        ("UGG", Product.TRP),
        ("CGA", Product.ARG),
    ],
)
def test_canonical_entries(table, codon, product):
    assert table.translate(parse_codon(codon)) is product


def test_stop_codons_and_product_count(table):
    stops = [c for c in all_codons() if table.translate(c).is_stop]
    assert sorted(str(c) for c in stops) == ["UAA", "UAG", "UGA"]
    assert len({table.translate(c) for c in all_codons()}) == 21


def test_synonym_sets(table):
    leu = table.synonym_set(parse_codon("CUU"))
    assert {str(c) for c in leu.codons} == {"CUU", "CUC", "CUA", "CUG", "UUA", "UUG"}
    assert leu.label == "6pt"
    trp = table.synonym_set(parse_codon("UGG"))
    assert {str(c) for c in trp.codons} == {"UGG"}
    assert trp.label == "1pt"
    ile = table.synonym_set(parse_codon("AUU"))
    assert {str(c) for c in ile.codons} == {"AUU", "AUC", "AUA"}
    assert ile.label == "3pt"


def test_degeneracy_census(table):
    census = table.degeneracy_census()
    assert set(census[1]) == {Product.MET, Product.TRP}
    assert set(census[3]) == {Product.ILE, Product.STOP}
    assert set(census[4]) == {Product.VAL, Product.PRO, Product.THR, Product.ALA, Product.GLY}
    assert set(census[6]) == {Product.LEU, Product.SER, Product.ARG}
    assert len(census[2]) == 9
    assert sum(size * len(products) for size, products in census.items()) == 64


def test_observed_partitions(table):
    gu = table.observed_partition(DiBase.from_string("GU"))
    assert gu.shape == (4,)
    ug = table.observed_partition(DiBase.from_string("UG"))
    assert [[str(c) for c in g] for g in ug.groups] == [["UGU", "UGC"], ["UGA"], ["UGG"]]
    ua = table.observed_partition(DiBase.from_string("UA"))
    assert [[str(c) for c in g] for g in ua.groups] == [["UAU", "UAC"], ["UAA", "UAG"]]


def test_observed_characters(table):
    assert table.observed_character(DiBase.from_string("GC")) is Character.NON_DISCRIMINATING
    assert table.observed_character(DiBase.from_string("AU")) is Character.DISCRIMINATING
    assert table.observed_character(DiBase.from_string("CA")) is Character.DISCRIMINATING


def test_character_split_is_eight_eight(table):
    observed = [table.observed_character(d) for d in all_dibases()]
    assert sum(1 for c in observed if c is Character.DISCRIMINATING) == 8


def test_partition_shapes_closed_set(table):
    shapes = [table.observed_partition(d).shape for d in all_dibases()]
    assert set(shapes) <= {(4,), (2, 2), (2, 1, 1), (3, 1)}


def test_y_half_never_splits(table):
    for d in all_dibases():
        u_codon, c_codon = d.codons()[:2]
        assert table.translate(u_codon) is table.translate(c_codon), str(d)


def test_r_half_splits_only_at_non_coherent_b2(table):
    for d in all_dibases():
        _, _, a_codon, g_codon = d.codons()
        if table.translate(a_codon) is not table.translate(g_codon):
            assert coherence(d.b2) is Coherence.NON_COHERENT, str(d)


def test_multiplet_label():
    assert multiplet_label(6) == "6pt"
    with pytest.raises(ValueError):
        multiplet_label(5)


def test_tsv_round_trip(table):
    assert CodeTable.from_tsv(table.to_tsv()).items() == table.items()


def test_tsv_rejects_bad_input(table):
    with pytest.raises(BadTableFile):
        CodeTable.from_tsv("UUU\tPhe\n")  # only one of 64 codons
    with pytest.raises(BadTableFile):
        CodeTable.from_tsv(table.to_tsv() + "UUU\tLeu\n")  # duplicate
    with pytest.raises(BadTableFile):
        CodeTable.from_tsv(table.to_tsv().replace("Phe", "Xyz", 1))


def test_mutated_table_differs_in_one_entry(table):
    mutated = table.mutated(parse_codon("UGG"), Product.ARG)
    changed = [c for c, p in mutated.items() if table.translate(c) is not p]
    assert [str(c) for c in changed] == ["UGG"]
