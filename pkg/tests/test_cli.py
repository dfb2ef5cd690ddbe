"""CLI contracts: subcommands, formats, exit codes, determinism."""

import json

import pytest

from degencode.cli import main
from degencode.code_table import Product, canonical_table
from degencode.codons import parse_codon


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_codon(capsys):
    code, out, _ = run(capsys, "classify", "UGC")
    assert code == 0
    assert "signature: Y/2 R/3 Y/3" in out
    assert "product: Cys" in out
    assert "dibase_character: D" in out


def test_classify_dibase(capsys):
    code, out, _ = run(capsys, "classify", "--dibase", "GU")
    assert code == 0
    assert "character: non-D" in out
    assert "predicted_partition: quadruplet" in out
    assert "Val" in out


def test_classify_parse_error(capsys):
    code, _, err = run(capsys, "classify", "XYZ")
    assert code == 2
    assert "invalid base" in err


def test_classify_requires_target(capsys):
    code, _, err = run(capsys, "classify")
    assert code == 2


def test_classify_all_json_round_trips_the_table(capsys):
    code, out, _ = run(capsys, "classify", "--all", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 64
    table = canonical_table()
    for entry in entries:
        assert str(table.translate(parse_codon(entry["codon"]))) == entry["product"]


def test_classify_all_dibases(capsys):
    code, out, _ = run(capsys, "classify", "--all", "--dibase", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 16


def test_classify_tsv_json_parity(capsys):
    _, tsv_out, _ = run(capsys, "classify", "UGC", "--format", "tsv")
    _, json_out, _ = run(capsys, "classify", "UGC", "--format", "json")
    header, row = tsv_out.strip().split("\n")
    tsv_entry = dict(zip(header.split("\t"), row.split("\t")))
    json_entry = json.loads(json_out)[0]
    assert set(tsv_entry) == set(json_entry)
    assert tsv_entry["codon"] == json_entry["codon"]
    assert tsv_entry["product"] == json_entry["product"]
    assert tsv_entry["synonyms"] == ",".join(json_entry["synonyms"])


def test_verify_passes_on_canonical_table(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "overall: PASS" in out


def test_verify_json_stable(capsys):
    code1, out1, _ = run(capsys, "verify", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["overall_pass"] is True


def test_verify_tsv(capsys):
    code, out, _ = run(capsys, "verify", "--format", "tsv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "section\tsubject\texpected\tactual\tok"
    assert not any("\tFAIL" in line for line in lines)


def test_verify_mutated_table_exits_1(capsys, tmp_path):
    table = canonical_table().mutated(parse_codon("GGG"), Product.TRP)
    path = tmp_path / "mutated.tsv"
    path.write_text(table.to_tsv())
    code, out, _ = run(capsys, "verify", "--table", str(path))
    assert code == 1
    assert "overall: FAIL" in out
    assert "partition:GG-" in out


def test_verify_bad_table_file_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("UUU\tPhe\n")
    code, _, err = run(capsys, "verify", "--table", str(path))
    assert code == 2
    assert "bad table file" in err
    code, _, _ = run(capsys, "verify", "--table", str(tmp_path / "missing.tsv"))
    assert code == 2


@pytest.mark.parametrize(
    "codon, minimum", [("AUG", 6), ("GGU", 4), ("UUU", 5)]
)
def test_minset(capsys, codon, minimum):
    code, out, _ = run(capsys, "minset", codon, "--format", "json")
    assert code == 0
    entry = json.loads(out)[0]
    assert entry["minimal_size"] == minimum
    assert entry["paper_count"] == minimum
    assert entry["counts_agree"] is True


def test_minset_requires_target(capsys):
    code, _, _ = run(capsys, "minset")
    assert code == 2


def test_translate_fasta(capsys, tmp_path):
    path = tmp_path / "ala.fa"
    path.write_text(">ala\nGCUGCCGCAGCG\n")
    code, out, _ = run(capsys, "translate", str(path))
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == [
        "record_id", "index", "codon", "signature", "product",
        "dibase_character", "multiplet", "role",
    ]
    assert len(lines) == 5
    assert all(line.split("\t")[4] == "Ala" for line in lines[1:])
    assert all(line.split("\t")[5] == "non-D" for line in lines[1:])


def test_translate_mixed_case_dna(capsys, tmp_path):
    path = tmp_path / "seq.fa"
    path.write_text(">s\natggga\n")
    code, out, _ = run(capsys, "translate", str(path))
    assert code == 0
    products = [line.split("\t")[4] for line in out.strip().split("\n")[1:]]
    assert products == ["Met", "Gly"]


def test_translate_warns_on_tail(capsys, tmp_path):
    path = tmp_path / "seq.fa"
    path.write_text(">s\nAUGGG\n")
    code, _, err = run(capsys, "translate", str(path))
    assert code == 0
    assert "trailing" in err


def test_translate_empty_file_exits_2(capsys, tmp_path):
    path = tmp_path / "empty.fa"
    path.write_text("")
    code, _, err = run(capsys, "translate", str(path))
    assert code == 2


def test_translate_json_tsv_parity(capsys, tmp_path):
    path = tmp_path / "seq.fa"
    path.write_text(">s\nAUGUGA\n")
    _, tsv_out, _ = run(capsys, "translate", str(path))
    _, json_out, _ = run(capsys, "translate", str(path), "--format", "json")
    header, *rows = tsv_out.strip().split("\n")
    columns = header.split("\t")
    tsv_rows = [dict(zip(columns, row.split("\t"))) for row in rows]
    json_rows = json.loads(json_out)
    assert len(tsv_rows) == len(json_rows)
    for t, j in zip(tsv_rows, json_rows):
        for column in columns:
            assert t[column] == str(j[column])


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--format", "json")
    assert code == 0
    by_label = {e["multiplet"]: e["products"] for e in json.loads(out)}
    assert sorted(by_label["1pt"]) == ["Met", "Trp"]
    assert sorted(by_label["6pt"]) == ["Arg", "Leu", "Ser"]
    assert "Stop" in by_label["3pt"] and "Ile" in by_label["3pt"]
