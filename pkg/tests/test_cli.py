import json

import pytest
from click.testing import CliRunner

from ckltag.cli import cli, main


@pytest.fixture()
def runner():
    return CliRunner()


def corpus_args(tmp_path):
    return ["--corpus-dir", str(tmp_path / "corpus")]


def test_tagset_list_98_lines(runner):
    result = runner.invoke(cli, ["tagset", "list"])
    assert result.exit_code == 0
    lines = result.stdout.strip().split("\n")
    assert len(lines) == 98
    assert lines[0].startswith("N-S\tSimple Noun\tNoun")
    assert lines[-1].startswith("UNK\tUnknown")


def test_tagset_show(runner):
    result = runner.invoke(cli, ["tagset", "show", "N-PROP"])
    assert result.exit_code == 0
    assert "english: Proper Noun" in result.stdout
    assert "category: Noun" in result.stdout
    assert "ud (paper): NOUN" in result.stdout
    assert "kurdish: " in result.stdout


def test_tagset_show_alias(runner):
    result = runner.invoke(cli, ["tagset", "show", "V-PST"])
    assert result.exit_code == 0
    assert "abbrev: V-PAST" in result.stdout


def test_tagset_tree(runner):
    result = runner.invoke(cli, ["tagset", "tree"])
    assert result.exit_code == 0
    assert result.stdout.startswith("CKL-POS")
    result = runner.invoke(cli, ["tagset", "tree", "--json"])
    tree = json.loads(result.stdout)
    assert len(tree["children"]) == 9


def test_tagset_export_tsv(runner):
    result = runner.invoke(cli, ["tagset", "export"])
    lines = result.stdout.strip().split("\n")
    assert len(lines) == 98
    first = lines[0].split("\t")
    assert first[0] == "1" and first[1] == "N-S" and first[5] == "NOUN" and first[6] == "NOUN"
    gerund = [ln for ln in lines if ln.split("\t")[1] == "GRD-D"][0].split("\t")
    assert gerund[5] == "GRD" and gerund[6] == "VERB"


def test_tokenize_stdin(runner):
    result = runner.invoke(cli, ["tokenize", "-"], input="جل و بەرگ")
    assert result.exit_code == 0
    lines = result.stdout.strip().split("\n")
    assert len(lines) == 3
    cols = lines[1].split("\t")
    assert cols == ["1", "3", "4", "word", "و"]


def test_segment_command(runner):
    result = runner.invoke(cli, ["segment", "--token", "بەهێز"])
    assert result.exit_code == 0
    assert "بە/prefix + هێز/root" in result.stdout


def test_suggest_command(runner):
    result = runner.invoke(cli, ["suggest", "--token", "نانەکە"])
    assert result.exit_code == 0
    top = result.stdout.strip().split("\n")[0].split("\t")
    assert top[0] == "N-DNP"


def test_suggest_with_context(runner):
    result = runner.invoke(cli, ["suggest", "--token", "و", "--left", "جل", "--right", "بەرگ"])
    assert result.stdout.strip().split("\n")[0].split("\t")[0] == "PART-CONJ"


def test_create_annotate_export_stats_flow(runner, tmp_path):
    args = corpus_args(tmp_path)
    created = runner.invoke(cli, args + ["create", "--title", "t", "-"], input="جل و بەرگ")
    assert created.exit_code == 0, created.output
    doc_id = created.stdout.strip()

    annotated = runner.invoke(cli, args + ["annotate", doc_id, "--auto"])
    assert annotated.exit_code == 0
    assert "annotated 3 tokens" in annotated.stdout

    manual = runner.invoke(cli, args + ["annotate", doc_id, "--set", "0", "0", "N-S", "--annotator", "me"])
    assert manual.exit_code == 0

    exported = runner.invoke(cli, args + ["export", doc_id, "--mode", "strict"])
    assert exported.exit_code == 0
    assert "# sent_id" in exported.stdout
    assert "\tPART\tPART-CONJ\t" in exported.stdout

    stats = runner.invoke(cli, args + ["stats"])
    assert stats.exit_code == 0
    assert "total\t3" in stats.stdout
    assert "category:Noun\t2" in stats.stdout


def test_import_command(runner, tmp_path):
    args = corpus_args(tmp_path)
    conllu = tmp_path / "in.conllu"
    conllu.write_text(
        "# text = نان\n1\tنان\t_\tNOUN\tN-S\t_\t_\t_\t_\tProv=human\n",
        encoding="utf-8",
    )
    result = runner.invoke(cli, args + ["import", str(conllu)])
    assert result.exit_code == 0
    doc_id = result.stdout.strip()
    exported = runner.invoke(cli, args + ["export", doc_id])
    assert "\tN-S\t" in exported.stdout


def test_validate_command(runner, tmp_path):
    good = tmp_path / "good.conllu"
    good.write_text("1\tنان\t_\tNOUN\tN-S\t_\t_\t_\t_\t_\n", encoding="utf-8")
    result = runner.invoke(cli, ["validate", str(good)])
    assert result.exit_code == 0
    assert result.stdout.strip() == "OK"

    bad = tmp_path / "bad.conllu"
    bad.write_text("1\tنان\n", encoding="utf-8")
    result = runner.invoke(cli, ["validate", str(bad)])
    assert result.exit_code == 1
    assert "columns" in result.stdout


def test_annotate_requires_mode(runner, tmp_path):
    result = runner.invoke(cli, corpus_args(tmp_path) + ["annotate", "someid"])
    assert result.exit_code != 0


# -- exit-code contract via main() -------------------------------------------


def test_main_unknown_subcommand_exits_1(capsys):
    code = main(["frobnicate"])
    captured = capsys.readouterr()
    assert code == 1
    assert "Usage" in captured.err or "usage" in captured.err
    assert captured.out == ""


def test_main_unknown_tag_exits_1(capsys):
    code = main(["tagset", "show", "NOPE"])
    assert code == 1
    assert "unknown tag" in capsys.readouterr().err


def test_main_success_exit_0(capsys):
    code = main(["tagset", "show", "N-S"])
    assert code == 0
    assert "Simple Noun" in capsys.readouterr().out


def test_main_missing_file_exits_1(capsys):
    code = main(["validate", "/nonexistent/file.conllu"])
    assert code == 1
