import json

import pygraphviz as pgv
import pytest

from praaf.cli.praaf_app import main
from praaf.io import parse_praaf

from conftest import NORMAL_TEXT

WORLD_PROBABILITIES = [0.126, 0.084, 0.294, 0.196, 0.054, 0.036, 0.126, 0.084]


def _jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestWorlds:
    def test_world_listing(self, example_file, capsys):
        assert main(["worlds", example_file, "--output", "jsonl"]) == 0
        rows = _jsonl(capsys.readouterr().out)
        worlds, total = rows[:-1], rows[-1]
        assert [r["probability"] for r in worlds] == pytest.approx(WORLD_PROBABILITIES)
        assert [r["proper"] for r in worlds] == [False, True] * 4
        assert worlds[0]["world"] == "!(a->c) !(b->c) !c"
        assert total["index"] == "total"
        assert total["probability"] == pytest.approx(1.0)

    def test_normal_equivalent_column(self, normal_file, capsys):
        assert main(["worlds", normal_file, "--output", "jsonl"]) == 0
        worlds = _jsonl(capsys.readouterr().out)[:-1]
        assert len(worlds) == 8
        assert all(r["proper"] for r in worlds)
        assert [r["probability"] for r in worlds] == pytest.approx(WORLD_PROBABILITIES)
        assert worlds[0]["world"] == "!(a->c) !(b->c) (eta->c)"
        assert worlds[0]["equivalent"] == "!(a->c) !(b->c) !c"
        assert worlds[1]["equivalent"] == "!(a->c) !(b->c) c"

    def test_table_output(self, example_file, capsys):
        assert main(["worlds", example_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["index", "world", "probability", "proper"]
        assert lines[2].split() == ["0", "!(a->c)", "!(b->c)", "!c", "0.126", "F"]
        assert lines[-1].split() == ["total", "1"]

    def test_extensions_column(self, base_file, capsys):
        assert main(["worlds", base_file, "--extensions", "--semantics", "grounded", "--output", "csv"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "index,world,probability,proper,grounded"
        assert out[1] == "0,-,1,T,\"{a,b,d}\""

    def test_normal_form_extensions(self, normal_file, capsys):
        assert main(["worlds", normal_file, "--extensions", "--output", "jsonl"]) == 0
        worlds = _jsonl(capsys.readouterr().out)[:-1]
        with_core = [r for r in worlds if "{a,b,d,eta}" in r["admissible"].split()]
        assert sum(r["probability"] for r in with_core) == pytest.approx(0.916)
        assert all("{eta}" in r["admissible"].split() for r in worlds)

    def test_induced(self, example_file, capsys):
        assert main(["worlds", example_file, "--mode", "induced", "--output", "jsonl"]) == 0
        assert len(_jsonl(capsys.readouterr().out)) == 6

    def test_capacity(self, example_file, capsys):
        assert main(["worlds", example_file, "--max-elements", "2"]) == 3
        assert "exceeds the cap" in capsys.readouterr().err


class TestExtensions:
    def test_certain_file(self, base_file, capsys):
        assert main(["extensions", base_file, "--output", "csv"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "extension", "{}", "{a}", "{b}", '"{a,b}"', '"{a,d}"', '"{b,d}"', '"{a,b,d}"'
        ]

    def test_single_argument_stable(self, tmp_path, capsys):
        path = tmp_path / "single.praaf"
        path.write_text("arg(x).\n", encoding="utf-8")
        assert main(["extensions", str(path), "--semantics", "stable", "--output", "jsonl"]) == 0
        assert _jsonl(capsys.readouterr().out) == [{"extension": "{x}"}]

    def test_probabilistic_file_needs_a_world(self, example_file, capsys):
        assert main(["extensions", example_file]) == 2
        assert "--world" in capsys.readouterr().err

    def test_selected_world(self, example_file, capsys):
        assert main(["extensions", example_file, "--world", "1", "--semantics", "stable", "--output", "jsonl"]) == 0
        assert _jsonl(capsys.readouterr().out) == [{"extension": "{a,b,c}"}]

    def test_unknown_world(self, example_file, capsys):
        assert main(["extensions", example_file, "--world", "8"]) == 2

    def test_acceptable_only(self, normal_file, capsys):
        args = ["extensions", normal_file, "--world", "1", "--semantics", "preferred", "--acceptable", "--output", "jsonl"]
        assert main(args) == 0
        assert _jsonl(capsys.readouterr().out) == [{"extension": "{a,b,c,eta}"}]

    def test_acceptable_needs_ground_truth(self, base_file, capsys):
        assert main(["extensions", base_file, "--acceptable"]) == 2
        assert "Ground truth 'eta'" in capsys.readouterr().err


class TestProbabilities:
    def test_prob(self, example_file, capsys):
        assert main(["prob", example_file, "--set", "a,b,d"]) == 0
        assert capsys.readouterr().out == "0.916\n"

    def test_prob_of_empty_set(self, example_file, capsys):
        assert main(["prob", example_file, "--set", ""]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_prob_with_ground_truth(self, normal_file, capsys):
        assert main(["prob", normal_file, "--set", "eta,a,b,d"]) == 0
        assert capsys.readouterr().out == "0.916\n"

    def test_prob_of_absent_set(self, example_file, capsys):
        assert main(["prob", example_file, "--set", "c,d"]) == 0
        assert capsys.readouterr().out == "0\n"

    def test_prob_unknown_argument(self, example_file, capsys):
        assert main(["prob", example_file, "--set", "z"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_most_probable_extensions(self, example_file, capsys):
        assert main(["prob", example_file, "--top", "2", "--semantics", "stable", "--output", "jsonl"]) == 0
        rows = _jsonl(capsys.readouterr().out)
        assert rows[0] == {"extension": "{a,b,d}", "probability": pytest.approx(0.916)}
        assert rows[1] == {"extension": "{a,b,c}", "probability": pytest.approx(0.084)}
        assert rows[-1] == {"extension": "total", "probability": pytest.approx(1.0)}

    def test_set_or_top_is_required(self, example_file, capsys):
        assert main(["prob", example_file]) == 2
        assert main(["prob", example_file, "--set", "a", "--top", "1"]) == 2
        assert main(["prob", example_file, "--top", "0"]) == 2

    def test_prob_exact(self, example_file, capsys):
        assert main(["prob", example_file, "--set", "c", "--exact"]) == 0
        assert capsys.readouterr().out == "0.084\n"

    def test_accept(self, example_file, capsys):
        assert main(["accept", example_file, "--arg", "d"]) == 0
        assert capsys.readouterr().out == "0.916\n"
        assert main(["accept", example_file, "--arg", "a", "--stance", "skeptical"]) == 0
        assert capsys.readouterr().out == "0\n"

    def test_accept_jsonl(self, example_file, capsys):
        assert main(["accept", example_file, "--arg", "a", "--output", "jsonl"]) == 0
        row = _jsonl(capsys.readouterr().out)[0]
        assert row["stance"] == "credulous"
        assert row["probability"] == pytest.approx(1.0)

    def test_vacuous_note(self, tmp_path, capsys):
        path = tmp_path / "cycle.praaf"
        path.write_text("arg(a). arg(b). arg(c,0.5). att(a,b). att(b,c). att(c,a).\n", encoding="utf-8")
        assert main(["accept", str(path), "--arg", "a", "--stance", "skeptical", "--semantics", "stable"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "1\n"
        assert "1 worlds have no stable extension" in captured.err


class TestNormalForm:
    def test_transform_to_file(self, example_file, tmp_path, capsys):
        out = tmp_path / "normal.praaf"
        assert main(["transform", example_file, "-o", str(out), "--output", "csv"]) == 0
        assert out.read_text(encoding="utf-8") == NORMAL_TEXT
        assert capsys.readouterr().out.splitlines() == [
            "argument,probability,attack,attack_probability",
            "c,0.4,eta->c,0.6"
        ]

    def test_transform_to_stdout(self, example_file, capsys):
        assert main(["transform", example_file]) == 0
        captured = capsys.readouterr()
        assert captured.out == NORMAL_TEXT
        assert "eta->c" in captured.err

    def test_transform_custom_eta(self, example_file, capsys):
        assert main(["transform", example_file, "--eta", "truth"]) == 0
        assert "att(truth,c,0.6)." in capsys.readouterr().out

    def test_transform_collision(self, tmp_path, capsys):
        path = tmp_path / "clash.praaf"
        path.write_text("arg(eta,0.5).\n", encoding="utf-8")
        assert main(["transform", str(path)]) == 2
        assert "--eta" in capsys.readouterr().err

    def test_transform_to_json(self, example_file, normal_file, tmp_path, capsys):
        out = tmp_path / "normal.json"
        assert main(["transform", example_file, "-o", str(out)]) == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert {"source": "eta", "target": "c", "p": 0.6} in data["atts"]
        capsys.readouterr()
        assert main(["equiv", example_file, str(out)]) == 0
        assert capsys.readouterr().out.startswith("PASS: ")

    def test_bad_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"args": [{"name": "a"}]}', encoding="utf-8")
        assert main(["worlds", str(path)]) == 2
        assert "[invalid-json]" in capsys.readouterr().err

    def test_transform_tiny_probability(self, tmp_path, capsys):
        path = tmp_path / "tiny.praaf"
        path.write_text("arg(x,1e-17).\n", encoding="utf-8")
        assert main(["transform", str(path)]) == 2
        assert "--exact" in capsys.readouterr().err
        assert main(["transform", str(path), "--exact", "-o", str(tmp_path / "normal.praaf")]) == 0

    def test_transform_normal_form(self, base_file, capsys):
        assert main(["transform", base_file]) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith("arg(a).\narg(b).\n")
        assert "eta" not in captured.out
        assert "no probabilistic arguments" in captured.err

    def test_equiv_pass(self, example_file, normal_file, capsys):
        assert main(["equiv", example_file, normal_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("PASS: ")
        assert "admissible extensions compared (raw worlds, tolerance 1e-09)" in out

    def test_equiv_fail(self, example_file, tmp_path, capsys):
        path = tmp_path / "perturbed.praaf"
        path.write_text(NORMAL_TEXT.replace("att(eta,c,0.6).", "att(eta,c,0.5)."), encoding="utf-8")
        assert main(["equiv", example_file, str(path), "--output", "jsonl"]) == 1
        rows = _jsonl(capsys.readouterr().out)
        assert rows[-1]["verdict"] == "FAIL"
        witness = next(r for r in rows if r.get("extension") == "{a,b,d}")
        assert witness["original"] == pytest.approx(0.916)
        assert witness["transformed"] == pytest.approx(0.895)

    def test_dot(self, normal_file, tmp_path, capsys):
        out = tmp_path / "normal.dot"
        assert main(["dot", normal_file, "-o", str(out)]) == 0
        graph = pgv.AGraph(string=out.read_text(encoding="utf-8"))
        assert graph.get_edge("eta", "c").attr["label"] == "0.6"
        assert graph.get_node("eta").attr["shape"] == "doublecircle"


class TestErrors:
    def test_missing_file(self, tmp_path, capsys):
        assert main(["worlds", str(tmp_path / "missing.praaf")]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_parse_error_has_position(self, tmp_path, capsys):
        path = tmp_path / "bad.praaf"
        path.write_text("arg(a).\natt(a,b).\n", encoding="utf-8")
        assert main(["worlds", str(path)]) == 2
        assert "[unknown-endpoint] line 2, column 1" in capsys.readouterr().err

    def test_bad_usage(self, capsys):
        assert main(["worlds"]) == 2
        assert main(["nonsense"]) == 2

    def test_bad_tolerance(self, example_file, normal_file, capsys):
        assert main(["equiv", example_file, normal_file, "--tol", "0"]) == 2

    def test_environment_defaults(self, example_file, monkeypatch, capsys):
        monkeypatch.setenv("PRAAF_SEMANTICS", "grounded")
        assert main(["prob", example_file, "--set", "a,b,d"]) == 0
        assert capsys.readouterr().out == "0.916\n"
        assert main(["prob", example_file, "--set", "a,b,c", "--semantics", "admissible"]) == 0
        assert capsys.readouterr().out == "0.084\n"

    def test_parsed_output_round_trips(self, example_file, capsys):
        assert main(["transform", example_file]) == 0
        assert parse_praaf(capsys.readouterr().out).args == {"a", "b", "c", "d", "eta"}
