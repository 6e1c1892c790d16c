import json

import pytest

from dmlab.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main
from dmlab.graph import canonical_certificate, parse_graph6, write_graph6
from dmlab.labeling import labeling_from_json, labeling_to_json, verify, wreath_labeling
from dmlab.qw import build_qw, build_wreath, profile_to_sequence


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQw:
    def test_build_profile(self, capsys):
        code, out, _ = run(capsys, "qw", "build", "--profile", "3,3")
        assert code == EXIT_OK
        g = parse_graph6(out.strip())
        assert g == build_qw(profile_to_sequence((3, 3)))

    def test_build_sequence(self, capsys):
        code, out, _ = run(capsys, "qw", "build", "--sequence", "011")
        assert code == EXIT_OK
        assert parse_graph6(out.strip()).n == 6

    def test_classify_positive(self, capsys):
        code, out, _ = run(capsys, "qw", "classify", "--profile", "3,3")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["schema"] == "dmlab/1"
        assert doc["verdict"] == "DistanceMagic"
        assert [s["type"] for s in doc["segments"]] == ["A", "A"]

    def test_classify_negative_exit_1(self, capsys):
        code, out, _ = run(capsys, "qw", "classify", "--profile", "4")
        assert code == EXIT_NEGATIVE
        assert json.loads(out)["verdict"] == "NotDistanceMagic"

    def test_bad_profile_exit_2(self, capsys):
        code, _, err = run(capsys, "qw", "build", "--profile", "3,x")
        assert code == EXIT_ERROR
        assert "dmlab:" in err

    def test_bad_sequence_exit_2(self, capsys):
        code, _, _ = run(capsys, "qw", "build", "--sequence", "001")
        assert code == EXIT_ERROR


class TestLabel:
    def test_construct_verify_pipeline(self, capsys, tmp_path):
        code, out, _ = run(capsys, "label", "construct", "--profile", "7")
        assert code == EXIT_OK
        labels_file = tmp_path / "labels.json"
        labels_file.write_text(out)
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_qw(profile_to_sequence((7,)))) + "\n")
        code, out, _ = run(
            capsys, "label", "verify", "--graph", str(graph_file), "--labels", str(labels_file)
        )
        assert code == EXIT_OK
        assert json.loads(out)["verdict"] == "pass"

    def test_construct_rejects_non_dm(self, capsys):
        code, _, err = run(capsys, "label", "construct", "--profile", "5")
        assert code == EXIT_ERROR
        assert "dmlab:" in err

    def test_verify_failure_exit_1(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_wreath(3)) + "\n")
        labels_file = tmp_path / "labels.json"
        bad = list(wreath_labeling(3).labels)
        bad[0], bad[1] = bad[1], bad[0]
        from dmlab.labeling import CenteredLabeling

        labels_file.write_text(labeling_to_json(CenteredLabeling(6, tuple(bad))))
        code, out, _ = run(
            capsys, "label", "verify", "--graph", str(graph_file), "--labels", str(labels_file)
        )
        assert code == EXIT_NEGATIVE
        assert json.loads(out)["verdict"] == "fail"

    def test_convert_roundtrip(self, capsys, tmp_path):
        lab = wreath_labeling(3)
        f = tmp_path / "c.json"
        f.write_text(labeling_to_json(lab))
        code, out, _ = run(capsys, "label", "convert", "--labels", str(f), "--to", "standard")
        assert code == EXIT_OK
        f2 = tmp_path / "s.json"
        f2.write_text(out)
        code, out, _ = run(capsys, "label", "convert", "--labels", str(f2), "--to", "centered")
        assert code == EXIT_OK
        assert labeling_from_json(out) == lab


class TestSearch:
    def test_found_emits_labeling(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_wreath(3)) + "\n")
        code, out, _ = run(capsys, "search", "--graph", str(graph_file))
        assert code == EXIT_OK
        lab = labeling_from_json(out)
        assert verify(build_wreath(3), lab).ok

    def test_not_found_exit_1(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_qw(profile_to_sequence((4,)))) + "\n")
        code, out, _ = run(capsys, "search", "--graph", str(graph_file))
        assert code == EXIT_NEGATIVE
        assert json.loads(out)["verdict"] == "not-found"

    def test_count_mode(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_wreath(3)) + "\n")
        code, out, _ = run(capsys, "search", "--graph", str(graph_file), "--count")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["count_raw"] == 2 * doc["count_folded"] > 0

    def test_budget_exhausted_exit_2(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_wreath(6)) + "\n")
        code, out, _ = run(capsys, "search", "--graph", str(graph_file), "--budget-nodes", "0")
        assert code == EXIT_ERROR
        assert json.loads(out)["verdict"] == "budget-exhausted"


class TestFilter:
    def test_tsv_verdicts(self, capsys, tmp_path):
        k5 = parse_graph6("D~{")  # complete graph on 5 vertices
        lines = [write_graph6(build_wreath(3)), write_graph6(k5)]
        f = tmp_path / "in.g6"
        f.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "filter", "--input", str(f))
        assert code == EXIT_OK
        rows = [line.split("\t") for line in out.strip().splitlines()]
        assert rows[0][1] == "Candidate"
        assert rows[1][1] == "RuledOut"

    def test_threads_env_validated(self, capsys, tmp_path, monkeypatch):
        f = tmp_path / "in.g6"
        f.write_text(write_graph6(build_wreath(3)) + "\n")
        monkeypatch.setenv("DMLAB_THREADS", "zebra")
        code, _, err = run(capsys, "filter", "--input", str(f))
        assert code == EXIT_ERROR
        assert "DMLAB_THREADS" in err
        monkeypatch.setenv("DMLAB_THREADS", "2")
        code, _, _ = run(capsys, "filter", "--input", str(f))
        assert code == EXIT_OK


class TestEnumerate:
    def test_order_8_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--order", "8", "--connected")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(parse_graph6(s).n == 8 for s in lines)

    def test_sorted_flag(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--order", "8", "--connected", "--sorted")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines == sorted(lines)
        assert len(lines) == 6

    def test_order_too_big_exit_2(self, capsys):
        code, _, err = run(capsys, "enumerate", "--order", "12")
        assert code == EXIT_ERROR
        assert "dmlab:" in err


class TestCensus:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "census", "--orders", "6", "8")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "order\ttotal\tcandidates\tdm_confirmed"
        assert lines[1] == "6\t1\t1\t1"
        assert lines[2] == "8\t6\t1\t1"


class TestExpand:
    def test_default_cycle(self, capsys, tmp_path):
        seq = profile_to_sequence((7,))
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_qw(seq)) + "\n")
        labels_file = tmp_path / "labels.json"
        from dmlab.constructive import construct_labeling

        labels_file.write_text(labeling_to_json(construct_labeling(seq)))
        code, out, _ = run(
            capsys, "expand", "--graph", str(graph_file), "--labels", str(labels_file)
        )
        assert code == EXIT_OK
        g6_line, json_line = out.strip().splitlines()
        g2 = parse_graph6(g6_line)
        assert g2.n == 16
        assert verify(g2, labeling_from_json(json_line)).ok
        assert canonical_certificate(g2) != canonical_certificate(build_wreath(8))

    def test_explicit_cycle_validation(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_wreath(3)) + "\n")
        labels_file = tmp_path / "labels.json"
        labels_file.write_text(labeling_to_json(wreath_labeling(3)))
        code, _, err = run(
            capsys,
            "expand",
            "--graph", str(graph_file),
            "--labels", str(labels_file),
            "--cycle", "0,1,2",
        )
        assert code == EXIT_ERROR
        assert "four" in err


class TestDot:
    def test_plain_export(self, capsys, tmp_path):
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_wreath(3)) + "\n")
        code, out, _ = run(capsys, "dot", "--graph", str(graph_file))
        assert code == EXIT_OK
        assert out.startswith("graph dmlab {")
        assert out.count("--") == 12

    def test_labeled_qw_rows(self, capsys, tmp_path):
        seq = profile_to_sequence((3, 3))
        graph_file = tmp_path / "g.g6"
        graph_file.write_text(write_graph6(build_qw(seq)) + "\n")
        labels_file = tmp_path / "labels.json"
        from dmlab.constructive import construct_labeling

        labels_file.write_text(labeling_to_json(construct_labeling(seq)))
        code, out, _ = run(
            capsys,
            "dot",
            "--graph", str(graph_file),
            "--labels", str(labels_file),
            "--qw-rows",
        )
        assert code == EXIT_OK
        assert "rank" in out


class TestParsing:
    def test_missing_subcommand_exit_2(self, capsys):
        assert run(capsys, "qw")[0] == EXIT_ERROR

    def test_unknown_command_exit_2(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_ERROR

    def test_help_exit_0(self, capsys):
        assert run(capsys, "--help")[0] == EXIT_OK
