# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

import json

import pytest


def _run_json(capsys, argv):
    from degcones.cli import main
    code = main(argv + ["--format", "json", "--no-progress"])
    return code, json.loads(capsys.readouterr().out)


def test_roots_command(capsys):
    code, out = _run_json(capsys, ["roots", "--type", "C", "--rank", "2"])
    assert code == 0
    assert out["labels"] == ["1,1", "2,2", "1,2", "1,1bar"]
    assert out["symmetrizers"] == [1, 2]


def test_words_command(capsys):
    code, out = _run_json(capsys, ["words", "--type", "A", "--rank", "2"])
    assert code == 0
    assert out["words"] == ["121", "212"]
    code, out = _run_json(capsys, ["words", "--type", "C", "--rank", "2", "--word", "1212"])
    assert out["convex_order"] == ["1,1", "1,1bar", "1,2", "2,2"]
    assert out["convex"]


def test_relations_and_cones(capsys):
    code, out = _run_json(capsys, ["ls-relations", "--type", "A", "--rank", "2", "--word", "121", "--mode", "exact"])
    assert code == 0
    assert len(out["relations"]) == 3
    code, out = _run_json(capsys, ["cone-quantum", "--type", "C", "--rank", "2", "--word", "2121"])
    assert code == 0
    assert out["printed_equal"]
    code, out = _run_json(capsys, ["cone-empty", "--type", "C", "--rank", "2", "--word", "1212"])
    assert code == 0
    assert not out["empty"]
    code, out = _run_json(capsys, ["cone-equal", "--type", "A", "--rank", "2", "--word", "121", "--word2", "212"])
    assert out["equal"]
    code, out = _run_json(capsys, ["minimal-points", "--type", "A", "--rank", "2"])
    assert out["points"] == [[1, 1, 1]]


def test_monomial_check_exit_codes(capsys):
    base = ["monomial-check", "--type", "A", "--rank", "3", "--degree-word", "123212", "--fundamentals"]
    code, out = _run_json(capsys, base + ["--degree", "2,2,1,1,1,1"])
    assert code == 0
    assert all(r["monomial"] for r in out["results"])
    from degcones.cli import main
    assert main(base + ["--degree", "1,1,1,1,1,1", "--no-progress"]) == 1


def test_counting_commands(capsys):
    from degcones.cli import main
    assert main(["sp4", "--m1", "1", "--m2", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["lattice_points"] == 16
    assert main(["counts", "--max", "3", "--format", "csv", "--no-progress"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "a,b,formula,enumerated"
    assert len(lines) == 17
    code, out = _run_json(capsys, ["fflv", "--type", "C", "--rank", "2", "--fundamentals"])
    assert code == 0
    assert [r["lattice_points"] for r in out["counts"]] == [4, 5]


def test_invalid_input():
    from degcones.cli import main
    assert main(["roots", "--type", "E", "--rank", "6"]) == 2
    assert main(["cone-quantum", "--type", "A", "--rank", "2", "--word", "1122"]) == 2
    assert main(["monomial-check", "--type", "A", "--rank", "2", "--degree", "1,2"]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["roots", "--type", "A", "--rank", "2", "--format", "xml"]) == 2


def test_config_file(tmp_path, capsys):
    from degcones.cli import main
    cfg_file = tmp_path / "run.json"
    cfg_file.write_text(json.dumps({"cartan_type": "A", "rank": 2, "fmt": "json"}))
    out_file = tmp_path / "words.json"
    assert main(["words", "--config", str(cfg_file), "--out", str(out_file)]) == 0
    assert json.loads(out_file.read_text())["words"] == ["121", "212"]
    cfg_file.write_text(json.dumps({"cartan_type": "A", "rank": 2, "colour": "red"}))
    assert main(["words", "--config", str(cfg_file)]) == 2


def test_run_config():
    from degcones.cli import RunConfig, load_config
    cfg = load_config(overrides={"cartan_type": "b", "rank": 3, "seed": None})
    assert cfg.type_text == "B3"
    assert cfg.seed == 0
    with pytest.raises(ValueError):
        RunConfig(mode="approximate")
    with pytest.raises(AssertionError):
        RunConfig(jobs=0)
    with pytest.raises(AssertionError):
        RunConfig().type_text


def test_printed_reference_data():
    from degcones.cli.reference import C3_ALIASES, C3_MINIMAL_POINTS, PRINTED, printed_vector
    from degcones.rep.degrees import D4_DEGREE, D4_WORD
    from degcones.rep import canonical_degree
    for system in PRINTED.values():
        assert len(system.cone()) > 0
    assert printed_vector("D4", D4_DEGREE, word=D4_WORD) == canonical_degree("D4")
    point = printed_vector("C3", C3_MINIMAL_POINTS[0], C3_ALIASES)
    assert sorted(point) == sorted(C3_MINIMAL_POINTS[0])


def test_printed_aliases_follow_convex_orders():
    from degcones.cli.reference import C3_ALIASES, D4_ALIASES, PRINTED
    from degcones.rep.degrees import D4_WORD
    from degcones.roots import build_root_system, convex_order
    order = convex_order(build_root_system("D4"), D4_WORD)
    assert [D4_ALIASES[str(k + 1)] for k in range(order.N)] == order.labels()
    assert sorted(C3_ALIASES.values()) == sorted(build_root_system("C3").labels)
    for system in PRINTED.values():
        assert all(text and ">" in text for text in system.inequalities)
    assert len(PRINTED[("C3", "132321232")].inequalities) == 12


def test_reproduce_rank_two_section(capsys):
    code, out = _run_json(capsys, ["reproduce-paper", "--section", "4.1"])
    assert code == 0
    assert out["passed"]
    assert {row["section"] for row in out["checks"]} == {"4.1"}
    for word in ("A2 121", "A2 212", "C2 1212", "C2 2121"):
        for check in ("quantum cone inside the classical cone", "inductive interior point"):
            row, = [r for r in out["checks"] if r["check"] == f"{word}: {check}"]
            assert row["status"] == "pass"


def test_reproduce_unknown_section():
    from degcones.cli import RunConfig, reproduce
    with pytest.raises(ValueError):
        reproduce(RunConfig(), ["9.9"])


@pytest.mark.slow
def test_reproduce_rank_three_sections():
    from degcones.cli import RunConfig, reproduce
    run = reproduce(RunConfig(), ["4.2", "5.1", "5.3", "5.4"])
    assert run.passed
    assert not run.table().empty
