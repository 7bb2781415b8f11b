import json

import pytest

from hessflag import cli
from hessflag.perms import parse_hessenberg, parse_permutation


def run(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_text(capsys):
    code, out, _ = run(
        ["classify", "--h", "3,3,4,5,5", "--w", "32154", "--verify-jacobian"],
        capsys,
    )
    assert code == 0
    assert "singular: True" in out
    assert "string heights: [3]" in out
    assert "jacobian rank: 4 (codim 5), agree: True" in out


def test_classify_json_roundtrip(capsys):
    code, out, _ = run(
        ["classify", "--h", "3,3,4,5,5", "--w", "54321", "--format", "json"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["in_variety"] and not record["singular"]
    # emitted strings re-parse to the same objects
    assert str(parse_hessenberg(record["h"])) == record["h"]
    assert str(parse_permutation(record["w"])) == record["w"]


def test_classify_flag_not_in_variety(capsys):
    code, out, _ = run(
        ["classify", "--h", "2,3,4,5,5", "--w", "45123", "--format", "json"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["in_variety"] is False


def test_classify_indeterminate_probe(capsys):
    code, out, _ = run(
        ["classify", "--h", "3,4,5,6,6,6", "--w", "321654", "--format", "json"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["cell_verdict"] == "indeterminate"
    assert record["cell_probe"]["max_rank_sampled"] == 6
    assert record["cell_probe"]["note"] == "sampled, not proven"


def test_usage_errors(capsys):
    code, _, err = run(["classify", "--h", "3,3,4,5,5", "--w", "321"], capsys)
    assert code == 1 and "n=3" in err
    code, _, _ = run(["classify", "--h", "3,3,4,5,5"], capsys)
    assert code == 1
    code, _, err = run(["variety", "--h", "1,2,3"], capsys)
    assert code == 1


def test_cap_exit_code(capsys):
    code, _, err = run(["atlas", "--n", "9"], capsys)
    assert code == 3 and "cap" in err


def test_cap_override_env(monkeypatch, capsys):
    monkeypatch.setenv("HESSFLAG_MAX_N", "3")
    code, _, _ = run(["variety", "--h", "2,3,4,4"], capsys)
    assert code == 3
    monkeypatch.delenv("HESSFLAG_MAX_N")
    code, _, _ = run(["variety", "--h", "2,3,4,4"], capsys)
    assert code == 0


def test_variety_text(capsys):
    code, out, _ = run(["variety", "--h", "3,3,4,5,5"], capsys)
    assert code == 0
    assert "flags in variety: 24, singular: 16" in out
    assert "normal: False" in out


def test_variety_csv(capsys):
    code, out, _ = run(["variety", "--h", "2,3,4,4", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "w,singular,string_heights,jacobian_rank"
    assert len(lines) == 9  # header + 8 flags


def test_variety_json_deterministic(capsys):
    args = ["variety", "--h", "3,3,4,5,5", "--format", "json"]
    _, first, _ = run(args, capsys)
    _, second, _ = run(args, capsys)
    assert first == second
    record = json.loads(first)
    assert record["num_singular_flags"] == 16
    assert record["num_flags"] == 24


def test_atlas(tmp_path, capsys):
    out_path = tmp_path / "atlas.jsonl"
    code, _, _ = run(["atlas", "--n", "4", "--out", str(out_path)], capsys)
    assert code == 0
    records = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(records) == 5
    non_normal = [r for r in records if not r["normal"]]
    assert [r["h"] for r in non_normal] == ["2,3,4,4"]
    for r in records:
        assert r["num_singular_flags"] <= r["num_flags"]
        assert "timestamp" not in r


def test_atlas_deterministic_and_parallel(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run(["atlas", "--n", "4", "--out", str(a)], capsys)
    run(["atlas", "--n", "4", "--out", str(b), "--jobs", "2"], capsys)
    assert a.read_text() == b.read_text()


def test_atlas_timestamps(tmp_path, capsys):
    out_path = tmp_path / "atlas.jsonl"
    run(["atlas", "--n", "3", "--out", str(out_path), "--timestamps"], capsys)
    for line in out_path.read_text().splitlines():
        assert "timestamp" in json.loads(line)


def test_codim1_json(capsys):
    code, out, _ = run(
        ["codim1", "--h", "2,4,5,5,6,7,7", "--format", "json"], capsys
    )
    assert code == 0
    record = json.loads(out)
    assert [e["p"] for e in record["codim1"]] == [
        "1765432",
        "6574321",
        "7645321",
        "7651432",
        "5432176",
        "6543217",
    ]
    assert all(e["in_variety"] for e in record["codim1"])


def test_generators_text_golden(capsys):
    code, out, _ = run(
        ["generators", "--h", "3,4,4,5,6,6", "--w", "312654"], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert [line.split(" = ")[0] for line in lines] == [
        "g[4,6]",
        "g[4,3]",
        "g[4,2]",
        "g[5,3]",
        "g[4,1]",
        "g[5,2]",
        "g[6,3]",
        "g[5,1]",
    ]
    g63 = next(line for line in lines if line.startswith("g[6,3]"))
    assert g63 == (
        "g[6,3] = -z[6,2] - z[2,3]*z[6,1] - z[4,3]*z[6,3]"
        " + z[1,3]*z[4,3]*z[6,1] + z[2,3]*z[2,1]*z[6,2] + z[2,3]*z[4,3]*z[6,2]"
        " - z[1,3]*z[2,1]*z[4,3]*z[6,2]"
    )


def test_generators_rejects_flags_outside_variety(capsys):
    code, _, err = run(
        ["generators", "--h", "2,3,4,5,5", "--w", "45123"], capsys
    )
    assert code == 1 and "not in variety" in err


def test_verify_command(capsys):
    code, out, _ = run(["verify", "--n-max", "3"], capsys)
    assert code == 0
    for name in ("y_equivalence", "oracle_equivalence", "jacobian_agreement"):
        assert f"{name}: pass" in out


def test_figures_written(tmp_path, capsys):
    fig_dir = tmp_path / "figs"
    code, _, _ = run(
        ["variety", "--h", "2,3,4,4", "--figures", str(fig_dir)], capsys
    )
    assert code == 0
    names = {p.name for p in fig_dir.iterdir()}
    assert "hess_grid.png" in names
    assert any(name.startswith("complement_") for name in names)


def test_classify_figure(tmp_path, capsys):
    fig_dir = tmp_path / "figs"
    code, _, _ = run(
        [
            "classify",
            "--h",
            "3,3,4,5,5",
            "--w",
            "32154",
            "--figures",
            str(fig_dir),
        ],
        capsys,
    )
    assert code == 0
    assert (fig_dir / "complement_32154.png").exists()
