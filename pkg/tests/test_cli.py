"""Command-line interface: outputs, formats, determinism, exit codes."""

import xml.etree.ElementTree as ET

import pytest

from circlepairs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_counts_line(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--max-points", "6", "--out", str(tmp_path / "cat"))
    assert code == 0
    assert out.strip().splitlines()[-1] == "1 1 2"
    for pts in (2, 4, 6):
        assert (tmp_path / "cat" / f"catalog-{pts:02d}.txt").exists()


def test_enumerate_force_and_determinism(tmp_path, capsys):
    out_dir = tmp_path / "cat"
    assert run(capsys, "enumerate", "--max-points", "4", "--out", str(out_dir))[0] == 0
    first = (out_dir / "catalog-04.txt").read_bytes()
    # refuses to overwrite without --force
    code, _, err = run(capsys, "enumerate", "--max-points", "4", "--out", str(out_dir))
    assert code == 1
    assert "--force" in err
    assert run(capsys, "enumerate", "--max-points", "4", "--out", str(out_dir), "--force")[0] == 0
    assert (out_dir / "catalog-04.txt").read_bytes() == first


def test_count_table_rows(capsys):
    code, out, _ = run(capsys, "count", "--max-points", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "points configs symmetric asymmetric flows"
    assert "10 13 12 1 14" in lines
    assert "8 4 4 0 4" in lines


def test_invariants_lens(tmp_path, capsys):
    gp1 = tmp_path / "lens.gp1"
    gp1.write_text("GP1 2 1 2 + -\n")
    code, out, _ = run(capsys, "invariants", "--input", str(gp1))
    assert code == 0
    assert "(2,2)/(2,2)" in out
    assert "matrix:" in out


def test_invariants_machine_format(tmp_path, capsys):
    gp1 = tmp_path / "lens.gp1"
    gp1.write_text("GP1 2 1 2 + -\n")
    code, out, _ = run(capsys, "invariants", "--input", str(gp1), "--machine")
    assert code == 0
    assert "black_degrees=2,2" in out
    assert "white_degrees=2,2" in out
    assert "simple=true" in out


def test_malformed_input_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.gp1"
    bad.write_text("GP1 2 1 2 + -\nGP1 2 2 2 + -\n")
    code, _, err = run(capsys, "invariants", "--input", str(bad))
    assert code == 2
    assert "line 2" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "symmetry", "--input", "/nonexistent/file.gp1")
    assert code == 2


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "enumerate", "--max-points", "7")[0] == 1
    assert run(capsys, "enumerate", "--max-points", "12")[0] == 1
    assert run(capsys, "oracle", "--points", "10")[0] == 1  # missing --allow-long
    code, _, err = run(capsys, "bogus")
    assert code == 1


def test_symmetry_over_ten_point_catalog(tmp_path, capsys, levels10):
    from circlepairs.catalog import write_catalog

    level10 = next(l for l in levels10 if l.n_points == 10)
    write_catalog(level10, tmp_path)
    code, out, _ = run(capsys, "symmetry", "--input", str(tmp_path / "catalog-10.txt"))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "total=13 symmetric=12 asymmetric=1"
    assert sum(1 for l in lines[:-1] if l.split()[1] == "A") == 1


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle", "--points", "4", "--check")
    assert code == 0
    assert "generator-match=yes" in out


def test_render_files(tmp_path, capsys):
    gp1 = tmp_path / "in.gp1"
    gp1.write_text("GP1 2 1 2 + -\nGP1 4 1 2 3 4 + - + -\n")
    out_dir = tmp_path / "svg"
    code, out, _ = run(capsys, "render", "--input", str(gp1), "--out", str(out_dir))
    assert code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == ["2-1-S.svg", "4-2-S.svg"]
    for name in names:
        ET.fromstring((out_dir / name).read_text())


def test_render_style_flags(tmp_path, capsys):
    gp1 = tmp_path / "in.gp1"
    gp1.write_text("GP1 2 1 2 + -\n")
    out_dir = tmp_path / "svg"
    code, _, _ = run(
        capsys,
        "render", "--input", str(gp1), "--out", str(out_dir),
        "--stroke1", "#112233", "--stroke2", "#445566", "--size", "300",
    )
    assert code == 0
    svg = (out_dir / "2-1-S.svg").read_text()
    assert 'stroke="#112233"' in svg and 'stroke="#445566"' in svg and 'width="300"' in svg


def test_env_default_output_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CIRCLEPAIRS_OUT", str(tmp_path / "envout"))
    monkeypatch.chdir(tmp_path)
    code, _, _ = run(capsys, "enumerate", "--max-points", "2")
    assert code == 0
    assert (tmp_path / "envout" / "catalog-02.txt").exists()


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("GP1 2 1 2 + -\n"))
    code, out, _ = run(capsys, "symmetry")
    assert code == 0
    assert "line 1 S" in out
