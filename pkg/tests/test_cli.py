import json
import subprocess
import sys

import pytest

from oddunitary.cli import demo_lines, instance_json, load_instance, main, verify
from oddunitary.space import SpaceConfig
from oddunitary.vaserstein import condition_D


def write_instance(tmp_path, cfg, v, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(instance_json(cfg, [cfg.ring(x) for x in v], None)))
    return str(path)


def test_demo_passes(capsys):
    assert main(["demo"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "L(v) = [[1, 0, 0, 0], [0, 1, 4, 3], [1, 0, 1, 0], [2, 0, 0, 1]]" in out
    assert "decomposition of T_-1(u_1, a_1): ['0', '1', '2']" in out


def test_demo_lines_all_pass():
    lines, ok = demo_lines()
    assert ok and sum(line.startswith("PASS") for line in lines) == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "oddunitary.cli", "demo"], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["gen", "--ring", "gaussmod:3", "--involution", "twist_i", "--m", "2", "--n", "2", "--seed", "7"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    cfg, v, seed = load_instance(str(a))
    assert seed == 7 and len(v) == cfg.dim - 1


def test_gen_rejects_symmetric_phi_over_trivial_involution(capsys):
    assert main(["gen", "--ring", "mod:7", "--involution", "identity", "--phi", "identity"]) == 2
    assert "InvalidPhi" in capsys.readouterr().err


def test_bad_arguments_exit_2(tmp_path):
    assert main(["gen", "--ring", "nonsense"]) == 2
    assert main(["gen", "--m", "0"]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", "--in", str(tmp_path / "missing.json")]) == 2


def test_corrupt_instance_exit_2(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["verify", "--in", str(path)]) == 2
    path.write_text(json.dumps({"cfg": {"ring": {"descriptor": "mod"}}}))
    assert main(["verify", "--in", str(path)]) == 2


def test_verify_reports_failed_condition_D(tmp_path, demo_cfg, capsys):
    path = write_instance(tmp_path, demo_cfg, (0, 1, 1))
    assert main(["verify", "--in", path, "--check", "conditions"]) == 1
    out = capsys.readouterr().out
    assert any(line.startswith("FAIL") and "condition D" in line for line in out.splitlines())


def test_verify_json_report(tmp_path, demo_cfg):
    path = write_instance(tmp_path, demo_cfg, (0, 1, 2))
    report = tmp_path / "report.json"
    assert main(["verify", "--in", path, "--check", "factorization", "--out", str(report)]) == 0
    assert json.loads(report.read_text())


def test_force_D(tmp_path):
    out = tmp_path / "d.json"
    assert main(["gen", "--phi", "identity", "--seed", "3", "--force-D", "--out", str(out)]) == 0
    cfg, v, _ = load_instance(str(out))
    assert condition_D(cfg, v)
    assert main(["verify", "--in", str(out)]) == 0


def test_force_D_unsolvable_exit_1():
    # over Z with negation, phi = I and odd q the condition has no solution for some seeds
    codes = {main(["gen", "--ring", "int", "--involution", "negation", "--m", "1", "--n", "1",
                   "--phi", "identity", "--seed", str(s), "--force-D", "--out", "/dev/null"])
             for s in range(10)}
    assert 1 in codes


def test_factor_and_conjugate(tmp_path, demo_cfg):
    path = write_instance(tmp_path, demo_cfg, (0, 1, 2))
    out = tmp_path / "f.json"
    assert main(["factor", "--in", path, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["verified"] and len(data["L"]["factors"]) == 8
    assert main(["conjugate", "--in", path, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["L"]["kind"] == "TMinus1" and data["L"]["verified"]
    assert data["L_star"]["kind"] == "TPlus1" and data["L_star"]["verified"]


def test_phi_from_file(tmp_path, z5):
    phi = tmp_path / "phi.json"
    phi.write_text(json.dumps({"phi": [[2, 0], [0, 3]]}))
    out = tmp_path / "inst.json"
    assert main(["gen", "--phi", f"file:{phi}", "--out", str(out)]) == 0
    cfg, _, _ = load_instance(str(out))
    assert cfg.phi_inv.tolist() == [[3, 0], [0, 2]]


@pytest.mark.parametrize("check", ["isometry", "congruence", "conjugation"])
def test_verify_single_groups(check, demo_cfg):
    report = verify(demo_cfg, [demo_cfg.ring(x) for x in (0, 1, 2)], check)
    assert report.ok
    cfg = SpaceConfig.standard(demo_cfg.ring, 1, 2, "identity")
    assert not verify(cfg, [cfg.ring(x) for x in (0, 1, 1)], "isometry").ok
