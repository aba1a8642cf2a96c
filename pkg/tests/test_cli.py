import subprocess
import sys

import pytest

from conftest import FIXTURES
from mcgpres.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestFarey:
    def test_resolve(self, capsys):
        assert run(capsys, "farey", "resolve", "0/1", "1/0")[:2] == (0, "-1/1\n")

    def test_resolve_non_neighbors(self, capsys):
        code, out, err = run(capsys, "farey", "resolve", "0/1", "3/1")
        assert code == 1 and out == "" and "det = -3" in err

    def test_resolve_one_third(self, capsys):
        # 0/1 and 1/3 are neighbors: 0*3 - 1*1 = -1
        assert run(capsys, "farey", "resolve", "0/1", "1/3")[:2] == (0, "1/2\n")

    def test_twist_s04(self, capsys):
        assert run(capsys, "farey", "twist", "0/1", "1/0", "--n", "1", "--surface", "s04")[:2] == (0, "-1/2\n")

    def test_twist_negative_slope_argument(self, capsys):
        assert run(capsys, "farey", "twist", "-1/1", "0/1", "--n", "-2")[:2] == (0, "-2/3\n")

    def test_neighbors(self, capsys):
        code, out, _ = run(capsys, "farey", "neighbors", "0/1", "--height", "2")
        assert code == 0 and out.split() == ["1/0", "-1/1", "1/1", "-1/2", "1/2"]

    def test_intersect(self, capsys):
        assert run(capsys, "farey", "intersect", "0/1", "1/0", "--surface", "s04")[:2] == (0, "2\n")
        assert run(capsys, "farey", "intersect", "2/3", "0/1")[:2] == (0, "2\n")

    @pytest.mark.parametrize(
        "argv",
        [
            ["farey", "resolve", "1/x", "0/1"],
            ["farey", "twist", "0/1", "1/0", "--surface", "klein"],
            ["farey", "neighbors", "0/1", "--height", "0"],
            ["farey", "resolve", "0/0", "1/0"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_argparse_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["farey", "spin", "0/1"])
        assert info.value.code == 2


class TestWords:
    @pytest.mark.parametrize("name", ["gervais_vprime.deriv", "three_prime.deriv", "dg_lantern.deriv"])
    def test_check_fixture(self, capsys, name):
        code, out, _ = run(capsys, "words", "check", FIXTURES / name)
        assert code == 0 and out.splitlines()[-1].startswith("PASS")

    def test_check_corrupted(self, capsys, tmp_path):
        text = (FIXTURES / "gervais_vprime.deriv").read_text()
        text = text.replace("step braid(a,b) at 7\n", "step braid(a,b) at 8\n", 1)
        bad = tmp_path / "bad.deriv"
        bad.write_text(text.replace("config figure1.cfg", f"config {FIXTURES / 'figure1.cfg'}"))
        code, out, _ = run(capsys, "words", "check", bad)
        assert code == 1 and out.splitlines()[-1] == "FAIL at step 3"

    def test_check_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.deriv"
        bad.write_text("start a\n")
        assert run(capsys, "words", "check", bad)[0] == 2
        assert run(capsys, "words", "check", tmp_path / "missing.deriv")[0] == 2

    def test_emit_chain(self, capsys):
        code, out, _ = run(capsys, "words", "emit", FIXTURES / "figure1.cfg")
        assert code == 0
        assert "chain(a,b) a b a a b a a b a a b a d'\n" in out

    def test_emit_lantern(self, capsys):
        out = run(capsys, "words", "emit", FIXTURES / "lantern.cfg")[1]
        assert "lantern(a,b) a b ab d4' d3' d2' d1'\n" in out

    def test_emit_empty(self, capsys, tmp_path):
        cfg = tmp_path / "empty.cfg"
        cfg.write_text("curves a b\n")
        assert run(capsys, "words", "emit", cfg)[:2] == (0, "")

    def test_emit_malformed(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("curves a\nperp a\n")
        assert run(capsys, "words", "emit", cfg)[0] == 2


class TestVerify:
    def test_chain_torus(self, capsys):
        code, out, _ = run(capsys, "rep", "verify", FIXTURES / "chain.cfg", FIXTURES / "chain_torus.bind")
        assert code == 0 and "OK chain(a,b)" in out and "OK braid(a,b)" in out

    def test_lantern_s04(self, capsys):
        code, out, _ = run(
            capsys, "rep", "verify", FIXTURES / "lantern.cfg", FIXTURES / "lantern_s04.bind", "--surface", "s04"
        )
        assert code == 0 and "OK lantern(a,b): left side fixes slopes" in out

    def test_lantern_needs_projective(self, capsys):
        code, _, _ = run(capsys, "rep", "verify", FIXTURES / "lantern.cfg", FIXTURES / "lantern_s04.bind")
        assert code == 1

    def test_wrong_binding(self, capsys, tmp_path):
        cfg = tmp_path / "w.cfg"
        cfg.write_text("curves a b\ndisjoint a b\n")
        code, out, _ = run(capsys, "rep", "verify", cfg, FIXTURES / "chain_torus.bind")
        assert code == 1 and "FAIL commute(a,b)" in out

    def test_unbound(self, capsys):
        code, _, err = run(capsys, "rep", "verify", FIXTURES / "figure1.cfg", FIXTURES / "chain_torus.bind")
        assert code == 2 and "unbound labels" in err

    def test_chain_with_visible_rhs(self, capsys, tmp_path):
        bind = tmp_path / "b.bind"
        bind.write_text("bind a 0/1\nbind b 1/0\nbind d 0/1\n")
        code, out, _ = run(capsys, "rep", "verify", FIXTURES / "chain.cfg", bind)
        assert code == 1 and "cannot see" in out


def test_deterministic(capsys):
    argv = ["rep", "verify", FIXTURES / "figure1.cfg", FIXTURES / "figure1_torus.bind"]
    assert run(capsys, *argv) == run(capsys, *argv)
    argv = ["words", "emit", FIXTURES / "figure1.cfg"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mcgpres", "farey", "resolve", "1/0", "0/1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1/1\n"
