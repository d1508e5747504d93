import os
import subprocess
from fractions import Fraction

import pytest

import f1zeta


def test_counting_and_zeta():
    d = f1zeta.parse("SL(2)")
    assert f1zeta.counting_polynomial(d) == [0, -1, 0, 1]
    z = f1zeta.zeta_from_counting([0, -1, 0, 1])
    assert f1zeta.evaluate(z, 0) == Fraction(1, 3)
    assert f1zeta.reflect(f1zeta.reflect(z, 4), 4) == z


def test_parse_error_is_raised():
    with pytest.raises(f1zeta.ParseError):
        f1zeta.parse("P(x)")
    with pytest.raises(f1zeta.Error):
        f1zeta.parse("Gr(5,4)")


def test_functional_equations():
    assert f1zeta.check_fe_projective("P(4)")["sign_factor"] == -1
    assert not f1zeta.check_fe_group("SL(2)", 2)["holds"]
    assert f1zeta.check_fe_group("SL(2)", 4)["holds"]
    assert f1zeta.check_lemma_group("GL(3)")["holds"]


def test_oracle_and_weyl():
    assert f1zeta.count_points("GL(2)", 3) == 48
    assert f1zeta.weyl_enumerate("E", 6)["group_order"] == 51840


def test_limit():
    report = f1zeta.soule_limit_check("P(1)", "3", 6)
    assert report["holds"]


def test_run_cli_in_process():
    code, out, _ = f1zeta.run_cli(["zeta", "--scheme", "SL(2)"])
    assert code == 0
    assert "N(q)=q^3-q, chi=0, zeta=(s-1)^1 (s-3)^-1" in out


@pytest.mark.skipif("F1ZETA_CLI" not in os.environ, reason="CLI binary location not provided")
def test_cli_binary():
    cli = os.environ["F1ZETA_CLI"]
    r = subprocess.run([cli, "check-fe", "--scheme", "SL(2)"], capture_output=True, text=True)
    assert r.returncode == 1
    r = subprocess.run([cli, "weyl", "--type", "E", "--rank", "8", "--method", "bfs"], capture_output=True, text=True)
    assert r.returncode == 4
