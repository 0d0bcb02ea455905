from __future__ import annotations

import json

import pytest

from mcgx.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN, ParseError, main, parse_class
from mcgx.generators import named
from mcgx.surface import Signature


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_member_exit_codes(capsys):
    code, out, _ = run(capsys, "-g", "0", "-n", "2", "member", "s_1_1")
    assert code == EXIT_OK and out.startswith("Member(")
    code, out, _ = run(capsys, "-g", "1", "-n", "1", "member", "twist:alpha_1")
    assert code == EXIT_FAIL and out.strip() == "Refuted(LagrangianViolated)"
    code, out, _ = run(capsys, "-g", "0", "-n", "2", "--depth", "0", "member", "s_1_1")
    assert code == EXIT_UNKNOWN and out.strip() == "Unknown(depth=0)"


def test_json_and_text_verdicts_agree(capsys):
    for word in ("iota_1 tau_1", "twist:alpha_1"):
        _, text, _ = run(capsys, "-g", "1", "-n", "1", "member", word)
        _, js, _ = run(capsys, "-g", "1", "-n", "1", "--json", "member", word)
        assert text.startswith(json.loads(js)["verdict"])


def test_relations_report(capsys):
    code, out, _ = run(capsys, "-g", "2", "-n", "2", "relations")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines and all(l.startswith("RELATION ") and " PASS" in l for l in lines)


def test_parse_errors(capsys):
    code, _, err = run(capsys, "-g", "2", "-n", "1", "compose", "tau_1 theta_9_1")
    assert code == EXIT_ERROR and "token 2" in err and "column 7" in err
    code, _, err = run(capsys, "-g", "2", "-n", "1", "compose", "tau_1^x")
    assert code == EXIT_ERROR
    with pytest.raises(ParseError):
        parse_class(Signature(0, 2), "nothing_here")


def test_empty_word_is_identity(capsys):
    code, out, _ = run(capsys, "-g", "0", "-n", "2", "perm", "")
    assert code == EXIT_OK and out.strip() == "1 2 3 4"


def test_round_trip_through_text():
    s = Signature(1, 2)
    mc = named(s, "iota_1^2 xi_1_2^-1 twist:alpha_1")
    again = parse_class(s, str(mc))
    assert again.automorphism.outer_equal(mc.automorphism) is not None


def test_other_commands(capsys, tmp_path):
    assert run(capsys, "-g", "0", "-n", "2", "perm", "iota_1")[1].strip() == "2 1 3 4"
    code, out, _ = run(capsys, "-g", "1", "-n", "1", "homology", "tau_1")
    assert code == EXIT_OK and len(out.strip().splitlines()) == 3
    code, out, _ = run(capsys, "-g", "0", "-n", "2", "act", "iota_1", "u1")
    assert code == EXIT_OK and out.strip() == "u2"
    code, out, _ = run(capsys, "-g", "1", "-n", "1", "coset", "tau_1", "tau_1 iota_1")
    assert code == EXIT_OK and out.strip() == "Member(iota_1)"
    assert "dA_1" in run(capsys, "-g", "1", "-n", "1", "catalog")[1]
    assert run(capsys, "-g", "0", "-n", "2", "gens")[1].split() == ["iota_1", "lambda_1", "s_1_1", "S_1_2", "Sp_1_2"]
    assert run(capsys, "-g", "0", "-n", "1", "gens", "--pure")[1].strip() == ""
    code, out, _ = run(capsys, "-g", "1", "-n", "2", "--seed", "4", "sample", "--count", "20")
    assert code == EXIT_OK and out.strip() == "violations: 0"
    target = tmp_path / "pres.txt"
    code, out, _ = run(capsys, "-g", "0", "-n", "2", "--emit-presentation", str(target), "link", "sigma_2^3", "--invariants")
    assert code == EXIT_OK and "components: 1" in out
    assert len(target.read_text().splitlines()) == 3
    code, out, _ = run(capsys, "-g", "0", "-n", "2", "--json", "link", "sigma_2^3", "--invariants")
    assert json.loads(out)["first_elementary_ideal"] == ["s1**2 - s1 + 1", "s1 + t1 - 1"]


def test_console_script():
    import shutil
    import subprocess

    exe = shutil.which("mcgx")
    assert exe is not None
    res = subprocess.run([exe, "-g", "0", "-n", "2", "member", "s_1_1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("Member(")
