import json

import pytest

from planelab.cli import REGISTRY, list_text, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_is_stable_and_complete(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    assert out == list_text()
    for name in REGISTRY:
        assert name in out
    assert "counterexample.pappus-hilbert" in out


def test_run_pappus_rational_json(capsys):
    code, out, _ = run_cli(capsys, "run", "--suite", "pappus",
                           "--system", "rational", "--n", "60",
                           "--seed", "7", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] == 60 and payload["fails"] == 0
    assert list(payload.keys()) == ["theorem", "variant", "system", "n",
                                    "seed", "holds", "fails", "degenerate",
                                    "first_witness"]


def test_json_byte_identical_across_runs(capsys):
    args = ("run", "--suite", "desargues-d2a", "--system", "octonion",
            "--n", "25", "--seed", "3", "--json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_counterexample_suite_expects_failure(capsys):
    code, out, _ = run_cli(capsys, "run", "--suite",
                           "counterexample.pappus-hilbert", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert payload["name"] == "pappus-hilbert"


def test_capability_gate_exit_code(capsys):
    code, _, err = run_cli(capsys, "run", "--suite", "between",
                           "--system", "octonion", "--n", "5")
    assert code == 3
    assert "not ordered" in err


def test_suite_system_mismatch_exit_code(capsys):
    code, _, err = run_cli(capsys, "run", "--suite", "monotonicity",
                           "--system", "octonion")
    assert code == 3


def test_unknown_suite_and_system(capsys):
    code, _, err = run_cli(capsys, "run", "--suite", "nonsense")
    assert code == 2
    code, _, err = run_cli(capsys, "run", "--suite", "pappus",
                           "--system", "nonsense")
    assert code == 2


def test_svg_output(tmp_path, capsys):
    target = tmp_path / "figure.svg"
    code, _, _ = run_cli(capsys, "run", "--suite",
                         "counterexample.desargues-moulton",
                         "--svg", str(target))
    assert code == 0
    body = target.read_text()
    assert body.startswith("<svg ") and body.rstrip().endswith("</svg>")
    target2 = tmp_path / "trace.svg"
    code, _, _ = run_cli(capsys, "run", "--suite", "segcalc",
                         "--system", "rational", "--n", "3",
                         "--svg", str(target2))
    assert code == 0
    assert target2.read_text().startswith("<svg ")


def test_svg_flag_on_suite_without_figure(capsys):
    code, _, err = run_cli(capsys, "run", "--suite", "wagner", "--n", "5",
                           "--svg", "/tmp/nope.svg")
    assert code == 0
    assert "no figure" in err


SMOKE = [
    ("pappus", "rational", "8"),
    ("desargues-d0", "quadext", "6"),
    ("desargues-d1", "rational", "6"),
    ("desargues-d2a", "octonion", "5"),
    ("desargues-d2b", "hilbert", "3"),
    ("desargues-d2c", "quaternion", "5"),
    ("desargues-little", "rational", "5"),
    ("between", "hilbert", "6"),
    ("between", "moulton", "10"),
    ("pasch", "rational", "20"),
    ("alternative-laws", "octonion", "30"),
    ("antisymmetry", "octonion", "30"),
    ("inverse-identities", "quaternion", "20"),
    ("four-identity", "laurent", "12"),
    ("norm-mult", "octonion", "30"),
    ("eight-square", None, "25"),
    ("commuting-associator", None, "25"),
    ("monotonicity", "ratfunc", "40"),
    ("wagner", None, "50"),
    ("harmonic-independence", "rational", "12"),
    ("harmonic-scale", "rational", "8"),
    ("mobius-crossratio", "rational", "15"),
    ("segcalc", "quadext", "10"),
    ("archimedean", "laurent", None),
    ("archimedean", "rational", None),
    ("inaccessible-d0", "rational", "10"),
    ("inaccessible-reflection", "rational", "1"),
    ("counterexample.sas-pseudolength", None, None),
]


@pytest.mark.parametrize("suite,system,n", SMOKE)
def test_every_suite_smokes(capsys, suite, system, n):
    argv = ["run", "--suite", suite, "--trunc-t", "8", "--trunc-s", "8"]
    if system:
        argv += ["--system", system]
    if n:
        argv += ["--n", n]
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, (suite, system, out, err)
    assert out.strip().endswith("PASS")
