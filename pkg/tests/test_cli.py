import json

import pytest

from iterroot.cli import main
from iterroot.instances import f1, f2, fig67
from iterroot.mfnio import parse, serialize


@pytest.fixture
def write(tmp_path):
    def _write(name, value):
        path = tmp_path / name
        path.write_text(serialize(value), encoding="utf-8")
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_scan_fires_on_f1(write, capsys):
    path = write("f1.mfn", f1(3))
    code, out, _ = run(capsys, "check", path, "--M", "2")
    assert code == 0
    assert "forward-paths" in out
    assert "x0=x0" in out


def test_check_scan_json_output(write, capsys):
    path = write("f2.mfn", f2(3))
    code, out, _ = run(capsys, "check", path, "--M", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    rules = {c["rule"] for c in payload["certificates"]}
    assert {"forward-paths", "forward-points"} <= rules
    assert all(c["conclusion"] == "no-roots-at-all" for c in payload["certificates"])


def test_check_single_rule_with_explicit_point(write, capsys):
    path = write("f1.mfn", f1(3))
    code, out, _ = run(capsys, "check", path, "--rule", "forward-points",
                       "--x0", "x0", "--M", "2", "--N", "1")
    assert code == 1  # reported but does not fire
    assert "not-applicable" in out


def test_check_no_certificate_exit_code(write, capsys):
    from iterroot.core import identity_multifunction
    path = write("id.mfn", identity_multifunction(f1(3).ground))
    code, out, _ = run(capsys, "check", path)
    assert code == 1
    assert "no certificate fires" in out


def test_check_unknown_point_is_input_error(write, capsys):
    path = write("f1.mfn", f1(3))
    code, _, err = run(capsys, "check", path, "--rule", "forward-paths", "--x0", "nope")
    assert code == 2
    assert "error" in err


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "check", "/does/not/exist.mfn")
    assert code == 2
    assert "error" in err


def test_parse_error_reports_file_and_line(tmp_path, capsys):
    path = tmp_path / "bad.mfn"
    path.write_text("points a\nq -> a\n", encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "bad.mfn" in err and "line 2" in err


def test_search_witness_round_trips(write, capsys):
    f, _ = fig67()
    path = write("f.mfn", f)
    code, out, _ = run(capsys, "search", path, "--order", "4")
    assert code == 0
    from iterroot.core import iterate_map
    witness = parse(out)
    assert iterate_map(witness, 4) == f


def test_search_exhausted_exit_code(write, capsys):
    path = write("f1.mfn", f1(3))
    code, out, _ = run(capsys, "search", path, "--order", "2", "--max-out", "2", "--total")
    assert code == 1
    assert out.strip() == "exhausted"


def test_search_budget_exit_code(write, capsys):
    from iterroot.instances import random_multifunction
    path = write("r.mfn", random_multifunction(5, seed=123))
    code, out, _ = run(capsys, "search", path, "--order", "3", "--budget", "50")
    assert code == 3
    assert out.strip() == "budget"


def test_search_conflicting_constraints_rejected(write, capsys):
    path = write("f1.mfn", f1(3))
    code, _, err = run(capsys, "search", path, "--order", "2",
                       "--max-out", "1", "--max-in", "1")
    assert code == 2
    assert "mutually exclusive" in err


def test_iterate_matches_library(write, capsys):
    F = f2(3)
    path = write("f2.mfn", F)
    code, out, _ = run(capsys, "iterate", path, "--order", "2")
    assert code == 0
    from iterroot.core import equals, iterate
    assert equals(parse(out), iterate(F, 2))


def test_invert_round_trip(write, capsys):
    F = f1(3)
    path = write("f1.mfn", F)
    code, out, _ = run(capsys, "invert", path)
    assert code == 0
    from iterroot.core import equals, invert
    assert equals(parse(out), invert(F))


def test_pullback_of_map_then_witness_recovers_map(write, capsys, tmp_path):
    from iterroot.instances import random_permutation
    f = random_permutation(5, seed=2)
    path = write("perm.mfn", f)
    code, out, _ = run(capsys, "pullback", path)
    assert code == 0
    back = tmp_path / "back.mfn"
    back.write_text(out, encoding="utf-8")
    code, out2, _ = run(capsys, "pullback", str(back))
    assert code == 0
    assert parse(out2) == f


def test_pullback_failure_lists_conditions(write, capsys):
    code, out, _ = run(capsys, "pullback", write("f1.mfn", f1(3)))
    assert code == 1
    assert "not a pullback" in out


def test_paths_counts_two_step_routes_into_hub(write, capsys):
    F = f1(3)
    labels = ",".join(F.ground.labels)
    path = write("f1.mfn", F)
    code, out, _ = run(capsys, "paths", path, "--from", labels, "--to", "x0",
                       "--length", "2")
    assert code == 0
    assert out.strip() == "4"


def test_fixedpoints_reports_profile_and_exclusions(write, capsys):
    f, _ = fig67()
    code, out, _ = run(capsys, "fixedpoints", write("f.mfn", f))
    assert code == 0
    assert "fixed points: x1 x2 x3 x4" in out
    assert "total tail size: 8" in out
    assert "tail-mass exclusion: all orders n > 8" in out
    assert "non-isolated-count exclusion: orders n > 2 with no divisor in [2, 4]" in out


def test_fixedpoints_rejects_multifunctions(write, capsys):
    code, _, err = run(capsys, "fixedpoints", write("f1.mfn", f1(3)))
    assert code == 2
    assert "kind single" in err


def test_poly_json_quadratic(capsys):
    code, out, _ = run(capsys, "poly", "--coeffs", "1,2,1", "--order", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 2
    assert payload["excludes_order"] is True
    assert "Quadratic" in {f["rule"] for f in payload["findings"]}


def test_poly_accepts_i_notation(capsys):
    code, out, _ = run(capsys, "poly", "--coeffs", "1+2i,0,1", "--order", "2")
    assert code == 0
    assert "order 2 excluded" in out


def test_poly_bad_coefficient_is_input_error(capsys):
    code, _, err = run(capsys, "poly", "--coeffs", "one,two", "--order", "2")
    assert code == 2
    assert "bad complex coefficient" in err


def test_solar_prints_known_prefix(capsys):
    code, out, _ = run(capsys, "solar", "--count", "5")
    assert code == 0
    assert out.split() == ["2", "3", "6", "11", "14"]


def test_instance_emits_canonical_mfn(capsys):
    code, out, _ = run(capsys, "instance", "f1", "--depth", "3")
    assert code == 0
    from iterroot.core import equals
    assert equals(parse(out), f1(3))


def test_instance_random_is_seed_deterministic(capsys):
    code, first, _ = run(capsys, "instance", "random-mf", "--size", "5", "--seed", "7")
    assert code == 0
    code, second, _ = run(capsys, "instance", "random-mf", "--size", "5", "--seed", "7")
    assert code == 0
    assert first == second


def test_instance_unknown_name_is_input_error(capsys):
    code, _, err = run(capsys, "instance", "mystery")
    assert code == 2
    assert "unknown instance" in err
