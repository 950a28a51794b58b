import json

import pytest

from src.cli.runner import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalform(capsys):
    code, out, _ = run(capsys, "normalform", "catalog:aq2", "y*x", "--no-verify", "--degree", "2")
    assert code == 0
    assert "q*x*y" in out.splitlines()


def test_verify_plane(capsys):
    code, out, _ = run(capsys, "verify", "catalog:aq2", "--degree", "2")
    assert code == 0
    assert "braided Hopf axioms: pass" in out


def test_braid_pairs(capsys):
    code, out, _ = run(capsys, "braid", "catalog:bglq2", "catalog:aq2", "--pairs", "--no-verify", "--degree", "2")
    assert code == 0
    assert "Ψ(c⊗x) = q*x⊗c" in out


def test_braid_plane_with_itself(capsys):
    code, out, _ = run(capsys, "braid", "catalog:aq2", "catalog:aq2", "--pairs", "--no-verify", "--degree", "2")
    assert code == 0
    assert "Ψ(x⊗y) = q*y⊗x" in out


def test_bad_field_is_a_usage_error(capsys):
    code, _, err = run(capsys, "verify", "catalog:aq2", "--field", "reals")
    assert code == 2
    assert err.startswith("error:")


def test_negative_degree_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "catalog:aq2", "--degree", "-1")
    assert code == 2


def test_unknown_entry_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "catalog:nope")
    assert code == 2


def test_field_mismatch_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "catalog:braided_line", "--field", "transcendental")
    assert code == 2


def test_missing_file_is_a_usage_error(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", str(tmp_path / "absent.pres"))
    assert code == 2


def test_printed_antipode_needs_the_comodule_variant(capsys):
    code, _, _ = run(capsys, "bosonise", "catalog:superline", "--variant", "module", "--antipode", "printed",
                     "--no-verify")
    assert code == 2


def test_printed_antipode_fails_verification(capsys):
    code, out, _ = run(capsys, "bosonise", "catalog:braided_line", "--antipode", "printed", "--no-verify",
                       "--degree", "2")
    assert code == 1
    assert "Hopf axioms: FAIL" in out


def test_corrected_bosonisation_passes(capsys):
    code, out, _ = run(capsys, "bosonise", "catalog:superline", "--no-verify", "--degree", "2")
    assert code == 0
    assert "Hopf axioms: pass" in out


def test_records_format(capsys):
    code, out, _ = run(capsys, "normalform", "catalog:aq2", "y*x", "--no-verify", "--degree", "2",
                       "--format", "records")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[0]["value"] == "q*x*y"
    assert all(r["passed"] for r in records[1:])


def test_out_file(capsys, tmp_path):
    target = tmp_path / "normal.txt"
    code, out, _ = run(capsys, "normalform", "catalog:aq2", "y*x", "--no-verify", "--degree", "2",
                       "--out", str(target))
    assert code == 0
    assert out == ""
    assert "q*x*y" in target.read_text(encoding="utf-8")


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "bglq2" in out
    assert "families: anyonic(n), group_bichar(m,n,omega)" in out


def test_colour_twist_out_of_scope(capsys):
    code, out, _ = run(capsys, "colour-twist", "--modulus", "4", "--form", "[[0,1],[3,0]]")
    assert code == 0
    assert "out of scope" in out


def test_colour_twist_of_the_heisenberg_algebra(capsys):
    code, out, _ = run(capsys, "colour-twist", "catalog:colour_heisenberg", "--no-verify", "--degree", "2",
                       "--construction-degree", "2")
    assert code == 0
    assert "β_χ values on G×G: 1" in out
    assert "colour twist: pass" in out


def test_colour_twist_needs_a_form(capsys):
    code, _, _ = run(capsys, "colour-twist", "--modulus", "3")
    assert code == 2


def test_subcommand_is_required():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
