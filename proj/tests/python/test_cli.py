import json
import subprocess
import sys

import jsonschema
import pytest

import rbd

COMMANDS = {
    "hj-expand": ["hj", "expand", "9", "2"],
    "hj-cpq": ["hj", "cpq", "3", "1"],
    "sing-classify": ["sing", "classify", "4", "1", "1"],
    "sing-resolve": ["sing", "resolve", "9", "2"],
    "surface-double-cover": ["surface", "double-cover", "--e", "4", "--L", "2,8"],
    "surface-en": ["surface", "en", "--chi", "48", "--sigma", "-32"],
    "blowdown": ["blowdown", "--chi", "48", "--sigma", "-32", "--config", "2,1", "--config", "3,1"],
    "w4n": ["w4n", "8", "--json"],
    "quotient-paper-z4": ["quotient", "demo", "paper-z4"],
    "quotient-ck-cl": ["quotient", "demo", "ck-cl", "3", "2"],
    "smooth": ["smooth", "--d", "2", "--n", "2", "--a", "1", "--t", "1,0"],
    "verify-paper": ["verify-paper"],
}


def run(args):
    code, out, err = rbd.run_cli(args)
    return code, out, err


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_output_matches_schema(name, schema):
    code, out, _ = run(COMMANDS[name])
    assert code == 0
    jsonschema.validate(json.loads(out), schema(name), cls=jsonschema.Draft202012Validator)


def test_plumb_check_schema(tmp_path, schema):
    path = tmp_path / "sections.plumb"
    path.write_text("# two disjoint -4 spheres\nchain -4\nchain -4\n")
    code, out, _ = run(["plumb", "check", str(path)])
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema("plumb-check"), cls=jsonschema.Draft202012Validator)
    assert doc["boundary_error"] == "NotLinearChain"
    assert len(doc["cpq_matches"]) == 2


def test_verify_paper_schema_under_fault(schema):
    code, out, err = run(["verify-paper", "--inject-fault", "delta-k2-sign"])
    assert code == 1
    assert "FAIL" in err
    jsonschema.validate(json.loads(out), schema("verify-paper"), cls=jsonschema.Draft202012Validator)


def test_exit_codes():
    assert run(["plumb", "check", "missing.plumb"])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run(["--help"])[0] == 0


def test_pretty_is_same_document():
    plain = json.loads(run(["w4n", "5"])[1])
    pretty = run(["--pretty", "w4n", "5"])[1]
    assert "\n" in pretty.strip()
    assert json.loads(pretty) == plain


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rbd", "hj", "cpq", "2", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["string"] == [4]


def test_verify_paper_api_matches_cli():
    api = rbd.verify_paper()
    cli = json.loads(run(["verify-paper"])[1])
    assert api == cli
    assert api["all_pass"]
    broken = rbd.verify_paper("hj-term", parallel=False)
    assert not broken["all_pass"]
