import io
import json
import subprocess
import sys

import pytest

from jackson_space.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_json():
    code, out, _ = call("classify", "--n", "5", "--v-x", "0", "--ell-divides-n", "false")
    assert code == 0
    assert json.loads(out) == {"fibre": "GenericJackson", "ramification": "unramified", "verdict": "semistable"}


def test_classify_wrong_regime_has_null_verdict():
    code, out, _ = call("classify", "--n", "5", "--v-x", "2", "--ell-divides-n", "true")
    assert code == 0
    assert json.loads(out)["fibre"] == "Affine3"
    assert json.loads(out)["verdict"] is None


def test_present_roundtrip(tmp_path):
    code, out, _ = call("present", "--preset", "jackson", "--zeta-order", "5", "--x", "3")
    assert code == 0
    path = tmp_path / "pres.json"
    path.write_text(out)
    code2, out2, _ = call("present", "--input", str(path))
    assert code2 == 0 and out2 == out


@pytest.mark.parametrize("argv", [
    ("present", "--preset", "kw", "--zeta-order", "3"),
    ("locus", "--preset", "jackson", "--zeta-order", "3", "--reduce-at", "7"),
    ("confluence", "--preset", "iq", "--zeta-order", "5", "--gens", "4"),
    ("curve-analyze", "50b2"),
    ("brauer", "--p", "5", "--w", "4", "--theta", "1,2,3,4,1"),
])
def test_output_is_deterministic(argv):
    first = call(*argv)
    second = call(*argv)
    assert first[0] == 0
    assert first == second
    json.loads(first[1])


def test_normal_form_and_central():
    code, out, _ = call("normal-form", "--preset", "jackson", "--zeta-order", "3", "e1*e0")
    assert code == 0 and json.loads(out)["normal_form"]
    code, out, _ = call("central", "--preset", "jackson", "--zeta-order", "3", "e0^3")
    assert json.loads(out)["central"] is True
    code, out, _ = call("central", "--preset", "jackson", "--zeta-order", "3", "e0")
    assert json.loads(out)["central"] is False


def test_ext_symbolic_conic_point():
    code, out, _ = call("ext", "--preset", "jackson", "--zeta-order", "5", "--x", "3", "--m", "0,a,b", "--n", "0,a,b")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 1
    assert data["reference_row"]["dimension"] == 1


def test_ext_numeric_over_finite_field():
    code, out, _ = call("ext", "--preset", "jackson", "--zeta-order", "3", "--x", "1", "--reduce-at", "7",
                        "--m", "0,0,0", "--n", "0,0,0")
    assert code == 1  # the origin is not a module when x != 0
    code, out, _ = call("ext", "--preset", "jackson", "--zeta-order", "3", "--x", "1", "--reduce-at", "7",
                        "--m", "0,1,1", "--n", "0,1,1")
    assert code == 0 and json.loads(out)["dimension"] == 1


def test_tangent_command():
    code, out, _ = call("tangent", "--preset", "jackson", "--zeta-order", "5", "--x", "3", "--chars", "0,a,b;0,u,v")
    assert code == 0
    assert json.loads(out)["tangent"] == [[1, 0], [0, 1]]


def test_table_format():
    code, out, _ = call("classify", "--n", "3", "--v-x", "1", "--ell-divides-n", "false", "--format", "table")
    assert code == 0
    assert "QuantumAffine" in out and "non_semistable" in out


def test_kernel_error_exit_one():
    code, out, err = call("brauer", "--p", "5", "--w", "4", "--theta", "1,1,1,1,1", "--i", "1", "--j", "0")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "IndexOutOfRange"
    code, _, err = call("brauer", "--p", "5", "--w", "4", "--theta", "1,1")
    assert code == 1 and json.loads(err)["error"] == "LengthMismatch"


def test_malformed_input_exit_two(tmp_path):
    assert call("nonsense")[0] == 2
    assert call("classify", "--n", "3")[0] == 2
    assert call("classify", "--n", "3", "--v-x", "0", "--ell-divides-n", "maybe")[0] == 2
    code, _, err = call("normal-form", "--preset", "jackson", "e1 +")
    assert code == 2 and json.loads(err)["error"] == "ParseError"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("present", "--input", str(bad))[0] == 2
    assert call("present")[0] == 2
    assert call("ext", "--preset", "kw", "--m", "a,0,0", "--n", "0,0,0")[0] == 2
    assert call("curve-analyze", str(tmp_path / "missing.json"))[0] == 2
    assert call("classify", "--n", "3", "--v-x", "-1", "--ell-divides-n", "no")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jackson_space", "classify", "--n", "7", "--v-x", "14",
                           "--ell-divides-n", "false"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "semistable_after_change"
