import io as _io
import json
from pathlib import Path

import pytest

from hopftwist.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    return code, json.loads(out)


def test_validate_presets():
    for args in (["--preset", "sweedler"], ["--preset", "groupAlgebra", "--group", "Z4"], ["--preset", "trivialField"]):
        assert call("validate", *args)[0] == 0


def test_cocycle_check_and_table():
    assert call("cocycle-check", "--preset", "sweedler", "--a", "2", "--b", "1", "--c", "3")[0] == 0
    code, rep = call_json("twist-table", "--preset", "sweedler")
    assert code == 0 and rep["table"]["x,x"] == {"1": "a"}


def test_identity_verdicts():
    assert call("identity-test", "--preset", "sweedler", "--poly", str(DATA / "quadric.json"))[0] == 0
    code, out, _ = call("identity-test", "--preset", "sweedler", "--poly-text", "X Y")
    assert code == 1 and "not" in out
    assert call("coinvariant-test", "--preset", "sweedler", "--poly-text", "E Z + Y X")[0] == 0
    assert call("central-test", "--preset", "sweedler", "--poly-text", "X X")[0] == 0
    assert call("central-test", "--preset", "sweedler", "--poly-text", "X")[0] == 1
    args = ("central-test", "--preset", "sweedler", "--a", "1", "--b", "0", "--c", "1", "--membership")
    assert call(*args, "--poly-text", "X Y + Y X")[0] == 0


def test_identity_search_counts():
    code, rep = call_json("identity-search", "--preset", "sweedler", "--a", "1", "--b", "0", "--c", "1", "--degree", "3")
    assert code == 0 and rep["kernelDim"] == 35 and rep["verified"]


def test_theta_and_tinv():
    code, out, _ = call("theta", "--preset", "groupFunctionAlgebra", "--group", "Z2")
    assert out.strip() == "t_e^2 - t_g^2"
    code, out, _ = call("theta", "--preset", "matrixCoalgebra", "--full")
    assert code == 0 and "t_11" in out
    assert call("tinv", "--preset", "sweedler")[0] == 0


def test_center_integrals_trace():
    code, rep = call_json("center", "--preset", "sweedler", "--a", "2", "--b", "3", "--c", "5")
    assert code == 0 and rep["dimension"] == 1
    assert call("integrals", "--preset", "sweedler")[0] == 0
    code, out, _ = call("trace-det", "--preset", "sweedler", "--a", "1", "--b", "2", "--c", "1")
    assert out.strip() == "0"


def test_lazy_transport():
    code, rep = call_json("lazy-transport", "--preset", "groupAlgebra", "--group", "Z2", "--u", "5", "--lam", "1,3")
    assert code == 0
    code, out, _ = call("lazy-transport", "--preset", "sweedler", "--lam", "1,1,1,0")
    assert code == 1 and "y" in out


def test_sigma_save_verify_specialize(tmp_path):
    rep = tmp_path / "sigma.json"
    assert call("sigma", "--preset", "sweedler", "--json", "--out", str(rep))[0] == 0
    assert call("sigma", "--preset", "sweedler", "--verify", str(rep))[0] == 0
    assert call("sigma", "--preset", "sweedler", "--a", "1", "--verify", str(rep))[0] == 1
    sets = ["--set", "t_1=1", "--set", "t_x=1", "--set", "t_y=0", "--set", "t_z=0"]
    assert call("sigma-spec", "--sigma", str(rep), *sets)[0] == 0
    sets[1] = "t_1=0"
    code, _, err = call("sigma-spec", "--sigma", str(rep), *sets)
    assert code == 2 and "sigma" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["validate"],
        ["theta", "--preset", "groupAlgebra", "--group", "S9"],
        ["identity-test", "--preset", "sweedler", "--poly-text", "X_w"],
        ["validate", "--hopf", "/nonexistent.json"],
        ["cocycle-check", "--preset", "sweedler", "--a", "0"],
        ["bogus-command"],
    ],
)
def test_input_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_preset_tables():
    code, rep = call_json("preset-tables")
    assert code == 0 and rep


def test_resource_limit(monkeypatch):
    monkeypatch.setenv("HOPFTWIST_COLUMN_CAP", "10")
    assert call("identity-search", "--preset", "sweedler", "--degree", "2")[0] == 2
