import json
import math
import os
import subprocess

import pytest

import solvpot


def mpt(alpha=1.0, v0=2.0):
    rho1 = -v0 / alpha**2
    return solvpot.FamilySpec(
        "IwataI", {"rho": -1, "sigma": 0, "rho1": rho1, "sigma1": -rho1 + 0.75, "kappa": alpha**2}
    )


def test_kinds_and_templates():
    kinds = solvpot.kinds()
    assert len(kinds) == 10
    for kind in kinds:
        spec = solvpot.template_spec(kind)
        assert solvpot.FamilySpec.from_json(spec.to_json()) == spec


def test_poschl_teller_anchor():
    for x in (0.2, 1.0, 3.5):
        y = solvpot.cosh2_map(1.0, x)
        assert abs(solvpot.potential(mpt(), y) - 2 / y) <= 1e-10


def test_master_formula_and_split():
    spec = solvpot.random_spec("Heun", seed=4)
    ys = [0.1 * i + 0.05 for i in range(-20, 20)]
    ys = [y for y in ys if all(abs(y - s) > 1e-2 for s in spec.singular_points())]
    report = solvpot.check_master_vs_closed(spec, ys)
    assert report["passed"], report
    assert solvpot.check_decomposition(spec, ys, [0, 0.7, 1, 2.5])["passed"]


def test_triple_and_errors():
    a, b, c = solvpot.hypergeometric_params(
        solvpot.FamilySpec("IwataI", {"rho": 0, "sigma": 0, "rho1": 0, "sigma1": 0, "kappa": 1}), 1.0
    )
    assert (a, b, c) == (1 + 1j, 1, 2)
    with pytest.raises(solvpot.InvalidSpec):
        solvpot.FamilySpec("IwataI", {"rho": 1})
    with pytest.raises(solvpot.SolvpotError):
        solvpot.potential(mpt(), 0.0)


def test_embedding_and_maps():
    spec = mpt()
    heun = solvpot.embed_iwata_to_heun(spec, 2.5)
    assert heun.kind == "Heun"
    assert math.isclose(solvpot.potential(heun, 3.0), solvpot.potential(spec, 3.0), rel_tol=1e-9)
    m = solvpot.solve_map(spec, 1.0, math.cosh(1.0) ** 2, 1, 2.0)
    assert abs(m["y"][-1] - math.cosh(2.0) ** 2) <= 1e-6


def test_numerov_and_schrodinger():
    step, x0 = 1e-3, -12.0
    values = [-6 / math.cosh(x0 + i * step) ** 2 for i in range(24001)]
    e = solvpot.numerov_eigenvalues(x0, step, values, 2)
    assert abs(e[0] + 4) <= 1e-4 and abs(e[1] + 1) <= 1e-4
    assert solvpot.schrodinger_residual_cosh2(mpt(), 1.0, 1.0, 0.2, 4.0)["passed"]


@pytest.mark.skipif("SOLVPOT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_params(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps({"kind": "IwataI", "params": {"rho": 0, "sigma": 0, "rho1": 0, "sigma1": 0, "kappa": 1}}))
    out = subprocess.run(
        [os.environ["SOLVPOT_CLI"], "params", "--spec", str(path), "--class", "iwata1", "--k", "1"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert json.loads(out) == {"a": [1, 1], "b": [1, 0], "c": [2, 0]}
