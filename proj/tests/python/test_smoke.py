import spinflux


def test_rref_records_pivot_conditions():
    out = spinflux.rref([["4*p - 3*q"]])
    assert out["rank"] == 1
    assert out["rref"] == [["1"]]
    assert out["conditions"] == ["4*p - 3*q"]


def test_solve_simple_line():
    out = spinflux.solve([["1", "1"]], ["1"], labels=["x", "y"])
    assert not out["infeasible"]
    assert out["solution"]["dimension"] == 1


def test_sasakian_scenario_at_coupled_parameters():
    report = spinflux.run_scenario("sasakian3", p="3/4", q="1")
    status = {c["anchor"]: c["status"] for c in report["claims"]}
    assert status["sasakian3.dimension"] == "pass"
    assert status["sasakian3.coupling.eigenvalue"] == "pass"
    assert report["solution"]["dimension"] == 7


def test_joint_constraints_are_empty():
    report = spinflux.run_scenario(
        "sasakian3", p="1", q="1", constraints=["t-psi-zero", "f-psi-zero"]
    )
    status = {c["anchor"]: c["status"] for c in report["claims"]}
    assert status["sasakian3.joint-constraints"] == "pass"


def test_conventions_description_present():
    assert "Psi_3" in spinflux.conventions()
