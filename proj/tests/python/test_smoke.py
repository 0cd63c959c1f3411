import math

import pytest

import convfem


def free_problem(horizon=10.0):
    return convfem.OscillatorProblem(1.0, 9.0, 0.0, 2.0, horizon)


def forced_problem():
    return convfem.OscillatorProblem(1.0, 9.0, 0.0, 0.0, 10.0, convfem.Forcing.sinusoid(5.0, 3.6))


def test_uniform_mesh_and_validation():
    mesh = convfem.uniform_mesh(1.0, 10)
    assert mesh.element_count == 10
    assert mesh.nodes[-1] == 1.0
    assert convfem.validate_mesh(mesh).ok
    bad = convfem.validate_mesh(convfem.Mesh([0.0, 0.1, 0.3, 0.5]))
    assert not bad.ok and "palindromic" in bad.error


def test_convolution():
    assert convfem.convolve(lambda s: 1.0, lambda s: 1.0, 2.0) == pytest.approx(2.0, abs=1e-14)
    assert convfem.convolve_shifted(lambda s: s, lambda s: s, 0.0, 1.0) == pytest.approx(1 / 6)
    with pytest.raises(ValueError):
        convfem.convolve(lambda s: 1.0, lambda s: 1.0, 0.0)


def test_local_matrices_and_force():
    ls = convfem.local_matrices(convfem.Element.make(0.0, 0.1), 1.0, 9.0)
    assert ls.kcal[0][0] == pytest.approx(10.15)
    assert ls.kcal[0][1] == pytest.approx(-9.7)
    f = convfem.local_force(convfem.Element.make(0.0, 0.1), convfem.Forcing.sinusoid(5.0, 3.6))
    assert f[0] == pytest.approx(0.0592259906, abs=1e-9)
    assert f[1] == pytest.approx(0.0298061988, abs=1e-9)


def test_two_element_system():
    problem = convfem.OscillatorProblem(1.0, 9.0, 0.0, 2.0, 1.0)
    gs = convfem.assemble_global(convfem.uniform_mesh(1.0, 2), problem)
    a, b = 2.75, -0.5
    expected = [[0, a, b], [a, 2 * b, a], [b, a, 0]]
    for row, ref in zip(gs.matrix, expected):
        assert row == pytest.approx(ref)
    assert gs.load == [0.0, 0.0, 2.0]
    rs = convfem.impose_initial_conditions(gs, 0.0)
    u = convfem.solve_reduced(rs)
    assert u[0] == pytest.approx(2.0 / a)


def test_fem_and_onestep_agree_with_tables():
    problem = forced_problem()
    mesh = convfem.uniform_mesh(10.0, 200)
    fem = convfem.fem_trajectory(problem, mesh)
    one = convfem.march_on_mesh(problem, mesh)
    assert fem.scheme == "fem" and one.scheme == "onestep"
    assert fem.displacements[60] == pytest.approx(1.8638, abs=5e-5)
    assert max(abs(x - y) for x, y in zip(fem.displacements, one.displacements)) < 1e-10
    free = convfem.fem_trajectory(free_problem(), convfem.uniform_mesh(10.0, 100))
    assert free.displacements[10] == pytest.approx(0.1018, abs=5e-5)


def test_recovered_velocity():
    problem = free_problem()
    mesh = convfem.uniform_mesh(10.0, 1000)
    gs = convfem.assemble_global(mesh, problem)
    u = convfem.fem_trajectory(problem, mesh).displacements
    assert convfem.recover_final_velocity(gs, u) == pytest.approx(2 * math.cos(30.0), abs=1e-2)


def test_stability():
    assert convfem.stability_limit(1.0, 9.0) == pytest.approx(1.1547005384)
    assert convfem.critical_period_ratio() == pytest.approx(0.5513, abs=5e-5)
    l1, l2 = convfem.amplification_eigenvalues(1.0, 9.0, 0.1)
    assert abs(l1) == pytest.approx(1.0, abs=1e-12)
    assert l1.real == pytest.approx(0.9556650246)
    traj = convfem.march(free_problem(), 1.2, 50)
    assert traj.warnings


def test_exact_solution_and_errors():
    assert convfem.exact_solution(free_problem(), 1.0) == pytest.approx(2 / 3 * math.sin(3.0))
    resonant = convfem.OscillatorProblem(1.0, 9.0, 0.0, 0.0, 10.0, convfem.Forcing.sinusoid(5.0, 3.0))
    assert convfem.exact_solution(resonant, 10.0) == pytest.approx(-1.5598819780, abs=1e-9)
    report = convfem.error_metrics(
        convfem.fem_trajectory(free_problem(), convfem.uniform_mesh(10.0, 100)), free_problem())
    assert report.max_abs_error > 0


def test_pointwise_forcing_and_errors():
    ramp = convfem.Forcing.pointwise(lambda s: 2.0 * s)
    assert ramp(1.5) == 3.0
    problem = convfem.OscillatorProblem(1.0, 9.0, 0.0, 0.0, 1.0, ramp)
    traj = convfem.fem_trajectory(problem, convfem.uniform_mesh(1.0, 10))
    assert len(traj.displacements) == 11
    with pytest.raises(ValueError):
        convfem.exact_solution(problem, 0.5)
    with pytest.raises(ValueError):
        convfem.OscillatorProblem(0.0, 9.0, 0.0, 0.0, 1.0)
