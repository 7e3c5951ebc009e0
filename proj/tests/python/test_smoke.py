# Copyright 2026 The trottersmith Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest
import scipy.linalg

import trottersmith as ts


def heisenberg_chain(n, boundary=None):
    return ts.build_lattice(ts.LatticeKind.chain, [n], boundary or ts.Boundary.open,
                            ts.CouplingTensor.heisenberg(1.0))


def test_lattice_and_coloring():
    sq = ts.build_lattice(ts.LatticeKind.square, [4, 4], ts.Boundary.periodic,
                          ts.CouplingTensor.heisenberg(1.0))
    assert sq.n == 16
    assert len(sq.edges) == 32
    coloring = ts.color(sq)
    assert coloring.K == 4
    assert ts.validate(coloring, sq) is None


def test_model_json_round_trip():
    m = ts.build_lattice(ts.LatticeKind.hexagonal, [2, 2], ts.Boundary.periodic,
                         ts.CouplingTensor.diagonal(1.0, 0.5, 0.25), np.array([0.0, 0.0, 0.3]))
    back = ts.SpinModel.from_json(m.to_json())
    assert back.to_json() == m.to_json()


def test_plan_and_formulas():
    assert ts.steps_for_accuracy(1, 2, 4, 1.0, 1.0, 0.01).m == 150
    assert ts.suzuki_p(2) == pytest.approx(0.4144907717, abs=1e-10)
    f = ts.suzuki(2, 3)
    assert all(s == pytest.approx(1.0, abs=1e-12) for s in f.coefficient_sums())


def test_kak_of_cnot():
    cnot = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
    k = ts.kak_decompose(cnot)
    assert k.alpha == pytest.approx(math.pi)
    assert abs(k.beta) < 1e-10 and abs(k.gamma) < 1e-10


def test_heisenberg_circuit_matches_scipy():
    alpha = 0.7
    sx = np.array([[0, 1], [1, 0]]) / 2
    sy = np.array([[0, -1j], [1j, 0]]) / 2
    sz = np.array([[1, 0], [0, -1]]) / 2
    h = sum(np.kron(s, s) for s in (sx, sy, sz))
    target = scipy.linalg.expm(-1j * alpha * h)
    u = ts.circuit_unitary(ts.synth_heisenberg(alpha))
    phase = np.trace(target.conj().T @ u)
    phase /= abs(phase)
    assert np.linalg.norm(u - phase * target, 2) < 1e-9
    assert ts.counts(ts.synth_heisenberg(alpha))["cnots"] == 3


def test_trotter_circuit_and_error():
    m = heisenberg_chain(4)
    coloring = ts.color(m)
    plan = ts.steps_for_accuracy(1, coloring.K, m.n, m.j_max, 1.0, 0.05)
    schedule = ts.expand(plan, ts.first_order(coloring.K))
    circuit = ts.build_trotter_circuit(m, coloring, schedule, ts.GateMode.decomposed)
    assert circuit.interaction_gates == plan.m * 3
    assert ts.counts(circuit)["cnots"] == 3 * circuit.interaction_gates
    assert "OPENQASM 3.0;" in circuit.to_qasm()
    err = ts.trotter_error(m, coloring, ts.first_order(coloring.K), plan.m, 1.0)
    assert err <= ts.first_order_error_bound(coloring.K, m.n, 1.0, 1.0, plan.m)


def test_estimates():
    r = ts.estimate_first_order(4, 2, 1.0, 1.0, 0.01)
    assert (r.m, r.interaction_gates) == (150, 600.0)
    assert ts.estimate_higher_order(2, 4, 2, 1.0, 1.0, 0.01).m == 11
    assert ts.estimate_scaled(4, 1.0, 2.0) == 8.0


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ts.steps_for_accuracy(1, 2, 4, 1.0, 1.0, 0.0)
    with pytest.raises(MemoryError):
        ts.total_hamiltonian(heisenberg_chain(13))
