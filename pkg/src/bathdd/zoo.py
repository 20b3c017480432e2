"""Built-in channels with their expected spectral profiles and witness
Hamiltonians used throughout the tests and the figure reproductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channel import KrausChannel
from .classify import Classification
from .linalg import kron

__all__ = [
    "ZooEntry",
    "builtin",
    "names",
    "pauli",
]

Z = np.diag([1.0, -1.0]).astype(complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)


def pauli(which: str) -> np.ndarray:
    return {"x": X, "y": Y, "z": Z}[which.lower()].copy()


@dataclass(frozen=True)
class ZooEntry:
    name: str
    channel: KrausChannel
    expected: Classification
    # (label, Hamiltonian, expected suppression_check outcome)
    witnesses: tuple[tuple[str, np.ndarray, bool], ...] = ()


def _ket(d: int, i: int) -> np.ndarray:
    v = np.zeros((d, 1), dtype=complex)
    v[i, 0] = 1.0
    return v


def _unit(d: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    m[i, j] = 1.0
    return m


def _expected(name, dim_fixed, dim_recurrent, ergodic, mixing, irreducible,
              dfs_free, cycles=()):
    return Classification(
        name=name,
        dim_fixed=dim_fixed,
        dim_recurrent=dim_recurrent,
        ergodic=ergodic,
        mixing=mixing,
        irreducible=irreducible,
        dfs_free=dfs_free,
        cycle_lengths=tuple(cycles),
        cycles_unique=all_unique_cycles(cycles),
    )


def all_unique_cycles(cycles) -> bool:
    # every length-1 cycle and repeated cycle length makes the spectral
    # decomposition ambiguous; single cycles are always unique
    return len(cycles) <= 1


def _updown() -> ZooEntry:
    ch = KrausChannel(2, (_unit(2, 0, 1), _unit(2, 1, 0)), name="E_updown")
    return ZooEntry(
        "E_updown", ch,
        _expected("E_updown", 1, 2, True, False, True, True, (2,)),
    )


def _hook() -> ZooEntry:
    ch = KrausChannel(3, (_unit(3, 0, 1), _unit(3, 1, 0), _unit(3, 0, 2)), name="E_hook")
    return ZooEntry(
        "E_hook", ch,
        _expected("E_hook", 1, 2, True, False, False, True, (2,)),
    )


def _triangle() -> ZooEntry:
    ch = KrausChannel(3, (_unit(3, 0, 1), _unit(3, 1, 2), _unit(3, 2, 0)),
                      name="E_triangle")
    return ZooEntry(
        "E_triangle", ch,
        _expected("E_triangle", 1, 3, True, False, True, True, (3,)),
    )


def _square(p: float) -> ZooEntry:
    if not 0 < p < 1:
        raise ValueError("E_square requires p in (0, 1)")
    k1 = _unit(3, 2, 0)
    k2 = _unit(3, 2, 1)
    k3 = np.sqrt(p) * _unit(3, 0, 2)
    k4 = np.sqrt(1 - p) * _unit(3, 1, 2)
    ch = KrausChannel(3, (k1, k2, k3, k4), name="E_square")
    return ZooEntry(
        "E_square", ch,
        _expected("E_square", 1, 2, True, False, True, True, (2,)),
    )


def _dephase(d: int) -> ZooEntry:
    ch = KrausChannel(d, tuple(_unit(d, i, i) for i in range(d)), name="E_dephase")
    return ZooEntry(
        "E_dephase", ch,
        _expected("E_dephase", d, d, False, False, False, True, (1,) * d),
    )


def _p_rho(rho: np.ndarray) -> ZooEntry:
    """The projection channel rho -> tr(rho) rho_*.

    Kraus set: {sqrt(lambda_a) |a><b|} over eigenpairs (lambda_a, |a>) of the
    target state and all basis kets |b>.
    """
    rho = np.asarray(rho, dtype=complex)
    d = rho.shape[0]
    vals, vecs = np.linalg.eigh(rho)
    if np.min(vals) < -1e-12 or abs(np.sum(vals) - 1) > 1e-10:
        raise ValueError("P_rho requires a density matrix")
    kraus = []
    for a in range(d):
        if vals[a] <= 1e-14:
            continue
        ket_a = vecs[:, a : a + 1]
        for b in range(d):
            kraus.append(np.sqrt(vals[a]) * (ket_a @ _ket(d, b).conj().T))
    ch = KrausChannel(d, tuple(kraus), name="P_rho")
    full_rank = bool(np.min(vals) > 1e-10)
    return ZooEntry(
        "P_rho", ch,
        _expected("P_rho", 1, 1, True, True, full_rank, True, (1,)),
    )


def _omega(omega: np.ndarray) -> ZooEntry:
    """Two-qubit channel A -> tr_2(A) kron Omega (bath reset to Omega)."""
    omega = np.asarray(omega, dtype=complex)
    vals, vecs = np.linalg.eigh(omega)
    if np.min(vals) < -1e-12 or abs(np.sum(vals) - 1) > 1e-10:
        raise ValueError("E_omega requires a density matrix Omega")
    eye = np.eye(2, dtype=complex)
    kraus = []
    for m in range(2):
        if vals[m] <= 1e-14:
            continue
        ket_m = vecs[:, m : m + 1]
        for k in range(2):
            kraus.append(kron(eye, np.sqrt(vals[m]) * (ket_m @ _ket(2, k).conj().T)))
    ch = KrausChannel(4, tuple(kraus), name="E_omega")
    witness = ("Z_on_dfs", kron(Z, eye), False)
    return ZooEntry(
        "E_omega", ch,
        _expected("E_omega", 4, 4, False, False, False, False),
        witnesses=(witness,),
    )


# Fixed parameters of the block-permuting three-qubit channel: diagonal
# unitaries on the decoherence-free factor and full-rank prepared states.
DF_U0 = np.diag([1.0, np.exp(1j * np.pi / 3)]).astype(complex)
DF_U1 = np.diag([1.0, np.exp(1j * np.pi / 5)]).astype(complex)
DF_RHO0 = np.diag([0.25, 0.75]).astype(complex)
DF_RHO1 = np.diag([0.6, 0.4]).astype(complex)


def _df(u0=None, u1=None, rho0=None, rho1=None) -> ZooEntry:
    """Three-qubit channel permuting two recurrent sub-blocks while acting
    unitarily on a two-dimensional decoherence-free factor:
    |0><0| kron A -> |1><1| kron U1 tr_3(A) U1^dag kron rho1 and vice versa,
    coherences between the blocks are destroyed.
    """
    u0 = DF_U0 if u0 is None else np.asarray(u0, dtype=complex)
    u1 = DF_U1 if u1 is None else np.asarray(u1, dtype=complex)
    rho0 = DF_RHO0 if rho0 is None else np.asarray(rho0, dtype=complex)
    rho1 = DF_RHO1 if rho1 is None else np.asarray(rho1, dtype=complex)
    kraus = []
    for flip, u, rho in ((_unit(2, 1, 0), u1, rho1), (_unit(2, 0, 1), u0, rho0)):
        vals, vecs = np.linalg.eigh(rho)
        for m in range(2):
            if vals[m] <= 1e-14:
                continue
            for k in range(2):
                prep_k = np.sqrt(vals[m]) * (vecs[:, m : m + 1] @ _ket(2, k).conj().T)
                kraus.append(kron(kron(flip, u), prep_k))
    ch = KrausChannel(8, tuple(kraus), name="E_df")
    eye = np.eye(2, dtype=complex)
    # Z on the decoherence-free factor commutes with the diagonal block
    # unitaries, so its Zeno Hamiltonian survives.
    witness = ("Z_on_dfs", kron(kron(eye, Z), eye), False)
    return ZooEntry(
        "E_df", ch,
        _expected("E_df", 2, 8, False, False, False, False),
        witnesses=(witness,),
    )


_BUILDERS = {
    "E_updown": lambda params: _updown(),
    "E_hook": lambda params: _hook(),
    "E_triangle": lambda params: _triangle(),
    "E_square": lambda params: _square(float(params.get("p", 0.5))),
    "E_dephase": lambda params: _dephase(int(params.get("d", 2))),
    "P_rho": lambda params: _p_rho(
        np.asarray(params.get("rho", np.eye(2) / 2), dtype=complex)
    ),
    "E_omega": lambda params: _omega(
        np.asarray(params.get("omega", np.eye(2) / 2), dtype=complex)
    ),
    "E_df": lambda params: _df(
        params.get("u0"), params.get("u1"), params.get("rho0"), params.get("rho1")
    ),
}


def names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def builtin(name: str, **params) -> ZooEntry:
    """Look up a built-in channel by name; parameters use defaults when omitted."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown zoo channel {name!r}; available: {sorted(_BUILDERS)}")
    return builder(params)
