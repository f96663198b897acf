"""Exact propagation in a truncated six-mode Fock space.

Basis states |n_p, n_a1, n_a2, n_b, n_c, n_d> are indexed lexicographically
(probe most significant, anti-Stokes least), i.e. C order over the shape
``tuple(cutoff + 1)``.  The state obeys d|psi>/dz = +i G |psi>, which is the
sign for which <a_p> follows d<a_p>/dz = i(omega_p <a_p> + Gamma <a1 a2>).

Transitions leaving the truncated space are dropped, so G stays exactly
symmetric (couplings are real) and every number combination that commutes
with G before truncation still does after it.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field, replace

import numpy as np
import scipy.sparse as sp
from scipy.stats import poisson

from .core import MODES, CoherentAmplitudes, CouplerConfig, Couplings, Frequencies
from .errors import BudgetExceeded, ExcessiveTruncation, LeakageExceeded
from .krylov import expi_action
from .zeno import Method, ZenoResult, default_tol_class

DEFAULT_MAX_DIMENSION = 200_000


@dataclass(frozen=True)
class FockConfig:
    """Truncation and propagator settings.

    cutoffs : maximum occupation per mode, order (p, a1, a2, b, c, d)
    rtol : propagator error bound relative to the state norm
    leakage_tol : largest admissible probability on any mode's top Fock layer,
        and largest admissible coherent-state truncation deficit
    """

    cutoffs: tuple = (4, 4, 4, 4, 4, 4)
    rtol: float = 1e-10
    leakage_tol: float = 1e-4
    max_dimension: int = DEFAULT_MAX_DIMENSION

    def __post_init__(self):
        cut = tuple(int(c) for c in self.cutoffs)
        if len(cut) != 6 or any(c < 1 for c in cut):
            raise ValueError("cutoffs must be six positive integers")
        object.__setattr__(self, "cutoffs", cut)

    @property
    def shape(self):
        return tuple(c + 1 for c in self.cutoffs)

    @property
    def dimension(self) -> int:
        return int(np.prod(self.shape))


@dataclass(frozen=True)
class TruncatedState:
    amplitudes: np.ndarray
    cutoffs: tuple
    norm_deficit: float = 0.0

    @property
    def shape(self):
        return tuple(c + 1 for c in self.cutoffs)

    def tensor(self):
        return self.amplitudes.reshape(self.shape)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class GeneratorMatrix:
    matrix: sp.csr_matrix
    freqs: Frequencies
    couplings: Couplings
    cutoffs: tuple
    meta: dict = field(default_factory=dict)

    def hermiticity_error(self) -> float:
        d = self.matrix - self.matrix.T.conj()
        return float(abs(d).max()) if d.nnz else 0.0


def _mode_index(mode) -> int:
    if isinstance(mode, str):
        return MODES.index(mode)
    return int(mode)


def _check_budget(cutoffs, max_dimension):
    dim = int(np.prod([c + 1 for c in cutoffs]))
    if dim > max_dimension:
        raise BudgetExceeded(f"basis dimension {dim} exceeds budget {max_dimension}")
    return dim


def basis_occupations(cutoffs) -> np.ndarray:
    """(6, dim) integer array of occupations in basis order."""
    shape = tuple(c + 1 for c in cutoffs)
    return np.indices(shape).reshape(6, -1)


def _hop(n, shape, lower, raise_, coupling):
    """Matrix elements of ``coupling * prod(a_lower) prod(a_raise^dagger)``.

    Returns (rows, cols, values) for <n'|op|n>, with boundary-crossing
    transitions dropped.
    """
    cut = np.array(shape)[:, None] - 1
    ok = np.ones(n.shape[1], dtype=bool)
    amp = np.full(n.shape[1], float(coupling))
    target = n.copy()
    for m in lower:
        ok &= n[m] >= 1
        amp *= np.sqrt(n[m])
        target[m] -= 1
    for m in raise_:
        ok &= n[m] < cut[m, 0]
        amp *= np.sqrt(n[m] + 1.0)
        target[m] += 1
    cols = np.flatnonzero(ok)
    rows = np.ravel_multi_index(tuple(target[:, cols]), shape)
    return rows, cols, amp[cols]


def build_generator(freqs: Frequencies, couplings: Couplings, cutoffs,
                    max_dimension=DEFAULT_MAX_DIMENSION) -> GeneratorMatrix:
    """Sparse momentum operator on the truncated basis."""
    cutoffs = tuple(int(c) for c in cutoffs)
    dim = _check_budget(cutoffs, max_dimension)
    shape = tuple(c + 1 for c in cutoffs)
    n = basis_occupations(cutoffs)
    diag = np.asarray(freqs.as_tuple(), dtype=float) @ n
    p, a1, a2, b, c, d = range(6)
    terms = [
        ((a1, a2), (b, c), couplings.g),
        ((a1, a2, c), (d,), couplings.chi),
        ((p,), (a1, a2), couplings.Gamma),
    ]
    rows, cols, vals = [], [], []
    for lower, raise_, k in terms:
        if k == 0:
            continue
        r, cidx, v = _hop(n, shape, lower, raise_, k)
        rows.append(r)
        cols.append(cidx)
        vals.append(v)
    if rows:
        off = sp.csr_matrix(
            (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(dim, dim)
        )
    else:
        off = sp.csr_matrix((dim, dim))
    G = (sp.diags(diag, format="csr") + off + off.T).tocsr()
    G.sum_duplicates()
    G.sort_indices()
    return GeneratorMatrix(G, freqs, couplings, cutoffs, {"dimension": dim})


def _coherent_vector(lam, cutoff):
    n = np.arange(cutoff + 1)
    lam = complex(lam)
    if lam == 0:
        v = np.zeros(cutoff + 1, dtype=complex)
        v[0] = 1.0
        return v
    logmag = n * np.log(abs(lam)) - 0.5 * np.cumsum(np.log(np.maximum(n, 1)))
    return np.exp(-0.5 * abs(lam) ** 2 + logmag) * np.exp(1j * n * np.angle(lam))


def coherent_state_truncated(amps: CoherentAmplitudes, cutoffs, leakage_tol=1e-4) -> TruncatedState:
    """Product of per-mode truncated coherent vectors, renormalised.

    ``norm_deficit`` is 1 - <psi|psi> before renormalisation, i.e. one minus
    the product of the per-mode Poisson probabilities of staying at or below
    the cutoff.
    """
    cutoffs = tuple(int(c) for c in cutoffs)
    lams = amps.as_tuple()
    tails = [float(poisson.sf(c, abs(l) ** 2)) if l != 0 else 0.0 for l, c in zip(lams, cutoffs)]
    with np.errstate(divide="ignore"):
        deficit = float(-np.expm1(np.sum(np.log1p(-np.asarray(tails)))))
    if deficit > leakage_tol:
        worst = int(np.argmax(tails))
        raise ExcessiveTruncation(
            f"truncation deficit {deficit:.3g} > {leakage_tol:g}; mode {MODES[worst]} "
            f"|amp|^2={abs(lams[worst]) ** 2:.3g} needs a cutoff above {cutoffs[worst]}"
        )
    psi = np.ones(1, dtype=complex)
    for lam, c in zip(lams, cutoffs):
        psi = np.kron(psi, _coherent_vector(lam, c))
    psi /= np.linalg.norm(psi)
    return TruncatedState(psi, cutoffs, deficit)


def boundary_probability(state: TruncatedState) -> np.ndarray:
    """Probability of the top Fock layer n_m = cutoff_m, per mode."""
    prob = np.abs(state.tensor()) ** 2
    out = np.empty(6)
    for m in range(6):
        out[m] = np.take(prob, -1, axis=m).sum()
    return out


def evolve(state: TruncatedState, G: GeneratorMatrix, z, fock: FockConfig | None = None,
           check_leakage=True) -> TruncatedState:
    """Propagate by length ``z`` under d|psi>/dz = i G |psi>.

    With ``check_leakage`` the top-layer probability is checked at the start
    and after every propagator substep.
    """
    if z < 0:
        raise ValueError("z must be non-negative")
    if tuple(state.cutoffs) != tuple(G.cutoffs):
        raise ValueError("state and generator use different cutoffs")
    fock = FockConfig(G.cutoffs) if fock is None else fock

    def monitor(psi, at):
        layer = boundary_probability(replace(state, amplitudes=psi))
        if layer.max() > fock.leakage_tol:
            m = int(np.argmax(layer))
            raise LeakageExceeded(
                f"probability {layer[m]:.3g} on the cutoff layer of mode {MODES[m]} "
                f"exceeds {fock.leakage_tol:g} at z={at:g}"
            )

    if check_leakage:
        monitor(state.amplitudes, 0.0)
    psi, _, _ = expi_action(G.matrix, state.amplitudes, float(z), rtol=fock.rtol,
                            callback=monitor if check_leakage else None)
    return replace(state, amplitudes=psi)


def expectation_number(state: TruncatedState, mode) -> float:
    m = _mode_index(mode)
    n = basis_occupations(state.cutoffs)[m]
    return float(np.sum(np.abs(state.amplitudes) ** 2 * n))


def _lower(tensor, m):
    """Apply the annihilation operator of mode ``m`` to a state tensor."""
    out = np.zeros_like(tensor)
    k = tensor.shape[m]
    src = [slice(None)] * tensor.ndim
    dst = [slice(None)] * tensor.ndim
    src[m] = slice(1, k)
    dst[m] = slice(0, k - 1)
    w = np.sqrt(np.arange(1, k, dtype=float)).reshape([-1 if i == m else 1 for i in range(tensor.ndim)])
    out[tuple(dst)] = tensor[tuple(src)] * w
    return out


def expectation_lowering(state: TruncatedState, modes) -> complex:
    """<prod_m a_m> for the listed modes (e.g. ``('a1', 'a2')``)."""
    t = state.tensor()
    x = t
    for mode in modes:
        x = _lower(x, _mode_index(mode))
    return complex(np.vdot(t, x))


def expectation_generator(state: TruncatedState, G: GeneratorMatrix) -> float:
    return float(np.real(np.vdot(state.amplitudes, G.matrix @ state.amplitudes)))


def _default_fock(fock):
    return FockConfig() if fock is None else fock


def oracle_numbers(config: CouplerConfig, z, fock: FockConfig | None = None) -> dict:
    """Exact mean occupation of all six modes at length ``z``."""
    fock = _default_fock(fock)
    state = _propagated(config, z, fock)
    return {m: expectation_number(state, m) for m in MODES}


def _propagated(config, z, fock):
    _check_budget(fock.cutoffs, fock.max_dimension)
    G = build_generator(config.freqs, config.couplings, fock.cutoffs, fock.max_dimension)
    psi0 = coherent_state_truncated(config.amps, fock.cutoffs, fock.leakage_tol)
    return evolve(psi0, G, z, fock)


def oracle_zeno(config: CouplerConfig, z, fock: FockConfig | None = None, tol_class=None) -> ZenoResult:
    """Zeno parameters from two exact evolutions, with Gamma as given and with Gamma = 0."""
    fock = _default_fock(fock)
    on = _propagated(config, z, fock)
    off = _propagated(config.with_couplings(Gamma=0.0), z, fock)
    diff = {m: expectation_number(on, m) - expectation_number(off, m) for m in ("b", "c", "d")}
    if tol_class is None:
        tol_class = float(default_tol_class(config, z))
    return ZenoResult(diff["b"], diff["c"], diff["d"], Method.ORACLE, tol_class, config.flags())


_HEADER = struct.Struct("<6IQ")


def dump_state(path, state: TruncatedState) -> None:
    """Binary dump: 6 x uint32 cutoffs, uint64 dimension (little endian), then re/im float64 pairs."""
    psi = np.ascontiguousarray(state.amplitudes, dtype="<c16")
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(*state.cutoffs, psi.size))
        fh.write(psi.view("<f8").tobytes())


def load_state(path) -> TruncatedState:
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        *cutoffs, dim = _HEADER.unpack(header)
        data = np.frombuffer(fh.read(), dtype="<f8")
    if data.size != 2 * dim or dim != int(np.prod([c + 1 for c in cutoffs])):
        raise ValueError("corrupt state dump: size does not match header")
    psi = (data[0::2] + 1j * data[1::2]).astype(complex)
    return TruncatedState(psi, tuple(cutoffs), 0.0)
