"""Adjacency, Laplacian, and signless Laplacian tensors applied implicitly.

The implicit application of the adjacency tensor to a vector collapses, for
each vertex i, to a sum over incident edges of the product of the other
k-1 entries; this edge-sum form costs O(k|E|) and is the only application
path used for verification. Dense materialization (exact rationals) exists
for small instances so the implicit path can be cross-checked entry by
entry and so diagonal similarity transforms can be evaluated exactly.
"""

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, VerificationError
from .hypergraph import Hypergraph, connected_components, degrees

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"
SIGNLESS = "signless"
OPERATORS = (ADJACENCY, LAPLACIAN, SIGNLESS)

DEFAULT_DENSE_BUDGET = 10**7


def _as_vector(h: Hypergraph, x) -> np.ndarray:
    arr = np.asarray(x, dtype=complex)
    if arr.shape != (h.n,):
        raise ValueError(f"vector has shape {arr.shape}, expected ({h.n},)")
    return arr


def apply_adjacency(h: Hypergraph, x) -> np.ndarray:
    """Edge-sum form: result_i = sum over edges e containing i of
    prod_{j in e, j != i} x_j. Prefix/suffix products keep each edge O(k)."""
    x = _as_vector(h, x)
    out = np.zeros(h.n, dtype=complex)
    k = h.k
    for e in h.edges:
        vals = [x[v - 1] for v in e]
        prefix = [1.0 + 0j] * (k + 1)
        for i in range(k):
            prefix[i + 1] = prefix[i] * vals[i]
        suffix = [1.0 + 0j] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] * vals[i]
        for i, v in enumerate(e):
            out[v - 1] += prefix[i] * suffix[i + 1]
    return out


def apply_laplacian(h: Hypergraph, x) -> np.ndarray:
    """(D - A) x^{k-1}: entry i is d_i x_i^{k-1} minus the adjacency term."""
    x = _as_vector(h, x)
    d = np.array(degrees(h), dtype=float)
    return d * x ** (h.k - 1) - apply_adjacency(h, x)


def apply_signless(h: Hypergraph, x) -> np.ndarray:
    """(D + A) x^{k-1}: entry i is d_i x_i^{k-1} plus the adjacency term."""
    x = _as_vector(h, x)
    d = np.array(degrees(h), dtype=float)
    return d * x ** (h.k - 1) + apply_adjacency(h, x)


def apply_operator(h: Hypergraph, operator: str, x) -> np.ndarray:
    if operator == ADJACENCY:
        return apply_adjacency(h, x)
    if operator == LAPLACIAN:
        return apply_laplacian(h, x)
    if operator == SIGNLESS:
        return apply_signless(h, x)
    raise ValueError(f"unknown operator {operator!r}")


def eig_residual(h: Hypergraph, operator: str, lam: complex, x) -> float:
    """Max-norm defect of the eigenvalue equation after canonical scaling.

    The vector is rescaled to unit maximum modulus first, so the result is
    scale-invariant. Returns max_i |lam * y_i^{k-1} - (T y^{k-1})_i|.
    """
    x = _as_vector(h, x)
    scale = np.max(np.abs(x))
    if scale == 0:
        raise ValueError("residual undefined for the zero vector")
    y = x / scale
    lhs = complex(lam) * y ** (h.k - 1)
    return float(np.max(np.abs(lhs - apply_operator(h, operator, y))))


@dataclass(frozen=True, eq=False)
class Eigenpair:
    """An (eigenvalue, eigenvector) pair for one of the three operators."""

    operator: str
    value: complex
    vector: np.ndarray
    residual: float

    def to_json_dict(self) -> dict:
        return {
            "operator": self.operator,
            "lambda": [self.value.real, self.value.imag],
            "vector": [[z.real, z.imag] for z in self.vector],
            "residual": self.residual,
        }


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Explicit order-k tensor with exact rational entries.

    ``entries`` maps 1-based multi-indices to nonzero Fractions; absent
    indices are zero. Adjacency entries are 1/(k-1)! on every permutation
    of every edge, and degree entries d_i sit at the repeated indices.
    """

    order: int
    dim: int
    entries: dict[tuple[int, ...], Fraction]

    def apply(self, x) -> np.ndarray:
        """Dense contraction against a complex vector (first index free)."""
        arr = np.asarray(x, dtype=complex)
        if arr.shape != (self.dim,):
            raise ValueError(f"vector has shape {arr.shape}, expected ({self.dim},)")
        out = np.zeros(self.dim, dtype=complex)
        for idx, val in self.entries.items():
            term = float(val)
            for j in idx[1:]:
                term = term * arr[j - 1]
            out[idx[0] - 1] += term
        return out

    def same_entries(self, other: "DenseTensor") -> bool:
        """Exact entrywise equality (rational arithmetic, no tolerance)."""
        if (self.order, self.dim) != (other.order, other.dim):
            return False
        a = {k: v for k, v in self.entries.items() if v}
        b = {k: v for k, v in other.entries.items() if v}
        return a == b


def materialize_dense(
    h: Hypergraph, operator: str, budget: int = DEFAULT_DENSE_BUDGET
) -> DenseTensor:
    """Explicit entry table of the chosen operator for small instances."""
    if operator not in OPERATORS:
        raise ValueError(f"unknown operator {operator!r}")
    if h.n**h.k > budget:
        raise BudgetExceededError(
            f"dense tensor needs {h.n}^{h.k} = {h.n**h.k} entries, budget is {budget}"
        )
    entries: dict[tuple[int, ...], Fraction] = {}
    adj = Fraction(1, math.factorial(h.k - 1))
    sign = -1 if operator == LAPLACIAN else 1
    for e in h.edges:
        for perm in permutations(e):
            entries[perm] = entries.get(perm, Fraction(0)) + sign * adj
    if operator != ADJACENCY:
        for v, d in enumerate(degrees(h), start=1):
            if d:
                entries[(v,) * h.k] = Fraction(d)
    return DenseTensor(h.k, h.n, entries)


def diag_similarity(t: DenseTensor, signs: Sequence[int]) -> DenseTensor:
    """Similarity transform by a +-1 diagonal matrix, exactly.

    Entry (i1, ..., ik) becomes p_{i1}^{-k+1} * t_{i1...ik} * p_{i2} ... p_{ik};
    for +-1 diagonals p^{-k+1} equals p^{k-1}. An involution, since p^2 = 1.
    """
    p = tuple(int(s) for s in signs)
    if len(p) != t.dim:
        raise ValueError(f"sign vector has length {len(p)}, expected {t.dim}")
    if any(s not in (-1, 1) for s in p):
        raise ValueError("sign entries must be +1 or -1")
    out: dict[tuple[int, ...], Fraction] = {}
    for idx, val in t.entries.items():
        factor = p[idx[0] - 1] ** (t.order - 1)
        for j in idx[1:]:
            factor *= p[j - 1]
        out[idx] = val * factor
    return DenseTensor(t.order, t.dim, out)


def hm_spectral_reflection(
    h: Hypergraph,
    bipartition: tuple[Sequence[int], Sequence[int]],
    pair: Eigenpair,
    r: int,
    verify_tolerance: float = 1e-8,
) -> Eigenpair:
    """Rotate an adjacency eigenpair of a head-mass bipartite hypergraph.

    Multiplying the head entries by the r-th power of the primitive k-th
    root of unity turns (lam, x) into an eigenpair for lam times that root,
    because every edge contains exactly one head. The result is re-verified;
    its residual may not exceed the input residual by more than 1e-10.
    """
    v1, v2 = (set(bipartition[0]), set(bipartition[1]))
    if v1 & v2 or (v1 | v2) != set(range(1, h.n + 1)):
        raise ValueError("bipartition does not partition the vertex set")
    if any(len(v1.intersection(e)) != 1 for e in h.edges):
        raise ValueError("not an hm-bipartition: some edge lacks a unique head")
    if pair.operator != ADJACENCY:
        raise ValueError("reflection requires an adjacency eigenpair")
    resid_in = eig_residual(h, ADJACENCY, pair.value, pair.vector)
    if resid_in > verify_tolerance:
        raise ValueError(f"input pair unverified: residual {resid_in:.3e}")

    root = cmath.exp(2j * cmath.pi * (r % h.k) / h.k)
    y = np.array(pair.vector, dtype=complex)
    for v in v1:
        y[v - 1] *= root
    value = root * pair.value
    resid_out = eig_residual(h, ADJACENCY, value, y)
    if resid_out > resid_in + 1e-10:
        raise VerificationError(
            f"reflected pair residual {resid_out:.3e} exceeds input {resid_in:.3e} + 1e-10"
        )
    return Eigenpair(ADJACENCY, value, y, resid_out)


def nqz_spectral_radius(
    h: Hypergraph,
    max_iterations: int = 10**4,
    tolerance: float = 1e-12,
    residual_tolerance: float = 1e-8,
) -> Eigenpair:
    """Power iteration for the adjacency spectral radius of a connected
    hypergraph with at least one edge.

    Iterates the shifted map x -> ((A + I) x^{k-1})^{[1/(k-1)]} under
    max-norm scaling; the min/max of the per-entry ratios pinch the shifted
    eigenvalue, and iteration stops when they agree to ``tolerance`` or the
    cap is hit. Non-convergence is reported as a warning, not an error.
    """
    if h.edge_count == 0:
        raise ValueError("spectral radius iteration needs at least one edge")
    if len(connected_components(h)) != 1:
        raise ValueError("spectral radius iteration needs a connected hypergraph")
    k = h.k
    x = np.ones(h.n, dtype=float)
    lam = math.inf
    converged = False
    for _ in range(max_iterations):
        y = apply_adjacency(h, x).real + x ** (k - 1)
        ratios = y / x ** (k - 1)
        lo, hi = float(np.min(ratios)), float(np.max(ratios))
        lam = (lo + hi) / 2
        if hi - lo <= tolerance:
            converged = True
            break
        x = y ** (1.0 / (k - 1))
        x = x / np.max(x)
    if not converged:
        warnings.warn(
            f"power iteration did not converge within {max_iterations} iterations "
            f"(eigenvalue bracket width {hi - lo:.3e})",
            RuntimeWarning,
        )
    value = complex(lam - 1.0)
    resid = eig_residual(h, ADJACENCY, value, x)
    if converged and resid > residual_tolerance:
        warnings.warn(
            f"converged eigenpair residual {resid:.3e} above {residual_tolerance:.1e}",
            RuntimeWarning,
        )
    return Eigenpair(ADJACENCY, value, x.astype(complex), resid)
