"""Data model for undirected weighted multiplex networks.

A multiplex is a collection of L undirected graphs (the layers) sharing one
set of n nodes, with every node implicitly identified with its copies on the
other layers. Layers are stored as sparse symmetric non-negative matrices;
the structural constructions every centrality routine consumes (aggregate
matrix, supra-adjacency matrix, influence-weighted block matrix) are built
from them here.

External interfaces (edge tuples, permutations) use 1-based node and layer
indices, matching the common edge-list file convention. Everything stored on
a :class:`MultiplexNetwork` is 0-based.

Networks are immutable after construction: build one, then share it freely
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .errors import DimensionError, ValidationError


def _as_layer_matrix(mat, n: int, which: int) -> sp.csr_array:
    """Coerce one layer to CSR and enforce the stored-layer invariants."""
    A = sp.csr_array(mat)
    if A.shape != (n, n):
        raise DimensionError(f"layer {which}: expected shape ({n}, {n}), got {A.shape}")
    if A.nnz and not np.all(np.isfinite(A.data)):
        raise ValidationError(f"layer {which}: non-finite weight")
    if A.nnz and np.any(A.data < 0):
        raise ValidationError(f"layer {which}: negative weight")
    if (A != A.T).nnz != 0:
        raise ValidationError(f"layer {which}: matrix is not exactly symmetric")
    A.eliminate_zeros()
    A.sort_indices()
    return A


@dataclass
class MultiplexNetwork:
    """An undirected weighted multiplex on n shared nodes and L layers.

    ``layers[l]`` is the n-by-n sparse symmetric adjacency matrix of layer
    l (0-based). Weights are finite and strictly positive; structural zeros
    are never stored. Optional label lists must have lengths n and L.
    """

    n: int
    L: int
    layers: list
    node_labels: list | None = None
    layer_labels: list | None = None

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValidationError(f"node count must be a positive integer, got {self.n!r}")
        if not isinstance(self.L, (int, np.integer)) or self.L < 1:
            raise ValidationError(f"layer count must be a positive integer, got {self.L!r}")
        if len(self.layers) != self.L:
            raise DimensionError(f"expected {self.L} layers, got {len(self.layers)}")
        self.layers = [_as_layer_matrix(A, self.n, l + 1) for l, A in enumerate(self.layers)]
        if self.node_labels is not None and len(self.node_labels) != self.n:
            raise DimensionError("node_labels length does not match node count")
        if self.layer_labels is not None and len(self.layer_labels) != self.L:
            raise DimensionError("layer_labels length does not match layer count")

    @cached_property
    def layers_stacked(self) -> sp.csr_array:
        """All layers stacked vertically into one (L*n)-by-n CSR matrix.

        One multiplication ``layers_stacked @ x`` yields every per-layer
        product A_l x at once, which is what the iterative solvers need.
        """
        return sp.vstack(self.layers, format="csr")

    @cached_property
    def node_strengths(self) -> np.ndarray:
        """Total incident weight of each node summed over all layers."""
        out = np.zeros(self.n)
        for A in self.layers:
            out += A.sum(axis=1)
        return out

    @cached_property
    def layer_strengths(self) -> np.ndarray:
        """Total weight of each layer (sum over both endpoints, so edges count twice)."""
        return np.array([A.sum() for A in self.layers])

    @property
    def total_weight(self) -> float:
        return float(self.layer_strengths.sum())

    def edge_count(self) -> int:
        """Number of stored undirected edges (self-loops count once)."""
        total = 0
        for A in self.layers:
            off = A.nnz - np.count_nonzero(A.diagonal())
            total += off // 2 + np.count_nonzero(A.diagonal())
        return total

    def __repr__(self):
        return (f"MultiplexNetwork(n={self.n}, L={self.L}, "
                f"edges={self.edge_count()})")


@dataclass
class InfluenceMatrix:
    """Square non-negative matrix of layer-on-layer influence weights."""

    W: np.ndarray

    def __post_init__(self):
        self.W = np.asarray(self.W, dtype=float)
        if self.W.ndim != 2 or self.W.shape[0] != self.W.shape[1]:
            raise DimensionError(f"influence matrix must be square, got shape {self.W.shape}")
        if not np.all(np.isfinite(self.W)):
            raise ValidationError("influence matrix has non-finite entries")
        if np.any(self.W < 0):
            raise ValidationError("influence matrix has negative entries")

    @property
    def L(self) -> int:
        return self.W.shape[0]

    @classmethod
    def identity(cls, L: int) -> "InfluenceMatrix":
        return cls(np.eye(L))

    @classmethod
    def uniform(cls, L: int) -> "InfluenceMatrix":
        return cls(np.ones((L, L)))


@dataclass
class ConnectivityDiagnostics:
    """Structural facts that decide which centralities are well defined.

    A layer is connected only if its graph on the full shared node set is
    connected, so a layer that misses even one node (isolated there) is
    reported disconnected. For symmetric layers connectedness and strong
    connectedness coincide.
    """

    layer_connected: tuple
    aggregate_connected: bool
    isolated_nodes: tuple
    empty_layers: tuple


def build_network(n: int, L: int, edges: Iterable, node_labels=None,
                  layer_labels=None) -> MultiplexNetwork:
    """Assemble a multiplex from 1-based undirected edge tuples.

    ``edges`` yields ``(layer, i, j, weight)`` with ``1 <= layer <= L`` and
    ``1 <= i, j <= n``. Each tuple inserts both (i, j) and (j, i); repeated
    tuples for the same layer and pair accumulate by summation. Self-loops
    are kept.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValidationError(f"node count must be a positive integer, got {n!r}")
    if not isinstance(L, (int, np.integer)) or L < 1:
        raise ValidationError(f"layer count must be a positive integer, got {L!r}")
    rows = [[] for _ in range(L)]
    cols = [[] for _ in range(L)]
    vals = [[] for _ in range(L)]
    for entry in edges:
        try:
            layer, i, j, w = entry
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"edge {entry!r}: expected (layer, i, j, weight)") from exc
        if not 1 <= layer <= L:
            raise ValidationError(f"edge {entry!r}: layer index out of range 1..{L}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"edge {entry!r}: node index out of range 1..{n}")
        w = float(w)
        if not np.isfinite(w):
            raise ValidationError(f"edge {entry!r}: non-finite weight")
        if w <= 0:
            raise ValidationError(f"edge {entry!r}: weight must be positive")
        l0, i0, j0 = layer - 1, i - 1, j - 1
        rows[l0].append(i0)
        cols[l0].append(j0)
        vals[l0].append(w)
        if i0 != j0:
            rows[l0].append(j0)
            cols[l0].append(i0)
            vals[l0].append(w)
    layers = []
    for l0 in range(L):
        A = sp.coo_array((vals[l0], (rows[l0], cols[l0])), shape=(n, n))
        layers.append(A.tocsr())  # duplicate coordinates are summed here
    return MultiplexNetwork(n=n, L=L, layers=layers,
                            node_labels=node_labels, layer_labels=layer_labels)


def _check_omega(omega, L: int) -> np.ndarray:
    w = np.asarray(omega, dtype=float)
    if w.shape != (L,):
        raise DimensionError(f"layer weight vector must have length {L}, got shape {w.shape}")
    if not np.all(np.isfinite(w)):
        raise ValidationError("layer weights must be finite")
    if np.any(w <= 0):
        raise ValidationError("layer weights must be strictly positive")
    return w


def aggregate_matrix(net: MultiplexNetwork, omega) -> sp.csr_array:
    """Weighted sum of the layer matrices, sum_l omega_l A_l."""
    w = _check_omega(omega, net.L)
    out = sp.csr_array((net.n, net.n))
    for wl, A in zip(w, net.layers):
        out = out + wl * A
    return sp.csr_array(out)


def aggregate_degree(net: MultiplexNetwork) -> np.ndarray:
    """Row sums of the unit-weight aggregate: total incident weight per node."""
    return net.node_strengths.copy()


def supra_adjacency(net: MultiplexNetwork) -> sp.csr_array:
    """Block matrix with the layers on the diagonal and identity couplings elsewhere.

    Row/column index (l, i) maps to position l*n + i. Every pair of distinct
    layers is coupled by I_n, encoding the identification of node copies.
    For L = 1 this is just the single layer matrix.
    """
    diag = sp.block_diag(net.layers, format="csr")
    if net.L == 1:
        return sp.csr_array(diag)
    coupling = sp.kron(np.ones((net.L, net.L)) - np.eye(net.L),
                       sp.eye_array(net.n), format="csr")
    return sp.csr_array(diag + coupling)


def khatri_rao_influence(net: MultiplexNetwork, W: InfluenceMatrix) -> sp.csr_array:
    """Columnwise Khatri-Rao product of the influence matrix with the layer row.

    Block (l, k) of the result is ``W[l, k] * A_k``. With W = I this is the
    block diagonal of the layers (reducible no matter how dense the layers
    are); with W = all-ones every block row repeats (A_1, ..., A_L).
    """
    if W.L != net.L:
        raise DimensionError(f"influence matrix side {W.L} does not match layer count {net.L}")
    blocks = [[(W.W[l, k] * net.layers[k]) if W.W[l, k] != 0 else None
               for k in range(net.L)]
              for l in range(net.L)]
    if all(b is None for row in blocks for b in row):
        size = net.n * net.L
        return sp.csr_array((size, size))
    return sp.csr_array(sp.block_array(blocks, format="csr"))


def connectivity(net: MultiplexNetwork) -> ConnectivityDiagnostics:
    """Connectedness of each layer and of the aggregate, plus degenerate index sets."""
    layer_conn = []
    for A in net.layers:
        ncomp, _ = connected_components(A, directed=False)
        layer_conn.append(bool(ncomp == 1))
    agg = aggregate_matrix(net, np.ones(net.L))
    ncomp_agg, _ = connected_components(agg, directed=False)
    isolated = tuple(int(i) for i in np.flatnonzero(net.node_strengths == 0))
    empty = tuple(l for l, A in enumerate(net.layers) if A.nnz == 0)
    return ConnectivityDiagnostics(
        layer_connected=tuple(layer_conn),
        aggregate_connected=bool(ncomp_agg == 1),
        isolated_nodes=isolated,
        empty_layers=empty,
    )


def _check_permutation(perm: Sequence[int], size: int, what: str) -> np.ndarray:
    p = np.asarray(perm, dtype=int)
    if p.shape != (size,) or sorted(p.tolist()) != list(range(1, size + 1)):
        raise ValidationError(f"{what} is not a permutation of 1..{size}")
    return p - 1


def permute(net: MultiplexNetwork, sigma: Sequence[int],
            pi: Sequence[int]) -> MultiplexNetwork:
    """Relabel nodes by sigma and layers by pi (1-based one-line notation).

    Entry (i, j, l) of the result equals entry (sigma(i), sigma(j), pi(l))
    of the input, so scores of the relabelled network are the relabelled
    scores of the original.
    """
    s = _check_permutation(sigma, net.n, "node permutation")
    p = _check_permutation(pi, net.L, "layer permutation")
    P = sp.csr_array((np.ones(net.n), (np.arange(net.n), s)), shape=(net.n, net.n))
    new_layers = [sp.csr_array(P @ net.layers[p[l]] @ P.T) for l in range(net.L)]
    node_labels = ([net.node_labels[i] for i in s]
                   if net.node_labels is not None else None)
    layer_labels = ([net.layer_labels[l] for l in p]
                    if net.layer_labels is not None else None)
    return MultiplexNetwork(n=net.n, L=net.L, layers=new_layers,
                            node_labels=node_labels, layer_labels=layer_labels)
