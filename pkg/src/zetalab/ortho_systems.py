"""Ladder-generated orthogonal systems on [-1, 1].

The generating automorphism composes an affine map onto a reverse-iterate
window with p applications of the ladder map phi1 and an affine return to
[-1, 1]:

    u_p(t) = phi1^p( affine_[T-hat^p, (T+2)-hat^p](t) ) - T - 1,

where the affine map sends [-1, 1] onto [T-hat^p, (T+2)-hat^p].  (Written
with a minus sign in front of the window offset the map would leave the
positive heights entirely, so the offset enters with a plus; this is the
convention under which the containment of the intermediate nodes in their
iterate windows actually holds, and both readings are noted here for the
record.)  Because phi1^p pulls the window back to [T, T+2], u_p is an
automorphism of [-1, 1] fixing the endpoints.

Generated functions are Legendre polynomials composed with a chain of three
such automorphisms, weighted by the products of |Z~| along the intermediate
windows; their Gram matrix over [-1, 1] certifies L2 orthogonality.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .ladder import phi1, reverse_iterate, z_tilde_sq


@dataclass
class GeneratedSystem:
    base_T: float
    depths: tuple
    n_max: int
    gram: np.ndarray
    automorphism_cache: dict


class _Automorphism:
    """u_p for one depth p, with the window tables cached."""

    def __init__(self, grid, T, p, c0=0.0):
        if p < 0 or p > 3:
            raise DomainError(f"depth must be 0..3, got {p}")
        self.grid = grid
        self.T = float(T)
        self.p = p
        self.c0 = c0
        if p > 0:
            self.lo_chain = reverse_iterate(grid, T, p, c0).reverse
            self.hi_chain = reverse_iterate(grid, T + 2.0, p, c0).reverse
        else:
            self.lo_chain = [float(T)]
            self.hi_chain = [float(T) + 2.0]

    def window(self, r=None):
        """[T-hat^(p-r), (T+2)-hat^(p-r)]; r=None gives the outermost."""
        idx = self.p if r is None else self.p - r
        return self.lo_chain[idx], self.hi_chain[idx]

    def v_nodes(self, t):
        """Heights v_p^r(t), r = 0..p-1: the affine image and its ladder
        pullbacks, each lying in its iterate window."""
        lo, hi = self.window()
        v = 0.5 * (hi - lo) * (t + 1.0) + lo
        nodes = []
        for _ in range(self.p):
            nodes.append(v)
            v = phi1(self.grid, v, self.c0)
        return nodes, v

    def __call__(self, t):
        if self.p == 0:
            return t
        _, v = self.v_nodes(t)
        return v - self.T - 1.0


def automorphism_u(grid, T, p, t, c0=0.0):
    """u_p(t) for t in [-1, 1]; endpoint-preserving automorphism."""
    if not (-1.0 <= t <= 1.0):
        raise DomainError(f"t must lie in [-1, 1], got {t}")
    return float(_Automorphism(grid, T, p, c0)(t))


def _legendre(n, x):
    return np.polynomial.legendre.Legendre.basis(n)(x)


class _SystemEvaluator:
    """Weighted composed-Legendre functions for fixed (T, depths)."""

    def __init__(self, grid, T, p1, p2, p3, c0=0.0):
        self.grid = grid
        self.autos = [_Automorphism(grid, T, p, c0) for p in (p1, p2, p3)]
        self.c0 = c0

    def weight_sq(self, t):
        """Squared weight: product over the chain of Z~^2 at the v-nodes
        of the argument passed to each automorphism."""
        w = 1.0
        arg = t
        for auto in reversed(self.autos):
            nodes, _ = auto.v_nodes(arg)
            for v in nodes:
                w *= z_tilde_sq(self.grid, v, self.c0)
            arg = auto(arg)
        return w

    def composed_arg(self, t):
        arg = t
        for auto in reversed(self.autos):
            arg = auto(arg)
        return arg

    def __call__(self, n, t):
        return _legendre(n, self.composed_arg(t)) * math.sqrt(self.weight_sq(t))


def generated_function(grid, T, p1, p2, p3, n, t, c0=0.0):
    """One generated system member at t in [-1, 1]."""
    if not (-1.0 <= t <= 1.0):
        raise DomainError(f"t must lie in [-1, 1], got {t}")
    return float(_SystemEvaluator(grid, T, p1, p2, p3, c0)(n, t))


def _zero_splits(grid, ev, n_probe=512):
    """Panel split points where the squared weight dips toward a Z-zero."""
    ts = np.linspace(-1.0, 1.0, n_probe + 1)
    w = np.array([ev.weight_sq(t) for t in ts])
    dips = np.nonzero((w[1:-1] < w[:-2]) & (w[1:-1] < w[2:])
                      & (w[1:-1] < 0.05 * np.median(w)))[0] + 1
    return ts[dips]


def gram_matrix(grid, T, p1, p2, p3, n_max, c0=0.0, panel_nodes=24,
                panels=64):
    """GeneratedSystem with the (n_max+1)^2 Gram matrix of inner products.

    The integrand is smooth in the squared weight, so pairs are integrated
    with composite Gauss-Legendre panels; panel edges additionally split at
    weight dips (images of Z-zeros) to protect the quadrature order.
    """
    if n_max > 8:
        raise DomainError(f"n_max capped at 8, got {n_max}")
    depths = (p1, p2, p3)
    ev = _SystemEvaluator(grid, T, p1, p2, p3, c0)
    edges = np.linspace(-1.0, 1.0, panels + 1)
    if any(depths):
        edges = np.unique(np.concatenate([edges, _zero_splits(grid, ev)]))
    gx, gw = np.polynomial.legendre.leggauss(panel_nodes)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    pts = (mid[:, None] + half[:, None] * gx[None, :]).ravel()
    wts = (half[:, None] * gw[None, :]).ravel()
    # shared factors at all quadrature points
    args = np.array([ev.composed_arg(t) for t in pts])
    wsq = np.array([ev.weight_sq(t) for t in pts])
    basis = np.array([_legendre(n, args) for n in range(n_max + 1)])
    gram = np.empty((n_max + 1, n_max + 1))
    for n in range(n_max + 1):
        for m in range(n, n_max + 1):
            val = float(np.sum(wts * wsq * basis[n] * basis[m]))
            gram[n, m] = gram[m, n] = val
    cache = {
        "quadrature_points": pts,
        "composed_args": args,
        "weight_sq": wsq,
        "windows": [a.window() for a in ev.autos],
    }
    return GeneratedSystem(base_T=float(T), depths=depths, n_max=n_max,
                           gram=gram, automorphism_cache=cache)
