"""Meshes, Gauss-Legendre quadrature and trial bases.

Two families of trial spaces are provided, both satisfying Dirichlet
conditions at the domain endpoints:

* the sine spectral basis ``sqrt(2) sin(k pi x)`` on ``[0, 1]``, and
* C1-conforming Hermite finite elements of polynomial order 3, 4 or 5
  (cubic Hermite nodal functions plus interior bubbles for orders 4, 5).

A :class:`BasisTable` stores per-element tables of basis values and first
and second derivatives at quadrature points, so that assembly reduces to
weighted contractions.  Quadrature points are strictly interior to the
elements; coefficient functions with ``1/r`` singularities at an endpoint
are therefore never evaluated at the singularity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidRange, UnsupportedOrder

__all__ = [
    "Mesh",
    "QuadratureRule",
    "BasisTable",
    "gauss_legendre",
    "uniform_mesh",
    "sine_basis",
    "hermite_basis",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Quadrature rule on the reference interval ``[0, 1]``.

    Points lie in the open interval, weights are positive and sum to one.
    A ``q``-point Gauss rule integrates polynomials up to degree ``2q-1``.
    """

    points: np.ndarray
    weights: np.ndarray

    @property
    def q(self):
        return len(self.points)

    @property
    def degree(self):
        return 2 * self.q - 1


def gauss_legendre(q):
    """``q``-point Gauss-Legendre rule mapped to the reference ``[0, 1]``."""
    if q < 1:
        raise ValueError(f"need at least one quadrature point, got {q}")
    x, w = np.polynomial.legendre.leggauss(q)
    return QuadratureRule(points=(x + 1.0) / 2.0, weights=w / 2.0)


@dataclass(frozen=True)
class Mesh:
    """Partition of ``[x_lo, x_hi]`` with strictly increasing nodes."""

    nodes: np.ndarray

    def __post_init__(self):
        if len(self.nodes) < 2 or np.any(np.diff(self.nodes) <= 0):
            raise InvalidRange("mesh nodes must be strictly increasing")

    @property
    def n_elements(self):
        return len(self.nodes) - 1

    @property
    def h(self):
        """Maximum element size."""
        return float(np.max(np.diff(self.nodes)))

    @property
    def x_lo(self):
        return float(self.nodes[0])

    @property
    def x_hi(self):
        return float(self.nodes[-1])


def uniform_mesh(x_lo, x_hi, n_elements):
    """Equidistant partition of ``[x_lo, x_hi]`` into ``n_elements`` cells."""
    if not x_lo < x_hi:
        raise InvalidRange(f"empty range [{x_lo}, {x_hi}]")
    if n_elements < 1:
        raise InvalidRange(f"need at least one element, got {n_elements}")
    return Mesh(nodes=np.linspace(x_lo, x_hi, n_elements + 1))


@dataclass
class BasisTable:
    """Trial space tabulated at quadrature points, element by element.

    ``val``, ``d1`` and ``d2`` have shape ``(n_blocks, n_local, q)``;
    ``dofmap`` maps local functions to global indices, with ``-1`` marking
    functions removed by the Dirichlet conditions.  ``w`` contains global
    quadrature weights (element Jacobians included), so a form assembles
    as ``sum_bq w[b, q] * coefficient(x[b, q]) * table_i * table_j``.
    """

    dim: int
    kind: str
    order: int | None
    c1_conforming: bool
    x_lo: float
    x_hi: float
    x: np.ndarray
    w: np.ndarray
    dofmap: np.ndarray
    val: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    mesh: Mesh | None = None
    _shape_polys: list = field(default_factory=list, repr=False)

    @property
    def n_blocks(self):
        return self.x.shape[0]

    def element_shapes(self, block, t, deriv=0):
        """Local shape functions of one block at reference coordinates ``t``.

        Returns an array of shape ``(n_local, len(t))``.  Used for
        conformity checks and point evaluation; quadrature tables are the
        fast path for assembly.
        """
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if self.kind == "sine":
            x = self.x_lo + t * (self.x_hi - self.x_lo)
            k = np.arange(1, self.dim + 1)
            return _sine_table(k, x, deriv)
        h_el = self.mesh.nodes[block + 1] - self.mesh.nodes[block]
        out = np.empty((len(self._shape_polys), len(t)))
        for i, poly in enumerate(self._shape_polys):
            out[i] = poly.deriv(deriv)(t) / h_el ** deriv
        # slope shape functions carry one factor of the element length
        out[1] *= h_el
        out[3] *= h_el
        return out

    def evaluate(self, xs, coeffs, deriv=0):
        """Evaluate ``sum_j coeffs[j] * basis_j`` (or a derivative) at ``xs``."""
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        out = np.zeros(len(xs), dtype=np.asarray(coeffs).dtype)
        if self.kind == "sine":
            k = np.arange(1, self.dim + 1)
            tab = _sine_table(k, xs, deriv)
            return coeffs @ tab
        nodes = self.mesh.nodes
        block = np.clip(np.searchsorted(nodes, xs, side="right") - 1, 0, self.n_blocks - 1)
        for b in np.unique(block):
            sel = block == b
            t = (xs[sel] - nodes[b]) / (nodes[b + 1] - nodes[b])
            shapes = self.element_shapes(b, t, deriv)
            for loc, g in enumerate(self.dofmap[b]):
                if g >= 0:
                    out[sel] += coeffs[g] * shapes[loc]
        return out


def _sine_table(k, x, deriv):
    """Values of ``sqrt(2) sin(k pi x)`` or a derivative, shape (len(k), len(x))."""
    arg = np.pi * np.outer(k, x)
    amp = np.sqrt(2.0) * (np.pi * k) ** deriv
    trig = [np.sin, np.cos, lambda a: -np.sin(a), lambda a: -np.cos(a)][deriv % 4]
    return amp[:, None] * trig(arg)


def sine_basis(n, rule=None, m_sub=None):
    """Sine spectral basis ``sqrt(2) sin(k pi x)``, ``k = 1..n``, on ``[0, 1]``.

    Integrals against smooth coefficients are evaluated by composite Gauss
    quadrature on ``m_sub`` subintervals (default ``max(4n, 64)``), fine
    enough to reach integration errors near 1e-14.
    """
    if n < 1:
        raise ValueError(f"need at least one mode, got {n}")
    if rule is None:
        rule = gauss_legendre(10)
    if m_sub is None:
        m_sub = max(4 * n, 64)
    edges = np.linspace(0.0, 1.0, m_sub + 1)
    h = np.diff(edges)
    x = edges[:-1, None] + np.outer(h, rule.points)
    w = np.outer(h, rule.weights)
    k = np.arange(1, n + 1)
    xflat = x.ravel()
    tables = [
        _sine_table(k, xflat, d).reshape(n, m_sub, rule.q).transpose(1, 0, 2)
        for d in range(3)
    ]
    dofmap = np.tile(np.arange(n), (m_sub, 1))
    return BasisTable(
        dim=n, kind="sine", order=None, c1_conforming=True,
        x_lo=0.0, x_hi=1.0, x=x, w=w, dofmap=dofmap,
        val=tables[0], d1=tables[1], d2=tables[2],
    )


def _reference_shapes(r):
    """Reference shape polynomials on [0, 1] for order-r C1 elements.

    Order: value-left, slope-left, value-right, slope-right, then ``r - 3``
    bubbles vanishing to second order at both endpoints.
    """
    P = np.polynomial.Polynomial
    h0 = P([1.0, 0.0, -3.0, 2.0])
    h1 = P([0.0, 1.0, -2.0, 1.0])
    h2 = P([0.0, 0.0, 3.0, -2.0])
    h3 = P([0.0, 0.0, -1.0, 1.0])
    shapes = [h0, h1, h2, h3]
    bubble = P([0.0, 0.0, 1.0, -2.0, 1.0])  # t^2 (1-t)^2
    if r >= 4:
        shapes.append(bubble)
    if r >= 5:
        shapes.append(bubble * P([-1.0, 2.0]))  # t^2 (1-t)^2 (2t - 1)
    return shapes


def hermite_basis(mesh, r, rule=None):
    """C1-conforming Hermite elements of order ``r`` with Dirichlet ends.

    Degrees of freedom: value and slope at interior nodes, slope only at
    the two endpoints (values pinned to zero), plus ``r - 3`` bubbles per
    element, giving ``2 (n_el - 1) + 2 + (r - 3) n_el`` functions.
    """
    if r not in (3, 4, 5):
        raise UnsupportedOrder(f"element order must be 3, 4 or 5, got {r}")
    if rule is None:
        rule = gauss_legendre(2 * r + 4)
    if rule.degree < 2 * r + 2:
        raise ValueError(
            f"quadrature degree {rule.degree} too low for order {r} "
            f"(need >= {2 * r + 2})"
        )
    n_el = mesh.n_elements
    n_bub = r - 3
    dim = 2 * (n_el - 1) + 2 + n_bub * n_el
    shapes = _reference_shapes(r)
    n_local = len(shapes)

    # Global numbering: slope at node 0, then (value, slope) at each
    # interior node, slope at node n_el, then bubbles element-major.
    def value_dof(node):
        return -1 if node in (0, n_el) else 2 * node - 1

    def slope_dof(node):
        return 2 * node if node < n_el else 2 * n_el - 1

    dofmap = np.empty((n_el, n_local), dtype=np.int64)
    for l in range(n_el):
        row = [value_dof(l), slope_dof(l), value_dof(l + 1), slope_dof(l + 1)]
        row += [2 * n_el + n_bub * l + j for j in range(n_bub)]
        dofmap[l] = row

    h = np.diff(mesh.nodes)
    x = mesh.nodes[:-1, None] + np.outer(h, rule.points)
    w = np.outer(h, rule.weights)
    t = rule.points
    val = np.empty((n_el, n_local, rule.q))
    d1 = np.empty_like(val)
    d2 = np.empty_like(val)
    for i, poly in enumerate(shapes):
        v, dv, ddv = poly(t), poly.deriv(1)(t), poly.deriv(2)(t)
        scale = h if i in (1, 3) else np.ones_like(h)  # slope dofs scale with h
        val[:, i, :] = np.outer(scale, v)
        d1[:, i, :] = np.outer(scale / h, dv)
        d2[:, i, :] = np.outer(scale / h ** 2, ddv)

    return BasisTable(
        dim=dim, kind="hermite", order=r, c1_conforming=True,
        x_lo=mesh.x_lo, x_hi=mesh.x_hi, x=x, w=w, dofmap=dofmap,
        val=val, d1=d1, d2=d2, mesh=mesh, _shape_polys=shapes,
    )
