# src/algebraicgalois/motives/realizations.py
"""
Realizations of an Artin motive V.

- étale: V itself with its Galois action.
- de Rham: ``W = (V ⊗ N)^G``, a Q-space of the same dimension as V, computed as
  the fixed subspace of the diagonal action on ``V ⊗_Q N``. Coordinate ``a*n + k``
  is the coefficient of ``e_a ⊗ theta^k``.
- the coaction ``W -> W ⊗ A(N/Q)`` with ``y_kj(t)`` the entries of
  ``Y(t) = Wmat^-1 rho(t) Wmat``, which makes W a comodule.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence

from ..algebra.linalg import ColumnSpaceSolver, field_inverse, kronecker, nullspace, rank
from ..algebra.number_field import NFElement
from ..core.errors import InconsistentDescent
from ..galois.embeddings import GaloisSubextension
from ..galois.subgroups import Subgroup
from ..groupscheme.coordinate_ring import CoordinateRing, build_coordinate_ring
from .motive import EtaleScheme, Motive, _check_same_ambient, motive_of, tensor

logger = logging.getLogger(__name__)

Vector = List[Fraction]


@dataclass(eq=False)
class DeRhamRealization:
    motive: Motive
    space: List[Vector]

    @property
    def dim(self) -> int:
        return len(self.space)

    @property
    def ambient(self):
        return self.motive.ambient

    def values(self, vector: Sequence[Fraction]) -> List[NFElement]:
        """The element of ``V ⊗ N`` as ``dim V`` elements of N."""
        n = self.ambient.degree
        field = self.ambient.field
        return [field.element(vector[a * n : (a + 1) * n]) for a in range(self.motive.dim)]

    @cached_property
    def matrix(self) -> List[List[NFElement]]:
        """``Wmat[a][j]``: component ``a`` of the j-th basis vector."""
        columns = [self.values(w) for w in self.space]
        return [[columns[j][a] for j in range(self.dim)] for a in range(self.motive.dim)]

    @cached_property
    def _matrix_inverse(self) -> List[List[NFElement]]:
        try:
            return field_inverse(self.matrix)
        except ZeroDivisionError:
            raise InconsistentDescent(
                "de Rham basis does not span V ⊗ N", {"dim_v": self.motive.dim, "dim_w": self.dim}
            )

    def coaction_values(self, t: int) -> List[List[NFElement]]:
        """``Y(t) = Wmat^-1 rho(t) Wmat``."""
        rho = self.motive.action[t]
        w = self.matrix
        zero = self.ambient.field.zero
        d = self.dim
        moved = [
            [sum((w[b][j] * rho[a][b] for b in range(d) if rho[a][b]), zero) for j in range(d)] for a in range(d)
        ]
        inv = self._matrix_inverse
        return [
            [sum((inv[k][a] * moved[a][j] for a in range(d) if inv[k][a] and moved[a][j]), zero) for j in range(d)]
            for k in range(d)
        ]

    @cached_property
    def ring(self) -> CoordinateRing:
        return build_coordinate_ring(GaloisSubextension.full(self.ambient))

    @cached_property
    def coaction(self) -> List[List[List[NFElement]]]:
        """``coaction[k][j]``: A(N/Q)-coordinates of ``y_kj``."""
        d = self.dim
        order = self.ambient.order
        tables = [self.coaction_values(t) for t in range(order)]
        return [[self.ring.coordinates([tables[t][k][j] for t in range(order)]) for j in range(d)] for k in range(d)]

    def rational_coaction(self, m: int) -> List[List[Fraction]]:
        """Matrix of the coaction's component on the m-th basis function of A."""
        return [[c[m].rational_value() for c in row] for row in self.coaction]

    # ------------------------------------------------------------------ comodule axioms

    def evaluation_check(self) -> bool:
        ring = self.ring
        d = self.dim
        zero = self.ambient.field.zero
        w = self.matrix
        for t in range(self.ambient.order):
            rho = self.motive.action[t]
            for j in range(d):
                y = [ring.evaluate(self.coaction[k][j], t) for k in range(d)]
                for a in range(d):
                    lhs = sum((w[a][k] * y[k] for k in range(d) if y[k]), zero)
                    rhs = sum((w[b][j] * rho[a][b] for b in range(d) if rho[a][b]), zero)
                    if lhs != rhs:
                        return False
        return True

    def counit_check(self) -> bool:
        counit = self.ring.counit
        zero = self.ambient.field.zero
        for k, row in enumerate(self.coaction):
            for j, coords in enumerate(row):
                value = sum((c * e for c, e in zip(coords, counit) if c and e), zero)
                if value != int(k == j):
                    return False
        return True

    def coassociativity_check(self) -> bool:
        d = self.dim
        r = self.ring.dim
        zero = self.ambient.field.zero
        c = self.coaction
        for l in range(d):
            for j in range(d):
                delta = self.ring.comultiply(c[l][j])
                for p in range(r):
                    for q in range(r):
                        expected = sum((c[l][k][p] * c[k][j][q] for k in range(d) if c[l][k][p] and c[k][j][q]), zero)
                        if delta[p][q] != expected:
                            return False
        return True

    def comodule_checks(self) -> Dict[str, bool]:
        return {
            "coassociative": self.coassociativity_check(),
            "counit": self.counit_check(),
            "evaluation": self.evaluation_check(),
        }

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "basis": [[c.to_json() for c in self.values(w)] for w in self.space],
        }


def de_rham(v: Motive) -> DeRhamRealization:
    amb = v.ambient
    n = amb.degree
    size = v.dim * n
    rows: List[Vector] = []
    for g in Subgroup.whole(amb).generators:
        m = kronecker(v.action[g], amb.rational_matrices[g])
        for i in range(size):
            row = list(m[i])
            row[i] -= 1
            if any(row):
                rows.append(row)
    if rows:
        space = nullspace(rows, size)
    else:
        space = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    if len(space) != v.dim:
        raise InconsistentDescent(
            "Galois descent failed: dim (V ⊗ N)^G differs from dim V", {"dim_v": v.dim, "dim_w": len(space)}
        )
    logger.debug(f"de Rham realization of {v.label or 'motive'} has dimension {len(space)}")
    return DeRhamRealization(v, space)


def _element_vector(values: Sequence[NFElement]) -> Vector:
    out: Vector = []
    for x in values:
        out.extend(x.coords)
    return out


def comodule_homs(first: DeRhamRealization, second: DeRhamRealization) -> List[List[List[Fraction]]]:
    """Basis of the comodule maps ``W1 -> W2`` as ``dim W2 × dim W1`` rational matrices."""
    _check_same_ambient(first.motive, second.motive)
    d1, d2 = first.dim, second.dim
    size = d1 * d2
    if not size:
        return []
    rows: List[Vector] = []
    for m in range(first.ring.dim):
        c1 = first.rational_coaction(m)
        c2 = second.rational_coaction(m)
        for i in range(d2):
            for j in range(d1):
                row = [Fraction(0)] * size
                for k in range(d2):
                    if c2[i][k]:
                        row[k * d1 + j] += c2[i][k]
                for k in range(d1):
                    if c1[k][j]:
                        row[i * d1 + k] -= c1[k][j]
                if any(row):
                    rows.append(row)
    basis = nullspace(rows, size) if rows else [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    return [[vec[i * d1 : (i + 1) * d1] for i in range(d2)] for vec in basis]


def tensor_compatibility(v: Motive, w: Motive) -> Dict[str, object]:
    """
    The products ``w_i ⊗ w'_j`` of de Rham basis vectors lie in the de Rham
    realization of ``V ⊗ W`` and are independent there.
    """
    dv, dw = de_rham(v), de_rham(w)
    dvw = de_rham(tensor(v, w))
    products = []
    for x in dv.space:
        xs = dv.values(x)
        for y in dw.space:
            ys = dw.values(y)
            products.append(_element_vector([a * b for a in xs for b in ys]))
    width = dvw.motive.dim * v.ambient.degree
    solver = ColumnSpaceSolver(dvw.space) if dvw.space else None
    contained = all(solver is not None and solver.try_coordinates(p) is not None for p in products) if products else True
    independent = rank(products, width) == len(products) if products else True
    return {
        "dim": dvw.dim,
        "expected": v.dim * w.dim,
        "contained": contained,
        "independent": independent,
        "ok": contained and independent and dvw.dim == v.dim * w.dim,
    }


def gamma_comparison(scheme: EtaleScheme) -> Dict[str, object]:
    """
    For ``V = h(X)`` the de Rham realization is the ring of Galois-equivariant
    functions ``S_X -> N``; evaluation at the base point of each orbit identifies
    it with ``prod N^{H_i}``. For ``X = Spec Q[x]/(f)`` the function ``r -> r``
    generates it as an algebra.
    """
    v = motive_of(scheme)
    dr = de_rham(v)
    amb = scheme.ambient
    functions = [dr.values(w) for w in dr.space]
    base = scheme.base_points
    components = scheme.components
    equivariant = all(
        f[scheme.perms[g][x]] == amb.apply(g, f[x]) for f in functions for g in range(amb.order) for x in range(scheme.size)
    )
    fixed = all(
        amb.apply(h, f[x]) == f[x] for f in functions for x, stab in zip(base, components) for h in stab.generators
    )
    evaluations = [_element_vector([f[x] for x in base]) for f in functions]
    width = len(base) * amb.degree
    expected = sum(amb.order // h.order for h in components)
    bijective = dr.dim == expected and (rank(evaluations, width) == dr.dim if evaluations else expected == 0)
    solver = ColumnSpaceSolver(dr.space) if dr.space else None
    closed = True
    for i, f in enumerate(functions):
        for g in functions[i:]:
            product = _element_vector([a * b for a, b in zip(f, g)])
            if solver is None or solver.try_coordinates(product) is None:
                closed = False
    generator: Optional[bool] = None
    if scheme.polynomial is not None and scheme.roots:
        one = amb.field.one
        powers = [_element_vector([r ** k if k else one for r in scheme.roots]) for k in range(scheme.size)]
        generator = (
            solver is not None
            and all(solver.try_coordinates(p) is not None for p in powers)
            and rank(powers, scheme.size * amb.degree) == dr.dim
        )
    result = {
        "dim": dr.dim,
        "component_degrees": [amb.order // h.order for h in components],
        "equivariant": equivariant,
        "fixed_by_stabilizers": fixed,
        "bijective": bijective,
        "multiplicative": closed,
        "polynomial_generator": generator,
    }
    result["ok"] = all(result[k] for k in ("equivariant", "fixed_by_stabilizers", "bijective", "multiplicative")) and (
        generator is not False
    )
    return result
