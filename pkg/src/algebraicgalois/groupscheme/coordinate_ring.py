# src/algebraicgalois/groupscheme/coordinate_ring.py
"""
The coordinate ring A(L/K) of the algebraic Galois group of L/K.

A(L/K) is the K-algebra of functions f from Gal(L/K) to L with
``s(f(s^-1 t s)) = f(t)`` for all s, t, multiplied pointwise. Functions are stored
by their values at the coset representatives of the relative group, as elements
of the ambient field that happen to lie in L.

The Hopf structure is the one dual to the group law on L-points:
``Delta(a)(s, t) = a(st)``, ``epsilon(a) = a(1)`` and ``S(a)(t) = a(t^-1)``. Every
coefficient is obtained by descent: solve against the invertible value matrix
``V[t][j] = f_j(t)`` and check that the solution lies in K.
"""
import logging
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple

from ..algebra.etale import EtaleAlgebra
from ..algebra.linalg import ColumnSpaceSolver, field_inverse, field_rank, field_rref, nullspace
from ..algebra.number_field import NFElement
from ..core.errors import InconsistentDescent
from ..galois.ambient import AmbientGaloisField
from ..galois.embeddings import GaloisSubextension

logger = logging.getLogger(__name__)

Function = Tuple[NFElement, ...]
KMatrix = List[List[NFElement]]


def _action_matrix(extension: GaloisSubextension, s: int) -> List[List[Fraction]]:
    """Q-matrix of ``s`` on L in the power basis of L's primitive element (columns are images)."""
    top = extension.top
    columns = [top.coordinates(extension.act(s, b)) for b in top.basis]
    n = top.degree
    return [[columns[i][k] for i in range(n)] for k in range(n)]


def equivariance_constraints(extension: GaloisSubextension) -> List[List[Fraction]]:
    """
    Rows of the Q-linear system ``s(f(s^-1 t s)) - f(t) = 0`` for ``s`` among the
    generators of the relative group. Unknown ``t*l + i`` is the i-th power-basis
    coordinate of ``f(t)``, with ``l = [L:Q]``.
    """
    ell = extension.top.degree
    size = extension.degree * ell
    rows: List[List[Fraction]] = []
    for s in extension.generators:
        r_s = _action_matrix(extension, s)
        s_inv = extension.inv(s)
        for t in range(extension.degree):
            moved = extension.mul(extension.mul(s_inv, t), s)
            for k in range(ell):
                row = [Fraction(0)] * size
                for i in range(ell):
                    if r_s[k][i]:
                        row[moved * ell + i] += r_s[k][i]
                row[t * ell + k] -= 1
                if any(row):
                    rows.append(row)
    return rows


class CoordinateRing:
    """
    A(L/K) with a K-basis ``f_1..f_r`` (r = [L:K]) in reduced echelon form: over Q in
    the power-basis coordinates of L, over a larger K in the K-coordinates of the
    values on the relative power basis of L's primitive element, ordered by group
    element first.
    """

    def __init__(self, extension: GaloisSubextension):
        self.extension = extension
        ell = extension.top.degree
        n_bar = extension.degree
        constraints = equivariance_constraints(extension)
        size = n_bar * ell
        if constraints:
            rational_basis = nullspace(constraints, size)
        else:
            rational_basis = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        self.rational_basis: List[List[Fraction]] = rational_basis
        self.basis: Tuple[Function, ...] = tuple(self._select_k_basis(rational_basis))
        logger.info(
            f"Coordinate ring of a degree-{n_bar} extension: Q-dimension {len(rational_basis)}, "
            f"K-dimension {len(self.basis)}"
        )

    # ------------------------------------------------------------------ construction

    def function_from_vector(self, vector: Sequence[Fraction]) -> Function:
        top = self.extension.top
        ell = top.degree
        field = self.ambient.field
        values = []
        for t in range(self.extension.degree):
            value = field.zero
            for i in range(ell):
                c = vector[t * ell + i]
                if c:
                    value = value + top.basis[i] * c
            values.append(value)
        return tuple(values)

    @cached_property
    def _relative_power_solver(self) -> KMatrix:
        """Inverse of ``W[s][i] = s(theta)^i``, theta the primitive element of L."""
        ext = self.extension
        conjugates = [ext.act(s, ext.top.primitive) for s in range(ext.degree)]
        return field_inverse([[c ** i for i in range(ext.degree)] for c in conjugates])

    def k_coordinate_rows(self, functions: Sequence[Sequence[NFElement]]) -> KMatrix:
        """
        Each function as the K-coordinates of its values on the relative power basis
        ``1, theta, ..., theta^(r-1)`` of L over K, group element first.
        """
        ext = self.extension
        zero = self.ambient.field.zero
        solve = self._relative_power_solver

        def coordinates(a: NFElement) -> List[NFElement]:
            images = [ext.act(s, a) for s in range(ext.degree)]
            return [sum((w * x for w, x in zip(row, images)), zero) for row in solve]

        return [[c for t in range(ext.degree) for c in coordinates(f[t])] for f in functions]

    def _select_k_basis(self, rational_basis: List[List[Fraction]]) -> List[Function]:
        functions = [self.function_from_vector(v) for v in rational_basis]
        ext = self.extension
        if ext.base.degree == 1:
            return functions
        m = ext.degree
        reduced = field_rref(self.k_coordinate_rows(functions))
        if len(reduced) != m:
            raise InconsistentDescent(
                "equivariant functions do not have K-dimension [L:K]", {"dimension": len(reduced), "degree": m}
            )
        zero = self.ambient.field.zero
        powers = [ext.top.primitive ** i for i in range(m)]
        return [
            tuple(sum((row[t * m + i] * powers[i] for i in range(m)), zero) for t in range(m))
            for row in reduced
        ]

    # ------------------------------------------------------------------ basic data

    @property
    def ambient(self) -> AmbientGaloisField:
        return self.extension.ambient

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"CoordinateRing(dim={self.dim}, base_degree={self.extension.base.degree})"

    @cached_property
    def value_matrix(self) -> KMatrix:
        """``V[t][j] = f_j(t)``."""
        return [[self.basis[j][t] for j in range(self.dim)] for t in range(self.extension.degree)]

    @cached_property
    def _value_inverse(self) -> KMatrix:
        try:
            return field_inverse(self.value_matrix)
        except ZeroDivisionError:
            raise InconsistentDescent("value matrix of the coordinate ring basis is singular")

    def in_base(self, a: NFElement) -> bool:
        return self.extension.base.contains(a)

    def coordinates(self, function: Sequence[NFElement]) -> List[NFElement]:
        """K-coordinates of a function on the relative group; it must lie in A(L/K)."""
        inv = self._value_inverse
        zero = self.ambient.field.zero
        coords = []
        for row in inv:
            c = zero
            for x, y in zip(row, function):
                if x and y:
                    c = c + x * y
            coords.append(c)
        if not all(self.in_base(c) for c in coords):
            raise InconsistentDescent("function is not an element of the coordinate ring")
        return coords

    def function(self, coords: Sequence[NFElement]) -> Function:
        """The function ``sum(c_j f_j)``."""
        field = self.ambient.field
        out = []
        for t in range(self.extension.degree):
            value = field.zero
            for j, c in enumerate(coords):
                if c:
                    value = value + c * self.basis[j][t]
            out.append(value)
        return tuple(out)

    def evaluate(self, coords: Sequence[NFElement], t: int) -> NFElement:
        return self.function(coords)[t]

    # ------------------------------------------------------------------ algebra structure

    @cached_property
    def unit(self) -> List[NFElement]:
        one = self.ambient.field.one
        return self.coordinates([one] * self.extension.degree)

    @cached_property
    def structure_constants(self) -> List[List[List[NFElement]]]:
        """``structure_constants[j][k]`` = coordinates of ``f_j * f_k``."""
        r = self.dim
        out = [[None] * r for _ in range(r)]
        for j in range(r):
            for k in range(j, r):
                product = [a * b for a, b in zip(self.basis[j], self.basis[k])]
                out[j][k] = out[k][j] = self.coordinates(product)
        return out

    def multiply(self, a: Sequence[NFElement], b: Sequence[NFElement]) -> List[NFElement]:
        fa, fb = self.function(a), self.function(b)
        return self.coordinates([x * y for x, y in zip(fa, fb)])

    # ------------------------------------------------------------------ Hopf structure

    @cached_property
    def counit(self) -> List[NFElement]:
        e = self.extension.identity
        return [f[e] for f in self.basis]

    @cached_property
    def antipode(self) -> KMatrix:
        """Column j holds the coordinates of ``t -> f_j(t^-1)``."""
        ext = self.extension
        columns = [self.coordinates([f[ext.inv(t)] for t in range(ext.degree)]) for f in self.basis]
        return [[columns[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def _comultiply_function(self, function: Sequence[NFElement]) -> KMatrix:
        ext = self.extension
        inv = self._value_inverse
        n_bar = ext.degree
        zero = self.ambient.field.zero
        # T[s][t] = a(st); D = V^-1 T V^-T
        t_matrix = [[function[ext.mul(s, t)] for t in range(n_bar)] for s in range(n_bar)]
        left = []
        for row in inv:
            out_row = []
            for t in range(n_bar):
                c = zero
                for s in range(n_bar):
                    if row[s] and t_matrix[s][t]:
                        c = c + row[s] * t_matrix[s][t]
                out_row.append(c)
            left.append(out_row)
        result = []
        for p in range(self.dim):
            out_row = []
            for q in range(self.dim):
                c = zero
                for t in range(n_bar):
                    if left[p][t] and inv[q][t]:
                        c = c + left[p][t] * inv[q][t]
                out_row.append(c)
            result.append(out_row)
        if not all(self.in_base(c) for row in result for c in row):
            raise InconsistentDescent("comultiplication does not descend to the base field")
        return result

    @cached_property
    def comultiplication(self) -> List[KMatrix]:
        """``comultiplication[m][p][q]``: coefficient of ``f_p ⊗ f_q`` in ``Delta(f_m)``."""
        return [self._comultiply_function(f) for f in self.basis]

    def comultiply(self, coords: Sequence[NFElement]) -> KMatrix:
        return self._comultiply_function(self.function(coords))

    # ------------------------------------------------------------------ Q-structure

    @cached_property
    def rational_structure(self) -> EtaleAlgebra:
        """A(L/K) as a Q-algebra on the echelon Q-basis of equivariant functions."""
        top = self.extension.top
        functions = [self.function_from_vector(v) for v in self.rational_basis]
        solver = ColumnSpaceSolver(self.rational_basis)

        def to_vector(fn: Sequence[NFElement]) -> List[Fraction]:
            vec: List[Fraction] = []
            for value in fn:
                vec.extend(top.coordinates(value))
            return solver.coordinates(vec)

        d = len(functions)
        structure = [[None] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                prod = to_vector([a * b for a, b in zip(functions[i], functions[j])])
                structure[i][j] = structure[j][i] = prod
        one = self.ambient.field.one
        unit = to_vector([one] * self.extension.degree)
        return EtaleAlgebra(structure, unit)

    def etale_factor_degrees(self) -> List[int]:
        """Degrees over K of the field factors of A(L/K)."""
        k_degree = self.extension.base.degree
        return sorted(d // k_degree for d in self.rational_structure.factor_degrees())

    # ------------------------------------------------------------------ checks

    def equivariance_check(self) -> bool:
        ext = self.extension
        for f in self.basis:
            for s in range(ext.degree):
                s_inv = ext.inv(s)
                for t in range(ext.degree):
                    if ext.act(s, f[ext.mul(ext.mul(s_inv, t), s)]) != f[t]:
                        return False
        return True

    def base_change_check(self) -> bool:
        """``A ⊗_K L -> Map(G, L)`` is an isomorphism: the value matrix has full rank."""
        return self.dim == self.extension.degree and field_rank(self.value_matrix) == self.dim

    def abelian_collapse_check(self) -> bool:
        """For an abelian relative group every value lies in K."""
        if not self.extension.is_abelian():
            return True
        return all(self.in_base(v) for f in self.basis for v in f)

    def hopf_axioms(self) -> Dict[str, bool]:
        return {
            "coassociativity": self._coassociativity(),
            "counit": self._counit_law(),
            "antipode": self._antipode_law(),
            "evaluation": self._evaluation_law(),
        }

    def _coassociativity(self) -> bool:
        r = self.dim
        delta = self.comultiplication
        zero = self.ambient.field.zero
        for d_a in delta:
            for j in range(r):
                for k in range(r):
                    for s in range(r):
                        left = zero
                        right = zero
                        for p in range(r):
                            if d_a[p][s] and delta[p][j][k]:
                                left = left + d_a[p][s] * delta[p][j][k]
                            if d_a[j][p] and delta[p][k][s]:
                                right = right + d_a[j][p] * delta[p][k][s]
                        if left != right:
                            return False
        return True

    def _counit_law(self) -> bool:
        r = self.dim
        eps = self.counit
        zero = self.ambient.field.zero
        for m, d_m in enumerate(self.comultiplication):
            for q in range(r):
                left = zero
                right = zero
                for p in range(r):
                    left = left + eps[p] * d_m[p][q]
                    right = right + d_m[q][p] * eps[p]
                expected = int(m == q)
                if left != expected or right != expected:
                    return False
        return True

    def _antipode_law(self) -> bool:
        """``m(S ⊗ id)Delta = m(id ⊗ S)Delta = eta epsilon``, checked pointwise."""
        ext = self.extension
        r = self.dim
        for m, d_m in enumerate(self.comultiplication):
            eps = self.counit[m]
            for t in range(ext.degree):
                t_inv = ext.inv(t)
                left = self.ambient.field.zero
                right = self.ambient.field.zero
                for p in range(r):
                    for q in range(r):
                        c = d_m[p][q]
                        if not c:
                            continue
                        left = left + c * self.basis[p][t_inv] * self.basis[q][t]
                        right = right + c * self.basis[p][t] * self.basis[q][t_inv]
                if left != eps or right != eps:
                    return False
        return True

    def _evaluation_law(self) -> bool:
        """``(ev_s ⊗ ev_t) Delta = ev_st`` for every pair."""
        ext = self.extension
        r = self.dim
        for m, d_m in enumerate(self.comultiplication):
            f = self.basis[m]
            for s in range(ext.degree):
                for t in range(ext.degree):
                    value = self.ambient.field.zero
                    for p in range(r):
                        for q in range(r):
                            if d_m[p][q]:
                                value = value + d_m[p][q] * self.basis[p][s] * self.basis[q][t]
                    if value != f[ext.mul(s, t)]:
                        return False
        return True

    # ------------------------------------------------------------------ export

    def _base_json(self, a: NFElement) -> List[str]:
        return [str(c) for c in self.extension.base.coordinates(a)]

    def to_json(self, include_hopf: bool = True) -> dict:
        data = {
            "dim": self.dim,
            "extension": self.extension.to_json(),
            "basis": [[v.to_json() for v in f] for f in self.basis],
            "unit": [self._base_json(c) for c in self.unit],
            "counit": [self._base_json(c) for c in self.counit],
            "etale_factor_degrees": self.etale_factor_degrees(),
        }
        if include_hopf:
            data["mult"] = [
                [j, k, m, self._base_json(c)]
                for j, row in enumerate(self.structure_constants)
                for k, coords in enumerate(row)
                for m, c in enumerate(coords)
                if c and j <= k
            ]
            data["antipode"] = [[self._base_json(c) for c in row] for row in self.antipode]
            data["delta"] = [
                [m, p, q, self._base_json(c)]
                for m, d_m in enumerate(self.comultiplication)
                for p, row in enumerate(d_m)
                for q, c in enumerate(row)
                if c
            ]
        return data


@lru_cache(maxsize=64)
def build_coordinate_ring(extension: GaloisSubextension) -> CoordinateRing:
    return CoordinateRing(extension)
