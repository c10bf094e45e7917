# src/algebraicgalois/motives/motive.py
"""
Artin motives with rational coefficients at a finite level: representations of
the ambient Galois group on Q-vector spaces, and the permutation motives of
finite étale schemes.

A sheaf of Q-vector spaces on the small étale site is recorded through its value
on N (the representation); its value on a subfield N^H is the H-fixed subspace.
Matrices act on column vectors and ``action[g]`` is indexed like the ambient's
automorphisms.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.etale import EtaleAlgebra
from ..algebra.linalg import ColumnSpaceSolver, identity, kronecker, matmul, nullspace, rank, rref, transpose
from ..algebra.number_field import NFElement
from ..algebra.parsing import format_polynomial
from ..algebra.polynomial import Polynomial
from ..algebra.factorization import factor_over_q
from ..core.errors import AmbientMismatch, VerificationFailed
from ..galois.ambient import AmbientGaloisField
from ..galois.subgroups import Subgroup, all_subgroups, conjugacy_classes

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]
Vector = List[Fraction]


@dataclass(eq=False)
class Motive:
    ambient: AmbientGaloisField
    dim: int
    action: Tuple[Matrix, ...]
    label: str = ""

    def matrix(self, g: int) -> Matrix:
        return self.action[g]

    def is_homomorphism(self) -> bool:
        amb = self.ambient
        if self.action[amb.identity_index] != identity(self.dim):
            return False
        if self.dim == 0:
            return True
        for i in range(amb.order):
            for j in range(amb.order):
                if matmul(self.action[i], self.action[j]) != self.action[amb.table[i][j]]:
                    return False
        return True

    def character(self) -> List[Fraction]:
        """Trace on each conjugacy class, in class order."""
        return [
            sum((self.action[cls[0]][i][i] for i in range(self.dim)), Fraction(0))
            for cls in conjugacy_classes(self.ambient)
        ]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "dim": self.dim,
            "character": [str(c) for c in self.character()],
        }


def _check_same_ambient(*motives: Motive):
    first = motives[0].ambient
    for m in motives[1:]:
        if m.ambient != first:
            raise AmbientMismatch("motives live over different ambient fields")


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """``e_x -> e_perm[x]``."""
    n = len(perm)
    out = [[Fraction(0)] * n for _ in range(n)]
    for x, y in enumerate(perm):
        out[y][x] = Fraction(1)
    return out


# ---------------------------------------------------------------------- étale schemes


def _orbits(perms: Sequence[Sequence[int]], size: int) -> List[Tuple[int, ...]]:
    seen = set()
    orbits = []
    for x in range(size):
        if x in seen:
            continue
        orbit = tuple(sorted({perm[x] for perm in perms}))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


@dataclass(eq=False)
class EtaleScheme:
    """
    A finite étale Q-scheme given by its geometric points with the Galois action:
    ``perms[g][x]`` is the image of point ``x`` under automorphism ``g``. Each orbit
    is one component ``Spec N^H`` with H the stabilizer of its least point.
    """

    ambient: AmbientGaloisField
    labels: Tuple[str, ...]
    perms: Tuple[Tuple[int, ...], ...]
    polynomial: Optional[Polynomial] = None
    roots: Tuple[NFElement, ...] = ()

    @property
    def size(self) -> int:
        return len(self.labels)

    def orbits(self) -> List[Tuple[int, ...]]:
        return _orbits(self.perms, self.size)

    @property
    def base_points(self) -> List[int]:
        return [orbit[0] for orbit in self.orbits()]

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.ambient, tuple(g for g, perm in enumerate(self.perms) if perm[x] == x))

    @property
    def components(self) -> List[Subgroup]:
        return [self.stabilizer(x) for x in self.base_points]

    @classmethod
    def from_subgroups(cls, ambient: AmbientGaloisField, subgroups: Sequence[Subgroup]) -> "EtaleScheme":
        """``Spec N^H1 ⊔ ... ⊔ Spec N^Hr``; points are the left cosets ``gH_i``."""
        labels = []
        cosets = []
        for i, h in enumerate(subgroups):
            for c in h.left_cosets(Subgroup.whole(ambient)):
                labels.append(f"{i}:{c[0]}")
                cosets.append((i, c))
        lookup = {(i, g): idx for idx, (i, c) in enumerate(cosets) for g in c}
        perms = tuple(
            tuple(lookup[(i, ambient.table[g][c[0]])] for i, c in cosets) for g in range(ambient.order)
        )
        return cls(ambient, tuple(labels), perms)

    @classmethod
    def from_polynomial(cls, ambient: AmbientGaloisField, f: Polynomial) -> "EtaleScheme":
        """``Spec Q[x]/(f)`` for squarefree ``f``; the points are the roots of ``f`` in N."""
        g = f.squarefree_part()
        roots = tuple(ambient.roots_of(g))
        if len(roots) != g.degree:
            raise AmbientMismatch(f"{format_polynomial(f)} does not split in the ambient field")
        lookup = {r: i for i, r in enumerate(roots)}
        perms = tuple(tuple(lookup[ambient.apply(i, r)] for r in roots) for i in range(ambient.order))
        labels = tuple(f"root{i}" for i in range(len(roots)))
        return cls(ambient, labels, perms, polynomial=g, roots=roots)

    def disjoint_union(self, other: "EtaleScheme") -> "EtaleScheme":
        """``X ⊔ Y``: the points of ``other`` follow those of ``self``, even when the two share roots."""
        if self.ambient != other.ambient:
            raise AmbientMismatch("schemes live over different ambient fields")
        offset = self.size
        labels = tuple(f"0:{a}" for a in self.labels) + tuple(f"1:{b}" for b in other.labels)
        perms = tuple(p + tuple(offset + y for y in q) for p, q in zip(self.perms, other.perms))
        polynomial = None
        roots: Tuple[NFElement, ...] = ()
        if self.polynomial is not None and other.polynomial is not None:
            if self.polynomial.gcd(other.polynomial).degree == 0:
                polynomial = self.polynomial * other.polynomial
                roots = self.roots + other.roots
        return EtaleScheme(self.ambient, labels, perms, polynomial=polynomial, roots=roots)

    def product(self, other: "EtaleScheme") -> "EtaleScheme":
        if self.ambient != other.ambient:
            raise AmbientMismatch("schemes live over different ambient fields")
        m = other.size
        labels = tuple(f"({a},{b})" for a in self.labels for b in other.labels)
        perms = tuple(
            tuple(p[x] * m + q[y] for x in range(self.size) for y in range(m))
            for p, q in zip(self.perms, other.perms)
        )
        return EtaleScheme(self.ambient, labels, perms)

    def component_polynomials(self) -> List[Polynomial]:
        """Irreducible factors of the defining polynomial, one per component."""
        if self.polynomial is None:
            return []
        return [g for g, _ in factor_over_q(self.polynomial)]

    def to_json(self) -> dict:
        return {
            "points": self.size,
            "orbits": [list(o) for o in self.orbits()],
            "components": [{"stabilizer": h.to_json(), "degree": self.ambient.order // h.order} for h in self.components],
        }


# ---------------------------------------------------------------------- constructions


def motive_of(scheme: EtaleScheme, label: str = "") -> Motive:
    """The permutation motive h(X)."""
    action = tuple(permutation_matrix(perm) for perm in scheme.perms)
    return Motive(scheme.ambient, scheme.size, action, label or f"h(X), {scheme.size} points")


def unit_motive(ambient: AmbientGaloisField) -> Motive:
    return Motive(ambient, 1, tuple(identity(1) for _ in range(ambient.order)), "unit")


def regular_motive(ambient: AmbientGaloisField) -> Motive:
    return motive_of(EtaleScheme.from_subgroups(ambient, [Subgroup.trivial(ambient)]), "regular")


def tensor(v: Motive, w: Motive) -> Motive:
    _check_same_ambient(v, w)
    action = tuple(kronecker(a, b) for a, b in zip(v.action, w.action))
    return Motive(v.ambient, v.dim * w.dim, action, f"{v.label} ⊗ {w.label}")


def direct_sum(v: Motive, w: Motive) -> Motive:
    _check_same_ambient(v, w)
    n = v.dim + w.dim
    action = []
    for a, b in zip(v.action, w.action):
        block = [[Fraction(0)] * n for _ in range(n)]
        for i in range(v.dim):
            block[i][: v.dim] = a[i]
        for i in range(w.dim):
            block[v.dim + i][v.dim :] = b[i]
        action.append(block)
    return Motive(v.ambient, n, tuple(action), f"{v.label} ⊕ {w.label}")


def fixed_vectors(v: Motive, generators: Sequence[int]) -> List[Vector]:
    rows: Matrix = []
    for g in generators:
        m = v.action[g]
        for i in range(v.dim):
            row = list(m[i])
            row[i] -= 1
            if any(row):
                rows.append(row)
    if not rows:
        return identity(v.dim)
    return nullspace(rows, v.dim)


def sections(v: Motive, subgroup: Subgroup) -> List[Vector]:
    """Basis of the H-fixed subspace, the value of the sheaf on N^H."""
    return fixed_vectors(v, subgroup.generators)


def sections_by_subgroup(v: Motive) -> List[Dict[str, object]]:
    return [
        {"subgroup": h.to_json(), "field_degree": v.ambient.order // h.order, "dim": len(sections(v, h))}
        for h in all_subgroups(v.ambient)
    ]


def sheaf_axiom_check(v: Motive, inner: Subgroup, outer: Subgroup) -> bool:
    """
    For ``inner`` normal in ``outer``: the outer-fixed vectors are exactly the
    vectors of the inner-fixed subspace fixed by the quotient.
    """
    if not inner.is_normal_in(outer):
        raise ValueError("inner subgroup must be normal in the outer subgroup")
    small = sections(v, inner)
    large = sections(v, outer)
    if not small:
        return not large
    solver = ColumnSpaceSolver(small)
    k = len(small)
    rows: Matrix = []
    for g in outer.generators:
        images = [solver.coordinates(_apply(v.action[g], b)) for b in small]
        for i in range(k):
            row = [images[j][i] for j in range(k)]
            row[i] -= 1
            if any(row):
                rows.append(row)
    coords = nullspace(rows, k) if rows else identity(k)
    descended = [[sum((c[j] * small[j][x] for j in range(k)), Fraction(0)) for x in range(v.dim)] for c in coords]
    return _same_span(descended, large, v.dim)


def _apply(m: Matrix, vec: Sequence[Fraction]) -> Vector:
    return [sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0)) for row in m]


def _same_span(a: Sequence[Vector], b: Sequence[Vector], n: int) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    return rref(a, n)[0] == rref(b, n)[0]


def orbit_count(scheme: EtaleScheme, subgroup: Subgroup) -> int:
    """G-orbits on ``S_X × G/H``."""
    cosets = EtaleScheme.from_subgroups(scheme.ambient, [subgroup])
    return len(scheme.product(cosets).orbits())


def kernel(v: Motive) -> Subgroup:
    eye = identity(v.dim)
    return Subgroup(v.ambient, tuple(g for g, m in enumerate(v.action) if m == eye))


def finite_type_level(v: Motive) -> Tuple[Subgroup, bool]:
    """
    The kernel of the action, and whether the sections over every subgroup of it
    are already all of V (the motive is trivialized by the kernel's fixed field).
    """
    ker = kernel(v)
    stable = all(
        len(sections(v, h)) == v.dim for h in all_subgroups(v.ambient) if h.is_subgroup_of(ker)
    )
    return ker, stable


def hom_motives(v: Motive, w: Motive) -> List[Matrix]:
    """Basis of the G-equivariant linear maps V -> W, as ``dim W × dim V`` matrices."""
    _check_same_ambient(v, w)
    m, n = w.dim, v.dim
    size = m * n
    if size == 0:
        return []
    rows: Matrix = []
    for g in Subgroup.whole(v.ambient).generators:
        a, b = w.action[g], v.action[g]
        for i in range(m):
            for j in range(n):
                row = [Fraction(0)] * size
                for k in range(m):
                    if a[i][k]:
                        row[k * n + j] += a[i][k]
                for k in range(n):
                    if b[k][j]:
                        row[i * n + k] -= b[k][j]
                if any(row):
                    rows.append(row)
    basis = nullspace(rows, size) if rows else identity(size)
    return [[vec[i * n : (i + 1) * n] for i in range(m)] for vec in basis]


def submotive(v: Motive, basis: Sequence[Vector], label: str = "") -> Motive:
    """The restriction of V to the invariant subspace spanned by ``basis``."""
    basis = [list(b) for b in basis]
    solver = ColumnSpaceSolver(basis)
    k = len(basis)
    action = []
    for m in v.action:
        columns = [solver.coordinates(_apply(m, b)) for b in basis]
        action.append([[columns[j][i] for j in range(k)] for i in range(k)])
    return Motive(v.ambient, k, tuple(action), label or f"sub({v.label})")


# ---------------------------------------------------------------------- decomposition


def central_idempotents(ambient: AmbientGaloisField) -> List[Vector]:
    """
    Primitive central idempotents of Q[G] in class-sum coordinates, from the
    splitting of the center, whose structure constants count ``c d = e`` over classes.
    """
    classes = conjugacy_classes(ambient)
    class_of = {g: idx for idx, cls in enumerate(classes) for g in cls}
    k = len(classes)
    structure = [[None] * k for _ in range(k)]
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            counts = [Fraction(0)] * k
            for x in ca:
                for y in cb:
                    counts[class_of[ambient.table[x][y]]] += 1
            # counts[e] = |class e| * coefficient of z_e
            structure[a][b] = [counts[e] / len(classes[e]) for e in range(k)]
    unit = [Fraction(int(e == class_of[ambient.identity_index])) for e in range(k)]
    return EtaleAlgebra(structure, unit).primitive_idempotents()


def _group_element_matrix(v: Motive, coeffs: Sequence[Fraction]) -> Matrix:
    classes = conjugacy_classes(v.ambient)
    out = [[Fraction(0)] * v.dim for _ in range(v.dim)]
    for c, cls in zip(coeffs, classes):
        if not c:
            continue
        for g in cls:
            m = v.action[g]
            for i in range(v.dim):
                for j in range(v.dim):
                    if m[i][j]:
                        out[i][j] += c * m[i][j]
    return out


def _column_space(m: Matrix, n: int) -> List[Vector]:
    return rref(transpose(m), n)[0] if m else []


def _cyclic_submodule(v: Motive, vec: Vector) -> List[Vector]:
    return rref([_apply(m, vec) for m in v.action], v.dim)[0]


def isotypic_components(v: Motive) -> List[List[Vector]]:
    """Images of the primitive central idempotents, nonzero ones only."""
    out = []
    for e in central_idempotents(v.ambient):
        space = _column_space(_group_element_matrix(v, e), v.dim)
        if space:
            out.append(space)
    return out


def irreducible_constituents(v: Motive) -> List[Tuple[Motive, int]]:
    """
    Q-irreducible constituents with multiplicities. In each isotypic component an
    irreducible is the smallest cyclic submodule generated by a vector fixed by
    some subgroup (or by a basis vector).
    """
    out = []
    for space in isotypic_components(v):
        candidates: List[Vector] = []
        for h in all_subgroups(v.ambient):
            fixed = sections(v, h)
            if not fixed:
                continue
            for b in _intersect(space, fixed, v.dim):
                candidates.append(b)
        candidates.extend(space)
        best = None
        for vec in candidates:
            sub = _cyclic_submodule(v, vec)
            if sub and (best is None or len(sub) < len(best)):
                best = sub
        multiplicity = len(space) // len(best)
        constituent = submotive(v, best, f"irreducible of dim {len(best)}")
        if not endomorphism_check(constituent):
            raise VerificationFailed(
                "constituent has a singular endomorphism, so it is not irreducible",
                {"dim": constituent.dim, "end_dim": hom_dimension(constituent, constituent)},
            )
        out.append((constituent, multiplicity))
    out.sort(key=lambda pair: (pair[0].dim, [str(c) for c in pair[0].character()]))
    return out


def endomorphism_check(v: Motive) -> bool:
    """
    Every basis map of End(V) is invertible, as it must be when End(V) is a division
    algebra. End(V) has dimension 1 exactly when V stays irreducible over C; a
    Q-irreducible V with non-rational character (the 2-dimensional constituent of a
    cyclic quartic) has a larger commutative End(V).
    """
    ends = hom_motives(v, v)
    return bool(ends) and all(rank(e, v.dim) == v.dim for e in ends)


def _intersect(a: List[Vector], b: List[Vector], n: int) -> List[Vector]:
    """Basis of ``span(a) ∩ span(b)``."""
    ka, kb = len(a), len(b)
    # x*a - y*b = 0, coordinates (x, y)
    rows = [[a[i][c] for i in range(ka)] + [-b[j][c] for j in range(kb)] for c in range(n)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return list(a)
    sol = nullspace(rows, ka + kb)
    vectors = [[sum((s[i] * a[i][c] for i in range(ka)), Fraction(0)) for c in range(n)] for s in sol]
    vectors = [vec for vec in vectors if any(vec)]
    return rref(vectors, n)[0] if vectors else []


def product_check(x: EtaleScheme, y: EtaleScheme) -> bool:
    """h(X × Y) = h(X) ⊗ h(Y): the same permutation matrices in the product basis."""
    return motive_of(x.product(y)).action == tensor(motive_of(x), motive_of(y)).action


def hom_dimension(v: Motive, w: Motive) -> int:
    return len(hom_motives(v, w))
