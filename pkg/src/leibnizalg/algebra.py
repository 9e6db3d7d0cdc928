"""Structure constants for left Leibniz algebras and the basic invariants.

A left Leibniz algebra is a vector space with a bilinear bracket satisfying

    [x, [y, z]] = [y, [x, z]] + [[x, y], z]

(left multiplications act as derivations). Everything in this module is
phrased through a StructureTensor c with

    [e_i, e_j] = sum_k c[k][i][j] e_k

relative to a fixed basis e_0 .. e_{n-1}. Indices are 0-based everywhere in
the library; the file format used by the CLI is 1-based and converts on the
boundary.

Conventions shared across the package:

* a linear map is a square Matrix whose column j holds the coordinates of
  the image of e_j (so applying the map is Matrix.apply);
* linear maps vectorize row-major, entry (r, c) at index r*n + c;
* bilinear tensors vectorize with index (k*n + i)*n + j for b[k][i][j].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import (
    LinearSystem,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    as_vector,
    frac,
    vec_is_zero,
    zero_vector,
)

_ZERO = Fraction(0)


class LeibnizIdentityError(ValueError):
    """Raised when an operation requires a valid left Leibniz tensor."""


@dataclass(frozen=True)
class LeibnizViolation:
    """One failing instance of the left Leibniz identity.

    defect = [e_i, [e_j, e_k]] - [e_j, [e_i, e_k]] - [[e_i, e_j], e_k]
    """
    i: int
    j: int
    k: int
    defect: Vector


class StructureTensor:
    """Structure constants of a bilinear bracket on Q^dim."""

    def __init__(self, c: Sequence[Sequence[Sequence[Scalar]]],
                 labels: Optional[Sequence[str]] = None):
        dim = len(c)
        tensor = tuple(
            tuple(tuple(frac(x) for x in row) for row in plane) for plane in c)
        for plane in tensor:
            if len(plane) != dim or any(len(row) != dim for row in plane):
                raise ValueError("structure tensor must be dim x dim x dim")
        self.dim = dim
        self.c = tensor
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != dim:
            raise ValueError("label count differs from dimension")

    @classmethod
    def from_brackets(cls, dim: int,
                      brackets: Mapping[tuple[int, int], Mapping[int, Scalar]],
                      labels: Optional[Sequence[str]] = None) -> StructureTensor:
        """Build from a sparse table {(i, j): {k: coeff}} of nonzero brackets."""
        c = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range")
            for k, coeff in terms.items():
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target {k} out of range")
                c[k][i][j] = frac(coeff)
        return cls(c, labels)

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a coordinate vector."""
        return tuple(self.c[k][i][j] for k in range(self.dim))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"e{i + 1}"

    @cached_property
    def leibniz_violations(self) -> tuple[LeibnizViolation, ...]:
        return tuple(check_left_leibniz(self))

    @property
    def is_left_leibniz(self) -> bool:
        return not self.leibniz_violations

    def require_validated(self) -> None:
        if self.leibniz_violations:
            v = self.leibniz_violations[0]
            raise LeibnizIdentityError(
                f"not a left Leibniz algebra: identity fails at "
                f"({self.label(v.i)},{self.label(v.j)},{self.label(v.k)}) "
                f"with defect {list(v.defect)}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, StructureTensor)
                and self.dim == other.dim
                and self.c == other.c
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.dim, self.c, self.labels))

    def __repr__(self):
        nnz = sum(1 for k in range(self.dim) for i in range(self.dim)
                  for j in range(self.dim) if self.c[k][i][j] != 0)
        return f"StructureTensor(dim={self.dim}, nonzeros={nnz})"


class BilinearTensor:
    """Coordinates of a bilinear map f: L x L -> L, f(e_i,e_j) = sum b[k][i][j] e_k."""

    def __init__(self, b: Sequence[Sequence[Sequence[Scalar]]]):
        dim = len(b)
        tensor = tuple(
            tuple(tuple(frac(x) for x in row) for row in plane) for plane in b)
        for plane in tensor:
            if len(plane) != dim or any(len(row) != dim for row in plane):
                raise ValueError("bilinear tensor must be dim x dim x dim")
        self.dim = dim
        self.b = tensor

    @classmethod
    def zero(cls, dim: int) -> BilinearTensor:
        return cls([[[0] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_values(cls, dim: int,
                    values: Mapping[tuple[int, int], Mapping[int, Scalar]]) -> BilinearTensor:
        b = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in values.items():
            for k, coeff in terms.items():
                b[k][i][j] = frac(coeff)
        return cls(b)

    def value_basis(self, i: int, j: int) -> Vector:
        return tuple(self.b[k][i][j] for k in range(self.dim))

    def evaluate(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        xv, yv = as_vector(x), as_vector(y)
        n = self.dim
        out = []
        for k in range(n):
            acc = _ZERO
            plane = self.b[k]
            for i in range(n):
                if xv[i] == 0:
                    continue
                row = plane[i]
                for j in range(n):
                    if yv[j] != 0 and row[j] != 0:
                        acc += xv[i] * yv[j] * row[j]
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(x == 0 for plane in self.b for row in plane for x in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BilinearTensor)
                and self.dim == other.dim and self.b == other.b)

    def __hash__(self):
        return hash((self.dim, self.b))

    def __repr__(self):
        return f"BilinearTensor(dim={self.dim})"


# ---------------------------------------------------------------------------
# vectorization conventions


def map_to_vec(m: Matrix) -> Vector:
    """Row-major vectorization of a square matrix."""
    if m.rows != m.cols:
        raise ValueError("linear maps are square")
    return tuple(x for row in m.entries for x in row)


def vec_to_map(v: Sequence[Scalar], n: int) -> Matrix:
    vv = as_vector(v)
    if len(vv) != n * n:
        raise ValueError("vector length is not n^2")
    return Matrix([vv[r * n:(r + 1) * n] for r in range(n)], cols=n)


def bilinear_to_vec(t: BilinearTensor) -> Vector:
    n = t.dim
    return tuple(t.b[k][i][j] for k in range(n) for i in range(n) for j in range(n))


def vec_to_bilinear(v: Sequence[Scalar], n: int) -> BilinearTensor:
    vv = as_vector(v)
    if len(vv) != n ** 3:
        raise ValueError("vector length is not n^3")
    return BilinearTensor([[[vv[(k * n + i) * n + j] for j in range(n)]
                            for i in range(n)] for k in range(n)])


def tensor_index(n: int, k: int, i: int, j: int) -> int:
    return (k * n + i) * n + j


def map_index(n: int, r: int, c: int) -> int:
    return r * n + c


# ---------------------------------------------------------------------------
# core operations


def check_left_leibniz(t: StructureTensor) -> list[LeibnizViolation]:
    """All triples where [x,[y,z]] = [y,[x,z]] + [[x,y],z] fails on the basis."""
    n = t.dim
    c = t.c
    # sparse view: ad[i] = {m: {t: coeff}} with [e_i, e_m] = sum coeff e_t
    ad: list[dict[int, list[tuple[int, Fraction]]]] = []
    for i in range(n):
        cols: dict[int, list[tuple[int, Fraction]]] = {}
        for m in range(n):
            entries = [(tt, c[tt][i][m]) for tt in range(n) if c[tt][i][m] != 0]
            if entries:
                cols[m] = entries
        ad.append(cols)

    def left_mult(i: int, w: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        cols = ad[i]
        for m, wm in w.items():
            for tt, co in cols.get(m, ()):
                out[tt] = out.get(tt, _ZERO) + wm * co
        return {k: v for k, v in out.items() if v != 0}

    def pair(i: int, j: int) -> dict[int, Fraction]:
        return {k: c[k][i][j] for k in range(n) if c[k][i][j] != 0}

    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = left_mult(i, pair(j, k))
                r1 = left_mult(j, pair(i, k))
                r2 = _right_mult(c, n, pair(i, j), k)
                defect: dict[int, Fraction] = dict(lhs)
                for tt, v in r1.items():
                    defect[tt] = defect.get(tt, _ZERO) - v
                for tt, v in r2.items():
                    defect[tt] = defect.get(tt, _ZERO) - v
                defect = {kk: v for kk, v in defect.items() if v != 0}
                if defect:
                    vec = [_ZERO] * n
                    for tt, v in defect.items():
                        vec[tt] = v
                    violations.append(LeibnizViolation(i, j, k, tuple(vec)))
    return violations


def _right_mult(c, n: int, w: dict[int, Fraction], k: int) -> dict[int, Fraction]:
    """[w, e_k] for a sparse coordinate vector w."""
    out: dict[int, Fraction] = {}
    for m, wm in w.items():
        for tt in range(n):
            co = c[tt][m][k]
            if co != 0:
                out[tt] = out.get(tt, _ZERO) + wm * co
    return {kk: v for kk, v in out.items() if v != 0}


def bracket(t: StructureTensor, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """[x, y] for coordinate vectors x, y."""
    xv, yv = as_vector(x), as_vector(y)
    n = t.dim
    if len(xv) != n or len(yv) != n:
        raise ValueError("coordinate length differs from algebra dimension")
    out = []
    for k in range(n):
        acc = _ZERO
        plane = t.c[k]
        for i in range(n):
            if xv[i] == 0:
                continue
            row = plane[i]
            for j in range(n):
                if yv[j] != 0 and row[j] != 0:
                    acc += xv[i] * yv[j] * row[j]
        out.append(acc)
    return tuple(out)


def opposite(t: StructureTensor) -> StructureTensor:
    """The opposite product {x,y} = [y,x].

    Sends right Leibniz tensors to left ones and vice versa; applying it
    twice returns the original tensor.
    """
    n = t.dim
    return StructureTensor(
        [[[t.c[k][j][i] for j in range(n)] for i in range(n)] for k in range(n)],
        labels=t.labels)


def is_lie(t: StructureTensor) -> bool:
    """Antisymmetry of the bracket (the identity then reduces to Jacobi)."""
    n = t.dim
    return all(t.c[k][i][j] == -t.c[k][j][i]
               for k in range(n) for i in range(n) for j in range(n))


def leibniz_kernel(t: StructureTensor) -> Subspace:
    """Span of all squares [x, x], via polarization on the basis.

    Generated by [e_i, e_i] together with [e_i, e_j] + [e_j, e_i] for i < j.
    """
    t.require_validated()
    n = t.dim
    gens: list[Vector] = []
    for i in range(n):
        gens.append(t.bracket_basis(i, i))
        for j in range(i + 1, n):
            gens.append(tuple(a + b for a, b in
                              zip(t.bracket_basis(i, j), t.bracket_basis(j, i))))
    return Subspace.from_vectors(gens, n)


def left_center(t: StructureTensor) -> Subspace:
    """{x : [x, y] = 0 for all y}."""
    n = t.dim
    sys = LinearSystem(n)
    for j in range(n):
        for k in range(n):
            coeffs = {i: t.c[k][i][j] for i in range(n) if t.c[k][i][j] != 0}
            sys.add_equation(coeffs, 0, tag=("left", j, k))
    return sys.nullspace()


def center(t: StructureTensor) -> Subspace:
    """{x : [x, y] = [y, x] = 0 for all y}."""
    n = t.dim
    sys = LinearSystem(n)
    for j in range(n):
        for k in range(n):
            left = {i: t.c[k][i][j] for i in range(n) if t.c[k][i][j] != 0}
            sys.add_equation(left, 0, tag=("left", j, k))
            right = {i: t.c[k][j][i] for i in range(n) if t.c[k][j][i] != 0}
            sys.add_equation(right, 0, tag=("right", j, k))
    return sys.nullspace()


def is_ideal(t: StructureTensor, s: Subspace) -> bool:
    """Two-sided ideal test: [S, L] and [L, S] stay inside S."""
    if s.ambient_dim != t.dim:
        raise ValueError("subspace ambient dimension differs from the algebra")
    n = t.dim
    for u in s.basis.entries:
        for j in range(n):
            left = tuple(sum((u[i] * t.c[k][i][j] for i in range(n) if u[i] != 0),
                             _ZERO) for k in range(n))
            if not s.contains(left):
                return False
            right = tuple(sum((u[i] * t.c[k][j][i] for i in range(n) if u[i] != 0),
                              _ZERO) for k in range(n))
            if not s.contains(right):
                return False
    return True


@dataclass(frozen=True)
class QuotientResult:
    """Quotient algebra data.

    tensor: structure constants of L/I on the complement coordinates;
    projection: (dim L/I) x (dim L) matrix of the canonical projection;
    section: (dim L) x (dim L/I) matrix picking the coordinate representatives
    (projection @ section is the identity);
    complement_columns: the ambient coordinates that survive (the non-pivot
    columns of the ideal's RREF basis).
    """
    tensor: StructureTensor
    projection: Matrix
    section: Matrix
    ideal: Subspace
    complement_columns: tuple[int, ...]


def quotient(t: StructureTensor, ideal: Subspace) -> QuotientResult:
    """L/I with the complement-coordinate convention.

    The representatives are the ambient basis vectors at the non-pivot
    columns of I's canonical basis; the projection sends v to the residual
    of v after reduction by I, read off on those coordinates.
    """
    t.require_validated()
    if not is_ideal(t, ideal):
        raise ValueError("subspace is not a two-sided ideal")
    n = t.dim
    comp = tuple(j for j in range(n) if j not in set(ideal.pivots))
    m = len(comp)
    proj_rows = []
    reduced_basis = [ideal.reduce(tuple(Fraction(1 if i == j else 0)
                                        for i in range(n))) for j in range(n)]
    for pos in range(m):
        proj_rows.append([reduced_basis[j][comp[pos]] for j in range(n)])
    projection = Matrix(proj_rows, cols=n)
    section = Matrix([[1 if comp[pos] == i else 0 for pos in range(m)]
                      for i in range(n)], cols=m)
    cbar = [[[_ZERO] * m for _ in range(m)] for _ in range(m)]
    for s1 in range(m):
        for s2 in range(m):
            w = t.bracket_basis(comp[s1], comp[s2])
            pw = projection.apply(w)
            for u in range(m):
                cbar[u][s1][s2] = pw[u]
    labels = None
    if t.labels is not None:
        labels = [t.labels[j] for j in comp]
    return QuotientResult(
        tensor=StructureTensor(cbar, labels=labels),
        projection=projection,
        section=section,
        ideal=ideal,
        complement_columns=comp,
    )


# ---------------------------------------------------------------------------
# hemisemidirect products


class ModuleAction:
    """A left module over a Lie algebra, given by one matrix per basis element.

    Checks the axiom X.(Y.v) - Y.(X.v) = [X,Y].v on the basis at
    construction time and refuses inconsistent data.
    """

    def __init__(self, lie: StructureTensor, matrices: Sequence[Matrix]):
        if len(matrices) != lie.dim:
            raise ValueError("need one action matrix per Lie basis element")
        if not is_lie(lie):
            raise ValueError("module actions are defined over Lie algebras")
        lie.require_validated()
        dims = {(m.rows, m.cols) for m in matrices}
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise ValueError("action matrices must be square and equal-sized")
        self.lie = lie
        self.matrices = tuple(matrices)
        self.lie_dim = lie.dim
        self.module_dim = matrices[0].rows if matrices else 0
        for i in range(lie.dim):
            for j in range(lie.dim):
                lhs = self.matrices[i] @ self.matrices[j] - self.matrices[j] @ self.matrices[i]
                rhs = Matrix.zeros(self.module_dim, self.module_dim)
                for k in range(lie.dim):
                    co = lie.c[k][i][j]
                    if co != 0:
                        rhs = rhs + self.matrices[k].scale(co)
                if lhs != rhs:
                    raise ValueError(
                        f"module axiom fails on basis pair ({i},{j})")

    def __repr__(self):
        return f"ModuleAction(lie_dim={self.lie_dim}, module_dim={self.module_dim})"


def hemisemidirect(lie: StructureTensor, action: ModuleAction,
                   labels: Optional[Sequence[str]] = None) -> StructureTensor:
    """Leibniz algebra on L + V with [X+a, Y+b] = [X,Y] + X.b.

    The module part brackets to zero on the left, which makes the result a
    left Leibniz algebra whenever L is Lie and V is a left module; V sits
    inside the Leibniz kernel.
    """
    if action.lie != lie:
        raise ValueError("action was built over a different Lie algebra")
    m, d = lie.dim, action.module_dim
    n = m + d
    c = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(m):
        for i in range(m):
            for j in range(m):
                c[k][i][j] = lie.c[k][i][j]
    for i in range(m):
        mat = action.matrices[i]
        for b in range(d):
            for a in range(d):
                if mat.entries[a][b] != 0:
                    c[m + a][i][m + b] = mat.entries[a][b]
    if labels is None and lie.labels is not None:
        labels = list(lie.labels) + [f"v{b + 1}" for b in range(d)]
    return StructureTensor(c, labels=labels)
