"""Structure-constant associative algebras, bimodules over them, and the
generic constructions (adjoint/dual bimodules, semidirect products) that the
operator-family machinery consumes.

Conventions: an algebra of dimension d stores mult[i][j][k] with
e_i . e_j = sum_k mult[i,j,k] e_k; a bimodule stores left[i][u][v]
(e_i acting on m_u) and right[u][i][v] (m_u acted on by e_i).
Linear maps store a (target_dim x source_dim) matrix whose j-th column is the
image of the j-th source basis vector.
"""

from __future__ import annotations

from matchalg.errors import LabelSetMismatch
from matchalg.linalg import ONE, ZERO, DenseMatrix, DenseTensor
from matchalg.report import CertificateReport


class Algebra:
    """Finite-dimensional algebra given by its structure-constant tensor.

    Associativity is not enforced at construction; run check_algebra to get a
    certificate.
    """

    def __init__(self, dim, basis_names, mult: DenseTensor):
        self.dim = int(dim)
        self.basis_names = list(basis_names)
        if len(self.basis_names) != self.dim:
            raise ValueError("need one basis name per dimension")
        if mult.shape != (self.dim, self.dim, self.dim):
            raise ValueError("mult tensor must have shape [dim, dim, dim]")
        self.mult = mult
        # sparse product rows: (i, j) -> [(k, coeff)]
        self._rows = {}
        for (i, j, k), c in mult.nonzero_items():
            self._rows.setdefault((i, j), []).append((k, c))

    def product_basis(self, i, j):
        """Sparse product e_i . e_j as [(k, coeff)]."""
        return self._rows.get((i, j), [])

    def product(self, a, b):
        """Product of two coefficient vectors."""
        out = [ZERO] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                for k, c in self.product_basis(i, j):
                    out[k] += ai * bj * c
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.dim == other.dim
            and self.mult == other.mult
        )

    def __hash__(self):
        return id(self).__hash__()

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis={self.basis_names})"


class Bimodule:
    """Left/right action tensors of an algebra on a finite-dimensional module."""

    def __init__(self, algebra: Algebra, dim, left: DenseTensor, right: DenseTensor,
                 basis_names=None):
        self.algebra = algebra
        self.dim = int(dim)
        if left.shape != (algebra.dim, self.dim, self.dim):
            raise ValueError("left tensor must have shape [adim, mdim, mdim]")
        if right.shape != (self.dim, algebra.dim, self.dim):
            raise ValueError("right tensor must have shape [mdim, adim, mdim]")
        self.left = left
        self.right = right
        self.basis_names = list(basis_names) if basis_names else [f"m{i}" for i in range(self.dim)]
        self._left_rows = {}
        for (i, u, v), c in left.nonzero_items():
            self._left_rows.setdefault((i, u), []).append((v, c))
        self._right_rows = {}
        for (u, i, v), c in right.nonzero_items():
            self._right_rows.setdefault((u, i), []).append((v, c))

    def left_basis(self, i, u):
        """Sparse e_i ._M m_u as [(v, coeff)]."""
        return self._left_rows.get((i, u), [])

    def right_basis(self, u, i):
        """Sparse m_u ._M e_i as [(v, coeff)]."""
        return self._right_rows.get((u, i), [])

    def left_act(self, a, u):
        """Action of an algebra vector on a module vector."""
        out = [ZERO] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for uu, uv in enumerate(u):
                if not uv:
                    continue
                for v, c in self.left_basis(i, uu):
                    out[v] += ai * uv * c
        return out

    def right_act(self, u, a):
        out = [ZERO] * self.dim
        for uu, uv in enumerate(u):
            if not uv:
                continue
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for v, c in self.right_basis(uu, i):
                    out[v] += uv * ai * c
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Bimodule)
            and self.dim == other.dim
            and self.algebra == other.algebra
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return id(self).__hash__()

    def __repr__(self):
        return f"Bimodule(dim={self.dim} over dim-{self.algebra.dim} algebra)"


class LinearMap:
    """A linear map stored as its matrix in the fixed bases."""

    def __init__(self, source_dim, target_dim, matrix: DenseMatrix):
        self.source_dim = int(source_dim)
        self.target_dim = int(target_dim)
        if (matrix.rows, matrix.cols) != (self.target_dim, self.source_dim):
            raise ValueError("matrix shape must be target_dim x source_dim")
        self.matrix = matrix

    @classmethod
    def zero(cls, source_dim, target_dim):
        return cls(source_dim, target_dim, DenseMatrix(target_dim, source_dim))

    @classmethod
    def identity(cls, dim):
        return cls(dim, dim, DenseMatrix.identity(dim))

    def apply(self, vector):
        return self.matrix.apply(vector)

    def column(self, j):
        return [self.matrix[i, j] for i in range(self.target_dim)]

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self . inner."""
        if inner.target_dim != self.source_dim:
            raise ValueError("composition shape mismatch")
        return LinearMap(inner.source_dim, self.target_dim, self.matrix.mul(inner.matrix))

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix.scale(c))

    def add(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, self.matrix.add(other.matrix))

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.source_dim == other.source_dim
            and self.target_dim == other.target_dim
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return id(self).__hash__()


def unit_vector(dim, i):
    v = [ZERO] * dim
    v[i] = ONE
    return v


def check_algebra(algebra: Algebra) -> CertificateReport:
    """Certify associativity on every basis triple."""
    report = CertificateReport(f"associativity of {algebra!r}")
    d = algebra.dim
    names = algebra.basis_names
    for i in range(d):
        for j in range(d):
            ij = algebra.product_basis(i, j)
            for k in range(d):
                lhs = [ZERO] * d
                for p, c in ij:
                    for t, c2 in algebra.product_basis(p, k):
                        lhs[t] += c * c2
                rhs = [ZERO] * d
                for p, c in algebra.product_basis(j, k):
                    for t, c2 in algebra.product_basis(i, p):
                        rhs[t] += c * c2
                report.record("associativity", (names[i], names[j], names[k]), lhs, rhs)
    return report


def check_bimodule(module: Bimodule) -> CertificateReport:
    """Certify the three bimodule identities on every basis triple."""
    A = module.algebra
    report = CertificateReport(f"bimodule axioms of {module!r}")
    anames = A.basis_names
    mnames = module.basis_names
    d, m = A.dim, module.dim
    for i in range(d):
        for j in range(d):
            ij = A.product_basis(i, j)
            for u in range(m):
                # (a.b)._M u = a._M (b._M u)
                lhs = [ZERO] * m
                for p, c in ij:
                    for v, c2 in module.left_basis(p, u):
                        lhs[v] += c * c2
                rhs = [ZERO] * m
                for p, c in module.left_basis(j, u):
                    for v, c2 in module.left_basis(i, p):
                        rhs[v] += c * c2
                report.record("left-associativity", (anames[i], anames[j], mnames[u]), lhs, rhs)
                # (u._M a)._M b = u._M (a.b)
                lhs = [ZERO] * m
                for p, c in module.right_basis(u, i):
                    for v, c2 in module.right_basis(p, j):
                        lhs[v] += c * c2
                rhs = [ZERO] * m
                for p, c in ij:
                    for v, c2 in module.right_basis(u, p):
                        rhs[v] += c * c2
                report.record("right-associativity", (mnames[u], anames[i], anames[j]), lhs, rhs)
                # (a._M u)._M b = a._M (u._M b)
                lhs = [ZERO] * m
                for p, c in module.left_basis(i, u):
                    for v, c2 in module.right_basis(p, j):
                        lhs[v] += c * c2
                rhs = [ZERO] * m
                for p, c in module.right_basis(u, j):
                    for v, c2 in module.left_basis(i, p):
                        rhs[v] += c * c2
                report.record("middle-associativity", (anames[i], mnames[u], anames[j]), lhs, rhs)
    return report


def adjoint_bimodule(algebra: Algebra) -> Bimodule:
    """The algebra acting on itself by multiplication on both sides."""
    d = algebra.dim
    left = DenseTensor((d, d, d), list(algebra.mult.entries))
    right = DenseTensor((d, d, d), list(algebra.mult.entries))
    return Bimodule(algebra, d, left, right, basis_names=list(algebra.basis_names))


def dual_bimodule(module: Bimodule) -> Bimodule:
    """Dual module M* with (a.f)(u) = f(u ._M a) and (f.a)(u) = f(a ._M u)."""
    A = module.algebra
    d, m = A.dim, module.dim
    left = DenseTensor((d, m, m))
    right = DenseTensor((m, d, m))
    for (u, i, v), c in module.right.nonzero_items():
        # (e_i . delta_u)(m_v) = delta_u(m_v ._M e_i) = right[v,i,u]
        left.add_at((i, v, u), c)
    for (i, u, v), c in module.left.nonzero_items():
        # (delta_u . e_i)(m_v) = delta_u(e_i ._M m_v) = left[i,v,u]
        right.add_at((v, i, u), c)
    names = [f"{n}*" for n in module.basis_names]
    return Bimodule(A, m, left, right, basis_names=names)


def coadjoint_bimodule(algebra: Algebra) -> Bimodule:
    """Bimodule on the dual space with (a.f)(b) = f(b.a), (f.a)(b) = f(a.b)."""
    dual = dual_bimodule(adjoint_bimodule(algebra))
    dual.basis_names = [f"{n}*" for n in algebra.basis_names]
    return dual


def semidirect_product(algebra: Algebra, module: Bimodule) -> Algebra:
    """Algebra on A + M with (a,u)(b,v) = (a.b, a._M v + u._M b); M squares to 0."""
    d, m = algebra.dim, module.dim
    n = d + m
    mult = DenseTensor((n, n, n))
    for (i, j, k), c in algebra.mult.nonzero_items():
        mult.add_at((i, j, k), c)
    for (i, u, v), c in module.left.nonzero_items():
        mult.add_at((i, d + u, d + v), c)
    for (u, i, v), c in module.right.nonzero_items():
        mult.add_at((d + u, i, d + v), c)
    names = list(algebra.basis_names) + [f"{nm}'" for nm in module.basis_names]
    return Algebra(n, names, mult)


def check_morphism_pair(phi: LinearMap, psi: LinearMap, src, dst) -> CertificateReport:
    """Certify (phi, psi) as a morphism of matching relative Rota-Baxter
    algebras: phi multiplicative, psi intertwines both actions, and
    phi . P_x = P'_x . psi for every label."""
    A, M = src.target, src.source
    A2, M2 = dst.target, dst.source
    if src.labels != dst.labels:
        raise LabelSetMismatch(f"{src.labels} vs {dst.labels}")
    if phi.source_dim != A.dim or phi.target_dim != A2.dim:
        raise ValueError("phi shape incompatible with the algebras")
    if psi.source_dim != M.dim or psi.target_dim != M2.dim:
        raise ValueError("psi shape incompatible with the modules")
    report = CertificateReport("matching rRBA morphism")
    anames, mnames = A.basis_names, M.basis_names
    for i in range(A.dim):
        phi_i = phi.column(i)
        for j in range(A.dim):
            prod = [ZERO] * A.dim
            for k, c in A.product_basis(i, j):
                prod[k] = c
            lhs = phi.apply(prod)
            rhs = A2.product(phi_i, phi.column(j))
            report.record("algebra-morphism", (anames[i], anames[j]), lhs, rhs)
    for i in range(A.dim):
        phi_i = phi.column(i)
        for u in range(M.dim):
            psi_u = psi.column(u)
            lu = [ZERO] * M.dim
            for v, c in module_left(M, i, u):
                lu[v] = c
            report.record(
                "left-action",
                (anames[i], mnames[u]),
                psi.apply(lu),
                M2.left_act(phi_i, psi_u),
            )
            ru = [ZERO] * M.dim
            for v, c in module_right(M, u, i):
                ru[v] = c
            report.record(
                "right-action",
                (mnames[u], anames[i]),
                psi.apply(ru),
                M2.right_act(psi_u, phi_i),
            )
    for label in src.labels:
        P = src.maps[label]
        P2 = dst.maps[label]
        lhs = phi.compose(P)
        rhs = P2.compose(psi)
        for u in range(M.dim):
            report.record(
                "operator-intertwine",
                (label, mnames[u]),
                lhs.column(u),
                rhs.column(u),
            )
    return report


def module_left(module: Bimodule, i, u):
    return module.left_basis(i, u)


def module_right(module: Bimodule, u, i):
    return module.right_basis(u, i)
