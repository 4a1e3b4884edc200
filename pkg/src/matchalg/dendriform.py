"""Matching dendriform algebras and their traffic with operator families:
the induced structure on a module, the bullet-product construction on
D (x) K[X] with its identity operators, the adjunction transport, and the
semidirect embedding into a matching Rota-Baxter algebra.
"""

from __future__ import annotations

from collections import namedtuple

from matchalg.algebra import (
    Algebra,
    Bimodule,
    LinearMap,
    adjoint_bimodule,
    semidirect_product,
    unit_vector,
)
from matchalg.errors import LabelSetMismatch, MdaFails, MrrbaFails, NotMdaMorphism
from matchalg.linalg import ONE, ZERO, DenseMatrix, DenseTensor
from matchalg.operators import LabelSet, OperatorFamily
from matchalg.report import CertificateReport


class MatchingDendriform:
    """A module with label-indexed pairs of splitting operations."""

    def __init__(self, dim, labels: LabelSet, prec, succ, basis_names=None):
        self.dim = int(dim)
        self.labels = labels
        self.prec = {str(x): t for x, t in prec.items()}
        self.succ = {str(x): t for x, t in succ.items()}
        for x in labels:
            for table in (self.prec, self.succ):
                if x not in table:
                    raise ValueError(f"missing operation for label {x}")
                if table[x].shape != (self.dim,) * 3:
                    raise ValueError(f"operation for label {x} has wrong shape")
        self.basis_names = list(basis_names) if basis_names else [f"d{i}" for i in range(self.dim)]
        self._prec_rows = {
            x: _sparse_rows(self.prec[x]) for x in self.labels
        }
        self._succ_rows = {
            x: _sparse_rows(self.succ[x]) for x in self.labels
        }

    def prec_basis(self, x, i, j):
        """Sparse e_i prec_x e_j as [(k, coeff)]."""
        return self._prec_rows[str(x)].get((i, j), [])

    def succ_basis(self, x, i, j):
        return self._succ_rows[str(x)].get((i, j), [])

    def prec_vec(self, x, a, b):
        return _bilinear(self._prec_rows[str(x)], a, b, self.dim)

    def succ_vec(self, x, a, b):
        return _bilinear(self._succ_rows[str(x)], a, b, self.dim)

    def entrywise_equal(self, other: "MatchingDendriform") -> bool:
        if self.dim != other.dim or self.labels != other.labels:
            return False
        return all(
            self.prec[x] == other.prec[x] and self.succ[x] == other.succ[x]
            for x in self.labels
        )

    def __repr__(self):
        return f"MatchingDendriform(dim={self.dim}, labels={self.labels.labels})"


def _sparse_rows(tensor: DenseTensor):
    rows = {}
    for (i, j, k), c in tensor.nonzero_items():
        rows.setdefault((i, j), []).append((k, c))
    return rows


def _bilinear(rows, a, b, dim):
    out = [ZERO] * dim
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            for k, c in rows.get((i, j), []):
                out[k] += ai * bj * c
    return out


def check_mda(D: MatchingDendriform) -> CertificateReport:
    """Certify the three matching dendriform axioms on all basis triples and
    label pairs."""
    report = CertificateReport("matching dendriform axioms")
    d = D.dim
    names = D.basis_names
    for x in D.labels:
        for y in D.labels:
            for i in range(d):
                for j in range(d):
                    pxij = D.prec_basis(x, i, j)
                    sxij = D.succ_basis(x, i, j)
                    pyij = D.prec_basis(y, i, j)
                    for k in range(d):
                        # (a <_x b) <_y c = a <_x (b <_y c) + a <_y (b >_x c)
                        lhs = [ZERO] * d
                        for p, c in pxij:
                            for t, c2 in D.prec_basis(y, p, k):
                                lhs[t] += c * c2
                        rhs = [ZERO] * d
                        for p, c in D.prec_basis(y, j, k):
                            for t, c2 in D.prec_basis(x, i, p):
                                rhs[t] += c * c2
                        for p, c in D.succ_basis(x, j, k):
                            for t, c2 in D.prec_basis(y, i, p):
                                rhs[t] += c * c2
                        report.record(
                            "dendriform-1", (x, y, names[i], names[j], names[k]), lhs, rhs
                        )
                        # (a >_x b) <_y c = a >_x (b <_y c)
                        lhs = [ZERO] * d
                        for p, c in sxij:
                            for t, c2 in D.prec_basis(y, p, k):
                                lhs[t] += c * c2
                        rhs = [ZERO] * d
                        for p, c in D.prec_basis(y, j, k):
                            for t, c2 in D.succ_basis(x, i, p):
                                rhs[t] += c * c2
                        report.record(
                            "dendriform-2", (x, y, names[i], names[j], names[k]), lhs, rhs
                        )
                        # (a <_y b) >_x c + (a >_x b) >_y c = a >_x (b >_y c)
                        lhs = [ZERO] * d
                        for p, c in pyij:
                            for t, c2 in D.succ_basis(x, p, k):
                                lhs[t] += c * c2
                        for p, c in sxij:
                            for t, c2 in D.succ_basis(y, p, k):
                                lhs[t] += c * c2
                        rhs = [ZERO] * d
                        for p, c in D.succ_basis(y, j, k):
                            for t, c2 in D.succ_basis(x, i, p):
                                rhs[t] += c * c2
                        report.record(
                            "dendriform-3", (x, y, names[i], names[j], names[k]), lhs, rhs
                        )
    return report


def induce_dendriform(family: OperatorFamily) -> MatchingDendriform:
    """u prec_x v = u ._M P_x(v) and u succ_x v = P_x(u) ._M v on the module."""
    base = family.mrrba_report()
    if not base.passed:
        raise MrrbaFails(base.summary())
    M = family.source
    m = M.dim
    prec, succ = {}, {}
    for x in family.labels:
        pt = DenseTensor((m, m, m))
        st = DenseTensor((m, m, m))
        for u in range(m):
            col_u = family.column(x, u)
            for v in range(m):
                for p, cp in family.column(x, v):
                    for w, c in M.right_basis(u, p):
                        pt.add_at((u, v, w), cp * c)
                for p, cp in col_u:
                    for w, c in M.left_basis(p, v):
                        st.add_at((u, v, w), cp * c)
        prec[x] = pt
        succ[x] = st
    return MatchingDendriform(m, family.labels, prec, succ, basis_names=list(M.basis_names))


def check_mda_morphism(f: LinearMap, src: MatchingDendriform, dst: MatchingDendriform) -> CertificateReport:
    """Certify f(a op_x b) = f(a) op'_x f(b) for both operations and all labels."""
    if src.labels != dst.labels:
        raise LabelSetMismatch(f"{src.labels} vs {dst.labels}")
    if f.source_dim != src.dim or f.target_dim != dst.dim:
        raise ValueError("map shape incompatible with the two structures")
    report = CertificateReport("matching dendriform morphism")
    names = src.basis_names
    for x in src.labels:
        for i in range(src.dim):
            fi = f.column(i)
            for j in range(src.dim):
                fj = f.column(j)
                lhs = f.apply(_row_to_vec(src.prec_basis(x, i, j), src.dim))
                rhs = dst.prec_vec(x, fi, fj)
                report.record("prec-morphism", (x, names[i], names[j]), lhs, rhs)
                lhs = f.apply(_row_to_vec(src.succ_basis(x, i, j), src.dim))
                rhs = dst.succ_vec(x, fi, fj)
                report.record("succ-morphism", (x, names[i], names[j]), lhs, rhs)
    return report


def _row_to_vec(row, dim):
    v = [ZERO] * dim
    for k, c in row:
        v[k] = c
    return v


def _pair_index(dim, nlabels):
    """Basis order of D (x) K[X]: basis index major, label minor."""

    def idx(i, xi):
        return i * nlabels + xi

    return idx


def extend_to_labelled_dendriform(D: MatchingDendriform) -> MatchingDendriform:
    """Single-label dendriform structure on D (x) K[X]:
    (a(x)x) prec (b(x)y) = (a prec_y b)(x)x, (a(x)x) succ (b(x)y) = (a succ_x b)(x)y."""
    base = check_mda(D)
    if not base.passed:
        raise MdaFails(base.summary())
    q = len(D.labels)
    n = D.dim * q
    idx = _pair_index(D.dim, q)
    prec = DenseTensor((n, n, n))
    succ = DenseTensor((n, n, n))
    for xi, x in enumerate(D.labels):
        for yi, y in enumerate(D.labels):
            for (i, j, k), c in D.prec[y].nonzero_items():
                prec.add_at((idx(i, xi), idx(j, yi), idx(k, xi)), c)
            for (i, j, k), c in D.succ[x].nonzero_items():
                succ.add_at((idx(i, xi), idx(j, yi), idx(k, yi)), c)
    names = [f"{nm}@{x}" for nm in D.basis_names for x in D.labels]
    return MatchingDendriform(
        n, LabelSet(["*"]), {"*": prec}, {"*": succ}, basis_names=names
    )


GTriple = namedtuple("GTriple", ["algebra", "module", "family"])


def functor_g(D: MatchingDendriform) -> GTriple:
    """The matching relative Rota-Baxter structure carried by D (x) K[X]:
    bullet product (a(x)x).(b(x)y) = (a prec_y b)(x)x + (a succ_x b)(x)y,
    actions (a(x)x)._D b = a succ_x b and b._D (a(x)x) = b prec_x a, and the
    per-label inclusions id_x(a) = a(x)x."""
    base = check_mda(D)
    if not base.passed:
        raise MdaFails(base.summary())
    q = len(D.labels)
    d = D.dim
    n = d * q
    idx = _pair_index(d, q)
    mult = DenseTensor((n, n, n))
    for xi, x in enumerate(D.labels):
        for yi, y in enumerate(D.labels):
            for (i, j, k), c in D.prec[y].nonzero_items():
                mult.add_at((idx(i, xi), idx(j, yi), idx(k, xi)), c)
            for (i, j, k), c in D.succ[x].nonzero_items():
                mult.add_at((idx(i, xi), idx(j, yi), idx(k, yi)), c)
    names = [f"{nm}@{x}" for nm in D.basis_names for x in D.labels]
    algebra = Algebra(n, names, mult)
    left = DenseTensor((n, d, d))
    right = DenseTensor((d, n, d))
    for xi, x in enumerate(D.labels):
        for (i, u, v), c in D.succ[x].nonzero_items():
            left.add_at((idx(i, xi), u, v), c)
        for (u, i, v), c in D.prec[x].nonzero_items():
            right.add_at((u, idx(i, xi), v), c)
    module = Bimodule(algebra, d, left, right, basis_names=list(D.basis_names))
    maps = {}
    for xi, x in enumerate(D.labels):
        mat = DenseMatrix(n, d)
        for i in range(d):
            mat[idx(i, xi), i] = ONE
        maps[x] = LinearMap(d, n, mat)
    family = OperatorFamily(D.labels, module, maps)
    return GTriple(algebra, module, family)


def adjunction_transport(psi: LinearMap, D: MatchingDendriform, T: OperatorFamily):
    """Lift a dendriform morphism psi : D -> induced(T) to the operator level:
    P^psi(a(x)x) = P_x(psi(a)).  Returns (P^psi, morphism certificate from the
    bullet-product triple of D to T)."""
    induced = induce_dendriform(T)
    morph = check_mda_morphism(psi, D, induced)
    if not morph.passed:
        raise NotMdaMorphism(morph.summary())
    G = functor_g(D)
    q = len(D.labels)
    idx = _pair_index(D.dim, q)
    A = T.target
    mat = DenseMatrix(A.dim, D.dim * q)
    for xi, x in enumerate(D.labels):
        for i in range(D.dim):
            img = T.apply(x, psi.column(i))
            for k, val in enumerate(img):
                if val:
                    mat[k, idx(i, xi)] = val
    phi = LinearMap(D.dim * q, A.dim, mat)
    from matchalg.algebra import check_morphism_pair

    cert = check_morphism_pair(phi, psi, G.family, T)
    return phi, cert


def semidirect_embedding(D: MatchingDendriform):
    """Embed D into a matching Rota-Baxter algebra on (D (x) K[X]) + D with
    P_x(b(x)y, b') = (b'(x)x, 0) and iota(a) = (0, a).

    Returns (total_algebra, operator_family_on_adjoint, iota, certificate).
    """
    base = check_mda(D)
    if not base.passed:
        raise MdaFails(base.summary())
    G = functor_g(D)
    total = semidirect_product(G.algebra, G.module)
    adj = adjoint_bimodule(total)
    q = len(D.labels)
    d = D.dim
    first = d * q  # dimension of the D (x) K[X] block
    idx = _pair_index(d, q)
    maps = {}
    for xi, x in enumerate(D.labels):
        mat = DenseMatrix(total.dim, total.dim)
        for i in range(d):
            mat[idx(i, xi), first + i] = ONE
        maps[x] = LinearMap(total.dim, total.dim, mat)
    family = OperatorFamily(D.labels, adj, maps)
    iota_mat = DenseMatrix(total.dim, d)
    for i in range(d):
        iota_mat[first + i, i] = ONE
    iota = LinearMap(d, total.dim, iota_mat)
    cert = family.mrrba_report()
    combined = CertificateReport("semidirect embedding")
    combined.merge(cert)
    if cert.passed:
        induced = induce_dendriform(family)
        combined.merge(check_mda_morphism(iota, D, induced))
    return total, family, iota, combined
