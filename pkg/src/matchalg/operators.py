"""Operator families {P_x}, the matching relative Rota-Baxter identity, the
matching associative Yang-Baxter equation, and the constructions that produce
new operator families from old ones.
"""

from __future__ import annotations

from matchalg.algebra import (
    Algebra,
    Bimodule,
    LinearMap,
    coadjoint_bimodule,
    unit_vector,
)
from matchalg.errors import (
    AybeFails,
    InputNotRotaBaxter,
    MultiLabelNotSupported,
    NotCentral,
    NotSkewSymmetric,
    UnknownLabel,
)
from matchalg.linalg import ZERO, DenseMatrix, DenseTensor
from matchalg.report import CertificateReport, Failure


class LabelSet:
    """Nonempty ordered collection of distinct labels; the order fixes every
    label-tuple enumeration downstream."""

    def __init__(self, labels):
        self.labels = [str(x) for x in labels]
        if not self.labels:
            raise ValueError("label set must be nonempty")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        self._index = {x: i for i, x in enumerate(self.labels)}

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownLabel(str(label)) from None

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __eq__(self, other):
        return isinstance(other, LabelSet) and self.labels == other.labels

    def __hash__(self):
        return hash(tuple(self.labels))

    def __repr__(self):
        return f"LabelSet({self.labels})"


class OperatorFamily:
    """A collection {P_x : M -> A} of linear maps indexed by a label set."""

    def __init__(self, labels: LabelSet, source: Bimodule, maps):
        self.labels = labels
        self.source = source
        self.target = source.algebra
        self.maps = {str(x): m for x, m in maps.items()}
        for x in labels:
            if x not in self.maps:
                raise UnknownLabel(f"missing map for label {x}")
            lm = self.maps[x]
            if lm.source_dim != source.dim or lm.target_dim != self.target.dim:
                raise ValueError(f"map for label {x} has wrong shape")
        # sparse columns: label -> u -> [(k, coeff)]
        self._cols = {}
        for x in labels:
            mat = self.maps[x].matrix
            cols = [[] for _ in range(source.dim)]
            for i in range(mat.rows):
                base = i * mat.cols
                for u in range(mat.cols):
                    v = mat.entries[base + u]
                    if v:
                        cols[u].append((i, v))
            self._cols[x] = cols
        self._mrrba_report = None

    def column(self, label, u):
        """Sparse P_x(m_u) as [(k, coeff)]."""
        return self._cols[str(label)][u]

    def apply(self, label, vector):
        return self.maps[str(label)].apply(vector)

    def mrrba_report(self) -> CertificateReport:
        if self._mrrba_report is None:
            self._mrrba_report = check_mrrba(self)
        return self._mrrba_report

    def __repr__(self):
        return (
            f"OperatorFamily(labels={self.labels.labels}, "
            f"M dim {self.source.dim} -> A dim {self.target.dim})"
        )


class RMatrixFamily:
    """A collection of elements of A (x) A indexed by a label set."""

    def __init__(self, labels: LabelSet, algebra: Algebra, tensors):
        self.labels = labels
        self.algebra = algebra
        self.tensors = {str(x): t for x, t in tensors.items()}
        d = algebra.dim
        for x in labels:
            if x not in self.tensors:
                raise UnknownLabel(f"missing tensor for label {x}")
            if self.tensors[x].shape != (d, d):
                raise ValueError(f"tensor for label {x} must have shape [dim, dim]")

    def __repr__(self):
        return f"RMatrixFamily(labels={self.labels.labels}, dim={self.algebra.dim})"


def check_mrrba(family: OperatorFamily) -> CertificateReport:
    """Certify P_x(u).P_y(v) = P_x(u ._M P_y(v)) + P_y(P_x(u) ._M v) on all
    label pairs and basis pairs."""
    A = family.target
    M = family.source
    report = CertificateReport("matching relative Rota-Baxter identity")
    a, m = A.dim, M.dim
    mnames = M.basis_names
    for x in family.labels:
        for y in family.labels:
            for u in range(m):
                col_xu = family.column(x, u)
                for v in range(m):
                    col_yv = family.column(y, v)
                    lhs = [ZERO] * a
                    for p, cp in col_xu:
                        for s, cs in col_yv:
                            for k, c in A.product_basis(p, s):
                                lhs[k] += cp * cs * c
                    rhs = [ZERO] * a
                    # P_x(u ._M P_y(v))
                    for s, cs in col_yv:
                        for j, c in M.right_basis(u, s):
                            for k, ck in family.column(x, j):
                                rhs[k] += cs * c * ck
                    # P_y(P_x(u) ._M v)
                    for p, cp in col_xu:
                        for j, c in M.left_basis(p, v):
                            for k, ck in family.column(y, j):
                                rhs[k] += cp * c * ck
                    report.record(
                        "matching-rota-baxter", (x, y, mnames[u], mnames[v]), lhs, rhs
                    )
    return report


def relabel(family: OperatorFamily, tau) -> OperatorFamily:
    """Precompose the label assignment with a set map tau : X -> X."""
    maps = {}
    for x in family.labels:
        if x not in tau:
            raise UnknownLabel(f"tau undefined on {x}")
        target = str(tau[x])
        if target not in family.maps:
            raise UnknownLabel(f"tau({x}) = {target} is not a label")
        maps[x] = family.maps[target]
    return OperatorFamily(family.labels, family.source, maps)


def _single_label_family(module: Bimodule, operator: LinearMap) -> OperatorFamily:
    return OperatorFamily(LabelSet(["*"]), module, {"*": operator})


def is_relative_rota_baxter(module: Bimodule, operator: LinearMap) -> CertificateReport:
    """Single-operator relative Rota-Baxter certificate (the |X| = 1 case)."""
    return check_mrrba(_single_label_family(module, operator))


def family_from_rb_pair(module: Bimodule, operator: LinearMap) -> OperatorFamily:
    """From one relative Rota-Baxter operator P, the two-label family {P, -P}."""
    base = is_relative_rota_baxter(module, operator)
    if not base.passed:
        raise InputNotRotaBaxter(base.summary())
    return OperatorFamily(
        LabelSet(["+", "-"]), module, {"+": operator, "-": operator.scale(-1)}
    )


def family_from_central_elements(module: Bimodule, operator: LinearMap, elements) -> OperatorFamily:
    """P_x(u) = P(a_x ._M u) for central elements a_x of the algebra."""
    A = module.algebra
    base = is_relative_rota_baxter(module, operator)
    if not base.passed:
        raise InputNotRotaBaxter(base.summary())
    labels = LabelSet(list(elements.keys()))
    maps = {}
    for x in labels:
        a_x = [e for e in elements[x]]
        if len(a_x) != A.dim:
            raise ValueError(f"element for label {x} has wrong dimension")
        for b in range(A.dim):
            eb = unit_vector(A.dim, b)
            if A.product(a_x, eb) != A.product(eb, a_x):
                raise NotCentral(f"element for label {x} fails at basis {A.basis_names[b]}")
        # matrix of u -> P(a_x ._M u)
        mat = DenseMatrix(A.dim, module.dim)
        for u in range(module.dim):
            w = module.left_act(a_x, unit_vector(module.dim, u))
            img = operator.apply(w)
            for k, val in enumerate(img):
                if val:
                    mat[k, u] = val
        maps[x] = LinearMap(module.dim, A.dim, mat)
    return OperatorFamily(labels, module, maps)


def _aybe_tensor(R: RMatrixFamily, x, y):
    """Sparse coefficients of r^y_13 r^x_12 - r^x_12 r^y_23 + r^y_23 r^x_13
    in A (x) A (x) A, via the three-slot expansion."""
    A = R.algebra
    tx = list(R.tensors[str(x)].nonzero_items())
    ty = list(R.tensors[str(y)].nonzero_items())
    out = {}
    # sum r^y_(1).r^x_(1) (x) r^x_(2) (x) r^y_(2)
    for (i, c3), vy in ty:
        for (k, c2), vx in tx:
            for c1, c in A.product_basis(i, k):
                key = (c1, c2, c3)
                out[key] = out.get(key, ZERO) + vy * vx * c
    # - sum r^x_(1) (x) r^x_(2).r^y_(1) (x) r^y_(2)
    for (c1, k), vx in tx:
        for (l, c3), vy in ty:
            for c2, c in A.product_basis(k, l):
                key = (c1, c2, c3)
                out[key] = out.get(key, ZERO) - vx * vy * c
    # + sum r^x_(1) (x) r^y_(1) (x) r^y_(2).r^x_(2)
    for (c1, k), vx in tx:
        for (c2, l), vy in ty:
            for c3, c in A.product_basis(l, k):
                key = (c1, c2, c3)
                out[key] = out.get(key, ZERO) + vx * vy * c
    return out


def check_matching_aybe(R: RMatrixFamily) -> CertificateReport:
    """Certify the matching associative Yang-Baxter equation for every ordered
    label pair."""
    A = R.algebra
    names = A.basis_names
    report = CertificateReport("matching associative Yang-Baxter equation")
    for x in R.labels:
        for y in R.labels:
            report.checked += A.dim**3
            residue = _aybe_tensor(R, x, y)
            for (c1, c2, c3), val in sorted(residue.items()):
                if val:
                    report.failures.append(
                        Failure(
                            "matching-aybe",
                            (x, y, names[c1], names[c2], names[c3]),
                            (val,),
                            (ZERO,),
                        )
                    )
    return report


def check_skew_symmetric(R: RMatrixFamily) -> CertificateReport:
    """Certify r^x = -sigma(r^x) entrywise for every label."""
    names = R.algebra.basis_names
    report = CertificateReport("skew-symmetry")
    for x in R.labels:
        t = R.tensors[str(x)]
        d = R.algebra.dim
        for i in range(d):
            for j in range(i, d):
                report.record(
                    "skew-symmetry", (x, names[i], names[j]), [t[i, j]], [-t[j, i]]
                )
    return report


def operators_from_rmatrix(R: RMatrixFamily, module: Bimodule) -> OperatorFamily:
    """P_x(u) = sum r^x_(1) ._M u ._M r^x_(2).

    The sandwich lands in the module, so it only defines maps into the algebra
    when the module lives on the algebra's own underlying space (the adjoint
    bimodule and its degenerations); that is the setting in which the matching
    Rota-Baxter identity is provable from the Yang-Baxter equation, and the
    construction requires it.
    """
    A = R.algebra
    if module.algebra != A:
        raise ValueError("module is not over the r-matrix algebra")
    if module.dim != A.dim:
        raise ValueError(
            "the sandwich construction needs the module to live on the "
            "algebra's underlying space (e.g. the adjoint bimodule)"
        )
    aybe = check_matching_aybe(R)
    if not aybe.passed:
        raise AybeFails(aybe.summary())
    maps = {}
    for x in R.labels:
        mat = DenseMatrix(A.dim, module.dim)
        for (i, j), val in R.tensors[str(x)].nonzero_items():
            for u in range(module.dim):
                for p, c1 in module.right_basis(u, j):
                    for k, c2 in module.left_basis(i, p):
                        mat.add_at(k, u, val * c1 * c2)
        maps[x] = LinearMap(module.dim, A.dim, mat)
    return OperatorFamily(R.labels, module, maps)


def operators_on_dual(R: RMatrixFamily) -> OperatorFamily:
    """For skew-symmetric solutions: P_x(alpha) = sum alpha(r^x_(2)) r^x_(1)
    on the coadjoint bimodule."""
    skew = check_skew_symmetric(R)
    if not skew.passed:
        raise NotSkewSymmetric(skew.summary())
    aybe = check_matching_aybe(R)
    if not aybe.passed:
        raise AybeFails(aybe.summary())
    A = R.algebra
    dual = coadjoint_bimodule(A)
    maps = {}
    for x in R.labels:
        t = R.tensors[str(x)]
        mat = DenseMatrix(A.dim, A.dim)
        alt = DenseMatrix(A.dim, A.dim)
        for (i, j), val in t.nonzero_items():
            # P_x(delta_u) = sum_i T[i][u] e_i, and by skew-symmetry equally
            # -sum_j T[u][j] e_j; both are materialized and compared.
            mat.add_at(i, j, val)
            alt.add_at(j, i, -val)
        if mat != alt:
            raise NotSkewSymmetric(f"internal consistency failed for label {x}")
        maps[x] = LinearMap(A.dim, A.dim, mat)
    return OperatorFamily(R.labels, dual, maps)


def star_product(family: OperatorFamily):
    """For a single-label relative Rota-Baxter operator P, the algebra
    u * v = P(u)._M v + u._M P(v) on the module, together with the induced
    bimodule on the original algebra's space:

        lbar(u, a) = P(u).a - P(u ._M a),   rbar(a, u) = a.P(u) - P(a ._M u).

    Returns (star_algebra, bimodule_on_A).
    """
    if len(family.labels) != 1:
        raise MultiLabelNotSupported("star product needs exactly one label")
    base = family.mrrba_report()
    if not base.passed:
        raise InputNotRotaBaxter(base.summary())
    label = family.labels[0]
    A = family.target
    M = family.source
    a, m = A.dim, M.dim
    mult = DenseTensor((m, m, m))
    for u in range(m):
        col_u = family.column(label, u)
        for v in range(m):
            for p, cp in col_u:
                for w, c in M.left_basis(p, v):
                    mult.add_at((u, v, w), cp * c)
            for s, cs in family.column(label, v):
                for w, c in M.right_basis(u, s):
                    mult.add_at((u, v, w), cs * c)
    star = Algebra(m, list(M.basis_names), mult)
    left = DenseTensor((m, a, a))
    right = DenseTensor((a, m, a))
    pmat = family.maps[label].matrix
    for u in range(m):
        col_u = family.column(label, u)
        for i in range(a):
            for p, cp in col_u:
                for j, c in A.product_basis(p, i):
                    left.add_at((u, i, j), cp * c)
                for j, c in A.product_basis(i, p):
                    right.add_at((i, u, j), cp * c)
            for p, c in M.right_basis(u, i):
                for j in range(a):
                    v = pmat[j, p]
                    if v:
                        left.add_at((u, i, j), -c * v)
            for p, c in M.left_basis(i, u):
                for j in range(a):
                    v = pmat[j, p]
                    if v:
                        right.add_at((i, u, j), -c * v)
    module_on_a = Bimodule(star, a, left, right, basis_names=list(A.basis_names))
    return star, module_on_a
