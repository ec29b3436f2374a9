"""Finite-dimensional algebras, coalgebras and Hopf algebras by structure constants.

Elements are sparse dicts {basis index: Cyclo}.  Multiplication tensors are
stored as ``mult[i][j] = {k: c}`` meaning e_i e_j = sum_k c e_k, comultiplication
as ``comult[k] = {(i, j): c}`` meaning Delta(e_k) = sum c e_i (x) e_j.
"""

from __future__ import annotations

from .linalg import LinAlgError, Matrix, inverse, sparse_solve
from .report import CheckReport
from .scalar import Cyclo


class StructureError(ValueError):
    """Shape or consistency error in supplied structure constants."""


# -- sparse element helpers --------------------------------------------------


def vec_of(d: dict, dim: int, order: int) -> list:
    zero = Cyclo.zero(order)
    out = [zero] * dim
    for k, v in d.items():
        out[k] = v
    return out


def dict_of(vec: list) -> dict:
    return {i: v for i, v in enumerate(vec) if not v.is_zero()}


def add_into(acc: dict, key, value: Cyclo) -> None:
    cur = acc.get(key)
    nv = value if cur is None else cur + value
    if nv.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = nv


class AlgebraData:
    """Associative unital algebra on a finite basis."""

    def __init__(self, dim: int, mult, unit: dict, order: int, name: str = "A",
                 generators: list[int] | None = None):
        if len(mult) != dim or any(len(r) != dim for r in mult):
            raise StructureError("multiplication tensor has wrong shape")
        self.dim = dim
        self.mult = mult
        self.unit = dict(unit)
        self.order = order
        self.name = name
        self.generators = generators

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for i, ca in a.items():
            row = self.mult[i]
            for j, cb in b.items():
                c = ca * cb
                if c.is_zero():
                    continue
                for k, m in row[j].items():
                    add_into(out, k, c * m)
        return out

    def unit_vec(self) -> list:
        return vec_of(self.unit, self.dim, self.order)

    def left_mult_matrix(self, a: dict) -> Matrix:
        zero = Cyclo.zero(self.order)
        cols = []
        for j in range(self.dim):
            col = [zero] * self.dim
            for i, ca in a.items():
                for k, m in self.mult[i][j].items():
                    col[k] = col[k] + ca * m
            cols.append(col)
        return Matrix.from_cols(cols, self.order, ambient=self.dim)

    def right_mult_matrix(self, a: dict) -> Matrix:
        zero = Cyclo.zero(self.order)
        cols = []
        for i in range(self.dim):
            col = [zero] * self.dim
            for j, ca in a.items():
                for k, m in self.mult[i][j].items():
                    col[k] = col[k] + ca * m
            cols.append(col)
        return Matrix.from_cols(cols, self.order, ambient=self.dim)

    def generator_indices(self) -> list[int]:
        if self.generators is not None:
            return self.generators
        return list(range(self.dim))

    def verify(self) -> CheckReport:
        report = CheckReport("algebra %s" % self.name)
        bad = 0
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult[i][j]
                for k in range(self.dim):
                    left = self.multiply(ij, {k: Cyclo.one(self.order)})
                    right = self.multiply({i: Cyclo.one(self.order)}, self.mult[j][k])
                    if left != right:
                        bad += 1
        report.add("associativity m(m x id) = m(id x m)", bad == 0, bad)
        bad = 0
        for i in range(self.dim):
            e = {i: Cyclo.one(self.order)}
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                bad += 1
        report.add("unit laws", bad == 0, bad)
        return report


class HopfAlgebraData:
    """Hopf algebra: algebra + comultiplication, counit, antipode."""

    def __init__(self, alg: AlgebraData, comult, counit: list,
                 antipode: Matrix | None = None, name: str = "H"):
        if len(comult) != alg.dim or len(counit) != alg.dim:
            raise StructureError("coalgebra tensors have wrong shape")
        self.alg = alg
        self.comult = comult
        self.counit = list(counit)
        self.name = name
        if antipode is None:
            antipode = solve_antipode(alg, comult, counit)
        self.antipode = antipode
        try:
            self.antipode_inv = inverse(antipode)
        except LinAlgError as exc:
            raise StructureError("antipode matrix is singular") from exc

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def order(self) -> int:
        return self.alg.order

    def counit_of(self, a: dict) -> Cyclo:
        out = Cyclo.zero(self.order)
        for i, c in a.items():
            out = out + c * self.counit[i]
        return out

    def comult_of(self, a: dict) -> dict:
        """Delta(a) as a sparse dict keyed by (i, j)."""
        out: dict = {}
        for k, c in a.items():
            for ij, m in self.comult[k].items():
                add_into(out, ij, c * m)
        return out

    def antipode_of(self, a: dict) -> dict:
        return dict_of(self.antipode.apply(vec_of(a, self.dim, self.order)))

    def antipode_inv_of(self, a: dict) -> dict:
        return dict_of(self.antipode_inv.apply(vec_of(a, self.dim, self.order)))

    def verify(self) -> CheckReport:
        return verify_hopf(self)

    def dual(self, cop: bool = False) -> "HopfAlgebraData":
        return dual_hopf(self, cop=cop)


def solve_antipode(alg: AlgebraData, comult, counit) -> Matrix:
    """Solve m(S (x) id) Delta = u eps for S; the right axiom is checked later.

    The antipode of a finite-dimensional Hopf algebra is unique when it
    exists, so a unique-solution solve either finds it or raises.
    """
    dim, order = alg.dim, alg.order
    unit_vec = alg.unit_vec()
    # unknowns: S[r][i] (entry of column i at row r), flattened r*dim + i
    rows: list[dict] = []
    rhs: list[Cyclo] = []
    for k in range(dim):
        # sum over Delta(e_k) = sum c e_i (x) e_j: c * S(e_i) e_j = eps(e_k) 1
        for t in range(dim):  # coordinate t of the output
            row: dict = {}
            for (i, j), c in comult[k].items():
                # S(e_i) = sum_r S[r][i] e_r; e_r e_j contributes mult[r][j]
                for r in range(dim):
                    m = alg.mult[r][j].get(t)
                    if m is not None:
                        add_into(row, r * dim + i, c * m)
            rows.append(row)
            rhs.append(counit[k] * unit_vec[t])
    try:
        sol = sparse_solve(rows, [rhs], dim * dim, order, require_unique=True)[0]
    except LinAlgError as exc:
        raise StructureError("antipode equation has no unique solution") from exc
    data = [[sol[r * dim + i] for i in range(dim)] for r in range(dim)]
    return Matrix(dim, dim, data, order)


def verify_hopf(h: HopfAlgebraData) -> CheckReport:
    """Itemised exact check of every Hopf axiom family."""
    alg = h.alg
    dim, order = alg.dim, alg.order
    one = Cyclo.one(order)
    report = CheckReport("hopf %s" % h.name)
    report.merge(alg.verify())

    # coassociativity: (Delta x id) Delta = (id x Delta) Delta
    bad = 0
    for k in range(dim):
        left: dict = {}
        right: dict = {}
        for (i, j), c in h.comult[k].items():
            for (a, b), c2 in h.comult[i].items():
                add_into(left, (a, b, j), c * c2)
            for (a, b), c2 in h.comult[j].items():
                add_into(right, (i, a, b), c * c2)
        if left != right:
            bad += 1
    report.add("coassociativity", bad == 0, bad)

    # counit axioms
    bad = 0
    for k in range(dim):
        lvec: dict = {}
        rvec: dict = {}
        for (i, j), c in h.comult[k].items():
            add_into(lvec, j, c * h.counit[i])
            add_into(rvec, i, c * h.counit[j])
        target = {k: one}
        if lvec != target or rvec != target:
            bad += 1
    report.add("counit axioms", bad == 0, bad)

    # Delta is an algebra map
    bad = 0
    for i in range(dim):
        for j in range(dim):
            lhs = h.comult_of(alg.mult[i][j])
            rhs: dict = {}
            for (a, b), c in h.comult[i].items():
                for (x, y), d in h.comult[j].items():
                    c2 = c * d
                    for p, m1 in alg.mult[a][x].items():
                        for q, m2 in alg.mult[b][y].items():
                            add_into(rhs, (p, q), c2 * m1 * m2)
            if lhs != rhs:
                bad += 1
    report.add("comultiplication is an algebra map", bad == 0, bad)
    unit_delta = h.comult_of(alg.unit)
    expected: dict = {}
    for i, c in alg.unit.items():
        for j, d in alg.unit.items():
            add_into(expected, (i, j), c * d)
    report.add("Delta(1) = 1 x 1", unit_delta == expected,
               0 if unit_delta == expected else 1)

    # counit is an algebra map
    bad = 0
    for i in range(dim):
        for j in range(dim):
            lhs = h.counit_of(alg.mult[i][j])
            if lhs != h.counit[i] * h.counit[j]:
                bad += 1
    if h.counit_of(alg.unit) != one:
        bad += 1
    report.add("counit is an algebra map", bad == 0, bad)

    # antipode axioms, both sides
    bad_l = bad_r = 0
    for k in range(dim):
        left: dict = {}
        right: dict = {}
        for (i, j), c in h.comult[k].items():
            si = h.antipode_of({i: one})
            sj = h.antipode_of({j: one})
            for t, v in alg.multiply(si, {j: one}).items():
                add_into(left, t, c * v)
            for t, v in alg.multiply({i: one}, sj).items():
                add_into(right, t, c * v)
        target = dict_of([h.counit[k] * u for u in alg.unit_vec()])
        if left != target:
            bad_l += 1
        if right != target:
            bad_r += 1
    report.add("antipode axiom m(S x id)Delta = u eps", bad_l == 0, bad_l)
    report.add("antipode axiom m(id x S)Delta = u eps", bad_r == 0, bad_r)

    ss = h.antipode * h.antipode_inv
    ok = ss == Matrix.identity(dim, order)
    report.add("S S^-1 = id", ok, 0 if ok else 1)

    # consequence: S is an algebra anti-homomorphism
    bad = 0
    for i in range(dim):
        for j in range(dim):
            lhs = h.antipode_of(alg.mult[i][j])
            rhs = alg.multiply(h.antipode_of({j: one}), h.antipode_of({i: one}))
            if lhs != rhs:
                bad += 1
    report.add("S(ab) = S(b)S(a)", bad == 0, bad)
    return report


def dual_hopf(h: HopfAlgebraData, cop: bool = False) -> HopfAlgebraData:
    """Dual Hopf algebra on the dual basis; with ``cop`` the coproduct is flipped.

    mult of H* is the transpose of Delta of H, Delta of H* the transpose of
    mult, unit is the counit, counit is evaluation at 1, antipode is S^T
    (S^-T for the cop variant, which is again a Hopf algebra).
    """
    dim, order = h.dim, h.order
    mult = [[dict() for _ in range(dim)] for _ in range(dim)]
    for k in range(dim):
        for (i, j), c in h.comult[k].items():
            add_into(mult[i][j], k, c)
    unit = {i: h.counit[i] for i in range(dim) if not h.counit[i].is_zero()}
    alg = AlgebraData(dim, mult, unit, order, name=h.name + ("*cop" if cop else "*"))
    comult = [dict() for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k, c in h.alg.mult[i][j].items():
                key = (j, i) if cop else (i, j)
                add_into(comult[k], key, c)
    counit = h.alg.unit_vec()
    s = h.antipode_inv.transpose() if cop else h.antipode.transpose()
    return HopfAlgebraData(alg, comult, counit, antipode=s, name=alg.name)


def harpoon(h: HopfAlgebraData, elem: dict, gamma: list) -> list:
    """Left action of H on H*: < h harpoon gamma, t > = < gamma, S^-1(h) t >."""
    lm = h.alg.left_mult_matrix(h.antipode_inv_of(elem))
    return lm.transpose().apply(gamma)


def left_hit_matrix(h: HopfAlgebraData, elem: dict) -> Matrix:
    """Matrix of gamma -> (elem -> gamma) with <h -> gamma, t> = <gamma, t h>."""
    return h.alg.right_mult_matrix(elem).transpose()


def harpoon_matrix(h: HopfAlgebraData, elem: dict) -> Matrix:
    return h.alg.left_mult_matrix(h.antipode_inv_of(elem)).transpose()


def group_algebra(table: list[list[int]], order: int,
                  name: str = "kG") -> HopfAlgebraData:
    """Group algebra as a Hopf algebra from a multiplication table.

    ``table[i][j]`` is the index of g_i g_j; index 0 need not be the identity.
    """
    n = len(table)
    identity = _group_identity(table)
    one = Cyclo.one(order)
    mult = [[{table[i][j]: one} for j in range(n)] for i in range(n)]
    alg = AlgebraData(n, mult, {identity: one}, order, name=name,
                      generators=group_generators(table))
    comult = [{(k, k): one} for k in range(n)]
    counit = [one] * n
    inv = _group_inverses(table)
    zero = Cyclo.zero(order)
    s = Matrix(n, n, [[one if i == inv[j] else zero for j in range(n)]
                      for i in range(n)], order)
    return HopfAlgebraData(alg, comult, counit, antipode=s, name=name)


def _group_identity(table: list[list[int]]) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            return e
    raise StructureError("multiplication table has no identity")


def _group_inverses(table: list[list[int]]) -> list[int]:
    n = len(table)
    e = _group_identity(table)
    inv = [-1] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == e:
                inv[i] = j
                break
        if inv[i] < 0:
            raise StructureError("element %d has no inverse" % i)
    return inv


def group_closure(table: list[list[int]], gens: list[int]) -> set[int]:
    e = _group_identity(table)
    closure = {e}
    changed = True
    while changed:
        changed = False
        for a in sorted(closure):
            for g in gens:
                for c in (table[a][g], table[g][a]):
                    if c not in closure:
                        closure.add(c)
                        changed = True
    return closure


def group_generators(table: list[list[int]]) -> list[int]:
    """A small generating set of the group, greedily chosen; deterministic."""
    n = len(table)
    e = _group_identity(table)
    gens: list[int] = []
    covered = {e}
    for i in range(n):
        if i in covered:
            continue
        gens.append(i)
        covered = group_closure(table, gens)
        if len(covered) == n:
            break
    return gens if gens else [e]


def group_exponent(table: list[list[int]]) -> int:
    n = len(table)
    e = _group_identity(table)
    from .scalar import lcm
    exp = 1
    for i in range(n):
        k, acc = 1, i
        while acc != e:
            acc = table[acc][i]
            k += 1
        exp = lcm(exp, k)
    return exp


def element_order(table: list[list[int]], i: int) -> int:
    e = _group_identity(table)
    k, acc = 1, i
    while acc != e:
        acc = table[acc][i]
        k += 1
    return k
