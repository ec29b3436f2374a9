"""Dynamical data and constructive twist extraction.

The adjunction between restriction Rep(H) -> Rep(A) and a functor
T: Rep(A) -> K-modules is realised by an explicit family of linear
bijections xi: Hom_K(X (x) T(V), T(W)) -> Hom_A(R(X) (x) V, W).  The forward
direction factors as (curry, Galois-transport reshape, a pointwise station
Hom(T(V), T(W)) -> Hom(V, W), evaluation at 1); with the station folded in,
xi(f)(x (x) v) = station(f(x (x) -))(v).  The inverse is obtained by an exact
linear solve whose unique solvability doubles as the injectivity certificate.

Everything downstream is certified rather than assumed: normalisation,
naturality, the element form of the natural transformations, invertibility,
and finally the twist axioms through the independent verifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .comod import (
    ComoduleAlgebraData,
    canonical_map,
    coinvariants,
    corestrict_coaction,
    is_h_simple,
    subhopf_comodule,
)
from .hopf import HopfAlgebraData, StructureError, add_into, group_algebra
from .linalg import LinAlgError, Matrix, kron, solve, sparse_solve
from .monomial import (
    MonomialHopfSpec,
    ValidationError,
    coset_data,
    group_sub_embedding,
    make_monomial_hopf,
    make_monomial_comodule,
    make_t_module,
    monomial_sub_embedding,
    t_on_morphism,
    verify_coset_basis,
)
from .rep import (
    ModuleRep,
    SubHopfEmbedding,
    character_module,
    regular_module,
    restrict_module,
    tensor_action,
    tensor_reps,
    trivial_module,
)
from .report import CheckReport
from .scalar import Cyclo, lcm
from .twist import (
    GaugeElement,
    TwistElement,
    invert_element,
    left_mult_matrix_tensor,
    verify_twist,
)


class PipelineError(RuntimeError):
    """The constructive hypothesis failed on a concrete instance."""


# -- the engine ----------------------------------------------------------------


class AdjunctionEngine:
    """xi and its inverse for a concrete dynamical datum.

    Parameters: the Hopf algebra ``h``; the twist base as a Hopf-subalgebra
    embedding ``embed_b`` (a group algebra kB for the monomial family); the
    comodule algebra ``k``; ``t_functor`` mapping A-modules to K-modules
    (with ``t_morphism`` on maps); and ``station(v, w)`` giving the pointwise
    linear map from flattened Hom(T(V), T(W)) to flattened Hom(V, W).
    """

    def __init__(self, h: HopfAlgebraData, embed_b: SubHopfEmbedding,
                 k: ComoduleAlgebraData, t_functor, t_morphism, station):
        self.h = h
        self.embed_b = embed_b
        self.kb = embed_b.small
        self.k = k
        self.t_functor = t_functor
        self.t_morphism = t_morphism
        self.station = station
        self.order = h.order
        self._t_cache: list[tuple[ModuleRep, ModuleRep]] = []

    # T with caching by module identity (strong refs keep id() stable)
    def t(self, v: ModuleRep) -> ModuleRep:
        for held, tv in self._t_cache:
            if held is v:
                return tv
        tv = self.t_functor(v)
        self._t_cache.append((v, tv))
        return tv

    def restrict(self, x: ModuleRep) -> ModuleRep:
        return restrict_module(self.embed_b, x)

    def a_tensor(self, v: ModuleRep, w: ModuleRep) -> ModuleRep:
        return tensor_reps(self.kb, v, w)

    # -- forward xi -------------------------------------------------------

    def xi_forward(self, x: ModuleRep, v: ModuleRep, w: ModuleRep,
                   f: Matrix) -> Matrix:
        """xi(f)(x (x) v) = station(f(x (x) -))(v); output dim W x (dim X * dim V)."""
        tv, tw = self.t(v), self.t(w)
        st = self.station(v, w)
        order = self.order
        zero = Cyclo.zero(order)
        out = [[zero] * (x.dim * v.dim) for _ in range(w.dim)]
        for xi in range(x.dim):
            # flatten Theta_x = f(x_i (x) -): rows tw, cols tv
            flat = [zero] * (tw.dim * tv.dim)
            for r in range(tw.dim):
                base = r * tv.dim
                frow = f.data[r]
                off = xi * tv.dim
                for ccol in range(tv.dim):
                    flat[base + ccol] = frow[off + ccol]
            small = st.apply(flat)
            for wt in range(w.dim):
                for vi in range(v.dim):
                    out[wt][xi * v.dim + vi] = small[wt * v.dim + vi]
        return Matrix(w.dim, x.dim * v.dim, out, order)

    # -- inverse xi by exact solve -----------------------------------------

    def xi_inverse(self, x: ModuleRep, v: ModuleRep, w: ModuleRep,
                   fprime: Matrix) -> Matrix:
        """Unique K-linear f with xi(f) = fprime; unique solvability certified."""
        tv, tw = self.t(v), self.t(w)
        order = self.order
        source = tensor_action(self.k, x, tv)
        rows: list[dict] = []
        rhs: list[Cyclo] = []
        ncols = tw.dim * source.dim
        gens = self.k.alg.generator_indices()
        for g in gens:
            sm = source.action[g]
            tm = tw.action[g]
            sm_cols = _sparse_cols_of(sm)
            tm_cols = _sparse_cols_of(tm)
            for i in range(tw.dim):
                for j in range(source.dim):
                    row: dict = {}
                    for kk, c in sm_cols[j]:
                        add_into(row, i * source.dim + kk, c)
                    for kk in range(tw.dim):
                        cval = tm.data[i][kk]
                        if not cval.is_zero():
                            add_into(row, kk * source.dim + j, -cval)
                    if row:
                        rows.append(row)
                        rhs.append(Cyclo.zero(order))
        st = self.station(v, w)
        # station constraint: st . flatten(f(x_i (x) -)) = fprime(x_i (x) -)
        for xi in range(x.dim):
            for out_idx in range(w.dim * v.dim):
                row = {}
                for hcol in range(tw.dim * tv.dim):
                    cval = st.data[out_idx][hcol]
                    if not cval.is_zero():
                        r, ccol = divmod(hcol, tv.dim)
                        add_into(row, r * source.dim + xi * tv.dim + ccol, cval)
                wt, vi = divmod(out_idx, v.dim)
                rows.append(row)
                rhs.append(fprime.data[wt][xi * v.dim + vi])
        try:
            sol = sparse_solve(rows, [rhs], ncols, order, require_unique=True)[0]
        except LinAlgError as exc:
            raise PipelineError(
                "xi is not uniquely invertible on (%s, %s, %s): %s"
                % (x.name, v.name, w.name, exc)) from exc
        data = [[sol[i * source.dim + j] for j in range(source.dim)]
                for i in range(tw.dim)]
        return Matrix(tw.dim, source.dim, data, order)

    def xi_inverse_id(self, x: ModuleRep, m: ModuleRep) -> tuple[Matrix, ModuleRep]:
        """xi^-1(id) on (X, M): the map X (x) T(M) -> T(R(X) (x) M)."""
        n = self.a_tensor(self.restrict(x), m)
        ident = Matrix.identity(x.dim * m.dim, self.order)
        return self.xi_inverse(x, m, n, ident), n

    # -- element form of xi^-1(id) ----------------------------------------

    def obstruction_element(self, certify: bool = True):
        """The natural family xi^-1(id) as an element of End(slices) (x) H (x) A.

        Solved once on regular modules; naturality makes it multiplication by
        an element, which is certified by independent re-solves on small
        non-regular instances.
        """
        h_reg = regular_module(self.h.alg, name="H_reg")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        f, n_mod = self.xi_inverse_id(h_reg, a_reg)
        t_a = self.t(a_reg)
        nslices = t_a.dim // a_reg.dim
        u_h = _unit_index(self.h.alg)
        u_a = _unit_index(self.kb.alg)
        xi_elem: dict = {}
        # row (s, (h, a)); col (u_h, (kslice, u_a))
        row_dim = self.h.dim * self.kb.dim
        for s in range(nslices):
            for hh in range(self.h.dim):
                for aa in range(self.kb.dim):
                    r = s * row_dim + hh * self.kb.dim + aa
                    for kslice in range(nslices):
                        ccol = u_h * t_a.dim + kslice * self.kb.dim + u_a
                        val = f.data[r][ccol]
                        if not val.is_zero():
                            xi_elem[(s, kslice, hh, aa)] = val
        if certify:
            rebuilt = self.contract_obstruction(xi_elem, h_reg, a_reg)
            if rebuilt != f:
                raise PipelineError(
                    "xi^-1(id) is not multiplication by an element on regulars")
            for x, m in self._certification_pairs():
                direct, _ = self.xi_inverse_id(x, m)
                if self.contract_obstruction(xi_elem, x, m) != direct:
                    raise PipelineError(
                        "element certificate failed on (%s, %s)" % (x.name, m.name))
        return xi_elem, nslices

    def contract_obstruction(self, xi_elem: dict, x: ModuleRep,
                             m: ModuleRep) -> Matrix:
        """Apply the element: x (x) v_k (x) m -> sum v_s (x) h.x (x) a.m."""
        order = self.order
        nslices = self.t(m).dim // m.dim
        rows = nslices * x.dim * m.dim
        cols = x.dim * nslices * m.dim
        zero = Cyclo.zero(order)
        data = [[zero] * cols for _ in range(rows)]
        x_cols = [_sparse_cols_of(a) for a in x.action]
        m_cols = [_sparse_cols_of(a) for a in m.action]
        for (s, kslice, hh, aa), c in xi_elem.items():
            xc = x_cols[hh]
            mc = m_cols[aa]
            for xi in range(x.dim):
                for xo, cx in xc[xi]:
                    for mi in range(m.dim):
                        for mo, cm in mc[mi]:
                            r = s * (x.dim * m.dim) + xo * m.dim + mo
                            ccol = xi * (nslices * m.dim) + kslice * m.dim + mi
                            data[r][ccol] = data[r][ccol] + c * cx * cm
        return Matrix(rows, cols, data, order)

    def _certification_pairs(self):
        pairs = []
        triv_h = trivial_module(self.h, name="triv_H")
        triv_a = trivial_module(self.kb, name="triv_A")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        pairs.append((triv_h, triv_a))
        pairs.append((triv_h, a_reg))
        chi_mod = self._h_character_module()
        if chi_mod is not None:
            pairs.append((chi_mod, a_reg))
        return pairs

    def _h_character_module(self):
        return None

    # -- the twist ----------------------------------------------------------

    def compute_i(self, x: ModuleRep, y: ModuleRep, m: ModuleRep,
                  xi_elem=None) -> Matrix:
        """I_{X,Y,M} = xi( xi^-1(id)_{X, RY (x) M} o (id_X (x) xi^-1(id)_{Y,M}) )."""
        if xi_elem is None:
            f_y, n_y = self.xi_inverse_id(y, m)
            f_x, _ = self.xi_inverse_id(x, n_y)
        else:
            n_y = self.a_tensor(self.restrict(y), m)
            f_y = self.contract_obstruction(xi_elem, y, m)
            f_x = self.contract_obstruction(xi_elem, x, n_y)
        composite = f_x * kron(Matrix.identity(x.dim, self.order), f_y)
        # forward xi on (X (x) Y, M): slice contraction via the station
        xy_dim = x.dim * y.dim
        vdim = m.dim
        tv = self.t(m)
        txy_m = composite.rows  # dim T(R(X (x) Y) (x) M)
        n_out = self.a_tensor(self.a_tensor(self.restrict(x), self.restrict(y)), m)
        st = self.station(m, n_out)
        order = self.order
        zero = Cyclo.zero(order)
        out = [[zero] * (xy_dim * vdim) for _ in range(n_out.dim)]
        for xyi in range(xy_dim):
            flat = [zero] * (composite.rows * tv.dim)
            for r in range(composite.rows):
                base = r * tv.dim
                off = xyi * tv.dim
                crow = composite.data[r]
                for ccol in range(tv.dim):
                    flat[base + ccol] = crow[off + ccol]
            small = st.apply(flat)
            for no in range(n_out.dim):
                for vi in range(vdim):
                    out[no][xyi * vdim + vi] = small[no * vdim + vi]
        return Matrix(n_out.dim, xy_dim * vdim, out, order)

    def s_base(self) -> ComoduleAlgebraData:
        return subhopf_comodule(self.embed_b, name="A_base")

    def extract_twist(self, certify: bool = True) -> tuple[TwistElement, CheckReport]:
        report = CheckReport("twist extraction")
        xi_elem, _ = self.obstruction_element(certify=certify)
        h_reg = regular_module(self.h.alg, name="H_reg")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        i_mat = self.compute_i(h_reg, h_reg, a_reg, xi_elem=xi_elem)
        legs = [self.h.alg, self.h.alg, self.kb.alg]
        dims = [self.h.dim, self.h.dim, self.kb.dim]
        u_h = _unit_index(self.h.alg)
        u_a = _unit_index(self.kb.alg)
        col = (u_h * self.h.dim + u_h) * self.kb.dim + u_a
        e_elem: dict = {}
        for r in range(i_mat.rows):
            c = i_mat.data[r][col]
            if not c.is_zero():
                i = r // (self.h.dim * self.kb.dim)
                j = (r // self.kb.dim) % self.h.dim
                kk = r % self.kb.dim
                e_elem[(i, j, kk)] = c
        lmat = left_mult_matrix_tensor(legs, e_elem, self.order)
        ok = lmat == i_mat
        report.add("I on regulars is left multiplication by an element", ok,
                   0 if ok else 1)
        if not ok:
            raise PipelineError("extraction certificate failed on regulars")
        if certify:
            bad = 0
            for x, y, m in self._extraction_battery():
                direct = self.compute_i(x, y, m)  # independent solves
                acting = _element_action(e_elem, x, y, m, self.order)
                if direct != acting:
                    bad += 1
            report.add("element reproduces I on independent modules", bad == 0, bad)
            if bad:
                raise PipelineError("extraction certificate failed on battery")
        j_elem = invert_element(legs, e_elem, self.order)
        twist = TwistElement(self.h, self.s_base(), j_elem, inverse=e_elem)
        tw_report = verify_twist(twist)
        report.merge(tw_report, prefix="verify: ")
        return twist, report

    def _extraction_battery(self):
        triv_h = trivial_module(self.h, name="triv_H")
        triv_a = trivial_module(self.kb, name="triv_A")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        h_reg = regular_module(self.h.alg, name="H_reg")
        battery = [
            (triv_h, triv_h, triv_a),
            (h_reg, triv_h, a_reg),
            (triv_h, h_reg, a_reg),
        ]
        chi_mod = self._h_character_module()
        if chi_mod is not None:
            battery.append((chi_mod, h_reg, triv_a))
        return battery

    # -- contract validation -------------------------------------------------

    def validate(self, deep: bool = False) -> CheckReport:
        """Certify the xi contract: normalisation, naturality, bijectivity."""
        report = CheckReport("adjunction contract")
        triv_a = trivial_module(self.kb, name="triv_A")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        # req1: station(id_T(M)) = id_M, which is xi(l_{T(M)}) = l'_M
        bad = 0
        for m in (triv_a, a_reg):
            tm = self.t(m)
            st = self.station(m, m)
            flat_id = _flatten_identity(tm.dim, self.order)
            got = st.apply(flat_id)
            if got != _flatten_identity(m.dim, self.order):
                bad += 1
        report.add("normalisation xi(id_T(M)) = id_M", bad == 0, bad)
        # naturality and bijectivity on a small instance
        triv_h = trivial_module(self.h, name="triv_H")
        h_reg = regular_module(self.h.alg, name="H_reg")
        pairs = [(triv_h, triv_a, triv_a), (h_reg, triv_a, a_reg)]
        if deep:
            pairs.append((h_reg, a_reg, a_reg))
        bad_nat = 0
        bad_bij = 0
        for x, v, w in pairs:
            ok_n, ok_b = self._check_instance(x, v, w)
            bad_nat += 0 if ok_n else 1
            bad_bij += 0 if ok_b else 1
        report.add("naturality of xi on sample instances", bad_nat == 0, bad_nat)
        report.add("xi bijective on sample instances", bad_bij == 0, bad_bij)
        return report

    def _check_instance(self, x, v, w) -> tuple[bool, bool]:
        tv, tw = self.t(v), self.t(w)
        source = tensor_action(self.k, x, tv)
        hk = _intertwiners(self.k, source, tw)
        target_src = self.a_tensor(self.restrict(x), v)
        ha = _intertwiners(self.kb, target_src, w)
        if len(hk) != len(ha):
            return True, False
        images = [self.xi_forward(x, v, w, f) for f in hk]
        from .rep import _flatten_matrix
        flat = [_flatten_matrix(m) for m in images]
        from .linalg import Matrix as _M, rank
        if flat:
            im_rank = rank(_M.from_cols(flat, self.order,
                                        ambient=w.dim * x.dim * v.dim))
            ok_b = im_rank == len(hk)
        else:
            ok_b = True
        # outputs are A-linear
        ok_n = True
        for img in images:
            for g in self.kb.alg.generator_indices():
                lhs = img * target_src.action[g]
                rhs = w.action[g] * img
                if lhs != rhs:
                    ok_n = False
        # natxi3: precomposition with an H-morphism commutes (x-pointwise by
        # construction); exercised through the element certificate instead.
        return ok_n, ok_b


def _intertwiners(alg_carrier, src: ModuleRep, tgt: ModuleRep):
    from .rep import intertwiner_basis
    gens = alg_carrier.alg.generator_indices()
    return intertwiner_basis([src.action[g] for g in gens],
                             [tgt.action[g] for g in gens],
                             tgt.dim, src.dim, src.order)


def _sparse_cols_of(m: Matrix):
    cols = []
    for j in range(m.cols):
        col = []
        for i in range(m.rows):
            v = m.data[i][j]
            if not v.is_zero():
                col.append((i, v))
        cols.append(col)
    return cols


def _unit_index(alg) -> int:
    unit = alg.unit
    if len(unit) != 1:
        raise StructureError("unit is not a basis element")
    (idx, c), = unit.items()
    if not c.is_one():
        raise StructureError("unit basis coefficient is not 1")
    return idx


def _flatten_identity(dim: int, order: int) -> list:
    zero, one = Cyclo.zero(order), Cyclo.one(order)
    out = [zero] * (dim * dim)
    for i in range(dim):
        out[i * dim + i] = one
    return out


def _element_action(elem: dict, x: ModuleRep, y: ModuleRep, m: ModuleRep,
                    order: int) -> Matrix:
    dim = x.dim * y.dim * m.dim
    out = Matrix.zero(dim, dim, order)
    for (i, j, kk), c in elem.items():
        out = out + kron(kron(x.action[i], y.action[j]), m.action[kk]).scaled(c)
    return out


# -- the monomial-family datum ---------------------------------------------------


STATION_WEIGHT_FAMILIES = (
    lambda n: [1] * n,
    lambda n: [2 ** s for s in range(n)],
    lambda n: [1] + [-1 if s % 2 else 1 for s in range(1, n)],
    lambda n: [3 ** s for s in range(n)],
)


@dataclass
class DatumSpec:
    """JSON-facing description of a monomial-family dynamical datum."""
    table: list[list[int]]
    chi: list[Cyclo]
    g: int
    n: int
    f_indices: list[int]
    b_indices: list[int]
    mu: Cyclo


class MonomialDatum:
    """The dynamical datum (K, T) of the monomial family, fully assembled."""

    def __init__(self, spec: DatumSpec, order: int | None = None,
                 validate_weights: bool = True):
        from .hopf import group_exponent
        if order is None:
            order = lcm(group_exponent(spec.table), spec.n, spec.mu.order)
        self.order = order
        self.spec = spec
        hopf_spec = MonomialHopfSpec(
            table=spec.table,
            chi=[c.embed(order) for c in spec.chi],
            g=spec.g,
            n=spec.n,
        )
        hopf_spec.validate()
        self.hopf_spec = hopf_spec
        self.h = make_monomial_hopf(hopf_spec, order)
        self.k = make_monomial_comodule(hopf_spec, spec.f_indices, spec.mu, self.h)
        f_sorted = sorted(spec.f_indices)
        sub_table = _sub_table(spec.table, f_sorted)
        f_spec = MonomialHopfSpec(
            table=sub_table,
            chi=[hopf_spec.chi[i] for i in f_sorted],
            g=f_sorted.index(spec.g),
            n=spec.n,
        )
        self.hf = make_monomial_hopf(f_spec, order, name="H_F")
        self.embed_f = monomial_sub_embedding(self.h, hopf_spec, self.hf,
                                              spec.f_indices)
        self.kb = group_algebra(_sub_table(spec.table, spec.b_indices), order,
                                name="kB")
        self.embed_b = group_sub_embedding(self.h, hopf_spec, self.kb,
                                           spec.b_indices)
        self.cosets = coset_data(spec.table, spec.f_indices, spec.b_indices,
                                 spec.g, spec.n)
        if not verify_coset_basis(self.h, hopf_spec, self.cosets, spec.b_indices):
            raise ValidationError("coset products do not span the Hopf algebra")
        self.mu = spec.mu.embed(order)
        self.weights = self._select_weights(validate_weights)
        self.engine = AdjunctionEngine(
            self.h, self.embed_b, self.k,
            t_functor=self._t_functor,
            t_morphism=lambda f: t_on_morphism(spec.n, f),
            station=self._station,
        )
        self.engine._h_character_module = self._h_character_module
        self._galois_f = None

    def _t_functor(self, v: ModuleRep) -> ModuleRep:
        return make_t_module(self.hopf_spec, self.k, self.spec.f_indices,
                             self.spec.b_indices, self.cosets, self.mu, v)

    @property
    def galois_f(self):
        """Galois data of K over the monomial subalgebra on F (cached)."""
        if self._galois_f is None:
            k_over_f = corestrict_coaction(self.k, self.embed_f)
            self._galois_f = canonical_map(k_over_f, coinvariants(k_over_f))
            if not self._galois_f.bijective:
                raise PipelineError("K is not Galois over the F-subalgebra")
        return self._galois_f

    def _select_weights(self, validate: bool) -> list[Cyclo]:
        n = self.spec.n
        chi = self.hopf_spec.chi
        b_sorted = sorted(self.spec.b_indices)
        for family in STATION_WEIGHT_FAMILIES:
            raw = family(n)
            weights = [Cyclo.from_rational(r, self.order) for r in raw]
            ok = weights[0].is_one()
            for s in range(n):
                if weights[s].is_zero():
                    continue
                for b in b_sorted:
                    if not (chi[b] ** s).is_one():
                        ok = False
            if not ok:
                continue
            if not validate:
                return weights
            if self._weights_work(weights):
                return weights
        raise PipelineError(
            "no admissible station weights found; the character is "
            "nontrivial on B in a way this realisation does not support")

    def _weights_work(self, weights) -> bool:
        self.weights = weights
        engine = AdjunctionEngine(
            self.h, self.embed_b, self.k,
            t_functor=self._t_functor,
            t_morphism=lambda f: t_on_morphism(self.spec.n, f),
            station=self._station,
        )
        h_reg = regular_module(self.h.alg, name="H_reg")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        try:
            engine.xi_inverse_id(h_reg, a_reg)
        except PipelineError:
            return False
        return True

    def _station(self, v: ModuleRep, w: ModuleRep) -> Matrix:
        """Sum of weighted slice extractions: Theta -> sum_s c_s [Theta(v_0 (x) -)]_s."""
        n = self.spec.n
        order = self.order
        tv_dim = n * v.dim
        tw_dim = n * w.dim
        zero = Cyclo.zero(order)
        data = [[zero] * (tw_dim * tv_dim) for _ in range(w.dim * v.dim)]
        for s in range(n):
            c = self.weights[s]
            if c.is_zero():
                continue
            for wt in range(w.dim):
                for vi in range(v.dim):
                    row = wt * v.dim + vi
                    col = (s * w.dim + wt) * tv_dim + (0 * v.dim + vi)
                    data[row][col] = data[row][col] + c
        return Matrix(w.dim * v.dim, tw_dim * tv_dim, data, order)

    def _h_character_module(self):
        values = []
        chi = self.hopf_spec.chi
        n = self.spec.n
        for h in range(len(self.spec.table)):
            for i in range(n):
                values.append(chi[h] if i == 0 else Cyclo.zero(self.order))
        try:
            return character_module(self.h, values, name="chi_H")
        except StructureError:
            return None

    # -- public pipeline entry points -------------------------------------

    def validate_datum(self, check_simplicity: bool = True) -> CheckReport:
        report = CheckReport("dynamical datum")
        report.merge(self.k.verify(), prefix="K: ")
        c = coinvariants(self.k)
        report.add("K has trivial coinvariants", c.dim == 1,
                   0 if c.dim == 1 else c.dim)
        if check_simplicity:
            cert = is_h_simple(self.k)
            report.add_status("K is H-simple",
                              "PASS" if cert.verdict == "SimpleCertified"
                              else ("FAIL" if cert.verdict == "NotSimpleCertified"
                                    else "INCONCLUSIVE"))
        triv = trivial_module(self.kb, name="triv_A")
        a_reg = regular_module(self.kb.alg, name="A_reg")
        bad = 0
        for v in (triv, a_reg):
            tv = self.engine.t(v)
            if self.kb.dim * tv.dim ** 2 != self.k.dim * v.dim ** 2:
                bad += 1
        report.add("dimension identity dim A (dim T V)^2 = dim K (dim V)^2",
                   bad == 0, bad)
        report.merge(self.engine.validate(), prefix="xi: ")
        report.merge(self.omega_normalisation(), prefix="omega: ")
        return report

    def omega_normalisation(self) -> CheckReport:
        """req12 on omega: the stabilizer unit maps to eps(h) <f, v>.

        omega is assembled as theta-tilde after the station, so its value on
        the class of h (x) v (x) f at the unit u(t (x) w) = eps(t) w is
        <f, station(eps(S^-1 h) id_T(V))(v)>; the check runs over the induced
        module's basis through the quotient section, V in {trivial, regular}.
        """
        from .rep import induce, small_dual
        report = CheckReport("omega normalisation")
        order = self.order
        for v in (trivial_module(self.kb, name="triv_A"),
                  regular_module(self.kb.alg, name="A_reg")):
            tv = self.engine.t(v)
            vdual = small_dual(self.kb, v)
            vw = tensor_reps(self.kb, v, vdual)
            ind, proj, sec = induce(self.embed_b, vw)
            st = self._station(v, v)
            id_flat = _flatten_identity(tv.dim, order)
            bad = 0
            for r in range(ind.dim):
                rep_vec = sec.col(r)
                total = Cyclo.zero(order)
                expected = Cyclo.zero(order)
                for idx, c in enumerate(rep_vec):
                    if c.is_zero():
                        continue
                    hh, vf = divmod(idx, vw.dim)
                    vi, fi = divmod(vf, vdual.dim)
                    eps_sh = Cyclo.zero(order)
                    for t_idx, tc in self.h.antipode_inv_of(
                            {hh: Cyclo.one(order)}).items():
                        eps_sh = eps_sh + tc * self.h.counit[t_idx]
                    small = st.apply([x * eps_sh for x in id_flat])
                    total = total + c * small[fi * v.dim + vi]
                    if vi == fi:
                        expected = expected + c * self.h.counit[hh]
                if total != expected:
                    bad += 1
            report.add("req12 normalisation (V = %s)" % v.name, bad == 0, bad)
        return report

    def compute_twist(self, certify: bool = True):
        return self.engine.extract_twist(certify=certify)


def _sub_table(table, indices):
    sub = sorted(indices)
    pos = {v: i for i, v in enumerate(sub)}
    return [[pos[table[a][b]] for b in sub] for a in sub]


# -- generic Galois datum ---------------------------------------------------------


def generic_galois_datum(embed_a: SubHopfEmbedding, k: ComoduleAlgebraData,
                         t_functor, t_morphism, iso_of,
                         check_simplicity: bool = True):
    """Datum from an A-Galois comodule algebra with supplied Hom-isomorphisms.

    ``iso_of(v, w)`` must return the matrix of an isomorphism from flattened
    Hom(T(V), T(W)) (carrying the gamma-twisted A-action) to flattened
    Hom(V, W) (standard A-action); this forces dim T(V) = dim V.  The chain
    through the Galois transport then realises the stabilizers as duals of
    induced modules, and the returned engine computes twists the same way as
    the monomial family.  Returns (engine, report); a non-A-linear iso is
    rejected with the exact residual count.
    """
    from .stab import galois_twisted_action

    report = CheckReport("generic Galois datum")
    h = embed_a.big
    a = embed_a.small
    order = h.order
    k_over_a = corestrict_coaction(k, embed_a)
    r = coinvariants(k_over_a)
    report.add("coinvariants K^coA trivial", r.dim == 1,
               0 if r.dim == 1 else r.dim)
    gal = canonical_map(k_over_a, r)
    report.add("can bijective", gal.bijective, 0 if gal.bijective else 1)
    if not gal.bijective:
        raise PipelineError("K is not A-Galois")
    c_h = coinvariants(k)
    report.add("coinvariants K^coH trivial", c_h.dim == 1,
               0 if c_h.dim == 1 else c_h.dim)
    if check_simplicity:
        cert = is_h_simple(k)
        report.add_status("K is H-simple",
                          "PASS" if cert.verdict == "SimpleCertified"
                          else ("FAIL" if cert.verdict == "NotSimpleCertified"
                                else "INCONCLUSIVE"))

    engine = AdjunctionEngine(h, embed_a, k, t_functor, t_morphism, iso_of)

    # supplied isos must be A-linear: gamma-twisted source, standard target
    gens = a.alg.generator_indices()
    one = Cyclo.one(order)
    bad = 0
    checked = 0
    v_samples = [trivial_module(a, name="triv_A"),
                 regular_module(a.alg, name="A_reg")]
    for v in v_samples:
        for w in v_samples:
            tv, tw = engine.t(v), engine.t(w)
            eta = iso_of(v, w)
            for g in gens:
                src = galois_twisted_action(gal, embed_a, tv, tw, g)
                tgt = _standard_hom_action(a, v, w, g)
                if eta * src != tgt * eta:
                    bad += 1
                checked += 1
    report.add("supplied isomorphisms are A-linear", bad == 0, bad)
    if bad:
        raise PipelineError("supplied isomorphism family is not A-linear")
    report.merge(engine.validate(), prefix="xi: ")
    if not report.ok:
        raise PipelineError("generic datum validation failed")
    return engine, report


def _standard_hom_action(a: HopfAlgebraData, v: ModuleRep, w: ModuleRep,
                         gen: int) -> Matrix:
    """(a.T)(x) = a_1 . T(S(a_2) x) on flattened Hom(V, W), row-major."""
    order = a.order
    out = Matrix.zero(w.dim * v.dim, w.dim * v.dim, order)
    one = Cyclo.one(order)
    for (i, j), c in a.comult[gen].items():
        sj = a.antipode_of({j: one})
        out = out + kron(w.action[i], v.act_matrix(sj).transpose()).scaled(c)
    return out


# -- gauge extraction -----------------------------------------------------------


def gauge_from_equivalence(datum: MonomialDatum, datum2: MonomialDatum,
                           phi_of) -> tuple[GaugeElement, CheckReport]:
    """Gauge element between the twists of two data sharing K.

    ``phi_of(v)`` returns the K-module isomorphism T(V) -> T'(V); naturality
    and K-linearity are verified on the modules actually used.  The element is
    extracted on regular modules, certified on a battery, and inverted: the
    inverse gauges J_T into J_T'.
    """
    report = CheckReport("gauge extraction")
    eng, eng2 = datum.engine, datum2.engine
    order = datum.order
    h_reg = regular_module(datum.h.alg, name="H_reg")
    a_reg = regular_module(datum.kb.alg, name="A_reg")
    triv_a = trivial_module(datum.kb, name="triv_A")
    triv_h = trivial_module(datum.h, name="triv_H")

    bad = 0
    for v in (triv_a, a_reg):
        t1, t2 = eng.t(v), eng2.t(v)
        phi = phi_of(v)
        for g in datum.k.alg.generator_indices():
            if phi * t1.action[g] != t2.action[g] * phi:
                bad += 1
    report.add("phi_V is K-linear", bad == 0, bad)
    if bad:
        raise PipelineError("supplied equivalence is not K-linear")

    def t_map(x: ModuleRep, v: ModuleRep) -> Matrix:
        """t_{X,V} = zeta(sigma_{X,V}) with sigma = phi . xi^-1(id) . (id (x) phi^-1)."""
        f, n_mod = eng.xi_inverse_id(x, v)
        phi_out = phi_of(n_mod)
        phi_in = phi_of(v)
        from .linalg import inverse as _inv
        sigma = phi_out * f * kron(Matrix.identity(x.dim, order), _inv(phi_in))
        return eng2.xi_forward(x, v, n_mod, sigma)

    t_reg = t_map(h_reg, a_reg)
    u_h = _unit_index(datum.h.alg)
    u_a = _unit_index(datum.kb.alg)
    col = u_h * datum.kb.dim + u_a
    t_elem: dict = {}
    for r in range(t_reg.rows):
        c = t_reg.data[r][col]
        if not c.is_zero():
            t_elem[(r // datum.kb.dim, r % datum.kb.dim)] = c
    legs2 = [datum.h.alg, datum.kb.alg]
    ok = left_mult_matrix_tensor(legs2, t_elem, order) == t_reg
    report.add("t is left multiplication by an element", ok, 0 if ok else 1)
    if not ok:
        raise PipelineError("gauge extraction certificate failed on regulars")
    bad = 0
    for x, v in ((triv_h, triv_a), (triv_h, a_reg), (h_reg, triv_a)):
        direct = t_map(x, v)
        acting = Matrix.zero(x.dim * v.dim, x.dim * v.dim, order)
        for (i, kk), c in t_elem.items():
            acting = acting + kron(x.action[i], v.action[kk]).scaled(c)
        if direct != acting:
            bad += 1
    report.add("element reproduces t on independent modules", bad == 0, bad)
    if bad:
        raise PipelineError("gauge extraction certificate failed on battery")
    t_inv = invert_element(legs2, t_elem, order)
    gauge = GaugeElement(datum.h, eng.s_base(), t_inv, inverse=t_elem)
    return gauge, report


# -- the coset-representative maps between the two Hom spaces --------------------


def phi_psi(datum: MonomialDatum, v: ModuleRep, w: ModuleRep) -> dict:
    """The mutually inverse maps between Hom_kB(H, Hom(V,W)) and
    Hom_{A(F)}(H, Hom(T(V),T(W))).

    phi is given on coset representatives by value slices at the elements
    g^s x^k c_l and extended A(F)-linearly through the Galois-twisted action;
    psi extracts the (j, i) slice of the value at c_l and extends
    kB-linearly.  Both are computed as matrices with respect to intertwiner
    bases of the two constrained spaces; membership of each image in the
    target space and both compositions are verified exactly.
    """
    from .rep import intertwiner_basis, _flatten_matrix
    from .stab import galois_twisted_action

    eng = datum.engine
    h = datum.h
    order = datum.order
    one = Cyclo.one(order)
    n = datum.spec.n
    table = datum.spec.table
    chi = datum.hopf_spec.chi
    cosets = datum.cosets
    tv, tw = eng.t(v), eng.t(w)
    gal = datum.galois_f
    report = CheckReport("phi/psi")

    # constrained spaces as intertwiner bases
    cb_gens = datum.kb.alg.generator_indices()
    cb_src = [h.alg.left_mult_matrix(datum.embed_b.embed_elem({g: one}))
              for g in cb_gens]
    cb_tgt = [_standard_hom_action(datum.kb, v, w, g) for g in cb_gens]
    homcb = intertwiner_basis(cb_src, cb_tgt, w.dim * v.dim, h.dim, order)

    af_gens = datum.hf.alg.generator_indices()
    af_src = [h.alg.left_mult_matrix(datum.embed_f.embed_elem({g: one}))
              for g in af_gens]
    af_tgt = [galois_twisted_action(gal, datum.embed_f, tv, tw, g)
              for g in af_gens]
    homaf = intertwiner_basis(af_src, af_tgt, tw.dim * tv.dim, h.dim, order)
    report.add("spaces have equal dimension (%d vs %d)" % (len(homcb), len(homaf)),
               len(homcb) == len(homaf),
               0 if len(homcb) == len(homaf) else 1)

    # twisted action of every A(F) basis element on flattened Hom(TV, TW)
    f_sorted = sorted(datum.spec.f_indices)
    af_action = {}
    for p, fh in enumerate(f_sorted):
        for i in range(n):
            af_action[(fh, i)] = galois_twisted_action(
                gal, datum.embed_f, tv, tw, p * n + i)
    # decomposition data of every H basis element h x^i = chi^-i(c_l) (f x^i) c_l
    decomp = []
    inv_chi = {}
    for hh in range(len(table)):
        l = next(li for li, c in enumerate(cosets.reps)
                 if hh in {table[f][c] for f in f_sorted})
        c_l = cosets.reps[l]
        c_inv = _group_inverse(table, c_l)
        f_part = table[hh][c_inv]
        decomp.append((l, c_l, f_part))

    def extend_af(values_at_reps):
        """Full matrix of the A(F)-linear map with the given values at c_l."""
        cols = {}
        for hh in range(len(table)):
            l, c_l, f_part = decomp[hh]
            for i in range(n):
                scale = (chi[c_l] ** i).inverse()
                acted = af_action[(f_part, i)].apply(values_at_reps[l])
                cols[hh * n + i] = [scale * x for x in acted]
        ordered = [cols[j] for j in range(h.dim)]
        return Matrix.from_cols(ordered, order, ambient=tw.dim * tv.dim)

    def phi_map(xi_mat: Matrix) -> Matrix:
        values = []
        for c_l in cosets.reps:
            flat = [Cyclo.zero(order)] * (tw.dim * tv.dim)
            for s in range(n):
                for kk in range(n):
                    # element g^s x^k c_l = chi^k(c_l) (g^s c_l) x^k
                    gs = cosets.g_powers[s]
                    target = table[gs][c_l]
                    coeff = chi[c_l] ** kk
                    col = xi_mat.col(target * n + kk)
                    for wt in range(w.dim):
                        for vi in range(v.dim):
                            val = coeff * col[wt * v.dim + vi]
                            if not val.is_zero():
                                idx = (s * w.dim + wt) * (n * v.dim) + kk * v.dim + vi
                                flat[idx] = flat[idx] + val
            values.append(flat)
        return extend_af(values)

    def extend_cb(values_at_jil):
        """Full matrix of the kB-linear map with values at g^j x^i c_l."""
        b_sorted = sorted(datum.spec.b_indices)
        cols = {}
        for hh in range(len(table)):
            l, c_l, f_part = decomp[hh]
            b = cosets.b_part[f_part]
            j = cosets.g_exponent[f_part]
            b_act = _standard_hom_action_elem(datum.kb, v, w, b_sorted.index(b))
            for i in range(n):
                scale = (chi[c_l] ** i).inverse()
                acted = b_act.apply(values_at_jil[(j, i, l)])
                cols[hh * n + i] = [scale * x for x in acted]
        ordered = [cols[j] for j in range(h.dim)]
        return Matrix.from_cols(ordered, order, ambient=w.dim * v.dim)

    def psi_map(alpha_mat: Matrix) -> Matrix:
        values = {}
        for l, c_l in enumerate(cosets.reps):
            col = alpha_mat.col(c_l * n + 0)
            for j in range(n):
                for i in range(n):
                    flat = [Cyclo.zero(order)] * (w.dim * v.dim)
                    for wt in range(w.dim):
                        for vi in range(v.dim):
                            flat[wt * v.dim + vi] = col[
                                (j * w.dim + wt) * (n * v.dim) + i * v.dim + vi]
                    values[(j, i, l)] = flat
        return extend_cb(values)

    # matrices with respect to the two bases, with membership verification
    cb_mat = Matrix.from_cols([_flatten_matrix(b) for b in homcb], order,
                              ambient=w.dim * v.dim * h.dim)
    af_mat = Matrix.from_cols([_flatten_matrix(b) for b in homaf], order,
                              ambient=tw.dim * tv.dim * h.dim)
    bad_phi = 0
    phi_cols = []
    for b in homcb:
        img = phi_map(b)
        try:
            phi_cols.append(solve(af_mat, _flatten_matrix(img)))
        except LinAlgError:
            bad_phi += 1
            phi_cols.append([Cyclo.zero(order)] * len(homaf))
    report.add("phi image is A(F)-linear", bad_phi == 0, bad_phi)
    bad_psi = 0
    psi_cols = []
    for b in homaf:
        img = psi_map(b)
        try:
            psi_cols.append(solve(cb_mat, _flatten_matrix(img)))
        except LinAlgError:
            bad_psi += 1
            psi_cols.append([Cyclo.zero(order)] * len(homcb))
    report.add("psi image is kB-linear", bad_psi == 0, bad_psi)
    phi = Matrix.from_cols(phi_cols, order, ambient=len(homaf))
    psi = Matrix.from_cols(psi_cols, order, ambient=len(homcb))
    ok1 = psi * phi == Matrix.identity(len(homcb), order)
    report.add("psi . phi = id", ok1, 0 if ok1 else 1)
    ok2 = phi * psi == Matrix.identity(len(homaf), order)
    report.add("phi . psi = id", ok2, 0 if ok2 else 1)
    return {"phi": phi, "psi": psi, "homcb": homcb, "homaf": homaf,
            "report": report}


def _standard_hom_action_elem(a: HopfAlgebraData, v: ModuleRep, w: ModuleRep,
                              idx: int) -> Matrix:
    return _standard_hom_action(a, v, w, idx)


def _group_inverse(table, i):
    from .hopf import _group_identity
    e = _group_identity(table)
    for j in range(len(table)):
        if table[i][j] == e:
            return j
    raise ValidationError("element has no inverse")
