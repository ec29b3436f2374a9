"""Command line front end: file formats, verifiers, instance generation.

All files are JSON with string-encoded exact scalars ("p/q" or
"[c0,...]@N") and sparse tensor entries as index tuples plus a scalar, all
indices 0-based.  Output files are byte-stable: fixed basis orders, sorted
coefficient lists, canonical scalar strings.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from .comod import ComoduleAlgebraData
from .hopf import AlgebraData, HopfAlgebraData, StructureError, verify_hopf
from .linalg import LinAlgError, Matrix
from .monomial import ValidationError
from .report import CheckReport
from .rep import ModuleRep
from .scalar import Cyclo, ScalarError, format_scalar, parse_scalar
from .twist import GaugeElement, TwistElement, build_twisted_galois, gauge_check, verify_twist

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

DEFAULT_MAX_DIM = 10 ** 7


class InputError(ValueError):
    pass


def max_dim() -> int:
    raw = os.environ.get("DYNTWIST_MAX_DIM", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_DIM
    except ValueError:
        return DEFAULT_MAX_DIM


def guard_dims(*dims: int) -> None:
    total = 1
    for d in dims:
        total *= max(d, 1)
    if total > max_dim():
        raise InputError(
            "tensor size %d exceeds DYNTWIST_MAX_DIM = %d" % (total, max_dim()))


# -- serialisation --------------------------------------------------------------


def _sparse_entries_3(tensor_rows) -> list:
    out = []
    for i, row in enumerate(tensor_rows):
        for j, cell in enumerate(row):
            for k in sorted(cell):
                out.append([i, j, k, format_scalar(cell[k])])
    return out


def _sparse_vec(values) -> list:
    return [[i, format_scalar(v)] for i, v in enumerate(values) if not v.is_zero()]


def _matrix_entries(m: Matrix) -> list:
    out = []
    for i in range(m.rows):
        for j in range(m.cols):
            v = m.data[i][j]
            if not v.is_zero():
                out.append([i, j, format_scalar(v)])
    return out


def hopf_to_json(h: HopfAlgebraData) -> dict:
    comult = []
    for k, cell in enumerate(h.comult):
        for (i, j) in sorted(cell):
            comult.append([k, i, j, format_scalar(cell[(i, j)])])
    return {
        "format": "hopf-algebra",
        "order": h.order,
        "dim": h.dim,
        "name": h.name,
        "mult": _sparse_entries_3(h.alg.mult),
        "unit": sorted([[i, format_scalar(c)] for i, c in h.alg.unit.items()]),
        "comult": comult,
        "counit": _sparse_vec(h.counit),
        "antipode": _matrix_entries(h.antipode),
        "generators": h.alg.generators,
    }


def hopf_from_json(doc: dict) -> HopfAlgebraData:
    if doc.get("format") != "hopf-algebra":
        raise InputError("expected a hopf-algebra file")
    order = int(doc["order"])
    dim = int(doc["dim"])
    guard_dims(dim, dim, dim)
    mult = [[dict() for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in doc["mult"]:
        mult[i][j][k] = parse_scalar(c, order)
    unit = {int(i): parse_scalar(c, order) for i, c in doc["unit"]}
    alg = AlgebraData(dim, mult, unit, order, name=doc.get("name", "H"),
                      generators=doc.get("generators"))
    comult = [dict() for _ in range(dim)]
    for k, i, j, c in doc["comult"]:
        comult[k][(i, j)] = parse_scalar(c, order)
    counit = [Cyclo.zero(order)] * dim
    for i, c in doc["counit"]:
        counit[i] = parse_scalar(c, order)
    antipode = None
    if doc.get("antipode"):
        zero = Cyclo.zero(order)
        data = [[zero] * dim for _ in range(dim)]
        for i, j, c in doc["antipode"]:
            data[i][j] = parse_scalar(c, order)
        antipode = Matrix(dim, dim, data, order)
    return HopfAlgebraData(alg, comult, counit, antipode=antipode,
                           name=doc.get("name", "H"))


def comodule_to_json(k: ComoduleAlgebraData) -> dict:
    coaction = []
    for j, cell in enumerate(k.coaction):
        for (hi, ki) in sorted(cell):
            coaction.append([j, hi, ki, format_scalar(cell[(hi, ki)])])
    return {
        "format": "comodule-algebra",
        "order": k.order,
        "dim": k.dim,
        "name": k.name,
        "mult": _sparse_entries_3(k.alg.mult),
        "unit": sorted([[i, format_scalar(c)] for i, c in k.alg.unit.items()]),
        "coaction": coaction,
        "generators": k.alg.generators,
    }


def comodule_from_json(doc: dict, over: HopfAlgebraData) -> ComoduleAlgebraData:
    if doc.get("format") != "comodule-algebra":
        raise InputError("expected a comodule-algebra file")
    order = int(doc["order"])
    if order != over.order:
        raise InputError("comodule and Hopf algebra use different field orders")
    dim = int(doc["dim"])
    guard_dims(dim, dim, over.dim)
    mult = [[dict() for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in doc["mult"]:
        mult[i][j][k] = parse_scalar(c, order)
    unit = {int(i): parse_scalar(c, order) for i, c in doc["unit"]}
    alg = AlgebraData(dim, mult, unit, order, name=doc.get("name", "K"),
                      generators=doc.get("generators"))
    coaction = [dict() for _ in range(dim)]
    for j, hi, ki, c in doc["coaction"]:
        coaction[j][(hi, ki)] = parse_scalar(c, order)
    return ComoduleAlgebraData(alg, over, coaction, name=doc.get("name", "K"))


def module_to_json(m: ModuleRep) -> dict:
    action = []
    for a, mat in enumerate(m.action):
        for i in range(mat.rows):
            for j in range(mat.cols):
                v = mat.data[i][j]
                if not v.is_zero():
                    action.append([a, i, j, format_scalar(v)])
    return {
        "format": "module",
        "order": m.order,
        "dim": m.dim,
        "name": m.name,
        "action": action,
    }


def module_from_json(doc: dict, algebra: AlgebraData) -> ModuleRep:
    if doc.get("format") != "module":
        raise InputError("expected a module file")
    order = int(doc["order"])
    dim = int(doc["dim"])
    guard_dims(dim, dim, algebra.dim)
    zero = Cyclo.zero(order)
    mats = [Matrix(dim, dim, [[zero] * dim for _ in range(dim)], order)
            for _ in range(algebra.dim)]
    data = [[[zero] * dim for _ in range(dim)] for _ in range(algebra.dim)]
    for a, i, j, c in doc["action"]:
        data[a][i][j] = parse_scalar(c, order)
    mats = [Matrix(dim, dim, d, order) for d in data]
    return ModuleRep(algebra, dim, mats, name=doc.get("name", "V"))


def twist_to_json(t: TwistElement) -> dict:
    coeffs = [[i, j, k, format_scalar(c)]
              for (i, j, k), c in sorted(t.coeffs.items())]
    doc = {
        "format": "twist",
        "order": t.order,
        "coeffs": coeffs,
    }
    if t.inverse is not None:
        doc["inverse"] = [[i, j, k, format_scalar(c)]
                          for (i, j, k), c in sorted(t.inverse.items())]
    return doc


def twist_from_json(doc: dict, h: HopfAlgebraData,
                    s: ComoduleAlgebraData) -> TwistElement:
    if doc.get("format") != "twist":
        raise InputError("expected a twist file")
    order = int(doc["order"])
    if order != h.order:
        raise InputError("twist and Hopf algebra use different field orders")
    guard_dims(h.dim, h.dim, s.dim)
    coeffs = {}
    for i, j, k, c in doc["coeffs"]:
        coeffs[(i, j, k)] = parse_scalar(c, order)
    inverse = None
    if doc.get("inverse"):
        inverse = {}
        for i, j, k, c in doc["inverse"]:
            inverse[(i, j, k)] = parse_scalar(c, order)
    return TwistElement(h, s, coeffs, inverse=inverse)


def gauge_to_json(g: GaugeElement) -> dict:
    return {
        "format": "gauge",
        "order": g.h.order,
        "coeffs": [[i, k, format_scalar(c)]
                   for (i, k), c in sorted(g.coeffs.items())],
    }


def gauge_from_json(doc: dict, h: HopfAlgebraData,
                    s: ComoduleAlgebraData) -> GaugeElement:
    if doc.get("format") != "gauge":
        raise InputError("expected a gauge file")
    order = int(doc["order"])
    coeffs = {}
    for i, k, c in doc["coeffs"]:
        coeffs[(i, k)] = parse_scalar(c, order)
    return GaugeElement(h, s, coeffs)


def datum_to_json(spec) -> dict:
    return {
        "format": "datum",
        "group": spec.table,
        "chi": [format_scalar(c) for c in spec.chi],
        "g": spec.g,
        "n": spec.n,
        "F": sorted(spec.f_indices),
        "B": sorted(spec.b_indices),
        "mu": format_scalar(spec.mu),
    }


def datum_from_json(doc: dict):
    from .datum import DatumSpec
    from .hopf import group_exponent
    from .scalar import lcm
    if doc.get("format") != "datum":
        raise InputError("expected a datum file")
    table = [[int(x) for x in row] for row in doc["group"]]
    n = int(doc["n"])
    mu_raw = str(doc["mu"])
    mu_order = _scalar_order(mu_raw)
    order = lcm(group_exponent(table), n, mu_order)
    chi = [parse_scalar(c, order) for c in doc["chi"]]
    return DatumSpec(
        table=table,
        chi=chi,
        g=int(doc["g"]),
        n=n,
        f_indices=[int(i) for i in doc["F"]],
        b_indices=[int(i) for i in doc["B"]],
        mu=parse_scalar(mu_raw, order),
    ), order


def _scalar_order(text: str) -> int:
    text = text.strip()
    if text.startswith("[") and "@" in text:
        return int(text.rsplit("@", 1)[1])
    return 1


def write_json(path: str, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        digest.update(fh.read())
    return digest.hexdigest()


def report_document(command: str, inputs: list[str], report: CheckReport,
                    outputs: list[str]) -> dict:
    return {
        "command": command,
        "inputs": {p: _sha256(p) for p in inputs},
        "checks": [c.as_dict() for c in report.checks],
        "outputs": outputs,
    }


# -- commands --------------------------------------------------------------------


def cmd_verify(args) -> int:
    kind = args.kind
    report = CheckReport("verify " + kind)
    inputs = list(args.files)
    if kind == "hopf":
        h = hopf_from_json(read_json(inputs[0]))
        report = verify_hopf(h)
    elif kind == "comodule":
        if len(inputs) != 2:
            raise InputError("verify comodule needs H.json K.json")
        h = hopf_from_json(read_json(inputs[0]))
        k = comodule_from_json(read_json(inputs[1]), h)
        report = k.verify()
    elif kind == "twist":
        if len(inputs) != 3:
            raise InputError("verify twist needs H.json S.json J.json")
        h = hopf_from_json(read_json(inputs[0]))
        s = comodule_from_json(read_json(inputs[1]), h)
        t = twist_from_json(read_json(inputs[2]), h, s)
        report = verify_twist(t)
    elif kind == "gauge":
        if len(inputs) != 5:
            raise InputError("verify gauge needs H.json S.json J1.json J2.json t.json")
        h = hopf_from_json(read_json(inputs[0]))
        s = comodule_from_json(read_json(inputs[1]), h)
        t1 = twist_from_json(read_json(inputs[2]), h, s)
        t2 = twist_from_json(read_json(inputs[3]), h, s)
        g = gauge_from_json(read_json(inputs[4]), h, s)
        report = gauge_check(t1, t2, g)
    else:
        raise InputError("unknown verify kind %r" % kind)
    return finish(args, "verify " + kind, inputs, report, [])


def _example_spec(name: str, args):
    from .datum import DatumSpec
    if name == "E0":
        table = [[0, 1], [1, 0]]
        return DatumSpec(table=table,
                         chi=[Cyclo.one(2), Cyclo.from_rational(-1, 2)],
                         g=1, n=2, f_indices=[0, 1], b_indices=[0],
                         mu=Cyclo.one(2))
    if name == "E1":
        table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
        return DatumSpec(table=table,
                         chi=[Cyclo.one(2), Cyclo.one(2),
                              Cyclo.from_rational(-1, 2),
                              Cyclo.from_rational(-1, 2)],
                         g=2, n=2, f_indices=[0, 1, 2, 3], b_indices=[0, 1],
                         mu=Cyclo.one(2))
    if name == "custom":
        m = args.group_order
        n = args.n
        if m is None or n is None:
            raise InputError("custom needs --group-order and --n")
        if m % n:
            raise ValidationError("n = |g| requires n | group order")
        table = [[(i + j) % m for j in range(m)] for i in range(m)]
        mu_order = _scalar_order(args.mu)
        chi_order = _scalar_order(args.chi_gen)
        from .scalar import lcm
        order = lcm(m, n, mu_order, chi_order)
        chi_gen = parse_scalar(args.chi_gen, order)
        chi = [chi_gen ** i for i in range(m)]
        g = (m // n) % m
        b_indices = ([int(x) for x in args.b.split(",")] if args.b else [0])
        return DatumSpec(table=table, chi=chi, g=g, n=n,
                         f_indices=list(range(m)), b_indices=b_indices,
                         mu=parse_scalar(args.mu, order))
    raise InputError("unknown example %r" % name)


def cmd_example(args) -> int:
    from .datum import MonomialDatum
    spec = _example_spec(args.name, args)
    datum = MonomialDatum(spec)
    outdir = args.out_dir
    os.makedirs(outdir, exist_ok=True)
    prefix = os.path.join(outdir, args.name.lower())
    paths = []
    write_json(prefix + "_hopf.json", hopf_to_json(datum.h))
    paths.append(prefix + "_hopf.json")
    write_json(prefix + "_comodule.json", comodule_to_json(datum.k))
    paths.append(prefix + "_comodule.json")
    write_json(prefix + "_base.json", comodule_to_json(datum.engine.s_base()))
    paths.append(prefix + "_base.json")
    write_json(prefix + "_datum.json", datum_to_json(spec))
    paths.append(prefix + "_datum.json")
    report = CheckReport("example " + args.name)
    report.add("instance constructed and validated", True)
    rc = finish(args, "example " + args.name, [], report, paths)
    for p in paths:
        print(p)
    return rc


def cmd_compute_twist(args) -> int:
    from .datum import MonomialDatum, PipelineError
    spec, order = datum_from_json(read_json(args.datum))
    dim_h = len(spec.table) * spec.n
    guard_dims(dim_h, dim_h, len(spec.b_indices))
    datum = MonomialDatum(spec, order=order)
    try:
        twist, report = datum.compute_twist()
    except PipelineError as exc:
        report = CheckReport("compute-twist")
        report.add("pipeline hypothesis (invertibility of xi^-1(id))", False, 1)
        sys.stderr.write("pipeline failure: %s\n" % exc)
        return finish(args, "compute-twist", [args.datum], report, [])
    out = args.out or "twist.json"
    write_json(out, twist_to_json(twist))
    return finish(args, "compute-twist", [args.datum], report, [out])


def cmd_stab(args) -> int:
    from .stab import stab_hom_realized, yan_zhu_stabilizer
    h = hopf_from_json(read_json(args.hopf))
    k = comodule_from_json(read_json(args.comodule), h)
    v = module_from_json(read_json(args.v), k.alg)
    w = module_from_json(read_json(args.w), k.alg)
    report = CheckReport("stabilizers")
    st1 = yan_zhu_stabilizer(k, v, w)
    report.merge(st1.report, prefix="yan-zhu: ")
    st2 = stab_hom_realized(k, v, w)
    report.merge(st2.report, prefix="realized: ")
    ok = st1.dim == st2.dim
    report.add("realizations agree in dimension (%d vs %d)" % (st1.dim, st2.dim),
               ok, 0 if ok else 1)
    lhs = k.dim * st2.dim
    rhs = v.dim * w.dim * h.dim
    report.add("dim K * dim St = dim V * dim W * dim H (%d vs %d)" % (lhs, rhs),
               lhs == rhs, 0 if lhs == rhs else 1)
    return finish(args, "stab", [args.hopf, args.comodule, args.v, args.w],
                  report, [])


def cmd_twisted_galois(args) -> int:
    h = hopf_from_json(read_json(args.hopf))
    s = comodule_from_json(read_json(args.s), h)
    t = twist_from_json(read_json(args.twist), h, s)
    _, report = build_twisted_galois(t)
    return finish(args, "twisted-galois", [args.hopf, args.s, args.twist],
                  report, [])


def finish(args, command: str, inputs: list[str], report: CheckReport,
           outputs: list[str]) -> int:
    for line in report.lines():
        print(line)
    if getattr(args, "report", None):
        write_json(args.report, report_document(command, inputs, report, outputs))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyntwist",
        description="exact Hopf-algebra computations and dynamical twists")
    parser.add_argument("--report", help="write a JSON report document here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verifier on structure files")
    p.add_argument("kind", choices=["hopf", "comodule", "twist", "gauge"])
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="emit files for a named instance")
    p.add_argument("name", choices=["E0", "E1", "custom"])
    p.add_argument("--out-dir", default=".")
    p.add_argument("--group-order", type=int, help="cyclic group order (custom)")
    p.add_argument("--n", type=int, help="nilpotency index (custom)")
    p.add_argument("--chi-gen", default="-1",
                   help="character value on the generator (custom)")
    p.add_argument("--mu", default="1", help="fixed n-th root of lambda (custom)")
    p.add_argument("--b", default="", help="comma-separated B indices (custom)")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("compute-twist", help="run the full twist pipeline")
    p.add_argument("datum")
    p.add_argument("--out", help="twist output path (default twist.json)")
    p.set_defaults(func=cmd_compute_twist)

    p = sub.add_parser("stab", help="compute both stabilizer realizations")
    p.add_argument("hopf")
    p.add_argument("comodule")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("twisted-galois", help="build and check H* (x) S")
    p.add_argument("hopf")
    p.add_argument("s")
    p.add_argument("twist")
    p.set_defaults(func=cmd_twisted_galois)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ScalarError, StructureError, ValidationError,
            LinAlgError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
