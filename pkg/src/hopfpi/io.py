"""One self-describing JSON document format for every structure.

    {"format_version": "1", "field": "QQ" | "GF(p)", "kind": ..., "payload": {...}}

QQ scalars are strings ("3", "-1/2"), GF(p) scalars are ints in [0, p).
Sparse tensors list ``[index..., scalar]`` rows sorted by index; matrices
are dense row lists. Output is canonical: ``dumps(parse(dumps(x)))`` is
byte-identical to ``dumps(x)``.
"""
from __future__ import annotations

import json

from .brace import ActionFamily, HopfPiBrace
from .errors import InputError
from .groups import FiniteGroup, Grading
from .hopf import GradedLinearMap, GradedSpace, HopfPiAlgebra
from .linalg import QQ, Field, Matrix, StructureTensor

FORMAT_VERSION = "1"
KINDS = ("group", "hopf_pi_algebra", "brace", "matched_pair", "post_hopf", "rota_baxter",
         "factorization", "action")


class Document:
    __slots__ = ("field", "kind", "payload")

    def __init__(self, field: Field, kind: str, payload):
        self.field, self.kind, self.payload = field, kind, payload

    def __repr__(self):
        return f"Document({self.kind}, {self.field})"


# parsing helpers -------------------------------------------------------

def _fail(path, msg):
    raise InputError(f"{path}: {msg}")


def _no_dupes(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise InputError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _obj(x, path, required, optional=()):
    if not isinstance(x, dict):
        _fail(path, "expected an object")
    extra = set(x) - set(required) - set(optional)
    if extra:
        _fail(path, f"unknown keys {sorted(extra)}")
    missing = [k for k in required if k not in x]
    if missing:
        _fail(path, f"missing keys {missing}")
    return x


def _list(x, path, n=None):
    if not isinstance(x, list):
        _fail(path, "expected a list")
    if n is not None and len(x) != n:
        _fail(path, f"expected {n} items, got {len(x)}")
    return x


def _int(x, path, lo=0, hi=None):
    if isinstance(x, bool) or not isinstance(x, int):
        _fail(path, f"expected an integer, got {x!r}")
    if x < lo or (hi is not None and x >= hi):
        _fail(path, f"integer {x} out of range")
    return x


def _scalar(F, x, path):
    try:
        return F.parse(x)
    except InputError as exc:
        _fail(path, str(exc))


def _wrap(fn, path, *args):
    try:
        return fn(*args)
    except InputError as exc:
        _fail(path, str(exc))


# encoders / decoders per piece --------------------------------------------

def enc_group(G: FiniteGroup):
    return {"names": list(G.names), "table": [list(r) for r in G.table]}


def dec_group(x, path):
    _obj(x, path, ("names", "table"))
    names = [str(n) for n in _list(x["names"], path + ".names")]
    table = [[_int(v, path + ".table") for v in _list(r, path + ".table")] for r in _list(x["table"], path + ".table")]
    return _wrap(FiniteGroup, path, table, names)


def enc_tensor(F, T: StructureTensor):
    return {"shape": list(T.shape), "entries": [list(k) + [F.format(c)] for k, c in sorted(T.data.items())]}


def dec_tensor(F, x, path, shape=None):
    _obj(x, path, ("shape", "entries"))
    sh = tuple(_int(d, path + ".shape") for d in _list(x["shape"], path + ".shape"))
    if shape is not None and sh != tuple(shape):
        _fail(path, f"shape {list(sh)} expected {list(shape)}")
    data = {}
    for n, row in enumerate(_list(x["entries"], path + ".entries")):
        p = f"{path}.entries[{n}]"
        _list(row, p, len(sh) + 1)
        idx = tuple(_int(v, p, 0, d) for v, d in zip(row, sh))
        if idx in data:
            _fail(p, "duplicate index")
        data[idx] = _scalar(F, row[-1], p)
    return _wrap(StructureTensor, path, F, sh, data)


def enc_matrix(F, M: Matrix):
    return {"shape": [M.rows, M.cols], "rows": [[F.format(v) for v in M.row(i)] for i in range(M.rows)]}


def dec_matrix(F, x, path, shape=None):
    _obj(x, path, ("shape", "rows"))
    r, c = (_int(d, path + ".shape") for d in _list(x["shape"], path + ".shape", 2))
    if shape is not None and (r, c) != tuple(shape):
        _fail(path, f"shape {[r, c]} expected {list(shape)}")
    rows = _list(x["rows"], path + ".rows", r)
    data = []
    for i, row in enumerate(rows):
        data.extend(_scalar(F, v, f"{path}.rows[{i}]") for v in _list(row, f"{path}.rows[{i}]", c))
    return Matrix(F, r, c, data)


def enc_grading(g: Grading):
    return {"target": enc_group(g.target), "map": list(g.map)}


def enc_hopf(H: HopfPiAlgebra):
    F = H.field
    n = H.group.size
    return {
        "group": enc_group(H.group),
        "dims": list(H.dims),
        "basis": [list(b) for b in H.space.basis_names] if H.space.basis_names else None,
        "mult": [{"grades": [a, b], "tensor": enc_tensor(F, H.mult[(a, b)])} for a in range(n) for b in range(n)],
        "unit": [F.format(v) for v in H.unit],
        "comult": [enc_tensor(F, H.comult[a]) for a in range(n)],
        "counit": [[F.format(v) for v in H.counit[a]] for a in range(n)],
        "antipode": enc_map(H.antipode, F) if H.antipode is not None else None,
    }


def enc_map(f: GradedLinearMap, F=None):
    F = F or f.field
    return {"shift": list(f.shift), "blocks": [enc_matrix(F, f.blocks[a]) for a in range(len(f.shift))]}


def dec_map(F, x, path, source: GradedSpace, target: GradedSpace):
    _obj(x, path, ("shift", "blocks"))
    n = source.group.size
    shift = [_int(s, path + ".shift", 0, target.group.size) for s in _list(x["shift"], path + ".shift", n)]
    blocks = {a: dec_matrix(F, m, f"{path}.blocks[{a}]", (target.dims[shift[a]], source.dims[a]))
              for a, m in enumerate(_list(x["blocks"], path + ".blocks", n))}
    return _wrap(GradedLinearMap, path, source, target, shift, blocks)


def dec_hopf(F, x, path):
    _obj(x, path, ("group", "dims", "basis", "mult", "unit", "comult", "counit", "antipode"))
    G = dec_group(x["group"], path + ".group")
    n = G.size
    dims = [_int(d, path + ".dims") for d in _list(x["dims"], path + ".dims", n)]
    basis = x["basis"]
    if basis is not None:
        basis = [[str(s) for s in _list(b, path + ".basis")] for b in _list(basis, path + ".basis", n)]
    space = _wrap(GradedSpace, path, G, dims, basis)
    mult = {}
    for i, blk in enumerate(_list(x["mult"], path + ".mult", n * n)):
        p = f"{path}.mult[{i}]"
        _obj(blk, p, ("grades", "tensor"))
        a, b = (_int(v, p + ".grades", 0, n) for v in _list(blk["grades"], p + ".grades", 2))
        if (a, b) in mult:
            _fail(p, "duplicate grade pair")
        mult[(a, b)] = dec_tensor(F, blk["tensor"], p + ".tensor", (dims[G.mul(a, b)], dims[a], dims[b]))
    unit = [_scalar(F, v, path + ".unit") for v in _list(x["unit"], path + ".unit", dims[G.identity])]
    comult = {a: dec_tensor(F, t, f"{path}.comult[{a}]", (dims[a],) * 3)
              for a, t in enumerate(_list(x["comult"], path + ".comult", n))}
    counit = {a: tuple(_scalar(F, v, f"{path}.counit[{a}]") for v in _list(c, f"{path}.counit[{a}]", dims[a]))
              for a, c in enumerate(_list(x["counit"], path + ".counit", n))}
    S = None if x["antipode"] is None else dec_map(F, x["antipode"], path + ".antipode", space, space)
    return _wrap(HopfPiAlgebra, path, space, mult, unit, comult, counit, S)


def enc_action(act: ActionFamily):
    F = act.field
    return {"blocks": [{"grades": list(k), "out": act.out[k], "tensor": enc_tensor(F, act.blocks[k])}
                       for k in sorted(act.blocks)]}


def dec_action(F, x, path):
    _obj(x, path, ("blocks",))
    blocks, out = {}, {}
    for i, blk in enumerate(_list(x["blocks"], path + ".blocks")):
        p = f"{path}.blocks[{i}]"
        _obj(blk, p, ("grades", "out", "tensor"))
        key = tuple(_int(v, p + ".grades") for v in _list(blk["grades"], p + ".grades", 2))
        if key in blocks:
            _fail(p, "duplicate grade pair")
        out[key] = _int(blk["out"], p + ".out")
        blocks[key] = dec_tensor(F, blk["tensor"], p + ".tensor")
    return _wrap(ActionFamily, path, F, blocks, out)


# kind payloads --------------------------------------------------------

def _enc_payload(kind, obj):
    from .matched_pair import MatchedPair
    from .post_hopf import PostHopfStructure
    from .rota_baxter import Factorization, RotaBaxterOperator
    if kind == "group":
        G, gradings = obj
        return {**enc_group(G), "gradings": {k: enc_grading(g) for k, g in gradings.items()}}
    if kind == "hopf_pi_algebra":
        return enc_hopf(obj)
    if kind == "brace":
        return {"dot": enc_hopf(obj.dot), "circ": enc_hopf(obj.circ)}
    if kind == "matched_pair":
        assert isinstance(obj, MatchedPair)
        return {"K": enc_hopf(obj.K), "H": enc_hopf(obj.H), "lact": enc_action(obj.lact),
                "ract": enc_action(obj.ract)}
    if kind == "post_hopf":
        assert isinstance(obj, PostHopfStructure)
        return {"base": enc_hopf(obj.base), "triangle": enc_action(obj.triangle)}
    if kind == "rota_baxter":
        assert isinstance(obj, RotaBaxterOperator)
        return {"algebra": enc_hopf(obj.carrier), "B": enc_map(obj.B, obj.field)}
    if kind == "factorization":
        H, Fz = obj
        assert isinstance(Fz, Factorization)
        n = H.group.size
        return {"algebra": enc_hopf(H), "G": [enc_matrix(H.field, Fz.G[a]) for a in range(n)],
                "K": [enc_matrix(H.field, Fz.K[a]) for a in range(n)]}
    if kind == "action":
        K, H, act = obj
        return {"acting": enc_hopf(K), "target": enc_hopf(H), "action": enc_action(act)}
    raise InputError(f"unknown kind {kind!r}")


def _dec_payload(F, kind, x):
    from .matched_pair import MatchedPair
    from .post_hopf import PostHopfStructure
    from .rota_baxter import Factorization, RotaBaxterOperator
    p = "payload"
    if kind == "group":
        _obj(x, p, ("names", "table", "gradings"))
        G = dec_group({"names": x["names"], "table": x["table"]}, p)
        gradings = {}
        if not isinstance(x["gradings"], dict):
            _fail(p + ".gradings", "expected an object")
        for name, g in x["gradings"].items():
            q = f"{p}.gradings.{name}"
            _obj(g, q, ("target", "map"))
            T = dec_group(g["target"], q + ".target")
            m = [_int(v, q + ".map", 0, T.size) for v in _list(g["map"], q + ".map", G.size)]
            gradings[name] = _wrap(Grading, q, G, T, m, name)
        return G, gradings
    if kind == "hopf_pi_algebra":
        return dec_hopf(F, x, p)
    if kind == "brace":
        _obj(x, p, ("dot", "circ"))
        return _wrap(HopfPiBrace, p, dec_hopf(F, x["dot"], p + ".dot"), dec_hopf(F, x["circ"], p + ".circ"))
    if kind == "matched_pair":
        _obj(x, p, ("K", "H", "lact", "ract"))
        return _wrap(MatchedPair, p, dec_hopf(F, x["K"], p + ".K"), dec_hopf(F, x["H"], p + ".H"),
                     dec_action(F, x["lact"], p + ".lact"), dec_action(F, x["ract"], p + ".ract"))
    if kind == "post_hopf":
        _obj(x, p, ("base", "triangle"))
        H = dec_hopf(F, x["base"], p + ".base")
        tri = dec_action(F, x["triangle"], p + ".triangle")
        _wrap(tri.expect, p + ".triangle", H.dims, H.dims, H.dims, lambda a, b: b)
        # psi is never stored; it is solved when the structure is checked
        return PostHopfStructure(H, tri, None)
    if kind == "rota_baxter":
        _obj(x, p, ("algebra", "B"))
        H = dec_hopf(F, x["algebra"], p + ".algebra")
        return RotaBaxterOperator(H, dec_map(F, x["B"], p + ".B", H.space, H.space))
    if kind == "factorization":
        _obj(x, p, ("algebra", "G", "K"))
        H = dec_hopf(F, x["algebra"], p + ".algebra")
        n = H.group.size
        G = {a: dec_matrix(F, m, f"{p}.G[{a}]") for a, m in enumerate(_list(x["G"], p + ".G", n))}
        K = {a: dec_matrix(F, m, f"{p}.K[{a}]") for a, m in enumerate(_list(x["K"], p + ".K", n))}
        return H, Factorization(G, K)
    if kind == "action":
        _obj(x, p, ("acting", "target", "action"))
        K = dec_hopf(F, x["acting"], p + ".acting")
        H = dec_hopf(F, x["target"], p + ".target")
        act = dec_action(F, x["action"], p + ".action")
        _wrap(act.expect, p + ".action", K.dims, H.dims, H.dims, lambda a, g: g)
        return K, H, act
    raise InputError(f"unknown kind {kind!r}")


# public API -----------------------------------------------------------

def to_document(kind: str, obj, field: Field | None = None) -> Document:
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}")
    if field is None:
        if kind == "group":
            field = QQ
        elif kind in ("factorization", "action"):
            field = obj[0].field
        else:
            field = obj.field
    return Document(field, kind, obj)


def dumps(doc: Document) -> str:
    body = {"format_version": FORMAT_VERSION, "field": doc.field.descriptor, "kind": doc.kind,
            "payload": _enc_payload(doc.kind, doc.payload)}
    return json.dumps(body, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def dump(kind: str, obj, field: Field | None = None) -> str:
    return dumps(to_document(kind, obj, field))


def parse_document(data) -> Document:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"offset {exc.start}: not UTF-8") from None
    try:
        raw = json.loads(data, object_pairs_hook=_no_dupes, parse_float=_reject_float,
                         parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _obj(raw, "document", ("format_version", "field", "kind", "payload"))
    if raw["format_version"] != FORMAT_VERSION:
        _fail("format_version", f"unsupported version {raw['format_version']!r}")
    if not isinstance(raw["field"], str):
        _fail("field", "expected a descriptor string")
    F = _wrap(Field.from_descriptor, "field", raw["field"])
    kind = raw["kind"]
    if kind not in KINDS:
        _fail("kind", f"unknown kind {kind!r}")
    return Document(F, kind, _dec_payload(F, kind, raw["payload"]))


def _reject_float(token):
    raise InputError(f"non-exact number {token} (write rationals as strings)")


def load(path) -> Document:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(data)


def same_canonical(kind, a, b) -> bool:
    """Equality after canonical serialization."""
    return dump(kind, a) == dump(kind, b)


__all__ = ["Document", "KINDS", "FORMAT_VERSION", "dumps", "dump", "parse_document", "load", "to_document",
           "same_canonical"]
