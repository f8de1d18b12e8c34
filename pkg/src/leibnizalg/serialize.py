"""JSON document format for algebras and subspaces.

An algebra document is

    {"name": str,
     "field": {"kind": "Q"} | {"kind": "Fp", "p": int},
     "dim": int,
     "products": [{"i": int, "j": int, "out": [[k, "coeff"], ...]}, ...]}

with 1-based basis indices; omitted products are zero and coefficients are
scalar literals (``[-]digits[/digits]``).  Subspaces serialize as lists of
coefficient-string rows (the canonical echelon basis), so equal subspaces
serialize to identical bytes.
"""

from __future__ import annotations

from .algebra import LeibnizAlgebra
from .errors import IndexOutOfRange, ParseError
from .fields import GF, QQ, Field, PrimeField
from .linalg import Subspace, Vector


def field_to_dict(f: Field) -> dict:
    if isinstance(f, PrimeField):
        return {"kind": "Fp", "p": f.p}
    return {"kind": "Q"}


def field_from_dict(d) -> Field:
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError("field must be an object with a 'kind'")
    if d["kind"] == "Q":
        return QQ
    if d["kind"] == "Fp":
        p = d.get("p")
        if not isinstance(p, int):
            raise ParseError("field of kind 'Fp' needs an integer 'p'")
        return GF(p)
    raise ParseError(f"unknown field kind {d['kind']!r}")


def algebra_to_dict(a: LeibnizAlgebra) -> dict:
    f = a.field
    products = []
    for i in range(a.dim):
        for j in range(a.dim):
            out = [
                [k + 1, f.render(c)] for k, c in enumerate(a.table[i][j]) if not f.is_zero(c)
            ]
            if out:
                products.append({"i": i + 1, "j": j + 1, "out": out})
    return {
        "name": a.name,
        "field": field_to_dict(f),
        "dim": a.dim,
        "products": products,
    }


def algebra_from_dict(d) -> LeibnizAlgebra:
    if not isinstance(d, dict):
        raise ParseError("algebra document must be a JSON object")
    f = field_from_dict(d.get("field"))
    dim = d.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("'dim' must be a non-negative integer")
    name = d.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    products = d.get("products", [])
    if not isinstance(products, list):
        raise ParseError("'products' must be a list")
    sparse = {}
    for entry in products:
        if not isinstance(entry, dict):
            raise ParseError("each product must be an object")
        i, j, out = entry.get("i"), entry.get("j"), entry.get("out", [])
        if not isinstance(i, int) or not isinstance(j, int):
            raise ParseError("product indices must be integers")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise IndexOutOfRange(f"product index ({i},{j}) outside 1..{dim}")
        if not isinstance(out, list):
            raise ParseError("'out' must be a list of [index, coeff] pairs")
        terms = []
        for pair in out:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ParseError("'out' entries must be [index, coeff] pairs")
            k, coeff = pair
            if not isinstance(k, int):
                raise ParseError("output basis index must be an integer")
            if not 1 <= k <= dim:
                raise IndexOutOfRange(f"output index {k} outside 1..{dim}")
            if not isinstance(coeff, str):
                raise ParseError("coefficients must be scalar strings")
            terms.append((k - 1, f.parse(coeff)))
        sparse[(i - 1, j - 1)] = sparse.get((i - 1, j - 1), []) + terms
    return LeibnizAlgebra.from_products(f, dim, sparse, name)


def subspace_to_rows(s: Subspace) -> list:
    return s.render_rows()


def vectors_from_rows(rows, f: Field, dim: int) -> list:
    vecs = []
    for row in rows:
        if not isinstance(row, (list, tuple)):
            raise ParseError("subspace rows must be lists of scalar strings")
        if len(row) != dim:
            raise ParseError(f"vector has {len(row)} coordinates, expected {dim}")
        vecs.append(Vector(f, tuple(f.parse(c) for c in row)))
    return vecs


def subspace_from_rows(rows, f: Field, dim: int) -> Subspace:
    return Subspace.span(f, dim, vectors_from_rows(rows, f, dim))


def parse_subspace_arg(text: str, f: Field, dim: int) -> Subspace:
    """CLI form: vectors separated by ';', coordinates by ','."""
    rows = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        rows.append([c.strip() for c in part.split(",")])
    return subspace_from_rows(rows, f, dim)
