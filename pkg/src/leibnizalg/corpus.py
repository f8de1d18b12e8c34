"""Built-in example algebras and seeded random families.

Random draws never sample raw structure constants: every constructor below
produces a table that satisfies the Leibniz identity by design (and the
`LeibnizAlgebra` constructor re-checks it anyway).  Families:

  cyclic(alphas)   one generator a with a*a^i = a^(i+1), a*a^n given by the
                   coefficient vector (alpha_2..alpha_n), everything else 0
  abelian(n)       zero product
  heisenberg()     x*y = z = -y*x
  sl2()            the split three-dimensional simple Lie algebra
  aff1()           two-dimensional non-nilpotent Lie algebra h*x = x
  e4()             four-dimensional solvable algebra t*x = x, t*y = y, z*y = x
  char_p_counterexample(p)
                   sl2 tensored with the truncated polynomials F_p[a]/(a^p),
                   extended by the derivation 1 (x) d/da; over F_p this
                   contains a nilpotent subinvariant subalgebra that no
                   solvable ideal contains, which cannot happen over Q
  direct sums and one-generator derivation extensions of the Lie entries

`reduce_mod(a, p)` reduces an integer-constant table mod p for the oracle
cross-checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import LeibnizAlgebra, direct_sum, semidirect_by_derivation
from .errors import InvalidParams, UnsupportedP
from .fields import GF, QQ, Field, PrimeField
from .linalg import Matrix, Subspace, Vector


@dataclass
class CorpusEntry:
    algebra: LeibnizAlgebra
    tag: str
    known: dict = dc_field(default_factory=dict)


def e4(field: Field = QQ) -> LeibnizAlgebra:
    """Basis x, y, z, t with t*x = x, t*y = y, z*y = x."""
    return LeibnizAlgebra.from_products(
        field, 4, {(3, 0): [(0, 1)], (3, 1): [(1, 1)], (2, 1): [(0, 1)]}, "e4"
    )


def abelian(n: int, field: Field = QQ) -> LeibnizAlgebra:
    table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    return LeibnizAlgebra(field, table, f"abelian{n}")


def heisenberg(field: Field = QQ) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_products(
        field, 3, {(0, 1): [(2, 1)], (1, 0): [(2, -1)]}, "heisenberg"
    )


def sl2(field: Field = QQ) -> LeibnizAlgebra:
    """Basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return LeibnizAlgebra.from_products(
        field,
        3,
        {
            (0, 1): [(2, 1)],
            (1, 0): [(2, -1)],
            (2, 0): [(0, 2)],
            (0, 2): [(0, -2)],
            (2, 1): [(1, -2)],
            (1, 2): [(1, 2)],
        },
        "sl2",
    )


def aff1(field: Field = QQ) -> LeibnizAlgebra:
    """Basis h, x with h*x = x, x*h = -x."""
    return LeibnizAlgebra.from_products(
        field, 2, {(0, 1): [(1, 1)], (1, 0): [(1, -1)]}, "aff1"
    )


def cyclic(alphas, field: Field = QQ) -> LeibnizAlgebra:
    """One-generator algebra of dimension n = len(alphas) + 1 on the basis
    a, a^2, ..., a^n: a*a^i = a^(i+1) for i < n and a*a^n is the combination
    of a^2..a^n given by `alphas`.  All other products vanish; the Leibniz
    identity forces the a^1 coefficient of a*a^n to be zero, which is why
    alphas starts at a^2."""
    n = len(alphas) + 1
    if n < 2:
        raise InvalidParams("cyclic algebras need dimension >= 2")
    products = {}
    for i in range(n - 1):
        products[(0, i)] = [(i + 1, 1)]
    products[(0, n - 1)] = [(k + 1, alphas[k]) for k in range(n - 1)]
    return LeibnizAlgebra.from_products(field, n, products, f"cyclic{n}")


def char_p_counterexample(p: int) -> LeibnizAlgebra:
    """Dimension 3p + 1 over F_p: M = sl2 (x) F_p[a]/(a^p) plus a generator
    acting as the derivation d/da on the tensor factor.  Basis ordering:
    (e, f, h) (x) a^s for s = 0..p-1, then the extra generator."""
    if p == 2:
        raise UnsupportedP("the construction needs p odd (sl2 degenerates mod 2)")
    f = GF(p)
    s = sl2(f)
    dim_m = 3 * p
    products = {}
    for s1 in range(p):
        for s2 in range(p):
            if s1 + s2 >= p:
                continue
            for u in range(3):
                for v in range(3):
                    out = [
                        (3 * (s1 + s2) + k, c)
                        for k, c in enumerate(s.table[u][v])
                        if not f.is_zero(c)
                    ]
                    if out:
                        products[(3 * s1 + u, 3 * s2 + v)] = (
                            products.get((3 * s1 + u, 3 * s2 + v), []) + out
                        )
    m = LeibnizAlgebra.from_products(f, dim_m, products, f"sl2@trunc{p}")
    rows = [[f.zero] * dim_m for _ in range(dim_m)]
    for s1 in range(1, p):
        for u in range(3):
            # d/da: x (x) a^s -> s * x (x) a^(s-1)
            rows[3 * (s1 - 1) + u][3 * s1 + u] = f.coerce(s1)
    d = Matrix.from_rows(f, rows)
    return semidirect_by_derivation(m, d, f"charp{p}")


def char_p_parts(a: LeibnizAlgebra, p: int) -> dict:
    """Distinguished subspaces of the char-p example, by basis position."""
    f = a.field
    n = a.dim
    m = Subspace.span(f, n, [Vector.unit(f, n, i) for i in range(3 * p)])
    l_tensor_n = Subspace.span(f, n, [Vector.unit(f, n, i) for i in range(3, 3 * p)])
    return {"tensor_part": m, "positive_degree_part": l_tensor_n}


def reduce_mod(a: LeibnizAlgebra, p: int) -> LeibnizAlgebra:
    """Reduce an integer-constant rational table mod p."""
    f = GF(p)
    table = []
    for plane in a.table:
        new_plane = []
        for row in plane:
            new_row = []
            for e in row:
                fr = Fraction(e)
                if fr.denominator != 1:
                    raise InvalidParams("table has non-integer constants; cannot reduce")
                new_row.append(f.coerce(fr.numerator))
            new_plane.append(tuple(new_row))
        table.append(tuple(new_plane))
    return LeibnizAlgebra(f, tuple(table), f"{a.name} mod {p}")


def has_integer_table(a: LeibnizAlgebra) -> bool:
    return all(
        Fraction(e).denominator == 1 for plane in a.table for row in plane for e in row
    )


def builtin_entries() -> list:
    """The fixed corpus: named algebras with frozen known facts."""
    entries = []
    a = e4(QQ)
    entries.append(
        CorpusEntry(
            a,
            "builtin:e4",
            {
                "solvable": True,
                "nilpotent": False,
                "left_center_dim": 2,
                "center_dim": 0,
                "limit_dim": 2,
                "radical_dim": 4,
                "nilradical_dim": 3,
                "cartan_rows": [["0", "0", "1", "0"], ["0", "0", "0", "1"]],
            },
        )
    )
    entries.append(
        CorpusEntry(
            sl2(QQ),
            "builtin:sl2",
            {
                "solvable": False,
                "nilpotent": False,
                "center_dim": 0,
                "radical_dim": 0,
                "nilradical_dim": 0,
                "der_dim": 3,
                "tower_limit_dim": 3,
            },
        )
    )
    entries.append(
        CorpusEntry(
            heisenberg(QQ),
            "builtin:heisenberg",
            {"solvable": True, "nilpotent": True, "center_dim": 1, "nilradical_dim": 3},
        )
    )
    entries.append(
        CorpusEntry(
            aff1(QQ),
            "builtin:aff1",
            {"solvable": True, "nilpotent": False, "der_dim": 2, "tower_limit_dim": 2},
        )
    )
    entries.append(
        CorpusEntry(
            abelian(3, QQ), "builtin:abelian3", {"solvable": True, "nilpotent": True}
        )
    )
    entries.append(
        CorpusEntry(
            cyclic([1], QQ),
            "builtin:cyclic2",
            {"solvable": True, "nilpotent": False, "limit_dim": 1},
        )
    )
    entries.append(
        CorpusEntry(
            cyclic([0, 0], QQ),
            "builtin:cyclic3-nilpotent",
            {"solvable": True, "nilpotent": True},
        )
    )
    p3 = char_p_counterexample(3)
    entries.append(
        CorpusEntry(
            p3,
            "builtin:charp3",
            {"dim": 10, **{k: v.dim for k, v in char_p_parts(p3, 3).items()}},
        )
    )
    return entries


def oracle_scope_entries() -> list:
    """Deterministic F_p corpus within the enumeration scope: (p=2, dim<=4)
    and (p=3, dim<=3) reductions and constructions."""
    out = []
    for p, max_dim in ((2, 4), (3, 3)):
        f = GF(p)
        candidates = [
            abelian(2, f),
            abelian(3, f),
            heisenberg(f),
            sl2(f),
            aff1(f),
            cyclic([1], f),
            cyclic([0, 1], f),
        ]
        if max_dim >= 4:
            candidates.append(e4(f))
            candidates.append(cyclic([0, 0, 1], f))
        out.extend(
            CorpusEntry(a, f"oracle-scope:p{p}:{a.name}") for a in candidates if a.dim <= max_dim
        )
    return out


_LIE_KINDS = ("abelian", "heisenberg", "sl2", "aff1")


def _random_lie(rng: random.Random, dim_budget: int) -> LeibnizAlgebra:
    choices = [k for k in _LIE_KINDS if (k in ("sl2", "heisenberg") and dim_budget >= 3) or
               (k == "aff1" and dim_budget >= 2) or k == "abelian"]
    kind = rng.choice(choices)
    if kind == "abelian":
        return abelian(rng.randint(1, max(1, min(3, dim_budget))), QQ)
    if kind == "heisenberg":
        return heisenberg(QQ)
    if kind == "sl2":
        return sl2(QQ)
    return aff1(QQ)


def random_entry(seed: int, min_dim: int = 2, max_dim: int = 8) -> CorpusEntry:
    """One seeded draw from the identity-preserving families."""
    rng = random.Random(seed)
    kind = rng.choice(("cyclic", "cyclic", "abelian", "lie", "sum", "semidirect"))
    if kind == "cyclic":
        n = rng.randint(max(2, min_dim), max_dim)
        alphas = [rng.randint(-2, 2) for _ in range(n - 1)]
        if rng.random() < 0.4:
            alphas = [0] * (n - 1)  # nilpotent representative
        a = cyclic(alphas, QQ)
    elif kind == "abelian":
        a = abelian(rng.randint(max(1, min_dim), max_dim), QQ)
    elif kind == "lie":
        a = _random_lie(rng, max_dim)
    elif kind == "sum":
        left = _random_lie(rng, max_dim - 2)
        rest = max_dim - left.dim
        if rest >= 2 and rng.random() < 0.7:
            right = cyclic([rng.randint(-2, 2) for _ in range(rng.randint(1, rest - 1))], QQ)
        else:
            right = abelian(max(1, rest), QQ)
        a = direct_sum(left, right, f"sum{seed}")
    else:  # semidirect: a Lie base extended by a random derivation combination
        base = _random_lie(rng, max_dim - 1)
        from .derivations import derivations

        der = derivations(base)
        if der.dim == 0:
            d = Matrix.zeros(QQ, base.dim, base.dim)
        else:
            coeffs = [rng.randint(-2, 2) for _ in range(der.dim)]
            d = Matrix.zeros(QQ, base.dim, base.dim)
            for c, b in zip(coeffs, der.basis):
                if c:
                    d = d + b.scale(c)
        a = semidirect_by_derivation(base, d, f"semidirect{seed}")
    if a.dim < min_dim or a.dim > max_dim:
        return random_entry(seed + 104729, min_dim, max_dim)
    return CorpusEntry(a, f"family:{kind}:seed{seed}")


def seeded_corpus(count: int, seed: int, min_dim: int = 2, max_dim: int = 8) -> list:
    rng = random.Random(seed)
    return [random_entry(rng.randrange(2**30), min_dim, max_dim) for _ in range(count)]
