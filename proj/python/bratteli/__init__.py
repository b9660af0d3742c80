"""Exact branching-graph and diagram-algebra computations.

Big integers come back as ``int``, rationals as ``fractions.Fraction`` and
structured results (graphs, reports, algebra elements) as plain dicts/lists.
Diagrams are lists of signed blocks: upper point i is ``i``, lower point i'
is ``-i``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _core

__version__ = _core.__version__

__all__ = [
    "algebra_mul",
    "category_contains",
    "compose",
    "count_category",
    "dim_A_n",
    "dim_young",
    "enumerate_category",
    "graph",
    "graph_dot",
    "hyperoct_dims",
    "involution",
    "k_value",
    "lambda_tower_check",
    "lifted_trace",
    "m_row",
    "partitions",
    "quotient_project",
    "tensor",
    "thoma_trace",
    "verify",
]

Blocks = Sequence[Sequence[int]]


def _rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _sizes(blocks: Blocks) -> tuple[int, int]:
    upper = max((p for b in blocks for p in b if p > 0), default=0)
    lower = max((-p for b in blocks for p in b if p < 0), default=0)
    return upper, lower


def _element(x) -> str:
    """Accepts the JSON element form or a {diagram blocks: coefficient} mapping."""
    if isinstance(x, dict) and "terms" not in x:
        terms = []
        for blocks, coeff in x.items():
            coeffs = coeff if isinstance(coeff, (list, tuple)) else [coeff]
            terms.append({"diagram": [list(b) for b in blocks], "coeffs": [_rat(c) for c in coeffs]})
        return json.dumps(terms)
    return json.dumps(x)


def dim_young(parts: Iterable[int]) -> int:
    return int(_core.dim_young(list(parts)))


def partitions(n: int) -> list[list[int]]:
    return _core.partitions(n)


def graph(kind: str, levels: int, pascalized: bool = False) -> dict:
    """The exported graph, with root dimensions as int."""
    g = json.loads(_core.graph_json(kind, levels, pascalized))
    for level in g["levels"]:
        for v in level:
            v["dim"] = int(v["dim"])
    return g


def graph_dot(kind: str, levels: int, pascalized: bool = False) -> str:
    return _core.graph_dot(kind, levels, pascalized)


def m_row(n: int) -> list[int]:
    """M(n, 0), ..., M(n, n)."""
    return [int(x) for x in _core.m_row(n)]


def k_value(n: int, k: int, l: int) -> int:
    return int(_core.k_value(n, k, l))


def hyperoct_dims(n: int) -> list[int]:
    return [int(x) for x in _core.hyperoct_dims(n)]


def dim_A_n(n: int) -> int:
    return int(_core.dim_A_n(n))


def verify(target: str, n: int) -> dict:
    return json.loads(_core.verify(target, n))


def enumerate_category(category: str, k: int) -> list:
    return json.loads(_core.enumerate_category(category, k))


def count_category(category: str, k: int) -> int:
    return _core.count_category(category, k)


def category_contains(category: str, blocks: Blocks, k: int | None = None, l: int | None = None) -> bool:
    ku, lu = _sizes(blocks)
    return _core.category_contains(category, json.dumps(blocks), ku if k is None else k, lu if l is None else l)


def compose(p: Blocks, q: Blocks, k: int | None = None, l: int | None = None, m: int | None = None):
    """p on top, q below. Returns (blocks, loops)."""
    pk, pl = _sizes(p)
    qk, qm = _sizes(q)
    k = pk if k is None else k
    l = max(pl, qk) if l is None else l
    m = qm if m is None else m
    blocks, loops = _core.compose(json.dumps(p), k, l, json.dumps(q), m)
    return json.loads(blocks), loops


def involution(p: Blocks, k: int | None = None, l: int | None = None):
    ku, lu = _sizes(p)
    return json.loads(_core.involution(json.dumps(p), ku if k is None else k, lu if l is None else l))


def tensor(p: Blocks, q: Blocks):
    return json.loads(_core.tensor(json.dumps(p), *_sizes(p), json.dumps(q), *_sizes(q)))


def _polynomials(terms: list) -> list:
    for t in terms:
        t["coeffs"] = [Fraction(c) for c in t["coeffs"]]
    return terms


def algebra_mul(x, y) -> list:
    """Product of two elements; coefficients are ascending powers of delta."""
    return _polynomials(json.loads(_core.algebra_mul(_element(x), _element(y))))


def quotient_project(x) -> list:
    return _polynomials(json.loads(_core.quotient_project(_element(x))))


def thoma_trace(alpha, beta, one_line: Sequence[int], convention: str = "cycle-length") -> Fraction:
    return Fraction(_core.thoma_trace([_rat(a) for a in alpha], [_rat(b) for b in beta], list(one_line), convention))


def lifted_trace(x, alpha, beta, delta, convention: str = "cycle-length") -> Fraction:
    return Fraction(
        _core.lifted_trace(_element(x), [_rat(a) for a in alpha], [_rat(b) for b in beta], convention, _rat(delta))
    )


def lambda_tower_check(n: int) -> dict:
    return json.loads(_core.lambda_tower_check(n))
