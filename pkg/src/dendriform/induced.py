"""Novikov-type structures induced by a weight-zero derivation, and conversions.

Each ``induce_*`` builder takes the :class:`OpTable` of a differential
(tri)dendriform algebra and returns a new table whose operations are closures
over the old ones.  The weight must be exactly zero; anything else is refused.
"""

from __future__ import annotations

from typing import Sequence

from . import identities as ids
from .errors import AxiomViolation, CommutativityViolation, ConfigError, WeightNotZero
from .identities import OpTable, check_identities


def _require_weight_zero(table: OpTable):
    lam = table.scalars.get("λ")
    if lam is None or lam:
        raise WeightNotZero(
            f"induced structures need a derivation of weight 0, table {table.name!r} has λ = {lam}")
    if table.d is None:
        raise WeightNotZero(f"table {table.name!r} has no derivation")


def _spot_check(table: OpTable, identity_list, elements, exc):
    if elements is None:
        return
    report = check_identities(table, identity_list, elements)
    for res in report.results:
        if not res.passed:
            raise exc(res.name, res.witness, res.residual)


def induce_novikov_dendriform(table: OpTable, spot_check: Sequence | None = None) -> OpTable:
    """↘ ↗ ↙ ↖ from ≺, ≻ and d, plus the sums ⊢ = ↘ + ↙ and ⊣ = ↗ + ↖."""
    _require_weight_zero(table)
    _spot_check(table, ids.LEIBNIZ_DENDRIFORM, spot_check, AxiomViolation)
    prec, succ, d = table["≺"], table["≻"], table.d
    ops = {
        "↘": lambda a, b: succ(d(a), b),
        "↗": lambda a, b: succ(a, d(b)),
        "↙": lambda a, b: prec(d(a), b),
        "↖": lambda a, b: prec(a, d(b)),
    }
    ops["⊢"] = lambda a, b: ops["↘"](a, b) + ops["↙"](a, b)
    ops["⊣"] = lambda a, b: ops["↗"](a, b) + ops["↖"](a, b)
    return OpTable(ops, None, dict(table.scalars), f"NovDend({table.name})")


def induce_novikov_tridendriform(table: OpTable, spot_check: Sequence | None = None,
                                 q_weighted: bool = False) -> OpTable:
    """The dendriform four plus ∨ = d(a)•b and ∧ = a•d(b); ⊢ and ⊣ gain ∨ and ∧.

    With ``q_weighted`` the sums use q∨ and q∧, which is what makes ⊢, ⊣
    Novikov-associative when q is not 1.
    """
    _require_weight_zero(table)
    _spot_check(table, ids.LEIBNIZ_TRIDENDRIFORM, spot_check, AxiomViolation)
    prec, succ, bullet, d = table["≺"], table["≻"], table["•"], table.d
    ops = {
        "↘": lambda a, b: succ(d(a), b),
        "↗": lambda a, b: succ(a, d(b)),
        "↙": lambda a, b: prec(d(a), b),
        "↖": lambda a, b: prec(a, d(b)),
        "∨": lambda a, b: bullet(d(a), b),
        "∧": lambda a, b: bullet(a, d(b)),
    }
    w = table.scalars["q"] if q_weighted else 1
    ops["⊢"] = lambda a, b: ops["↘"](a, b) + ops["↙"](a, b) + w * ops["∨"](a, b)
    ops["⊣"] = lambda a, b: ops["↗"](a, b) + ops["↖"](a, b) + w * ops["∧"](a, b)
    return OpTable(ops, None, dict(table.scalars), f"NovTrid({table.name})")


def induce_pre_novikov(table: OpTable, test_elements: Sequence | None = None) -> OpTable:
    """◁ = a≺d(b), ▷ = d(b)≺a and ∘ = ◁ + ▷ on a commutative dendriform algebra."""
    _require_weight_zero(table)
    _spot_check(table, ids.COMMUTATIVE_DENDRIFORM, test_elements, CommutativityViolation)
    prec, d = table["≺"], table.d
    ops = {
        "◁": lambda a, b: prec(a, d(b)),
        "▷": lambda a, b: prec(d(b), a),
    }
    ops["∘"] = lambda a, b: ops["◁"](a, b) + ops["▷"](a, b)
    return OpTable(ops, None, dict(table.scalars), f"PreNov({table.name})")


def induce_post_novikov(table: OpTable, test_elements: Sequence | None = None,
                        q_weighted: bool = False) -> OpTable:
    """◁ = a≺d(b), ▷ = a≻d(b), ⊻ = a•d(b) and ∘ = ◁ + ▷ + ⊻ (q⊻ if ``q_weighted``)."""
    _require_weight_zero(table)
    _spot_check(table, ids.COMMUTATIVE_TRIDENDRIFORM, test_elements, CommutativityViolation)
    prec, succ, bullet, d = table["≺"], table["≻"], table["•"], table.d
    ops = {
        "◁": lambda a, b: prec(a, d(b)),
        "▷": lambda a, b: succ(a, d(b)),
        "⊻": lambda a, b: bullet(a, d(b)),
    }
    w = table.scalars["q"] if q_weighted else 1
    ops["∘"] = lambda a, b: ops["◁"](a, b) + ops["▷"](a, b) + w * ops["⊻"](a, b)
    return OpTable(ops, None, dict(table.scalars), f"PostNov({table.name})")


# --- conversions -----------------------------------------------------------


def _swap(f):
    return lambda a, b: f(b, a)


def _pre_to_nd(t):
    return {"↖": t["◁"], "↘": _swap(t["◁"]), "↗": t["▷"], "↙": _swap(t["▷"])}


def _nd_to_pre(t):
    return {"◁": t["↖"], "▷": t["↗"]}


def _post_to_ntd(t):
    ops = _pre_to_nd(t)
    ops.update({"∧": t["⊻"], "∨": _swap(t["⊻"])})
    return ops


def _ntd_to_post(t):
    return {"◁": t["↖"], "▷": t["↗"], "⊻": t["∧"]}


def _post_to_novikov(t):
    return {"∘": t["⊻"]}


def _na_to_novikov(t):
    return {"∘": t["⊣"]}


def _novikov_to_na(t):
    return {"⊣": t["∘"], "⊢": _swap(t["∘"])}


# kind -> (source axioms, builder, target name)
CONVERSIONS = {
    "pre_novikov_to_novikov_dendriform": (
        (ids.PRE_NOVIKOV,), _pre_to_nd, "novikov_dendriform"),
    "novikov_dendriform_to_pre_novikov": (
        (ids.NOVIKOV_DENDRIFORM, ids.COMMUTATIVE_NOVIKOV_DENDRIFORM), _nd_to_pre, "pre_novikov"),
    "post_novikov_to_novikov_tridendriform": (
        (ids.POST_NOVIKOV_CORRECTED,), _post_to_ntd, "novikov_tridendriform"),
    "novikov_tridendriform_to_post_novikov": (
        (ids.NOVIKOV_TRIDENDRIFORM, ids.COMMUTATIVE_NOVIKOV_TRIDENDRIFORM), _ntd_to_post,
        "post_novikov"),
    "post_novikov_to_novikov": ((ids.POST_NOVIKOV_CORRECTED,), _post_to_novikov, "novikov"),
    "novikov_associative_to_novikov": (
        (ids.NOVIKOV_ASSOCIATIVE, ids.COMMUTATIVE_NOVIKOV_ASSOCIATIVE), _na_to_novikov, "novikov"),
    "novikov_to_novikov_associative": ((ids.NOVIKOV,), _novikov_to_na, "novikov_associative"),
}


def convert(kind: str, table: OpTable, test_elements: Sequence,
            source_axioms: Sequence | None = None) -> OpTable:
    """Re-express a structure in another signature after checking its own axioms.

    The source is verified on ``test_elements`` first; the first failing
    identity raises :class:`AxiomViolation` with its witness tuple.  Post-Novikov
    sources are checked against the corrected list unless ``source_axioms``
    says otherwise.
    """
    try:
        sources, build, target = CONVERSIONS[kind]
    except KeyError:
        raise ConfigError(f"unknown conversion {kind!r}; known: {sorted(CONVERSIONS)}") from None
    if source_axioms is not None:
        sources = tuple(source_axioms)
    for lst in sources:
        _spot_check(table, lst, test_elements, AxiomViolation)
    return OpTable(build(table), table.d, dict(table.scalars), f"{target}({table.name})")
