"""Named check suites over the three models, driven by a JSON config.

A config is a dict like::

    {"model": "tridend", "generators": ["x"], "max_size": 5, "max_order": 0,
     "lam": "sym", "q": "sym", "suites": ["axioms", "leibniz"]}

Sizes: a tree counts its decorations (leaves minus one), a word its length.
A tuple of test elements is used when its sizes add up to at most
``max_size``.  Each check yields one JSON-ready record with a ``status`` of
``pass``, ``fail`` or ``skip``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from . import identities as ids
from .dend import FreeDendriform
from .dend import f_bar as dd_f_bar
from .diffalg import DiffMonomial, DiffVar, d0, poly_mul
from .errors import ConfigError, DendriformError, ParseError
from .identities import OpTable, check_identities, tuples_up_to
from .induced import (induce_novikov_dendriform, induce_novikov_tridendriform,
                      induce_post_novikov, induce_pre_novikov)
from .koszul import verify_duality
from .qshuffle import QuasiShuffleAlgebra, TensorWord, psi_bar
from .scalars import LAM, ONE, Q, ZERO, LinComb, Scalar, parse_parameter
from .trees import enumerate_binary, enumerate_schroeder, make_alphabet
from .tridend import FreeTridendriform
from .tridend import f_bar as dt_f_bar

log = logging.getLogger(__name__)

MODELS = ("qshuffle", "tridend", "dend")
SUITES = ("axioms", "leibniz", "commutativity", "universal", "induced", "koszul", "counts")
MUTATIONS = ("swap_prec_succ", "drop_lambda", "scale_bullet")
DEFAULTS = {"model": "tridend", "generators": ["x"], "max_size": 4, "max_order": 0,
            "lam": "sym", "q": "sym", "suites": ["axioms"]}
_KNOWN_KEYS = set(DEFAULTS) | {"mutation"}

# OEIS A001003 (little Schröder) and A000108 (Catalan), indexed by degree
SCHROEDER = [1, 1, 3, 11, 45, 197, 903, 4279, 20793]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


class DendriformView:
    """(T, ≺, ≻ + q•, d) for a q-tridendriform ``T``, as a dendriform target."""

    def __init__(self, base):
        self.base = base
        self.lam = base.lam
        self.q = base.q

    def prec(self, x, y):
        return self.base.prec(x, y)

    def succ(self, x, y):
        return self.base.succ(x, y) + self.q * self.base.bullet(x, y)

    def star(self, x, y):
        return self.prec(x, y) + self.succ(x, y)

    def d(self, x):
        return self.base.d(x)

    def zero(self):
        return self.base.zero()


# --- config ----------------------------------------------------------------


def validate_config(config: dict) -> dict:
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(config) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    cfg = dict(DEFAULTS)
    cfg.update(config)
    if cfg["model"] not in MODELS:
        raise ConfigError(f"model must be one of {MODELS}, got {cfg['model']!r}")
    for key in ("max_size", "max_order"):
        if not isinstance(cfg[key], int) or isinstance(cfg[key], bool):
            raise ConfigError(f"{key} must be an integer")
    if cfg["max_size"] < 1:
        raise ConfigError("max_size must be at least 1")
    if cfg["max_order"] < 0:
        raise ConfigError("max_order must be non-negative")
    gens = cfg["generators"]
    if not isinstance(gens, list) or not gens or not all(isinstance(g, str) and g.isidentifier()
                                                         for g in gens):
        raise ConfigError("generators must be a non-empty list of names")
    suites = cfg["suites"]
    if not isinstance(suites, list) or not suites:
        raise ConfigError("suites must be a non-empty list")
    bad = [s for s in suites if s not in SUITES]
    if bad:
        raise ConfigError(f"unknown suites {bad}; known: {list(SUITES)}")
    if cfg.get("mutation") is not None and cfg["mutation"] not in MUTATIONS:
        raise ConfigError(f"mutation must be one of {MUTATIONS}")
    try:
        cfg["lam_value"] = parse_parameter(cfg["lam"], LAM)
        cfg["q_value"] = parse_parameter(cfg["q"], Q)
    except ParseError as exc:
        raise ConfigError(str(exc)) from None
    return cfg


def make_model(name: str, lam=LAM, q=Q):
    lam, q = Scalar.coerce(lam), Scalar.coerce(q)
    if name == "tridend":
        return FreeTridendriform(lam, q)
    if name == "dend":
        return FreeDendriform(lam)
    if name == "qshuffle":
        return QuasiShuffleAlgebra(lam, q)
    raise ConfigError(f"unknown model {name!r}")


def model_table(model) -> OpTable:
    return model.op_table()


def _mutate(table: OpTable, mutation: str | None) -> OpTable:
    if not mutation:
        return table
    ops = dict(table.ops)
    if mutation == "swap_prec_succ":
        ops["≺"], ops["≻"] = table.ops["≻"], table.ops["≺"]
        return OpTable(ops, table.d, table.scalars, table.name + "[swapped]")
    if mutation == "drop_lambda":
        scalars = dict(table.scalars)
        scalars["λ"] = ZERO
        return OpTable(ops, table.d, scalars, table.name + "[λ dropped]")
    if mutation == "scale_bullet" and "•" in ops:
        bullet = ops["•"]
        ops["•"] = lambda a, b: 2 * bullet(a, b)
        return OpTable(ops, table.d, table.scalars, table.name + "[2•]")
    return table


# --- test elements ---------------------------------------------------------


def element_size(e: LinComb) -> int:
    b = next(iter(e._terms))
    return len(b) if isinstance(b, TensorWord) else b.n_decorations


def tree_elements(model: str, generators, max_order: int, max_degree: int) -> list:
    alphabet = make_alphabet(generators, max_order)
    enum = enumerate_schroeder if model == "tridend" else enumerate_binary
    return [LinComb.basis(t) for n in range(2, max_degree + 2) for t in enum(alphabet, n)]


def word_elements(generators, max_order: int, max_length: int) -> list:
    letters = sorted(DiffMonomial((DiffVar(g, o),)) for g in generators
                     for o in range(max_order + 1))
    words = []
    for n in range(1, max_length + 1):
        words.extend(TensorWord(p) for p in product(letters, repeat=n))
    return [LinComb.basis(w) for w in sorted(words)]


def sample_elements(cfg: dict, max_degree: int | None = None) -> list:
    top = cfg["max_size"] if max_degree is None else max_degree
    if cfg["model"] == "qshuffle":
        return word_elements(cfg["generators"], cfg["max_order"], top)
    return tree_elements(cfg["model"], cfg["generators"], cfg["max_order"], top)


# --- records ---------------------------------------------------------------


def _records(suite: str, report) -> list:
    out = []
    for r in report.results:
        rec = {"suite": suite}
        rec.update(r.to_dict())
        out.append(rec)
    return out


def _rec(suite, name, ok, **extra):
    rec = {"suite": suite, "name": name, "status": "pass" if ok else "fail"}
    rec.update(extra)
    return rec


def _skip(suite, name, note):
    return {"suite": suite, "name": name, "status": "skip", "note": note}


# --- the suites ------------------------------------------------------------


def _axiom_lists(model: str):
    if model == "dend":
        return ids.DENDRIFORM + ids.STAR_ASSOCIATIVE
    return ids.Q_TRIDENDRIFORM + ids.STAR_ASSOCIATIVE + ids.STAR_SPLITTING


def suite_axioms(cfg, model, table):
    els = sample_elements(cfg, max(cfg["max_size"] - 2, 1))
    report = check_identities(table, _axiom_lists(cfg["model"]), els, size=element_size,
                              max_total=cfg["max_size"])
    return _records("axioms", report)


def suite_leibniz(cfg, model, table):
    lst = ids.LEIBNIZ_DENDRIFORM if cfg["model"] == "dend" else ids.LEIBNIZ_TRIDENDRIFORM
    els = sample_elements(cfg, max(cfg["max_size"] - 1, 1))
    report = check_identities(table, lst, els, size=element_size, max_total=cfg["max_size"])
    return _records("leibniz", report)


def suite_commutativity(cfg, model, table):
    if cfg["model"] != "qshuffle":
        return [_skip("commutativity", "commutative_tridendriform",
                      "the free models are not commutative")]
    els = sample_elements(cfg, max(cfg["max_size"] - 1, 1))
    pairs = check_identities(table, ids.COMMUTATIVE_TRIDENDRIFORM + ids.STAR_COMMUTATIVE, els,
                             size=element_size, max_total=cfg["max_size"])
    els3 = sample_elements(cfg, max(cfg["max_size"] - 2, 1))
    assoc = check_identities(table, ids.STAR_ASSOCIATIVE, els3, size=element_size,
                             max_total=cfg["max_size"])
    return _records("commutativity", pairs) + _records("commutativity", assoc)


def suite_induced(cfg, model, table):
    """Weight-zero induced structures; λ is set to 0 for this suite."""
    out = []
    q = cfg["q_value"]
    zero_model = make_model(cfg["model"], ZERO, q)
    base = _mutate(zero_model.op_table(), cfg.get("mutation"))
    els = sample_elements(cfg, max(cfg["max_size"] - 2, 1))
    kw = {"size": element_size, "max_total": cfg["max_size"]}
    q_is_one = q == ONE
    if cfg["model"] == "dend":
        nd = induce_novikov_dendriform(base)
        out += _records("induced", check_identities(nd, ids.NOVIKOV_DENDRIFORM, els, **kw))
        out += _records("induced", check_identities(nd, ids.NOVIKOV_ASSOCIATIVE, els, **kw))
    elif cfg["model"] == "tridend":
        ntd = induce_novikov_tridendriform(base, q_weighted=not q_is_one)
        lst = ids.NOVIKOV_TRIDENDRIFORM if q_is_one else ids.NOVIKOV_TRIDENDRIFORM_Q
        out += _records("induced", check_identities(ntd, lst, els, **kw))
        out += _records("induced", check_identities(ntd, ids.NOVIKOV_ASSOCIATIVE, els, **kw))
    else:
        if q == ZERO:
            shuffle = QuasiShuffleAlgebra(ZERO, ZERO, shuffle=True)
            sh = _mutate(shuffle.op_table(), cfg.get("mutation"))
            pn = induce_pre_novikov(sh)
            out += _records("induced", check_identities(pn, ids.PRE_NOVIKOV, els, **kw))
            out += _records("induced", check_identities(pn, ids.NOVIKOV, els, **kw))
        post = induce_post_novikov(base, q_weighted=not q_is_one)
        lst = ids.POST_NOVIKOV_CORRECTED if q_is_one else ids.POST_NOVIKOV_CORRECTED_Q
        out += _records("induced", check_identities(post, lst, els, **kw))
        out += _records("induced", check_identities(post, ids.NOVIKOV, els, **kw))
    return out


def suite_koszul(cfg, model, table):
    q = cfg["q_value"]
    qs = [q.constant_value()] if q.is_constant() and q else [Fraction(1), Fraction(2),
                                                               Fraction(-1, 2)]
    out = []
    rep = verify_duality("dendriform", "diassociative")
    out.append(_rec("koszul", "dendriform/diassociative", rep["equal"], report=rep))
    for qv in qs:
        rep = verify_duality("q_tridendriform", "q_triassociative", qv)
        out.append(_rec("koszul", f"q_tridendriform/q_triassociative@q={qv}", rep["equal"],
                        report=rep))
    return out


def suite_counts(cfg, model, table):
    out = []
    k = len(cfg["generators"]) * (cfg["max_order"] + 1)
    name = cfg["model"]
    alphabet = make_alphabet(cfg["generators"], cfg["max_order"])
    for n in range(1, cfg["max_size"] + 1):
        if name == "qshuffle":
            got = sum(1 for e in word_elements(cfg["generators"], cfg["max_order"], n)
                      if element_size(e) == n)
            want = k ** n
        else:
            enum = enumerate_schroeder if name == "tridend" else enumerate_binary
            got = len(enum(alphabet, n + 1))
            want = (SCHROEDER if name == "tridend" else CATALAN)[n] * k ** n
        out.append(_rec("counts", f"{name}[size={n}]", got == want, count=got, expected=want))
    return out


def universal_generator_images(target, generators) -> dict:
    """A fixed non-trivial choice f(x) = x + x ⊗ x^(1) in the quasi-shuffle target."""
    out = {}
    for g in generators:
        x0 = DiffMonomial((DiffVar(g, 0),))
        x1 = DiffMonomial((DiffVar(g, 1),))
        out[g] = LinComb.basis(TensorWord((x0,))) + LinComb.basis(TensorWord((x0, x1)))
    return out


def diff_substitution(images: dict, lam) -> Callable:
    """The differential algebra map A -> A with x ↦ images[x], x^(n) ↦ d^n(images[x])."""
    cache: dict = {}

    def var_image(v: DiffVar):
        hit = cache.get(v)
        if hit is None:
            hit = images[v.name] if v.order == 0 else d0(var_image(DiffVar(v.name, v.order - 1)), lam)
            cache[v] = hit
        return hit

    def on_monomial(m: DiffMonomial) -> LinComb:
        out = LinComb.basis(DiffMonomial(()))
        for v in m.factors:
            out = poly_mul(out, var_image(v))
        return out

    return on_monomial


def suite_universal(cfg, model, table):
    """Morphism checks: f̄ out of a free model, or ψ̄ out of the quasi-shuffle model."""
    lam, q = cfg["lam_value"], cfg["q_value"]
    size = cfg["max_size"]
    out = []
    if cfg["model"] in ("tridend", "dend"):
        qs = QuasiShuffleAlgebra(lam, q)
        if cfg["model"] == "tridend":
            target, source, f_bar = qs, model, dt_f_bar
            ops = (("≺", "prec"), ("≻", "succ"), ("•", "bullet"))
        else:
            target, source, f_bar = DendriformView(qs), model, dd_f_bar
            ops = (("≺", "prec"), ("≻", "succ"))
        images = universal_generator_images(qs, cfg["generators"])
        cache: dict = {}
        fb = lambda x: f_bar(images.__getitem__, target, x, cache)
        src_ops = _mutate(source.op_table(), cfg.get("mutation")).ops
        els = sample_elements(cfg, max(size - 1, 1))
        for sym, meth in ops:
            op = getattr(target, meth)
            witness = None
            count = 0
            for a, b in tuples_up_to(els, 2, element_size, size):
                count += 1
                if fb(src_ops[sym](a, b)) != op(fb(a), fb(b)):
                    witness = [str(a), str(b)]
                    break
            out.append(_rec("universal", f"f_bar preserves {sym}", witness is None,
                            checked=count, **({"witness": witness} if witness else {})))
        witness, count = None, 0
        for a in sample_elements(cfg, min(size, 3)):
            count += 1
            if fb(source.d(a)) != target.d(fb(a)):
                witness = [str(a)]
                break
        out.append(_rec("universal", "f_bar intertwines d", witness is None, checked=count,
                        **({"witness": witness} if witness else {})))
        return out
    # quasi-shuffle: ψ̄ for ψ = inclusion after a differential substitution
    source = model
    gens = cfg["generators"]
    imgs = {}
    for i, g in enumerate(gens):
        other = gens[(i + 1) % len(gens)]
        x = LinComb.basis(DiffMonomial((DiffVar(g, 0),)))
        y = LinComb.basis(DiffMonomial((DiffVar(other, 0),)))
        imgs[g] = x + poly_mul(x, y)
    sub = diff_substitution(imgs, lam)
    target = QuasiShuffleAlgebra(lam, q)
    psi = lambda m: target.include(sub(m))
    pb = lambda x: psi_bar(psi, target, x, source)
    src_ops = _mutate(source.op_table(), cfg.get("mutation")).ops
    els = sample_elements(cfg, max(min(size, 3) - 1, 1))
    for sym, meth in (("≺", "prec"), ("≻", "succ"), ("•", "bullet")):
        op = getattr(target, meth)
        witness, count = None, 0
        for a, b in tuples_up_to(els, 2, element_size, min(size, 3)):
            count += 1
            if pb(src_ops[sym](a, b)) != op(pb(a), pb(b)):
                witness = [str(a), str(b)]
                break
        out.append(_rec("universal", f"psi_bar preserves {sym}", witness is None, checked=count,
                        **({"witness": witness} if witness else {})))
    witness, count = None, 0
    for a in sample_elements(cfg, min(size, 3)):
        count += 1
        if pb(source.d(a)) != target.d(pb(a)):
            witness = [str(a)]
            break
    out.append(_rec("universal", "psi_bar intertwines d", witness is None, checked=count,
                    **({"witness": witness} if witness else {})))
    return out


_RUNNERS = {
    "axioms": suite_axioms, "leibniz": suite_leibniz, "commutativity": suite_commutativity,
    "universal": suite_universal, "induced": suite_induced, "koszul": suite_koszul,
    "counts": suite_counts,
}


def run_suite(config: dict) -> tuple:
    """Run the configured suites; returns ``(exit_code, records)``.

    The exit code is 0 exactly when no record has status ``fail``.
    """
    cfg = validate_config(config)
    model = make_model(cfg["model"], cfg["lam_value"], cfg["q_value"])
    table = _mutate(model.op_table(), cfg.get("mutation"))
    records = []
    for name in cfg["suites"]:
        log.info("running suite %s on %s", name, cfg["model"])
        try:
            records.extend(_RUNNERS[name](cfg, model, table))
        except DendriformError as exc:
            records.append({"suite": name, "name": name, "status": "fail",
                            "error": f"{type(exc).__name__}: {exc}"})
    code = 1 if any(r["status"] == "fail" for r in records) else 0
    return code, records


def iter_suite_names() -> Iterable[str]:
    return iter(SUITES)
