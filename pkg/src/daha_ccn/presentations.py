"""Machine-readable presentations and a generic relation verifier.

A relation is stored as a pair of linear combinations of group words; group
relations have a single word with coefficient 1 on each side, while the
degenerate (additive) Hecke relations carry genuine scalar coefficients and
constant terms.  Words are reduced sequences of (generator, +-1).

The verifier evaluates both sides of every relation under a concrete
assignment of generators to operators.  Two operator semantics are
supported: exact sparse matrices (compared entrywise, optionally after
restriction to an invariant subspace) and operators on Laurent polynomials
(compared on a supplied set of test polynomials).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Matrix, hecke_check
from .scalars import QUANTUM


class PresentationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def wmul(*words):
    """Concatenate words, cancelling adjacent g g^-1 pairs."""
    out = []
    for word in words:
        for g, e in word:
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((g, e))
    return tuple(out)


def winv(word):
    return tuple((g, -e) for g, e in reversed(word))


def wpow(word, k):
    if k == 0:
        return ()
    base = word if k > 0 else winv(word)
    return wmul(*([base] * abs(k)))


def gen_word(name, exp=1):
    return ((name, 1),) * exp if exp >= 0 else ((name, -1),) * (-exp)


# -- the standard abbreviations T_{(i...j)}, P_i, X_i, Y_i ------------------

def word_Tij(i, j):
    """T_{(i...j)}: T_i T_{i+1} ... T_{j-1} for j > i, T_{i-1} ... T_j for
    i > j, empty for i = j."""
    if i == j:
        return ()
    if j > i:
        return tuple(("T%d" % k, 1) for k in range(i, j))
    return tuple(("T%d" % k, 1) for k in range(i - 1, j - 1, -1))


def word_Pi(i, n):
    """P_i = T_i ... T_{n-1} T_n T_{n-1} ... T_i."""
    up = tuple(("T%d" % k, 1) for k in range(i, n))
    down = tuple(("T%d" % k, 1) for k in range(n - 1, i - 1, -1))
    return wmul(up, (("T%d" % n, 1),), down)


def word_Xi(i, n):
    """X_i = P_i^-1 T_{(1...i)}^-1 K_0^-1 T_{(1...i)}."""
    return wmul(winv(word_Pi(i, n)), winv(word_Tij(1, i)),
                (("K0", -1),), word_Tij(1, i))


def word_Yi(i, n):
    """Y_i = P_i T_{(i...1)} T_0 T_{(i...1)}^-1."""
    return wmul(word_Pi(i, n), word_Tij(i, 1), (("T0", 1),),
                winv(word_Tij(i, 1)))


_MACROS = ("P", "X", "Y")


def expand_macro(tokens, n):
    """Expand a token sequence into a reduced word over primitive generators.

    Tokens are (symbol, exponent) with symbol one of T<i>, K0, P<i>, X<i>,
    Y<i> or "T(i..j)".
    """
    words = []
    for sym, exp in tokens:
        if sym.startswith("T(") and sym.endswith(")"):
            lo, hi = sym[2:-1].split("..")
            i, j = int(lo), int(hi)
            if not (0 <= i <= n and 0 <= j <= n):
                raise PresentationError("index out of range in %s" % sym)
            base = word_Tij(i, j)
        elif sym[0] in _MACROS and sym[1:].isdigit():
            i = int(sym[1:])
            if not 1 <= i <= n:
                raise PresentationError("index out of range in %s" % sym)
            base = {"P": word_Pi, "X": word_Xi, "Y": word_Yi}[sym[0]](i, n)
        else:
            base = gen_word(sym)
        words.append(wpow(base, exp))
    return wmul(*words)


# ---------------------------------------------------------------------------
# presentation data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    label: str
    lhs: tuple    # ((coeff, word), ...)
    rhs: tuple

    @staticmethod
    def group(label, lhs_word, rhs_word):
        return Relation(label, ((1, lhs_word),), ((1, rhs_word),))


@dataclass(frozen=True)
class HeckeConstraint:
    label: str
    word: tuple
    param: object          # Scalar (or Fraction in numeric settings)
    prefactor: object = 1  # scalar multiplying the word's operator


@dataclass(frozen=True)
class Presentation:
    name: str
    n: int
    generators: tuple
    relations: tuple
    hecke: tuple = ()

    def to_json_dict(self):
        def word_json(w):
            return [[g, e] for g, e in w]

        def side_json(side):
            return [[str(c), word_json(w)] for c, w in side]

        return {
            "name": self.name,
            "n": self.n,
            "generators": list(self.generators),
            "relations": [{"label": r.label, "lhs": side_json(r.lhs),
                           "rhs": side_json(r.rhs)} for r in self.relations],
            "hecke": [{"label": h.label, "word": word_json(h.word),
                       "param": str(h.param), "prefactor": str(h.prefactor)}
                      for h in self.hecke],
        }


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _braid_relations(n, name):
    """Relations of the affine C-check-C Dynkin diagram on generators
    name(0) .. name(n): adjacent simple bonds braid, the two end bonds
    (0,1) and (n-1,n) satisfy the four-term relation, distant pairs commute."""
    rels = []
    seen = set()

    def add(label, lw, rw):
        key = (lw, rw)
        if key in seen or lw == rw:
            return
        seen.add(key)
        rels.append(Relation.group(label, lw, rw))

    for i in range(0, n + 1):
        for j in range(i + 2, n + 1):
            a, b = gen_word(name(i)), gen_word(name(j))
            add("%s.%s commute" % (name(i), name(j)),
                wmul(a, b), wmul(b, a))
    for i in range(1, n - 1):
        a, b = gen_word(name(i)), gen_word(name(i + 1))
        add("braid %s.%s" % (name(i), name(i + 1)),
            wmul(a, b, a), wmul(b, a, b))
    for i, j in ((0, 1), (n - 1, n)):
        if i < 0 or i == j:
            continue
        a, b = gen_word(name(i)), gen_word(name(j))
        add("four-term %s.%s" % (name(i), name(j)),
            wmul(a, b, a, b), wmul(b, a, b, a))
    return rels


def weyl_ccn(n):
    name = lambda i: "s%d" % i
    rels = _braid_relations(n, name)
    for i in range(0, n + 1):
        rels.append(Relation.group("%s involution" % name(i),
                                   wmul(gen_word(name(i)), gen_word(name(i))), ()))
    return Presentation("weyl_ccn", n, tuple(name(i) for i in range(n + 1)),
                        tuple(rels))


def affine_braid_ccn(n):
    name = lambda i: "T%d" % i
    rels = _braid_relations(n, name)
    return Presentation("affine_braid_ccn", n,
                        tuple(name(i) for i in range(n + 1)), tuple(rels))


def double_affine_braid_ccn(n):
    base = affine_braid_ccn(n)
    rels = list(base.relations)
    K0 = gen_word("K0")
    T1 = gen_word("T1")
    for i in range(2, n + 1):
        Ti = gen_word("T%d" % i)
        rels.append(Relation.group("K0.T%d commute" % i,
                                   wmul(K0, Ti), wmul(Ti, K0)))
    if n >= 1:
        rels.append(Relation.group("four-term T1.K0",
                                   wmul(T1, K0, T1, K0), wmul(K0, T1, K0, T1)))
        rels.append(Relation.group(
            "T0.T1^-1 K0 T1 commute",
            wmul(gen_word("T0"), winv(T1), K0, T1),
            wmul(winv(T1), K0, T1, gen_word("T0"))))
    return Presentation("double_affine_braid_ccn", n,
                        base.generators + ("K0",), tuple(rels))


def daha_hecke_constraints(n):
    """T_0 ~ t_0, T_n ~ t_n, K_0 ~ u_n, (v K_0 P_1 T_0)^-1 ~ u_0,
    T_1..T_{n-1} ~ t."""
    t = QUANTUM.gen("t")
    t0 = QUANTUM.gen("t0")
    tn = QUANTUM.gen("tn")
    u0 = QUANTUM.gen("u0")
    un = QUANTUM.gen("un")
    v = QUANTUM.gen("v")
    out = [
        HeckeConstraint("T0 ~ t0", gen_word("T0"), t0),
        HeckeConstraint("T%d ~ tn" % n, gen_word("T%d" % n), tn),
        HeckeConstraint("K0 ~ un", gen_word("K0"), un),
        HeckeConstraint("(v K0 P1 T0)^-1 ~ u0",
                        winv(wmul(gen_word("K0"), word_Pi(1, n),
                                  gen_word("T0"))),
                        u0, prefactor=v.inv()),
    ]
    for i in range(1, n):
        out.append(HeckeConstraint("T%d ~ t" % i, gen_word("T%d" % i), t))
    return tuple(out)


def daha_ccn(n):
    base = double_affine_braid_ccn(n)
    return Presentation("daha_ccn", n, base.generators, base.relations,
                        daha_hecke_constraints(n))


def newgen_relations(n, expand=True):
    """The relation list of the alternate generating set: commuting X and Y
    families, the T-conjugations moving indices, and locality.

    With expand=True the X_i / Y_i are replaced by their defining words over
    T_0..T_n, K_0, so the relations can be checked on the primitive
    generators.
    """
    if expand:
        X = lambda i: word_Xi(i, n)
        Y = lambda i: word_Yi(i, n)
    else:
        X = lambda i: gen_word("X%d" % i)
        Y = lambda i: gen_word("Y%d" % i)
    T = lambda i: gen_word("T%d" % i)
    rels = []
    for i in range(1, n):
        rels.append(Relation.group("T%d Y%d T%d = Y%d" % (i, i + 1, i, i),
                                   wmul(T(i), Y(i + 1), T(i)), Y(i)))
        rels.append(Relation.group("T%d X%d T%d = X%d" % (i, i, i, i + 1),
                                   wmul(T(i), X(i), T(i)), X(i + 1)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation.group("X%d.X%d commute" % (i, j),
                                       wmul(X(i), X(j)), wmul(X(j), X(i))))
            rels.append(Relation.group("Y%d.Y%d commute" % (i, j),
                                       wmul(Y(i), Y(j)), wmul(Y(j), Y(i))))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append(Relation.group("T%d.Y%d commute" % (i, j),
                                       wmul(T(i), Y(j)), wmul(Y(j), T(i))))
            rels.append(Relation.group("T%d.X%d commute" % (i, j),
                                       wmul(T(i), X(j)), wmul(X(j), T(i))))
    if n >= 2:
        rels.append(Relation.group("T%d.Y%d commute" % (n, n - 1),
                                   wmul(T(n), Y(n - 1)), wmul(Y(n - 1), T(n))))
        rels.append(Relation.group("T%d.X%d commute" % (n, n - 1),
                                   wmul(T(n), X(n - 1)), wmul(X(n - 1), T(n))))
    PY = wmul(winv(word_Pi(1, n)) if expand else winv(gen_word("P1")), Y(1))
    for i in range(2, n):
        rels.append(Relation.group("X%d.(P1^-1 Y1) commute" % i,
                                   wmul(X(i), PY), wmul(PY, X(i))))
    return tuple(rels)


def newgen_ccn(n):
    """Abstract alternate presentation (X_i, Y_i as named generators)."""
    gens = tuple("T%d" % i for i in range(1, n + 1)) \
        + tuple("X%d" % i for i in range(1, n + 1)) \
        + tuple("Y%d" % i for i in range(1, n + 1)) + ("P1",)
    return Presentation("newgen_ccn", n, gens, newgen_relations(n, expand=False))


def newgen_hecke_constraints(n):
    """Y_n T_n^-1 ~ t_0, T_n ~ t_n, X_n^-1 T_n^-1 ~ u_n,
    v^-1 Y_1^-1 P_1 X_1 ~ u_0, T_i ~ t (expanded words)."""
    t = QUANTUM.gen("t")
    t0 = QUANTUM.gen("t0")
    tn = QUANTUM.gen("tn")
    u0 = QUANTUM.gen("u0")
    un = QUANTUM.gen("un")
    v = QUANTUM.gen("v")
    Tn = gen_word("T%d" % n)
    out = [
        HeckeConstraint("Yn Tn^-1 ~ t0",
                        wmul(word_Yi(n, n), winv(Tn)), t0),
        HeckeConstraint("Tn ~ tn", Tn, tn),
        HeckeConstraint("Xn^-1 Tn^-1 ~ un",
                        wmul(winv(word_Xi(n, n)), winv(Tn)), un),
        HeckeConstraint("v^-1 Y1^-1 P1 X1 ~ u0",
                        wmul(winv(word_Yi(1, n)), word_Pi(1, n),
                             word_Xi(1, n)),
                        u0, prefactor=v.inv()),
    ]
    for i in range(1, n):
        out.append(HeckeConstraint("T%d ~ t" % i, gen_word("T%d" % i), t))
    return tuple(out)


def lemma_word_identities(n):
    """Word identities of the T_{(i..j)} / P_i calculus, checked under any
    braid-passing assignment."""
    rels = []
    for i in range(1, n):
        rels.append(Relation.group(
            "T%d P%d T%d = P%d" % (i, i + 1, i, i),
            wmul(gen_word("T%d" % i), word_Pi(i + 1, n), gen_word("T%d" % i)),
            word_Pi(i, n)))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append(Relation.group(
                "T%d.P%d commute" % (i, j),
                wmul(gen_word("T%d" % i), word_Pi(j, n)),
                wmul(word_Pi(j, n), gen_word("T%d" % i))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation.group(
                "P%d.P%d commute" % (i, j),
                wmul(word_Pi(i, n), word_Pi(j, n)),
                wmul(word_Pi(j, n), word_Pi(i, n))))
    # the three T_(i..j) commutation cases
    ranges = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for (i, j) in ranges:
        for (k, l) in ranges:
            seg1 = set(range(min(i, j), max(i, j) + 1))
            seg2 = set(range(min(k, l), max(k, l) + 1))
            a, b = word_Tij(i, j), word_Tij(k, l)
            if not (seg1 & seg2):
                rels.append(Relation.group(
                    "T(%d..%d).T(%d..%d) disjoint" % (i, j, k, l),
                    wmul(a, b), wmul(b, a)))
            elif seg1 < seg2 and k > l:
                rels.append(Relation.group(
                    "T(%d..%d) through T(%d..%d) up" % (i, j, k, l),
                    wmul(a, b), wmul(b, word_Tij(i + 1, j + 1))))
            elif seg1 < seg2 and k < l:
                rels.append(Relation.group(
                    "T(%d..%d) through T(%d..%d) down" % (i, j, k, l),
                    wmul(a, b), wmul(b, word_Tij(i - 1, j - 1))))
    return tuple(rels)


def daha_sahi_relations(n):
    """Everything the Sahi operators must satisfy: the double affine braid
    relations, the five Hecke constraints, the alternate-generator relations
    (expanded), and the alternate Hecke constraints."""
    base = double_affine_braid_ccn(n)
    rels = base.relations + newgen_relations(n, expand=True) \
        + lemma_word_identities(n)
    hecke = daha_hecke_constraints(n) + newgen_hecke_constraints(n)
    return Presentation("daha_sahi_relations", n, base.generators,
                        rels, hecke)


def dAHA_bcn(n, kappa1, kappa2):
    """Degenerate affine Hecke algebra of type BC_n: Weyl generators
    s_1..s_{n-1}, gn and commuting y_1..y_n with the additive cross
    relations."""
    s = lambda i: gen_word("s%d" % i)
    y = lambda i: gen_word("y%d" % i)
    gn = gen_word("gn")
    rels = []
    for i in range(1, n):
        rels.append(Relation(
            "s%d y%d - y%d s%d = kappa1" % (i, i, i + 1, i),
            ((1, wmul(s(i), y(i))),),
            ((1, wmul(y(i + 1), s(i))), (kappa1, ()))))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append(Relation.group("[s%d, y%d] = 0" % (i, j),
                                       wmul(s(i), y(j)), wmul(y(j), s(i))))
    rels.append(Relation(
        "gn yn + yn gn = kappa2",
        ((1, wmul(gn, y(n))), (1, wmul(y(n), gn))),
        ((kappa2, ()),)))
    for j in range(1, n):
        rels.append(Relation.group("[gn, y%d] = 0" % j,
                                   wmul(gn, y(j)), wmul(y(j), gn)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation.group("[y%d, y%d] = 0" % (i, j),
                                       wmul(y(i), y(j)), wmul(y(j), y(i))))
    gens = tuple("s%d" % i for i in range(1, n)) + ("gn",) \
        + tuple("y%d" % i for i in range(1, n + 1))
    return Presentation("dAHA_bcn", n, gens, tuple(rels))


def dDAHA_bcn(n, t, k1, k2, k3):
    """Degenerate double affine Hecke algebra of type BC_n, relations i)-v).

    Generators: s_ij (i<j), gamma_i, x_i, y_i.  The x and y families each
    commute; the remaining relations are emitted literally.
    """
    s = lambda i, j: gen_word("s%d_%d" % (min(i, j), max(i, j)))
    g = lambda i: gen_word("g%d" % i)
    x = lambda i: gen_word("x%d" % i)
    y = lambda i: gen_word("y%d" % i)
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation.group("[x%d, x%d] = 0" % (i, j),
                                       wmul(x(i), x(j)), wmul(x(j), x(i))))
            rels.append(Relation.group("[y%d, y%d] = 0" % (i, j),
                                       wmul(y(i), y(j)), wmul(y(j), y(i))))
    for i in range(1, n):
        si = s(i, i + 1)
        rels.append(Relation.group("i) s%d x%d = x%d s%d" % (i, i, i + 1, i),
                                   wmul(si, x(i)), wmul(x(i + 1), si)))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append(Relation.group("i) [s%d, x%d] = 0" % (i, j),
                                       wmul(si, x(j)), wmul(x(j), si)))
        rels.append(Relation(
            "ii) s%d y%d - y%d s%d = k1" % (i, i, i + 1, i),
            ((1, wmul(si, y(i))),),
            ((1, wmul(y(i + 1), si)), (k1, ()))))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append(Relation.group("ii) [s%d, y%d] = 0" % (i, j),
                                       wmul(si, y(j)), wmul(y(j), si)))
    rels.append(Relation(
        "iii) gn yn + yn gn = k2 + k3",
        ((1, wmul(g(n), y(n))), (1, wmul(y(n), g(n)))),
        ((k2 + k3, ()),)))
    rels.append(Relation.group("iii) gn xn = xn^-1 gn",
                               wmul(g(n), x(n)), wmul(winv(x(n)), g(n))))
    for j in range(1, n):
        rels.append(Relation.group("iii) [gn, y%d] = 0" % j,
                                   wmul(g(n), y(j)), wmul(y(j), g(n))))
        rels.append(Relation.group("iii) [gn, x%d] = 0" % j,
                                   wmul(g(n), x(j)), wmul(x(j), g(n))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gg = wmul(g(i), g(j))
            rels.append(Relation(
                "iv) [y%d, x%d]" % (j, i),
                ((1, wmul(y(j), x(i))), (-1, wmul(x(i), y(j)))),
                ((k1, wmul(x(i), s(i, j))), (-k1, wmul(x(i), s(i, j), gg)))))
            rels.append(Relation(
                "iv) [y%d, x%d]" % (i, j),
                ((1, wmul(y(i), x(j))), (-1, wmul(x(j), y(i)))),
                ((k1, wmul(x(i), s(i, j))), (-k1, wmul(x(j), s(i, j), gg)))))
    for i in range(1, n + 1):
        lhs = ((1, wmul(y(i), x(i))), (-1, wmul(x(i), y(i))))
        rhs = [(t, x(i))]
        for k in range(i + 1, n + 1):
            rhs.append((-k1, wmul(x(i), s(i, k))))
        for k in range(1, i):
            rhs.append((-k1, wmul(s(i, k), x(i))))
        for k in range(1, n + 1):
            if k == i:
                continue
            rhs.append((-k1, wmul(x(i), s(i, k), g(i), g(k))))
        rhs.append((-(k2 + k3), wmul(x(i), g(i))))
        rhs.append((-k2, g(i)))
        rels.append(Relation("v) [y%d, x%d]" % (i, i), lhs, tuple(rhs)))
    gens = tuple(sorted({gname for r in rels for side in (r.lhs, r.rhs)
                         for _, w in side for gname, _ in w}))
    return Presentation("dDAHA_bcn", n, gens, tuple(rels))


_BUILTINS = {
    "weyl_ccn": weyl_ccn,
    "affine_braid_ccn": affine_braid_ccn,
    "double_affine_braid_ccn": double_affine_braid_ccn,
    "daha_ccn": daha_ccn,
    "newgen_ccn": newgen_ccn,
    "daha_hecke_newgen": lambda n: Presentation(
        "daha_hecke_newgen", n, double_affine_braid_ccn(n).generators, (),
        newgen_hecke_constraints(n)),
    "daha_sahi_relations": daha_sahi_relations,
}


def builtin_presentation(name, n, **params):
    """Look up a named presentation.  dAHA_bcn / dDAHA_bcn take their
    parameter scalars as keyword arguments."""
    if name == "dAHA_bcn":
        return dAHA_bcn(n, params["kappa1"], params["kappa2"])
    if name == "dDAHA_bcn":
        return dDAHA_bcn(n, params["t"], params["k1"], params["k2"],
                         params["k3"])
    if name not in _BUILTINS:
        raise PresentationError("unknown presentation %r" % name)
    if n < 1:
        raise PresentationError("n must be at least 1")
    return _BUILTINS[name](n)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class Assignment:
    """Generator name -> operator.  For matrix semantics, inverses are
    computed on demand (and may be supplied explicitly when a closed form is
    known).  For polynomial-operator semantics, `apply` must be a callable
    (op, poly) -> poly and inverses must be supplied for any generator that
    appears inverted."""
    ops: dict
    invs: dict = field(default_factory=dict)
    apply: object = None          # non-None switches to operator semantics
    test_polys: tuple = ()
    restrict: object = None       # basis Matrix for on-subspace comparison

    def op(self, name, exp):
        if exp == 1:
            if name not in self.ops:
                raise PresentationError("generator %r not assigned" % name)
            return self.ops[name]
        if name not in self.invs:
            base = self.ops.get(name)
            if isinstance(base, Matrix):
                self.invs[name] = base.inverse()
            else:
                raise PresentationError("no inverse assigned for %r" % name)
        return self.invs[name]


def _eval_word_matrix(asg, word, dim):
    out = Matrix.identity(dim)
    for name, exp in word:
        out = out * asg.op(name, exp)
    return out


def _eval_side_matrix(asg, side, dim):
    total = Matrix.zero(dim, dim)
    for coeff, word in side:
        m = _eval_word_matrix(asg, word, dim)
        total = total + (m.scale(coeff) if coeff != 1 else m)
    return total


def _eval_word_poly(asg, word, poly):
    for name, exp in reversed(word):
        poly = asg.apply(asg.op(name, exp), poly)
    return poly


def _eval_side_poly(asg, side, poly):
    total = None
    for coeff, word in side:
        term = _eval_word_poly(asg, word, poly)
        if coeff != 1:
            term = term * coeff
        total = term if total is None else total + term
    return total


def _matrix_dim(asg):
    for op in asg.ops.values():
        if isinstance(op, Matrix):
            return op.nrows
    raise PresentationError("no matrix operators in assignment")


def verify(pres, asg):
    """Check every relation and Hecke constraint of `pres` under `asg`.

    Returns a list of check records {name, status, residual_nonzeros}.
    """
    report = []
    if asg.apply is None:
        dim = _matrix_dim(asg)
        for rel in pres.relations:
            res = _eval_side_matrix(asg, rel.lhs, dim) \
                - _eval_side_matrix(asg, rel.rhs, dim)
            if asg.restrict is not None:
                res = res * asg.restrict
            report.append({"name": rel.label,
                           "status": "pass" if res.is_zero() else "fail",
                           "residual_nonzeros": res.nnz()})
        for hc in pres.hecke:
            X = _eval_word_matrix(asg, hc.word, dim)
            if hc.prefactor != 1:
                X = X.scale(hc.prefactor)
            x = hc.param
            xinv = x.inv() if hasattr(x, "inv") else 1 / x
            res = X.add_identity(-x) * X.add_identity(xinv)
            if asg.restrict is not None:
                res = res * asg.restrict
            report.append({"name": hc.label,
                           "status": "pass" if res.is_zero() else "fail",
                           "residual_nonzeros": res.nnz()})
    else:
        for rel in pres.relations:
            bad = 0
            for f in asg.test_polys:
                res = _eval_side_poly(asg, rel.lhs, f) \
                    - _eval_side_poly(asg, rel.rhs, f)
                if res:
                    bad += 1
            report.append({"name": rel.label,
                           "status": "pass" if not bad else "fail",
                           "residual_nonzeros": bad})
        for hc in pres.hecke:
            x = hc.param
            xinv = x.inv() if hasattr(x, "inv") else 1 / x
            bad = 0
            for f in asg.test_polys:
                Xf = _eval_word_poly(asg, hc.word, f)
                XXf = _eval_word_poly(asg, hc.word, Xf)
                if hc.prefactor != 1:
                    Xf = Xf * hc.prefactor
                    XXf = XXf * (hc.prefactor * hc.prefactor)
                res = XXf + Xf * (xinv - x) - f * (x * xinv)
                if res:
                    bad += 1
            report.append({"name": hc.label,
                           "status": "pass" if not bad else "fail",
                           "residual_nonzeros": bad})
    return report


def all_pass(report):
    return all(row["status"] == "pass" for row in report)
