"""First-order field sentences: finite evaluation and bounded closure search.

The language has terms built from variables, nonnegative integer literals,
+, - and *, atomic equalities, the connectives ! & |, and quantifiers
written "E x . body" and "A x . body".  eval_finite brute-forces a sentence
over any finite field.  eval_closure approximates truth over the algebraic
closure of F_p: a quantifier whose ambient field has degree n may range
over any extension of relative degree d = 1..max_level, moving the ambient
up to degree n*d, capped by ambient_bound.  The result is three-valued,
with Unknown whenever the search was cut off by a bound or an inner
Unknown before a decisive answer appeared.

A decisive answer is promoted to a certified one exactly when finite search
proves it for the full closure: value True with every quantifier effectively
existential, or value False with every quantifier effectively universal,
where "effectively" accounts for the parity of enclosing negations.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from ._tower import lift, tower_field
from .errors import NotHomogeneous, ParseError
from .starfield import Element, FieldDescriptor, PrimeField


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Eq:
    left: object
    right: object


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Exists:
    var: str
    body: object


@dataclass(frozen=True)
class Forall:
    var: str
    body: object


_KEYWORDS = {"E", "A"}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(("kw" if word in _KEYWORDS else "name", word, i))
            i = j
            continue
        if c in "+-*=().&|!":
            toks.append((c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    """Recursive descent; the only backtrack point is '(' in atom position,
    which may open either a subformula or a parenthesized term."""

    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str):
        t = self.advance()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}", t[2])
        return t

    def formula(self):
        k, v, _ = self.peek()
        if k == "kw" and v in ("E", "A"):
            self.advance()
            name = self.advance()
            if name[0] != "name":
                raise ParseError("expected a variable name after the quantifier", name[2])
            self.expect(".")
            body = self.formula()
            return (Exists if v == "E" else Forall)(name[1], body)
        return self.or_f()

    def or_f(self):
        f = self.and_f()
        while self.peek()[0] == "|":
            self.advance()
            f = Or(f, self.and_f())
        return f

    def and_f(self):
        f = self.not_f()
        while self.peek()[0] == "&":
            self.advance()
            f = And(f, self.not_f())
        return f

    def not_f(self):
        if self.peek()[0] == "!":
            self.advance()
            return Not(self.not_f())
        return self.atom()

    def atom(self):
        if self.peek()[0] == "(":
            save = self.i
            self.advance()
            try:
                f = self.formula()
                self.expect(")")
                return f
            except ParseError:
                self.i = save
        left = self.term()
        self.expect("=")
        return Eq(left, self.term())

    def term(self):
        t = self.product()
        while self.peek()[0] in ("+", "-"):
            ctor = Add if self.advance()[0] == "+" else Sub
            t = ctor(t, self.product())
        return t

    def product(self):
        t = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            t = Mul(t, self.factor())
        return t

    def factor(self):
        k, v, pos = self.advance()
        if k == "name":
            return Var(v)
        if k == "int":
            return Lit(v)
        if k == "(":
            t = self.term()
            self.expect(")")
            return t
        raise ParseError("expected a variable, literal, or parenthesized term", pos)


def _all_names(formula) -> set[str]:
    if isinstance(formula, Var):
        return {formula.name}
    if isinstance(formula, Lit):
        return set()
    if isinstance(formula, (Add, Sub, Mul, Eq, And, Or)):
        return _all_names(formula.left) | _all_names(formula.right)
    if isinstance(formula, Not):
        return _all_names(formula.body)
    return {formula.var} | _all_names(formula.body)


def _unique_binders(formula):
    """Rename any re-bound variable so each quantifier binds a fresh name."""
    used: set[str] = set()
    taken = _all_names(formula)

    def walk(node, env):
        if isinstance(node, Var):
            return Var(env.get(node.name, node.name))
        if isinstance(node, Lit):
            return node
        if isinstance(node, (Add, Sub, Mul, Eq, And, Or)):
            return type(node)(walk(node.left, env), walk(node.right, env))
        if isinstance(node, Not):
            return Not(walk(node.body, env))
        name = node.var
        if name in used:
            k = 0
            while f"{name}{k}" in taken:
                k += 1
            name = f"{name}{k}"
        used.add(name)
        taken.add(name)
        return type(node)(name, walk(node.body, {**env, node.var: name}))

    return walk(formula, {})


def parse_sentence(text: str):
    p = _Parser(_tokenize(text))
    f = p.formula()
    k, _, pos = p.peek()
    if k != "end":
        raise ParseError("trailing input after the sentence", pos)
    return _unique_binders(f)


_OR_PREC, _AND_PREC, _NOT_PREC = 1, 2, 3


def _fmt_term(t, prec: int) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lit):
        return str(t.value)
    if isinstance(t, (Add, Sub)):
        op = "+" if isinstance(t, Add) else "-"
        s = f"{_fmt_term(t.left, 0)} {op} {_fmt_term(t.right, 1)}"
        return f"({s})" if prec > 0 else s
    s = f"{_fmt_term(t.left, 1)}*{_fmt_term(t.right, 2)}"
    return f"({s})" if prec > 1 else s


def _fmt_formula(f, prec: int) -> str:
    if isinstance(f, Eq):
        s = f"{_fmt_term(f.left, 0)} = {_fmt_term(f.right, 0)}"
        return f"({s})" if prec > _NOT_PREC + 1 else s
    if isinstance(f, Not):
        return "!" + _fmt_formula(f.body, _NOT_PREC + 2)
    if isinstance(f, And):
        s = f"{_fmt_formula(f.left, _AND_PREC)} & {_fmt_formula(f.right, _AND_PREC + 1)}"
        return f"({s})" if prec > _AND_PREC else s
    if isinstance(f, Or):
        s = f"{_fmt_formula(f.left, _OR_PREC)} | {_fmt_formula(f.right, _OR_PREC + 1)}"
        return f"({s})" if prec > _OR_PREC else s
    letter = "E" if isinstance(f, Exists) else "A"
    s = f"{letter} {f.var} . {_fmt_formula(f.body, 0)}"
    return f"({s})" if prec > 0 else s


def pretty(formula) -> str:
    """Canonical text that parse_sentence maps back to the same tree."""
    return _fmt_formula(formula, 0)


def free_variables(formula) -> frozenset[str]:
    if isinstance(formula, Var):
        return frozenset((formula.name,))
    if isinstance(formula, Lit):
        return frozenset()
    if isinstance(formula, (Add, Sub, Mul, Eq, And, Or)):
        return free_variables(formula.left) | free_variables(formula.right)
    if isinstance(formula, Not):
        return free_variables(formula.body)
    return free_variables(formula.body) - {formula.var}


def alpha_rename(formula, prefix: str = "v"):
    """Rename bound variables to prefix0, prefix1, ... in binding order.

    Free variables keep their names, and fresh names skip over them, so two
    sentences differing only in bound names get identical trees.
    """
    free = free_variables(formula)
    counter = itertools.count()

    def fresh() -> str:
        while True:
            cand = f"{prefix}{next(counter)}"
            if cand not in free:
                return cand

    def walk(node, env):
        if isinstance(node, Var):
            return Var(env.get(node.name, node.name))
        if isinstance(node, Lit):
            return node
        if isinstance(node, (Add, Sub, Mul, Eq, And, Or)):
            return type(node)(walk(node.left, env), walk(node.right, env))
        if isinstance(node, Not):
            return Not(walk(node.body, env))
        new = fresh()
        return type(node)(new, walk(node.body, {**env, node.var: new}))

    return walk(formula, {})


def expand_literals(formula):
    """Rewrite every literal above 1 as a left-nested sum of ones."""

    def term(t):
        if isinstance(t, Lit):
            if t.value <= 1:
                return t
            acc = Lit(1)
            for _ in range(t.value - 1):
                acc = Add(acc, Lit(1))
            return acc
        if isinstance(t, (Add, Sub, Mul)):
            return type(t)(term(t.left), term(t.right))
        return t

    def walk(f):
        if isinstance(f, Eq):
            return Eq(term(f.left), term(f.right))
        if isinstance(f, Not):
            return Not(walk(f.body))
        if isinstance(f, (And, Or)):
            return type(f)(walk(f.left), walk(f.right))
        return type(f)(f.var, walk(f.body))

    return walk(formula)


def _eval_term(t, env: dict, field: FieldDescriptor) -> Element:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise ValueError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Lit):
        return field.element(t.value)
    a = _eval_term(t.left, env, field)
    b = _eval_term(t.right, env, field)
    if isinstance(t, Add):
        return a + b
    if isinstance(t, Sub):
        return a - b
    return a * b


def _require_closed(formula):
    free = free_variables(formula)
    if free:
        raise ValueError(f"sentence has free variables: {', '.join(sorted(free))}")


def eval_finite(sentence, field: FieldDescriptor) -> bool:
    """Brute-force truth value over one finite field."""
    if isinstance(sentence, str):
        sentence = parse_sentence(sentence)
    _require_closed(sentence)

    def ev(f, env) -> bool:
        if isinstance(f, Eq):
            return _eval_term(f.left, env, field) == _eval_term(f.right, env, field)
        if isinstance(f, Not):
            return not ev(f.body, env)
        if isinstance(f, And):
            return ev(f.left, env) and ev(f.right, env)
        if isinstance(f, Or):
            return ev(f.left, env) or ev(f.right, env)
        if isinstance(f, Exists):
            return any(ev(f.body, {**env, f.var: x}) for x in field.elements())
        return all(ev(f.body, {**env, f.var: x}) for x in field.elements())

    return ev(sentence, {})


@dataclass(frozen=True)
class TowerVerdict:
    """Outcome of a bounded closure search.  value None means Unknown."""

    value: bool | None
    certified: bool
    witness_level: int | None
    witness: dict[str, str] | None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "certified": self.certified,
            "witness_level": self.witness_level,
            "witness": self.witness,
        }


def _effective_existential_flags(f, positive: bool = True, out=None) -> list[bool]:
    """One flag per quantifier: True when it acts existentially after negations."""
    if out is None:
        out = []
    if isinstance(f, Eq):
        return out
    if isinstance(f, Not):
        return _effective_existential_flags(f.body, not positive, out)
    if isinstance(f, (And, Or)):
        _effective_existential_flags(f.left, positive, out)
        return _effective_existential_flags(f.right, positive, out)
    out.append(positive if isinstance(f, Exists) else not positive)
    return _effective_existential_flags(f.body, positive, out)


def _strip_vacuous(formula):
    """Drop quantifiers whose variable never occurs in the (stripped) body.

    Every field is nonempty, so E x . phi and A x . phi both mean phi when x
    is not free in phi.  Stripping first makes ground sentences certifiable
    in either direction.
    """
    if isinstance(formula, Eq):
        return formula
    if isinstance(formula, Not):
        return Not(_strip_vacuous(formula.body))
    if isinstance(formula, (And, Or)):
        return type(formula)(_strip_vacuous(formula.left), _strip_vacuous(formula.right))
    body = _strip_vacuous(formula.body)
    if formula.var not in free_variables(body):
        return body
    return type(formula)(formula.var, body)


def eval_closure(sentence, p: int, max_level: int = 2, ambient_bound: int = 4) -> TowerVerdict:
    """Three-valued truth of a sentence over the algebraic closure of F_p.

    Each quantifier tries relative extension degrees 1..max_level over the
    field its outer quantifiers settled on: degree d from ambient degree n
    moves the search to degree n*d.  Ambient degrees past ambient_bound are
    skipped, and any skip makes a non-decisive answer Unknown instead of
    False/True.
    """
    if isinstance(sentence, str):
        sentence = parse_sentence(sentence)
    _require_closed(sentence)
    if max_level < 1 or ambient_bound < 1:
        raise ValueError("max_level and ambient_bound must be positive")
    tower_field(p, 1)  # validates p
    sentence = _strip_vacuous(sentence)

    def ev(f, env: dict, ambient: int):
        # returns (value True/False/None, witness dict or None, level or None)
        if isinstance(f, Eq):
            fld = tower_field(p, ambient)
            same = _eval_term(f.left, env, fld) == _eval_term(f.right, env, fld)
            return same, {}, ambient
        if isinstance(f, Not):
            v, w, lvl = ev(f.body, env, ambient)
            return (None if v is None else not v), w, lvl
        if isinstance(f, (And, Or)):
            decisive = isinstance(f, Or)  # the value that short-circuits
            lv, lw, ll = ev(f.left, env, ambient)
            if lv is decisive:
                return lv, lw, ll
            rv, rw, rl = ev(f.right, env, ambient)
            if rv is decisive:
                return rv, rw, rl
            if lv is None or rv is None:
                return None, None, None
            return (not decisive), {**lw, **rw}, max(ll, rl)
        hunting = isinstance(f, Exists)  # the decisive value for this quantifier
        ambients = [ambient * d for d in range(1, max_level + 1)]
        blocked = any(m > ambient_bound for m in ambients)
        saw_unknown = False
        survivor_level = ambient
        for m in ambients:
            if m > ambient_bound:
                continue
            fld = tower_field(p, m)
            env_m = env if m == ambient else {k: lift(v, m) for k, v in env.items()}
            for x in fld.elements():
                v, w, lvl = ev(f.body, {**env_m, f.var: x}, m)
                if v is hunting:
                    return v, {f.var: str(x), **w}, max(m, lvl)
                if v is None:
                    saw_unknown = True
                else:
                    survivor_level = max(survivor_level, lvl)
        if blocked or saw_unknown:
            return None, None, None
        return (not hunting), {}, survivor_level

    value, witness, level = ev(sentence, {}, 1)
    flags = _effective_existential_flags(sentence)
    certified = (value is True and all(flags)) or (value is False and not any(flags))
    if value is None:
        return TowerVerdict(None, False, None, None)
    return TowerVerdict(value, certified, level, witness)


@dataclass(frozen=True)
class SampleReport:
    """Per-prime closure verdicts for one sentence, with a summary."""

    sentence: str
    verdicts: tuple[tuple[int, TowerVerdict], ...]
    certified_true: int
    certified_false: int
    conjecture: str | None

    def to_json(self) -> dict:
        n = len(self.verdicts)
        return {
            "sentence": self.sentence,
            "verdicts": {str(p): v.to_json() for p, v in self.verdicts},
            "summary": {
                "primes_sampled": n,
                "certified_true": self.certified_true,
                "certified_false": self.certified_false,
                "certified_true_fraction": str(Fraction(self.certified_true, n)),
                "conjecture": self.conjecture,
            },
        }


def _random_term(rng: random.Random, names, depth: int):
    if depth == 0 or rng.random() < 0.4:
        if names and rng.random() < 0.7:
            return Var(rng.choice(names))
        return Lit(rng.randrange(3))
    ctor = rng.choice((Add, Sub, Mul))
    return ctor(_random_term(rng, names, depth - 1), _random_term(rng, names, depth - 1))


def _random_matrix(rng: random.Random, names, depth: int):
    if depth == 0 or rng.random() < 0.5:
        return Eq(_random_term(rng, names, 2), _random_term(rng, names, 2))
    r = rng.random()
    if r < 0.25:
        return Not(_random_matrix(rng, names, depth - 1))
    ctor = And if r < 0.625 else Or
    return ctor(_random_matrix(rng, names, depth - 1), _random_matrix(rng, names, depth - 1))


def _random_sentence(rng: random.Random):
    names = ["x", "y"][: rng.choice((1, 1, 2))]
    body = _random_matrix(rng, names, 2)
    for name in reversed(names):
        body = (Exists if rng.random() < 0.5 else Forall)(name, body)
    return body


def lefschetz_sample(sentence, primes=(2, 3, 5, 7, 11, 13, 17, 19, 23, 29),
                     max_level: int = 2, ambient_bound: int = 4) -> SampleReport:
    """Evaluate one sentence over the closures of several primes.

    When at least one prime yields a certified answer and every certified
    answer agrees, the report carries a transfer-style conjecture about
    algebraically closed fields of characteristic zero; disagreement or a
    total lack of certificates leaves the conjecture empty.
    """
    if isinstance(sentence, str):
        sentence = parse_sentence(sentence)
    _require_closed(sentence)
    ps = sorted(set(primes))
    if not ps:
        raise ValueError("at least one prime is required")
    canon = pretty(sentence)
    verdicts = tuple((q, eval_closure(sentence, q, max_level, ambient_bound)) for q in ps)
    certified = [v.value for _, v in verdicts if v.certified]
    n_true = sum(1 for v in certified if v is True)
    n_false = sum(1 for v in certified if v is False)
    conjecture = None
    if certified and all(v is True for v in certified):
        conjecture = "true over every algebraically closed field of characteristic 0"
    elif certified and all(v is False for v in certified):
        conjecture = "false over every algebraically closed field of characteristic 0"
    return SampleReport(canon, verdicts, n_true, n_false, conjecture)


# ----------------------------------------------------------------------
# Plane curves: homogeneous ternary forms and their common zeros.

_VAR_INDEX = {"x": 0, "y": 1, "z": 2}
_VAR_TOKEN = re.compile(r"^([xyz])(?:\^(\d+))?$")


class TernaryForm:
    """A nonzero homogeneous polynomial in x, y, z over one field."""

    def __init__(self, owner: FieldDescriptor, monomials: dict):
        self.owner = owner
        cleaned = {}
        for expo, coeff in monomials.items():
            c = owner.element(coeff)
            if not c.is_zero():
                cleaned[tuple(expo)] = cleaned.get(tuple(expo), owner.zero()) + c
        cleaned = {e: c for e, c in cleaned.items() if not c.is_zero()}
        if not cleaned:
            raise NotHomogeneous("the zero polynomial does not define a curve")
        degrees = {sum(e) for e in cleaned}
        if len(degrees) != 1:
            raise NotHomogeneous(
                f"monomial degrees {sorted(degrees)} are mixed; the form must be homogeneous")
        self.monomials = cleaned
        self.degree = degrees.pop()

    def evaluate(self, x: Element, y: Element, z: Element) -> Element:
        total = self.owner.zero()
        for (i, j, k), c in self.monomials.items():
            total = total + c * x**i * y**j * z**k
        return total


def _split_top(text: str, seps: str) -> list[tuple[str, int, bool]]:
    """Split on separators outside parentheses.

    Returns (piece, offset, is_separator) triples; chunk pieces may be empty
    when separators are adjacent, which the callers police.
    """
    out = []
    depth = 0
    start = 0
    for i, c in enumerate(text):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", i)
        elif depth == 0 and c in seps:
            out.append((text[start:i], start, False))
            out.append((c, i, True))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", len(text) - 1)
    out.append((text[start:], start, False))
    return out


def parse_ternary_polynomial(text: str, field: FieldDescriptor) -> TernaryForm:
    """Parse a sum of monomials in x, y, z with '*'-separated factors.

    Coefficients are field element literals; wrap any containing + or - in
    parentheses, e.g. (1+2t)*x*y.  Exponents use ^ as in x^2.
    """
    # fold +/- runs into a sign for the following term, unary signs included
    terms: list[tuple[int, str, int]] = []
    sign = 1
    pending_sign = False
    for piece, offset, is_sep in _split_top(text.strip(), "+-"):
        if is_sep:
            if piece == "-":
                sign = -sign
            pending_sign = True
            continue
        piece = piece.strip()
        if piece:
            terms.append((sign, piece, offset))
            sign = 1
            pending_sign = False
    if pending_sign:
        raise ParseError("dangling sign at end of polynomial", len(text.rstrip()) - 1)
    if not terms:
        raise ParseError("empty polynomial", 0)

    monomials: dict[tuple[int, int, int], Element] = {}
    for sgn, chunk, offset in terms:
        coeff = field.element(sgn)
        expo = [0, 0, 0]
        for factor, fo, is_sep in _split_top(chunk, "*"):
            if is_sep:
                continue
            factor = factor.strip()
            if not factor:
                raise ParseError("empty factor", offset + fo)
            m = _VAR_TOKEN.match(factor)
            if m:
                expo[_VAR_INDEX[m.group(1)]] += int(m.group(2) or 1)
                continue
            if factor.startswith("(") and factor.endswith(")"):
                factor = factor[1:-1]
            try:
                coeff = coeff * field.element(factor)
            except ParseError:
                raise ParseError(f"bad coefficient {factor!r}", offset + fo) from None
        key = tuple(expo)
        monomials[key] = monomials.get(key, field.zero()) + coeff
    return TernaryForm(field, monomials)


def _utrim(coeffs: list[Element]) -> list[Element]:
    k = len(coeffs)
    while k and coeffs[k - 1].is_zero():
        k -= 1
    return coeffs[:k]


def _udivmod(num: list[Element], den: list[Element]):
    inv = den[-1].inverse()
    rem = list(num)
    for top in range(len(rem) - 1, len(den) - 2, -1):
        factor = rem[top] * inv
        if factor.is_zero():
            continue
        shift = top - (len(den) - 1)
        for k, d in enumerate(den):
            rem[shift + k] = rem[shift + k] - factor * d
    return _utrim(rem)


def _ugcd(a: list[Element], b: list[Element]) -> list[Element]:
    a, b = _utrim(a), _utrim(b)
    while b:
        a, b = b, _udivmod(a, b)
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _ueval(coeffs: list[Element], x: Element) -> Element:
    total = x.owner.zero()
    for c in reversed(coeffs):
        total = total * x + c
    return total


_SQRT_TABLES: dict = {}
_AS_TABLES: dict = {}


def _sqrt_table(field: FieldDescriptor) -> dict:
    """payload of a square -> its first square root in element order."""
    tbl = _SQRT_TABLES.get(field)
    if tbl is None:
        tbl = {}
        for x in field.elements():
            tbl.setdefault((x * x).payload, x)
        _SQRT_TABLES[field] = tbl
    return tbl


def _artin_schreier_table(field: FieldDescriptor) -> dict:
    """Characteristic 2 only: payload of w^2 + w -> the first such w."""
    tbl = _AS_TABLES.get(field)
    if tbl is None:
        tbl = {}
        for w in field.elements():
            tbl.setdefault((w * w + w).payload, w)
        _AS_TABLES[field] = tbl
    return tbl


def _quadratic_roots(a: Element, b: Element, c: Element) -> list[Element]:
    """All roots of a z^2 + b z + c (a nonzero), in canonical order."""
    field = a.owner
    if field.characteristic == 2:
        if b.is_zero():
            # squaring is a bijection, so z^2 = u has the single root u^(q/2)
            return [(c / a) ** (field.order // 2)]
        shift = _artin_schreier_table(field).get(((a * c) / (b * b)).payload)
        if shift is None:
            return []
        scale = b / a
        roots = [scale * shift, scale * (shift + field.one())]
    else:
        four = field.element(4)
        disc = b * b - four * a * c
        s = _sqrt_table(field).get(disc.payload)
        if s is None:
            return []
        half = (field.element(2) * a).inverse()
        roots = [(-b + s) * half] if s.is_zero() else [(-b + s) * half, (-b - s) * half]
    return sorted(set(roots), key=lambda r: r.sort_key())


def _smallest_common_root(f1: list[Element], g1: list[Element], field) -> Element | None:
    f1, g1 = _utrim(f1), _utrim(g1)
    if not f1 and not g1:
        return field.zero()
    h = _ugcd(f1, g1)
    if len(h) <= 1:
        return None
    if len(h) == 2:
        return -h[0]  # monic linear: z + h0
    if len(h) == 3:
        roots = _quadratic_roots(h[2], h[1], h[0])
        return roots[0] if roots else None
    for z in field.elements():
        if _ueval(h, z).is_zero():
            return z
    return None


def _specialize_x0_y1(mono: dict, field, degree: int) -> list[Element]:
    out = [field.zero()] * (degree + 1)
    for (i, j, k), c in mono.items():
        if i == 0:
            out[k] = out[k] + c
    return out


def _specialize_x1(mono: dict, field, degree: int, y: Element) -> list[Element]:
    out = [field.zero()] * (degree + 1)
    ypow = [field.one()]
    for _ in range(degree):
        ypow.append(ypow[-1] * y)
    for (i, j, k), c in mono.items():
        out[k] = out[k] + c * ypow[j]
    return out


def _chart_scan(fm: TernaryForm, gm: TernaryForm, field) -> tuple[Element, Element, Element] | None:
    """First common projective zero in lex order over the normalized charts
    (0:0:1), then (0:1:z) with z ascending, then (1:y:z) with (y, z) ascending."""
    zero, one = field.zero(), field.one()
    fz = fm.monomials.get((0, 0, fm.degree))
    gz = gm.monomials.get((0, 0, gm.degree))
    if (fz is None or fz.is_zero()) and (gz is None or gz.is_zero()):
        return (zero, zero, one)
    z0 = _smallest_common_root(
        _specialize_x0_y1(fm.monomials, field, fm.degree),
        _specialize_x0_y1(gm.monomials, field, gm.degree), field)
    if z0 is not None:
        return (zero, one, z0)
    for y in field.elements():
        z0 = _smallest_common_root(
            _specialize_x1(fm.monomials, field, fm.degree, y),
            _specialize_x1(gm.monomials, field, gm.degree, y), field)
        if z0 is not None:
            return (one, y, z0)
    return None


@dataclass(frozen=True)
class CurvesMeetReport:
    """Result of searching extension levels for a common projective zero."""

    meet: bool | None
    level: int | None
    point: tuple[str, str, str] | None
    levels_scanned: int
    bound_too_small: bool

    def to_json(self) -> dict:
        return {
            "meet": self.meet,
            "level": self.level,
            "point": list(self.point) if self.point else None,
            "levels_scanned": self.levels_scanned,
            "bound_too_small": self.bound_too_small,
        }


def curves_meet(p: int, f, g, max_level: int = 4) -> CurvesMeetReport:
    """Search F_{p^d} for d = 1..max_level for a common zero of two curves.

    Two plane curves always intersect over the full closure, so the verdict
    is either a concrete point (meet=True) or Unknown with bound_too_small
    set; it is never False.
    """
    base = PrimeField(p)
    if isinstance(f, str):
        f = parse_ternary_polynomial(f, base)
    if isinstance(g, str):
        g = parse_ternary_polynomial(g, base)
    if f.owner != base or g.owner != base:
        raise ValueError("curve coefficients must live in the prime field")
    if f.degree < 1 or g.degree < 1:
        raise ValueError("curves must have positive degree")
    if max_level < 1:
        raise ValueError("max_level must be positive")
    f_int = {e: c.payload for e, c in f.monomials.items()}
    g_int = {e: c.payload for e, c in g.monomials.items()}
    for d in range(1, max_level + 1):
        fld = tower_field(p, d)
        fd = TernaryForm(fld, {e: fld.element(c) for e, c in f_int.items()})
        gd = TernaryForm(fld, {e: fld.element(c) for e, c in g_int.items()})
        hit = _chart_scan(fd, gd, fld)
        if hit is not None:
            assert fd.evaluate(*hit).is_zero() and gd.evaluate(*hit).is_zero()
            return CurvesMeetReport(
                meet=True, level=d, point=tuple(str(c) for c in hit),
                levels_scanned=d, bound_too_small=False)
    return CurvesMeetReport(meet=None, level=None, point=None,
                            levels_scanned=max_level, bound_too_small=True)
