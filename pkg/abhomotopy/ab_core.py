#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
(a,b)-algebras given by structure constants, the shifted operations mu and
ell, the coderivation D = d_1 + mu_1 on H and the bracket ell_2 with its
shifted variants ell'_2 and ell''_2.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import ContractViolation, TruncationOverflow
from .freemodule import Element, bilinear, to_scalar
from .models import AxiomReport, IdentityRecord, Status
from .signs import double_prime_degree, enumerate_shuffles, koszul_sign, prime_degree, sign_of
from .tensor_coalgebra import Generator, TensorPair, TensorWord, cobracket_delta, is_zero_in_H, reduce_mod_shuffles, \
    reduce_pairs, shuffle

logger = logging.getLogger(__name__)

Coefficients = Dict[str, Fraction]


class StructureTable:
    """
    Structure constants of one operation. Entries map a key (a name or a
    pair of names) to {name: coefficient}; keys without an entry are either
    computed by rule or zero.
    """

    def __init__(self, entries: Optional[Dict] = None, rule: Optional[Callable] = None, overrides: Optional[Dict] = None):
        self.entries = dict(entries or {})
        self.rule = rule
        self.overrides = dict(overrides or {})

    def __call__(self, key) -> Coefficients:
        if key in self.overrides:
            return self.overrides[key]
        if key in self.entries:
            return self.entries[key]
        if self.rule is None:
            return {}
        value = self.rule(key)
        self.entries[key] = value
        return value

    def keys(self):
        return list(self.entries) + [k for k in self.overrides if k not in self.entries]

    def with_override(self, key, value: Coefficients) -> 'StructureTable':
        overrides = dict(self.overrides)
        overrides[key] = value
        return StructureTable(self.entries, self.rule, overrides)


class AbAlgebra:
    """
    A graded space with a product of degree a, a bracket of degree b and a
    differential of degree 1, all given on a finite (truncated) basis.
    """

    def __init__(self, a: int, b: int, generators: Dict[str, int], product: StructureTable = None,
                 bracket: StructureTable = None, differential: StructureTable = None,
                 max_degree: Optional[int] = None, name: str = 'custom', params: Optional[dict] = None,
                 invariants: Optional[Callable[[], List[IdentityRecord]]] = None):
        self.a = a
        self.b = b
        self.generators = dict(generators)
        self.product_table = product or StructureTable()
        self.bracket_table = bracket or StructureTable()
        self.differential_table = differential or StructureTable()
        self.max_degree = max_degree
        self.name = name
        self.params = dict(params or {})
        # instance-specific checks run by check-algebra
        self.invariants = invariants
        self._letters = {g: Generator(g, d + a - 1) for g, d in self.generators.items()}

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=f'name={self.name!r} a={self.a} b={self.b} generators={len(self.generators)}',
        )

    @property
    def ell_degree(self) -> int:
        """Degree b - a + 1 of ell and ell_2 in the shifted grading."""
        return self.b - self.a + 1

    def letter(self, name: str) -> Generator:
        try:
            return self._letters[name]
        except KeyError:
            raise ContractViolation(f'unknown generator {name!r}') from None

    def letters(self) -> List[Generator]:
        return [self._letters[g] for g in self.generators]

    def degree(self, letter: Generator) -> int:
        """Unshifted degree |.| of a letter."""
        return letter.degree - self.a + 1

    def word(self, *names: str) -> TensorWord:
        return TensorWord(self.letter(n) for n in names)

    def _collect(self, operation: str, coefficients: Coefficients) -> Element:
        terms = []
        for target, coefficient in coefficients.items():
            if target not in self._letters:
                raise TruncationOverflow(operation, target)
            degree = self.generators[target]
            if self.max_degree is not None and degree > self.max_degree:
                raise TruncationOverflow(operation, target)
            terms.append((self._letters[target], to_scalar(coefficient)))
        return Element(terms)

    # unshifted operations on letters

    def product(self, x: Generator, y: Generator) -> Element:
        return self._collect('product', self.product_table((x.name, y.name)))

    def bracket(self, x: Generator, y: Generator) -> Element:
        return self._collect('bracket', self.bracket_table((x.name, y.name)))

    def differential(self, x: Generator) -> Element:
        return self._collect('differential', self.differential_table(x.name))

    # bilinear extensions

    def multiply(self, x: Element, y: Element) -> Element:
        return bilinear(self.product, x, y)

    def bracket_elements(self, x: Element, y: Element) -> Element:
        return bilinear(self.bracket, x, y)

    def d(self, x: Element) -> Element:
        return x.map(self.differential)

    def perturbed(self, operation: str, left: str, right: str, target: str, delta=1) -> 'AbAlgebra':
        """Copy with one structure constant of the product or bracket shifted by delta."""
        table = self.product_table if operation == 'product' else self.bracket_table
        current = dict(table((left, right)))
        current[target] = to_scalar(current.get(target, 0)) + to_scalar(delta)
        current = {k: v for k, v in current.items() if v}
        mutated = table.with_override((left, right), current)
        return AbAlgebra(
            self.a, self.b, self.generators,
            product=mutated if operation == 'product' else self.product_table,
            bracket=mutated if operation == 'bracket' else self.bracket_table,
            differential=self.differential_table,
            max_degree=self.max_degree,
            name=f'{self.name}+mutation',
            params=dict(self.params, mutation=f'{operation}({left},{right})[{target}]+={delta}'),
        )


def homogeneity_errors(algebra: AbAlgebra) -> List[str]:
    """Explicit table entries whose degree does not match |x.y| = |x|+|y|+a, |[x,y]| = |x|+|y|+b, |dx| = |x|+1."""
    errors = []
    checks = (('product', algebra.product_table, algebra.a), ('bracket', algebra.bracket_table, algebra.b))
    for operation, table, shift in checks:
        for key in table.keys():
            left, right = key
            expected = algebra.generators[left] + algebra.generators[right] + shift
            for target in table(key):
                if target in algebra.generators and algebra.generators[target] != expected:
                    errors.append(f'{operation}({left},{right}) -> {target}: degree '
                                  f'{algebra.generators[target]} != {expected}')
    for key in algebra.differential_table.keys():
        expected = algebra.generators[key] + 1
        for target in algebra.differential_table(key):
            if target in algebra.generators and algebra.generators[target] != expected:
                errors.append(f'differential({key}) -> {target}: degree {algebra.generators[target]} != {expected}')
    return errors


def mu(algebra: AbAlgebra, x: Generator, y: Generator) -> Element:
    """mu(x, y) = (-1)^{dg x} x.y, of degree 1 on A[-a+1]."""
    return sign_of(x.degree) * algebra.product(x, y)


def ell(algebra: AbAlgebra, x: Generator, y: Generator) -> Element:
    """ell(x, y) = (-1)^{(b-a+1) dg x} [x, y], of degree b-a+1 on A[-a+1]."""
    return sign_of(algebra.ell_degree * x.degree) * algebra.bracket(x, y)


def mu_elements(algebra: AbAlgebra, x: Element, y: Element) -> Element:
    return bilinear(lambda u, v: mu(algebra, u, v), x, y)


def ell_elements(algebra: AbAlgebra, x: Element, y: Element) -> Element:
    return bilinear(lambda u, v: ell(algebra, u, v), x, y)


def _compare(name: str, instance: str, lhs: Element, rhs: Element) -> IdentityRecord:
    if lhs == rhs:
        return IdentityRecord(identity=name, instance=instance, status=Status.PASS)
    return IdentityRecord(identity=name, instance=instance, status=Status.FAIL, lhs=str(lhs), rhs=str(rhs))


def _axiom_record(name: str, instance: str, evaluate: Callable[[], Tuple[Element, Element]]) -> IdentityRecord:
    try:
        lhs, rhs = evaluate()
    except TruncationOverflow as e:
        logger.debug(f'{name} on {instance}: {e}')
        return IdentityRecord(identity=name, instance=instance, status=Status.SKIPPED, note=str(e))
    return _compare(name, instance, lhs, rhs)


def check_ab_axioms(algebra: AbAlgebra, samples: Iterable[Tuple[Generator, Generator, Generator]]) -> AxiomReport:
    """
    Evaluate the (a,b)-algebra axioms on letter triples: graded commutativity,
    associativity, graded antisymmetry, graded Jacobi, Leibniz, the
    differential on products and brackets, and d o d = 0.
    :param algebra: the algebra under test
    :param samples: triples of letters within the truncation
    :return: AxiomReport with one record per axiom and triple
    """
    a, b = algebra.a, algebra.b
    deg = algebra.degree
    one = Element.basis
    P = algebra.multiply
    B = algebra.bracket_elements
    d = algebra.d
    report = AxiomReport(algebra=algebra.name)
    for x, y, z in samples:
        X, Y, Z = one(x), one(y), one(z)
        ax, ay, az = deg(x), deg(y), deg(z)
        instance = f'({x}, {y}, {z})'

        axioms = {
            'graded commutativity': lambda: (P(X, Y), sign_of((ax + a) * (ay + a)) * P(Y, X)),
            'associativity': lambda: (P(X, P(Y, Z)), P(P(X, Y), Z)),
            'graded antisymmetry': lambda: (B(X, Y), -sign_of((ax + b) * (ay + b)) * B(Y, X)),
            'graded jacobi': lambda: (
                sign_of((ax + b) * (az + b)) * B(B(X, Y), Z)
                + sign_of((ay + b) * (ax + b)) * B(B(Y, Z), X)
                + sign_of((az + b) * (ay + b)) * B(B(Z, X), Y),
                Element()),
            'leibniz': lambda: (B(X, P(Y, Z)),
                                P(B(X, Y), Z) + sign_of((ay + a) * (ax + b)) * P(Y, B(X, Z))),
            'differential on product': lambda: (d(P(X, Y)), P(d(X), Y) + sign_of(ax + a) * P(X, d(Y))),
            'differential on bracket': lambda: (d(B(X, Y)), B(d(X), Y) + sign_of(ax + b) * B(X, d(Y))),
            'differential squares to zero': lambda: (d(d(X)), Element()),
        }
        for name, evaluate in axioms.items():
            report.records.append(_axiom_record(name, instance, evaluate))
    logger.info(f'{algebra.name}: axioms {report.summary()}')
    return report


def check_shifted_laws(algebra: AbAlgebra, samples: Iterable[Tuple[Generator, Generator, Generator]]) -> AxiomReport:
    """
    The same axioms restated for mu and ell on A[-a+1]: anticommutativity
    and antiassociativity of mu, the symmetry law and Jacobi identity of
    ell, the ell/mu Leibniz law and d as a derivation of mu and ell.
    """
    c = algebra.ell_degree
    one = Element.basis
    M = lambda u, v: mu_elements(algebra, u, v)
    L = lambda u, v: ell_elements(algebra, u, v)
    d = algebra.d
    report = AxiomReport(algebra=algebra.name)
    for x, y, z in samples:
        X, Y, Z = one(x), one(y), one(z)
        gx, gy, gz = x.degree, y.degree, z.degree
        instance = f'({x}, {y}, {z})'
        laws = {
            'mu anticommutativity': lambda: (M(X, Y), -sign_of(gx * gy) * M(Y, X)),
            'mu antiassociativity': lambda: (M(M(X, Y), Z), -sign_of(gx) * M(X, M(Y, Z))),
            'ell symmetry law': lambda: (L(X, Y), -sign_of(c + gx * gy) * L(Y, X)),
            'ell jacobi': lambda: (
                sign_of(gx * gz) * L(L(X, Y), Z) + sign_of(gy * gx) * L(L(Y, Z), X)
                + sign_of(gz * gy) * L(L(Z, X), Y),
                Element()),
            'ell mu leibniz': lambda: (L(X, M(Y, Z)),
                                       sign_of(gx + c) * M(L(X, Y), Z)
                                       + sign_of((gx + c) * (gy + 1)) * M(Y, L(X, Z))),
            'd on mu': lambda: (d(M(X, Y)), -M(d(X), Y) + sign_of(gx + 1) * M(X, d(Y))),
            'd on ell': lambda: (d(L(X, Y)), sign_of(c) * L(d(X), Y) + sign_of(gx + c) * L(X, d(Y))),
        }
        for name, evaluate in laws.items():
            report.records.append(_axiom_record(name, instance, evaluate))
    return report


class CoderivationSpec:
    """
    Taylor coefficients D_r of a coderivation of degree `degree`: each maps a
    word of length r to an Element of letters.
    """

    def __init__(self, taylor_coefficients: Dict[int, Callable[[TensorWord], Element]], degree: int = 1):
        self.taylor_coefficients = {r: f for r, f in taylor_coefficients.items() if f is not None}
        self.degree = degree

    def __repr__(self):
        return f'<CoderivationSpec arities={sorted(self.taylor_coefficients)} degree={self.degree}>'


def extend_coderivation(spec: CoderivationSpec, x: TensorWord) -> Element:
    """
    sum over r and j of (-1)^{deg * (dg a_1 + ... + dg a_j)}
    a_1|...|a_j|D_r(a_{j+1}|...|a_{j+r})|a_{j+r+1}|...|a_n
    """
    n = len(x)
    terms = []
    for r, taylor in sorted(spec.taylor_coefficients.items()):
        prefix_degree = 0
        for j in range(0, n - r + 1):
            if j:
                prefix_degree += x[j - 1].degree
            sign = sign_of(spec.degree * prefix_degree)
            head, tail = tuple(x[:j]), tuple(x[j + r:])
            for letter, c in taylor(TensorWord(x[j:j + r])):
                terms.append((TensorWord(head + (letter,) + tail), sign * c))
    return Element.accumulate(terms)


def codifferential_spec(algebra: AbAlgebra) -> CoderivationSpec:
    """D_1 = d, D_2 = mu, D_k = 0 for k >= 3."""
    return CoderivationSpec({
        1: lambda w: algebra.differential(w[0]),
        2: lambda w: mu(algebra, w[0], w[1]),
    }, degree=1)


def codifferential(algebra: AbAlgebra, x: Element) -> Element:
    """D = d_1 + mu_1 extended linearly to Elements of words."""
    spec = codifferential_spec(algebra)
    return x.map(lambda w: extend_coderivation(spec, w))


def D(algebra: AbAlgebra, x: TensorWord) -> Element:
    return extend_coderivation(codifferential_spec(algebra), x)


def _substitute(algebra: AbAlgebra, arranged: Sequence[Generator], k: int) -> List[Tuple[TensorWord, Fraction]]:
    """Replace the letters at positions k, k+1 (0-based) by ell of them."""
    head, tail = tuple(arranged[:k]), tuple(arranged[k + 2:])
    return [(TensorWord(head + (g,) + tail), c) for g, c in ell(algebra, arranged[k], arranged[k + 1])]


def ell2(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Element:
    """
    The bracket on H of degree b-a+1 compatible with delta: sum over the
    (p,q)-shuffles sigma and the positions k holding a letter of x followed
    by a letter of y, of eps(sigma^-1) (-1)^{(b-a+1)(sum of dg before k)}
    times the shuffled word with that adjacent pair replaced by ell.
    """
    p, q = len(x), len(y)
    letters = tuple(x) + tuple(y)
    degrees = [g.degree for g in letters]
    c = algebra.ell_degree
    terms = []
    for sigma in enumerate_shuffles(p, q):
        eps = koszul_sign(degrees, sigma)
        source = sigma.arrangement()
        arranged = [letters[i - 1] for i in source]
        prefix_degree = 0
        for k in range(p + q - 1):
            if source[k] <= p < source[k + 1]:
                sign = eps * sign_of(c * prefix_degree)
                terms.extend((w, sign * coefficient) for w, coefficient in _substitute(algebra, arranged, k))
            prefix_degree += arranged[k].degree
    return Element.accumulate(terms)


def ell2_elements(algebra: AbAlgebra, x: Element, y: Element) -> Element:
    return bilinear(lambda u, v: ell2(algebra, u, v), x, y)


def ell2_prime(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Element:
    """ell'_2(X, Y) = (-1)^{(a-b-1) x'} ell_2(X, Y), of degree 0 for dg'."""
    x_prime = prime_degree(x.degree, algebra.a, algebra.b)
    return sign_of((algebra.a - algebra.b - 1) * x_prime) * ell2(algebra, x, y)


def ell2_prime_elements(algebra: AbAlgebra, x: Element, y: Element) -> Element:
    return bilinear(lambda u, v: ell2_prime(algebra, u, v), x, y)


def ell2_doubleprime(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Element:
    """ell''_2(X, Y) = (-1)^{x''} ell'_2(X, Y); symmetric of degree 1 for dg''."""
    x_second = double_prime_degree(x.degree, algebra.a, algebra.b)
    return sign_of(x_second) * ell2_prime(algebra, x, y)


def ell2_doubleprime_elements(algebra: AbAlgebra, x: Element, y: Element) -> Element:
    return bilinear(lambda u, v: ell2_doubleprime(algebra, u, v), x, y)


def compatibility_sides(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Tuple[Element, Element]:
    """
    Both sides of the compatibility of ell_2 with delta:
    delta o ell_2 = (ell_2 (x) id) o (tau23 o (delta (x) id) + id (x) delta)
                    + (id (x) ell_2) o (delta (x) id + tau12 o (id (x) delta)),
    reduced in H (x) H.
    """
    c = algebra.ell_degree
    lhs = ell2(algebra, x, y).map(cobracket_delta)
    terms = []
    for pair, coefficient in cobracket_delta(x):
        u, v = pair.left, pair.right
        for w, e in ell2(algebra, u, y):
            terms.append((TensorPair(w, v), coefficient * e * sign_of(v.degree * y.degree)))
        for w, e in ell2(algebra, v, y):
            terms.append((TensorPair(u, w), coefficient * e * sign_of(c * u.degree)))
    for pair, coefficient in cobracket_delta(y):
        u, v = pair.left, pair.right
        for w, e in ell2(algebra, x, u):
            terms.append((TensorPair(w, v), coefficient * e))
        for w, e in ell2(algebra, x, v):
            terms.append((TensorPair(u, w), coefficient * e * sign_of(x.degree * u.degree + c * u.degree)))
    rhs = Element.accumulate(terms)
    return reduce_pairs(lhs), reduce_pairs(rhs)


def coderivation_law_sides(algebra: AbAlgebra, x: TensorWord) -> Tuple[Element, Element]:
    """(D (x) id + id (x) D) o delta against delta o D, reduced in H (x) H."""
    terms = []
    for pair, coefficient in cobracket_delta(x):
        u, v = pair.left, pair.right
        for w, e in D(algebra, u):
            terms.append((TensorPair(w, v), coefficient * e))
        for w, e in D(algebra, v):
            terms.append((TensorPair(u, w), coefficient * e * sign_of(u.degree)))
    lhs = Element.accumulate(terms)
    rhs = D(algebra, x).map(cobracket_delta)
    return reduce_pairs(lhs), reduce_pairs(rhs)


def ell2_well_defined(algebra: AbAlgebra, x: TensorWord, y: TensorWord, split: int) -> bool:
    """ell_2(bat(x[:split], x[split:]), y) vanishes in H."""
    u, v = x.cut(split)
    return is_zero_in_H(ell2_elements(algebra, shuffle(u, v), Element.basis(y)))


def D_squared(algebra: AbAlgebra, x: Element) -> Tuple[Element, bool]:
    """
    D o D applied to x. Returns the raw result and whether it already
    vanishes before reduction modulo shuffles.
    """
    raw = codifferential(algebra, codifferential(algebra, x))
    if not raw:
        return raw, True
    return reduce_mod_shuffles(raw), False


__all__ = [
    'StructureTable', 'AbAlgebra', 'CoderivationSpec', 'homogeneity_errors', 'mu', 'ell', 'mu_elements',
    'ell_elements', 'check_ab_axioms', 'check_shifted_laws', 'extend_coderivation', 'codifferential_spec',
    'codifferential', 'D', 'ell2', 'ell2_elements', 'ell2_prime', 'ell2_prime_elements', 'ell2_doubleprime',
    'ell2_doubleprime_elements', 'compatibility_sides', 'coderivation_law_sides', 'ell2_well_defined',
    'D_squared',
]
