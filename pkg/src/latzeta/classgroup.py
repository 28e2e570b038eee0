"""The form class group of a fundamental discriminant.

Composition goes through the ideal dictionary: the primitive form (a, b, c)
corresponds to the module Z*a + Z*((b - sqrt(D))/2) of the maximal order.
Products multiply the four generator pairs, Hermite-reduce the result, and
convert back to a reduced form.  That is slow by factorization standards
and entirely adequate here (h stays far below a hundred), and it is easy to
audit against the module arithmetic it mirrors.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import factorize, module_hnf
from .qform import Form, canonical_sl, discriminant, reduce_form
from .quadfield import FieldData, field_data, ramified_factor_form, ramified_primes


def principal_form(D: int) -> Form:
    """Identity class: (1, 0, -D/4) for even D, (1, 1, (1-D)/4) for odd D."""
    field_data(D)
    if D % 4 == 0:
        return (1, 0, -D // 4)
    return (1, 1, (1 - D) // 4)


def reduced_primitive_forms(D: int) -> list[Form]:
    """All reduced primitive forms of discriminant D, sorted lexicographically."""
    field_data(D)
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            out.append((a, b, c))
        a += 1
    out.sort()
    return out


def _form_to_ideal(f: Form, t: int) -> tuple[int, int, int]:
    # Z*a + Z*((b - sqrt(D))/2) in the (1, tau) basis; valid since b = D = t mod 2
    a, b, _ = f
    return (a, (-((b + t) // 2)) % a, 1)


def _ideal_to_form(ideal: tuple[int, int, int], t: int, n: int) -> Form:
    # inverse dictionary; the basis orientation fixes the sign of b
    A, B, C = ideal
    norm = A * C
    assert A % C == 0 and (2 * B + t * C) % C == 0, "module is not an ideal"
    num_c = B * B + t * B * C - n * C * C
    assert num_c % norm == 0, "module is not an ideal"
    return reduce_form((A // C, -(2 * B // C + t), num_c // norm))


def _ideal_mul(I1, I2, t: int, n: int) -> tuple[int, int, int]:
    A1, B1, C1 = I1
    A2, B2, C2 = I2
    gens = [
        (A1 * A2, 0),
        (A1 * B2, A1 * C2),
        (A2 * B1, A2 * C1),
        (B1 * B2 + n * C1 * C2, B1 * C2 + B2 * C1 + t * C1 * C2),
    ]
    return module_hnf(gens)


class ClassGroup:
    """Finite abelian group of proper classes of primitive forms of discriminant D.

    Elements are canonical reduced forms; the instance is immutable apart
    from an internal product cache, so sharing across threads is safe.
    """

    def __init__(self, D: int):
        self.field: FieldData = field_data(D)
        self.D = D
        self.elements: tuple[Form, ...] = tuple(reduced_primitive_forms(D))
        self.identity: Form = principal_form(D)
        self._mul: dict[tuple[Form, Form], Form] = {}

    @property
    def h(self) -> int:
        return len(self.elements)

    def _canonical(self, g: Form) -> Form:
        if discriminant(g) != self.D:
            raise ValueError(f"form {g} has discriminant {discriminant(g)}, expected {self.D}")
        return canonical_sl(g)

    def compose(self, g1: Form, g2: Form) -> Form:
        g1, g2 = self._canonical(g1), self._canonical(g2)
        key = (g1, g2) if g1 <= g2 else (g2, g1)
        got = self._mul.get(key)
        if got is None:
            t, n = self.field.tau_t, self.field.tau_n
            prod = _ideal_mul(_form_to_ideal(key[0], t), _form_to_ideal(key[1], t), t, n)
            got = _ideal_to_form(prod, t, n)
            self._mul[key] = got
        return got

    def inverse(self, g: Form) -> Form:
        g = self._canonical(g)
        return reduce_form((g[0], -g[1], g[2]))

    # complex conjugation sends a class to its inverse (an ideal times its
    # conjugate is the principal ideal generated by the norm)
    conjugate = inverse

    def power(self, g: Form, k: int) -> Form:
        if k < 0:
            g, k = self.inverse(g), -k
        acc, base = self.identity, self._canonical(g)
        while k:
            if k & 1:
                acc = self.compose(acc, base)
            base = self.compose(base, base)
            k >>= 1
        return acc

    def order(self, g: Form) -> int:
        g = self._canonical(g)
        k, acc = 1, g
        while acc != self.identity:
            acc = self.compose(acc, g)
            k += 1
        return k

    def exponent_two(self) -> bool:
        """True iff every class squares to the identity."""
        return all(self.compose(g, g) == self.identity for g in self.elements)

    def subgroup(self, gens) -> frozenset[Form]:
        """Closure of the given classes under composition."""
        cur = {self.identity}
        frontier = [self._canonical(g) for g in gens]
        while frontier:
            g = frontier.pop()
            if g in cur:
                continue
            new = {self.compose(g, x) for x in cur} | {g}
            frontier.extend(new - cur)
            cur |= new
        return frozenset(cur)

    def structure(self) -> list[int]:
        """Invariant factors [d_1, d_2, ...] with d_{i+1} | d_i (empty if trivial).

        Probed from element orders: for each prime q | h, counting the
        solutions of g^(q^k) = identity for growing k reads off the type of
        the q-primary part.  Brute force, fine for the class numbers here.
        """
        h = self.h
        if h == 1:
            return []
        primary: dict[int, list[int]] = {}
        for q, e in factorize(h):
            counts = [1]
            while counts[-1] < q**e and len(counts) <= e:
                k = len(counts)
                counts.append(
                    sum(1 for g in self.elements if self.power(g, q**k) == self.identity)
                )
            # m[k-1] = number of cyclic q-factors of length >= k
            m = []
            for k in range(1, len(counts)):
                ratio, mk = counts[k] // counts[k - 1], 0
                while ratio > 1:
                    ratio //= q
                    mk += 1
                m.append(mk)
            facs = []
            for k in range(1, len(m) + 1):
                exact = m[k - 1] - (m[k] if k < len(m) else 0)
                facs.extend([q**k] * exact)
            primary[q] = sorted(facs, reverse=True)
        width = max(len(v) for v in primary.values())
        invariants = []
        for i in range(width):
            d = 1
            for facs in primary.values():
                if i < len(facs):
                    d *= facs[i]
            invariants.append(d)
        return invariants

    def structure_str(self) -> str:
        inv = self.structure()
        if not inv:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in inv)


@dataclass(frozen=True)
class ClassSubgroups:
    """The two-torsion subgroup and the two distinguished subgroups inside it.

    ortho is None when the maximal order is the half-integer ring
    (d = 1 mod 4): the orthogonal generating set does not exist there, which
    is a different state than the trivial subgroup and the reflection
    formulas must branch on it.
    """

    refl: frozenset[Form]
    ram: frozenset[Form]
    ortho: frozenset[Form] | None


def subgroups(D: int, group: ClassGroup | None = None) -> ClassSubgroups:
    G = group if group is not None else ClassGroup(D)
    refl = frozenset(g for g in G.elements if G.compose(g, g) == G.identity)
    ram_gens = [ramified_factor_form(D, r) for r in ramified_primes(D)]
    ram = G.subgroup(ram_gens)
    d = G.field.d
    if d % 4 == 1:
        ortho: frozenset[Form] | None = None
    elif d % 4 == 2:
        ortho = ram
    else:
        # d = 3 mod 4: the factor over 2 admits no orthogonal basis
        ortho = G.subgroup([ramified_factor_form(D, r) for r in ramified_primes(D) if r != 2])
    return ClassSubgroups(refl=refl, ram=ram, ortho=ortho)


@lru_cache(maxsize=None)
def cached_group(D: int) -> ClassGroup:
    return ClassGroup(D)


@lru_cache(maxsize=None)
def cached_subgroups(D: int) -> ClassSubgroups:
    return subgroups(D, cached_group(D))
