"""Trace forms of etale algebras over Q.

An algebra is a product of fields Q[x]/(f) with multiplicities; its
trace form x -> Tr(x^2) has Gram matrix (in the power basis of each
factor) given by power sums of the roots, computed exactly from the
coefficients by Newton's identities.  A separate descriptor carries the
group-theoretic data of a Galois algebra (the group, and whether the
algebra is a field), from which the structural predicates about the
discriminant and the degree-2 invariant are evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import is_2_reduced
from .groups import Group, regular_rep_in_alternating, sylow2
from .quadratic import (
    QForm,
    cup,
    diagonalize,
    direct_sum,
    is_isometric_q,
    repeat,
    signature,
    sqclass_mul,
    squarefree_part,
    w1,
    w2,
)


class GaloisError(ValueError):
    pass


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Division with remainder for coefficient lists (leading first)."""
    a = a[:]
    q = []
    while len(a) >= len(b) and any(a):
        if a[0] == 0:
            a.pop(0)
            continue
        f = a[0] / b[0]
        q.append(f)
        for i in range(len(b)):
            a[i] -= f * b[i]
        assert a[0] == 0
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return q, a


def _poly_gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    """Degree of gcd(a, b) (0 when coprime)."""
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return len(a) - 1


@dataclass(frozen=True)
class MonicPoly:
    """Monic squarefree polynomial with integer coefficients, leading
    coefficient first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if len(cs) < 2:
            raise GaloisError("polynomial must have degree at least 1")
        if cs[0] != 1:
            raise GaloisError("polynomial must be monic")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise GaloisError("coefficients must be integers")
        object.__setattr__(self, "coeffs", cs)
        a = [Fraction(c) for c in cs]
        d = self.degree
        b = [Fraction((d - i) * cs[i]) for i in range(d)]
        if _poly_gcd_degree(a, b) != 0:
            raise GaloisError("polynomial has repeated roots")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        v = 0
        for c in self.coeffs:
            v = v * x + c
        return v

    def __str__(self):
        bits = []
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = d - i
            xs = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not xs:
                bits.append(f"{c:+d}")
            elif c == 1:
                bits.append(f"+{xs}")
            elif c == -1:
                bits.append(f"-{xs}")
            else:
                bits.append(f"{c:+d}{xs}")
        s = "".join(bits)
        return s[1:] if s.startswith("+") else s


def power_sums(f: MonicPoly, count: int) -> tuple[int, ...]:
    """p_0, ..., p_(count-1), where p_k is the sum of k-th powers of the
    roots of f, by Newton's identities."""
    d = f.degree
    e = [0] * (d + 1)  # elementary symmetric functions
    for i in range(1, d + 1):
        e[i] = (-1) ** i * f.coeffs[i]
    ps = [d]
    for k in range(1, count):
        acc = 0
        for i in range(1, min(k - 1, d) + 1):
            acc += (-1) ** (i - 1) * e[i] * ps[k - i]
        if k <= d:
            acc += (-1) ** (k - 1) * k * e[k]
        ps.append(acc)
    return tuple(ps)


def trace_gram(f: MonicPoly) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of (x, y) -> Tr(xy) on Q[t]/(f) in the power basis."""
    d = f.degree
    ps = power_sums(f, 2 * d - 1)
    return tuple(tuple(ps[i + j] for j in range(d)) for i in range(d))


@dataclass(frozen=True)
class EtaleAlg:
    """Product of number fields Q[x]/(f_i), each with a multiplicity."""

    factors: tuple[tuple[MonicPoly, int], ...]

    def __post_init__(self):
        fs = tuple((f, int(m)) for f, m in self.factors)
        if not fs:
            raise GaloisError("algebra needs at least one factor")
        for f, m in fs:
            if not isinstance(f, MonicPoly):
                raise GaloisError("factors must be monic polynomials")
            if m < 1:
                raise GaloisError("multiplicities must be positive")
        object.__setattr__(self, "factors", fs)

    @staticmethod
    def field(f: MonicPoly) -> "EtaleAlg":
        return EtaleAlg(((f, 1),))

    @property
    def degree(self) -> int:
        return sum(f.degree * m for f, m in self.factors)


def trace_form(A: EtaleAlg, rng=None) -> QForm:
    """Diagonalized trace form of the algebra."""
    parts = []
    for f, m in A.factors:
        q = diagonalize(trace_gram(f), rng=rng)
        parts.append(repeat(q, m) if m > 1 else q)
    return direct_sum(*parts)


def algebra_disc(A: EtaleAlg) -> int:
    """Square class of the discriminant (the determinant of the trace
    form), as a squarefree integer."""
    d = 1
    for f, m in A.factors:
        g = trace_gram(f)
        det = _det_fraction_free(g)
        if det == 0:
            raise GaloisError("degenerate trace form")
        if m % 2:
            d = sqclass_mul(d, squarefree_part(det))
    return d


def _det_fraction_free(m) -> int:
    """Bareiss determinant of an integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_totally_real(A: EtaleAlg) -> bool:
    q = trace_form(A)
    return signature(q) == (A.degree, 0)


@dataclass(frozen=True)
class GaloisDescriptor:
    """Group-theoretic data attached to a Galois algebra: the acting
    group, and whether the algebra is a field (the action is transitive
    on a single factor).  The caller asserts the group identification;
    everything downstream of it is computed."""

    group: Group
    field: bool = True

    @property
    def surjective(self) -> bool:
        """A Galois algebra is a field exactly when the action map is onto."""
        return self.field

    def sylow(self):
        return sylow2(self.group)

    def sylow_is_cyclic(self) -> bool:
        return self.sylow().is_cyclic()

    def two_reduced(self) -> bool:
        return is_2_reduced(self.group)

    def check_degree(self, A: EtaleAlg) -> None:
        if A.degree != self.group.order:
            raise GaloisError(
                f"algebra degree {A.degree} != group order {self.group.order}")
        if self.field and (len(A.factors) != 1 or A.factors[0][1] != 1):
            raise GaloisError("descriptor says field, algebra is a product")


def disc_square_prediction(D: GaloisDescriptor, A: EtaleAlg) -> bool:
    """Structural prediction of 'the discriminant is a square': true when
    the regular action of the group is by even permutations, or when the
    algebra is a product with every multiplicity even."""
    if regular_rep_in_alternating(D.group):
        return True
    if not D.field and all(m % 2 == 0 for _, m in A.factors):
        return True
    return False


def predicted_2group_form(n: int, real: bool, cyclic: bool, d: int) -> tuple[str, QForm]:
    """The predicted isometry class of the trace form of a degree-n
    Galois field whose group is a 2-group: four cases split by being
    totally real and by the group being cyclic.  d is the squarefree
    discriminant class."""
    if n < 1 or n & (n - 1):
        raise GaloisError("degree must be a power of two")
    one = Fraction(1)
    if n == 1:
        return "i", QForm((one,))
    if real and not cyclic:
        return "i", QForm((one,) * n)
    if not real and not cyclic:
        return "ii", QForm((one, -one) * (n // 2))
    if real:
        return "iii", QForm((Fraction(2), Fraction(2 * d)) + (one,) * (n - 2))
    m = n // 2 - 1
    lead = Fraction(2 if m % 2 == 0 else -2)
    return "iv", QForm((one, -one) * m + (lead, Fraction(2 * d)))


def classify_2group_trace_form(A: EtaleAlg, D: GaloisDescriptor) -> dict:
    """Compare the computed trace form of a Galois field with 2-power
    group against the predicted model form.  Preconditions: the algebra
    is a field of degree 0 or 2 mod 8, the group is a 2-group whose
    second cohomology has trivial involution-diagonal kernel, and the
    signature is definite or balanced (anything else is a bad input)."""
    D.check_degree(A)
    n = D.group.order
    if n & (n - 1):
        raise GaloisError("group order must be a power of two")
    if not D.field:
        raise GaloisError("classification needs a field, not a product")
    if n % 8 not in (0, 2) and n != 1:
        raise GaloisError(f"degree {n} is not 0 or 2 mod 8")
    if not D.two_reduced():
        raise GaloisError("group fails the trivial-kernel condition")
    q = trace_form(A)
    sig = signature(q)
    if sig not in ((n, 0), (n // 2, n - n // 2)):
        raise GaloisError(f"signature {sig} is neither definite nor balanced")
    real = sig == (n, 0)
    G = D.group
    cyclic = any(G.element_order(g) == n for g in range(n))
    d = w1(q)
    case, model = predicted_2group_form(n, real, cyclic, d)
    return {
        "case": case,
        "real": real,
        "cyclic": cyclic,
        "disc": d,
        "computed": q,
        "model": model,
        "isometric": is_isometric_q(q, model),
    }


def verify_w1(A: EtaleAlg, D: GaloisDescriptor) -> dict:
    """Check that triviality of the discriminant class matches the
    structural predicate (even regular action, or even multiplicities)."""
    D.check_degree(A)
    if not D.field and len(A.factors) != 1:
        raise GaloisError("a Galois algebra is a power of a single field")
    d = algebra_disc(A)
    predicted = disc_square_prediction(D, A)
    return {
        "status": "pass" if (d == 1) == predicted else "fail",
        "disc_class": d,
        "disc_is_square": d == 1,
        "predicted_square": predicted,
    }


def verify_main(A: EtaleAlg, D: GaloisDescriptor) -> dict:
    """Check w2(trace form) == cup(2, disc).  Applies when the group has
    trivial involution-diagonal kernel and the degree is 0 or 2 mod 8;
    otherwise the check is skipped."""
    D.check_degree(A)
    n = A.degree
    if n % 8 not in (0, 2):
        return {"status": "skipped", "reason": f"degree {n} is not 0 or 2 mod 8"}
    if not D.two_reduced():
        return {"status": "skipped",
                "reason": "group fails the trivial-kernel condition"}
    lhs = w2(trace_form(A))
    rhs = cup(2, algebra_disc(A))
    return {
        "status": "pass" if lhs == rhs else "fail",
        "w2_places": lhs,
        "cup_2_disc": rhs,
    }


def verify_two_cyclic_sylow(A: EtaleAlg, d1: int, d2: int,
                            first_factor_order_2: bool,
                            sylow_orders: tuple[int, int] | None = None) -> dict:
    """Check w2(trace form) against the two-cyclic-factor prediction.
    When sylow_orders = (2^r1, 2^r2) is supplied, the premise r2 >= 2 is
    enforced and its failure yields a skipped status."""
    if sylow_orders is not None:
        o1, o2 = sorted(sylow_orders)
        if o1 < 2 or o2 < 4 or (o1 & (o1 - 1)) or (o2 & (o2 - 1)):
            return {"status": "skipped",
                    "reason": f"Sylow factor orders {sylow_orders} miss the"
                              " premise (need cyclic 2^r1 x 2^r2, r2 >= 2)"}
        if first_factor_order_2 != (o1 == 2):
            raise GaloisError("first_factor_order_2 contradicts sylow_orders")
    predicted = two_cyclic_sylow_w2_prediction(d1, d2, first_factor_order_2)
    actual = w2(trace_form(A))
    return {
        "status": "pass" if actual == predicted else "fail",
        "w2_places": actual,
        "predicted_places": predicted,
    }


def two_cyclic_sylow_w2_prediction(d1: int, d2: int,
                                   first_factor_order_2: bool) -> frozenset:
    """Predicted place set of the trace form when the group's Sylow
    2-subgroup is a product of two cyclic groups: the fixed fields of
    the two factors have discriminant classes d1 (first factor side)
    and d2 (second), and the shape depends on whether the first cyclic
    factor has order exactly 2."""
    d1 = squarefree_part(d1)
    d2 = squarefree_part(d2)
    if first_factor_order_2:
        return cup(sqclass_mul(d1, d2), d2)
    return cup(d1, d2)
