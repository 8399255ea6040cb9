"""Exact polynomial arithmetic on the cotangent ring of a supported curve.

Elements live in Obar = O(X)[xi], where O(X) is Q[x] (line model) or
Q[x,y]/(y^2 - x^3 - a*x - b) (elliptic model) and xi is the principal
symbol of the canonical derivation.  Monomials are stored as
(xi_exp, x_exp, y_exp) triples; on an elliptic curve the canonical form
keeps y_exp <= 1 by rewriting y^2 -> x^3 + a*x + b, and on the line
y never occurs.

The fixed monomial order is xi-degree first, then graded reverse
lexicographic on (x, y) with x > y.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurveModel

Mono = tuple  # (ke, xe, ye)


def mono_key(m):
    """Sort key realizing the fixed order (bigger key = bigger monomial)."""
    ke, xe, ye = m
    return (ke, xe + ye, -ye)


def mono_mul(m1, m2):
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])


def mono_divides(m1, m2):
    """True when m1 divides m2 componentwise."""
    return m1[0] <= m2[0] and m1[1] <= m2[1] and m1[2] <= m2[2]


def mono_div(m2, m1):
    return (m2[0] - m1[0], m2[1] - m1[1], m2[2] - m1[2])


def mono_lcm(m1, m2):
    return (max(m1[0], m2[0]), max(m1[1], m2[1]), max(m1[2], m2[2]))


def _reduce_terms(terms, curve: CurveModel):
    """Apply the curve relation until every monomial has y_exp <= 1."""
    if not curve.is_elliptic:
        for m in terms:
            if m[2] != 0:
                raise ValueError("y does not exist on the line model")
        return {m: c for m, c in terms.items() if c != 0}
    a, b = curve.a, curve.b
    out = {}
    work = list(terms.items())
    while work:
        (ke, xe, ye), c = work.pop()
        if c == 0:
            continue
        if ye <= 1:
            key = (ke, xe, ye)
            c0 = out.get(key, Fraction(0)) + c
            if c0 == 0:
                out.pop(key, None)
            else:
                out[key] = c0
        else:
            # y^2 = x^3 + a x + b
            work.append(((ke, xe + 3, ye - 2), c))
            if a != 0:
                work.append(((ke, xe + 1, ye - 2), c * a))
            if b != 0:
                work.append(((ke, xe, ye - 2), c * b))
    return out


class GPoly:
    """Canonical-form element of Obar (or of O(X) when xi-free)."""

    __slots__ = ("curve", "terms")

    def __init__(self, curve: CurveModel, terms=None, _canonical=False):
        self.curve = curve
        if terms is None:
            terms = {}
        if _canonical:
            self.terms = terms
        else:
            self.terms = _reduce_terms(dict(terms), curve)

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, curve):
        return cls(curve, {}, _canonical=True)

    @classmethod
    def const(cls, curve, c):
        c = Fraction(c)
        if c == 0:
            return cls.zero(curve)
        return cls(curve, {(0, 0, 0): c}, _canonical=True)

    @classmethod
    def one(cls, curve):
        return cls.const(curve, 1)

    @classmethod
    def var_x(cls, curve):
        return cls(curve, {(0, 1, 0): Fraction(1)}, _canonical=True)

    @classmethod
    def var_y(cls, curve):
        if not curve.is_elliptic:
            raise ValueError("y does not exist on the line model")
        return cls(curve, {(0, 0, 1): Fraction(1)}, _canonical=True)

    @classmethod
    def var_xi(cls, curve):
        return cls(curve, {(1, 0, 0): Fraction(1)}, _canonical=True)

    @classmethod
    def curve_relation(cls, curve):
        """y^2 - x^3 - a*x - b as a non-canonical term dict (for GB lifts)."""
        if not curve.is_elliptic:
            raise ValueError("the line model has no curve relation")
        rel = {(0, 0, 2): Fraction(1), (0, 3, 0): Fraction(-1),
               (0, 1, 0): -curve.a, (0, 0, 0): -curve.b}
        return {m: c for m, c in rel.items() if c != 0}

    # ---- basic queries ------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == (0, 0, 0) for m in self.terms)

    def is_ring_element(self):
        """True when xi-free, i.e. the element lies in O(X)."""
        return all(m[0] == 0 for m in self.terms)

    def is_y_free(self):
        return all(m[2] == 0 for m in self.terms)

    def xi_degree(self):
        if not self.terms:
            return -1
        return max(m[0] for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(m[0] + m[1] + m[2] for m in self.terms)

    def leading_monomial(self):
        return max(self.terms, key=mono_key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def coeff(self, m):
        return self.terms.get(tuple(m), Fraction(0))

    # ---- arithmetic ---------------------------------------------------
    def _check(self, other):
        if self.curve != other.curve:
            raise ValueError("mixed curve models")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            c0 = out.get(m, Fraction(0)) + c
            if c0 == 0:
                out.pop(m, None)
            else:
                out[m] = c0
        return GPoly(self.curve, out, _canonical=True)

    def __neg__(self):
        return GPoly(self.curve, {m: -c for m, c in self.terms.items()},
                     _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c0 = out.get(m, Fraction(0)) + c1 * c2
                if c0 == 0:
                    out.pop(m, None)
                else:
                    out[m] = c0
        return GPoly(self.curve, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return GPoly.zero(self.curve)
        return GPoly(self.curve, {m: cc * c for m, cc in self.terms.items()},
                     _canonical=True)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = GPoly.one(self.curve)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, GPoly) and self.curve == other.curve
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.curve, frozenset(self.terms.items())))

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(Fraction(1) / self.leading_coeff())

    # ---- structure maps -----------------------------------------------
    def conj(self):
        """The hyperelliptic involution y -> -y (identity on the line)."""
        if not self.curve.is_elliptic:
            return self
        return GPoly(self.curve,
                     {m: (-c if m[2] % 2 else c) for m, c in self.terms.items()},
                     _canonical=True)

    def delta(self):
        """The canonical derivation: d/dx on the line,
        2y d/dx + (3x^2 + a) d/dy on an elliptic curve (xi is inert)."""
        curve = self.curve
        out = GPoly.zero(curve)
        for (ke, xe, ye), c in self.terms.items():
            if xe:
                if curve.is_elliptic:
                    # x-part: c * xe * x^(xe-1) y^(ye+1) * 2
                    out = out + GPoly(curve, {(ke, xe - 1, ye + 1):
                                              c * xe * 2})
                else:
                    out = out + GPoly(curve, {(ke, xe - 1, ye): c * xe},
                                      _canonical=True)
            if ye:
                # y-part: c * ye * x^xe y^(ye-1) * (3x^2 + a)
                out = out + GPoly(curve, {(ke, xe + 2, ye - 1): c * ye * 3,
                                          (ke, xe, ye - 1): c * ye * curve.a})
        return out

    def xi_homogeneous_part(self, k):
        return GPoly(self.curve,
                     {m: c for m, c in self.terms.items() if m[0] == k},
                     _canonical=True)

    def substitute_x(self, image: "GPoly"):
        """Ring map x -> image (y, xi fixed); image must be xi- and y-free
        unless the model permits."""
        curve = self.curve
        out = GPoly.zero(curve)
        powers = {0: GPoly.one(curve)}

        def xpow(n):
            if n not in powers:
                powers[n] = xpow(n - 1) * image
            return powers[n]

        for (ke, xe, ye), c in self.terms.items():
            t = GPoly(curve, {(ke, 0, ye): c}, _canonical=True)
            out = out + t * xpow(xe)
        return out

    # ---- division -----------------------------------------------------
    def divide_exact(self, g: "GPoly"):
        """Return q with self = q*g in Obar, or None if g does not divide.

        On elliptic models this goes through the norm: q = (self*conj(g))
        divided componentwise by the y-free norm g*conj(g).
        """
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return GPoly.zero(self.curve)
        if self.curve.is_elliptic and not g.is_y_free():
            num = self * g.conj()
            den = g * g.conj()
            if not den.is_y_free():
                raise AssertionError("norm must be y-free")
            return num.divide_exact(den)
        # divisor is y-free: divide the y^0 and y^1 components separately
        if self.curve.is_elliptic and not self.is_y_free():
            a_part = GPoly(self.curve,
                           {m: c for m, c in self.terms.items() if m[2] == 0},
                           _canonical=True)
            b_part = GPoly(self.curve,
                           {(m[0], m[1], 0): c for m, c in self.terms.items()
                            if m[2] == 1}, _canonical=True)
            qa = a_part.divide_exact(g)
            qb = b_part.divide_exact(g)
            if qa is None or qb is None:
                return None
            return qa + qb * GPoly.var_y(self.curve)
        # plain multivariate exact division in Q[x, xi]
        q = {}
        r = dict(self.terms)
        glm = g.leading_monomial()
        glc = g.terms[glm]
        while r:
            lm = max(r, key=mono_key)
            if not mono_divides(glm, lm):
                return None
            m = mono_div(lm, glm)
            c = r[lm] / glc
            q[m] = c
            for mg, cg in g.terms.items():
                mm = mono_mul(mg, m)
                c0 = r.get(mm, Fraction(0)) - cg * c
                if c0 == 0:
                    r.pop(mm, None)
                else:
                    r[mm] = c0
        return GPoly(self.curve, q, _canonical=True)

    # ---- printing -----------------------------------------------------
    def __repr__(self):
        return "GPoly(%s)" % (format_poly(self),)


# ---- univariate helpers (y-free, xi-free polynomials as Q[x]) ---------

def to_univar(p: GPoly):
    """Coefficient list [c0, c1, ...] of a polynomial in Q[x]."""
    if not (p.is_y_free() and p.is_ring_element()):
        raise ValueError("not a univariate polynomial in x")
    if p.is_zero():
        return []
    deg = max(m[1] for m in p.terms)
    out = [Fraction(0)] * (deg + 1)
    for (ke, xe, ye), c in p.terms.items():
        out[xe] = c
    return out


def from_univar(curve, coeffs):
    return GPoly(curve, {(0, i, 0): Fraction(c)
                         for i, c in enumerate(coeffs) if c != 0},
                 _canonical=True)


def _uv_trim(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def uv_divmod(a, b):
    a = list(a)
    b = _uv_trim(list(b))
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(_uv_trim(a)) >= len(b):
        a = _uv_trim(a)
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[i + d] -= c * bc
    return q, _uv_trim(a)


def uv_gcd(a, b):
    a = _uv_trim(list(a))
    b = _uv_trim(list(b))
    while b:
        _, r = uv_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def uv_lcm(a, b):
    g = uv_gcd(a, b)
    if not g:
        return []
    q, r = uv_divmod([Fraction(c) for c in a], g)
    assert not r
    out = [Fraction(0)] * (len(q) + len(b) - 1)
    for i, qc in enumerate(q):
        for j, bc in enumerate(b):
            out[i + j] += qc * bc
    return _uv_trim(out)


def rational_roots(coeffs):
    """All rational roots of the polynomial with the given Q-coefficients."""
    c = _uv_trim([Fraction(v) for v in coeffs])
    if not c:
        raise ValueError("zero polynomial has every root")
    roots = set()
    # strip powers of x
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        c = c[k:]
    if len(c) == 1:
        return sorted(roots)
    # clear denominators to integer coefficients
    den = 1
    for v in c:
        den = den * v.denominator // _gcd(den, v.denominator)
    ic = [int(v * den) for v in c]
    g = 0
    for v in ic:
        g = _gcd(g, abs(v))
    ic = [v // g for v in ic]
    a0, an = abs(ic[0]), abs(ic[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _uv_eval(c, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _uv_eval(coeffs, x):
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return v


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---- parsing and printing --------------------------------------------

class PolyParseError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "/":
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise PolyParseError("bad rational at %d" % i)
                tokens.append(Fraction(int(text[i:j]), int(text[j + 1:k])))
                i = k
            else:
                tokens.append(Fraction(int(text[i:j])))
                i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise PolyParseError("unexpected character %r" % ch)
    return tokens


class _Parser:
    """Recursive-descent parser over an atom table; multiplication and
    powers are delegated so the same grammar serves commutative polynomials
    and PBW-normalized operators."""

    def __init__(self, tokens, atoms, const, mul, add, neg):
        self.tokens = tokens
        self.pos = 0
        self.atoms = atoms
        self.const = const
        self.mul = mul
        self.add = add
        self.neg = neg

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise PolyParseError("trailing input")
        return v

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        v = self.term()
        if sign < 0:
            v = self.neg(v)
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            if op == "-":
                t = self.neg(t)
            v = self.add(v, t)
        return v

    def term(self):
        v = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                v = self.mul(v, self.factor())
            elif isinstance(nxt, str) and nxt in self.atoms or nxt == "(":
                # implicit multiplication: "2x", "x y"
                v = self.mul(v, self.factor())
            else:
                return v

    def factor(self):
        base = self.primary()
        while self.peek() == "^":
            self.take()
            e = self.take()
            if not isinstance(e, Fraction) or e.denominator != 1 or e < 0:
                raise PolyParseError("exponent must be a nonnegative integer")
            p = self.const(1)
            for _ in range(int(e)):
                p = self.mul(p, base)
            base = p
        return base

    def primary(self):
        t = self.take()
        if t == "(":
            v = self.expr()
            if self.take() != ")":
                raise PolyParseError("missing )")
            return v
        if t == "-":
            return self.neg(self.primary())
        if isinstance(t, Fraction):
            return self.const(t)
        if isinstance(t, str) and t in self.atoms:
            return self.atoms[t]
        raise PolyParseError("unexpected token %r" % (t,))


def parse_poly(text: str, curve: CurveModel, allow_xi=True) -> GPoly:
    """Parse the polynomial grammar: rationals, x, y, xi, + - * ^, parens."""
    atoms = {"x": GPoly.var_x(curve)}
    if curve.is_elliptic:
        atoms["y"] = GPoly.var_y(curve)
    if allow_xi:
        atoms["xi"] = GPoly.var_xi(curve)
    p = _Parser(_tokenize(text), atoms,
                const=lambda c: GPoly.const(curve, c),
                mul=lambda a, b: a * b,
                add=lambda a, b: a + b,
                neg=lambda a: -a)
    return p.parse()


def _format_mono(m, names=("xi", "x", "y")):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def format_poly(p: GPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for m in sorted(p.terms, key=mono_key, reverse=True):
        c = p.terms[m]
        mono = _format_mono(m)
        if not mono:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = mono
        else:
            piece = "%s*%s" % (abs(c), mono)
        if not out:
            out.append(piece if c > 0 else "-" + piece)
        else:
            out.append(("+ " if c > 0 else "- ") + piece)
    return " ".join(out)
