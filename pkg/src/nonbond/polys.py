"""Exact sparse bivariate polynomials over Z and rational functions of them.

BiPoly stores {(i, j): coef} for coef * x^i * y^j with int coefficients
and no explicit zeros.  Products of large polynomials run through a
Kronecker packing (evaluate at huge powers of two, one big integer
multiply, unpack balanced digits), which also powers the heuristic GCD;
a primitive subresultant remainder sequence is the exact fallback.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction

try:
    from gmpy2 import gcd as _int_gcd, mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a soft accelerator
    _int_gcd = math.gcd
    _mpz = int

# Above this many coefficient products, multiplication switches to packing.
_PACKED_MUL_CUTOFF = 1024


def _as_int_gcd(a, b):
    return int(_int_gcd(a, b))


class BiPoly:
    """Sparse polynomial in x and y with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, cf in terms.items():
                if cf:
                    i, j = key
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent in %r" % (key,))
                    clean[(int(i), int(j))] = int(cf)
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, n):
        return cls({(0, 0): n})

    @classmethod
    def x(cls, power=1):
        return cls({(power, 0): 1})

    @classmethod
    def y(cls, power=1):
        return cls({(0, power): 1})

    @classmethod
    def monomial(cls, coef, i, j):
        return cls({(i, j): coef})

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return self.terms == {(0, 0): 1}

    @property
    def deg_x(self):
        """Largest x exponent; -1 for the zero polynomial."""
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=-1)

    def coef(self, i, j):
        return self.terms.get((i, j), 0)

    @property
    def const_term(self):
        return self.terms.get((0, 0), 0)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def max_abs_coef(self):
        return max((abs(c) for c in self.terms.values()), default=0)

    def items(self):
        """Terms in canonical order: ascending i, then ascending j."""
        return sorted(self.terms.items())

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BiPoly.zero()
            return BiPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return BiPoly.zero()
        if len(self.terms) * len(other.terms) > _PACKED_MUL_CUTOFF:
            return _mul_packed(self, other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, di, dj):
        """Multiply by x^di * y^dj (negative shifts must divide exactly)."""
        out = {}
        for (i, j), c in self.terms.items():
            if i + di < 0 or j + dj < 0:
                raise ValueError("shift would produce a negative exponent")
            out[(i + di, j + dj)] = c
        return BiPoly(out)

    # -- structure ----------------------------------------------------------

    def x_coeffs(self):
        """dict i -> coefficient of x^i as a y-only BiPoly."""
        out = {}
        for (i, j), c in self.terms.items():
            out.setdefault(i, {})[(0, j)] = c
        return {i: BiPoly(t) for i, t in out.items()}

    def y_coeffs(self):
        """dict j -> coefficient of y^j as an x-only BiPoly."""
        out = {}
        for (i, j), c in self.terms.items():
            out.setdefault(j, {})[(i, 0)] = c
        return {j: BiPoly(t) for j, t in out.items()}

    def content(self):
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = _as_int_gcd(g, c)
            if g == 1:
                return 1
        return g

    def primitive(self):
        """(content, self // content); the zero polynomial gives (0, 0)."""
        g = self.content()
        if g in (0, 1):
            return g, self
        return g, BiPoly({k: c // g for k, c in self.terms.items()})

    def evaluate(self, x=None, y=None):
        """Substitute numbers (int or Fraction) for x and/or y.

        Full substitution returns a number; partial returns a BiPoly and
        accepts only ints.
        """
        if x is not None and y is not None:
            total = 0
            for (i, j), c in self.terms.items():
                total += c * x ** i * y ** j
            return total
        if x is not None:
            out = {}
            for (i, j), c in self.terms.items():
                k = (0, j)
                out[k] = out.get(k, 0) + c * x ** i
            return BiPoly(out)
        if y is not None:
            out = {}
            for (i, j), c in self.terms.items():
                k = (i, 0)
                out[k] = out.get(k, 0) + c * y ** j
            return BiPoly(out)
        return self

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _fmt_term(coef, i, j):
        parts = []
        if i:
            parts.append("x" if i == 1 else "x^%d" % i)
        if j:
            parts.append("y" if j == 1 else "y^%d" % j)
        mag = abs(coef)
        if mag != 1 or not parts:
            parts.insert(0, str(mag))
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for (i, j), c in self.items():
            term = self._fmt_term(c, i, j)
            if not chunks:
                chunks.append(term if c > 0 else "-" + term)
            else:
                chunks.append(("+ " if c > 0 else "- ") + term)
        return " ".join(chunks)

    def __repr__(self):
        return "BiPoly(%s)" % str(self)


# -- packed (Kronecker) multiplication --------------------------------------


def _pack_eval(p, bits, height):
    """p evaluated at y = 2^bits, x = 2^(bits*height) via byte assembly."""
    nbytes = bits // 8
    slots = p.deg_x * height + p.deg_y + 1
    pos = bytearray(slots * nbytes)
    neg = bytearray(slots * nbytes)
    for (i, j), c in p.terms.items():
        off = (i * height + j) * nbytes
        if c > 0:
            pos[off:off + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[off:off + nbytes] = (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack_balanced(value, bits, slots, height):
    """Balanced base-2^bits digits of value, mapped back to (i, j) terms."""
    nbytes = bits // 8
    half = 1 << (bits - 1)
    offset = int.from_bytes((bytes(nbytes - 1) + b"\x80") * slots, "little")
    shifted = value + offset
    if shifted < 0 or shifted >> (bits * slots):
        return None  # a digit fell outside [-half, half)
    raw = shifted.to_bytes(slots * nbytes, "little")
    half_pat = half.to_bytes(nbytes, "little")
    view = memoryview(raw)
    terms = {}
    for e in range(slots):
        chunk = view[e * nbytes:(e + 1) * nbytes]
        if chunk == half_pat:
            continue
        cf = int.from_bytes(chunk, "little") - half
        if cf:
            terms[divmod(e, height)] = cf
    return BiPoly(terms)


def _mul_packed(a, b):
    height = a.deg_y + b.deg_y + 1
    bound = min(len(a.terms), len(b.terms)) * a.max_abs_coef() * b.max_abs_coef()
    bits = (bound.bit_length() + 9) & ~7
    slots = (a.deg_x + b.deg_x) * height + a.deg_y + b.deg_y + 1
    va = _mpz(_pack_eval(a, bits, height))
    vb = _mpz(_pack_eval(b, bits, height))
    out = _unpack_balanced(int(va * vb), bits, slots, height)
    assert out is not None  # the digit bound above is safe by construction
    return out


# -- exact division ----------------------------------------------------------


def _lead_key(terms):
    return max(terms, key=lambda t: (t[1], t[0]))


def exact_div(a, b):
    """a // b when b divides a exactly, else None.

    Leading-term cancellation with a lazy-deletion max-heap over the
    remainder's monomials, so each step costs log of the term count
    instead of a full scan.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return BiPoly.zero()
    (bi, bj) = lead_b = _lead_key(b.terms)
    cb = b.terms[lead_b]
    tail_b = [(k, c) for k, c in b.terms.items() if k != lead_b]
    rem = dict(a.terms)
    heap = [(-j, -i) for (i, j) in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        nj, ni = heapq.heappop(heap)
        key = (-ni, -nj)
        cr = rem.get(key)
        if cr is None:
            continue  # stale heap entry
        di = key[0] - bi
        dj = key[1] - bj
        if di < 0 or dj < 0 or cr % cb:
            return None
        q = cr // cb
        del rem[key]
        quot[(di, dj)] = q
        for (i, j), c in tail_b:
            k = (i + di, j + dj)
            prev = rem.get(k, 0)
            s = prev - q * c
            if s:
                rem[k] = s
                if not prev:  # new monomials always sort below `key`
                    heapq.heappush(heap, (-k[1], -k[0]))
            elif prev:
                del rem[k]
    return BiPoly(quot) if not rem else None


def divides(b, a):
    return exact_div(a, b) is not None


# -- greatest common divisor --------------------------------------------------


def _canonical_sign(p):
    """Flip signs so the lex-leading (by (j, i)) coefficient is positive."""
    if p.is_zero:
        return p
    if p.terms[_lead_key(p.terms)] < 0:
        return -p
    return p


def _gcd_with_monomial(mono, other):
    (mi, mj), mc = next(iter(mono.terms.items()))
    gi, gj, gc = mi, mj, abs(mc)
    for (i, j), c in other.terms.items():
        gi = min(gi, i)
        gj = min(gj, j)
        gc = _as_int_gcd(gc, c)
    return BiPoly.monomial(gc, gi, gj)


def _heu_gcd_once(a, b, bits):
    bits = max(16, (bits + 9) & ~7)
    height = max(a.deg_y, b.deg_y) + 1
    va = _pack_eval(a, bits, height)
    vb = _pack_eval(b, bits, height)
    g = int(_int_gcd(_mpz(va), _mpz(vb)))
    if g == 0:
        return None
    slots = min(a.deg_x, b.deg_x) * height + min(a.deg_y, b.deg_y) + 1
    cand = _unpack_balanced(g, bits, slots, height)
    if cand is None or cand.is_zero:
        return None
    cand = _canonical_sign(cand.primitive()[1])
    if exact_div(a, cand) is None or exact_div(b, cand) is None:
        return None
    return cand

def _heu_gcd(a, b):
    base = max(a.max_abs_coef(), b.max_abs_coef()).bit_length()
    spread = min(a.deg_x + a.deg_y, b.deg_x + b.deg_y)
    for extra in (16, 32 + spread, 2 * (32 + spread), 4 * (32 + spread)):
        cand = _heu_gcd_once(a, b, base + extra)
        if cand is not None:
            return cand
    return None


def _is_univariate_x(p):
    return p.deg_y <= 0


def _lead_y(p):
    """Leading coefficient of p in y, as an x-only BiPoly."""
    dy = p.deg_y
    return BiPoly({(i, 0): c for (i, j), c in p.terms.items() if j == dy})


def _content_y(p):
    """gcd over Z[x] of the y-coefficients of p."""
    cont = BiPoly.zero()
    for _, cf in sorted(p.y_coeffs().items()):
        cont = poly_gcd(cont, cf)
        if cont.is_one:
            break
    return cont


def _prs_gcd_univariate(a, b):
    """Primitive subresultant remainder sequence in x over Z."""
    f, g = a, b
    if f.deg_x < g.deg_x:
        f, g = g, f
    while not g.is_zero:
        # pseudo-remainder of f by g
        lc_g = g.coef(g.deg_x, 0)
        r = f
        while not r.is_zero and r.deg_x >= g.deg_x:
            lc_r = r.coef(r.deg_x, 0)
            r = r * lc_g - g.shift(r.deg_x - g.deg_x, 0) * lc_r
        f, g = g, r.primitive()[1]
    return f.primitive()[1]


def _prs_gcd_y(a, b):
    """Primitive subresultant remainder sequence in y over Z[x]."""
    cont = poly_gcd(_content_y(a), _content_y(b))
    f = exact_div(a, _content_y(a))
    g = exact_div(b, _content_y(b))
    if f.deg_y < g.deg_y:
        f, g = g, f
    while not g.is_zero and g.deg_y > 0:
        lc_g = _lead_y(g)
        r = f
        while not r.is_zero and r.deg_y >= g.deg_y:
            lc_r = _lead_y(r)
            r = r * lc_g - g.shift(0, r.deg_y - g.deg_y) * lc_r
        f, g = g, (exact_div(r, _content_y(r)) if not r.is_zero else r)
    if not g.is_zero:
        return cont  # a nonzero Z[x] remainder: the y-parts are coprime
    return cont * f


def _gcd_pass(pa, pb):
    """One verified common divisor of two primitive polynomials.

    A result of 1 is always final: the heuristic can only understate a
    nontrivial gcd (its Kronecker image is a huge divisor of the integer
    gcd, never a constant), so callers may trust coprimality claims.
    """
    if len(pa.terms) == 1:
        return _gcd_with_monomial(pa, pb)
    if len(pb.terms) == 1:
        return _gcd_with_monomial(pb, pa)
    h = _heu_gcd(pa, pb)
    if h is None:
        if _is_univariate_x(pa) and _is_univariate_x(pb):
            h = _prs_gcd_univariate(pa, pb)
        else:
            h = _prs_gcd_y(pa, pb)
        h = _canonical_sign(h.primitive()[1])
    return h


def poly_gcd(a, b):
    """Positive-leading gcd in Z[x, y].

    Fast path: Kronecker evaluation at big powers of two, integer gcd,
    balanced-digit reconstruction, verified by exact division; repeated
    until the cofactors are coprime so partial hits cannot understate
    the result.  Fallback: primitive subresultant remainder sequence.
    """
    if a.is_zero:
        return _canonical_sign(b)
    if b.is_zero:
        return _canonical_sign(a)
    ca, pa = a.primitive()
    cb, pb = b.primitive()
    total = BiPoly.const(_as_int_gcd(ca, cb))
    while not (pa.is_one or pb.is_one):
        h = _gcd_pass(pa, pb)
        if h.is_one:
            break
        total = total * h
        pa = exact_div(pa, h)
        pb = exact_div(pb, h)
    return _canonical_sign(total)


def poly_gcd_many(polys):
    g = BiPoly.zero()
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_one:
            break
    return g


# -- rational functions -------------------------------------------------------


class RationalGF:
    """Ratio of two BiPoly with a nonzero constant term downstairs.

    Not reduced automatically; `reduced()` removes the gcd and fixes the
    sign so the denominator's constant term is positive (+1 for the
    normalized generating functions).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if isinstance(num, int):
            num = BiPoly.const(num)
        if isinstance(den, int):
            den = BiPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if den.const_term == 0:
            raise ValueError("denominator must have a nonzero constant term")
        self.num = num
        self.den = den

    def reduced(self):
        if self.num.is_zero:
            den = BiPoly.one()
            return RationalGF(BiPoly.zero(), den)
        g = poly_gcd(self.num, self.den)
        num = exact_div(self.num, g)
        den = exact_div(self.den, g)
        if den.const_term < 0:
            num, den = -num, -den
        return RationalGF(num, den)

    @property
    def is_normalized(self):
        return self.den.const_term == 1

    def __eq__(self, other):
        """Exact equality as rational functions (cross-multiplication)."""
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def identical(self, other):
        """Term-for-term equality of both polynomials."""
        return self.num == other.num and self.den == other.den

    def __add__(self, other):
        other = _as_gf(other)
        if other is NotImplemented:
            return other
        return RationalGF(self.num * other.den + other.num * self.den,
                          self.den * other.den).reduced()

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gf(other)
        if other is NotImplemented:
            return other
        return RationalGF(self.num * other.den - other.num * self.den,
                          self.den * other.den).reduced()

    def __rsub__(self, other):
        other = _as_gf(other)
        if other is NotImplemented:
            return other
        return other.__sub__(self)

    def __mul__(self, other):
        other = _as_gf(other)
        if other is NotImplemented:
            return other
        return RationalGF(self.num * other.num, self.den * other.den).reduced()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gf(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        if other.num.const_term == 0:
            raise ValueError("quotient would not be a power series at 0")
        return RationalGF(self.num * other.den, self.den * other.num).reduced()

    def series_x(self, r_max):
        """Power-series coefficients in x: r_max+1 y-only polynomials."""
        bs = self.den.x_coeffs()
        b0 = bs.get(0)
        as_ = self.num.x_coeffs()
        zero = BiPoly.zero()
        out = []
        for r in range(r_max + 1):
            acc = as_.get(r, zero)
            for k in range(1, r + 1):
                bk = bs.get(k)
                if bk is not None:
                    acc = acc - bk * out[r - k]
            if not b0.is_one:
                acc = exact_div(acc, b0)
                if acc is None:
                    raise ArithmeticError("series coefficient not polynomial in y")
            out.append(acc)
        return out

    def series_y(self, d_max):
        """Coefficients of y^0..y^d_max as reduced x-only rational functions."""
        qs = self.den.y_coeffs()
        q0 = qs.get(0)
        ps = self.num.y_coeffs()
        out = []
        for d in range(d_max + 1):
            # C_d = (P_d - sum_{j>=1} Q_j C_{d-j}) / Q_0 over Q(x)
            acc = RationalGF(ps.get(d, BiPoly.zero()), BiPoly.one())
            for j in range(1, d + 1):
                qj = qs.get(j)
                if qj is not None:
                    acc = acc - RationalGF(qj, BiPoly.one()) * out[d - j]
            acc = acc / RationalGF(q0, BiPoly.one())
            out.append(acc.reduced())
        return out

    def specialize_y(self, value):
        """Exact substitution y = value (int or Fraction), reduced."""
        if isinstance(value, int):
            value = Fraction(value)
        p, q = value.numerator, value.denominator
        j_max = max(self.num.deg_y, self.den.deg_y, 0)

        def subst(poly):
            out = {}
            for (i, j), c in poly.terms.items():
                k = (i, 0)
                out[k] = out.get(k, 0) + c * p ** j * q ** (j_max - j)
            return BiPoly(out)

        return RationalGF(subst(self.num), subst(self.den)).reduced()

    def __str__(self):
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalGF(%s)" % self


def _as_gf(value):
    if isinstance(value, RationalGF):
        return value
    if isinstance(value, (int, BiPoly)):
        return RationalGF(value if isinstance(value, BiPoly) else BiPoly.const(value),
                          BiPoly.one())
    return NotImplemented


# -- module-level helpers matching the operation names -----------------------


def series_x(f, r_max):
    return f.series_x(r_max)


def series_y(f, d_max):
    return f.series_y(d_max)


def specialize_y(f, value):
    return f.specialize_y(value)


def reduce_gf(f):
    return f.reduced()
