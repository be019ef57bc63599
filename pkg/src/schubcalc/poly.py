"""Sparse multivariate polynomials with exact integer coefficients.

A term maps an exponent tuple to a nonzero int.  Exponent tuples are
stored with trailing zeros stripped, so a polynomial does not remember
how many variables it was built with: x1*x2 is the same object coming
from two variables or from ten.  Variables are 1-indexed to match the
usual x1, x2, ... notation.
"""


def _strip(exps):
    n = len(exps)
    while n > 0 and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def _add_exps(a, b):
    if len(a) < len(b):
        a, b = b, a
    return a[:0] + tuple(
        a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))
    )


class SparsePolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        """Build from a mapping exponent-tuple -> coefficient; zeros dropped."""
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    key = _strip(exps)
                    c2 = clean.get(key, 0) + c if key in clean else c
                    if c2:
                        clean[key] = c2
                    else:
                        clean.pop(key, None)
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, i):
        if i < 1:
            raise ValueError("variables are 1-indexed")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def nvars(self):
        """Index of the last variable actually appearing."""
        return max((len(e) for e in self.terms), default=0)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exps):
        return self.terms.get(_strip(tuple(exps)), 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            c2 = out.get(e, 0) + c
            if c2:
                out[e] = c2
            else:
                out.pop(e, None)
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SparsePolynomial()
            p = SparsePolynomial.__new__(SparsePolynomial)
            p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = _add_exps(ea, eb)
                c = get(key, 0) + ca * cb
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = SparsePolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def swap_variables(self, i):
        """Apply the transposition of x_i and x_{i+1} (i is 1-indexed)."""
        out = {}
        for e, c in self.terms.items():
            a = e[i - 1] if i - 1 < len(e) else 0
            b = e[i] if i < len(e) else 0
            if a == b:
                out[e] = out.get(e, 0) + c
                continue
            lst = list(e) + [0] * (i + 1 - len(e))
            lst[i - 1], lst[i] = b, a
            key = _strip(lst)
            out[key] = out.get(key, 0) + c
        return SparsePolynomial(out)

    def sorted_terms(self):
        """Terms ordered by total degree, then by exponent tuple."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                "x%d" % (i + 1) if p == 1 else "x%d^%d" % (i + 1, p)
                for i, p in enumerate(e)
                if p
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%d*%s" % (c, mono))
        return " + ".join(bits).replace("+ -", "- ")
