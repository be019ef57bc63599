"""Cohomology of complex Grassmannians in the Schubert basis.

Classes on Gr_k(C^n) are integer combinations of Schubert classes indexed
by partitions inside the k x (n-k) box. Products reduce to Schur expansion
followed by discarding anything that leaves the box; integration reads off
the coefficient of the full-box (point) class.
"""

from dataclasses import dataclass

from .errors import (
    BoxOverflow,
    DegreeOutOfRange,
    DimensionMismatch,
    MissingChernDegree,
    SpaceMismatch,
)
from .indexing import fits_in_box, normalize_partition, partition_size
from .schur import expand_basis_product, ring_determinant


@dataclass(frozen=True)
class GrassmannianDescriptor:
    """Gr_k(C^n): k-dimensional subspaces of C^n."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def l(self):
        return self.n - self.k

    @property
    def complex_dimension(self):
        return self.k * self.l

    @property
    def box_partition(self):
        return (self.l,) * self.k

    def __str__(self):
        return f"Gr({self.k}, C^{self.n})"


class GrassmannClass:
    """Sparse integer combination of Schubert classes on a fixed Grassmannian."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms):
        clean = {}
        for lam, c in terms.items():
            lam = normalize_partition(lam)
            if not fits_in_box(lam, space.k, space.l):
                raise BoxOverflow(
                    f"partition {lam} does not fit in the {space.k}x{space.l} box"
                )
            if c:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", {l: c for l, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannClass is immutable")

    @classmethod
    def zero(cls, space):
        return cls(space, {})

    @classmethod
    def unit(cls, space):
        return cls(space, {(): 1})

    @classmethod
    def basis(cls, space, lam):
        return cls(space, {normalize_partition(lam): 1})

    def coefficient(self, lam):
        return self.terms.get(normalize_partition(lam), 0)

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        sizes = {partition_size(l) for l in self.terms}
        return len(sizes) <= 1

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda t: (partition_size(t[0]), t[0])
        )

    def _check_space(self, other):
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")

    def __add__(self, other):
        self._check_space(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return GrassmannClass(self.space, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GrassmannClass(self.space, {l: -c for l, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return GrassmannClass(
                self.space, {l: c * other for l, c in self.terms.items()}
            )
        return gr_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power")
        out = GrassmannClass.unit(self.space)
        for _ in range(m):
            out = gr_multiply(out, self)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, GrassmannClass)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"<0 on {self.space}>"
        bits = []
        for lam, c in self.sorted_terms():
            name = "s" + repr(list(lam))
            bits.append(name if c == 1 else f"{c}*{name}")
        return f"<{' + '.join(bits)} on {self.space}>"


def gr_multiply(a, b):
    """Product in H*(Gr_k(C^n)): LR expansion truncated to the box."""
    a._check_space(b)
    space = a.space
    out = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            c = ca * cb
            for nu, m in expand_basis_product(lam, mu, rows=space.k, cols=space.l):
                out[nu] = out.get(nu, 0) + c * m
    return GrassmannClass(space, out)


def gr_integrate(a):
    """Coefficient of the point class sigma_{(l^k)}.

    Degrees below the top integrate to zero; for inhomogeneous input the
    top-degree part alone contributes.
    """
    return a.terms.get(a.space.box_partition, 0)


def poincare_dual(lam, space):
    """Rotated box complement; the unique partner pairing to 1."""
    lam = normalize_partition(lam)
    k, l = space.k, space.l
    if not fits_in_box(lam, k, l):
        raise BoxOverflow(f"partition {lam} does not fit in the {k}x{l} box")
    padded = lam + (0,) * (k - len(lam))
    return normalize_partition(tuple(l - padded[k - 1 - i] for i in range(k)))


def chern_class(bundle, i, space):
    """Chern class of a tautological bundle as a Schubert combination.

    bundle "sub" is the rank-k subspace bundle, "quot" the rank-l quotient.
    The quotient classes are single rows, c_i(Q) = sigma_(i); the subspace
    classes are signed columns, c_i(S) = (-1)^i sigma_(1^i), which is the
    unique choice making the Whitney sum c(S)c(Q) collapse to 1.
    """
    if bundle not in ("sub", "quot"):
        raise ValueError(f"bundle must be 'sub' or 'quot', got {bundle!r}")
    rank = space.k if bundle == "sub" else space.l
    if not 0 <= i <= rank:
        raise DegreeOutOfRange(
            f"c_{i} of rank-{rank} bundle {bundle!r} on {space}"
        )
    if i == 0:
        return GrassmannClass.unit(space)
    if bundle == "quot":
        return GrassmannClass.basis(space, (i,))
    sign = -1 if i % 2 else 1
    return GrassmannClass(space, {(1,) * i: sign})


def giambelli(lam, space):
    """Determinant of single-row classes, evaluated inside the ring.

    Entry (i, j) is the row class of length lam_i - i + j, with length 0
    meaning the unit and lengths outside [0, l] meaning zero. Expanding the
    determinant by ring arithmetic must land back on the basis class.
    """
    lam = normalize_partition(lam)
    if not fits_in_box(lam, space.k, space.l):
        raise BoxOverflow(f"partition {lam} does not fit on {space}")
    d = len(lam)
    if d == 0:
        return GrassmannClass.unit(space)
    unit = GrassmannClass.unit(space)
    zero = GrassmannClass.zero(space)

    def entry(p):
        if p == 0:
            return unit
        if p < 0 or p > space.l:
            return zero
        return GrassmannClass.basis(space, (p,))

    mat = [[entry(lam[i] - i + j) for j in range(d)] for i in range(d)]
    return ring_determinant(mat, unit)


def thom_porteous(e, f, rho, c):
    """Degeneracy-locus class for a generic map E -> F of ranks e, f.

    The locus where the rank drops to at most rho has class equal to the
    (e-rho) x (e-rho) determinant with (i, j) entry the degree f-rho+j-i
    piece of the total Chern class of the virtual bundle F - E. That series
    is passed in as `c`, a sequence of classes indexed by degree; negative
    degrees are zero and any positive degree the determinant touches must
    be present.
    """
    if not c:
        raise MissingChernDegree("need at least the degree-0 Chern class")
    space = c[0].space
    if rho < 0 or rho > min(e, f):
        raise ValueError(f"need 0 <= rho <= min(e, f), got rho={rho}")
    d = e - rho
    if d == 0:
        return GrassmannClass.unit(space)
    zero = GrassmannClass.zero(space)

    def entry(deg):
        if deg < 0:
            return zero
        if deg >= len(c):
            raise MissingChernDegree(
                f"Chern series entry of degree {deg} not supplied"
            )
        return c[deg]

    mat = [
        [entry(f - rho + (j + 1) - (i + 1)) for j in range(d)] for i in range(d)
    ]
    return ring_determinant(mat, GrassmannClass.unit(space))


def tautological_chern_difference(space, max_degree):
    """Chern series of the virtual bundle Q - S, degrees 0..max_degree.

    c(Q - S) = c(Q) * c(S)^{-1}; the inverse is the usual recursive series
    1 / (1 + u) = 1 - u + u^2 - ... truncated by degree.
    """
    k, l = space.k, space.l
    zero = GrassmannClass.zero(space)
    cq = [chern_class("quot", i, space) if i <= l else zero
          for i in range(max_degree + 1)]
    cs = [chern_class("sub", i, space) if i <= k else zero
          for i in range(max_degree + 1)]
    inv = [GrassmannClass.unit(space)]
    for d in range(1, max_degree + 1):
        acc = zero
        for j in range(1, min(d, k) + 1):
            acc = acc + gr_multiply(cs[j], inv[d - j])
        inv.append(-acc)
    out = []
    for d in range(max_degree + 1):
        acc = zero
        for i in range(0, min(d, l) + 1):
            acc = acc + gr_multiply(cq[i], inv[d - i])
        out.append(acc)
    return out


def degeneracy_count(space, e, f, rho, m):
    """Count rank-at-most-rho loci conditions imposed m times.

    Integrates the m-th power of the Thom-Porteous class of the tautological
    map S -> Q on the given Grassmannian. When the rank bound is vacuous
    (rho reaches e or f) the locus is the whole space and the integral of
    the unit applies; otherwise m times the locus codimension must exhaust
    the dimension exactly.
    """
    if rho < 0 or rho > min(e, f):
        raise ValueError(f"need 0 <= rho <= min(e, f), got rho={rho}")
    codim = (e - rho) * (f - rho)
    if codim == 0:
        return gr_integrate(GrassmannClass.unit(space))
    if m * codim != space.complex_dimension:
        raise DimensionMismatch(
            f"{m} conditions of codimension {codim} do not fill "
            f"dim {space.complex_dimension} of {space}"
        )
    needed = f - rho + (e - rho) - 1
    series = tautological_chern_difference(space, needed)
    locus = thom_porteous(e, f, rho, series)
    return gr_integrate(locus ** m)
