"""Degree-halving reductions for real even and quaternionic Schubert problems.

Real even flag manifolds and quaternionic flag manifolds both carry a ring
isomorphism onto the rational cohomology of a complex flag manifold that
halves degrees. On Schubert bases the map is diagonal: a real class indexed
by a doubled diagram DI goes to 2^|I| times the complex class of I, a
quaternionic class indexed by I goes to 2^|I| times the complex class of I,
and the octonionic flag (complete flags in the 3-dimensional octonionic
plane-field sense) maps with multiplicity 1 onto the quaternionic ring of
three-step flags.

Why this yields lower bounds: for a zero-dimensional real intersection
problem with doubled conditions, each solution carries a sign, and the
signed total is the top coefficient of the product of the real classes.
Pushing the product through the halving map multiplies each factor by
2^|I_j| and the point class by 2^(sum |I_j|); since the problem fills the
dimension exactly, the two powers agree and cancel, leaving the complex
intersection number of the halved problem as the signed real count. Its
absolute value bounds the number of real solutions from below, for every
generic configuration. Because the structure constants involved are
Littlewood-Richardson numbers, the signed count is already nonnegative.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NotADouble,
    NotADoubleIndex,
    SpaceMismatch,
)
from .flag import FlagClass, FlagDescriptor, flag_integrate, flag_multiply
from .grassmann import (
    GrassmannClass,
    GrassmannianDescriptor,
    chern_class,
    degeneracy_count,
    gr_integrate,
    gr_multiply,
)
from .indexing import (
    fits_in_box,
    normalize_osp,
    normalize_partition,
    normalize_perm,
    osp_block_sizes,
    osp_from_perm,
    osp_halve,
    osp_length,
    partition_halve,
    partition_size,
    perm_from_osp,
    perm_pad,
)

REAL_EVEN = "real_even_flag"
QUATERNIONIC = "quaternionic_flag"
OCTONIONIC = "octonionic_flag"
_KINDS = (REAL_EVEN, QUATERNIONIC, OCTONIONIC)


@dataclass(frozen=True)
class HalvingSpaceDescriptor:
    """A halving space, recorded by its kind and complex fixed-point space."""

    kind: str
    fixed_point: object

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown halving kind {self.kind!r}")
        if not isinstance(self.fixed_point, (FlagDescriptor, GrassmannianDescriptor)):
            raise ValueError("fixed point must be a flag or Grassmannian descriptor")
        if self.kind == OCTONIONIC and self.fixed_point != FlagDescriptor((1, 1, 1)):
            raise ValueError("the octonionic flag only exists on three letters")

    @classmethod
    def real_even_grassmannian(cls, k, n):
        """Gr_k(R^n) with k, n even; fixed point Gr_{k/2}(C^{n/2})."""
        if k % 2 or n % 2:
            raise ValueError(f"real even Grassmannian needs even k, n; got {k}, {n}")
        return cls(REAL_EVEN, GrassmannianDescriptor(k // 2, n // 2))

    @classmethod
    def real_even_flag(cls, dims):
        """Fl_D(R^n) with every block even; fixed point Fl_{D/2}(C^{n/2})."""
        dims = tuple(int(d) for d in dims)
        if any(d % 2 for d in dims):
            raise ValueError(f"real even flag needs even blocks, got {dims}")
        return cls(REAL_EVEN, FlagDescriptor(tuple(d // 2 for d in dims)))

    @classmethod
    def quaternionic_grassmannian(cls, k, n):
        """Gr_k(H^n); fixed point Gr_k(C^n)."""
        return cls(QUATERNIONIC, GrassmannianDescriptor(k, n))

    @classmethod
    def quaternionic_flag(cls, dims):
        """Fl_D(H^n); fixed point Fl_D(C^n)."""
        return cls(QUATERNIONIC, FlagDescriptor(tuple(dims)))

    @classmethod
    def octonionic_flag(cls):
        """Complete flags on three letters over the octonions."""
        return cls(OCTONIONIC, FlagDescriptor((1, 1, 1)))

    @property
    def grassmannian_fixed_point(self):
        return isinstance(self.fixed_point, GrassmannianDescriptor)

    def __str__(self):
        fp = self.fixed_point
        if self.kind == OCTONIONIC:
            return "Fl(O^3)"
        if self.kind == QUATERNIONIC:
            if self.grassmannian_fixed_point:
                return f"Gr({fp.k}, H^{fp.n})"
            return f"Fl{fp.dims}(H^{fp.n})"
        if self.grassmannian_fixed_point:
            return f"Gr({2 * fp.k}, R^{2 * fp.n})"
        return f"Fl{tuple(2 * d for d in fp.dims)}(R^{2 * fp.n})"


def _normalize_index(space, index):
    """Bring an index to stored form and check it fits the space.

    Real even / quaternionic spaces over a Grassmannian store partitions;
    over a flag they store OSPs (a permutation is accepted and converted).
    The octonionic flag stores permutations of 1..3. Doubledness is not
    checked here; the halving operations enforce it where required.
    """
    fp = space.fixed_point
    if space.kind == OCTONIONIC:
        return perm_pad(normalize_perm(index), 3)
    if space.grassmannian_fixed_point:
        lam = normalize_partition(index)
        if space.kind == REAL_EVEN:
            rows, cols = 2 * fp.k, 2 * fp.l
        else:
            rows, cols = fp.k, fp.l
        if not fits_in_box(lam, rows, cols):
            raise ValueError(f"partition {lam} does not fit {space}")
        return lam
    if index and isinstance(index[0], tuple):
        osp = normalize_osp(index)
    else:
        osp = osp_from_perm(normalize_perm(index), _index_dims(space))
    if osp_block_sizes(osp) != _index_dims(space):
        raise ValueError(f"OSP blocks {osp_block_sizes(osp)} do not match {space}")
    return osp


def _index_dims(space):
    dims = space.fixed_point.dims
    if space.kind == REAL_EVEN:
        return tuple(2 * d for d in dims)
    return dims


def _halve_index(space, index):
    """Halve a real doubled index; identity on quaternionic/octonionic ones."""
    if space.kind != REAL_EVEN:
        return index
    try:
        if space.grassmannian_fixed_point:
            return partition_halve(index)
        return osp_halve(index)
    except NotADouble as exc:
        raise NotADoubleIndex(f"index {index} is not a doubled index") from exc


def _complex_degree(space, halved):
    if space.grassmannian_fixed_point:
        return partition_size(halved)
    if space.kind == OCTONIONIC:
        from .indexing import perm_length

        return perm_length(halved)
    return osp_length(halved)


def _complex_basis(space, halved):
    fp = space.fixed_point
    if space.grassmannian_fixed_point:
        return GrassmannClass.basis(fp, halved)
    if space.kind == OCTONIONIC:
        return FlagClass.from_permutation(fp, halved)
    return FlagClass.from_osp(fp, halved)


class HalvingClass:
    """Rational combination of Schubert classes on a halving space."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms):
        clean = {}
        for index, c in terms.items():
            index = _normalize_index(space, index)
            c = Fraction(c)
            if c:
                clean[index] = clean.get(index, Fraction(0)) + c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", {i: c for i, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("HalvingClass is immutable")

    @classmethod
    def zero(cls, space):
        return cls(space, {})

    @classmethod
    def unit(cls, space):
        if space.kind == OCTONIONIC:
            return cls(space, {(1, 2, 3): 1})
        if space.grassmannian_fixed_point:
            return cls(space, {(): 1})
        blocks, start = [], 1
        for d in _index_dims(space):
            blocks.append(tuple(range(start, start + d)))
            start += d
        return cls(space, {tuple(blocks): 1})

    @classmethod
    def basis(cls, space, index):
        return cls(space, {index: 1})

    def coefficient(self, index):
        return self.terms.get(_normalize_index(self.space, index), Fraction(0))

    def is_zero(self):
        return not self.terms

    def _check_space(self, other):
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space} vs {other.space}")

    def __add__(self, other):
        self._check_space(other)
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = terms.get(i, Fraction(0)) + c
        return HalvingClass(self.space, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HalvingClass(self.space, {i: -c for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HalvingClass(
                self.space, {i: c * other for i, c in self.terms.items()}
            )
        return real_double_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, HalvingClass)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"<0 on {self.space}>"
        bits = [f"{c}*sigma{list(i)}" for i, c in sorted(self.terms.items())]
        return f"<{' + '.join(bits)} on {self.space}>"


def _to_integer_class(acc_terms, make):
    out = {}
    for index, c in acc_terms.items():
        if c.denominator != 1:
            raise ValueError(f"coefficient {c} of {index} is not an integer")
        out[index] = int(c)
    return make(out)


def kappa(a):
    """The halving map on classes.

    Real even: doubled index DI with half I goes to 2^|I| times the complex
    basis class of I. Quaternionic: index I goes to 2^|I| times the complex
    class of I. Octonionic: index w goes to the quaternionic class of w with
    multiplicity 1 (apply kappa again to land in the complex ring).
    """
    space = a.space
    if space.kind == OCTONIONIC:
        target = HalvingSpaceDescriptor.quaternionic_flag((1, 1, 1))
        return HalvingClass(target, dict(a.terms))
    fp = space.fixed_point
    acc = {}
    for index, c in a.terms.items():
        half = _halve_index(space, index)
        weight = 2 ** _complex_degree(space, half)
        key = half if space.grassmannian_fixed_point else perm_from_osp(half)
        acc[key] = acc.get(key, Fraction(0)) + c * weight
    if space.grassmannian_fixed_point:
        return _to_integer_class(acc, lambda t: GrassmannClass(fp, t))
    return _to_integer_class(acc, lambda t: FlagClass(fp, t))


def kappa_char_class(space, j, bundle=1):
    """Image of the j-th Pontryagin class of a tautological real bundle.

    On a real even Grassmannian the cohomology is generated by Pontryagin
    classes of the tautological subbundle, and the halving map sends p_j of
    the real bundle to 2^j times c_j of the complex counterpart on the fixed
    point space. Bundle 1 is the subspace bundle, bundle 2 the quotient.
    """
    if space.kind != REAL_EVEN or not space.grassmannian_fixed_point:
        raise ValueError(
            "Pontryagin-class transport needs a real even Grassmannian"
        )
    if bundle not in (1, 2):
        raise ValueError("bundle index must be 1 (sub) or 2 (quot)")
    name = "sub" if bundle == 1 else "quot"
    return (2 ** j) * chern_class(name, j, space.fixed_point)


def real_double_multiply(a, b):
    """Product of real classes with doubled indices.

    Halve both indices, multiply in the complex fixed-point ring, and double
    the labels of the result. The structure constants are exactly the
    complex ones: the 2-power weights of the halving map cancel because the
    complex degree is additive across every surviving term.
    """
    a._check_space(b)
    space = a.space
    if space.kind != REAL_EVEN:
        raise ValueError(f"doubled-index product needs a real even space, not {space}")
    from .indexing import osp_double, partition_double

    acc = {}
    for di, ca in a.terms.items():
        i_half = _halve_index(space, di)
        left = _complex_basis(space, i_half)
        for dj, cb in b.terms.items():
            j_half = _halve_index(space, dj)
            prod = left * _complex_basis(space, j_half)
            items = (
                prod.terms.items()
                if space.grassmannian_fixed_point
                else prod.osp_terms().items()
            )
            for k_half, m in items:
                dk = (
                    partition_double(k_half)
                    if space.grassmannian_fixed_point
                    else osp_double(k_half)
                )
                acc[dk] = acc.get(dk, Fraction(0)) + ca * cb * m
    return HalvingClass(space, acc)


@dataclass(frozen=True)
class SchubertProblem:
    """A list of Schubert conditions with multiplicities on a halving space."""

    space: HalvingSpaceDescriptor
    conditions: tuple

    def __post_init__(self):
        fixed = []
        for index, count in self.conditions:
            count = int(count)
            if count < 1:
                raise ValueError(f"condition count must be positive, got {count}")
            fixed.append((_normalize_index(self.space, index), count))
        object.__setattr__(self, "conditions", tuple(fixed))


@dataclass(frozen=True)
class DegeneracyProblem:
    """Rank-drop conditions from generic bundle maps on a real even Grassmannian."""

    space: HalvingSpaceDescriptor
    corank: int
    maps: int

    def __post_init__(self):
        if self.corank < 1:
            raise ValueError("corank must be positive")
        if self.maps < 0:
            raise ValueError("number of maps must be nonnegative")


def _integrate_product(space, halved_conditions):
    """Multiply complex basis classes with multiplicities and integrate."""
    fp = space.fixed_point
    if space.grassmannian_fixed_point:
        acc = GrassmannClass.unit(fp)
        integrate = gr_integrate
    else:
        acc = FlagClass.unit(fp)
        integrate = flag_integrate
    for half, count in halved_conditions:
        base = _complex_basis(space, half)
        for _ in range(count):
            acc = acc * base
    return integrate(acc)


def real_lower_bound(problem):
    """Certified lower bound for the number of real solutions.

    Every condition index must be doubled; the halved problem must fill the
    complex dimension of the fixed-point space. The returned value is the
    complex intersection number of the halved problem, which the module
    docstring identifies with the absolute signed count of real solutions.
    """
    space = problem.space
    if space.kind != REAL_EVEN:
        raise ValueError(f"real lower bounds need a real even space, not {space}")
    halved = []
    total = 0
    for pos, (index, count) in enumerate(problem.conditions, start=1):
        try:
            half = _halve_index(space, index)
        except NotADoubleIndex as exc:
            raise NotADoubleIndex(f"condition {pos}: {exc}") from None
        halved.append((half, count))
        total += count * _complex_degree(space, half)
    dim = space.fixed_point.complex_dimension
    if total != dim:
        raise DimensionMismatch(
            f"halved conditions fill degree {total}, but {space} "
            f"has fixed-point dimension {dim}"
        )
    return _integrate_product(space, halved)


def quaternionic_count(problem):
    """Exact generic solution count for a quaternionic Schubert problem.

    Equals the complex intersection number of the same conditions on the
    fixed-point space: the halving map matches the two zero-dimensional
    problems term by term, and quaternionic solutions have no sign.
    """
    space = problem.space
    if space.kind != QUATERNIONIC:
        raise ValueError(f"quaternionic counts need a quaternionic space, not {space}")
    total = 0
    for index, count in problem.conditions:
        total += count * _complex_degree(space, index)
    dim = space.fixed_point.complex_dimension
    if total != dim:
        raise DimensionMismatch(
            f"conditions fill degree {total}, but {space} "
            f"has fixed-point dimension {dim}"
        )
    return _integrate_product(space, problem.conditions)


def real_degeneracy_lower_bound(space, maps, corank=2):
    """Lower bound for real rank-drop loci of generic bundle maps.

    Each map contributes the locus where a generic endomorphism-style map
    drops rank by the given (even) corank; halving turns this into the
    complex locus of half the corank for the tautological map on the
    fixed-point Grassmannian, whose class is a determinant in the Chern
    series of the bundle difference.
    """
    if space.kind != REAL_EVEN or not space.grassmannian_fixed_point:
        raise ValueError("degeneracy bounds need a real even Grassmannian")
    if corank < 2 or corank % 2:
        raise ValueError(f"corank must be a positive even number, got {corank}")
    fp = space.fixed_point
    rho = fp.k - corank // 2
    if rho < 0:
        raise ValueError(f"corank {corank} exceeds the bundle rank of {space}")
    return degeneracy_count(fp, fp.k, fp.l, rho, maps)
