"""Index combinatorics: partitions, ordered set partitions, permutations.

Everything here is a plain immutable tuple.  Partitions are weakly
decreasing tuples of positive ints (no trailing zeros).  An ordered set
partition (OSP) of {1..N} is a tuple of blocks, each block a sorted
tuple of ints.  Permutations are one-line tuples (w(1), ..., w(n)).
"""

from .errors import BoxOverflow, NotADouble

# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def normalize_partition(parts):
    """Validate and canonicalize a partition given as any iterable."""
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam):
        raise ValueError("partition parts must be nonnegative: %r" % (lam,))
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must be weakly decreasing: %r" % (lam,))
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def partition_size(lam):
    return sum(lam)


def partition_conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partition_contains(outer, inner):
    """True when the diagram of inner sits inside the diagram of outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def fits_in_box(lam, rows, cols):
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def partitions_in_box(rows, cols):
    """Yield every partition inside a rows x cols box, by size then lex."""
    found = [[] for _ in range(rows * cols + 1)]

    def rec(prefix, row, cap):
        found[sum(prefix)].append(tuple(prefix))
        if row == rows:
            return
        for p in range(1, cap + 1):
            rec(prefix + [p], row + 1, p)

    rec([], 0, cols)
    for bucket in found:
        bucket.sort()
        for lam in bucket:
            yield lam


def partitions_of(n, max_part=None):
    """Yield partitions of n with parts bounded by max_part."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partition_double(lam):
    """Subdivide every box of the diagram into a 2x2 block.

    Each part is doubled and listed twice, so the size grows by a
    factor of four: (2, 1) -> (4, 4, 2, 2).
    """
    out = []
    for p in lam:
        out.append(2 * p)
        out.append(2 * p)
    return tuple(out)


def partition_halve(lam):
    """Inverse of partition_double.  Raises NotADouble if impossible."""
    if len(lam) % 2 != 0:
        raise NotADouble("odd number of parts: %r" % (lam,))
    out = []
    for i in range(0, len(lam), 2):
        a, b = lam[i], lam[i + 1]
        if a != b or a % 2 != 0:
            raise NotADouble("rows %d and %d do not form a doubled pair in %r" % (i + 1, i + 2, lam))
        out.append(a // 2)
    return tuple(out)


def is_doubled_partition(lam):
    try:
        partition_halve(lam)
    except NotADouble:
        return False
    return True


# ---------------------------------------------------------------------------
# ordered set partitions
# ---------------------------------------------------------------------------


def normalize_osp(blocks):
    """Validate blocks as an ordered set partition of {1..N}."""
    osp = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
    seen = set()
    for b in osp:
        if not b:
            raise ValueError("empty block in ordered set partition")
        for x in b:
            if x < 1 or x in seen:
                raise ValueError("blocks must partition {1..N}: %r" % (blocks,))
            seen.add(x)
    n = sum(len(b) for b in osp)
    if seen != set(range(1, n + 1)):
        raise ValueError("blocks must cover {1..N} exactly: %r" % (blocks,))
    return osp


def osp_ground_size(osp):
    return sum(len(b) for b in osp)


def osp_block_sizes(osp):
    return tuple(len(b) for b in osp)


def osp_length(osp):
    """Number of inter-block inversions.

    Pairs (a, b) with a in an earlier block, b in a later block and
    a > b.  This is the codimension of the associated Schubert cell and
    equals the Coxeter length of the minimal coset representative.
    """
    inv = 0
    for i in range(len(osp)):
        for j in range(i + 1, len(osp)):
            for a in osp[i]:
                for b in osp[j]:
                    if a > b:
                        inv += 1
    return inv


def osp_rank(osp, i, k):
    """Rank function r(i, k): how much of {1..k} the first i blocks cover."""
    if i < 0 or i > len(osp):
        raise ValueError("block prefix index out of range: %d" % i)
    count = 0
    for b in osp[:i]:
        for x in b:
            if x <= k:
                count += 1
    return count


def osp_double(osp):
    """Replace every letter i by the pair 2i-1, 2i, block by block."""
    return tuple(tuple(sorted(y for x in b for y in (2 * x - 1, 2 * x))) for b in osp)


def osp_halve(osp):
    """Inverse of osp_double.  Raises NotADouble if impossible."""
    out = []
    for b in osp:
        if len(b) % 2 != 0:
            raise NotADouble("odd block size in %r" % (osp,))
        bs = []
        seen = set(b)
        for x in b:
            if x % 2 == 1:
                if x + 1 not in seen:
                    raise NotADouble("letter %d is missing its partner %d" % (x, x + 1))
                bs.append((x + 1) // 2)
            elif x - 1 not in seen:
                raise NotADouble("letter %d is missing its partner %d" % (x, x - 1))
        out.append(tuple(sorted(bs)))
    return tuple(out)


def is_doubled_osp(osp):
    try:
        osp_halve(osp)
    except NotADouble:
        return False
    return True


def partition_to_osp(lam, k, l):
    """Partition in the k x l box -> two-block OSP of {1..k+l}.

    The first block collects the jump positions lam_k + 1,
    lam_{k-1} + 2, ..., lam_1 + k (the partition is padded with zeros
    to k parts); the second block is the complement.
    """
    lam = normalize_partition(lam)
    if not fits_in_box(lam, k, l):
        raise BoxOverflow("partition %r does not fit in a %d x %d box" % (lam, k, l))
    padded = lam + (0,) * (k - len(lam))
    first = tuple(padded[k - j] + j for j in range(1, k + 1))
    rest = tuple(x for x in range(1, k + l + 1) if x not in set(first))
    return (first, rest)


def osp_to_partition(osp):
    """Two-block OSP -> (partition, k, l), inverting partition_to_osp."""
    if len(osp) != 2:
        raise ValueError("partition dictionary needs exactly two blocks, got %d" % len(osp))
    k, l = len(osp[0]), len(osp[1])
    lam = tuple(osp[0][k - i] - (k + 1 - i) for i in range(1, k + 1))
    return normalize_partition(lam), k, l


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def normalize_perm(w):
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("not a permutation in one-line notation: %r" % (w,))
    return w


def identity_perm(n):
    return tuple(range(1, n + 1))


def longest_perm(n):
    return tuple(range(n, 0, -1))


def perm_strip(w):
    """Drop trailing fixed points: the stable form of w."""
    n = len(w)
    while n > 0 and w[n - 1] == n:
        n -= 1
    return w[:n]


def perm_pad(w, n):
    """Extend w with fixed points up to length n."""
    if len(w) > n:
        raise ValueError("cannot pad %r down to length %d" % (w, n))
    return w + tuple(range(len(w) + 1, n + 1))


def perm_inverse(w):
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def perm_compose(u, v):
    """Composite u after v: (u v)(i) = u(v(i)).  Lengths must agree."""
    if len(u) != len(v):
        raise ValueError("length mismatch composing %r and %r" % (u, v))
    return tuple(u[v[i] - 1] for i in range(len(v)))


def perm_length(w):
    """Coxeter length: number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_descents(w):
    """Positions i with w(i) > w(i+1)."""
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def perm_swap_positions(w, i, j):
    lst = list(w)
    lst[i - 1], lst[j - 1] = lst[j - 1], lst[i - 1]
    return tuple(lst)


def perm_code(w):
    """Lehmer code: c_i counts the j > i with w(j) < w(i)."""
    n = len(w)
    code = tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))
    return code


def perm_from_code(code):
    """Rebuild the permutation with the given code (trailing zeros allowed)."""
    code = tuple(int(c) for c in code)
    n = len(code)
    while n > 0 and code[n - 1] == 0:
        n -= 1
    code = code[:n]
    m = max((code[i] + i + 1 for i in range(n)), default=0)
    available = list(range(1, m + 1))
    out = []
    for i in range(n):
        out.append(available.pop(code[i]))
    out.extend(available)
    return tuple(out)


def reduced_word(w, strategy="leftmost"):
    """A reduced word (i_1, ..., i_t) with w = s_{i_1} ... s_{i_t}.

    Letters are found from the right: a descent i of w lets us peel off
    a final s_i.  The strategy picks which descent, so different
    strategies give genuinely different words.
    """
    w = tuple(w)
    word = []
    while True:
        desc = perm_descents(w)
        if not desc:
            break
        i = desc[0] if strategy == "leftmost" else desc[-1]
        word.append(i)
        w = perm_swap_positions(w, i, i + 1)
    word.reverse()
    return tuple(word)


# ---------------------------------------------------------------------------
# OSP <-> minimal coset representative
# ---------------------------------------------------------------------------


def perm_from_osp(osp):
    """Concatenate the sorted blocks: the minimal coset representative."""
    return tuple(x for b in osp for x in b)


def osp_from_perm(w, dims):
    """Cut the one-line notation of w into blocks of the given sizes."""
    if sum(dims) != len(w):
        raise ValueError("block sizes %r do not sum to %d" % (dims, len(w)))
    osp = []
    pos = 0
    for d in dims:
        osp.append(tuple(sorted(w[pos:pos + d])))
        pos += d
    return tuple(osp)


def is_minimal_rep(w, dims):
    """True when w is increasing inside every block of dims."""
    pos = 0
    for d in dims:
        for i in range(pos, pos + d - 1):
            if w[i] > w[i + 1]:
                return False
        pos += d
    return True
