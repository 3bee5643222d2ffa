"""Pure-Python versions of the hot loops.

Must return exactly what the compiled ``_kernels`` module returns; the test
suite runs both against each other.
"""

from itertools import combinations


def _ones(x):
    return bin(x).count("1")


def pair_round(values, masks):
    """Find every combinable pair in one tabulation round.

    ``values``/``masks`` describe the round's cubes ordered by nondecreasing
    ones-count of ``value``.  A pair ``(i, j)`` is reported when ``j`` sits
    in the next ones-group, both masks agree and the values differ in a
    single bit.  Pairs come out ordered by ``i`` then ``j``.
    """
    n = len(values)
    ones = [_ones(v) for v in values]
    pairs = []
    start = 0
    while start < n:
        g = ones[start]
        end = start
        while end < n and ones[end] == g:
            end += 1
        nxt_end = end
        while nxt_end < n and ones[nxt_end] == g + 1:
            nxt_end += 1
        for i in range(start, end):
            vi, mi = values[i], masks[i]
            for j in range(end, nxt_end):
                if masks[j] != mi:
                    continue
                d = vi ^ values[j]
                if d & (d - 1) == 0:
                    pairs.append((i, j))
        start = end
    return pairs


def cover_search(row_bits, ncols, max_rows=None):
    """Smallest-cardinality row subsets whose column bits cover ``ncols`` columns.

    Returns ``(k, combos)`` where ``combos`` lists every covering k-subset in
    lexicographic order.  ``(-1, [])`` when no subset up to ``max_rows``
    rows covers everything.
    """
    full = (1 << ncols) - 1
    nrows = len(row_bits)
    limit = nrows if max_rows is None else min(max_rows, nrows)
    for k in range(limit + 1):
        found = []
        for combo in combinations(range(nrows), k):
            acc = 0
            for r in combo:
                acc |= row_bits[r]
            if acc == full:
                found.append(combo)
        if found:
            return k, found
    return -1, []


def _has_subset_in(p, candidates, lookup):
    size = bin(p).count("1")
    if size <= 10 and (1 << size) < len(candidates):
        sub = p
        while True:
            if sub in lookup:
                return True
            if not sub:
                return False
            sub = (sub - 1) & p
    return any(q & p == q for q in candidates)


def petrick_multiply(product, rows, nrows=None):
    """Multiply an absorbed sum of row-selections by one column sum.

    Selections are ints (bit r = row r chosen).  Terms meeting the column are
    unchanged.  A new term ``p | r`` can only be absorbed by an unchanged term
    that contains ``r`` and is otherwise a subset of ``p``; new terms never
    absorb each other.  Returns the absorbed product as a sorted list.
    """
    rows_mask = 0
    for r in rows:
        rows_mask |= 1 << r
    kept = [p for p in product if p & rows_mask]
    rest = [p for p in product if not p & rows_mask]
    out = set(kept)
    for r in rows:
        bit = 1 << r
        witnesses = [q & ~bit for q in kept if q & bit]
        lookup = set(witnesses)
        for p in rest:
            if not witnesses or not _has_subset_in(p, witnesses, lookup):
                out.add(p | bit)
    return sorted(out)
