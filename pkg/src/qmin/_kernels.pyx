# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``."""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport malloc, free, realloc


cdef inline int _ones(uint32_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def pair_round(values, masks):
    cdef Py_ssize_t n = len(values)
    cdef uint32_t *v = <uint32_t *>malloc(n * sizeof(uint32_t) + 1)
    cdef uint32_t *m = <uint32_t *>malloc(n * sizeof(uint32_t) + 1)
    cdef int *ones = <int *>malloc(n * sizeof(int) + 1)
    cdef Py_ssize_t i, j, start, end, nxt_end
    cdef int g
    cdef uint32_t d
    pairs = []
    if v == NULL or m == NULL or ones == NULL:
        free(v); free(m); free(ones)
        raise MemoryError()
    try:
        for i in range(n):
            v[i] = values[i]
            m[i] = masks[i]
            ones[i] = _ones(v[i])
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
                for j in range(end, nxt_end):
                    if m[j] != m[i]:
                        continue
                    d = v[i] ^ v[j]
                    if d & (d - 1) == 0:
                        pairs.append((i, j))
            start = end
    finally:
        free(v); free(m); free(ones)
    return pairs


def cover_search(row_bits, Py_ssize_t ncols, max_rows=None):
    cdef Py_ssize_t nrows = len(row_bits)
    cdef Py_ssize_t words = (ncols + 63) // 64
    cdef Py_ssize_t limit = nrows if max_rows is None else min(max_rows, nrows)
    cdef Py_ssize_t k, w, lvl, r
    cdef bint ok
    if words == 0:
        return 0, [()]
    cdef uint64_t *table = <uint64_t *>malloc(nrows * words * sizeof(uint64_t) + 8)
    cdef uint64_t *full = <uint64_t *>malloc(words * sizeof(uint64_t))
    cdef uint64_t *acc = <uint64_t *>malloc((limit + 1) * words * sizeof(uint64_t))
    cdef Py_ssize_t *idx = <Py_ssize_t *>malloc((limit + 1) * sizeof(Py_ssize_t))
    if table == NULL or full == NULL or acc == NULL or idx == NULL:
        free(table); free(full); free(acc); free(idx)
        raise MemoryError()
    try:
        word_mask = (1 << 64) - 1
        for r in range(nrows):
            bits = row_bits[r]
            for w in range(words):
                table[r * words + w] = (bits >> (64 * w)) & word_mask
        for w in range(words):
            full[w] = 0xFFFFFFFFFFFFFFFF
        if ncols % 64:
            full[words - 1] = (<uint64_t>1 << (ncols % 64)) - 1
        for w in range(words):
            acc[w] = 0
        for k in range(1, limit + 1):
            found = []
            # odometer over strictly increasing index tuples
            for lvl in range(k):
                idx[lvl] = lvl
            lvl = 0
            while True:
                # refresh partial ORs from lvl upward
                while lvl < k:
                    for w in range(words):
                        acc[(lvl + 1) * words + w] = acc[lvl * words + w] | table[idx[lvl] * words + w]
                    lvl += 1
                ok = True
                for w in range(words):
                    if acc[k * words + w] != full[w]:
                        ok = False
                        break
                if ok:
                    found.append(tuple([idx[r] for r in range(k)]))
                lvl = k - 1
                while lvl >= 0 and idx[lvl] == nrows - k + lvl:
                    lvl -= 1
                if lvl < 0:
                    break
                idx[lvl] += 1
                for r in range(lvl + 1, k):
                    idx[r] = idx[r - 1] + 1
            if found:
                return k, found
        return -1, []
    finally:
        free(table); free(full); free(acc); free(idx)


cdef struct Trie:
    int *child0
    int *child1
    char *terminal
    Py_ssize_t size
    Py_ssize_t cap


cdef int _trie_init(Trie *t, Py_ssize_t cap):
    t.cap = cap if cap > 16 else 16
    t.child0 = <int *>malloc(t.cap * sizeof(int))
    t.child1 = <int *>malloc(t.cap * sizeof(int))
    t.terminal = <char *>malloc(t.cap * sizeof(char))
    if t.child0 == NULL or t.child1 == NULL or t.terminal == NULL:
        return -1
    t.size = 1
    t.child0[0] = t.child1[0] = -1
    t.terminal[0] = 0
    return 0


cdef void _trie_free(Trie *t):
    free(t.child0); free(t.child1); free(t.terminal)


cdef int _trie_node(Trie *t):
    cdef Py_ssize_t cap
    if t.size == t.cap:
        cap = t.cap * 2
        t.child0 = <int *>realloc(t.child0, cap * sizeof(int))
        t.child1 = <int *>realloc(t.child1, cap * sizeof(int))
        t.terminal = <char *>realloc(t.terminal, cap * sizeof(char))
        if t.child0 == NULL or t.child1 == NULL or t.terminal == NULL:
            return -1
        t.cap = cap
    t.child0[t.size] = t.child1[t.size] = -1
    t.terminal[t.size] = 0
    t.size += 1
    return <int>(t.size - 1)


cdef inline bint _bit(uint64_t *q, Py_ssize_t b) nogil:
    return (q[b >> 6] >> (b & 63)) & 1


cdef int _trie_insert(Trie *t, uint64_t *q, Py_ssize_t nbits):
    """Store q keyed by its bits from bit 0 upward; stop after the top set bit."""
    cdef Py_ssize_t top = nbits - 1, b
    cdef int node = 0, nxt
    while top >= 0 and not _bit(q, top):
        top -= 1
    for b in range(top + 1):
        if t.terminal[node]:
            return 0  # a subset is already stored
        if _bit(q, b):
            nxt = t.child1[node]
            if nxt < 0:
                nxt = _trie_node(t)
                if nxt < 0:
                    return -1
                t.child1[node] = nxt
        else:
            nxt = t.child0[node]
            if nxt < 0:
                nxt = _trie_node(t)
                if nxt < 0:
                    return -1
                t.child0[node] = nxt
        node = nxt
    t.terminal[node] = 1
    return 0


cdef bint _trie_has_subset(Trie *t, uint64_t *p, Py_ssize_t nbits, int *stack_node, int *stack_bit):
    """Is some stored q a subset of p?  Iterative DFS over allowed branches."""
    cdef int sp, node, b
    stack_node[0] = 0
    stack_bit[0] = 0
    sp = 1
    while sp:
        sp -= 1
        node = stack_node[sp]
        b = stack_bit[sp]
        if t.terminal[node]:
            return True
        if b >= nbits:
            continue
        if t.child0[node] >= 0:
            stack_node[sp] = t.child0[node]
            stack_bit[sp] = b + 1
            sp += 1
        if _bit(p, b) and t.child1[node] >= 0:
            stack_node[sp] = t.child1[node]
            stack_bit[sp] = b + 1
            sp += 1
    return False


def petrick_multiply(product, rows, Py_ssize_t nrows):
    """Same contract as the pure-Python version; selections are packed into
    ``ceil(nrows / 64)`` machine words."""
    cdef Py_ssize_t np_ = len(product), nr = len(rows)
    cdef Py_ssize_t W = (nrows + 63) // 64 if nrows > 0 else 1
    cdef Py_ssize_t nbits = W * 64
    cdef Py_ssize_t i, j, w, nk = 0, nrest = 0, r
    cdef bint meets
    cdef Trie trie
    cdef uint64_t *terms = <uint64_t *>malloc((np_ + 1) * W * sizeof(uint64_t))
    cdef uint64_t *mask = <uint64_t *>malloc(W * sizeof(uint64_t))
    cdef uint64_t *tmp = <uint64_t *>malloc(W * sizeof(uint64_t))
    cdef Py_ssize_t *kept = <Py_ssize_t *>malloc((np_ + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *rest = <Py_ssize_t *>malloc((np_ + 1) * sizeof(Py_ssize_t))
    cdef int *stack_node = <int *>malloc((nbits + 2) * sizeof(int))
    cdef int *stack_bit = <int *>malloc((nbits + 2) * sizeof(int))
    if (terms == NULL or mask == NULL or tmp == NULL or kept == NULL or rest == NULL
            or stack_node == NULL or stack_bit == NULL):
        free(terms); free(mask); free(tmp); free(kept); free(rest); free(stack_node); free(stack_bit)
        raise MemoryError()
    word_mask = (1 << 64) - 1
    out = set()
    try:
        for w in range(W):
            mask[w] = 0
        for r in rows:
            mask[r >> 6] |= (<uint64_t>1) << (r & 63)
        for i in range(np_):
            p = product[i]
            meets = False
            for w in range(W):
                terms[i * W + w] = (p >> (64 * w)) & word_mask
                if terms[i * W + w] & mask[w]:
                    meets = True
            if meets:
                kept[nk] = i
                nk += 1
                out.add(p)
            else:
                rest[nrest] = i
                nrest += 1
        for j in range(nr):
            r = rows[j]
            bitval = (<object>1) << r
            if _trie_init(&trie, nk * 8) < 0:
                _trie_free(&trie)
                raise MemoryError()
            try:
                for i in range(nk):
                    if _bit(&terms[kept[i] * W], r):
                        for w in range(W):
                            tmp[w] = terms[kept[i] * W + w]
                        tmp[r >> 6] &= ~((<uint64_t>1) << (r & 63))
                        if _trie_insert(&trie, tmp, nbits) < 0:
                            raise MemoryError()
                for i in range(nrest):
                    if not _trie_has_subset(&trie, &terms[rest[i] * W], nbits, stack_node, stack_bit):
                        out.add(product[rest[i]] | bitval)
            finally:
                _trie_free(&trie)
    finally:
        free(terms); free(mask); free(tmp); free(kept); free(rest); free(stack_node); free(stack_bit)
    return sorted(out)
