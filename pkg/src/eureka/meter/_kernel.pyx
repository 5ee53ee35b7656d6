# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled foot-assignment kernel.

Twin of ``eureka.meter._pure``: same search order, same return
convention, same failure indexes.  Scanning dominates bulk work such as
meter-checking every line of an enumerated verse space, which is why
this inner loop is compiled.
"""

cdef int LONG_CODE = 45    # '-'
cdef int SHORT_CODE = 117  # 'u'


cdef void _fail_at(Py_ssize_t p, Py_ssize_t n, Py_ssize_t* furthest) noexcept nogil:
    if p > n:
        p = n
    if p > furthest[0]:
        furthest[0] = p


cdef bint _place(const unsigned char* q, Py_ssize_t n, int foot, Py_ssize_t pos,
                 bint allow_spondaic_fifth, char* feet,
                 Py_ssize_t* furthest) noexcept nogil:
    if foot == 5:
        # closing foot: a long plus exactly one syllable of either length
        if pos >= n:
            _fail_at(n, n, furthest)
            return False
        if q[pos] != LONG_CODE:
            _fail_at(pos, n, furthest)
            return False
        if pos + 1 >= n:
            _fail_at(n, n, furthest)
            return False
        if pos + 2 < n:
            _fail_at(pos + 2, n, furthest)
            return False
        return True
    if pos >= n:
        _fail_at(n, n, furthest)
        return False
    if q[pos] != LONG_CODE:
        _fail_at(pos, n, furthest)
        return False
    # dactyl first
    if pos + 1 >= n:
        _fail_at(n, n, furthest)
    elif q[pos + 1] != SHORT_CODE:
        _fail_at(pos + 1, n, furthest)
    elif pos + 2 >= n:
        _fail_at(n, n, furthest)
    elif q[pos + 2] != SHORT_CODE:
        _fail_at(pos + 2, n, furthest)
    else:
        feet[foot] = b'D'
        if _place(q, n, foot + 1, pos + 3, allow_spondaic_fifth, feet, furthest):
            return True
    # then spondee (feet 1-4 always; foot 5 only when allowed)
    if foot < 4 or allow_spondaic_fifth:
        if pos + 1 >= n:
            _fail_at(n, n, furthest)
        elif q[pos + 1] != LONG_CODE:
            _fail_at(pos + 1, n, furthest)
        else:
            feet[foot] = b'S'
            if _place(q, n, foot + 1, pos + 2, allow_spondaic_fifth, feet, furthest):
                return True
    return False


def scan_codes(quantities, bint allow_spondaic_fifth=False):
    """Assign ``quantities`` (bytes over ``-``/``u``) to six feet.

    Returns a five-character string of ``D``/``S`` codes for feet 1-5,
    or the int index of the furthest syllable the search got stuck on.
    """
    cdef bytes qb = bytes(quantities)
    cdef const unsigned char* q = qb
    cdef Py_ssize_t n = len(qb)
    cdef Py_ssize_t furthest = 0
    cdef char feet[5]
    cdef int i
    for i in range(5):
        feet[i] = b'D'
    if _place(q, n, 0, 0, allow_spondaic_fifth, feet, &furthest):
        return feet[:5].decode("ascii")
    return furthest
