# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops for the graded Fedder test.

Mirrors :mod:`fpure_lab._kernels_py` exactly; see that module for the data
conventions.
"""

from array import array
from cpython.array cimport array as carray
from libc.stdlib cimport calloc, free, malloc

BACKEND = "cython"

STATUS_IN_SPAN = 0
STATUS_INDEPENDENT = 1
STATUS_BUDGET = 2

cdef long _MAX_STEPS = 1000000


class KernelError(RuntimeError):
    pass


cdef bint _is_standard(int[:] lx, int[:] ly, int R, int n, int* a) noexcept nogil:
    cdef int r, i
    cdef bint div
    for r in range(R):
        div = True
        for i in range(n):
            if lx[r * n + i] > a[i] or ly[r * n + i] < a[i]:
                div = False
                break
        if div:
            return False
    return True


def standard_monomials(int n, int p, leads, int R):
    cdef int top = 2 * p - 2
    cdef int N = 2 * n
    cdef int r, i, lo, hi
    cdef carray lxa = array("i", [0] * (R * n if R * n else 1))
    cdef carray lya = array("i", [0] * (R * n if R * n else 1))
    cdef int[:] lv = leads if R else array("i", [0])
    cdef int[:] lx = lxa
    cdef int[:] ly = lya
    for r in range(R):
        for i in range(n):
            lx[r * n + i] = lv[r * N + i]
            ly[r * n + i] = top - lv[r * N + n + i]
    out = array("i")
    if n == 0:
        return out
    cdef int* a = <int*> calloc(n, sizeof(int))
    cdef int* left = <int*> calloc(n + 1, sizeof(int))
    cdef int* stop = <int*> calloc(n, sizeof(int))
    cdef int depth = 0
    try:
        # iterative odometer over a[0..n-1] with running remainder
        left[0] = n * (p - 1)
        lo = left[0] - (n - 1) * top
        a[0] = lo if lo > 0 else 0
        stop[0] = top if top < left[0] else left[0]
        depth = 0
        while depth >= 0:
            if a[depth] > stop[depth]:
                depth -= 1
                if depth >= 0:
                    a[depth] += 1
                continue
            left[depth + 1] = left[depth] - a[depth]
            if depth == n - 2 or n == 1:
                if n == 1:
                    if left[0] <= top:
                        a[0] = left[0]
                        if _is_standard(lx, ly, R, n, a):
                            out.append(a[0])
                    break
                a[n - 1] = left[depth + 1]
                if a[n - 1] <= top and _is_standard(lx, ly, R, n, a):
                    for i in range(n):
                        out.append(a[i])
                a[depth] += 1
                continue
            depth += 1
            lo = left[depth] - (n - 1 - depth) * top
            a[depth] = lo if lo > 0 else 0
            hi = top if top < left[depth] else left[depth]
            stop[depth] = hi
    finally:
        free(a)
        free(left)
        free(stop)
    return out


def nf_batch(int N, int nx, monos, leads, tails, coefs, int p, long long base):
    cdef int[:] mv = monos
    cdef int[:] lv = leads
    cdef int[:] tv = tails
    cdef int[:] cv = coefs
    cdef int R = len(coefs)
    cdef long K = len(monos) // N if N else 0
    cdef carray keys = array("q", bytes(8 * K))
    cdef carray cout = array("i", bytes(4 * K))
    cdef long long[:] kv = keys
    cdef int[:] ov = cout
    cdef int* m = <int*> malloc((N if N else 1) * sizeof(int))
    cdef long k, steps
    cdef int r, i, found
    cdef long long c, key, mult
    try:
        for k in range(K):
            for i in range(N):
                m[i] = mv[k * N + i]
            c = 1
            steps = 0
            while True:
                found = -1
                for r in range(R):
                    for i in range(N):
                        if lv[r * N + i] > m[i]:
                            break
                    else:
                        found = r
                        break
                if found < 0:
                    break
                if cv[found] == 0:
                    c = 0
                    break
                for i in range(N):
                    m[i] += tv[found * N + i] - lv[found * N + i]
                c = c * cv[found] % p
                steps += 1
                if steps > _MAX_STEPS:
                    raise KernelError("normal form did not terminate")
            key = 0
            mult = 1
            for i in range(nx):
                key += m[i] * mult
                mult *= base
            kv[k] = key
            ov[k] = <int> c
    finally:
        free(m)
    return keys, cout


def eliminate(list rows_cols, list rows_vals, int ncols, int p, long long budget):
    cdef long nrows = len(rows_cols)
    if nrows == 0:
        raise KernelError("no rows")
    cdef int* pivot_of = <int*> malloc((ncols if ncols else 1) * sizeof(int))
    cdef long long* acc = <long long*> calloc(ncols if ncols else 1, sizeof(long long))
    cdef char* queued = <char*> calloc(ncols if ncols else 1, sizeof(char))
    cdef int* heap = <int*> malloc((ncols + 1) * sizeof(int))
    cdef long hsize, pos, child, parent
    cdef int c, cc, tmp, lead, k, j
    cdef long long f, x, y, inv, s, reductions = 0
    cdef int[:] rc
    cdef int[:] rv
    cdef int[:] pc
    cdef int[:] pv
    cdef long ri, t, L
    pcols = []
    pvals = []
    pinv = []
    porig = []
    plog = []
    target_log = []
    try:
        for c in range(ncols):
            pivot_of[c] = -1
        for ri in range(nrows):
            rc = rows_cols[ri]
            rv = rows_vals[ri]
            hsize = 0
            for t in range(rc.shape[0]):
                c = rc[t]
                acc[c] = (acc[c] + rv[t]) % p
                if acc[c] < 0:
                    acc[c] += p
                if not queued[c]:
                    queued[c] = 1
                    # sift up (max-heap)
                    pos = hsize
                    heap[hsize] = c
                    hsize += 1
                    while pos > 0:
                        parent = (pos - 1) >> 1
                        if heap[parent] >= heap[pos]:
                            break
                        tmp = heap[parent]; heap[parent] = heap[pos]; heap[pos] = tmp
                        pos = parent
            log = []
            lead = -1
            while hsize > 0:
                c = heap[0]
                hsize -= 1
                heap[0] = heap[hsize]
                pos = 0
                while True:
                    child = 2 * pos + 1
                    if child >= hsize:
                        break
                    if child + 1 < hsize and heap[child + 1] > heap[child]:
                        child += 1
                    if heap[pos] >= heap[child]:
                        break
                    tmp = heap[pos]; heap[pos] = heap[child]; heap[child] = tmp
                    pos = child
                queued[c] = 0
                f = acc[c]
                if f == 0:
                    continue
                k = pivot_of[c]
                if k < 0:
                    lead = c
                    break
                if budget >= 0 and reductions + 1 > budget:
                    return STATUS_BUDGET, array("i"), array("i"), reductions
                reductions += 1
                log.append((k, f))
                pc = pcols[k]
                pv = pvals[k]
                for t in range(pc.shape[0]):
                    cc = pc[t]
                    y = (acc[cc] - f * pv[t]) % p
                    if y < 0:
                        y += p
                    acc[cc] = y
                    if y and not queued[cc]:
                        queued[cc] = 1
                        pos = hsize
                        heap[hsize] = cc
                        hsize += 1
                        while pos > 0:
                            parent = (pos - 1) >> 1
                            if heap[parent] >= heap[pos]:
                                break
                            tmp = heap[parent]; heap[parent] = heap[pos]; heap[pos] = tmp
                            pos = parent
            if ri == nrows - 1:
                if lead >= 0:
                    return STATUS_INDEPENDENT, array("i"), array("i"), reductions
                target_log = log
                break
            if lead < 0:
                continue
            # collect the remaining row: the lead plus whatever is still queued
            cols = [lead]
            for t in range(hsize):
                if acc[heap[t]]:
                    cols.append(heap[t])
            cols.sort(reverse=True)
            inv = pow(int(acc[lead]), p - 2, p)
            vals = array("i", [int(acc[cc] * inv % p) for cc in cols])
            for cc in cols:
                acc[cc] = 0
            for t in range(hsize):
                queued[heap[t]] = 0
                acc[heap[t]] = 0
            pivot_of[lead] = len(pcols)
            pcols.append(array("i", cols))
            pvals.append(vals)
            pinv.append(inv)
            porig.append(ri)
            plog.append(log)
        L = len(pcols)
        w = [0] * L
        for k, f in target_log:
            w[k] = (w[k] + f) % p
        coeff = {}
        for k in range(L - 1, -1, -1):
            if not w[k]:
                continue
            s = w[k] * pinv[k] % p
            coeff[porig[k]] = (coeff.get(porig[k], 0) + s) % p
            for j, f in plog[k]:
                w[j] = (w[j] - s * f) % p
        rows = array("i", sorted(r for r, v in coeff.items() if v))
        vals = array("i", [coeff[r] for r in rows])
        return STATUS_IN_SPAN, rows, vals, reductions
    finally:
        # leave the scratch buffers clean for an early return
        free(pivot_of)
        free(acc)
        free(queued)
        free(heap)
