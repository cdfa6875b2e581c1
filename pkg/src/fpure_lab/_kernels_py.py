"""Pure-Python versions of the hot loops behind the graded Fedder test.

Same signatures and results as the compiled ``_kernels`` module; selected by
:mod:`fpure_lab.kernels` when the extension is unavailable.

Conventions shared by both implementations:

* exponent vectors are flat ``array('i')`` blocks of width ``N``;
* a binomial reducer is ``lead - c * tail`` with ``c`` in 1..p-1, or a
  monomial when ``c == 0``;
* sparse rows are pairs of parallel arrays ``(cols, vals)`` with compact
  non-negative column ids.
"""

from __future__ import annotations

import heapq
from array import array

BACKEND = "python"

STATUS_IN_SPAN = 0
STATUS_INDEPENDENT = 1
STATUS_BUDGET = 2

_MAX_STEPS = 1_000_000


class KernelError(RuntimeError):
    pass


def standard_monomials(n: int, p: int, leads: array, R: int) -> array:
    """x-parts of the monomials prod x_i^{a_i} y_i^{2p-2-a_i} with sum(a) = n(p-1)
    divisible by no lead, in lexicographic order of ``a``."""
    top = 2 * p - 2
    target = n * (p - 1)
    N = 2 * n
    lx = [tuple(leads[r * N:r * N + n]) for r in range(R)]
    ly = [tuple(top - e for e in leads[r * N + n:(r + 1) * N]) for r in range(R)]
    out = array("i")
    a = [0] * n

    def standard() -> bool:
        for r in range(R):
            x, y = lx[r], ly[r]
            for i in range(n):
                if x[i] > a[i] or y[i] < a[i]:
                    break
            else:
                return False
        return True

    def rec(i: int, left: int) -> None:
        if i == n - 1:
            if left <= top:
                a[i] = left
                if standard():
                    out.extend(a)
            return
        rest = (n - 1 - i) * top
        for v in range(max(0, left - rest), min(top, left) + 1):
            a[i] = v
            rec(i + 1, left - v)

    if n:
        rec(0, target)
    return out


def nf_batch(N: int, nx: int, monos: array, leads: array, tails: array, coefs: array,
             p: int, base: int) -> tuple[array, array]:
    """Normal forms of monomials modulo binomial reducers.

    Returns ``(keys, coefs)``: the key of each reduced monomial is
    ``sum(e_i * base**i for i < nx)`` and its coefficient is 0 when it
    reduced to zero.
    """
    R = len(coefs)
    K = len(monos) // N if N else 0
    keys = array("q", bytes(8 * K))
    cout = array("i", bytes(4 * K))
    lrows = [tuple(leads[r * N:(r + 1) * N]) for r in range(R)]
    trows = [tuple(tails[r * N:(r + 1) * N]) for r in range(R)]
    for k in range(K):
        m = list(monos[k * N:(k + 1) * N])
        c = 1
        steps = 0
        while True:
            for r in range(R):
                ld = lrows[r]
                if all(ld[i] <= m[i] for i in range(N)):
                    break
            else:
                break
            if coefs[r] == 0:
                c = 0
                break
            tl = trows[r]
            for i in range(N):
                m[i] += tl[i] - ld[i]
            c = c * coefs[r] % p
            steps += 1
            if steps > _MAX_STEPS:
                raise KernelError("normal form did not terminate")
        key = 0
        mult = 1
        for i in range(nx):
            key += m[i] * mult
            mult *= base
        keys[k] = key
        cout[k] = c
    return keys, cout


def eliminate(rows_cols: list, rows_vals: list, ncols: int, p: int, budget: int):
    """Decide whether the last row lies in the span of the others over GF(p).

    Rows are processed in order into a semi-echelon basis keyed by the largest
    column.  Returns ``(status, rows, coeffs, reductions)``; when the status
    is STATUS_IN_SPAN, ``last = sum(coeffs[t] * row[rows[t]])``.  A negative
    budget means unlimited.
    """
    nrows = len(rows_cols)
    if nrows == 0:
        raise KernelError("no rows")
    pivot_of: dict[int, int] = {}
    pcols: list[list[int]] = []
    pvals: list[list[int]] = []
    pinv: list[int] = []
    porig: list[int] = []
    plog: list[list[tuple[int, int]]] = []
    reductions = 0
    target_log: list[tuple[int, int]] = []
    for ri in range(nrows):
        acc = {}
        for c, v in zip(rows_cols[ri], rows_vals[ri]):
            v %= p
            if v:
                acc[c] = (acc.get(c, 0) + v) % p
        heap = [-c for c in acc]
        heapq.heapify(heap)
        queued = set(acc)
        log: list[tuple[int, int]] = []
        lead = -1
        while heap:
            c = -heapq.heappop(heap)
            queued.discard(c)
            f = acc.get(c, 0)
            if not f:
                continue
            k = pivot_of.get(c)
            if k is None:
                lead = c
                break
            if 0 <= budget < reductions + 1:
                return STATUS_BUDGET, array("i"), array("i"), reductions
            reductions += 1
            log.append((k, f))
            for cc, x in zip(pcols[k], pvals[k]):
                y = (acc.get(cc, 0) - f * x) % p
                if y:
                    acc[cc] = y
                    if cc not in queued:
                        queued.add(cc)
                        heapq.heappush(heap, -cc)
                else:
                    acc.pop(cc, None)
        if ri == nrows - 1:
            if lead >= 0:
                return STATUS_INDEPENDENT, array("i"), array("i"), reductions
            target_log = log
            break
        if lead < 0:
            continue
        inv = pow(acc[lead], p - 2, p)
        cols = sorted((c for c, v in acc.items() if v and c <= lead), reverse=True)
        pivot_of[lead] = len(pcols)
        pcols.append(cols)
        pvals.append([acc[c] * inv % p for c in cols])
        pinv.append(inv)
        porig.append(ri)
        plog.append(log)
    # unwind: pivot k = inv_k * (row_orig - sum f * pivot_j)
    w = [0] * len(pcols)
    for k, f in target_log:
        w[k] = (w[k] + f) % p
    coeff: dict[int, int] = {}
    for k in range(len(pcols) - 1, -1, -1):
        if not w[k]:
            continue
        s = w[k] * pinv[k] % p
        coeff[porig[k]] = (coeff.get(porig[k], 0) + s) % p
        for j, f in plog[k]:
            w[j] = (w[j] - s * f) % p
    rows = array("i", sorted(r for r, v in coeff.items() if v))
    vals = array("i", [coeff[r] for r in rows])
    return STATUS_IN_SPAN, rows, vals, reductions
