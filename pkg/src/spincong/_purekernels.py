"""Pure-Python versions of the hot loops in ``_kernels.pyx``.

Semantics match the compiled module exactly; see that file for details.
"""


def mul_trunc_i64(a, b, n_out):
    out = [0] * n_out
    lb = len(b)
    for i, x in enumerate(a):
        if i >= n_out:
            break
        if x:
            hi = min(lb, n_out - i)
            for j in range(hi):
                out[i + j] += x * b[j]
    return out


def strict_sign_counts(n_max):
    """Count strict partitions of each n <= n_max split by the parity of n - length.

    Parts are added in increasing order.  Each node counts the run of
    partitions obtained by adding one final part in a single range update and
    only descends into parts that leave room for another.
    """
    width = n_max + 2
    diff = [[0] * width, [0] * width]  # indexed by length parity

    def walk(last, total, length):
        lo = total + last + 1
        if lo > n_max:
            return
        row = diff[(length + 1) & 1]
        row[lo] += 1
        row[n_max + 1] -= 1
        for a in range(last + 1, (n_max - total - 1) // 2 + 1):
            walk(a, total + a, length + 1)

    walk(0, 0, 0)
    plus = [0] * (n_max + 1)
    minus = [0] * (n_max + 1)
    plus[0] = 1
    run = [0, 0]
    for s in range(1, n_max + 1):
        run[0] += diff[0][s]
        run[1] += diff[1][s]
        plus[s] += run[s & 1]
        minus[s] += run[1 - (s & 1)]
    return plus, minus


def core_sign_counts(n_max, p):
    """Count p-bar-cores of each n <= n_max split by sign.

    Parts are added in increasing order, so a new part is always the first
    row of the shifted diagram and the rows below it keep their bar lengths.
    The new row contributes bar length p exactly when p <= a and a - p is not
    already a part, or when p - a is a part; such branches are pruned, which
    is safe because a bar length of p never disappears as larger parts are
    added.
    """
    plus = [0] * (n_max + 1)
    minus = [0] * (n_max + 1)
    present = [False] * (n_max + p + 1)

    def walk(last, total, length):
        if (total - length) & 1:
            minus[total] += 1
        else:
            plus[total] += 1
        for a in range(last + 1, n_max - total + 1):
            if a >= p:
                if not present[a - p]:
                    continue
            elif present[p - a]:
                continue
            present[a] = True
            walk(a, total + a, length + 1)
            present[a] = False

    walk(0, 0, 0)
    return plus, minus
