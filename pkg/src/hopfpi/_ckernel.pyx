# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled contraction kernels; same contract as ``_pykernel``.

Over GF(p) coefficients are accumulated in C ``long long`` (p < 2**31, so
products fit); over QQ they stay Python objects.
"""


cdef dict _prune(dict out, long long mod):
    cdef dict res = {}
    if mod:
        for k, v in out.items():
            if v % mod:
                res[k] = v % mod
    else:
        for k, v in out.items():
            if v:
                res[k] = v
    return res


cdef inline object _acc(dict out, tuple k, object add, long long mod):
    cdef long long s
    old = out.get(k)
    if mod:
        if old is None:
            s = (<long long>add) % mod
        else:
            s = ((<long long>old) + (<long long>add)) % mod
        out[k] = s
    else:
        out[k] = add if old is None else old + add


def apply_linear(dict terms, Py_ssize_t pos, list table, long long mod):
    cdef dict out = {}
    cdef tuple key, head, tail
    cdef dict col
    cdef long long cc, aa
    for key, c in terms.items():
        col = <dict>table[<Py_ssize_t>key[pos]]
        if not col:
            continue
        head = key[:pos]
        tail = key[pos + 1:]
        if mod:
            cc = c
            for i, a in col.items():
                aa = a
                _acc(out, head + (i,) + tail, (cc * aa) % mod, mod)
        else:
            for i, a in col.items():
                _acc(out, head + (i,) + tail, c * a, 0)
    return _prune(out, mod)


def apply_bilinear(dict terms, Py_ssize_t pos, list table, long long mod):
    cdef dict out = {}
    cdef tuple key, head, tail
    cdef dict col
    cdef long long cc, aa
    for key, c in terms.items():
        col = <dict>(<list>table[<Py_ssize_t>key[pos]])[<Py_ssize_t>key[pos + 1]]
        if not col:
            continue
        head = key[:pos]
        tail = key[pos + 2:]
        if mod:
            cc = c
            for i, a in col.items():
                aa = a
                _acc(out, head + (i,) + tail, (cc * aa) % mod, mod)
        else:
            for i, a in col.items():
                _acc(out, head + (i,) + tail, c * a, 0)
    return _prune(out, mod)


def apply_split(dict terms, Py_ssize_t pos, list table, long long mod):
    cdef dict out = {}
    cdef tuple key, head, tail
    cdef dict col
    cdef long long cc, aa
    for key, c in terms.items():
        col = <dict>table[<Py_ssize_t>key[pos]]
        if not col:
            continue
        head = key[:pos]
        tail = key[pos + 1:]
        if mod:
            cc = c
            for pair, a in col.items():
                aa = a
                _acc(out, head + <tuple>pair + tail, (cc * aa) % mod, mod)
        else:
            for pair, a in col.items():
                _acc(out, head + <tuple>pair + tail, c * a, 0)
    return _prune(out, mod)


def apply_functional(dict terms, Py_ssize_t pos, vec, long long mod):
    cdef dict out = {}
    cdef tuple key
    for key, c in terms.items():
        a = vec[<Py_ssize_t>key[pos]]
        if not a:
            continue
        if mod:
            _acc(out, key[:pos] + key[pos + 1:], ((<long long>c) * (<long long>a)) % mod, mod)
        else:
            _acc(out, key[:pos] + key[pos + 1:], c * a, 0)
    return _prune(out, mod)


def insert_vector(dict terms, Py_ssize_t pos, dict vec, long long mod):
    cdef dict out = {}
    cdef tuple key, head, tail
    for key, c in terms.items():
        head = key[:pos]
        tail = key[pos:]
        for i, a in vec.items():
            if mod:
                out[head + (i,) + tail] = ((<long long>c) * (<long long>a)) % mod
            else:
                out[head + (i,) + tail] = c * a
    return _prune(out, mod)


def permute(dict terms, order):
    cdef dict out = {}
    cdef tuple key
    cdef tuple idx = tuple(order)
    cdef Py_ssize_t n = len(idx), t
    cdef list buf
    for key, c in terms.items():
        buf = [None] * n
        for t in range(n):
            buf[t] = key[<Py_ssize_t>idx[t]]
        out[tuple(buf)] = c
    return out


def combine(dict a, dict b, scale, long long mod):
    cdef dict out = dict(a)
    cdef tuple k
    for k, v in b.items():
        if mod:
            _acc(out, k, ((<long long>scale) * (<long long>v)) % mod, mod)
        else:
            _acc(out, k, scale * v, 0)
    return _prune(out, mod)


def matmul(list a_rows, list b_rows, Py_ssize_t bcols, long long mod):
    cdef list out = []
    cdef list row, brow, acc
    cdef Py_ssize_t k, j, n
    cdef long long s
    for row in a_rows:
        acc = [0] * bcols
        n = len(row)
        for k in range(n):
            a = row[k]
            if not a:
                continue
            brow = <list>b_rows[k]
            if mod:
                for j in range(bcols):
                    b = brow[j]
                    if b:
                        s = ((<long long>acc[j]) + (<long long>a) * (<long long>b)) % mod
                        acc[j] = s
            else:
                for j in range(bcols):
                    b = brow[j]
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out
