"""Pure-Python contraction kernels (fallback for the compiled ``_ckernel``).

A *term dict* maps a key tuple ``(tag, i_0, i_1, ...)`` to a nonzero
coefficient. ``pos`` arguments are absolute key positions (so ``1`` is the
first tensor factor; position 0 is the tag). ``mod`` is 0 over QQ and the
prime over GF(p).
"""


def _prune(out, mod):
    if mod:
        return {k: v % mod for k, v in out.items() if v % mod}
    return {k: v for k, v in out.items() if v}


def apply_linear(terms, pos, table, mod):
    out = {}
    get = out.get
    for key, c in terms.items():
        col = table[key[pos]]
        if not col:
            continue
        head = key[:pos]
        tail = key[pos + 1:]
        for i, a in col.items():
            k = head + (i,) + tail
            out[k] = get(k, 0) + c * a
    return _prune(out, mod)


def apply_bilinear(terms, pos, table, mod):
    out = {}
    get = out.get
    for key, c in terms.items():
        col = table[key[pos]][key[pos + 1]]
        if not col:
            continue
        head = key[:pos]
        tail = key[pos + 2:]
        for i, a in col.items():
            k = head + (i,) + tail
            out[k] = get(k, 0) + c * a
    return _prune(out, mod)


def apply_split(terms, pos, table, mod):
    out = {}
    get = out.get
    for key, c in terms.items():
        col = table[key[pos]]
        if not col:
            continue
        head = key[:pos]
        tail = key[pos + 1:]
        for pair, a in col.items():
            k = head + pair + tail
            out[k] = get(k, 0) + c * a
    return _prune(out, mod)


def apply_functional(terms, pos, vec, mod):
    out = {}
    get = out.get
    for key, c in terms.items():
        a = vec[key[pos]]
        if not a:
            continue
        k = key[:pos] + key[pos + 1:]
        out[k] = get(k, 0) + c * a
    return _prune(out, mod)


def insert_vector(terms, pos, vec, mod):
    out = {}
    for key, c in terms.items():
        head = key[:pos]
        tail = key[pos:]
        for i, a in vec.items():
            out[head + (i,) + tail] = c * a
    return _prune(out, mod)


def permute(terms, order):
    return {tuple(key[p] for p in order): c for key, c in terms.items()}


def combine(a, b, scale, mod):
    out = dict(a)
    get = out.get
    for k, v in b.items():
        out[k] = get(k, 0) + scale * v
    return _prune(out, mod)


def matmul(a_rows, b_rows, bcols, mod):
    out = []
    for row in a_rows:
        acc = [0] * bcols
        for k, a in enumerate(row):
            if not a:
                continue
            brow = b_rows[k]
            for j in range(bcols):
                b = brow[j]
                if b:
                    acc[j] += a * b
        if mod:
            acc = [x % mod for x in acc]
        out.append(acc)
    return out
