"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive: plain BFS closures, iterative
powering, Sylvester determinants, and a textbook coset enumeration.  None of
it shares algorithmic machinery with the code under test beyond the exact
matrix arithmetic itself.
"""

from collections import deque
from fractions import Fraction

from finmat.matrices import Mat


# ---------------------------------------------------------------------------
# group closures


def closure(gens, cap=10_000):
    """BFS closure of the group generated by gens; (elements, complete)."""
    F, n = gens[0].field, gens[0].n
    ident = Mat.identity(F, n)
    dirs = list(gens) + [g.inverse() for g in gens]
    seen = {ident}
    out = [ident]
    qi = 0
    while qi < len(out):
        cur = out[qi]
        qi += 1
        for d in dirs:
            nxt = cur * d
            if nxt not in seen:
                seen.add(nxt)
                out.append(nxt)
                if len(out) > cap:
                    return out, False
    return out, True


def order_by_powering(M, cap):
    """Multiplicative order of M by iterative powering, None past cap."""
    ident = Mat.identity(M.field, M.n)
    P = M
    for d in range(1, cap + 1):
        if P == ident:
            return d
        P = P * M
    return None


def rational2_is_torsion(M):
    """Exact torsion test for M in GL(2, Q).

    A finite-order element has eigenvalues that are roots of unity of degree
    at most 2 over Q, so its order lies in {1,2,3,4,6} and divides 12.
    """
    return M**12 == Mat.identity(M.field, 2)


def rational2_group_verdict(gens, cap=10_000):
    """Finiteness of a 2x2 rational group: True/False, or None to skip.

    Probes short words for an infinite-order element first; when none shows
    up, falls back to full closure.  A capped closure without a witness is
    inconclusive and reported as None.
    """
    probes = list(gens)
    for a in gens:
        for b in gens:
            if a is not b:
                probes.append(a * b)
                probes.append(a * b.inverse())
                probes.append(a * b * a.inverse() * b.inverse())
    for a in gens:
        for b in gens:
            for c in gens:
                probes.append(a * b * c)
    for M in probes:
        if not rational2_is_torsion(M):
            return False
    elements, complete = closure(gens, cap)
    if complete:
        return True
    return None


def derived_subgroup_order(elements):
    """Order of the derived subgroup, from the full element list."""
    inv = {g: g.inverse() for g in elements}
    comms = {a * b * inv[a] * inv[b] for a in elements for b in elements}
    sub, complete = closure(sorted_mats(comms), cap=len(elements))
    assert complete
    return len(sub)


def center_order(elements):
    return sum(1 for g in elements if all(g * h == h * g for h in elements))


def member_brute(gens, x, cap=10_000):
    elements, complete = closure(gens, cap)
    if not complete:
        return None
    return x in set(elements)


def sorted_mats(mats):
    # deterministic generator order for closures over hash-ordered sets
    return sorted(mats, key=lambda m: str(m.rows))


# ---------------------------------------------------------------------------
# resultants


def sylvester_resultant(f, g):
    """Res(f, g) via the Sylvester matrix determinant.

    Coefficient lists are constant-first, integer or Fraction entries.
    """
    f = _strip(f)
    g = _strip(g)
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return Fraction(f[0]) ** n
    if n == 0:
        return Fraction(g[0]) ** m
    size = m + n
    frow = [Fraction(c) for c in reversed(f)]
    grow = [Fraction(c) for c in reversed(g)]
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + frow + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + grow + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        scale = 1 / rows[col][col]
        for r in range(col + 1, size):
            c = rows[r][col] * scale
            if c:
                for k in range(col, size):
                    rows[r][k] -= c * rows[col][k]
    return det


def discriminant_oracle(f):
    """disc(f) for an integer polynomial, from the Sylvester resultant."""
    f = _strip(f)
    k = len(f) - 1
    deriv = [i * f[i] for i in range(1, k + 1)]
    res = sylvester_resultant(f, deriv)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    val = Fraction(sign) * res / f[-1]
    assert val.denominator == 1
    return int(val)


def _strip(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# coset enumeration (regular action of a finitely presented group)


def regular_action_size(num_gens, relators, max_cosets=100_000):
    """Number of cosets of the trivial subgroup in <x_1..x_r | relators>.

    Relators are tuples of signed letters (k>0 the k-th generator, k<0 its
    inverse).  Textbook relator-scanning enumeration with coincidence
    handling; terminates with the group order when the presented group is
    finite and the coset budget suffices.
    """
    width = 2 * num_gens

    def lx(letter):
        return letter - 1 if letter > 0 else num_gens - 1 - letter

    def inv_ix(ix):
        return ix - num_gens if ix >= num_gens else ix + num_gens

    table = [[None] * width]
    parent = [0]

    def find(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    merged = deque()

    def join(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        merged.append(b)

    def set_entry(a, ix, b):
        a, b = find(a), find(b)
        cur = table[a][ix]
        if cur is not None:
            join(find(cur), b)
            return
        table[a][ix] = b
        back = table[b][inv_ix(ix)]
        if back is not None:
            join(find(back), a)
        else:
            table[b][inv_ix(ix)] = a

    def drain():
        while merged:
            dead = merged.popleft()
            row, table[dead] = table[dead], None
            for ix in range(width):
                t = row[ix]
                if t is not None:
                    set_entry(find(dead), ix, find(t))

    def new_coset():
        if len(table) >= max_cosets:
            raise RuntimeError("coset enumeration exceeded max_cosets")
        table.append([None] * width)
        parent.append(len(table) - 1)
        return len(table) - 1

    def scan_fill(start, w):
        if not w:
            return
        while True:
            a0 = find(start)
            f, i = a0, 0
            last = len(w)
            while i < last:
                t = table[f][lx(w[i])]
                if t is None:
                    break
                f = find(t)
                i += 1
            if i == last:
                if f != a0:
                    join(f, a0)
                    drain()
                    continue
                return
            b, j = a0, last - 1
            while j >= i:
                t = table[b][lx(-w[j])]
                if t is None:
                    break
                b = find(t)
                j -= 1
            if j < i:
                if f == b:
                    return
                join(f, b)
            elif j == i:
                set_entry(f, lx(w[i]), b)
            else:
                set_entry(f, lx(w[i]), new_coset())
            drain()

    alpha = 0
    while alpha < len(table):
        if find(alpha) != alpha:
            alpha += 1
            continue
        for w in relators:
            scan_fill(alpha, w)
            if find(alpha) != alpha:
                break
        if find(alpha) == alpha:
            for ix in range(width):
                if find(alpha) != alpha:
                    break
                if table[alpha][ix] is None:
                    set_entry(alpha, ix, new_coset())
                    drain()
        alpha += 1
    return sum(1 for c in range(len(parent)) if find(c) == c)
