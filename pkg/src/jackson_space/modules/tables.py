"""Closed-form Ext predictions, independent of the linear-algebra engine.

``predict_fibre_ext`` is a hand-derived formula for the special fibre
e_1e_0 = l^-1 e_0e_1, e_2e_0 = l^{1-p} e_0e_2, e_2e_1 = l^{2-p} e_1e_2; it
decides the rank of the 3x3 extension system from its determinant and
minors.  The ``reference_*`` functions encode the reference case
tables as stated (row order matters) and return None where no row applies.
"""

from __future__ import annotations

from itertools import combinations


def _rank3(m) -> int:
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    if det:
        return 3
    if not any(x for row in m for x in row):
        return 0
    for r1, r2 in combinations(range(3), 2):
        for c1, c2 in combinations(range(3), 2):
            if m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]:
                return 2
    return 1


def predict_fibre_ext(lam, p: int, N1, N2) -> int:
    """dim Ext^1(N1, N2) on the special fibre, N_k = (Delta_k, z_k, theta_k)."""
    d1, z1, t1 = N1
    d2, z2, t2 = N2
    a, b, c = lam ** -1, lam ** (1 - p), lam ** (2 - p)
    zero = lam.field.zero
    # rows from the pairs (1,0), (2,0), (2,1); unknowns delta_0, delta_1, delta_2
    m = [
        [z2 - a * z1, d1 - a * d2, zero],
        [t2 - b * t1, zero, d1 - b * d2],
        [zero, t2 - c * t1, z1 - c * z2],
    ]
    cob = 1 if (d1 != d2 or z1 != z2 or t1 != t2) else 0
    return 3 - _rank3(m) - cob


def reference_fibre_ext(lam, p: int, N1, N2):
    """Reference three-case split for modules sharing Delta."""
    d1, z1, t1 = N1
    d2, z2, t2 = N2
    if d1 != d2:
        return None
    c = lam ** (2 - p)
    if not d1 and not z1 and not z2 and t2 == c * t1:
        return 1
    if not d1 and not t1 and not t2 and z1 == c * z2:
        return 1
    return 0


def reference_jackson_ext(s, x, a, b, u, v):
    """Reference Ext table on the plane e_0 = 0 for xi(a,b), xi(u,v); s = zeta^r.

    Returns (row label, dimension) or None when no row covers the input.
    """
    F = s.field
    char = F.characteristic
    s2 = s * s
    if s2 != F.one:
        if x:
            if a == s * u and v == s * b:
                return "i.1: a = z^r u, v = z^r b", 1
            if a == s2 * u and v == s2 * b:
                return "i.2: a = z^2r u, v = z^2r b", 1
            if a == u and b == v:
                return "i.3: a = u, b = v", 1
            return "i.0: otherwise", 0
        if not a and not b and not u and not v:
            return "ii.3: a = b = u = v = 0", 2
        if a == u and b == v:
            return "ii.1: a = u, b = v", 1
        if a == s2 * u and v == s2 * b:
            return "ii.2: a = z^2r u, v = z^2r b", 1
        return "ii.0: otherwise", 0
    if x:
        if a == u and b == v:
            return "iii.1: a = u, b = v", 1
        return "iii.0: otherwise", 0
    if char != 2:
        if (a == u and b == v) or (a == -u and b == -v):
            return "iv.1: a = +-u, b = +-v, char != 2", 1
        return None
    if a == u and b == v:
        return "iv.2: a = u, b = v, char 2", 3
    return None
