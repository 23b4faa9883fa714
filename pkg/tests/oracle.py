"""Brute-force geometric oracles over tiny prime fields.

Everything here works from first principles (full scans, line/curve
intersection divisors) and never touches the package under test, so the
expected values frozen into the test suite are independent of the code
they check.  Only usable for very small p.

Points are ints pairs (x, y); the zero element O is None.
"""

import itertools


def modinv(a, p):
    return pow(a % p, p - 2, p)


def curve_points(p, a, b):
    """All points of y^2 = x^3 + ax + b over F_p, O included."""
    pts = [None]
    for x in range(p):
        for y in range(p):
            if (y * y - (x * x * x + a * x + b)) % p == 0:
                pts.append((x, y))
    return pts


def cubic_roots_with_multiplicity(p, coeffs):
    """Roots of a monic cubic (coeffs low-first, length 4) by scan + division."""
    roots = []
    c = [x % p for x in coeffs]
    for _ in range(3):
        root = next((r for r in range(p) if sum(k * pow(r, i, p) for i, k in enumerate(c)) % p == 0), None)
        if root is None:
            break
        roots.append(root)
        # synthetic division by (x - root)
        out = []
        acc = 0
        for k in reversed(c):
            acc = (acc * root + k) % p
            out.append(acc)
        # out holds, high-first, the quotient digits then the remainder
        c = list(reversed(out[:-1]))
    return roots


def line_divisor(p, a, b, line, with_infinity=True):
    """Intersection divisor of a line with the cubic, as a point multiset.

    line is ("slope", s, t) for y = sx + t, or ("vertical", c) for x = c.
    Vertical lines meet the curve once at O.
    """
    if line[0] == "vertical":
        c = line[1] % p
        rhs = (c * c * c + a * c + b) % p
        ys = [y for y in range(p) if (y * y - rhs) % p == 0]
        pts = []
        if ys == [0]:
            pts = [(c, 0), (c, 0)]
        elif ys:
            pts = [(c, ys[0]), (c, ys[1])]
        if with_infinity:
            pts.append(None)
        return pts
    _, s, t = line
    # (sx+t)^2 = x^3 + ax + b  ->  x^3 - s^2 x^2 + (a - 2st) x + (b - t^2) = 0
    coeffs = [(b - t * t) % p, (a - 2 * s * t) % p, (-s * s) % p, 1]
    xs = cubic_roots_with_multiplicity(p, coeffs)
    return [(x, (s * x + t) % p) for x in xs]


def lines_through(p, pt):
    """Every line through an affine point, as divisor-ready descriptors."""
    x0, y0 = pt
    out = [("vertical", x0)]
    for s in range(p):
        out.append(("slope", s, (y0 - s * x0) % p))
    return out


def tangent_line_at(p, a, b, pt):
    """The unique line meeting the cubic doubly at pt (scan of all lines)."""
    for line in lines_through(p, pt):
        if line_divisor(p, a, b, line).count(pt) >= 2:
            return line
    raise AssertionError("smooth curve must have a tangent everywhere")


def neg(p, P):
    if P is None:
        return None
    return (P[0], (-P[1]) % p)


def add(p, a, b, P, Q):
    """Chord-tangent addition: collinear triples sum to O."""
    if P is None:
        return Q
    if Q is None:
        return P
    if P == Q:
        line = tangent_line_at(p, a, b, P)
    elif P[0] == Q[0]:
        line = ("vertical", P[0])
    else:
        s = (Q[1] - P[1]) * modinv(Q[0] - P[0], p) % p
        line = ("slope", s, (P[1] - s * P[0]) % p)
    div = line_divisor(p, a, b, line)
    div.remove(P)
    div.remove(Q)
    (R,) = div
    return neg(p, R)


def scalar(p, a, b, P, n):
    acc = None
    for _ in range(n):
        acc = add(p, a, b, acc, P)
    return acc


def addition_table(p, a, b):
    pts = curve_points(p, a, b)
    return {(P, Q): add(p, a, b, P, Q) for P, Q in itertools.product(pts, pts)}


def halve(p, a, b, R):
    """Preimages of R under doubling, by doubling every point."""
    return sorted(Q for Q in curve_points(p, a, b)
                  if Q is not None and scalar(p, a, b, Q, 2) == R)


def tangent_lines_elsewhere(p, a, b, P):
    """Lines through P tangent to the cubic at some point distinct from P.

    Returns (line, tangent_point) pairs; the divisor of each is 2Q + P.
    """
    hits = []
    for line in lines_through(p, P):
        div = line_divisor(p, a, b, line)
        if P not in div:
            continue
        rest = list(div)
        rest.remove(P)
        if len(rest) == 2 and rest[0] == rest[1] and rest[0] is not None and rest[0] != P:
            hits.append((line, rest[0]))
    return hits


def normalize_line(p, line):
    """(u, v, w) for ux + vy + w = 0, first nonzero coefficient scaled to 1."""
    if line[0] == "vertical":
        u, v, w = 1, 0, (-line[1]) % p
    else:
        _, s, t = line
        # y = sx + t  ->  sx - y + t = 0
        u, v, w = s % p, p - 1, (t % p)
    for lead in (u, v, w):
        if lead:
            inv = modinv(lead, p)
            return (u * inv % p, v * inv % p, w * inv % p)
    raise AssertionError("zero line")
