"""Small exact linear-algebra helpers for 3-vectors and 3x3 matrices.

Vectors are plain tuples.  In exact mode every component is a
fractions.Fraction (ints are accepted and coerced by vec3); in float mode
plain floats flow through the same arithmetic helpers.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction


def vec3(x, y, z):
    return (Fraction(x), Fraction(y), Fraction(z))


def add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def neg(a):
    return (-a[0], -a[1], -a[2])


def scale(a, k):
    return (a[0] * k, a[1] * k, a[2] * k)


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def is_zero(a):
    return a[0] == 0 and a[1] == 0 and a[2] == 0


def norm2(a):
    return dot(a, a)


def fnorm(a):
    return math.sqrt(float(a[0]) ** 2 + float(a[1]) ** 2 + float(a[2]) ** 2)


def funit(a):
    n = fnorm(a)
    if n == 0.0:
        raise ZeroDivisionError("cannot normalize zero vector")
    return (float(a[0]) / n, float(a[1]) / n, float(a[2]) / n)


def exact_sqrt(x: Fraction):
    """Square root of a nonnegative rational, or None when irrational."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def primitive(a):
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = math.gcd(math.gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(c // g for c in ints)


def canonical_line(a):
    """Primitive representative of the line spanned by a, unique up to sign."""
    p = primitive(a)
    for c in p:
        if c != 0:
            return p if c > 0 else tuple(-x for x in p)
    raise ValueError("zero vector has no direction")


# 3x3 matrices as row tuples.

def identity3():
    one, zero = Fraction(1), Fraction(0)
    return ((one, zero, zero), (zero, one, zero), (zero, zero, one))


def mat_vec(m, v):
    return (dot(m[0], v), dot(m[1], v), dot(m[2], v))


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(tuple(m[r][c] for r in range(3)) for c in range(3))


def det3(m):
    return dot(m[0], cross(m[1], m[2]))


def rotations24():
    """All 24 orientation-preserving signed-permutation matrices."""
    axes = []
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        for sx in (1, -1):
            for sy in (1, -1):
                for sz in (1, -1):
                    rows = []
                    for i, s in zip(perm, (sx, sy, sz)):
                        row = [Fraction(0)] * 3
                        row[i] = Fraction(s)
                        rows.append(tuple(row))
                    m = tuple(rows)
                    if det3(m) == 1:
                        axes.append(m)
    assert len(axes) == 24
    return axes


def rotation_from_quaternion(a, b, c, d):
    """Exact rational rotation matrix from an integer quaternion."""
    n2 = Fraction(a * a + b * b + c * c + d * d)
    if n2 == 0:
        raise ValueError("zero quaternion")
    return (
        (Fraction(a * a + b * b - c * c - d * d) / n2, Fraction(2 * (b * c - a * d)) / n2, Fraction(2 * (b * d + a * c)) / n2),
        (Fraction(2 * (b * c + a * d)) / n2, Fraction(a * a - b * b + c * c - d * d) / n2, Fraction(2 * (c * d - a * b)) / n2),
        (Fraction(2 * (b * d - a * c)) / n2, Fraction(2 * (c * d + a * b)) / n2, Fraction(a * a - b * b - c * c + d * d) / n2),
    )


def sample_rational_rotations(count=10, seed=20231115):
    """Deterministic list of exact rotation matrices from random quaternions."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = tuple(rng.randint(-4, 4) for _ in range(4))
        if q == (0, 0, 0, 0):
            continue
        out.append(rotation_from_quaternion(*q))
    return out
