"""Closed forms exactly as published, typos included.

Nothing here feeds a prediction.  These functions exist so the generic
joined-union construction can be compared entry by entry against the stated
formulas and every disagreement reported.
"""

from __future__ import annotations

from math import cos, pi, sqrt

import numpy as np

from .numtheory import totient as phi


def _pm(center: float, disc: float, half: bool = True) -> tuple[float, float]:
    if disc < 0:
        return (float("nan"), float("nan"))
    r = sqrt(disc)
    if half:
        return ((center + r) / 2, (center - r) / 2)
    return (center + r, center - r)


# -- joins of two graphs ------------------------------------------------------

def bipartite_pm(a: int, b: int, alpha: float) -> tuple[float, float]:
    return _pm(alpha * (a + b), alpha**2 * (a + b) ** 2 + 4 * a * b * (1 - 2 * alpha))


def complete_split_pm(w: int, n: int) -> tuple[float, float]:
    # no alpha appears in the stated expression
    return _pm(5 * n - 2 * w - 6, (3 * (2 * w - n) - 2 * (w - 1)) ** 2 + 4 * w * (n - w))


def cone_pm(a: int, b: int, alpha: float) -> tuple[float, float]:
    return _pm(2 + alpha * (a + b),
               alpha**2 * (a + b) ** 2 + alpha * (4 * a - 4 * b - 8 * a * b) + 4 * a * b + 4)


def wheel_pm(n: int, alpha: float) -> tuple[float, float]:
    return _pm(2 + alpha * (n + 1), alpha**2 * (n + 1) ** 2 + alpha * (4 - 12 * n) + 4 * n + 4)


def cone_cosines(a: int, b: int, alpha: float) -> list[float]:
    return [alpha * (b + 2) + 2 * (1 - alpha) * cos(2 * pi * k / b) for k in range(2, b)]


def wheel_cosines(n: int, alpha: float) -> list[float]:
    return [3 * alpha + 2 * (1 - alpha) * cos(2 * pi * k / n) for k in range(2, n)]


def friendship_matrix(n: int, alpha: float) -> np.ndarray:
    """Stated quotient of F_n; leaves are shown coupled by 2(1 - alpha)."""
    m = np.full((n + 1, n + 1), 2 * (1 - alpha))
    m[1:, 0] = 1 - alpha
    m[0, 0] = 2 * alpha * n
    m[np.arange(1, n + 1), np.arange(1, n + 1)] = 1 + alpha
    return m


# -- cyclic groups --------------------------------------------------------------

def pq_matrix(p: int, q: int, alpha: float) -> np.ndarray:
    """Rows ordered (K_phi(p), K_phi(pq)+1, K_phi(q))."""
    a, n1 = alpha, phi(p * q) + 1
    return np.array([
        [phi(p) - 1 + a * n1, (1 - a) * n1, 0.0],
        [(1 - a) * phi(p), phi(p * q) + a * (phi(p) + phi(q)), (1 - a) * phi(q)],
        [0.0, (1 - a) * n1, phi(q) - 1 + a * n1],
    ])


def pqr_matrix(p: int, q: int, r: int, alpha: float) -> np.ndarray:
    """Rows ordered (hub, p, q, r, pq, pr, qr)."""
    a = alpha
    n = p * q * r
    f = {d: (1 - a) * phi(d) for d in (p, q, r, p * q, p * r, q * r)}
    c1 = (1 - a) * (phi(n) + 1)
    z = [
        phi(n) + a * (n - phi(n) - 1),
        phi(p) - 1 + a * (phi(n) + 1 + phi(p * r) + phi(p * q)),
        phi(q) - 1 + a * (phi(n) + 1 + phi(p * q) + phi(p * r)),
        phi(r) - 1 + a * (phi(n) + 1 + phi(p * r) + phi(q * r)),
        phi(p * q) - 1 + a * (phi(n) + 1 + phi(p) + phi(q)),
        phi(p * r) - 1 + a * (phi(n) + 1 + phi(p) + phi(r)),
        phi(q * r) - 1 + a * (phi(n) + 1 + phi(q) + phi(r)),
    ]
    pq, pr, qr = p * q, p * r, q * r
    return np.array([
        [z[0], f[p], f[q], f[r], f[pq], f[pr], f[qr]],
        [c1, z[1], 0, 0, f[pq], f[pr], 0],
        [c1, 0, z[2], 0, f[pq], 0, f[qr]],
        [c1, 0, 0, z[3], 0, f[pr], f[qr]],
        [c1, f[p], f[q], 0, z[4], 0, 0],
        [c1, f[p], 0, f[r], 0, z[5], 0],
        [c1, 0, f[q], f[r], 0, 0, z[6]],
    ], dtype=float)


def pq_power_fixed(p: int, q: int, N: int, alpha: float) -> list[tuple[str, float, int]]:
    """General terms of the fixed list for Z_{p q^N}: (divisor label, value, multiplicity)."""
    a, n = alpha, p * q**N
    out = [("1|n", a * n - 1, phi(n)),
           (str(p), a * (phi(n) + phi(p) * q ** (N - 1) + 1) - 1, phi(p) - 1)]
    for j in range(1, N + 1):
        out.append((f"{q}^{j}", a * (phi(n) + q**N + phi(p) * (q ** (N - 1) - q ** (j - 1))) - 1,
                    phi(q**j) - 1))
    for j in range(1, N):
        out.append((f"{p}*{q}^{j}", a * (phi(n) + q**j + phi(p) * q ** (N - 1)) - 1,
                    phi(p * q**j) - 1))
    return out


def pq_power_odd_last_value(p: int, q: int, m: int, alpha: float) -> float:
    """Last listed term for odd N = 2m + 1, as stated."""
    n = p * q ** (2 * m + 1)
    return alpha * (phi(n) + q ** (2 * m) + phi(p) * q ** (2 * m - 1)) - 1


def pq_power_even_diagonal_m1(p: int, q: int, alpha: float) -> dict[str, float]:
    """Stated diagonal entries of the N = 2 quotient, keyed by divisor; rows
    (hub, p, q, q^2, pq)."""
    a, m = alpha, 1
    n = p * q ** (2 * m)
    return {
        "hub": phi(n) + a * (n - phi(n) - 1),
        str(p): phi(p) - 1 + a * (phi(n) + 1 + phi(p) * (q ** (2 * m - 1) - q)),
        str(q): phi(q) - 1 + a * (phi(n) + 1 + q ** (2 * m) - q + phi(p) * (q ** (2 * m - 1) - 1)),
        f"{q}^2": phi(q ** (2 * m)) - 1 + a * (phi(n) + q ** (2 * m) - phi(q ** (2 * m))),
        f"{p}*{q}": phi(p * q) - 1 + a * (phi(n) + phi(p) + phi(q) + phi(p) * (q ** (2 * m - 1) - q)),
    }


# -- other groups -----------------------------------------------------------------

def elementary_abelian_matrix(p: int, k: int, alpha: float) -> np.ndarray:
    l = (p**k - 1) // (p - 1)
    m = np.zeros((l + 1, l + 1))
    m[0, 0] = alpha * l * (p - 1)
    m[0, 1:] = (1 - alpha) * (p - 1)
    m[1:, 0] = 1 - alpha
    m[np.arange(1, l + 1), np.arange(1, l + 1)] = alpha + p - 2
    return m


def elementary_abelian_reduced(p: int, k: int, alpha: float) -> np.ndarray:
    l = (p**k - 1) // (p - 1)
    return np.array([[alpha * l * (p - 1), l * (1 - alpha) * (p - 1)],
                     [1 - alpha, alpha + p - 2]])


def elementary_abelian_pm(p: int, k: int, alpha: float) -> tuple[float, float]:
    """Stated closed form; note there is no leading 1/2."""
    a, l = alpha, (p**k - 1) // (p - 1)
    disc = (a * l * p + p + a - a * l - 2) ** 2 - 4 * l * (a * p * p - a * p - p + 1)
    return _pm(a * (l * p + 1 - l) + p - 2, disc, half=False)


def nonabelian_pq_matrix(p: int, q: int, alpha: float) -> np.ndarray:
    """Rows ordered (identity, q Sylow-p blocks, Sylow-q block)."""
    a = alpha
    m = np.zeros((q + 2, q + 2))
    m[0, 0] = a * (p * q - 1)
    m[0, 1:q + 1] = (1 - a) * (p - 1)
    m[0, q + 1] = (1 - a) * (q - 1)
    m[1:, 0] = 1 - a
    m[np.arange(1, q + 1), np.arange(1, q + 1)] = a + p - 2
    m[q + 1, q + 1] = a + q - 2
    return m


def nonabelian_pq_reduced(p: int, q: int, alpha: float) -> np.ndarray:
    # top-left is stated with an undefined factor l; alpha*(pq - 1) substituted
    a = alpha
    return np.array([[a * (p * q - 1), q * (1 - a) * (p - 1), (1 - a) * (q - 1)],
                     [1 - a, a + p - 2, 0.0],
                     [1 - a, 0.0, a + q - 2]])


NONABELIAN_PQ_STATED_MULT = "q(p-2)"
NONABELIAN_PQ_PROOF_MULT = "q(p-1)"


def dihedral_matrix(n: int, alpha: float) -> np.ndarray:
    """Rows ordered (K_{n-1}, identity, reflections)."""
    a = alpha
    return np.array([[n - 2 + a, 1 - a, 0.0],
                     [(1 - a) * (n - 2), a * (2 * n - 1), (1 - a) * n],
                     [0.0, 1 - a, a]])


def dihedral_cubic(n: int, alpha: float) -> np.ndarray:
    """Monic coefficients (highest degree first) of the stated cubic in x."""
    a = alpha
    quad = np.array([1.0, 2 - 2 * a * n - n,
                     a * a - 2 * a + 2 * a * n * n + a * a * n - 3 * a * n - n + 2])
    poly = np.polysub(np.polymul([-1.0, a], quad),
                      (1 - a) ** 2 * n * np.array([-1.0, a + n - 2]))
    return poly / poly[0]


def dicyclic_fixed(n: int, alpha: float) -> list[tuple[float, int]]:
    a = alpha
    return [(4 * a * n - 1, 1), (2 * a * n - 1, 2 * n - 3), (4 * a - 1, n), (1 + 2 * a, n - 2)]


def dicyclic_reduced_matrix(n: int, alpha: float) -> np.ndarray:
    a = alpha
    return np.array([[1 + a * (4 * n - 2), (1 - a) * (2 * n - 2), 2 * n * (1 - a)],
                     [2 * (1 - a), 2 * n - 3 + a, 0.0],
                     [2 * (1 - a), 0.0, 1 + 2 * a]])
