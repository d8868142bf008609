"""Naive reference implementations. Deliberately direct and slow; they share
no code with the package."""

from itertools import product
from math import gcd


def words(n):
    return ["".join(t) for t in product("ab", repeat=n)]


def words_up_to(n, start=1):
    for k in range(start, n + 1):
        yield from words(k)


def all_factors(w):
    out = set()
    for i in range(len(w) + 1):
        for j in range(i, len(w) + 1):
            out.add(w[i:j])
    return out


def factors_n(w, n):
    return {f for f in all_factors(w) if len(f) == n}


def complexity(w):
    return [len(factors_n(w, n)) for n in range(len(w) + 1)]


def positions(host, factor):
    return [i for i in range(len(host) - len(factor) + 1) if host[i : i + len(factor)] == factor]


def is_period(w, p):
    return all(w[i] == w[i + p] for i in range(len(w) - p))


def smallest_period(w):
    return min(p for p in range(1, len(w) + 1) if is_period(w, p))


def borders(w):
    return [w[:k] for k in range(len(w)) if w[:k] == w[len(w) - k :]]


def is_balanced(w):
    fs = all_factors(w)
    for s in fs:
        for t in fs:
            if len(s) == len(t) and abs(s.count("a") - t.count("a")) > 1:
                return False
    return True


def minimal_pathological_pairs(w):
    """All (heavy, light) pairs of minimal length violating balance."""
    for n in range(1, len(w) + 1):
        fs = factors_n(w, n)
        pairs = [(s, t) for s in fs for t in fs if s.count("a") - t.count("a") >= 2]
        if pairs:
            return pairs
    return []


def palindromes(w):
    return {f for f in all_factors(w) if f == f[::-1]}


def left_special(w):
    fs = all_factors(w)
    return {u for u in fs if "a" + u in fs and "b" + u in fs}


def right_special(w):
    fs = all_factors(w)
    return {u for u in fs if u + "a" in fs and u + "b" in fs}


def hklr(w):
    n = len(w)
    H = min(k for k in range(n + 1) if len(positions(w, w[:k])) == 1)
    K = min(k for k in range(n + 1) if len(positions(w, w[n - k :])) == 1)
    ls, rs = left_special(w), right_special(w)
    L = min(k for k in range(n + 2) if not any(len(u) == k for u in ls))
    R = min(k for k in range(n + 2) if not any(len(u) == k for u in rs))
    return H, K, L, R


def is_trapezoidal(w):
    return all(len(factors_n(w, n)) <= n + 1 for n in range(len(w) + 1))


def is_closed(w):
    """Definition: empty, or some proper factor occurs exactly twice, as
    prefix and as suffix."""
    if not w:
        return True
    for k in range(len(w)):
        u = w[:k]
        if w.endswith(u) and positions(w, u) == [0, len(w) - k]:
            return True
    return False


def is_central(w):
    n = len(w)
    for p in range(1, n + 2):
        q = n + 2 - p
        if q >= 1 and gcd(p, q) == 1 and is_period(w, p) and is_period(w, q):
            return True
    return False


def phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def fibonacci_word_golden(n):
    """Prefix of the Fibonacci word via the characteristic sequence of slope
    1/phi^2: letter i (1-based) is b iff floor((i+1)a) - floor(i a) = 1 with
    a = (3 - sqrt 5)/2.  Exact integer arithmetic through isqrt."""
    from math import isqrt

    # floor(k * (3 - sqrt5) / 2) = floor((3k - sqrt(5 k^2)) / 2) computed exactly
    def fl(k):
        s = isqrt(5 * k * k)  # floor(sqrt(5) k)
        # 3k - sqrt5 k lies in (3k - s - 1, 3k - s]; sqrt5 k is irrational for k > 0
        return (3 * k - s - 1) // 2 if k else 0

    return "".join("b" if fl(i + 1) - fl(i) == 1 else "a" for i in range(1, n + 1))
