"""Generators for the delta-correlated sequence families, plus a registry of
fixed reference sequences that have no generative formula here.

Family naming scheme (used by :func:`generate` and the CLI):

========  =====================================================  ==========
id        construction                                           length
========  =====================================================  ==========
fib       Fibonacci-polynomial canonical sequence                N = 4n+3
hplus     sign-flipped Fibonacci form, five-term autocorrelation N = 4n+1
h9a/h9b   direct-solved canonical sequences                      9
h13a/b    direct-solved canonical sequences                      13
h17       scalable canonical sequence (radical helper T)         17
h17l      fixed canonical sequence with matched 1...1 ends       17
h11       canonical twin of the Fibonacci length-11 sequence     11
he4/he6   even-length canonical sequences                        4 / 6
harb      arbitrary-length canonical family                      any N >= 3
htan      tangent-spectrum canonical family                      odd N >= 5
perfect_  zero periodic autocorrelation at all non-zero shifts   N-1
fib/arb
========  =====================================================  ==========

All generators return a :class:`~huffseq.core.Sequence`; scalar arithmetic is
done in Python numbers so integer scale parameters stay exact on the
Fibonacci-based paths.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import ArgumentError, DomainError, Sequence, fib_poly


def _sqrt(x):
    """Square root on the principal branch; stays real when it can."""
    if isinstance(x, complex):
        return cmath.sqrt(x)
    if x < 0:
        return cmath.sqrt(x)
    return math.sqrt(x)


def _check_scale(s, family: str):
    if s is None:
        raise ArgumentError(f"family {family!r} requires a scale parameter s")
    if isinstance(s, (bool, np.bool_)):
        raise ArgumentError("scale parameter must be a number")
    if isinstance(s, (np.integer,)):
        return int(s)
    if isinstance(s, (np.floating,)):
        return float(s)
    if isinstance(s, (np.complexfloating,)):
        return complex(s)
    if not isinstance(s, (int, float, complex)):
        raise ArgumentError(f"scale parameter must be a number, got {s!r}")
    return s


def _check_length(N, family: str, *, minimum: int, mod4=None, odd=False):
    if not isinstance(N, (int, np.integer)) or isinstance(N, bool):
        raise ArgumentError(f"length N must be an integer, got {N!r}")
    N = int(N)
    if N < minimum:
        raise ArgumentError(f"family {family!r} requires N >= {minimum}")
    if mod4 is not None and N % 4 != mod4:
        raise ArgumentError(
            f"family {family!r} requires N ≡ {mod4} (mod 4), got N={N}")
    if odd and N % 2 == 0:
        raise ArgumentError(f"family {family!r} requires odd N, got N={N}")
    return N


def gen_fibonacci(N: int, s) -> Sequence:
    """Canonical sequence of length N = 4n+3 built from Fibonacci polynomials.

    Layout: [1, 2sF_1 .. 2sF_M, sF_{M+1} - 2F_M, 2sF_{-M} .. 2sF_{-1}, -1]
    with M = (N-3)/2.  Integer s gives exactly integer elements.
    """
    N = _check_length(N, "fib", minimum=7, mod4=3)
    s = _check_scale(s, "fib")
    if s == 0:
        raise ArgumentError("fib requires s != 0")
    M = (N - 3) // 2
    el = [1]
    el += [2 * s * fib_poly(k, s) for k in range(1, M + 1)]
    el.append(s * fib_poly(M + 1, s) - 2 * fib_poly(M, s))
    el += [2 * s * fib_poly(-k, s) for k in range(M, 0, -1)]
    el.append(-1)
    return Sequence(el, family="fib", scale=s)


def gen_h_plus(N: int, s) -> Sequence:
    """Length N = 4n+1 sequence whose autocorrelation has exactly five
    non-zero entries {1, -2*sqrt(P-2), P, -2*sqrt(P-2), 1}, the side values
    sitting at lags +-(N-1)/2.
    """
    N = _check_length(N, "hplus", minimum=5, mod4=1)
    s = _check_scale(s, "hplus")
    if s == 0:
        raise ArgumentError("hplus requires s != 0")
    M = (N - 3) // 2
    el = [1]
    el += [2 * s * fib_poly(k, s) for k in range(1, M + 1)]
    el.append(s * fib_poly(M + 1, s) - 2 * fib_poly(M, s))
    el += [-2 * s * fib_poly(-k, s) for k in range(M, 0, -1)]
    el.append(1)
    return Sequence(el, family="hplus", scale=s)


def gen_perfect_fib(N: int, s) -> Sequence:
    """Perfect array of length N-1 derived from the Fibonacci canonical form:
    both unit ends are dropped and one new element closes the cycle, leaving
    zero periodic autocorrelation at every non-zero shift.

    Layout: [sF_{M+1} - 2F_M, 2sF_{-M}, ..., 2sF_{-1}, 0, 2sF_1, ..., 2sF_M].
    """
    N = _check_length(N, "perfect_fib", minimum=7, mod4=3)
    s = _check_scale(s, "perfect_fib")
    if s == 0:
        raise ArgumentError("perfect_fib requires s != 0")
    M = (N - 3) // 2
    el = [s * fib_poly(M + 1, s) - 2 * fib_poly(M, s)]
    el += [2 * s * fib_poly(k, s) for k in range(-M, M + 1)]
    return Sequence(el, family="perfect_fib", scale=s)


def gen_h9a(s) -> Sequence:
    """Length-9 canonical sequence with opposite-signed ends 1 ... -1."""
    s = _check_scale(s, "h9a")
    if s == 0:
        raise ArgumentError("h9a requires s != 0")
    r = _sqrt(8 + s * s)
    # The two interior elements beside the center carry -s -+ s^2*r/2: the
    # unique values that zero every interior autocorrelation lag (the oracle
    # in the test suite locks this parse in).
    el = [1, s,
          s * (s - r) / 2,
          -s - s * s * r / 2,
          -s ** 3 * r / 4,
          -s + s * s * r / 2,
          s * (-s - r) / 2,
          s, -1]
    return Sequence(el, family="h9a", scale=s)


def gen_h9b(s) -> Sequence:
    """Length-9 canonical sequence with matched ends 1 ... 1."""
    s = _check_scale(s, "h9b")
    if s == 0:
        raise ArgumentError("h9b requires s != 0")
    u = math.sqrt(2) * (4 + s * s)
    d = s * (4 + 2 * s * s - u) / 4
    e = s * s * (8 + 3 * s * s - 2 * u) / 8
    el = [1, s, s * s / 2, d, e, -d, s * s / 2, -s, 1]
    return Sequence(el, family="h9b", scale=s)


def gen_h13a(s) -> Sequence:
    """Length-13 canonical sequence with opposite-signed ends."""
    s = _check_scale(s, "h13a")
    if s == 0:
        raise ArgumentError("h13a requires s != 0")
    r = _sqrt(4 + s * s)
    # Ninth element is (3+s^2)(s-r)/2: the unique value zeroing the lag-8
    # autocorrelation together with its mirror partner (oracle-locked).
    el = [1, s,
          s * (s + r) / 2,
          s * (-4 - s * s + s * r) / 2,
          -s * (3 + s * s) * (s + r) / 2,
          s * (2 + s * s - s * r * (5 + 2 * s * s)) / 2,
          -s * r * (1 + 3 * s * s + s ** 4),
          s * (2 + s * s + s * r * (5 + 2 * s * s)) / 2,
          s * (3 + s * s) * (s - r) / 2,
          s * (-4 - s * s - s * r) / 2,
          s * (-s + r) / 2,
          s, -1]
    return Sequence(el, family="h13a", scale=s)


def gen_h13b(s) -> Sequence:
    """Length-13 canonical sequence, polynomial in s (no radicals)."""
    s = _check_scale(s, "h13b")
    s2 = s * s
    s4 = s2 * s2
    el = [1, s, s2 / 2,
          s * (8 + 3 * s2) / 16,
          s2 * (8 + s2) / 16,
          s * (-64 + 8 * s2 + s4) / 64,
          s2 * (-448 - 16 * s2 + s4) / 512,
          -s * (-64 + 8 * s2 + s4) / 64,
          s2 * (8 + s2) / 16,
          -s * (8 + 3 * s2) / 16,
          s2 / 2, -s, 1]
    return Sequence(el, family="h13b", scale=s)


def gen_h17(s) -> Sequence:
    """Length-17 canonical sequence, palindromic layout
    [a,b,c,d,e,f,g,h,i,j,k,l,m,d,-c,b,-a] with radical helper T(s).

    Real s only; the radicand of T is rejected when negative (it is in fact
    non-negative for every real s, since each sqrt(2)-reduced coefficient of
    the radicand polynomial is positive, but the guard stays).
    """
    s = _check_scale(s, "h17")
    if isinstance(s, complex):
        if s.imag != 0:
            raise ArgumentError("h17 requires a real scale parameter")
        s = s.real
    s = float(s)
    rt2 = math.sqrt(2)
    s2 = s * s
    s4 = s2 * s2
    s6 = s4 * s2
    s8 = s4 * s4
    radicand = (512 * s2 + 480 * s4 + 160 * s6 + 17 * s8
                - (256 * s2 + 320 * s4 + 112 * s6 + 12 * s8) * rt2)
    if radicand < 0:
        raise DomainError(f"h17 radical is negative at s={s}")
    T = math.sqrt(radicand) / 8
    A = s2 + 3 * s4 / 8 - (s2 + s4 / 4) * rt2
    B = -s - s ** 3 / 2 + (s + s ** 3 / 4) * rt2
    a = 1.0
    b = s
    c = s2 / 2
    d = s * (4 + 2 * s2 - rt2 * (4 + s2)) / 4
    el = [a, b, c, d,
          A - T,
          B - s * T,
          (s2 / 2) * (1 - T),
          -s + B * T,
          -A * T,
          -s - B * T,
          -(s2 / 2) * (1 + T),
          B + s * T,
          -A - T,
          d, -c, b, -a]
    return Sequence(el, family="h17", scale=s)


def gen_h17_matched() -> Sequence:
    """Fixed length-17 canonical sequence with matched ends 1 ... 1 and peak
    autocorrelation close to 22.3.  Takes no scale parameter."""
    rt2 = math.sqrt(2)
    q1 = math.sqrt(2 - rt2)
    q2 = math.sqrt(34 - 7 * rt2)
    q3 = math.sqrt(2 * (10 + rt2))
    q4 = math.sqrt(1460 + 782 * rt2)
    q5 = math.sqrt(394 + 223 * rt2)
    half = [0.5, 1, 1,
            -1 + 2 * rt2 - 2 * q1,
            -3 + 4 * rt2 - 4 * q1,
            1 + 6 * rt2 - 2 * q2,
            25 - 4 * rt2 - 4 * q3,
            79 + 16 * rt2 - 2 * q4,
            145 + 48 * rt2 - 8 * q5,
            -79 - 16 * rt2 + 2 * q4,
            25 - 4 * rt2 - 4 * q3,
            -1 - 6 * rt2 + 2 * q2,
            -3 + 4 * rt2 - 4 * q1,
            1 - 2 * rt2 + 2 * q1,
            1, -1, 0.5]
    return Sequence([2 * v for v in half], family="h17l", scale=1.0)


def gen_h11(s) -> Sequence:
    """Length-11 canonical sequence; shares its autocorrelation with the
    length-11 Fibonacci form while cross-correlating weakly with it.
    Integer-valued at s in {1, 4, 11}."""
    s = _check_scale(s, "h11")
    if s == 0:
        raise ArgumentError("h11 requires s != 0")
    q = _sqrt(5 * (4 + s * s))
    el = [1, s,
          s * (s + q) / 2,
          s * (2 + s * s + q * s) / 2,
          s * (7 * s + 2 * s ** 3 - q) / 2,
          s * (1 + 4 * s * s + s ** 4),
          s * (-7 * s - 2 * s ** 3 - q) / 2,
          s * (2 + s * s - q * s) / 2,
          s * (-s + q) / 2,
          s, -1]
    return Sequence(el, family="h11", scale=s)


def gen_he4(s) -> Sequence:
    """Even-length (4) canonical sequence; unit-modulus elements at s = i."""
    s = _check_scale(s, "he4")
    if s == 0:
        raise ArgumentError("he4 requires s != 0")
    r = _sqrt(4 + s * s)
    el = [1, s, s * (s + r) / 2, -(s + r) / 2]
    return Sequence(el, family="he4", scale=s)


def gen_he6(s) -> Sequence:
    """Even-length (6) canonical sequence with nested-radical helpers.

    Real s must keep the helper X(s) >= 0 and Z(s) != 0.  Analytically X
    stays positive for real s (it decays like 18/s^2 for large |s|), but the
    guard still fires where cancellation noise drives the evaluated X
    negative, so very large |s| can be rejected.
    """
    s = _check_scale(s, "he6")
    if s == 0:
        raise ArgumentError("he6 requires s != 0")
    r = _sqrt(4 + s * s)
    W = (1 + s * s) * r
    X = (4 + s * s) * (2 + s * (3 + s * s) * (r + s * (3 + s * (s + r))))
    if not isinstance(X, complex) and X < 0:
        raise DomainError(f"he6 helper X(s) is negative at s={s}")
    Y = (12 * s * s + 7 * s ** 4 + s ** 6
         + (4 * s + s ** 3) * (1 + s * s) * r)
    Z = -Y + math.sqrt(2) * (2 + s * s) * _sqrt(X)
    if Z == 0:
        raise DomainError(f"he6 helper Z(s) vanishes at s={s}")
    # For [1, s, c, d, e, f] with u = (3s + s^3 + W)/2, e = s*u and f = -u,
    # the lag-4 sum vanishes identically and the lag-3/lag-2 conditions have
    # the unique solution d = u*(c - s^2), c = s^2*u*(s-u)/(1 + 2su - u^2);
    # the lag-1 condition then holds automatically.  d equals s*(Z-4)/4, so
    # c is recovered from it without the rational form's removable pole.
    u = (3 * s + s ** 3 + W) / 2
    d = s * (Z - 4) / 4
    c = s * s + d / u
    e = s * u
    f = -u
    return Sequence([1, s, c, d, e, f], family="he6", scale=s)


def gen_h_arb(N: int, s) -> Sequence:
    """Canonical sequence of any length N >= 3.

    Interior elements are (-1)^k * sqrt(s)^(1-k); the ends 1/(s-1) and
    (-1)^N * sqrt(s)^(3-N)/(s-1) close the construction.  s must avoid
    {0, 1}; the square root takes the principal branch.
    """
    N = _check_length(N, "harb", minimum=3)
    s = _check_scale(s, "harb")
    if s == 0 or s == 1:
        raise ArgumentError("harb requires s outside {0, 1}")
    t = _sqrt(s)
    a = 1 / (s - 1)
    el = [a]
    el += [(-1) ** k * t ** (1 - k) for k in range(2, N)]
    el.append((-1) ** N * t ** (3 - N) * a)
    return Sequence(el, family="harb", scale=s)


def gen_h_tan(N: int, s) -> Sequence:
    """Odd-length canonical family with geometric interior runs.

    Layout: [s, (s^2-1)s^{k-1} for k=1..(N-3)/2, s^{-(N-3)/2} - s^{(N-3)/2},
    (s^2-1)s^{-m-1} for m=(N-3)/2..1, -1/s]; s outside {0, 1, -1}.
    """
    N = _check_length(N, "htan", minimum=5, odd=True)
    s = _check_scale(s, "htan")
    if s == 0 or s == 1 or s == -1:
        raise ArgumentError("htan requires s outside {0, 1, -1}")
    half = (N - 3) // 2
    el = [s]
    el += [(s * s - 1) * s ** (k - 1) for k in range(1, half + 1)]
    el.append(s ** (-half) - s ** half)
    el += [(s * s - 1) * s ** (-m - 1) for m in range(half, 0, -1)]
    el.append(-1 / s)
    return Sequence(el, family="htan", scale=s)


def gen_perfect_arb(N: int, s) -> Sequence:
    """Perfect array of length L = N-1 from the arbitrary-length canonical
    family: the parent's interior elements survive unchanged and a single new
    leading element w = (1 + (-1)^{1+L} sqrt(s)^{2-L})/(s-1) sets every
    non-zero cyclic correlation to zero.
    """
    N = _check_length(N, "perfect_arb", minimum=4)
    s = _check_scale(s, "perfect_arb")
    if s == 0 or s == 1:
        raise ArgumentError("perfect_arb requires s outside {0, 1}")
    L = N - 1
    t = _sqrt(s)
    w = (1 + (-1) ** (1 + L) * t ** (2 - L)) / (s - 1)
    el = [w]
    el += [(-1) ** k * t ** (1 - k) for k in range(2, N)]
    return Sequence(el, family="perfect_arb", scale=s)


_SQ3 = math.sqrt(3)

_FIXTURES = {
    "h5": (
        [1, 2, 2, -2, 1],
        "length-5 canonical integer sequence with unit end-correlations"),
    "quasi9": (
        [1, 1, -1, -3, -1, 1, -2, 1, -1],
        "length-9 integer sequence, all off-peak autocorrelation "
        "magnitudes <= 1"),
    "b13": (
        [1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1],
        "binary Barker sequence of length 13"),
    "b13var": (
        [1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -2],
        "13-element Barker-like variant with one term changed to -2"),
    "ternary_barker17": (
        [1, 1, 1, 0, -1, 0, 0, 0, 1, -1, 0, 1, -1, 0, 0, 1, -1],
        "ternary Barker sequence of length 17, merit factor 50/7"),
    "quasi6": (
        [1, 2, 1, -2, 1, -1],
        "even-length integer sequence with near-delta autocorrelation"),
    "quasi8a": (
        [1, 3, 4, 0, -3, 3, -2, 1],
        "even-length integer sequence with near-delta autocorrelation"),
    "quasi8b": (
        [1, -1, 0, 3, -6, 5, 5, 4],
        "even-length integer sequence with asymmetric end magnitudes"),
    "h86": (
        [-1, 0, 1, 0, -1, 0, 2, -1, -1, -2, 1, -2, 1, 2, 4, -2, -1, -2,
         -1, -5, 2, 4, 6, -5, 1, 0, -3, -5, 4, 2, 6,
         -3, -1, 5, -4, 1, 3, -4, 2, 5, -5, 6, 6, 4, -3, 0, 2, -2, 3, 1,
         0, 4, 4, 1, 5, 3, 6, -3, -2, -3, -2, 2, -6, -2, -6,
         2, 2, 1, 0, -4, 3, 1, 3, 0, -2, 1, 0, 3, -1, 0, -1, 0, 1, -1,
         1, -1],
        "length-86 integer sequence, 4-bit dynamic range, flat spectrum"),
    "complex7_i": (
        [0.5j, -1, -1j, 1, 1j, -1, -0.5j],
        "length-7 complex sequence: unit-modulus interior, half-magnitude "
        "ends, delta-correlated in the conjugate-free (dual) sense"),
    "complex7_unimodular": (
        [(1j - _SQ3) / 2, (-1 - 1j * _SQ3) / 2, (1j + _SQ3) / 2, -1,
         (-1j + _SQ3) / 2, (-1 + 1j * _SQ3) / 2, (-1j - _SQ3) / 2],
        "length-7 unit-modulus complex sequence, delta-correlated in the "
        "conjugate-free (dual) sense"),
}


def fixture_names() -> list:
    """Sorted names of the stored reference sequences."""
    return sorted(_FIXTURES)


def fixtures(name: str) -> Sequence:
    """Return a stored reference sequence by name."""
    try:
        elements, _ = _FIXTURES[name]
    except (KeyError, TypeError) as exc:
        known = ", ".join(fixture_names())
        raise ArgumentError(
            f"unknown fixture {name!r}; known fixtures: {known}") from exc
    return Sequence(elements, family=name, scale=1.0)


def fixture_description(name: str) -> str:
    try:
        return _FIXTURES[name][1]
    except (KeyError, TypeError) as exc:
        raise ArgumentError(f"unknown fixture {name!r}") from exc


# id -> (generator, takes N, takes s, one-line description)
FAMILY_INFO = {
    "fib": (gen_fibonacci, True, True,
            "Fibonacci-polynomial canonical sequence; N = 4n+3 >= 7, s != 0"),
    "hplus": (gen_h_plus, True, True,
              "five-term-autocorrelation sequence; N = 4n+1 >= 5, s != 0"),
    "h9a": (gen_h9a, False, True,
            "length-9 canonical sequence, ends 1 ... -1; s != 0"),
    "h9b": (gen_h9b, False, True,
            "length-9 canonical sequence, matched ends 1 ... 1; s != 0"),
    "h13a": (gen_h13a, False, True,
             "length-13 canonical sequence, ends 1 ... -1; s != 0"),
    "h13b": (gen_h13b, False, True,
             "length-13 canonical sequence, polynomial elements; any s"),
    "h17": (gen_h17, False, True,
            "length-17 canonical sequence; real s"),
    "h17l": (gen_h17_matched, False, False,
             "fixed length-17 canonical sequence with matched ends"),
    "h11": (gen_h11, False, True,
            "length-11 canonical sequence; s != 0"),
    "he4": (gen_he4, False, True,
            "length-4 canonical sequence; s != 0"),
    "he6": (gen_he6, False, True,
            "length-6 canonical sequence; s != 0 with X(s) >= 0, Z(s) != 0"),
    "harb": (gen_h_arb, True, True,
             "arbitrary-length canonical sequence; N >= 3, s outside {0,1}"),
    "htan": (gen_h_tan, True, True,
             "odd-length canonical sequence; N >= 5 odd, s outside "
             "{0,1,-1}"),
    "perfect_fib": (gen_perfect_fib, True, True,
                    "perfect (periodic) array of length N-1; N = 4n+3 >= 7"),
    "perfect_arb": (gen_perfect_arb, True, True,
                    "perfect (periodic) array of length N-1; N >= 4, "
                    "s outside {0,1}"),
}


def family_ids() -> list:
    """Sorted generator family ids."""
    return sorted(FAMILY_INFO)


def generate(family: str, n=None, s=None) -> Sequence:
    """Dispatch to a family generator (or the fixture store) by id.

    ``n``/``s`` are validated against what the family accepts: fixed-length
    families take no ``n`` (or the matching one), the fixed sequences take
    neither.
    """
    if family in FAMILY_INFO:
        fn, takes_n, takes_s, _ = FAMILY_INFO[family]
        args = []
        if takes_n:
            if n is None:
                raise ArgumentError(f"family {family!r} requires a length N")
            args.append(n)
        if takes_s:
            args.append(s)
            seq = fn(*args)
        else:
            if s is not None:
                raise ArgumentError(
                    f"family {family!r} takes no scale parameter")
            seq = fn(*args)
        if not takes_n and n is not None and int(n) != len(seq):
            raise ArgumentError(
                f"family {family!r} has fixed length {len(seq)}, got N={n}")
        return seq
    if family in _FIXTURES:
        if n is not None or s is not None:
            seq = fixtures(family)
            if s is not None:
                raise ArgumentError(
                    f"fixture {family!r} takes no scale parameter")
            if int(n) != len(seq):
                raise ArgumentError(
                    f"fixture {family!r} has fixed length {len(seq)}, "
                    f"got N={n}")
            return seq
        return fixtures(family)
    known = ", ".join(family_ids() + fixture_names())
    raise ArgumentError(f"unknown family {family!r}; known: {known}")
