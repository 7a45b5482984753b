"""Numerics of the minimal resolution of a tame cyclic quotient singularity.

A singularity is given by parameters (m1, m2, n): the two branch
multiplicities and the degree n of the base change, with n coprime to
both branches.  Resolving it produces a string of rational curves whose
self-intersections -b_l come from the negative continued fraction
expansion of n/r, where r is the rotation number of the branches.  The
chain multiplicities mu_l interpolate between mu_0 = m2 and
mu_{L+1} = m1; both the remainders r_l and the multiplicities satisfy
three-term recursions driven by the b_l.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BadInputError, NotCoprimeError, NotIntegerError


def mod_inverse(a: int, n: int) -> int:
    """Inverse of a modulo n, normalized to (0, n)."""
    if n < 1:
        raise BadInputError(f"modulus must be positive, got {n}")
    try:
        return pow(a, -1, n) if n > 1 else 0
    except ValueError as exc:
        raise NotCoprimeError(f"{a} is not invertible modulo {n}") from exc


@dataclass(frozen=True)
class SingularityParams:
    """Branch multiplicities m1, m2 and base-change degree n >= 2."""

    m1: int
    m2: int
    n: int

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1:
            raise BadInputError(f"branch multiplicities must be >= 1, got {self}")
        if self.n < 2:
            raise BadInputError(f"degree must be >= 2, got n={self.n}")
        if gcd(self.n, self.m1) != 1 or gcd(self.n, self.m2) != 1:
            raise NotCoprimeError(f"n must be coprime to both branches, got {self}")

    def swapped(self) -> SingularityParams:
        return SingularityParams(self.m2, self.m1, self.n)


def branch_rotation(params: SingularityParams) -> int:
    """The unique 0 < r < n with m1 + r*m2 = 0 modulo n."""
    r = (-params.m1 * mod_inverse(params.m2, params.n)) % params.n
    assert 0 < r < params.n
    return r


def jung_hirzebruch(n: int, r: int) -> list[int]:
    """Negative continued fraction n/r = b1 - 1/(b2 - 1/(... - 1/bL)).

    All b_l are >= 2.  Equivalently, the remainder recursion
    r_{l-1} = b_{l+1} r_l - r_{l+1} started from (n, r) ends at 0.
    """
    if not 0 < r < n:
        raise BadInputError(f"need 0 < r < n, got r={r}, n={n}")
    if gcd(n, r) != 1:
        raise BadInputError(f"need gcd(n, r) = 1, got r={r}, n={n}")
    bs = []
    prev, cur = n, r
    while cur > 0:
        b = -(-prev // cur)  # ceil(prev/cur)
        prev, cur = cur, b * cur - prev
        bs.append(b)
    return bs


@dataclass(frozen=True)
class ResolutionChain:
    """Full resolution data of a tame cyclic quotient singularity.

    r_seq lists r_{-1} = n down to r_L = 0, so r_seq[l + 1] is r_l.
    mu_seq lists mu_0 = m2 through mu_{L+1} = m1; the chain curves
    C_1 .. C_L carry multiplicities mu_seq[1:-1], and C_l has
    self-intersection -b_seq[l-1].  alpha1 inverts m1 modulo n.
    """

    params: SingularityParams
    r_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    mu_seq: tuple[int, ...]
    alpha1: int

    @property
    def length(self) -> int:
        return len(self.b_seq)

    def r(self, l: int) -> int:
        """r_l for -1 <= l <= L."""
        return self.r_seq[l + 1]

    def mu(self, l: int) -> int:
        """mu_l for 0 <= l <= L + 1."""
        return self.mu_seq[l]


def resolve(params: SingularityParams) -> ResolutionChain:
    """Compute rotation number, b-sequence and chain multiplicities.

    The multiplicities are generated forward from mu_0 = m2 and
    mu_1 = (m1 + r*m2)/n via mu_{l+1} = b_l mu_l - mu_{l-1}; hitting
    mu_{L+1} = m1 at the far end is asserted, which turns the defining
    identity of the chain into a runtime consistency check.
    """
    m1, m2, n = params.m1, params.m2, params.n
    r = branch_rotation(params)
    bs = jung_hirzebruch(n, r)
    rs = [n, r]
    for b in bs[1:]:
        rs.append(b * rs[-1] - rs[-2])
    rs.append(0)

    total = m1 + r * m2
    if total % n != 0:
        raise NotIntegerError(f"m1 + r m2 = {total} not divisible by n = {n}")
    mus = [m2, total // n]
    for b in bs[:-1]:
        mus.append(b * mus[-1] - mus[-2])
    # The recursion at l = L would regenerate mu_{L+1}; instead we
    # append m1 and assert that the recursion agrees.
    mus.append(m1)
    assert bs[-1] * mus[-2] - mus[-3] == m1, (
        f"chain multiplicities for {params} do not close up"
    )
    assert all(mu >= 1 for mu in mus)
    return ResolutionChain(
        params=params,
        r_seq=tuple(rs),
        b_seq=tuple(bs),
        mu_seq=tuple(mus),
        alpha1=mod_inverse(m1, n),
    )


def is_shape_regular(chain: ResolutionChain) -> bool:
    """Whether mu_seq falls strictly, sits at gcd(m1, m2), then rises.

    The closed edge-trace formula is only valid in this regime, so the
    run of minimal values must equal gcd(m1, m2) exactly.  A lone
    minimum above the gcd, as happens for small n, does not qualify;
    the fixed-point oracle confirms the closed formula fails there.
    """
    m = gcd(chain.params.m1, chain.params.m2)
    seq = chain.mu_seq
    i = 0
    while i + 1 < len(seq) and seq[i + 1] < seq[i]:
        i += 1
    if seq[i] != m:
        return False
    j = i
    while j + 1 < len(seq) and seq[j + 1] == seq[j]:
        j += 1
    k = j
    while k + 1 < len(seq) and seq[k + 1] > seq[k]:
        k += 1
    return k == len(seq) - 1


def action_exponents(chain: ResolutionChain, l: int) -> tuple[int, int]:
    """Eigen-exponents of the group action on the chart coordinates.

    On the l-th chart (1 <= l <= L + 1) the coordinates z_{l-1}, w_{l-1}
    scale by the alpha1*r_{l-2} and -alpha1*r_{l-1} powers of the chosen
    root; both exponents are returned reduced to [0, n).
    """
    if not 1 <= l <= chain.length + 1:
        raise IndexError(f"chart index {l} out of range 1..{chain.length + 1}")
    n = chain.params.n
    return (
        (chain.alpha1 * chain.r(l - 2)) % n,
        (-chain.alpha1 * chain.r(l - 1)) % n,
    )
