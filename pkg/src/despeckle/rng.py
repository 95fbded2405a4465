"""Deterministic random number generation.

Every stochastic result in this package is derived from a single 64-bit seed
through two documented primitives, so runs are reproducible bit-for-bit and
the streams can be re-generated in any language:

* ``splitmix64`` -- the standard 64-bit mixing/expansion function
  (Steele, Lea, Flood; used here both to expand seeds into generator state
  and, via :func:`derive_seed`, to split one seed into independent
  sub-stream seeds).
* ``xoshiro256**`` -- the public-domain generator of Blackman and Vigna.
  State is four 64-bit words; output is ``rotl(s1 * 5, 7) * 9``.

Reference outputs (first three ``next_raw`` values of a single-lane
generator, seed expanded with splitmix64):

    seed 0     -> 11091344671253066420, 13793997310169335082, 1900383378846508768
    seed 12345 -> 13720838825685603483, 2398916695208396998, 17770384849984869256

The generator is vectorised over independent "lanes": each lane is its own
xoshiro256** stream, and one call advances every lane by one step.  Lanes
are how per-row noise sub-streams run in parallel without any shared state.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# (0, 1] uniforms from the high 53 bits of a 64-bit word.
_INV53 = 2.0 ** -53


def mix64(x: int) -> int:
    """splitmix64 finaliser: bijective avalanche mix of one 64-bit word."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * _MIX1) & _MASK64
    x = ((x ^ (x >> 27)) * _MIX2) & _MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, *indices: int) -> int:
    """Derive an independent sub-stream seed from ``seed`` and an index path.

    The rule, applied once per index:

        state <- mix64((state + 0x9E3779B97F4A7C15) XOR mix64((index + 1) * 0x9E3779B97F4A7C15))

    Examples of index paths used in this package: ``(row,)`` for per-row
    speckle lanes, ``(channel,)`` for RGB channels (then ``(channel, row)``),
    ``(image_index, look)`` for benchmark rows.
    """
    state = seed & _MASK64
    for index in indices:
        salted = mix64(((index + 1) * _GOLDEN) & _MASK64)
        state = mix64(((state + _GOLDEN) & _MASK64) ^ salted)
    return state


def _splitmix64_stream(state: np.ndarray, count: int) -> np.ndarray:
    """Return ``count`` successive splitmix64 outputs per lane, shape (count, lanes)."""
    out = np.empty((count, state.size), dtype=np.uint64)
    s = state.copy()
    for i in range(count):
        s = s + np.uint64(_GOLDEN)
        z = s.copy()
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        out[i] = z ^ (z >> np.uint64(31))
    return out


def _rotl(x: np.ndarray, k: int) -> np.ndarray:
    return (x << np.uint64(k)) | (x >> np.uint64(64 - k))


class Xoshiro256StarStar:
    """Vectorised xoshiro256** generator: one independent stream per lane.

    ``seed`` may be a single integer (one lane) or a sequence of integers
    (one lane per entry).  Each lane's 256-bit state is expanded from its
    64-bit seed with four splitmix64 steps, as the reference implementation
    prescribes.
    """

    def __init__(self, seed) -> None:
        seeds = np.atleast_1d(np.asarray(seed, dtype=np.uint64))
        if seeds.ndim != 1 or seeds.size == 0:
            raise ValueError("seed must be a scalar or a non-empty 1-D sequence")
        self._state = _splitmix64_stream(seeds, 4)

    @property
    def lanes(self) -> int:
        return self._state.shape[1]

    def next_raw(self) -> np.ndarray:
        """Advance every lane one step; return one uint64 per lane."""
        s0, s1, s2, s3 = self._state
        result = _rotl(s1 * np.uint64(5), 7) * np.uint64(9)
        t = s1 << np.uint64(17)
        s2 = s2 ^ s0
        s3 = s3 ^ s1
        s1 = s1 ^ s2
        s0 = s0 ^ s3
        s2 = s2 ^ t
        s3 = _rotl(s3, 45)
        self._state = np.stack([s0, s1, s2, s3])
        return result

    def next_uniform(self) -> np.ndarray:
        """One double per lane, uniform on (0, 1] (53-bit resolution)."""
        return ((self.next_raw() >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * _INV53
