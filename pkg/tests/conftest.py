import numpy as np
import pytest

import sdcodes as s


def random_symmetric_sd(field, half_n, rng):
    """Random symmetric self-dual code of length 2*half_n, built by chained
    random admissible extension steps from a length-2 base."""
    r1, r2 = field.roots_of_minus_one()
    base_alpha = r1 if rng.integers(2) == 0 else r2
    c = s.SymmetricSD(s.Matrix.make([[base_alpha.value]], field))
    while c.half_n < half_n:
        c = s.extend(c, random_step(c, rng))
    return c


def random_step(c, rng, allow_trivial=True):
    """A uniformly-drawn admissible step for c (falls back across roots)."""
    f = c.field
    roots = list(f.roots_of_minus_one())
    rng.shuffle(roots)
    for alpha in roots:
        basis = s.eigen_candidates(c, alpha)
        if not basis:
            continue
        arr = np.array([v.entries for v in basis], dtype=np.int64)
        for _ in range(200):
            coeffs = rng.integers(0, f.p, size=len(basis))
            x = (coeffs @ arr) % f.p
            if not x.any():
                continue
            disc = (-1 - int(x @ x)) % f.p
            r = f.sqrt(disc)
            if r is None:
                continue
            gammas = [g for g in {r, (f.p - r) % f.p} if g != alpha.value]
            if not gammas:
                continue
            gamma = int(rng.choice(sorted(gammas)))
            return s.BuildStep.make(alpha.value, gamma, x.tolist(), f)
    if allow_trivial:
        return s.BuildStep.trivial(roots[0], c.half_n)
    raise AssertionError("no admissible step found")


@pytest.fixture(scope="session")
def example_base():
    """The [16,8,6] symmetric self-dual code over GF(5) from the catalog."""
    from sdcodes import catalog

    return catalog.get("Example3.6.A").symmetric_sd()
