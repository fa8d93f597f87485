"""Floating-point sampling of GUE, LUE and JUE spectra

Used only to check the exact engine end to end; no value computed here is
fed back into exact arithmetic. Every worker draws from its own Philox
stream keyed by (seed, worker index), and worker results are combined in
worker order, so estimates are reproducible for a fixed seed and worker
count.
"""
import concurrent.futures
import logging
import math
import typing as ty

import numpy as np

from symrmt import mops, partitions
from symrmt.algebra import Rational
from symrmt.exceptions import PreconditionError
from symrmt.mops import EnsembleSpec
from symrmt.partitions import Partition

log = logging.getLogger(__name__)

# Limiting mass of the semicircle law on [-1/2, 1/2]
SEMICIRCLE_CENTRAL = 1 / 3 + math.sqrt(3) / (2 * math.pi)

Statistic = ty.Callable[[np.ndarray], float]


class SamplerConfig(ty.NamedTuple):
    ensemble: EnsembleSpec
    n: int
    samples: int
    seed: int = 0
    workers: int = 1

    def validate(self) -> "SamplerConfig":
        if self.n < 1 or self.samples < 2 or self.workers < 1:
            raise PreconditionError(
                "SamplerConfig",
                "N and workers must be positive, samples at least 2",
            )
        if not 0 <= self.seed < 2 ** 64:
            raise PreconditionError(
                "SamplerConfig", "seed must be a 64-bit unsigned integer"
            )
        for name in ("gamma", "gamma1", "gamma2"):
            value = getattr(self.ensemble, name)
            if value.denominator != 1 or value < 0:
                raise PreconditionError(
                    "SamplerConfig",
                    f"sampling needs a non-negative integer {name}",
                )
        return self


class Estimate(ty.NamedTuple):
    mean: float
    standard_error: float
    samples: int

    def z_score(self, target: ty.Union[float, Rational]) -> float:
        return z_score(self, target)


def z_score(estimate: Estimate, target: ty.Union[float, Rational]) -> float:
    "(mean - target) / standard error"
    gap = estimate.mean - float(target)
    if estimate.standard_error == 0:
        return 0.0 if gap == 0 else math.copysign(math.inf, gap)
    return gap / estimate.standard_error


def stream(seed: int, worker: int) -> np.random.Generator:
    "The counter-based random stream of one worker"
    sequence = np.random.SeedSequence(seed, spawn_key=(worker,))
    return np.random.Generator(np.random.Philox(sequence))


def _complex_gaussian(
    rng: np.random.Generator, rows: int, cols: int
) -> np.ndarray:
    "Entries with independent real and imaginary parts, E|z|^2 = 1"
    scale = math.sqrt(0.5)
    real = rng.standard_normal((rows, cols)) * scale
    imag = rng.standard_normal((rows, cols)) * scale
    return real + 1j * imag


def _wishart(rng: np.random.Generator, n: int, extra: int) -> np.ndarray:
    x = _complex_gaussian(rng, n, n + extra)
    return x @ x.conj().T


def sample_spectrum(
    config: SamplerConfig, rng: np.random.Generator
) -> np.ndarray:
    """Eigenvalues of one matrix drawn from the configured ensemble

    GUE has density proportional to exp(-Tr M^2 / 2); LUE is X X^H with X
    of size N x (N + gamma); JUE is A (A + B)^-1 for independent Wishart
    matrices A, B with N + gamma1 and N + gamma2 columns.
    """
    n = config.n
    kind = config.ensemble.kind
    if kind == mops.HERMITE:
        z = _complex_gaussian(rng, n, n)
        matrix = (z + z.conj().T) / math.sqrt(2)
        return np.linalg.eigvalsh(matrix)
    if kind == mops.LAGUERRE:
        extra = int(config.ensemble.gamma)
        return np.linalg.eigvalsh(_wishart(rng, n, extra))
    a = _wishart(rng, n, int(config.ensemble.gamma1))
    b = _wishart(rng, n, int(config.ensemble.gamma2))
    # L^-1 A L^-H shares its spectrum with A (A + B)^-1
    lower = np.linalg.cholesky(a + b)
    inverse = np.linalg.inv(lower)
    return np.linalg.eigvalsh(inverse @ a @ inverse.conj().T)


def _worker_counts(samples: int, workers: int) -> ty.List[int]:
    base, extra = divmod(samples, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def _run(config: SamplerConfig, statistic: Statistic) -> Estimate:
    """Mean and standard error of `statistic` over the sampled spectra

    Workers are threads. Only numpy's linear algebra releases the GIL, so
    the speed-up is limited to the eigendecompositions; the per-sample loop
    runs serially. Each worker owns its stream, so the result depends on
    the seed and the worker count but not on scheduling.
    """
    config.validate()

    def draw(job: ty.Tuple[int, int]) -> np.ndarray:
        worker, count = job
        rng = stream(config.seed, worker)
        values = np.empty(count)
        for i in range(count):
            values[i] = statistic(sample_spectrum(config, rng))
        log.info(f"worker {worker} finished {count} samples")
        return values

    jobs = list(enumerate(_worker_counts(config.samples, config.workers)))
    with concurrent.futures.ThreadPoolExecutor(config.workers) as pool:
        chunks = list(pool.map(draw, jobs))
    values = np.concatenate(chunks)
    mean = float(np.mean(values))
    error = float(np.std(values, ddof=1) / math.sqrt(len(values)))
    return Estimate(mean=mean, standard_error=error, samples=len(values))


def estimate_trace_moment(config: SamplerConfig, mu: Partition) -> Estimate:
    "Empirical E[prod_j Tr M^{mu_j}]"
    mu = partitions.make(mu)
    if partitions.weight(mu) > 10 or config.n > 64:
        raise PreconditionError(
            "estimate_trace_moment", "needs |mu| <= 10 and N <= 64"
        )

    def statistic(eigs: np.ndarray) -> float:
        return float(np.prod([np.sum(eigs ** part) for part in mu]))

    return _run(config, statistic)


def estimate_charpoly_product(
    config: SamplerConfig, t: ty.Sequence[Rational]
) -> Estimate:
    "Empirical E[prod_j det(t_j - M)]"
    if not 1 <= len(t) <= 3:
        raise PreconditionError(
            "estimate_charpoly_product", "between 1 and 3 points"
        )
    points = np.array([float(v) for v in t])

    def statistic(eigs: np.ndarray) -> float:
        return float(np.prod(points[:, None] - eigs[None, :]))

    return _run(config, statistic)


def semicircle_fraction(config: SamplerConfig) -> Estimate:
    """Fraction of eigenvalues of M / (2 sqrt(N)) inside [-1/2, 1/2]

    Tends to SEMICIRCLE_CENTRAL as N grows.
    """
    if config.ensemble.kind != mops.HERMITE:
        raise PreconditionError("semicircle_fraction", "GUE only")
    scale = 2 * math.sqrt(config.n)

    def statistic(eigs: np.ndarray) -> float:
        return float(np.mean(np.abs(eigs / scale) <= 0.5))

    return _run(config, statistic)
