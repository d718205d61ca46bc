"""Monte Carlo simulation of complete key-distribution sessions.

Qubit strings are simulated microscopically: every round draws Alice's bit and
basis and Bob's basis, and the attacked outcome is sampled from the Born
probabilities of the three-qubit cloner state (or from explicit projections
for intercept-resend).  Sifted bits are concatenated in transmission order and
packed big-endian into n-bit symbols; a trailing partial symbol is dropped.

The 2**n-level MUB protocol is simulated at the outcome level: a round
survives sifting with probability 1/(2**n + 1), and under the cloner Bob is
wrong with probability D (uniformly over the wrong symbols) while Eve then
knows the symbol; otherwise Eve is wrong with probability mu.

Determinism: a single shard with a given seed is the canonical mode.  With
``shards = k`` the rounds are split into k contiguous blocks, block i seeded by
``SeedSequence(seed).spawn(k)[i]``; results are reproducible for fixed k.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError
from ..infotheory import xlog2x
from ..qubit_attack import outcome_probabilities, params_from_beta, string_information
from ..qudit_attack import qudit_disturbances, qudit_information, qudit_params_from_beta
from ..security_solver import Protocol
from .estimators import bias_bound_from_histograms, counter_histograms, information_from_histograms
from .states import cloner_outcome_table, overlap_table

CHUNK_ROUNDS = 1 << 18
MAX_N = 30
MAX_SEED = 2**64 - 1


class AttackKind(str, enum.Enum):
    NONE = "none"
    CLONER = "cloner"
    INTERCEPT_RESEND = "intercept-resend"


@dataclass(frozen=True)
class Attack:
    """Eve's strategy; ``beta`` is the cloner amplitude (``beta_t`` for qudits)."""

    kind: AttackKind = AttackKind.NONE
    beta: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", AttackKind(self.kind))
        if self.kind is AttackKind.CLONER:
            if self.beta is None or not 0.0 <= self.beta <= 1.0:
                raise ValidationError(f"cloner attack needs beta in [0, 1], got {self.beta!r}")
        elif self.beta is not None:
            raise ValidationError(f"beta only applies to the cloner attack, not {self.kind.value}")


@dataclass(frozen=True)
class SessionConfig:
    protocol: Protocol
    n: int
    rounds: int
    attack: Attack = Attack()
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "protocol", Protocol(self.protocol))
        if int(self.n) != self.n or not 1 <= self.n <= MAX_N:
            raise ValidationError(f"n must be an integer in [1, {MAX_N}], got {self.n!r}")
        if int(self.rounds) != self.rounds or self.rounds < 1:
            raise ValidationError(f"rounds must be a positive integer, got {self.rounds!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed <= MAX_SEED:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


@dataclass(frozen=True)
class SessionStats:
    """Aggregated session outcome.

    ``qber`` is per qubit for qubit strings and per symbol for the MUB
    protocol (``qber_unit`` says which).  Informations are bits per symbol and
    are ``None`` when no complete symbol was sifted.
    """

    protocol: Protocol
    n: int
    rounds_sent: int
    rounds_sifted: int
    sift_fraction: float
    qber_unit: str
    carriers_sifted: int
    carrier_errors: int
    qber: float
    symbols: int
    symbol_errors: int
    dit_disturbance: float
    bob_info_empirical: float | None
    eve_info_empirical: float | None
    bob_info_bias_bound: float | None
    eve_info_bias_bound: float | None


@dataclass
class _Tally:
    rounds_sent: int = 0
    rounds_sifted: int = 0
    carriers: int = 0
    carrier_errors: int = 0
    symbols: int = 0
    symbol_errors: int = 0
    bob: Counter = field(default_factory=Counter)
    eve: Counter = field(default_factory=Counter)

    def merge(self, other: "_Tally") -> "_Tally":
        for name in ("rounds_sent", "rounds_sifted", "carriers", "carrier_errors", "symbols", "symbol_errors"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.bob.update(other.bob)
        self.eve.update(other.eve)
        return self

    def record_symbols(self, alice, bob, eve, flags, record_eve: bool) -> None:
        self.symbols += int(alice.size)
        bob_off = alice ^ bob
        self.symbol_errors += int(np.count_nonzero(bob_off))
        _count_into(self.bob, np.zeros_like(bob_off), bob_off)
        if record_eve:
            _count_into(self.eve, flags, alice ^ eve)


def _count_into(counter: Counter, flags: np.ndarray, offsets: np.ndarray) -> None:
    if offsets.size == 0:
        return
    pairs, counts = np.unique(np.stack([flags, offsets], axis=1), axis=0, return_counts=True)
    counter.update({(int(f), int(o)): int(c) for (f, o), c in zip(pairs, counts)})


def _pack(bits: np.ndarray, n: int) -> np.ndarray:
    weights = np.left_shift(np.int64(1), np.arange(n - 1, -1, -1, dtype=np.int64))
    return bits.reshape(-1, n).astype(np.int64) @ weights


class _QubitStringRunner:
    def __init__(self, config: SessionConfig) -> None:
        self.config = config
        self.overlap = overlap_table()
        attack = config.attack
        if attack.kind is AttackKind.CLONER:
            p = params_from_beta(attack.beta)
            self.cdf = np.cumsum(cloner_outcome_table(p.alpha, p.beta), axis=-1)[..., :7]
        self.carry = {k: np.zeros(0, dtype=np.int64) for k in ("alice", "bob", "eve", "flag")}

    def chunk(self, rng: np.random.Generator, size: int, tally: _Tally) -> None:
        kind = self.config.attack.kind
        bits = rng.integers(0, 2, size)
        a_basis = rng.integers(0, 3, size)
        b_basis = rng.integers(0, 3, size)
        ov = self.overlap
        if kind is AttackKind.NONE:
            bob = (rng.random(size) >= ov[a_basis, bits, b_basis, 0]).astype(np.int64)
            eve = np.zeros(size, dtype=np.int64)
            flag = np.zeros(size, dtype=np.int64)
        elif kind is AttackKind.CLONER:
            cdf = self.cdf[a_basis, bits, b_basis]
            idx = np.count_nonzero(rng.random(size)[:, None] >= cdf, axis=1)
            bob = idx >> 2
            eve = (idx >> 1) & 1
            flag = eve ^ (idx & 1)
        else:
            e_basis = rng.integers(0, 3, size)
            u = rng.random((2, size))
            eve = (u[0] >= ov[a_basis, bits, e_basis, 0]).astype(np.int64)
            bob = (u[1] >= ov[e_basis, eve, b_basis, 0]).astype(np.int64)
            flag = (e_basis == a_basis).astype(np.int64)

        keep = a_basis == b_basis
        tally.rounds_sent += size
        tally.rounds_sifted += int(np.count_nonzero(keep))
        tally.carriers += int(np.count_nonzero(keep))
        tally.carrier_errors += int(np.count_nonzero(bits[keep] != bob[keep]))

        cur = {"alice": bits[keep], "bob": bob[keep], "eve": eve[keep], "flag": flag[keep]}
        n = self.config.n
        stream = {k: np.concatenate([self.carry[k], cur[k].astype(np.int64)]) for k in cur}
        usable = (stream["alice"].size // n) * n
        self.carry = {k: v[usable:] for k, v in stream.items()}
        packed = {k: _pack(v[:usable], n) for k, v in stream.items()}
        tally.record_symbols(
            packed["alice"], packed["bob"], packed["eve"], packed["flag"], kind is not AttackKind.NONE
        )


class _QuditRunner:
    def __init__(self, config: SessionConfig) -> None:
        self.config = config
        if config.attack.kind is AttackKind.CLONER:
            D, _, mu = qudit_disturbances(qudit_params_from_beta(config.n, config.attack.beta))
            self.D, self.mu = D, mu

    def chunk(self, rng: np.random.Generator, size: int, tally: _Tally) -> None:
        kind = self.config.attack.kind
        d = 2**self.config.n
        a_basis = rng.integers(0, d + 1, size)
        b_basis = rng.integers(0, d + 1, size)
        keep = a_basis == b_basis
        s = int(np.count_nonzero(keep))
        alice = rng.integers(0, d, s)
        if kind is AttackKind.NONE:
            bob = alice.copy()
            eve = alice.copy()
            flag = np.zeros(s, dtype=np.int64)
        elif kind is AttackKind.CLONER:
            bob_wrong = rng.random(s) < self.D
            eve_wrong = ~bob_wrong & (rng.random(s) < self.mu)
            bob = np.where(bob_wrong, alice ^ rng.integers(1, d, s), alice)
            eve = np.where(eve_wrong, alice ^ rng.integers(1, d, s), alice)
            flag = bob_wrong.astype(np.int64)
        else:
            match = rng.integers(0, d + 1, s) == a_basis[keep]
            eve = np.where(match, alice, rng.integers(0, d, s))
            bob = np.where(match, alice, rng.integers(0, d, s))
            flag = match.astype(np.int64)

        tally.rounds_sent += size
        tally.rounds_sifted += s
        tally.carriers += s
        tally.carrier_errors += int(np.count_nonzero(alice != bob))
        tally.record_symbols(alice, bob, eve, flag, kind is not AttackKind.NONE)


def _simulate(config: SessionConfig, rounds: int, rng: np.random.Generator) -> _Tally:
    runner = _QubitStringRunner(config) if config.protocol is Protocol.QUBIT_STRING else _QuditRunner(config)
    tally = _Tally()
    done = 0
    while done < rounds:
        size = min(CHUNK_ROUNDS, rounds - done)
        runner.chunk(rng, size, tally)
        done += size
    return tally


def _simulate_shard(config: SessionConfig, rounds: int, seed_seq: np.random.SeedSequence) -> _Tally:
    return _simulate(config, rounds, np.random.default_rng(seed_seq))


def _finalize(config: SessionConfig, tally: _Tally) -> SessionStats:
    n = config.n
    bob_info = eve_info = bob_bias = eve_bias = None
    if tally.symbols:
        bob_h = counter_histograms(tally.bob)
        bob_info = information_from_histograms(n, bob_h)
        bob_bias = bias_bound_from_histograms(bob_h)
        if config.attack.kind is AttackKind.NONE:
            eve_info, eve_bias = 0.0, 0.0
        else:
            eve_h = counter_histograms(tally.eve)
            eve_info = information_from_histograms(n, eve_h)
            eve_bias = bias_bound_from_histograms(eve_h)
    return SessionStats(
        protocol=config.protocol,
        n=n,
        rounds_sent=tally.rounds_sent,
        rounds_sifted=tally.rounds_sifted,
        sift_fraction=tally.rounds_sifted / tally.rounds_sent,
        qber_unit="qubit" if config.protocol is Protocol.QUBIT_STRING else "dit",
        carriers_sifted=tally.carriers,
        carrier_errors=tally.carrier_errors,
        qber=tally.carrier_errors / tally.carriers if tally.carriers else 0.0,
        symbols=tally.symbols,
        symbol_errors=tally.symbol_errors,
        dit_disturbance=tally.symbol_errors / tally.symbols if tally.symbols else 0.0,
        bob_info_empirical=bob_info,
        eve_info_empirical=eve_info,
        bob_info_bias_bound=bob_bias,
        eve_info_bias_bound=eve_bias,
    )


def run_session(
    config: SessionConfig,
    rng: np.random.Generator | None = None,
    *,
    shards: int = 1,
    max_workers: int | None = None,
) -> SessionStats:
    """Simulate ``config.rounds`` rounds and return aggregated statistics.

    ``rng`` overrides the seed in single-shard mode.  Shards are run in a
    process pool when ``max_workers > 1``, otherwise sequentially; the result
    is the same either way.
    """
    if shards < 1:
        raise ValidationError(f"shards must be >= 1, got {shards}")
    if shards == 1:
        if rng is None:
            rng = np.random.default_rng(np.random.SeedSequence(config.seed))
        return _finalize(config, _simulate(config, config.rounds, rng))
    if rng is not None:
        raise ValidationError("an explicit rng cannot be combined with sharding")
    base, extra = divmod(config.rounds, shards)
    sizes = [base + (i < extra) for i in range(shards)]
    seqs = np.random.SeedSequence(config.seed).spawn(shards)
    jobs = [(s, q) for s, q in zip(sizes, seqs) if s > 0]
    if max_workers and max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            parts = list(pool.map(_simulate_shard, [config] * len(jobs), *zip(*jobs)))
    else:
        parts = [_simulate_shard(config, s, q) for s, q in jobs]
    total = _Tally()
    for part in parts:
        total.merge(part)
    return _finalize(config, total)


def analytic_predictions(config: SessionConfig) -> dict[str, float]:
    """Closed-form expectations for the quantities in :class:`SessionStats`."""
    n = config.n
    kind = config.attack.kind
    if config.protocol is Protocol.QUBIT_STRING:
        sift = 1.0 / 3.0
        if kind is AttackKind.CLONER:
            params = params_from_beta(config.attack.beta)
            qber = outcome_probabilities(params).pb
            point = string_information(n, params)
            bob, eve = point.info_bob, point.info_eve
        elif kind is AttackKind.INTERCEPT_RESEND:
            qber = 1.0 / 3.0
            bob = n * (1.0 + xlog2x(1.0 / 3.0) + xlog2x(2.0 / 3.0))
            eve = n / 3.0
        else:
            qber, bob, eve = 0.0, float(n), 0.0
        dit = 1.0 - (1.0 - qber) ** n
    else:
        d = 2**n
        sift = 1.0 / (d + 1)
        if kind is AttackKind.CLONER:
            params = qudit_params_from_beta(n, config.attack.beta)
            dit = qudit_disturbances(params)[0]
            bob, eve = qudit_information(params)
        elif kind is AttackKind.INTERCEPT_RESEND:
            # Eve's basis matches w.p. 1/(d+1); otherwise Bob's result is uniform
            dit = (d - 1) / (d + 1)
            bob = n + xlog2x(2.0 / (d + 1)) - (d - 1) / (d + 1) * math.log2(d + 1)
            eve = n / (d + 1)
        else:
            dit, bob, eve = 0.0, float(n), 0.0
        qber = dit
    return {
        "sift_fraction": sift,
        "qber": qber,
        "dit_disturbance": dit,
        "bob_info": bob,
        "eve_info": eve,
    }


def binomial_z(observed: float, expected: float, trials: int) -> float | None:
    """z-score of an observed proportion; ``None`` if undefined."""
    var = expected * (1.0 - expected)
    if trials <= 0:
        return None
    if var == 0.0:
        return 0.0 if observed == expected else None
    return (observed - expected) / math.sqrt(var / trials)


def z_scores(stats: SessionStats, predictions: dict[str, float]) -> dict[str, float | None]:
    return {
        "sift_fraction": binomial_z(stats.sift_fraction, predictions["sift_fraction"], stats.rounds_sent),
        "qber": binomial_z(stats.qber, predictions["qber"], stats.carriers_sifted),
        "dit_disturbance": binomial_z(stats.dit_disturbance, predictions["dit_disturbance"], stats.symbols),
    }
