"""Problem instances: generators, canonical fixtures, and JSON persistence.

An instance bundles a set function (always materialized as an explicit
table), a matroid spec, and a target cardinality. Generators are
deterministic given their seed, and every generated instance is strictly
increasing and feasible by construction. Files are UTF-8 JSON; floats rely
on Python's shortest round-trip repr, so load(save(x)) is exact.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    GroundSetTooLargeError,
    InfeasibleInstanceError,
    InvalidSpecError,
    SchemaError,
)
from .matroids import (
    DualSpec,
    ExplicitSpec,
    GraphicSpec,
    Matroid,
    MatroidSpec,
    PartitionSpec,
    TruncateSpec,
    UniformSpec,
    build_matroid,
)
from .setfunc import MAX_TABLE_N, SetFunction


@dataclass(frozen=True)
class Instance:
    """A set function, a matroid spec, and the base cardinality to select."""

    id: str
    n: int
    function: SetFunction
    matroid_spec: MatroidSpec
    cardinality: int
    seed: int | None = None

    def matroid(self) -> Matroid:
        return build_matroid(self.matroid_spec, self.n)


def gen_modular(n: int, weights) -> SetFunction:
    """Additive function f(S) = sum of per-element weights; ratio 1, curvature 0."""
    ws = [float(w) for w in weights]
    if len(ws) != n:
        raise ValueError(f"need {n} weights, got {len(ws)}")
    if any(w <= 0 for w in ws):
        raise ValueError("weights must be positive")
    values = [0.0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        values[mask] = values[mask ^ low] + ws[low.bit_length() - 1]
    return SetFunction(n, values)


def gen_bounded_marginal(n: int, lo: float, hi: float, seed: int) -> SetFunction:
    """Random function whose every marginal lies in [lo, hi], 0 < lo <= hi.

    f(S) = midpoint * |S| + h(S) with h drawn uniformly from
    [0, (hi - lo) / 2] per subset and h(empty) = 0, so any single-element
    marginal moves by at most the half-range around the midpoint. Strictly
    increasing since lo > 0; a degenerate range lo == hi gives the modular
    function with equal weights.
    """
    if not 0 < lo <= hi:
        raise ValueError(f"need 0 < lo <= hi, got lo={lo}, hi={hi}")
    if n > 12:
        raise GroundSetTooLargeError(f"bounded-marginal generator capped at n=12, got {n}")
    rng = random.Random(seed)
    mid = (lo + hi) / 2.0
    half = (hi - lo) / 2.0
    values = [0.0] * (1 << n)
    for mask in range(1, 1 << n):
        values[mask] = mid * mask.bit_count() + rng.uniform(0.0, half)
    return SetFunction(n, values)


def gen_explicit_random(n: int, seed: int) -> SetFunction:
    """Adversarial strictly increasing function via random max-plus accumulation.

    f(empty) = 0 and f(S) = max over j in S of f(S - j), plus a fresh uniform
    increment from (0, 1] per subset, so every marginal is positive.
    """
    if n > 10:
        raise GroundSetTooLargeError(f"explicit-random generator capped at n=10, got {n}")
    rng = random.Random(seed)
    values = [0.0] * (1 << n)
    for mask in range(1, 1 << n):
        best = 0.0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            prev = values[mask ^ low]
            if prev > best:
                best = prev
        values[mask] = best + (1.0 - rng.random())
    return SetFunction(n, values)


def random_matroid_spec(n: int, rng: random.Random) -> MatroidSpec:
    """Random uniform, partition, or graphic spec with rank at least 1."""
    kind = rng.choice(["uniform", "partition", "graphic"])
    if kind == "uniform" or n < 2:
        return UniformSpec(rng.randint(1, n))
    if kind == "partition":
        block_count = rng.randint(2, min(3, n))
        order = list(range(n))
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, n), block_count - 1))
        blocks = []
        capacities = []
        start = 0
        for cut in cuts + [n]:
            block = tuple(sorted(order[start:cut]))
            blocks.append(block)
            capacities.append(rng.randint(1, len(block)))
            start = cut
        return PartitionSpec(tuple(blocks), tuple(capacities))
    vertices = rng.randint(2, min(6, n + 1))
    edges = [(rng.randint(0, i - 1), i) for i in range(1, vertices)]
    while len(edges) < n:
        u = rng.randrange(vertices)
        v = rng.randrange(vertices)
        while v == u:
            v = rng.randrange(vertices)
        edges.append((min(u, v), max(u, v)))
    return GraphicSpec(vertices, tuple(edges))


def random_instance(n: int, rng: random.Random, instance_id: str) -> Instance:
    """One random feasible instance: seeded function, matroid, and cardinality."""
    fn_seed = rng.randrange(1 << 31)
    if n <= 10 and rng.random() < 0.5:
        f = gen_explicit_random(n, fn_seed)
    else:
        f = gen_bounded_marginal(n, 1.0, rng.uniform(1.5, 3.0), fn_seed)
    spec = random_matroid_spec(n, rng)
    rank = build_matroid(spec, n).rank_full
    cardinality = rng.randint(1, rank)
    return Instance(instance_id, n, f, spec, cardinality, seed=fn_seed)


def random_suite(count: int, n_min: int, n_max: int, seed: int) -> list[Instance]:
    """Deterministic list of random instances shared by the verification suites."""
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got [{n_min}, {n_max}]")
    if n_max > 12:
        raise GroundSetTooLargeError(
            f"verification suite is capped at n=12, got n_max={n_max}"
        )
    rng = random.Random(seed)
    return [
        random_instance(rng.randint(n_min, n_max), rng, f"rnd-{seed}-{i:03d}")
        for i in range(count)
    ]


def canonical_t3() -> Instance:
    """Three-element fixture with hand-checked ratios.

    gamma = 1/2, alpha = 1/2, cumulative ratio = 2/3, strong curvature = 1/2;
    forward greedy picks {0, 1} and reverse greedy {1, 2}, both of value 3,
    which is also the optimum over the three bases.
    """
    f = SetFunction(3, [0, 2, 1, 3, 1, 3, 3, 4])
    return Instance("T3", 3, f, UniformSpec(2), 2)


def canonical_sp2() -> SetFunction:
    """Two-element supermodular fixture: gamma = 1/2, alpha = 0."""
    return SetFunction(2, [0, 1, 1, 3])


# ---------------------------------------------------------------------------
# JSON persistence


def spec_to_json(spec: MatroidSpec) -> dict:
    if isinstance(spec, UniformSpec):
        return {"kind": "uniform", "rank": spec.rank}
    if isinstance(spec, PartitionSpec):
        return {
            "kind": "partition",
            "blocks": [list(b) for b in spec.blocks],
            "capacities": list(spec.capacities),
        }
    if isinstance(spec, GraphicSpec):
        return {
            "kind": "graphic",
            "vertices": spec.vertices,
            "edges": [list(e) for e in spec.edges],
        }
    if isinstance(spec, ExplicitSpec):
        return {"kind": "explicit", "independent": sorted(spec.independent)}
    if isinstance(spec, DualSpec):
        return {"kind": "dual", "of": spec_to_json(spec.of)}
    if isinstance(spec, TruncateSpec):
        return {"kind": "truncate", "of": spec_to_json(spec.of), "q": spec.q}
    raise InvalidSpecError(f"unknown matroid spec {spec!r}")


def _expect(obj: dict, field: str, kinds, where: str):
    if field not in obj:
        raise SchemaError(f"{where}: missing field '{field}'")
    value = obj[field]
    if not isinstance(value, kinds) or isinstance(value, bool):
        raise SchemaError(f"{where}: field '{field}' has wrong type {type(value).__name__}")
    return value


def spec_from_json(obj, where: str = "matroid") -> MatroidSpec:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    kind = _expect(obj, "kind", str, where)
    if kind == "uniform":
        return UniformSpec(_expect(obj, "rank", int, where))
    if kind == "partition":
        blocks = _expect(obj, "blocks", list, where)
        capacities = _expect(obj, "capacities", list, where)
        try:
            return PartitionSpec(
                tuple(tuple(int(e) for e in block) for block in blocks),
                tuple(int(c) for c in capacities),
            )
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"{where}: malformed partition fields ({exc})") from exc
    if kind == "graphic":
        vertices = _expect(obj, "vertices", int, where)
        edges = _expect(obj, "edges", list, where)
        try:
            return GraphicSpec(vertices, tuple((int(u), int(v)) for u, v in edges))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"{where}: malformed edge list ({exc})") from exc
    if kind == "explicit":
        masks = _expect(obj, "independent", list, where)
        try:
            return ExplicitSpec(frozenset(int(m) for m in masks))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"{where}: malformed mask list ({exc})") from exc
    if kind == "dual":
        return DualSpec(spec_from_json(_expect(obj, "of", dict, where), f"{where}.of"))
    if kind == "truncate":
        return TruncateSpec(
            spec_from_json(_expect(obj, "of", dict, where), f"{where}.of"),
            _expect(obj, "q", int, where),
        )
    raise SchemaError(f"{where}: unknown matroid kind '{kind}'")


def instance_to_json(inst: Instance) -> dict:
    return {
        "id": inst.id,
        "n": inst.n,
        "function": {"kind": "explicit", "values": list(inst.function.values)},
        "matroid": spec_to_json(inst.matroid_spec),
        "N": inst.cardinality,
        "seed": inst.seed,
    }


def instance_from_json(obj) -> Instance:
    if not isinstance(obj, dict):
        raise SchemaError("instance: expected a JSON object")
    inst_id = _expect(obj, "id", str, "instance")
    n = _expect(obj, "n", int, "instance")
    if not 1 <= n <= MAX_TABLE_N:
        raise SchemaError(f"instance: n must be in 1..{MAX_TABLE_N}, got {n}")
    fn = _expect(obj, "function", dict, "instance")
    if _expect(fn, "kind", str, "instance.function") != "explicit":
        raise SchemaError("instance.function: only kind 'explicit' is supported")
    values = _expect(fn, "values", list, "instance.function")
    if len(values) != 1 << n:
        raise SchemaError(
            f"instance.function: need {1 << n} values for n={n}, got {len(values)}"
        )
    for i, v in enumerate(values):
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise SchemaError(f"instance.function: values[{i}] is not a number")
    spec = spec_from_json(_expect(obj, "matroid", dict, "instance"), "instance.matroid")
    cardinality = _expect(obj, "N", int, "instance")
    if cardinality < 1:
        raise SchemaError(f"instance: N must be >= 1, got {cardinality}")
    seed = obj.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise SchemaError("instance: seed must be an int or null")
    try:
        matroid = build_matroid(spec, n)
    except InvalidSpecError as exc:
        raise SchemaError(f"instance.matroid: {exc}") from exc
    if matroid.truncate(cardinality).rank_full < cardinality:
        raise InfeasibleInstanceError(
            f"instance '{inst_id}': matroid rank {matroid.rank_full} is below N={cardinality}"
        )
    return Instance(inst_id, n, SetFunction(n, values), spec, cardinality, seed)


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(
        json.dumps(instance_to_json(inst), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )


def load_instance(path) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read instance file ({exc})") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_json(obj)
