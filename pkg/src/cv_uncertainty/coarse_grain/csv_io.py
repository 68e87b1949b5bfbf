# CSV (outcome, probability) serialization of discrete distributions
from pathlib import Path
import numpy as np

from cv_uncertainty.coarse_grain.types.cg_types import CGKind, DiscreteDistribution

def to_csv(dist: DiscreteDistribution, path: str | Path) -> None:
    """Writes a metadata comment line, a header and one (outcome, probability) row per bin."""
    lines = [
        f"# kind={dist.kind.value} width={dist.width!r} u_cen={dist.u_cen!r} coverage={dist.coverage!r}",
        "outcome,probability",
    ]
    lines += [f"{u!r},{p!r}" for u, p in zip(dist.outcomes, dist.probs)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

def from_csv(path: str | Path) -> DiscreteDistribution:
    text = Path(path).read_text(encoding="utf-8").splitlines()
    meta = dict(item.split("=", 1) for item in text[0].lstrip("# ").split())
    data = np.loadtxt(text[2:], delimiter=",", ndmin=2)
    return DiscreteDistribution.from_probs(
        CGKind(meta["kind"]),
        data[:, 1],
        data[:, 0],
        width=float(meta["width"]),
        u_cen=float(meta["u_cen"]),
    )
