from .types.entropy_types import RenyiOrder, ConjugatePair
from .measures import gaussian_entropy, differential_entropy, discrete_entropy
from .identities import (
    decompose_Q_entropy,
    jensen_gap,
    renyi_jensen_gap,
    entropy_variance_bound,
)
