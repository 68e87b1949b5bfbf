from .types.entanglement_types import (
    TwoModeGaussian,
    GlobalOperatorPair,
    WitnessMode,
    AdvantageInstance,
    PPT_REFLECTION,
    reflect_second_momentum,
)
from .ppt import ppt_transform, two_mode_squeezed, random_separable_gaussian
from .witnesses import witness_variance, witness_entropy, search_entropy_advantage
