from .entanglement_types import TwoModeGaussian, GlobalOperatorPair, WitnessMode, AdvantageInstance, PPT_REFLECTION, reflect_second_momentum
