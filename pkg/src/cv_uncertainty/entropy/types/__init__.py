from .entropy_types import RenyiOrder, ConjugatePair
