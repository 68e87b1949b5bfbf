from .ur_types import CGPair
