from .mub_types import MubStatus, MubVerdict
