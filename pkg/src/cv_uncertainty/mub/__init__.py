from .types.mub_types import MubStatus, MubVerdict
from .condition import mub_condition, alternative_forms_check
from .probes import probe_centers, probe_grid, localized_probe_state, unbiasedness_test
