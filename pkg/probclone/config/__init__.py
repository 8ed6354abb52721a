from .defaults import _C as cfg
from .defaults import get_cfg_defaults
