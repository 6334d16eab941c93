"""Top-level package for grothnorm."""

__version__ = '0.1.0'

from grothnorm import utils
from grothnorm.utils import *

from grothnorm import classes
from grothnorm.classes import *

from grothnorm import readwrite
from grothnorm.readwrite import *

from grothnorm import closedform
from grothnorm.closedform import *

from grothnorm import oracle
from grothnorm.oracle import *

from grothnorm import gramopt
from grothnorm.gramopt import *

from grothnorm import special
from grothnorm.special import *

from grothnorm import rounding
from grothnorm.rounding import *

from grothnorm import applications
from grothnorm.applications import *
