from .verify import *
from .maxcut import *
from .cutnorm import *
from .stretch import *
