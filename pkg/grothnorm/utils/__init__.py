from .exceptions import *
from .fields import *
from .rng import *
