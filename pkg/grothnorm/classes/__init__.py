from .matrices import *
from .gramfactor import *
