from .sampling import *
from .identities import *
from .sharpness import *
