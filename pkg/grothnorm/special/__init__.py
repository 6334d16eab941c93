from .phi import *
from .inverse import *
from .constants import *
from .moments import *
