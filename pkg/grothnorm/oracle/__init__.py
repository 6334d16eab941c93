from .enumeration import *
from .box import *
from .ascent import *
