from .grothmat import *
from .readwrite import *
