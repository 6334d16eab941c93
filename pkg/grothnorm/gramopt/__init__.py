from .optimizer import *
from .norms import *
