from .closedform import *
