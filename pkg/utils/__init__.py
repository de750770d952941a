from .records import *
