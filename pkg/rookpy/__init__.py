from __future__ import  absolute_import
from . import triplet
from . import matrix
from . import families
from . import census
from . import diagram
__all__ = ["triplet", "matrix", "families", "census", "diagram"]
