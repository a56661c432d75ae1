from . import linalg
from . import geometry
from . import bounds
from . import volume
