from . import constants
from . import verify
from . import certify
from . import volume
from . import distance
from . import stats
