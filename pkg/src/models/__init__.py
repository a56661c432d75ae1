from . import schemas
from . import state
