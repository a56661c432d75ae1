from . import formators
from . import payloads
from . import router
