from .log import logger_group
from .config import *
from .exceptions import *
from .diagram import *
from .floer import *
from .staircase import *
from .berge import *
