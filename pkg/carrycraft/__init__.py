__version__ = "0.1.0"
__build__ = "18102026"
__author__ = "carrycraft developers"
__license__ = "GPL3"
