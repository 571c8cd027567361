# This file was automatically generated by jinjaroot. Do not edit directly.
__version__ = "0.1.0"
