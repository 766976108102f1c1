"""Field Quantization Lab - Main Package"""

__version__ = "1.0.0"
__author__ = "Field Quantization Lab"
