"""Tests package for Field Quantization Lab"""
