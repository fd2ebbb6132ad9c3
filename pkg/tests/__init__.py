"""
Test package for the Large Document Processing API
"""
