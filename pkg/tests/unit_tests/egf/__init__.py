"""Lambda-EGF unit tests"""
