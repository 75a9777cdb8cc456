"""q-series unit tests"""
