"""CLI unit tests"""
