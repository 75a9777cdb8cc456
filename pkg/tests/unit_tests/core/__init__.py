"""Core algebra unit tests"""
