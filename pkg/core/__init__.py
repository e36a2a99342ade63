"""
Shared infrastructure: exception hierarchy and logging setup.
"""
