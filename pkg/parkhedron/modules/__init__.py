"""
parkhedron Modules Package
Contains the command-line surface.
"""
