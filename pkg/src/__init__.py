"""
numrad - numerical radius, numerical range and parallelism toolkit
"""
