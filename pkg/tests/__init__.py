"""ksetlab test suite"""
