# Test suite and shared dataset builders
