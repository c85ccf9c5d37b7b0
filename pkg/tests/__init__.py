# Integration tests for the dp3 library and CLI
