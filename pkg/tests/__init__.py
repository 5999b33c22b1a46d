# Test package init.
