# Package init for tools utilities.
