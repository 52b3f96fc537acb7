# Analytics package
