# Caching package
