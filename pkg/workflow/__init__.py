# Workflow package

