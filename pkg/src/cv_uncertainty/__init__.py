# main package for cv-uncertainty: coarse-grained uncertainty relations for CV quantum states
