//! P1 finite element assembly and generalized eigensolver.
