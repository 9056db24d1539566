//! Nodal set extraction and diagnostics.
